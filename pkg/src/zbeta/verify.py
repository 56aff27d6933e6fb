"""The three verification suites behind ``zbeta verify``.

Each returns a :class:`SuiteResult`: text lines, a pass flag and a JSON
mirror.  Informational lines start with ``INFO`` and never affect the flag.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from zbeta.algebra import render_expr
from zbeta.metamonoid import (
    DEFAULT_SEED,
    IntMatrixElement,
    IntMatrixInstance,
    axiom_suite,
    beta_symbolic_suite,
    deletion_union_fails,
    gm_deletion_report,
    split_by_deletion,
)
from zbeta.oracle import compare_up_to_units, wirtinger_alexander
from zbeta.reidemeister import reidemeister_report
from zbeta.tangle import crossing_number, parse_pd, read_table, z_beta

__all__ = ["SuiteResult", "TableRow", "axioms_suite", "reidemeister_suite", "table_suite", "table_rows"]


@dataclass
class SuiteResult:
    name: str
    lines: list[str] = field(default_factory=list)
    passed: bool = True
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "lines": self.lines, **self.data}


def axioms_suite(trials: int = 1000, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Symbolic beta-calculus axioms plus randomized integer-matrix axioms."""
    beta = beta_symbolic_suite()
    ints = axiom_suite(IntMatrixInstance(), trials=trials, seed=seed)
    result = SuiteResult("axioms")
    result.lines = beta.lines() + ints.lines()

    p = IntMatrixElement.from_rows((1, 2), [[1, 2], [3, 4]])
    fails = deletion_union_fails(p, 1, 2)
    result.lines.append(
        f"AXIOM int-matrix: deletions do not rebuild P {'PASS' if fails else 'FAIL'}"
        f" [P = {p}; d_2 P u d_1 P = {split_by_deletion(p, 1, 2)}]"
    )
    for r in gm_deletion_report().results:
        result.lines.append(f"INFO beta-gm: {r.name} {'holds' if r.passed else 'does not hold'} on generic arrays")
    result.passed = beta.passed and ints.passed and fails
    result.data = {"beta": beta.to_json(), "int_matrix": ints.to_json()}
    return result


def reidemeister_suite() -> SuiteResult:
    lines, ok = reidemeister_report()
    return SuiteResult("reidemeister", lines, ok)


@dataclass
class TableRow:
    name: str
    crossings: int
    status: str  # PASS, FAIL or SKIP
    corner: str
    oracle: str
    seconds: float


def table_rows(table: dict[str, str] | None = None, max_crossings: int | None = None) -> list[TableRow]:
    """Corner of Z^beta against the Alexander oracle for every knot in the table."""
    table = read_table() if table is None else table
    rows = []
    for name, text in table.items():
        pd = parse_pd(text)
        n = crossing_number(name)
        n = pd.n_crossings if n is None else n
        if max_crossings is not None and n > max_crossings:
            continue
        start = time.perf_counter()
        omega = z_beta(pd).omega
        if pd.n_components != 1:
            rows.append(TableRow(name, n, "SKIP", render_expr(omega), "", time.perf_counter() - start))
            continue
        delta = wirtinger_alexander(pd)
        ok = compare_up_to_units(omega, delta)
        rows.append(
            TableRow(name, n, "PASS" if ok else "FAIL", render_expr(omega), render_expr(delta), time.perf_counter() - start)
        )
    return rows


def table_suite(table=None, max_crossings: int | None = None, timings: bool = False) -> SuiteResult:
    rows = table_rows(table, max_crossings)
    result = SuiteResult("table")
    for r in rows:
        if r.status == "SKIP":
            line = f"INFO {r.name}: link, corner {r.corner} (no single-variable oracle)"
        else:
            line = f"TABLE {r.name} {r.status}: corner {r.corner}; oracle {r.oracle}"
        if timings:
            line += f" [{r.seconds:.3f} s]"
        result.lines.append(line)
    result.passed = all(r.status != "FAIL" for r in rows)
    result.data = {
        "knots": [
            {"name": r.name, "crossings": r.crossings, "status": r.status, "corner": r.corner, "oracle": r.oracle}
            | ({"seconds": round(r.seconds, 4)} if timings else {})
            for r in rows
        ]
    }
    return result
