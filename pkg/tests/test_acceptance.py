"""Acceptance checks, one test per criterion.

Each test prints a single line ``ACCEPTANCE <n> <name>: PASS|FAIL (<seconds> s)``;
run with ``pytest tests/test_acceptance.py -s`` to see them.
"""

import contextlib
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from zbeta.algebra import RationalFn, parse_expr, strand
from zbeta.beta import BetaElement, beta_eq, generic_element
from zbeta.metamonoid import (
    DEFAULT_SEED,
    IntMatrixElement,
    IntMatrixInstance,
    axiom_suite,
    beta_symbolic_suite,
    deletion_union_fails,
)
from zbeta.oracle import coefficients
from zbeta.reidemeister import kink_facts, opposite_kinks, r2_variants, r3_worked_instance, r3_variants
from zbeta.tangle import crossing_number, parse_pd, read_table, stitch_plan, z_beta
from zbeta.verify import table_rows

TESTS = Path(__file__).parent
TABLE = read_table()
ONE = RationalFn(1)


@contextlib.contextmanager
def criterion(label: str, limit: float | None = None):
    """Print the pass/fail line for one criterion; ``limit`` is a runtime bound in seconds."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        if ok and limit is not None and elapsed >= limit:
            ok = False
        bound = f" < {limit:g} s" if limit is not None else ""
        print(f"\nACCEPTANCE {label}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f} s{bound})")
    assert limit is None or elapsed < limit


def test_1_817_exact_value():
    with criterion("1 8_17 exact value", 5):
        e = z_beta(parse_pd(TABLE["8_17"]))
        assert e.omega == parse_expr("-T1^-3 + 4*T1^-2 - 8*T1^-1 + 11 - 8*T1 + 4*T1^2 - T1^3")
        assert e.is_zero_matrix()


def test_2_r3_invariance():
    with criterion("2 R3 invariance", 1):
        assert r3_worked_instance().passed
        checks = r3_variants()
        assert len(checks) == 48
        assert all(c.passed for c in checks)


def test_3_r2_cancellation():
    with criterion("3 R2 cancellation"):
        checks = r2_variants()
        assert {c.name.split()[-1] for c in checks} == {"parallel", "antiparallel"}
        for c in checks:
            assert c.passed
            assert c.lhs.omega == ONE and c.lhs.is_zero_matrix()


def _tm_associative(e: BetaElement) -> bool:
    return beta_eq(e.tm(1, 2, 1).tm(1, 3, 1), e.tm(2, 3, 2).tm(1, 2, 1))


def _hm_associative(e: BetaElement) -> bool:
    return beta_eq(e.hm(1, 2, 1).hm(1, 3, 1), e.hm(2, 3, 2).hm(1, 2, 1))


def test_4_symbolic_axioms():
    with criterion("4 symbolic axiom suite", 10):
        assert _tm_associative(generic_element([1, 2, 3, 4], [7, 8]))
        assert _hm_associative(generic_element([7, 8], [1, 2, 3, 4]))
        report = beta_symbolic_suite()
        for name in (
            "tm then sw (swap tail 2 first)",
            "tm then sw (swap tail 1 first)",
            "hm then sw",
            "tail unit absorbs sw",
            "head unit absorbs sw",
        ):
            assert report.by_name(name).passed, name
        assert report.passed


def test_5_table_oracle_agreement():
    with criterion("5 knot table agrees with the Alexander oracle", 60):
        rows = [r for r in table_rows(TABLE, max_crossings=8) if crossing_number(r.name) is not None]
        assert len(rows) == 35
        for r in rows:
            assert r.status == "PASS", r.name
            assert coefficients(parse_expr(r.corner).num) == coefficients(parse_expr(r.oracle).num)


def test_6_integer_matrix_instance():
    with criterion("6 integer-matrix instance"):
        report = axiom_suite(IntMatrixInstance(), trials=1000, seed=DEFAULT_SEED)
        assert report.passed
        p = IntMatrixElement.from_rows((1, 2), [[1, 2], [3, 4]])
        assert deletion_union_fails(p, 1, 2)


PROPERTY_TESTS = [
    "test_algebra.py",
    "test_beta.py::test_variables_stay_in_bijection",
    "test_tangle.py::test_basepoint_independence",
    "test_oracle.py::test_minor_independence",
    "test_oracle.py::test_symmetry_mirror_and_determinant",
]


def test_7_property_suites():
    with criterion("7 property suites (fixed seed)"):
        cmd = [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", f"--hypothesis-seed={DEFAULT_SEED}"]
        cmd += [str(TESTS / t) for t in PROPERTY_TESTS]
        proc = subprocess.run(cmd, capture_output=True, text=True, cwd=TESTS.parent)
        assert proc.returncode == 0, proc.stdout[-2000:]


def test_8_kink_facts():
    # regression values computed by this implementation, not quoted results
    with criterion("8 kink facts (implementation-derived)"):
        t1 = RationalFn.var(strand(1))
        expected = {
            "R1 + kink, over first": (t1, t1 - 1),
            "R1 + kink, under first": (ONE, t1 - 1),
            "R1 - kink, over first": (1 / t1, 1 / t1 - 1),
            "R1 - kink, under first": (ONE, 1 / t1 - 1),
        }
        facts = {f.name: f.element for f in kink_facts()}
        assert set(facts) == set(expected)
        for name, (omega, entry) in expected.items():
            e = facts[name]
            assert e.omega == omega and e[(1, 1)] == entry, name
        both = opposite_kinks()
        assert both.omega == ONE and both.is_zero_matrix()


def test_links_compute_with_bijection():
    with criterion("links: Borromean rings compute, 3 tails/heads, variable bijection"):
        pd = parse_pd(TABLE["borromean"])
        rng = random.Random(DEFAULT_SEED)
        for bps in [None] + [[rng.choice(c) for c in pd.components] for _ in range(3)]:
            e = z_beta(pd, stitch_plan(pd, bps))
            assert len(e.tails) == len(e.heads) == 3
            assert e.strand_variables() <= {strand(t) for t in e.tails}


def _unit_ratio(f, g) -> bool:
    r = f / g
    return r.is_polynomial() and r.num.is_monomial() and abs(dict(r.num.items()).popitem()[1]) == 1


@pytest.mark.xfail(strict=True, reason="omega of a string link depends on where each component is cut")
def test_links_omega_basepoint_stable():
    with criterion("links: omega basepoint-stable up to units"):
        pd = parse_pd(TABLE["borromean"])
        ref = z_beta(pd).omega
        for bps in [[a, b, c] for a in pd.components[0] for b in pd.components[1] for c in pd.components[2]]:
            omega = z_beta(pd, stitch_plan(pd, bps)).omega
            back = {strand(x): strand(comp[0]) for x, comp in zip(bps, pd.components)}
            assert _unit_ratio(omega.substitute(back), ref), bps
