import json
import random

import pytest

from zbeta.algebra import parse_expr
from zbeta.metamonoid import (
    GM_DELETION_AXIOMS,
    BetaCalculus,
    BetaGmInstance,
    BetaHeadInstance,
    BetaTailInstance,
    BrokenTailBeta,
    IntMatrixElement,
    IntMatrixInstance,
    axiom_suite,
    beta_symbolic_suite,
    deletion_union_fails,
    gm_deletion_report,
    mat_m,
    mat_union,
    monoid_axioms,
    split_by_deletion,
    swap_axioms,
)
from zbeta.errors import LabelError

M = IntMatrixElement.from_rows


def test_mat_m_matches_block_formula():
    a, b, c, d, e, f, g, h, i = range(1, 10)
    x, y, w, z = 1, 2, 7, 3
    p = M((x, y, w), [[a, b, c], [d, e, f], [g, h, i]])
    assert mat_m(p, x, y, z) == M((z, w), [[a + b + d + e, c + f], [g + h, i]])


def test_mat_m_zero_and_errors():
    assert mat_m(IntMatrixElement.zero((1, 2)), 1, 2, 3) == IntMatrixElement.zero((3,))
    p = M((1, 2, 3), [[0] * 3] * 3)
    with pytest.raises(LabelError):
        mat_m(p, 1, 1, 4)
    with pytest.raises(LabelError):
        mat_m(p, 1, 2, 3)
    with pytest.raises(LabelError):
        mat_m(p, 1, 9, 4)


def test_union_is_block_diagonal():
    assert mat_union(M((1,), [[5]]), M((2,), [[7]])) == M((1, 2), [[5, 0], [0, 7]])
    assert mat_union(M((1,), [[5]]), IntMatrixElement.zero(())) == M((1,), [[5]])
    with pytest.raises(LabelError):
        mat_union(M((1,), [[5]]), M((1,), [[5]]))


def test_left_identity_instance():
    inst = IntMatrixInstance()
    p = M((2, 7), [[1, 2], [3, 4]])
    assert inst.m(inst.e(p, 1), 1, 2, 3) == inst.rho(p, 2, 3)


def test_equality_ignores_label_order():
    assert M((1, 2), [[1, 2], [3, 4]]) == M((2, 1), [[4, 3], [2, 1]])


def test_deletions_do_not_rebuild_p():
    p = M((1, 2), [[1, 2], [3, 4]])
    assert split_by_deletion(p, 1, 2) == M((1, 2), [[1, 0], [0, 4]])
    assert deletion_union_fails(p, 1, 2)
    assert not deletion_union_fails(M((1, 2), [[1, 0], [0, 4]]), 1, 2)


def test_int_matrix_axioms_random():
    report = axiom_suite(IntMatrixInstance(), trials=1000, seed=7)
    assert report.passed, str(report)
    assert {r.name for r in report.results} == {a.name for a in monoid_axioms()}
    assert all(r.trials == 1000 for r in report.results)


def test_beta_symbolic_suite_passes():
    report = beta_symbolic_suite()
    assert report.passed, str(report)
    names = {(r.instance, r.name) for r in report.results}
    assert ("beta", "tm then sw (swap tail 2 first)") in names
    assert ("beta-tails", "associativity") in names
    assert ("beta-heads", "associativity") in names
    assert ("beta-gm", "associativity") in names


def test_gm_deletion_axioms_fail_on_generic_arrays():
    # the swap reads the whole column, so deleting a strand first changes the result
    report = gm_deletion_report()
    assert {r.name for r in report.results} == set(GM_DELETION_AXIOMS)
    assert not any(r.passed for r in report.results)
    assert all(r.counterexample for r in report.results)


@pytest.mark.parametrize("instance", [BetaTailInstance(), BetaHeadInstance()])
def test_beta_sides_random(instance):
    assert axiom_suite(instance, trials=15, seed=3).passed


def test_beta_gm_random():
    axioms = [a for a in monoid_axioms() if a.name not in GM_DELETION_AXIOMS]
    assert axiom_suite(BetaGmInstance(), trials=5, seed=3, axioms=axioms).passed


def test_beta_swap_relations_random():
    report = axiom_suite(BetaCalculus(), trials=15, seed=11)
    assert report.passed, str(report)
    assert len(report.results) == len(swap_axioms())


def test_broken_instance():
    tails = axiom_suite(BetaTailInstance(BrokenTailBeta()), trials=10, seed=1)
    assert tails.by_name("associativity").passed
    swaps = axiom_suite(BrokenTailBeta(), trials=10, seed=1)
    bad = swaps.by_name("tm then sw (swap tail 2 first)")
    assert not bad.passed
    assert bad.counterexample and "lhs" in bad.counterexample


def test_report_lines_and_json():
    report = axiom_suite(IntMatrixInstance(), trials=3)
    line = report.lines()[0]
    assert line.startswith("AXIOM int-matrix: ") and line.endswith("PASS")
    data = json.loads(json.dumps(report.to_json()))
    assert data["passed"] is True
    assert data["axioms"][0]["status"] == "PASS"


def test_failure_is_reported_not_raised():
    class Bad(IntMatrixInstance):
        name = "bad"

        def rho(self, p, x, y):
            raise LabelError("nope")

    report = axiom_suite(Bad(), trials=2)
    fail = report.by_name("rename twice")
    assert not fail.passed and "LabelError" in fail.counterexample
    assert "FAIL [counterexample:" in fail.line()


def test_seed_reproducible():
    gen = IntMatrixInstance().random
    a = gen((1, 2), random.Random(5))
    b = gen((1, 2), random.Random(5))
    assert a == b
    assert parse_expr("1") == 1
