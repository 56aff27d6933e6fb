from zbeta.algebra import RationalFn, strand
from zbeta.beta import r_element
from zbeta.reidemeister import (
    kink_facts,
    opposite_kinks,
    r2_variants,
    r3_cyclic_controls,
    r3_worked_instance,
    r3_literal_labels,
    r3_variants,
    reidemeister_report,
)

T1, T2, T3 = (RationalFn.var(strand(i)) for i in (1, 2, 3))


def test_r2_all_variants():
    checks = r2_variants()
    assert len(checks) == 4
    for c in checks:
        assert c.passed, c.name
        assert c.lhs.omega == 1 and c.lhs.is_zero_matrix()


def test_r3_every_height_order_and_orientation():
    checks = r3_variants()
    assert len(checks) == 48
    assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]
    # every one of the eight sign patterns turns up
    patterns = {c.detail for c in checks}
    assert len(patterns) == 8


def test_r3_cyclic_controls_differ():
    assert not any(c.passed for c in r3_cyclic_controls())


def test_r3_worked_instance():
    check = r3_worked_instance()
    assert check.passed
    values = [v for v in check.rhs.entries.values() if not v.is_zero()]
    expected = [T2 ** -1 - 1, T2 ** -1 * (T3 - 1), T3 ** -1 - 1]
    assert len(values) == 3
    assert all(any(v == e for v in values) for e in expected)
    assert check.rhs.omega == 1


def test_r3_literal_labels_differ():
    assert not r3_literal_labels().passed


def test_kink_values():
    # implementation-derived regression values, not a statement of invariance
    facts = {f.name: f.element for f in kink_facts()}
    pos = facts["R1 + kink, over first"]
    assert pos.omega == T1 and pos[(1, 1)] == T1 - 1
    assert facts["R1 + kink, under first"].omega == 1
    neg = facts["R1 - kink, over first"]
    assert neg.omega == T1 ** -1 and neg[(1, 1)] == T1 ** -1 - 1
    assert facts["R1 - kink, under first"][(1, 1)] == T1 ** -1 - 1


def test_opposite_kinks_cancel():
    e = opposite_kinks()
    assert e.is_zero_matrix()
    assert e.omega == 1


def test_under_first_kink_entry_uses_surviving_label():
    e = r_element(1, 2, 1).gm(1, 2, 1)
    assert e.tails == (1,) and e[(1, 1)] == T1 - 1


def test_report():
    lines, ok = reidemeister_report()
    assert ok
    assert any(line.startswith("INFO R1") for line in lines)
    assert not any("FAIL" in line for line in lines)
