"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from zbeta.algebra import LaurentPoly, RationalFn, strand, symbol

VARS = [strand(1), strand(2), strand(3), symbol("a")]

monomials = st.lists(
    st.tuples(st.sampled_from(VARS), st.integers(-3, 3)), max_size=3
).map(lambda pairs: tuple(sorted({v: e for v, e in pairs}.items())))

polys = st.dictionaries(monomials, st.integers(-6, 6), max_size=5).map(LaurentPoly)

nonzero_polys = polys.filter(lambda p: not p.is_zero())

rationals = st.builds(RationalFn, polys, nonzero_polys)
