from fractions import Fraction

from hypothesis import strategies as st

from rrclosure.models.monomial import FractionalMonomialIdeal, MonomialIdeal
from rrclosure.models.valuation import CutIdeal, CutKind, GroupElement, ValueGroup, canonicalize

GROUPS = [
    ValueGroup.lex("Z"),
    ValueGroup.lex("Q"),
    ValueGroup.lex("Z", "Z"),
    ValueGroup.lex("Z", "Q"),
    ValueGroup.lex("Q", "Z"),
]


def _distinct(low, high, size):
    return st.lists(st.integers(low, high), min_size=size, max_size=size, unique=True).map(sorted)


@st.composite
def monomial_ideals(draw, max_gens=4, max_exp=6):
    """Two-variable ideals drawn as staircases, so every generator is minimal."""
    count = draw(st.integers(1, min(max_gens, max_exp + 1)))
    xs = draw(_distinct(0, max_exp, count))
    ys = draw(_distinct(0, max_exp, count))
    return MonomialIdeal.of(list(zip(xs, reversed(ys))), 2)


@st.composite
def m_primary_ideals(draw, max_gens=4, max_exp=6):
    count = draw(st.integers(2, min(max_gens, max_exp + 1)))
    xs = [0] + draw(_distinct(1, max_exp, count - 1))
    ys = [0] + draw(_distinct(1, max_exp, count - 1))
    return MonomialIdeal.of(list(zip(xs, reversed(ys))), 2)


def fractional_ideals(max_gens=3, span=3):
    laurent = st.tuples(st.integers(-span, span), st.integers(-span, span))
    return st.lists(laurent, min_size=1, max_size=max_gens).map(
        lambda gens: FractionalMonomialIdeal.from_laurent(gens, 2)
    )


def groups():
    return st.sampled_from(GROUPS)


def rationals():
    return st.builds(Fraction, st.integers(-6, 6), st.sampled_from([1, 2, 4]))


@st.composite
def elements(draw, group):
    entries = []
    for position in range(1, group.rank + 1):
        if group.is_dense(position):
            entries.append(draw(rationals()))
        else:
            entries.append(Fraction(draw(st.integers(-6, 6))))
    return GroupElement.of(group, entries)


@st.composite
def cuts(draw, group, integral=False):
    kind = draw(st.sampled_from([CutKind.GE, CutKind.GT]))
    m = draw(st.integers(1, group.rank))
    rho = tuple(draw(rationals()) for _ in range(m))
    return canonicalize(CutIdeal(kind, m, rho, group), integral=integral)


@st.composite
def group_and_cut(draw, integral=False):
    group = draw(groups())
    return group, draw(cuts(group, integral))
