from .monomial import FractionalMonomialIdeal, MonomialIdeal
from .valuation import ComponentKind, CutIdeal, CutKind, GroupElement, PrimeSpec, ValueGroup
