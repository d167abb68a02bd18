"""Asymptotic Samuel function, integral closure, and the strict-valuation
ideal of a monomial ideal.

For a finite-colength monomial ideal the asymptotic Samuel function is
computed from the Rees valuations as vbar(f) = min_j v_j(f) / v_j(I), the
integral closure collects the monomials whose exponents lie in the Newton
polyhedron, and i_greater collects those strictly above every bounded
facet.  Polynomial tests are termwise, since a monomial valuation of a
polynomial is the minimum over its terms.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import List

from .errors import DimensionMismatch, UnsupportedIdeal
from .ideals import MonomialIdeal
from .newton import ReesValuation, rees_valuations
from .poly import SparsePoly


def _require_finite_colength(ideal: MonomialIdeal) -> List[ReesValuation]:
    if ideal.is_zero or ideal.is_unit or not ideal.finite_colength:
        raise UnsupportedIdeal("operation needs a proper finite-colength ideal")
    return rees_valuations(ideal)


def vbar(f: SparsePoly, ideal: MonomialIdeal) -> Fraction | float:
    """Asymptotic Samuel value min_j v_j(f)/v_j(I); math.inf for f = 0."""
    vals = _require_finite_colength(ideal)
    if f.nvars != ideal.nvars:
        raise DimensionMismatch("polynomial and ideal variable counts differ")
    if f.is_zero:
        return math.inf
    return min(Fraction(v.value(f), v.value_on_ideal) for v in vals)


def _scan_box(ideal: MonomialIdeal, slack: int, keep) -> MonomialIdeal:
    bounds = [int(k) + slack for k in ideal.axis_degrees()]
    hits = [e for e in product(*(range(b + 1) for b in bounds)) if keep(e)]
    return MonomialIdeal(ideal.nvars, hits)


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Monomials whose exponents lie in the Newton polyhedron.

    Every minimal generator of the closure divides a pure-power generator
    times the rest of the box, so scanning the axis-degree box suffices.
    """
    vals = _require_finite_colength(ideal)

    def member(e) -> bool:
        return all(v.value_of_exponent(e) >= v.value_on_ideal for v in vals)

    return _scan_box(ideal, 0, member)


def i_greater(ideal: MonomialIdeal) -> MonomialIdeal:
    """Monomials strictly above every bounded facet: v_j > v_j(I) for all j."""
    vals = _require_finite_colength(ideal)

    def member(e) -> bool:
        return all(v.value_of_exponent(e) > v.value_on_ideal for v in vals)

    return _scan_box(ideal, 1, member)


def in_integral_closure(f: SparsePoly, ideal: MonomialIdeal) -> bool:
    """True iff every term of f passes every Rees-valuation bound."""
    vals = _require_finite_colength(ideal)
    if f.nvars != ideal.nvars:
        raise DimensionMismatch("polynomial and ideal variable counts differ")
    return all(
        v.value_of_exponent(e) >= v.value_on_ideal for e, _ in f.items() for v in vals
    )


def in_i_greater(f: SparsePoly, ideal: MonomialIdeal) -> bool:
    vals = _require_finite_colength(ideal)
    if f.nvars != ideal.nvars:
        raise DimensionMismatch("polynomial and ideal variable counts differ")
    return all(
        v.value_of_exponent(e) > v.value_on_ideal for e, _ in f.items() for v in vals
    )
