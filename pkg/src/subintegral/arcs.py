"""Arc-pair relative-closure tests.

A local arc sends each ambient variable to a univariate polynomial in t
with zero constant term.  Pulling a pair of modules (M, N) of r-tuples back
along r arcs (one per slot) reduces relative-closure membership

    pullback(h) in span(pullback(M)) + t * span(pullback(N))

to exact linear algebra over truncated power series.

For the distinguished pair attached to an ideal I - the diagonal module
{(g, g)} inside the slotwise sum {(g, 0), (0, g)} - the t * N block is the
full product z^(e+1) x z^(f+1), where e and f are the pullback orders of I
along the two arcs.  Working in series mod t^(e+1) times series mod t^(f+1)
therefore decides membership exactly; a failing arc pair is a certificate
that h is not weakly subintegral over I.  The sampling refuter can only
refute, never certify: a clean run over the whole budget is inconclusive.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, TruncationTooSmall, UnsupportedIdeal
from .ideals import MonomialIdeal
from .linalg import Echelon, Row
from .newton import rees_valuations
from .poly import SparsePoly
from .reductions import PolyIdeal


@dataclass(frozen=True)
class LocalArc:
    """One univariate polynomial per ambient variable, each with zero
    constant term (so the maximal ideal maps into (t))."""

    components: Tuple[SparsePoly, ...]

    def __post_init__(self):
        for c in self.components:
            if c.nvars != 1:
                raise ValueError("arc components are univariate polynomials")
            if c.coefficient((0,)) != 0:
                raise ValueError("arc components need zero constant term")

    @property
    def nvars(self) -> int:
        return len(self.components)

    @classmethod
    def zero(cls, nvars: int) -> "LocalArc":
        return cls(tuple(SparsePoly.zero(1) for _ in range(nvars)))

    @classmethod
    def monomial(cls, weights: Sequence[int], coeffs: Sequence) -> "LocalArc":
        """Arc with components coeff * t^weight (a zero coeff gives 0)."""
        comps = []
        for w, c in zip(weights, coeffs):
            if c == 0:
                comps.append(SparsePoly.zero(1))
            else:
                comps.append(SparsePoly(1, {(int(w),): Fraction(c)}))
        return cls(tuple(comps))

    def to_strings(self) -> List[str]:
        return [c.to_string(("t",)) for c in self.components]

    def __iter__(self):
        return iter(self.components)


@dataclass(frozen=True)
class ArcPair:
    first: LocalArc
    second: LocalArc

    def __post_init__(self):
        if self.first.nvars != self.second.nvars:
            raise DimensionMismatch("arcs live over different rings")

    def __iter__(self):
        return iter((self.first, self.second))

    def to_json(self) -> dict:
        return {"first": self.first.to_strings(), "second": self.second.to_strings()}


class TruncatedSeries:
    """Exact power-series arithmetic truncated at a fixed order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        vals = [Fraction(c) for c in coeffs[:order]]
        vals += [Fraction(0)] * (order - len(vals))
        self.coeffs = tuple(vals)
        self.order = order

    @classmethod
    def from_poly(cls, p: SparsePoly, order: int) -> "TruncatedSeries":
        if p.nvars != 1:
            raise ValueError("need a univariate polynomial")
        coeffs = [Fraction(0)] * order
        for (e,), c in p.items():
            if e < order:
                coeffs[e] = c
        return cls(coeffs, order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], order
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        out = [Fraction(0)] * order
        for i, a in enumerate(self.coeffs[:order]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: order - i]):
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out, order)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k."""
        return TruncatedSeries((Fraction(0),) * k + self.coeffs, self.order)

    def t_order(self) -> int | float:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return math.inf

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))


@dataclass(frozen=True)
class SubmodulePair:
    """Inner and outer generating tuples of rank-r submodules M inside N."""

    rank: int
    inner: Tuple[Tuple[SparsePoly, ...], ...]
    outer: Tuple[Tuple[SparsePoly, ...], ...]

    def __post_init__(self):
        for tup in self.inner + self.outer:
            if len(tup) != self.rank:
                raise ValueError("generator tuple has the wrong rank")


def pullback(f: SparsePoly, arc: LocalArc) -> SparsePoly:
    """Exact composition f(arc(t)) as a univariate polynomial."""
    if f.nvars != arc.nvars:
        raise DimensionMismatch("polynomial and arc variable counts differ")
    if f.is_zero:
        return SparsePoly.zero(1)
    return f.compose(list(arc.components))


def pullback_order(f: SparsePoly, arc: LocalArc) -> int | float:
    """t-order of the pullback; math.inf when the pullback vanishes."""
    composed = pullback(f, arc)
    return math.inf if composed.is_zero else composed.min_degree()


def delta_pair_of_ideal(I: MonomialIdeal | PolyIdeal) -> SubmodulePair:
    """The diagonal module {(g, g)} inside the slotwise sum {(g,0), (0,g)}."""
    if isinstance(I, MonomialIdeal):
        gens = I.generator_polys()
        nvars = I.nvars
    else:
        gens = list(I.gens)
        nvars = I.nvars
    zero = SparsePoly.zero(nvars)
    inner = tuple((g, g) for g in gens)
    outer = tuple((g, zero) for g in gens) + tuple((zero, g) for g in gens)
    return SubmodulePair(rank=2, inner=inner, outer=outer)


# -- the general truncated test ---------------------------------------------------


def relative_membership(
    h_tuple: Sequence[SparsePoly],
    pair: SubmodulePair,
    arcs: ArcPair | Sequence[LocalArc],
    trunc: int | None = None,
) -> bool:
    """Decide pulled-back membership in M + t*N over truncated series.

    Slot s of every tuple is pulled back along arc s.  With trunc=None a
    truncation strictly above every pullback degree is chosen.  An explicit
    trunc must exceed the pullback order of every outer generator tuple
    (guard checked).  A False verdict is sound at any truncation; for the
    ideal pair from delta_pair_of_ideal a True verdict at the default
    truncation is exact as well.
    """
    arc_list = list(arcs)
    if len(arc_list) != pair.rank or len(h_tuple) != pair.rank:
        raise DimensionMismatch("rank, arcs, and target tuple must all agree")

    def pull(tup: Sequence[SparsePoly]) -> Tuple[SparsePoly, ...]:
        return tuple(pullback(tup[s], arc_list[s]) for s in range(pair.rank))

    pulled_inner = [pull(t) for t in pair.inner]
    pulled_outer = [pull(t) for t in pair.outer]
    target = pull(h_tuple)

    if trunc is None:
        degree = 1
        for tup in pulled_inner + pulled_outer + [target]:
            for p in tup:
                degree = max(degree, p.total_degree() + 1)
        trunc = degree + 1
    else:
        for tup in pulled_outer:
            order = min(
                (p.min_degree() for p in tup if not p.is_zero), default=math.inf
            )
            if order is not math.inf and trunc <= order:
                raise TruncationTooSmall(
                    f"truncation {trunc} does not exceed outer generator order {order}"
                )

    def rows_of(tup: Tuple[SparsePoly, ...], shifts: range) -> Iterable[Row]:
        series = [TruncatedSeries.from_poly(p, trunc) for p in tup]
        for k in shifts:
            row: Row = {}
            for s, ser in enumerate(series):
                for d, c in enumerate(ser.shift(k).coeffs):
                    if c != 0:
                        row[(s, d)] = c
            if row:
                yield row

    ech = Echelon()
    for tup in pulled_inner:
        for row in rows_of(tup, range(trunc)):
            ech.add_row(row)
    for tup in pulled_outer:
        for row in rows_of(tup, range(1, trunc + 1)):
            ech.add_row(row)

    target_row: Row = {}
    for s, p in enumerate(target):
        for d, c in enumerate(TruncatedSeries.from_poly(p, trunc).coeffs):
            if c != 0:
                target_row[(s, d)] = c
    return ech.contains(target_row)


# -- exact fast path for the ideal pair -------------------------------------------


@lru_cache(maxsize=65536)
def _ideal_arc_module(
    I: MonomialIdeal, arcs: ArcPair
) -> Tuple[Tuple[int | float, int | float], Optional[Echelon]]:
    """Pullback orders (e, f) of I along the two arcs and, when both are
    finite, the echelon of the diagonal module image in the exact quotient
    (series mod t^(e+1)) x (series mod t^(f+1))."""
    gamma = [pullback(g, arcs.first) for g in I.generator_polys()]
    delta = [pullback(g, arcs.second) for g in I.generator_polys()]
    e = min((p.min_degree() for p in gamma if not p.is_zero), default=math.inf)
    f = min((p.min_degree() for p in delta if not p.is_zero), default=math.inf)
    if e is math.inf or f is math.inf:
        return (e, f), None
    ech = Echelon()
    for gp, dp in zip(gamma, delta):
        s1 = TruncatedSeries.from_poly(gp, e + 1)
        s2 = TruncatedSeries.from_poly(dp, f + 1)
        for k in range(max(e, f) + 1):
            row: Row = {}
            for d, c in enumerate(s1.shift(k).coeffs):
                if c != 0:
                    row[(0, d)] = c
            for d, c in enumerate(s2.shift(k).coeffs):
                if c != 0:
                    row[(1, d)] = c
            if row:
                ech.add_row(row)
    return (e, f), ech


def ideal_pair_membership(h: SparsePoly, I: MonomialIdeal, arcs: ArcPair) -> bool:
    """Exact relative-closure membership of (h, h) for the pair of I along
    one arc pair.  Equivalent to relative_membership on the ideal pair, but
    decided in the minimal exact quotient and cached per (I, arc pair)."""
    (e, f), ech = _ideal_arc_module(I, arcs)
    v1 = pullback(h, arcs.first)
    v2 = pullback(h, arcs.second)
    if ech is None:
        # A dead slot leaves no room at all: the target must vanish there,
        # and the live slot reduces to the valuative ideal-membership test.
        ok1 = v1.is_zero if e is math.inf else (
            v1.is_zero or v1.min_degree() >= e
        )
        ok2 = v2.is_zero if f is math.inf else (
            v2.is_zero or v2.min_degree() >= f
        )
        return ok1 and ok2
    target: Row = {}
    for d, c in enumerate(TruncatedSeries.from_poly(v1, e + 1).coeffs):
        if c != 0:
            target[(0, d)] = c
    for d, c in enumerate(TruncatedSeries.from_poly(v2, f + 1).coeffs):
        if c != 0:
            target[(1, d)] = c
    return ech.contains(target)


# -- deterministic arc-pair sampling ----------------------------------------------


@dataclass(frozen=True)
class ArcSampler:
    seed: int = 0
    count: int = 200
    weight_bound: int = 3
    coeff_set: Tuple[int, ...] = (1, -1, 2, -2, 3)


def _t_arc(nvars: int) -> LocalArc:
    return LocalArc.monomial([1] * nvars, [1] * nvars)


def prefix_arc_pairs(nvars: int) -> List[ArcPair]:
    """Hand-picked pairs that open every sampling stream: degenerate pairs
    first, then the all-t arc against its single-sign flips."""
    ones = _t_arc(nvars)
    pairs = [
        ArcPair(ones, LocalArc.zero(nvars)),
        ArcPair(LocalArc.zero(nvars), ones),
    ]
    for i in range(nvars):
        weights = [1] * nvars
        coeffs = [0] * nvars
        coeffs[i] = 1
        axis = LocalArc.monomial(weights, coeffs)
        pairs.append(ArcPair(axis, axis))
    pairs.append(ArcPair(ones, ones))
    for i in range(nvars - 1, -1, -1):
        coeffs = [1] * nvars
        coeffs[i] = -1
        pairs.append(ArcPair(ones, LocalArc.monomial([1] * nvars, coeffs)))
    return pairs


def arc_pair_stream(nvars: int, sampler: ArcSampler) -> Iterable[ArcPair]:
    """Deterministic stream of `sampler.count` arc pairs: the fixed prefix,
    then monomial and two-term arcs driven by the seeded generator."""
    emitted = 0
    for pair in prefix_arc_pairs(nvars):
        if emitted >= sampler.count:
            return
        emitted += 1
        yield pair
    rng = random.Random(sampler.seed)

    def random_arc() -> LocalArc:
        comps = []
        for _ in range(nvars):
            shape = rng.randrange(6)
            if shape == 0 and nvars > 1:
                comps.append(SparsePoly.zero(1))
            elif shape == 5:
                w1 = rng.randint(1, sampler.weight_bound)
                w2 = rng.randint(w1 + 1, sampler.weight_bound + 2)
                c1 = rng.choice(sampler.coeff_set)
                c2 = rng.choice(sampler.coeff_set)
                comps.append(
                    SparsePoly(1, {(w1,): Fraction(c1), (w2,): Fraction(c2)})
                )
            else:
                w = rng.randint(1, sampler.weight_bound)
                c = rng.choice(sampler.coeff_set)
                comps.append(SparsePoly(1, {(w,): Fraction(c)}))
        return LocalArc(tuple(comps))

    while emitted < sampler.count:
        first = random_arc()
        style = rng.randrange(4)
        if style == 0:
            second = LocalArc.zero(nvars)
        elif style == 1:
            second = first
        else:
            second = random_arc()
        emitted += 1
        yield ArcPair(first, second)


@dataclass(frozen=True)
class Refutation:
    """A failing arc pair: a certificate of non-membership in the weak
    subintegral closure."""

    pair: ArcPair
    index: int


def refute_star_membership(
    h: SparsePoly, I: MonomialIdeal, sampler: ArcSampler | None = None
) -> Optional[Refutation]:
    """Search the deterministic arc-pair stream for a membership failure of
    (h, h) against the pair of I.  Returns the first refuting pair, or None
    (inconclusive)."""
    if I.is_zero or not I.finite_colength:
        raise UnsupportedIdeal("refutation needs a finite-colength ideal")
    for index, arcs in enumerate(arc_pair_stream(I.nvars, sampler or ArcSampler())):
        if not ideal_pair_membership(h, I, arcs):
            return Refutation(pair=arcs, index=index)
    return None


def sigma1_check(h: SparsePoly, J: MonomialIdeal) -> bool:
    """First valuative condition for the ideal-pair relative closure:
    v(h) >= v(J) for every Rees valuation of J."""
    vals = rees_valuations(J)
    return all(v.value(h) >= v.value_on_ideal for v in vals)


@dataclass(frozen=True)
class ProbeOutcome:
    index: int
    refutation: Optional[Refutation]

    @property
    def passes(self) -> bool:
        return self.refutation is None


def basic_facts_check(
    pair: SubmodulePair,
    probes: Sequence[Sequence[SparsePoly]],
    arc_pairs: Sequence[ArcPair] | None = None,
) -> List[ProbeOutcome]:
    """Run each probe tuple through a battery of arc pairs and record the
    first refuting pair, if any."""
    if arc_pairs is None:
        nvars = next(
            (p.nvars for tup in pair.inner + pair.outer for p in tup),
            probes[0][0].nvars if probes else 1,
        )
        battery = list(arc_pair_stream(nvars, ArcSampler(seed=0, count=40)))
    else:
        battery = list(arc_pairs)
    outcomes: List[ProbeOutcome] = []
    for idx, probe in enumerate(probes):
        refutation = None
        for j, arcs in enumerate(battery):
            if not relative_membership(tuple(probe), pair, arcs, trunc=None):
                refutation = Refutation(pair=arcs, index=j)
                break
        outcomes.append(ProbeOutcome(index=idx, refutation=refutation))
    return outcomes
