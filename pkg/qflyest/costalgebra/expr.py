"""
Exact cost expressions in the Bell-pair consumption time T_Bell.

A CostExpr is a convex piecewise-affine function cost(t) = max_i (a_i + b_i * t)
kept in canonical form: only terms that are strictly maximal on some open
sub-interval of the domain survive, sorted by slope. Canonical form makes
structural equality coincide with functional equality on the domain.
"""

import math
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, ValidationInfo, field_validator

from ..errors import CostDomainError
from ..utils.rational import Rational, format_rational

Number = Union[int, Fraction]
CycleCount = Fraction

DEFAULT_DOMAIN: Tuple[Fraction, Fraction] = (Fraction(2), Fraction(10))


class AffineTerm(BaseModel):
    """One affine piece intercept + slope * t, both in logical cycles."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    intercept: Rational
    slope: Rational

    @field_validator("intercept", "slope")
    @classmethod
    def validate_non_negative(cls, v: Fraction) -> Fraction:
        if v < 0:
            raise ValueError("cost terms must be non-negative")
        return v

    def at(self, t: Fraction) -> Fraction:
        return self.intercept + self.slope * t

    def render(self) -> str:
        return f"{format_rational(self.intercept)} + {format_rational(self.slope)}·t"


def _upper_envelope(terms: Sequence[AffineTerm], lo: Fraction, hi: Fraction) -> Tuple[AffineTerm, ...]:
    """Walk the upper envelope from lo to hi, keeping each term that leads on an open interval."""
    if not terms:
        raise ValueError("cost expression needs at least one term")

    # Parallel terms: only the highest intercept can ever lead.
    best: dict[Fraction, AffineTerm] = {}
    for term in terms:
        held = best.get(term.slope)
        if held is None or term.intercept > held.intercept:
            best[term.slope] = term
    lines = sorted(best.values(), key=lambda term: term.slope)

    top = max(term.at(lo) for term in lines)
    current = max((term for term in lines if term.at(lo) == top), key=lambda term: term.slope)
    if lo == hi:
        return (current,)

    kept: List[AffineTerm] = [current]
    x = lo
    while True:
        successor: Optional[AffineTerm] = None
        successor_x: Optional[Fraction] = None
        for term in lines:
            if term.slope <= current.slope:
                continue
            cross = max((current.intercept - term.intercept) / (term.slope - current.slope), x)
            if (
                successor_x is None
                or cross < successor_x
                or (cross == successor_x and successor is not None and term.slope > successor.slope)
            ):
                successor, successor_x = term, cross
        if successor is None or successor_x is None or successor_x >= hi:
            break
        kept.append(successor)
        current, x = successor, successor_x
    return tuple(kept)


class CostExpr(BaseModel):
    """Convex piecewise-affine cost in T_Bell over a closed domain, in canonical form."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    domain: Tuple[Rational, Rational] = DEFAULT_DOMAIN
    terms: Tuple[AffineTerm, ...]

    @field_validator("domain")
    @classmethod
    def validate_domain(cls, v: Tuple[Fraction, Fraction]) -> Tuple[Fraction, Fraction]:
        lo, hi = v
        if lo < 0 or lo > hi:
            raise ValueError(f"invalid T_Bell domain [{lo}, {hi}]")
        return v

    @field_validator("terms")
    @classmethod
    def canonicalize_terms(cls, v: Tuple[AffineTerm, ...], info: ValidationInfo) -> Tuple[AffineTerm, ...]:
        domain = info.data.get("domain")
        if domain is None:
            # domain failed validation; let that error surface
            return v
        return _upper_envelope(v, domain[0], domain[1])

    def __add__(self, other: "CostExpr") -> "CostExpr":
        return add(self, other)

    def __mul__(self, c: Number) -> "CostExpr":
        return scale(self, c)

    __rmul__ = __mul__

    def __call__(self, t_bell: Number) -> Fraction:
        return evaluate(self, t_bell)

    def render(self) -> str:
        return "max(" + ", ".join(term.render() for term in self.terms) + ")"

    def breakpoints(self) -> List[Fraction]:
        """Interior points where the active term changes."""
        points = []
        for left, right in zip(self.terms, self.terms[1:]):
            points.append((left.intercept - right.intercept) / (right.slope - left.slope))
        return points


def _check_same_domain(a: CostExpr, b: CostExpr) -> None:
    if a.domain != b.domain:
        raise CostDomainError(
            f"domain mismatch: [{format_rational(a.domain[0])}, {format_rational(a.domain[1])}] vs "
            f"[{format_rational(b.domain[0])}, {format_rational(b.domain[1])}]"
        )


def _as_fraction(value: Number) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def affine(intercept: Number, slope: Number, domain: Tuple[Number, Number] = DEFAULT_DOMAIN) -> CostExpr:
    """One-term cost intercept + slope * T_Bell."""
    intercept, slope = _as_fraction(intercept), _as_fraction(slope)
    if intercept < 0 or slope < 0:
        raise CostDomainError(f"affine cost needs non-negative inputs, got intercept={intercept}, slope={slope}")
    return CostExpr(
        domain=(_as_fraction(domain[0]), _as_fraction(domain[1])),
        terms=(AffineTerm(intercept=intercept, slope=slope),),
    )


def constant(value: Number, domain: Tuple[Number, Number] = DEFAULT_DOMAIN) -> CostExpr:
    return affine(value, 0, domain)


def bell(slope: Number, domain: Tuple[Number, Number] = DEFAULT_DOMAIN) -> CostExpr:
    """Pure routing cost slope * T_Bell."""
    return affine(0, slope, domain)


def zero(domain: Tuple[Number, Number] = DEFAULT_DOMAIN) -> CostExpr:
    return affine(0, 0, domain)


def add(a: CostExpr, b: CostExpr) -> CostExpr:
    """Pointwise sum: the max of all pairwise term sums, pruned."""
    _check_same_domain(a, b)
    terms = [
        AffineTerm(intercept=x.intercept + y.intercept, slope=x.slope + y.slope) for x in a.terms for y in b.terms
    ]
    return CostExpr(domain=a.domain, terms=tuple(terms))


def sum_costs(costs: Iterable[CostExpr], domain: Tuple[Number, Number] = DEFAULT_DOMAIN) -> CostExpr:
    total: Optional[CostExpr] = None
    for cost in costs:
        total = cost if total is None else add(total, cost)
    return total if total is not None else zero(domain)


def scale(a: CostExpr, c: Number) -> CostExpr:
    c = _as_fraction(c)
    if c < 0:
        raise CostDomainError(f"cannot scale a cost by negative factor {c}")
    if c == 0:
        return zero(a.domain)
    terms = tuple(AffineTerm(intercept=term.intercept * c, slope=term.slope * c) for term in a.terms)
    return CostExpr(domain=a.domain, terms=terms)


def max_of(a: CostExpr, b: CostExpr) -> CostExpr:
    """Pointwise maximum: union of the term sets, pruned."""
    _check_same_domain(a, b)
    return CostExpr(domain=a.domain, terms=a.terms + b.terms)


def _check_in_domain(a: CostExpr, t: Fraction) -> None:
    lo, hi = a.domain
    if t < lo or t > hi:
        raise CostDomainError(
            f"T_Bell={format_rational(t)} outside domain [{format_rational(lo)}, {format_rational(hi)}]"
        )


def evaluate(a: CostExpr, t_bell: Number) -> CycleCount:
    """Exact cost at t_bell. Rounding is left to round_cycles."""
    t = _as_fraction(t_bell)
    _check_in_domain(a, t)
    return max(term.at(t) for term in a.terms)


def round_cycles(x: Number) -> int:
    """Round half up to whole logical cycles."""
    return math.floor(_as_fraction(x) + Fraction(1, 2))


def slope_at(a: CostExpr, t_bell: Number) -> Fraction:
    """Slope of the active term at t_bell; the right-hand slope at a breakpoint."""
    t = _as_fraction(t_bell)
    top = max(term.at(t) for term in a.terms)
    return max(term.slope for term in a.terms if term.at(t) == top)


def crossover_t(f: CostExpr, g: CostExpr) -> Optional[Fraction]:
    """
    Smallest T_Bell where the order between f and g flips, or None if it never does.

    Every zero of f - g lies on an intersection of a term of f with a term of g, so
    checking the sign between consecutive candidate points is exact.
    """
    _check_same_domain(f, g)
    lo, hi = f.domain
    points = {lo, hi, *f.breakpoints(), *g.breakpoints()}
    for x in f.terms:
        for y in g.terms:
            if x.slope != y.slope:
                cross = (y.intercept - x.intercept) / (x.slope - y.slope)
                if lo < cross < hi:
                    points.add(cross)
    ordered = sorted(points)

    previous_sign = 0
    previous_end: Optional[Fraction] = None
    for left, right in zip(ordered, ordered[1:]):
        mid = (left + right) / 2
        diff = evaluate(f, mid) - evaluate(g, mid)
        sign = (diff > 0) - (diff < 0)
        if sign == 0:
            continue
        if previous_sign and sign != previous_sign:
            return previous_end
        previous_sign, previous_end = sign, right
    return None
