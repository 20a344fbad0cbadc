"""Frey curves Y^2 = X(X - a^p)(X + b^p): invariants, reduction and traces."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .okarith import (
    CokernelReport,
    OkElement,
    PrimeIdeal,
    _cokernel_data,
    ideal_gcd_is_trivial,
    is_prime,
    residue_field,
    residue_map,
    split_prime,
    units,
    valuation,
)

POINT_COUNT_LIMIT = 10**6


class FreyError(ValueError):
    pass


@dataclass(frozen=True)
class FreyInput:
    a: OkElement
    b: OkElement
    c: OkElement
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise FreyError(f"exponent {self.p} is not prime")
        if not (self.a and self.b and self.c):
            raise FreyError("a, b and c must be nonzero")
        pairs = ((self.a, self.b), (self.a, self.c), (self.b, self.c))
        if not all(ideal_gcd_is_trivial(x, y) for x, y in pairs):
            raise FreyError("a, b, c are not pairwise coprime")

    @property
    def field(self):
        return self.a.field

    @property
    def is_fermat(self) -> bool:
        p = self.p
        return not (self.a**p + self.b**p + self.c**p)

    @property
    def abc(self) -> OkElement:
        return self.a * self.b * self.c


def frey_input(a: OkElement, b: OkElement, c: OkElement, p: int) -> FreyInput:
    return FreyInput(a, b, c, p)


@dataclass(frozen=True)
class FreyCurve:
    """Y^2 = X(X - A)(X + B); j = j_num / j_den with the common primes above 2 removed."""

    A: OkElement
    B: OkElement
    c4: OkElement
    delta: OkElement
    j_num: OkElement
    j_den: OkElement
    source: FreyInput | None = None

    @property
    def field(self):
        return self.A.field

    @property
    def a2(self) -> OkElement:
        return self.B - self.A

    @property
    def a4(self) -> OkElement:
        return -(self.A * self.B)

    @classmethod
    def from_AB(cls, A: OkElement, B: OkElement, source: FreyInput | None = None) -> "FreyCurve":
        if not (A and B and A + B):
            raise FreyError("singular model: A, B and A + B must be nonzero")
        S = A * A + A * B + B * B
        AB_sum = A * B * (A + B)
        c4 = 16 * S
        delta = 16 * AB_sum * AB_sum
        num, den = 256 * S**3, AB_sum * AB_sum
        if not num:
            return cls(A, B, c4, delta, num, A.field.one, source)
        for P in split_prime(A.field, 2):
            k = min(valuation(num, P), valuation(den, P))
            if k:
                pik = P.generator**k
                num, den = num.exact_div(pik), den.exact_div(pik)
        return cls(A, B, c4, delta, num, den, source)


def build_frey(inp: FreyInput) -> FreyCurve:
    p = inp.p
    return FreyCurve.from_AB(inp.a**p, inp.b**p, source=inp)


def v_q_of_j(curve: FreyCurve, q: PrimeIdeal) -> int:
    """Valuation of j at a prime above 2 where the curve has potentially multiplicative reduction."""
    if q.residue_char != 2:
        raise FreyError(f"{q.label} does not lie above 2")
    A, B = curve.A, curve.B
    if not q.divides(A * B * (A + B)):
        raise FreyError(f"{q.label} does not divide abc: the j-valuation there is not negative")
    return valuation(curve.j_num, q) - valuation(curve.j_den, q)


@dataclass(frozen=True)
class ReductionData:
    prime: PrimeIdeal
    kind: str
    a_l: int | None
    point_count: int


def _reduced_coeffs(curve: FreyCurve, P: PrimeIdeal):
    F = residue_field(P)
    return F, residue_map(curve.A, P), residue_map(curve.B, P)


def _cubic(F, A, B, x):
    # x (x - A)(x + B)
    return F.mul(F.mul(x, F.sub(x, A)), F.add(x, B))


def count_points(curve: FreyCurve, P: PrimeIdeal) -> int:
    """Projective points on the reduction mod P, by enumerating x against a table of square roots."""
    F, A, B = _reduced_coeffs(curve, P)
    if F.size > POINT_COUNT_LIMIT:
        raise FreyError(f"residue field of size {F.size} is too large for enumeration")
    roots: dict = {}
    for y in F.elements():
        s = F.mul(y, y)
        roots[s] = roots.get(s, 0) + 1
    return 1 + sum(roots.get(_cubic(F, A, B, x), 0) for x in F.elements())


def trace_by_character_sum(curve: FreyCurve, P: PrimeIdeal) -> int:
    """a_P = -sum_x chi(x(x-A)(x+B)) with chi evaluated by Euler's criterion."""
    F, A, B = _reduced_coeffs(curve, P)
    if F.size > POINT_COUNT_LIMIT:
        raise FreyError(f"residue field of size {F.size} is too large for enumeration")
    return -sum(F.quadratic_character(_cubic(F, A, B, x)) for x in F.elements())


def reduction_type(curve: FreyCurve, P: PrimeIdeal) -> ReductionData:
    if P.field != curve.field:
        raise FreyError("prime and curve live in different fields")
    if P.residue_char == 2:
        raise FreyError("reduction at primes above 2 needs Tate's algorithm, which is not implemented")
    vd = valuation(curve.delta, P)
    if vd == 0:
        n = count_points(curve, P)
        return ReductionData(P, "good", P.residue_size + 1 - n, n)
    if valuation(curve.c4, P) == 0:
        return ReductionData(P, "multiplicative", None, count_points(curve, P))
    # impossible for A, B coprime at an odd prime
    raise AssertionError(f"additive reduction at odd prime {P.label}: A and B are not coprime")


def trace_of_frobenius(curve: FreyCurve, P: PrimeIdeal) -> int:
    data = reduction_type(curve, P)
    if data.kind != "good":
        raise FreyError(f"{P.label} is a prime of {data.kind} reduction")
    return data.a_l


@dataclass(frozen=True)
class ScaledCandidate:
    representative: OkElement
    unit: OkElement
    scaled: FreyInput
    matches: bool


def scale_by_representatives(inp: FreyInput, report: CokernelReport) -> list[ScaledCandidate]:
    """One unit-scaled triple per cokernel representative.

    The cokernel class of the first entry prime to q is invariant under unit
    scaling, so exactly one representative ``lam`` matches it; for that one the
    unit is chosen with ``unit * x`` in the square class of ``lam`` mod q^3.
    Non-matching representatives keep the identity scaling.
    """
    if not inp.field == report.field:
        raise FreyError("cokernel report is for a different field")
    (q,) = split_prime(inp.field, 2)
    if not q.divides(inp.abc):
        raise FreyError("scaling by cokernel representatives needs 2 | abc")
    data = _cokernel_data(inp.field)
    x = next(e for e in (inp.a, inp.b, inp.c) if not q.divides(e))
    target = data.element_class(x)
    ring = data.group.ring
    one = inp.field.one
    out = []
    for lam in report.representatives:
        unit, matches = one, data.element_class(lam) == target
        if matches:
            want = data.square_class(ring.reduce(lam))
            unit = next(u for u in units(inp.field) if data.square_class(ring.reduce(u * x)) == want)
        scaled = FreyInput(unit * inp.a, unit * inp.b, unit * inp.c, inp.p)
        out.append(ScaledCandidate(lam, unit, scaled, matches))
    return out


def hasse_bound(norm: int) -> int:
    """floor(2*sqrt(norm))."""
    return isqrt(4 * norm)
