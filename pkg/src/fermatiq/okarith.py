"""Exact arithmetic in the ring of integers of Q(sqrt(-d)) for the nine
class-number-one imaginary quadratic fields.

Elements are stored as integer coordinates ``x + y*theta`` where
``theta = sqrt(-d)`` for ``d = 1, 2`` and ``theta = (1 + sqrt(-d))/2`` for
``d = 3 mod 4``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import gcd, isqrt
from typing import Callable, Hashable, Iterable, Sequence

CLASS_NUMBER_ONE = (1, 2, 3, 7, 11, 19, 43, 67, 163)
TWO_INERT = (3, 11, 19, 43, 67, 163)

ENUMERATION_LIMIT = 10**6


class FieldError(ValueError):
    """Raised for fields outside the class-number-one list or mismatched fields."""


@dataclass(frozen=True)
class FieldDescriptor:
    d: int

    def __post_init__(self):
        if self.d not in CLASS_NUMBER_ONE:
            raise FieldError(
                f"Q(sqrt(-{self.d})) is not one of the class-number-one fields {CLASS_NUMBER_ONE}"
            )

    @property
    def half_integral(self) -> bool:
        """True when theta = (1 + sqrt(-d))/2."""
        return self.d % 4 == 3

    @property
    def theta_kind(self) -> str:
        return "(1+sqrt(-d))/2" if self.half_integral else "sqrt(-d)"

    @property
    def discriminant(self) -> int:
        return -self.d if self.half_integral else -4 * self.d

    @property
    def unit_count(self) -> int:
        return {1: 4, 3: 6}.get(self.d, 2)

    @property
    def theta_trace(self) -> int:
        # theta^2 = trace*theta - norm
        return 1 if self.half_integral else 0

    @property
    def theta_norm(self) -> int:
        return (1 + self.d) // 4 if self.half_integral else self.d

    def __call__(self, x: int, y: int = 0) -> "OkElement":
        return OkElement(int(x), int(y), self)

    @property
    def zero(self) -> "OkElement":
        return OkElement(0, 0, self)

    @property
    def one(self) -> "OkElement":
        return OkElement(1, 0, self)

    @property
    def theta(self) -> "OkElement":
        return OkElement(0, 1, self)

    def from_sqrt(self, u: int, v: int, denom: int = 1) -> "OkElement":
        """The element (u + v*sqrt(-d))/denom, with denom in {1, 2}."""
        if denom not in (1, 2):
            raise ValueError("denominator must be 1 or 2")
        # sqrt(-d) = 2*theta - 1 in the half-integral case
        x, y = (u - v, 2 * v) if self.half_integral else (2 * u, 2 * v)
        scale = 2 * denom if not self.half_integral else denom
        if x % scale or y % scale:
            raise ValueError(f"({u} + {v}*sqrt(-{self.d}))/{denom} is not integral")
        return OkElement(x // scale, y // scale, self)

    def __str__(self):
        return f"Q(sqrt(-{self.d}))"


def make_field(d: int) -> FieldDescriptor:
    return FieldDescriptor(int(d))


@dataclass(frozen=True)
class OkElement:
    x: int
    y: int
    field: FieldDescriptor = field(repr=False)

    def _coerce(self, other) -> "OkElement":
        if isinstance(other, OkElement):
            if other.field != self.field:
                raise FieldError(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return OkElement(other, 0, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return OkElement(self.x + other.x, self.y + other.y, self.field)

    __radd__ = __add__

    def __neg__(self):
        return OkElement(-self.x, -self.y, self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return OkElement(self.x - other.x, self.y - other.y, self.field)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t, n = self.field.theta_trace, self.field.theta_norm
        yy = self.y * other.y
        return OkElement(
            self.x * other.x - n * yy,
            self.x * other.y + self.y * other.x + t * yy,
            self.field,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not integral in general")
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.x or self.y)

    def conj(self) -> "OkElement":
        # conj(theta) = trace - theta
        return OkElement(self.x + self.field.theta_trace * self.y, -self.y, self.field)

    def norm(self) -> int:
        t, n = self.field.theta_trace, self.field.theta_norm
        return self.x * self.x + t * self.x * self.y + n * self.y * self.y

    def divides(self, other: "OkElement") -> bool:
        other = self._coerce(other)
        if not self:
            return not other
        m = self.norm()
        w = other * self.conj()
        return w.x % m == 0 and w.y % m == 0

    def exact_div(self, other) -> "OkElement":
        """self / other, raising ArithmeticError if the quotient is not integral."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero in O_K")
        m = other.norm()
        w = self * other.conj()
        if w.x % m or w.y % m:
            raise ArithmeticError(f"{other} does not divide {self}")
        return OkElement(w.x // m, w.y // m, self.field)

    def is_unit(self) -> bool:
        return self.norm() == 1

    def complex(self) -> complex:
        root = complex(0, self.field.d**0.5)
        th = (1 + root) / 2 if self.field.half_integral else root
        return self.x + self.y * th

    def sqrt_form(self) -> tuple[Fraction, Fraction]:
        """Coordinates (u, v) with self = u + v*sqrt(-d)."""
        if self.field.half_integral:
            return Fraction(2 * self.x + self.y, 2), Fraction(self.y, 2)
        return Fraction(self.x), Fraction(self.y)

    def __str__(self):
        u, v = self.sqrt_form()
        if v == 0:
            return str(u)
        sign = "-" if v < 0 else "+"
        av = abs(v)
        coef = "" if av == 1 else str(av)
        root = f"{coef}*sqrt(-{self.field.d})" if coef else f"sqrt(-{self.field.d})"
        if u == 0:
            return f"{'-' if v < 0 else ''}{root}"
        return f"{u} {sign} {root}"

    def __repr__(self):
        return f"OkElement({self.x}, {self.y}, d={self.field.d})"


def norm(e: OkElement) -> int:
    return e.norm()


def units(fld: FieldDescriptor) -> list[OkElement]:
    """All norm-one elements of O_K."""
    # norm >= y^2 * (d/4) so |y| <= 2/sqrt(d) <= 2
    found = []
    for y in range(-2, 3):
        for x in range(-2, 3):
            e = fld(x, y)
            if e.norm() == 1:
                found.append(e)
    found.sort(key=lambda e: (e.y != 0, abs(e.y), abs(e.x), e.y < 0, e.x < 0))
    return found


def elements_of_norm(fld: FieldDescriptor, n: int) -> list[OkElement]:
    """Every element with norm exactly ``n``."""
    if n < 0:
        return []
    out = []
    t, m = fld.theta_trace, fld.theta_norm
    # 4*norm = (2x + t*y)^2 + (4m - t^2) y^2
    disc = 4 * m - t * t
    ymax = isqrt(4 * n // disc)
    for y in range(-ymax, ymax + 1):
        rest = 4 * n - disc * y * y
        if rest < 0:
            continue
        s = isqrt(rest)
        if s * s != rest:
            continue
        for w in {s, -s}:
            if (w - t * y) % 2 == 0:
                out.append(fld((w - t * y) // 2, y))
    return out


def canonical_generator(candidates: Iterable[OkElement]) -> OkElement:
    """Deterministic choice among associates: y >= 0, then smallest (|y|, |x|), then x > 0."""
    pool = [e for e in candidates if e.y >= 0]
    return min(pool, key=lambda e: (e.y, abs(e.x), e.x <= 0))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    dd, s = n - 1, 0
    while dd % 2 == 0:
        dd //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, dd, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for n > 0."""
    if n <= 0:
        raise ValueError("n must be positive")
    result = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class PrimeIdeal:
    residue_char: int
    split_type: str
    generator: OkElement
    residue_size: int
    multiplicity: int = 1

    @property
    def field(self) -> FieldDescriptor:
        return self.generator.field

    @property
    def norm(self) -> int:
        return self.residue_size

    @property
    def degree(self) -> int:
        return 2 if self.split_type == "inert" else 1

    @property
    def label(self) -> str:
        g = self.generator
        return f"{self.residue_char}.{self.residue_size}.{g.x}.{g.y}"

    def sort_key(self):
        return (self.residue_size, self.label)

    def divides(self, e: OkElement) -> bool:
        return self.generator.divides(e)

    def valuation(self, e: OkElement) -> int:
        return valuation(e, self)

    def __str__(self):
        return f"({self.generator}) [{self.label}]"


def split_type(fld: FieldDescriptor, l: int) -> str:
    k = kronecker(fld.discriminant, l)
    return {1: "split", -1: "inert", 0: "ramified"}[k]


@lru_cache(maxsize=None)
def split_prime(fld: FieldDescriptor, l: int) -> tuple[PrimeIdeal, ...]:
    """The primes of O_K above the rational prime ``l``."""
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    kind = split_type(fld, l)
    if kind == "inert":
        return (PrimeIdeal(l, kind, fld(l, 0), l * l),)
    classes: list[list[OkElement]] = []
    for e in elements_of_norm(fld, l):
        for cls in classes:
            if cls[0].divides(e):
                cls.append(e)
                break
        else:
            classes.append([e])
    gens = sorted((canonical_generator(c) for c in classes), key=lambda g: (g.y, g.x))
    if kind == "ramified":
        assert len(gens) == 1
        return (PrimeIdeal(l, kind, gens[0], l, multiplicity=2),)
    assert len(gens) == 2
    primes = [PrimeIdeal(l, kind, g, l) for g in gens]
    return tuple(sorted(primes, key=PrimeIdeal.sort_key))


def primes_of_norm_up_to(fld: FieldDescriptor, bound: int, *, odd_only: bool = False) -> list[PrimeIdeal]:
    """Prime ideals with norm <= bound, sorted by (norm, label)."""
    out = []
    for l in primes_up_to(bound):
        if odd_only and l == 2:
            continue
        out.extend(P for P in split_prime(fld, l) if P.norm <= bound)
    return sorted(out, key=PrimeIdeal.sort_key)


def prime_from_label(fld: FieldDescriptor, label: str) -> PrimeIdeal:
    try:
        l, n, x, y = (int(t) for t in label.split("."))
    except ValueError:
        raise ValueError(f"malformed prime label {label!r}") from None
    if not is_prime(l):
        raise ValueError(f"malformed prime label {label!r}: {l} is not prime")
    for P in split_prime(fld, l):
        if P.label == label:
            return P
    raise ValueError(f"{label!r} is not a canonical prime label over {fld}")


def valuation(e: OkElement, P: PrimeIdeal) -> int:
    if e.field != P.field:
        raise FieldError("element and prime live in different fields")
    if not e:
        raise ValueError("valuation of zero is infinite")
    k = 0
    pi = P.generator
    while pi.divides(e):
        e = e.exact_div(pi)
        k += 1
    return k


# --- residue fields -------------------------------------------------------


@dataclass(frozen=True)
class ResidueField:
    """F_l (degree 1) or F_l[t]/(t^2 - s*t + n) (degree 2).

    Degree-1 elements are ints in [0, l); degree-2 elements are pairs (u, v)
    meaning u + v*t.
    """

    l: int
    degree: int
    s: int = 0
    n: int = 0

    @property
    def size(self) -> int:
        return self.l**self.degree

    @property
    def zero(self):
        return 0 if self.degree == 1 else (0, 0)

    @property
    def one(self):
        return 1 % self.l if self.degree == 1 else (1 % self.l, 0)

    def elements(self):
        if self.degree == 1:
            return range(self.l)
        return list(product(range(self.l), repeat=2))

    def of_int(self, a: int):
        return a % self.l if self.degree == 1 else (a % self.l, 0)

    def add(self, a, b):
        if self.degree == 1:
            return (a + b) % self.l
        return ((a[0] + b[0]) % self.l, (a[1] + b[1]) % self.l)

    def neg(self, a):
        if self.degree == 1:
            return -a % self.l
        return (-a[0] % self.l, -a[1] % self.l)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        l = self.l
        if self.degree == 1:
            return a * b % l
        vv = a[1] * b[1]
        return ((a[0] * b[0] - self.n * vv) % l, (a[0] * b[1] + a[1] * b[0] + self.s * vv) % l)

    def pow(self, a, k: int):
        if self.degree == 1:
            return pow(a, k, self.l)
        result, base = self.one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def quadratic_character(self, a) -> int:
        """Euler's criterion: 0, 1 or -1."""
        if self.is_zero(a):
            return 0
        r = self.pow(a, (self.size - 1) // 2)
        return 1 if r == self.one else -1


def residue_field(P: PrimeIdeal) -> ResidueField:
    fld = P.field
    if P.degree == 2:
        return ResidueField(P.residue_char, 2, fld.theta_trace % P.residue_char, fld.theta_norm % P.residue_char)
    return ResidueField(P.residue_char, 1)


def theta_image(P: PrimeIdeal) -> int:
    """Root r of theta's minimal polynomial mod l with generator(r) = 0, for degree-one P."""
    l = P.residue_char
    g = P.generator
    # g = x + y*theta with l not dividing y, since norm(g) = l
    return (-g.x * pow(g.y, -1, l)) % l


def residue_map(e: OkElement, P: PrimeIdeal):
    if e.field != P.field:
        raise FieldError("element and prime live in different fields")
    l = P.residue_char
    if P.degree == 2:
        return (e.x % l, e.y % l)
    return (e.x + e.y * theta_image(P)) % l


# --- quotient rings and their unit groups ---------------------------------


def ideal_hnf(alpha: OkElement) -> tuple[int, int, int]:
    """Basis (A, 0), (B, C) of the lattice alpha*O_K in (x, y) coordinates.

    A*C equals norm(alpha); reduction modulo the ideal uses 0 <= y < C, 0 <= x < A.
    """
    u = alpha
    v = alpha * alpha.field.theta
    g, s, t = _xgcd(u.y, v.y)
    w = (s * u.x + t * v.x, g)
    det = abs(u.x * v.y - u.y * v.x)
    if g == 0:
        raise ValueError("zero ideal")
    A = det // g
    C = g
    return A, w[0] % A if A else w[0], C


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class QuotientRing:
    """O_K / (alpha) with canonical residue representatives."""

    def __init__(self, alpha: OkElement):
        self.alpha = alpha
        self.field = alpha.field
        self.A, self.B, self.C = ideal_hnf(alpha)

    @property
    def size(self) -> int:
        return self.A * self.C

    def reduce(self, e: OkElement) -> tuple[int, int]:
        k = e.y // self.C
        x = e.x - k * self.B
        return (x % self.A, e.y - k * self.C)

    def lift(self, r: tuple[int, int]) -> OkElement:
        return self.field(*r)

    def mul(self, a, b):
        return self.reduce(self.lift(a) * self.lift(b))

    def elements(self):
        return [(x, y) for y in range(self.C) for x in range(self.A)]


def abelian_invariants(elements: Sequence[Hashable], mul: Callable, identity: Hashable) -> tuple[int, ...]:
    """Invariant factors (d1 | d2 | ...) of a finite abelian group, by brute force.

    Uses the counts |G[p^k]| of elements killed by p^k for each prime p of |G|.
    """
    n = len(elements)
    if n == 1:
        return ()

    def power(g, k):
        result, base = identity, g
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    primes = [p for p in primes_up_to(n) if n % p == 0]
    cyclic_parts: dict[int, list[int]] = {}
    for p in primes:
        sizes = [1]
        k = 1
        while True:
            cnt = sum(1 for g in elements if power(g, p**k) == identity)
            sizes.append(cnt)
            if cnt == sizes[-2]:
                break
            k += 1
        ranks = [_ilog(s, p) for s in sizes]
        # number of cyclic factors of order >= p^k is ranks[k] - ranks[k-1]
        ge = [ranks[i] - ranks[i - 1] for i in range(1, len(ranks))]
        exps = []
        for i, c in enumerate(ge):
            nxt = ge[i + 1] if i + 1 < len(ge) else 0
            exps.extend([i + 1] * (c - nxt))
        cyclic_parts[p] = sorted(exps, reverse=True)
    width = max(len(v) for v in cyclic_parts.values())
    factors = []
    for i in range(width):
        f = 1
        for p, exps in cyclic_parts.items():
            if i < len(exps):
                f *= p ** exps[i]
        factors.append(f)
    return tuple(sorted(factors))


def _ilog(n: int, p: int) -> int:
    k = 0
    while n > 1:
        if n % p:
            raise ValueError(f"{n} is not a power of {p}")
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class QuotientUnitGroup:
    prime: PrimeIdeal
    exponent: int
    elements: tuple[tuple[int, int], ...]
    structure: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def ring(self) -> QuotientRing:
        return QuotientRing(self.prime.generator**self.exponent)

    @property
    def identity(self):
        return self.ring.reduce(self.prime.field.one)

    def mul(self, a, b):
        return self.ring.mul(a, b)


def quotient_unit_group(P: PrimeIdeal, n: int) -> QuotientUnitGroup:
    """(O_K / P^n)^* enumerated, with its invariant factors."""
    if n < 1:
        raise ValueError("exponent must be positive")
    if P.residue_size**n > ENUMERATION_LIMIT:
        raise ValueError(f"norm {P.residue_size}^{n} exceeds the enumeration limit {ENUMERATION_LIMIT}")
    ring = QuotientRing(P.generator**n)
    pi = P.generator
    elems = tuple(r for r in ring.elements() if not pi.divides(ring.lift(r)))
    one = ring.reduce(P.field.one)
    structure = abelian_invariants(elems, ring.mul, one)
    return QuotientUnitGroup(P, n, elems, structure)


# --- cokernel of the global units in (O_K/q^3)^* / squares ----------------


@dataclass(frozen=True)
class CokernelReport:
    field: FieldDescriptor
    group_structure: tuple[int, ...]
    group_order: int
    squares_order: int
    quotient_structure: tuple[int, ...]
    image_order: int
    cokernel_structure: tuple[int, ...]
    representatives: tuple[OkElement, ...]

    @property
    def cokernel_order(self) -> int:
        out = 1
        for f in self.cokernel_structure:
            out *= f
        return out


class _CokernelData:
    def __init__(self, fld: FieldDescriptor, exponent: int = 3):
        if split_type(fld, 2) != "inert":
            raise FieldError(f"2 is not inert in {fld}")
        self.field = fld
        (q,) = split_prime(fld, 2)
        self.group = quotient_unit_group(q, exponent)
        G, mul = self.group, self.group.mul
        self.squares = frozenset(mul(g, g) for g in G.elements)
        self.unit_images = frozenset(G.ring.reduce(u) for u in units(fld))
        # subgroup generated by squares and unit images
        sub = set(self.squares)
        frontier = list(self.unit_images)
        while frontier:
            u = frontier.pop()
            new = {mul(s, u) for s in sub} - sub
            if new:
                sub |= new
                frontier.extend(self.unit_images)
        self.killed = frozenset(sub)

    def square_class(self, r):
        return min(self.group.mul(r, s) for s in self.squares)

    def cokernel_class(self, r):
        return min(self.group.mul(r, s) for s in self.killed)

    def element_class(self, e: OkElement):
        r = self.group.ring.reduce(e)
        if r not in set(self.group.elements):
            raise ValueError(f"{e} is not a unit modulo q^3")
        return self.cokernel_class(r)


def cokernel_phi(fld: FieldDescriptor) -> CokernelReport:
    data = _cokernel_data(fld)
    G = data.group
    mul = G.mul
    sq_classes = sorted({data.square_class(g) for g in G.elements})
    quotient_structure = abelian_invariants(sq_classes, lambda a, b: data.square_class(mul(a, b)), data.square_class(G.identity))
    image = {data.square_class(u) for u in data.unit_images}
    coker = sorted({data.cokernel_class(g) for g in G.elements})
    coker_structure = abelian_invariants(coker, lambda a, b: data.cokernel_class(mul(a, b)), data.cokernel_class(G.identity))
    reps = _small_lifts(data, coker)
    return CokernelReport(
        field=fld,
        group_structure=G.structure,
        group_order=G.order,
        squares_order=len(data.squares),
        quotient_structure=quotient_structure,
        image_order=len(image),
        cokernel_structure=coker_structure,
        representatives=tuple(reps),
    )


@lru_cache(maxsize=None)
def _cokernel_data(fld: FieldDescriptor) -> _CokernelData:
    return _CokernelData(fld)


def _small_lifts(data: _CokernelData, classes) -> list[OkElement]:
    """Smallest-norm lift of each cokernel class, 1 first."""
    fld = data.field
    wanted = {c: None for c in classes}
    n = 1
    while any(v is None for v in wanted.values()):
        for e in sorted(elements_of_norm(fld, n), key=lambda e: (e.y < 0, abs(e.y), e.x < 0, abs(e.x))):
            try:
                c = data.element_class(e)
            except ValueError:
                continue
            if wanted[c] is None:
                wanted[c] = e
        n += 1
    return sorted(wanted.values(), key=lambda e: (e.norm(), e.y, e.x))


def verify_representatives(fld: FieldDescriptor, reps: Sequence[OkElement]) -> bool:
    """True iff ``reps`` lie in pairwise distinct cokernel classes covering the whole cokernel."""
    data = _cokernel_data(fld)
    try:
        classes = [data.element_class(e) for e in reps]
    except ValueError:
        return False
    total = len({data.cokernel_class(g) for g in data.group.elements})
    return len(set(classes)) == len(classes) == total


def cokernel_class(e: OkElement):
    """Canonical label of the class of ``e`` in the cokernel (as a residue mod q^3)."""
    return _cokernel_data(e.field).element_class(e)


def ideal_gcd_is_trivial(a: OkElement, b: OkElement) -> bool:
    """True iff (a, b) = O_K. Only primes dividing gcd(norm a, norm b) need checking."""
    g = gcd(a.norm(), b.norm())
    if g == 1:
        return True
    for l in _prime_factors_small(g):
        for P in split_prime(a.field, l):
            if P.divides(a) and P.divides(b):
                return False
    return True


def _prime_factors_small(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out
