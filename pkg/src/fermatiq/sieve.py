"""Newform elimination: trace sets, the per-prime bounds B and their gcd C."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .frey import FreyCurve, reduction_type
from .hecke import HeckeElement, HeckeField, RATIONALS, field_norm
from .okarith import (
    FieldDescriptor,
    OkElement,
    PrimeIdeal,
    is_prime,
    primes_of_norm_up_to,
    split_prime,
    split_type,
)

DEFAULT_MAX_NORM = 50
RAMANUJAN_TOL = 1e-6
TRIAL_DIVISION_LIMIT = 10**6


class SieveError(ValueError):
    pass


@dataclass(frozen=True)
class NewformRecord:
    field_d: int
    level_generator: OkElement
    level_exponent: int
    hecke_field: HeckeField
    eigenvalues: dict[str, HeckeElement] = field(hash=False)
    name: str = ""

    @property
    def level(self) -> OkElement:
        return self.level_generator**self.level_exponent

    @property
    def level_label(self) -> str:
        g = self.level_generator
        return f"({g.x},{g.y})^{self.level_exponent}"

    def eigenvalue(self, P: PrimeIdeal) -> HeckeElement:
        try:
            return self.eigenvalues[P.label]
        except KeyError:
            raise SieveError(f"newform {self.name or '?'} has no eigenvalue at {P.label}") from None

    def validate(self, primes: dict[str, PrimeIdeal]) -> None:
        """Coprimality with the level and the bound |a_P| <= 2 sqrt(N(P)) in every embedding."""
        for label, a in self.eigenvalues.items():
            P = primes[label]
            if P.divides(self.level):
                raise SieveError(f"eigenvalue prime {label} divides the level")
            bound = 2 * P.norm**0.5 + RAMANUJAN_TOL
            worst = max(abs(a.embeddings()))
            if worst > bound:
                raise SieveError(f"eigenvalue {a} at {label} has an embedding of size {worst:.6f} > {bound:.6f}")


@dataclass(frozen=True)
class SieveConfig:
    S: tuple[PrimeIdeal, ...]
    p_floor: int = 17
    max_norm: int = DEFAULT_MAX_NORM

    def __post_init__(self):
        if not self.S:
            raise SieveError("the prime set S is empty")
        for P in self.S:
            if P.residue_char == 2 or P.norm >= self.max_norm:
                raise SieveError(f"{P.label}: S must contain odd primes of norm < {self.max_norm}")


def default_primes(fld: FieldDescriptor, level: OkElement, max_norm: int = DEFAULT_MAX_NORM) -> tuple[PrimeIdeal, ...]:
    """Odd primes of norm < max_norm, prime to the level."""
    return tuple(
        P for P in primes_of_norm_up_to(fld, max_norm - 1, odd_only=True) if not P.divides(level)
    )


@dataclass(frozen=True)
class SieveEntry:
    name: str
    C_value: int
    support: tuple[int, ...]
    surviving_primes: tuple[int, ...]
    unfactored: int = 1

    @property
    def eliminated(self) -> bool:
        return self.C_value != 0 and not self.surviving_primes

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "C": self.C_value,
            "support": list(self.support),
            "surviving_primes": list(self.surviving_primes),
            "unfactored_cofactor": self.unfactored,
            "eliminated": self.eliminated,
        }


def trace_set(q_norm: int) -> list[int]:
    """Integers a with a^2 <= 4*q_norm and q_norm + 1 - a = 0 mod 4."""
    if q_norm < 1 or q_norm % 2 == 0:
        raise SieveError("trace sets are defined for odd prime norms")
    r = isqrt(4 * q_norm)
    start = -r + ((q_norm + 1 + r) % 4)
    return list(range(start, r + 1, 4))


def bound_B(f: NewformRecord, P: PrimeIdeal) -> HeckeElement:
    a = f.eigenvalue(P)
    n = P.norm
    out = n * ((n + 1) ** 2 - a * a)
    for t in trace_set(n):
        out = out * (t - a)
    return out


def factor(n: int, limit: int = TRIAL_DIVISION_LIMIT) -> tuple[dict[int, int], int]:
    """Trial division up to ``limit``; returns (factors, cofactor).

    A cofactor above 1 that is prime is folded into the factors; a composite
    one (all its primes exceed ``limit``) is returned unfactored.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    p = 2
    while p <= limit and p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1 and (n <= limit * limit or is_prime(n)):
        out[n] = out.get(n, 0) + 1
        n = 1
    return out, n


def constant_C(f: NewformRecord, config: SieveConfig) -> SieveEntry:
    C = 0
    for P in config.S:
        C = gcd(C, abs(field_norm(bound_B(f, P))))
    if C == 0:
        return SieveEntry(f.name, 0, (), ())
    facs, rest = factor(C)
    support = tuple(sorted(facs))
    survivors = tuple(p for p in support if p >= config.p_floor)
    if rest > 1:
        survivors += (rest,)
    return SieveEntry(f.name, C, support, survivors, rest)


@dataclass(frozen=True)
class SieveReport:
    field_d: int
    p_floor: int
    S_labels: tuple[str, ...]
    entries: tuple[SieveEntry, ...]

    @property
    def all_eliminated(self) -> bool:
        return all(e.eliminated for e in self.entries)

    def as_dict(self) -> dict:
        return {
            "d": self.field_d,
            "p_floor": self.p_floor,
            "S": list(self.S_labels),
            "newforms": [e.as_dict() for e in self.entries],
            "all_eliminated": self.all_eliminated,
        }


def run_sieve(newforms: list[NewformRecord], config: SieveConfig) -> SieveReport:
    if not newforms:
        raise SieveError("no newforms")
    d = newforms[0].field_d
    entries = tuple(constant_C(f, config) for f in newforms)
    return SieveReport(d, config.p_floor, tuple(P.label for P in config.S), entries)


@dataclass(frozen=True)
class ObstructionConstants:
    norm_q_minus_1: int
    two_norm_sq_minus_1: int


def obstruction_constants(fld: FieldDescriptor) -> ObstructionConstants:
    """norm(q) - 1 for q = 2*O_K, and N(iota(2))^2 - 1 at a degree-one prime."""
    if split_type(fld, 2) != "inert":
        raise SieveError(f"2 is not inert in {fld}")
    (q,) = split_prime(fld, 2)
    l = 3
    while not (is_prime(l) and split_type(fld, l) == "split"):
        l += 2
    P1 = split_prime(fld, l)[0]
    # the completion at a split prime is Q_l, so the local norm of 2 is 2**(e*f) with e*f = 1
    local_degree = P1.degree * (P1.multiplicity if P1.split_type == "ramified" else 1)
    return ObstructionConstants(q.norm - 1, (2**local_degree) ** 2 - 1)


def exponent_floor(torsion_primes) -> int:
    """Smallest prime >= 17 with no torsion of that order."""
    bad = set(torsion_primes)
    p = 17
    while p in bad or not is_prime(p):
        p += 1
    return p


def congruence_check(curve: FreyCurve, f: NewformRecord, P: PrimeIdeal, p: int) -> bool:
    """Whether the Frey curve at P is compatible with f modulo a prime above p."""
    if P.residue_char in (2, p):
        raise SieveError(f"{P.label} lies above 2 or above p={p}")
    if P.divides(f.level):
        raise SieveError(f"{P.label} divides the level of {f.name}")
    a_f = f.eigenvalue(P)
    data = reduction_type(curve, P)
    if data.kind == "good":
        return field_norm(data.a_l - a_f) % p == 0
    n = P.norm
    return field_norm((n + 1) ** 2 - a_f * a_f) % p == 0


def synthetic_newform(curve: FreyCurve, primes, level_generator: OkElement, level_exponent: int = 4, name: str = "synthetic") -> NewformRecord:
    """A rational 'newform' whose eigenvalues are the curve's own traces.

    Multiplicative primes get N(P) + 1, the trace the congruence predicts there.
    """
    eig = {}
    for P in primes:
        data = reduction_type(curve, P)
        a = data.a_l if data.kind == "good" else P.norm + 1
        eig[P.label] = RATIONALS(a)
    return NewformRecord(curve.field.d, level_generator, level_exponent, RATIONALS, eig, name)
