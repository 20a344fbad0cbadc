"""Fermat solutions in units, and the classification of trivial solutions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .okarith import FieldDescriptor, OkElement, primes_up_to, units

ZERO_ENTRY = "zero-entry"
SUM_ZERO = "sum-zero"
NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class UnitSolution:
    triple: tuple[OkElement, OkElement, OkElement]
    exponent: int
    is_trivial_sum: bool


def unit_search(fld: FieldDescriptor, p_max: int) -> list[UnitSolution]:
    """Every unit triple with a^p + b^p + c^p = 0 for each prime 5 <= p <= p_max."""
    if p_max < 5:
        raise ValueError("p_max must be at least 5")
    us = units(fld)
    out = []
    for p in (q for q in primes_up_to(p_max) if q >= 5):
        powers = {u: u**p for u in us}
        for a, b, c in product(us, repeat=3):
            if not (powers[a] + powers[b] + powers[c]):
                out.append(UnitSolution((a, b, c), p, not (a + b + c)))
    return out


def classify_trivial(triple, p: int) -> str:
    a, b, c = triple
    if not (a and b and c):
        return ZERO_ENTRY
    if not (a + b + c):
        # b/a is a primitive cube root of unity, so the triple is a*(1, w, w^2) up to order
        if a * a + a * b + b * b:
            raise AssertionError(f"{triple} sums to zero but is not a multiple of (1, w, w^2)")
        return SUM_ZERO
    if a**p + b**p + c**p:
        raise ValueError(f"{tuple(map(str, triple))} is not a solution for p={p}")
    return NONTRIVIAL


def canonical_class(triple) -> tuple:
    """Key identifying a triple up to the six coordinate permutations."""
    return min(tuple((e.x, e.y) for e in perm) for perm in permutations(triple))


def solution_classes(solutions: list[UnitSolution]) -> dict[tuple, list[int]]:
    """Permutation classes mapped to the exponents at which they occur."""
    out: dict[tuple, list[int]] = {}
    for s in solutions:
        out.setdefault(canonical_class(s.triple), [])
        if s.exponent not in out[canonical_class(s.triple)]:
            out[canonical_class(s.triple)].append(s.exponent)
    return dict(sorted(out.items()))
