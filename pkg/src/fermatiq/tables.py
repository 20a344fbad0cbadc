"""Embedded reference data: unit-scaling representatives and torsion primes.

Representatives are stored as ``(u, v, denom)`` meaning ``(u + v*sqrt(-d))/denom``.
"""

from __future__ import annotations

from .okarith import OkElement, make_field

TABLE1_REPS: dict[int, tuple[tuple[int, int, int], ...]] = {
    3: ((1, 0, 1), (-1, 3, 2), (3, 2, 1), (3, -1, 2)),
    11: ((1, 0, 1), (-1, 1, 2), (-1, 2, 1), (-5, -3, 2)),
    19: ((1, 0, 1), (1, 3, 2), (3, 2, 1), (9, 3, 2)),
    43: ((1, 0, 1), (-7, -1, 2), (-1, 2, 1), (-3, 3, 2)),
    67: ((1, 0, 1), (1, 3, 2), (1, 2, 1), (-9, -3, 2)),
    163: ((1, 0, 1), (1, 3, 2), (1, 2, 1), (-9, -3, 2)),
}

# maximal exponent of q = 2*O_K in the Frey curve conductor after unit scaling
TABLE1_CONDUCTOR_EXPONENT: dict[int, int] = {d: 4 for d in TABLE1_REPS}

# primes l with l-torsion in the abelianised Gamma_0(q^4)
TABLE2_TORSION: dict[int, tuple[int, ...]] = {
    3: (2, 3),
    11: (2, 3),
    19: (2, 3),
    43: (2, 3),
    67: (2, 3),
    163: (2, 3, 5, 11, 17),
}


def table1_representatives(d: int) -> list[OkElement]:
    if d not in TABLE1_REPS:
        raise KeyError(f"no unit-scaling representatives for d={d}; 2 must be inert")
    K = make_field(d)
    return [K.from_sqrt(u, v, den) for u, v, den in TABLE1_REPS[d]]


def torsion_primes(d: int) -> tuple[int, ...]:
    if d not in TABLE2_TORSION:
        raise KeyError(f"no torsion data for d={d}")
    return TABLE2_TORSION[d]
