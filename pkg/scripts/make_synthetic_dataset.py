"""Write newform JSON files whose eigenvalues come from an actual Frey curve.

``--mode frey`` copies the curve's traces, so the sieve must report C = 0.
``--mode shifted`` moves every trace off the admissible residue class mod 4,
giving a form the sieve can eliminate. Useful for exercising ``fermatiq sieve``
without external newform data.
"""

import argparse
import random
from dataclasses import dataclass
from pathlib import Path

from fermatiq.dataset import save_newform
from fermatiq.frey import FreyError, FreyInput, build_frey, reduction_type
from fermatiq.hecke import RATIONALS
from fermatiq.okarith import make_field, split_prime
from fermatiq.sieve import DEFAULT_MAX_NORM, NewformRecord, default_primes, synthetic_newform


@dataclass(frozen=True)
class DatasetConfig:
    d: int = 43
    p: int = 17
    count: int = 3
    mode: str = "frey"
    max_norm: int = DEFAULT_MAX_NORM
    seed: int = 0


def good_everywhere_curve(rng, K, p, S):
    """A Frey curve with 2 | abc and good reduction at every prime of S."""
    (q,) = split_prime(K, 2)
    while True:
        t = [K(rng.randint(-12, 12), rng.randint(-12, 12)) for _ in range(3)]
        if any(q.divides(e) for e in t):
            continue
        t[0] *= 2
        try:
            E = build_frey(FreyInput(*t, p))
        except FreyError:
            continue
        if all(reduction_type(E, P).kind == "good" for P in S):
            return E


def make(cfg: DatasetConfig, out: Path) -> list[Path]:
    K = make_field(cfg.d)
    S = default_primes(K, K(2), cfg.max_norm)
    rng = random.Random(cfg.seed)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for i in range(cfg.count):
        E = good_everywhere_curve(rng, K, cfg.p, S)
        f = synthetic_newform(E, S, K(2), name=f"{cfg.mode}-{i}")
        if cfg.mode == "shifted":
            eig = {}
            for P in S:
                a = f.eigenvalues[P.label].coeffs[0] + 2
                eig[P.label] = RATIONALS(a if a * a <= 4 * P.norm else a - 4)
            f = NewformRecord(K.d, K(2), 4, RATIONALS, eig, f.name)
        path = out / f"{f.name}.json"
        save_newform(f, path, provenance=f"synthetic ({cfg.mode}), seed {cfg.seed}")
        paths.append(path)
    return paths


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", type=Path)
    ap.add_argument("--d", type=int, default=DatasetConfig.d)
    ap.add_argument("--p", type=int, default=DatasetConfig.p)
    ap.add_argument("--count", type=int, default=DatasetConfig.count)
    ap.add_argument("--mode", choices=("frey", "shifted"), default=DatasetConfig.mode)
    ap.add_argument("--seed", type=int, default=DatasetConfig.seed)
    args = ap.parse_args()
    cfg = DatasetConfig(args.d, args.p, args.count, args.mode, seed=args.seed)
    for path in make(cfg, args.out):
        print(path)
