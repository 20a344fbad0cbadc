"""Valuation of j at q = 2*O_K for random Frey curves with 2 | abc.

Compares the computed value with the two closed forms 8 - 2p*v_q(abc)
and 4 - 2p*v_q(abc).
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from fermatiq.frey import FreyError, FreyInput, build_frey, v_q_of_j
from fermatiq.okarith import TWO_INERT, make_field, split_prime, valuation


@dataclass(frozen=True)
class JConfig:
    samples: int = 200
    exponents: tuple[int, ...] = (17, 19, 23)
    max_power_of_two: int = 3
    seed: int = 1


def sample(rng, K, p, k):
    (q,) = split_prime(K, 2)
    while True:
        t = [K(rng.randint(-40, 40), rng.randint(-40, 40)) for _ in range(3)]
        if any(q.divides(e) for e in t):
            continue
        t[rng.randrange(2)] *= 2**k
        try:
            return FreyInput(*t, p)
        except FreyError:
            continue


def run(cfg: JConfig) -> Counter:
    rng = random.Random(cfg.seed)
    tally = Counter()
    for i in range(cfg.samples):
        K = make_field(TWO_INERT[i % len(TWO_INERT)])
        (q,) = split_prime(K, 2)
        p = cfg.exponents[i % len(cfg.exponents)]
        inp = sample(rng, K, p, rng.randint(1, cfg.max_power_of_two))
        v = v_q_of_j(build_frey(inp), q)
        m = valuation(inp.abc, q)
        tally["8 - 2pv"] += v == 8 - 2 * p * m
        tally["4 - 2pv"] += v == 4 - 2 * p * m
    return tally


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=JConfig.samples)
    ap.add_argument("--seed", type=int, default=JConfig.seed)
    args = ap.parse_args()
    cfg = JConfig(samples=args.samples, seed=args.seed)
    for form, hits in run(cfg).items():
        print(f"v_q(j) = {form}: {hits}/{cfg.samples}")
