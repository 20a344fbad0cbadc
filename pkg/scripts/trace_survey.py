"""Frey-curve traces for random coprime triples, cross-checked by two point counters.

Writes one CSV row per (triple, prime) and prints a per-prime summary.
"""

import argparse
import csv
import random
import sys
import time
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass

from fermatiq.frey import FreyError, FreyInput, build_frey, hasse_bound, reduction_type, trace_by_character_sum
from fermatiq.okarith import make_field, primes_of_norm_up_to, split_prime


@dataclass(frozen=True)
class SurveyConfig:
    d: int = 43
    p: int = 17
    triples: int = 20
    max_norm: int = 50
    coord_size: int = 25
    even: bool = True
    seed: int = 0


def random_triple(rng, K, cfg):
    q = split_prime(K, 2)[0]
    while True:
        t = [K(rng.randint(-cfg.coord_size, cfg.coord_size), rng.randint(-cfg.coord_size, cfg.coord_size)) for _ in range(3)]
        if cfg.even:
            if any(q.divides(e) for e in t):
                continue
            t[0] = 2 * t[0]
        try:
            return FreyInput(*t, cfg.p)
        except FreyError:
            continue


def run(cfg: SurveyConfig, out=sys.stdout) -> dict:
    K = make_field(cfg.d)
    rng = random.Random(cfg.seed)
    primes = primes_of_norm_up_to(K, cfg.max_norm, odd_only=True)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["triple", "prime_label", "norm", "kind", "a_l"])
    traces = defaultdict(Counter)
    disagreements = 0
    start = time.perf_counter()
    for i in range(cfg.triples):
        inp = random_triple(rng, K, cfg)
        E = build_frey(inp)
        for P in primes:
            data = reduction_type(E, P)
            if data.kind == "good":
                disagreements += data.a_l != trace_by_character_sum(E, P)
                assert abs(data.a_l) <= hasse_bound(P.norm)
                traces[P.label][data.a_l] += 1
            writer.writerow([i, P.label, P.norm, data.kind, "" if data.a_l is None else data.a_l])
    summary = {
        "config": asdict(cfg),
        "seconds": round(time.perf_counter() - start, 3),
        "oracle_disagreements": disagreements,
        "distinct_traces": {P.label: sorted(traces[P.label]) for P in primes if P.label in traces},
    }
    return summary


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in asdict(SurveyConfig()).items():
        kind = (lambda s: s.lower() in ("1", "true", "yes")) if isinstance(default, bool) else type(default)
        ap.add_argument(f"--{name.replace('_', '-')}", type=kind, default=default)
    ap.add_argument("--csv", help="write rows here instead of stdout")
    args = vars(ap.parse_args())
    path = args.pop("csv")
    cfg = SurveyConfig(**args)
    if path:
        with open(path, "w", newline="") as fh:
            summary = run(cfg, fh)
    else:
        summary = run(cfg)
    print(f"# {summary['seconds']}s, {summary['oracle_disagreements']} disagreements", file=sys.stderr)
    for label, values in summary["distinct_traces"].items():
        print(f"# {label}: {values}", file=sys.stderr)
