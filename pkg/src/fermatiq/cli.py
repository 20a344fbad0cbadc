"""Command-line interface.

Exit codes: 0 claim verified / all eliminated, 1 survivors or failed
verification, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from .dataset import DatasetError, load_dataset
from .frey import FreyError, FreyInput, build_frey, reduction_type
from .okarith import (
    CLASS_NUMBER_ONE,
    FieldError,
    make_field,
    primes_of_norm_up_to,
    split_prime,
    verify_representatives,
    cokernel_phi,
)
from .sieve import (
    DEFAULT_MAX_NORM,
    SieveConfig,
    SieveError,
    default_primes,
    exponent_floor,
    run_sieve,
)
from .tables import TABLE1_CONDUCTOR_EXPONENT, TABLE1_REPS, TABLE2_TORSION, table1_representatives
from .units import classify_trivial, solution_classes, unit_search

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
DATA_ENV = "FERMATIQ_DATA"


class InputError(Exception):
    pass


def _structure(factors) -> str:
    return " + ".join(f"Z/{n}" for n in factors) or "0"


def _need_two_inert(d: int) -> None:
    if d not in TABLE1_REPS:
        raise InputError(f"d={d}: 2 is not inert in Q(sqrt(-{d})); expected one of {sorted(TABLE1_REPS)}")


def _element(K, text: str):
    """'x' or 'x,y' meaning x + y*theta."""
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"cannot parse element {text!r}; use x or x,y") from None
    if len(parts) not in (1, 2):
        raise InputError(f"cannot parse element {text!r}; use x or x,y")
    return K(*parts)


def table1_row(d: int) -> dict:
    K = make_field(d)
    report = cokernel_phi(K)
    reps = table1_representatives(d)
    return {
        "d": d,
        "unit_group": list(report.group_structure),
        "unit_group_order": report.group_order,
        "mod_squares": list(report.quotient_structure),
        "image_order": report.image_order,
        "cokernel": list(report.cokernel_structure),
        "representatives": [str(r) for r in reps],
        "verified": verify_representatives(K, reps),
        "v_q_conductor": TABLE1_CONDUCTOR_EXPONENT[d],
    }


def cmd_fields(args) -> int:
    rows = []
    for d in CLASS_NUMBER_ONE:
        K = make_field(d)
        (kind,) = {P.split_type for P in split_prime(K, 2)}
        rows.append({"d": d, "theta": K.theta_kind, "disc": K.discriminant, "units": K.unit_count, "two": kind})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'d':>4} {'disc':>6} {'units':>5} {'2 is':<9} theta")
        for r in rows:
            print(f"{r['d']:>4} {r['disc']:>6} {r['units']:>5} {r['two']:<9} {r['theta']}")
    return EXIT_OK


def cmd_table1(args) -> int:
    if args.all:
        ds = sorted(TABLE1_REPS)
    elif args.d is not None:
        _need_two_inert(args.d)
        ds = [args.d]
    else:
        raise InputError("give --d or --all")
    rows = [table1_row(d) for d in ds]
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            verdict = "VERIFIED" if r["verified"] else "FAILED"
            print(
                f"d={r['d']}: (O_K/q^3)* = {_structure(r['unit_group'])} (order {r['unit_group_order']}), "
                f"image Z/{r['image_order']}, coker {_structure(r['cokernel'])}, reps {verdict}"
            )
            print(f"    reps: {', '.join(r['representatives'])}; v_q(N_E) <= {r['v_q_conductor']}")
    return EXIT_OK if all(r["verified"] for r in rows) else EXIT_FAIL


def trace_rows(d: int, a: str, b: str, c: str, p: int, max_norm: int) -> list[dict]:
    K = make_field(d)
    try:
        inp = FreyInput(_element(K, a), _element(K, b), _element(K, c), p)
    except FreyError as exc:
        raise InputError(str(exc)) from None
    E = build_frey(inp)
    rows = []
    for P in primes_of_norm_up_to(K, max_norm, odd_only=True):
        data = reduction_type(E, P)
        rows.append({"prime_label": P.label, "norm": P.norm, "kind": data.kind, "a_l": "" if data.a_l is None else data.a_l})
    return rows


def cmd_traces(args) -> int:
    rows = trace_rows(args.d, args.a, args.b, args.c, args.p, args.max_norm)
    if args.json:
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    w = csv.DictWriter(sys.stdout, fieldnames=["prime_label", "norm", "kind", "a_l"], lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return EXIT_OK


def _dataset_dir(args) -> Path:
    root = args.dataset or os.environ.get(DATA_ENV)
    if not root:
        raise InputError(f"no dataset: pass --dataset or set {DATA_ENV}")
    root = Path(root)
    sub = root / f"d{args.d}"
    return sub if sub.is_dir() else root


def cmd_sieve(args) -> int:
    _need_two_inert(args.d)
    newforms = load_dataset(_dataset_dir(args), d=args.d)
    K = make_field(args.d)
    p_floor = args.p_floor if args.p_floor is not None else exponent_floor(TABLE2_TORSION[args.d])
    reports = []
    for f in newforms:
        config = SieveConfig(default_primes(K, f.level, args.max_norm), p_floor, args.max_norm)
        reports.append(run_sieve([f], config))
    entries = [e for r in reports for e in r.entries]
    ok = all(e.eliminated for e in entries)
    if args.json:
        doc = {
            "d": args.d,
            "p_floor": p_floor,
            "max_norm": args.max_norm,
            "newforms": [dict(e.as_dict(), S=list(r.S_labels)) for r in reports for e in r.entries],
            "all_eliminated": ok,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"d={args.d} p_floor={p_floor} S: odd primes of norm < {args.max_norm} prime to the level")
        for e in entries:
            status = "eliminated" if e.eliminated else ("NOT eliminated (C=0)" if e.C_value == 0 else "SURVIVORS")
            support = "{" + ",".join(map(str, e.support)) + "}"
            surv = ",".join(map(str, e.surviving_primes)) or "-"
            print(f"{e.name}: C={e.C_value} support={support} survivors={surv} {status}")
        print("all newforms eliminated" if ok else "elimination incomplete")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bound(args) -> int:
    if args.d not in TABLE2_TORSION:
        raise InputError(f"d={args.d}: no torsion data; expected one of {sorted(TABLE2_TORSION)}")
    floor = exponent_floor(TABLE2_TORSION[args.d])
    if args.json:
        print(json.dumps({"d": args.d, "torsion": list(TABLE2_TORSION[args.d]), "p_floor": floor}))
    else:
        print(floor)
    return EXIT_OK


def cmd_units(args) -> int:
    K = make_field(args.d)
    if args.p_max < 5:
        raise InputError("--p-max must be at least 5")
    sols = unit_search(K, args.p_max)
    classes = solution_classes(sols)
    if args.json:
        doc = [
            {"d": args.d, "triple": [[x, y] for x, y in key], "exponents": ps,
             "class": classify_trivial(tuple(K(x, y) for x, y in key), ps[0])}
            for key, ps in classes.items()
        ]
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    print("field\tp\ttriple\tclassification")
    if not sols:
        print(f"{K}\t-\tnone\t-")
    for s in sols:
        triple = "(" + ", ".join(map(str, s.triple)) + ")"
        print(f"{K}\t{s.exponent}\t{triple}\t{classify_trivial(s.triple, s.exponent)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fermatiq", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(func=func)
        return sp

    add("fields", cmd_fields, "list the class-number-one fields")

    sp = add("table1", cmd_table1, "unit-scaling cokernel and representative check")
    sp.add_argument("--d", type=int)
    sp.add_argument("--all", action="store_true")

    sp = add("traces", cmd_traces, "Frey curve traces of Frobenius as CSV")
    sp.add_argument("--d", type=int, required=True)
    for name in ("a", "b", "c"):
        sp.add_argument(f"--{name}", required=True, help="x or x,y meaning x + y*theta")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-norm", type=int, default=DEFAULT_MAX_NORM)

    sp = add("sieve", cmd_sieve, "newform elimination over a dataset directory")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--dataset", help=f"directory of newform JSON files (default: ${DATA_ENV})")
    sp.add_argument("--max-norm", type=int, default=DEFAULT_MAX_NORM)
    sp.add_argument("--p-floor", type=int)

    sp = add("bound", cmd_bound, "smallest admissible exponent from the torsion data")
    sp.add_argument("--d", type=int, required=True)

    sp = add("units", cmd_units, "Fermat solutions in units")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--p-max", type=int, default=23)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FieldError, DatasetError, SieveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
