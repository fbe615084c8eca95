"""Command-line interface: ``ueq <subcommand> ...``.

Exit status: 0 on success, 1 when a verification check fails, 2 on usage
or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import checks as K
from . import classes as C
from . import instances as I
from . import maps as M
from . import pseudometrics as P
from . import relations as R
from . import topology as T
from .dot import emit_dot
from .errors import SchemaError, UeqError, UnknownCheckId, ValidationError

MAP_PREDICATES = {
    "continuous": M.is_continuous,
    "open": M.is_open_map,
    "u-surjection": M.is_u_surjection,
    "u-equivalence": M.is_u_equivalence,
    "embedding": M.is_u_embedding,
    "transverse": lambda f: M.is_transverse(f.source, f.values),
}
SPACE_PREDICATES = {
    "rich": C.is_rich,
    "separated": C.is_separated,
    "connected": T.is_connected,
}
SUBSET_PREDICATES = {
    "dense": T.is_dense,
    "u-open": M.is_u_open_subset,
}
METRIC_PREDICATES = ("transitive", "r-transitive")


class UsageError(Exception):
    pass


def _load(path, *kinds):
    inst = I.load(path)
    if kinds and inst.kind not in kinds:
        raise ValidationError(f"{path}: expected kind {' or '.join(kinds)}, got {inst.kind}")
    return inst


def _emit(doc) -> None:
    print(I.dumps(doc))


def _blocks(u: R.EquivRel) -> list[list[int]]:
    return [sorted(b) for b in u.blocks()]


def _topology_of(inst) -> T.FiniteTopology:
    if inst.kind == "space":
        return T.induce_topology(inst.value)
    if inst.kind == "family":
        return P.topology_from_family(inst.value)
    if inst.kind == "topology":
        return inst.value
    raise ValidationError(f"no topology for an instance of kind {inst.kind}")


def cmd_validate(args) -> int:
    inst = I.load(args.file)
    print(f"ok: {inst.kind}")
    return 0


def cmd_meet(args) -> int:
    c = _load(args.file, "space").value
    _emit({"carrier": c.n, "blocks": _blocks(C.bottom(c))})
    return 0


def cmd_generate(args) -> int:
    _emit(I.members_doc(_load(args.file, "space").value))
    return 0


def cmd_induce(args) -> int:
    f = _load(args.file, "map").value
    _emit(I.members_doc(C.induced_class([(f.values, f.target)])))
    return 0


def cmd_restrict(args) -> int:
    c, a = _load(args.file, "subset").value
    _emit(I.members_doc(C.relative(c, a)))
    return 0


def cmd_product(args) -> int:
    factors = [_load(p, "space").value for p in args.files]
    prod = C.product(factors)
    _emit(I.space_doc(prod, factors=[c.n for c in factors]))
    return 0


def _write_dot(t: T.FiniteTopology, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_dot(t))


def cmd_topology(args) -> int:
    t = _topology_of(_load(args.file))
    _emit(I.topology_doc(t))
    if args.dot:
        _write_dot(t, args.dot)
    return 0


def cmd_dot(args) -> int:
    t = _topology_of(_load(args.file))
    if args.dot:
        _write_dot(t, args.dot)
    else:
        sys.stdout.write(emit_dot(t))
    return 0


def cmd_check(args) -> int:
    pred = args.predicate
    if pred in MAP_PREDICATES:
        if not args.map:
            raise UsageError(f"check {pred} needs --map")
        value = MAP_PREDICATES[pred](_load(args.map, "map").value)
    elif pred in SPACE_PREDICATES:
        if not args.space:
            raise UsageError(f"check {pred} needs --space")
        value = SPACE_PREDICATES[pred](_load(args.space, "space").value)
    elif pred in SUBSET_PREDICATES:
        if not args.subset:
            raise UsageError(f"check {pred} needs --subset")
        c, a = _load(args.subset, "subset").value
        if pred == "u-open" and not a:
            raise ValidationError("u-open needs a nonempty subset")
        value = SUBSET_PREDICATES[pred](c, a)
    elif pred in METRIC_PREDICATES:
        if not args.metric:
            raise UsageError(f"check {pred} needs --metric")
        m = _load(args.metric, "metric").value
        if pred == "transitive":
            value = P.is_transitive(m)
        else:
            if args.radius is None:
                raise UsageError("check r-transitive needs --radius")
            value = P.is_r_transitive(m, Fraction(args.radius))
    else:
        known = sorted([*MAP_PREDICATES, *SPACE_PREDICATES, *SUBSET_PREDICATES, *METRIC_PREDICATES])
        raise UsageError(f"unknown predicate {pred!r}; choose from {', '.join(known)}")
    print("true" if value else "false")
    return 0


def cmd_verify(args) -> int:
    if args.all:
        ids = list(K.CHECKS)
    else:
        ids = args.check or []
    cfg = K.HarnessConfig(
        seed=args.seed, trials=args.trials, max_carrier=args.max_carrier
    )
    start = time.perf_counter()
    report = K.run_checks(ids, cfg)
    elapsed = time.perf_counter() - start
    if args.json:
        print(report.to_json())
    else:
        for c in report.checks:
            status = "PASS" if c.ok else "FAIL"
            print(f"{status} {c.check_id:7s} passes={c.passes} failures={c.failures} vacuous={c.vacuous}")
            if c.counterexample is not None:
                print(f"  counterexample: {json.dumps(c.counterexample, sort_keys=True)}")
    # wall time stays off stdout so reports are byte-identical across runs
    print(f"{len(report.checks)} checks, seed {cfg.seed}, {elapsed:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ueq", description="Exact computation with U-equivalence spaces on finite sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate an instance document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("meet", help="meet of the generators of a space")
    p.add_argument("file")
    p.set_defaults(func=cmd_meet)

    p = sub.add_parser("generate", help="list every member of the generated class")
    p.add_argument("file")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("induce", help="class induced on the source of a map")
    p.add_argument("file")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("restrict", help="relative class on a subset")
    p.add_argument("file")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("product", help="product of spaces")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("topology", help="induced topology of a space, metric family or topology document")
    p.add_argument("file")
    p.add_argument("--dot", metavar="PATH", help="also write the specialization preorder as DOT")
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("dot", help="DOT graph of the specialization preorder")
    p.add_argument("file")
    p.add_argument("--dot", metavar="PATH", help="write to PATH instead of stdout")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("check", help="evaluate a predicate; prints true or false")
    p.add_argument("predicate")
    p.add_argument("--map")
    p.add_argument("--space")
    p.add_argument("--subset")
    p.add_argument("--metric")
    p.add_argument("--radius", help="radius for r-transitive, e.g. 3/2")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run the property checks")
    p.add_argument("--all", action="store_true", help="run every registered check")
    p.add_argument("--check", action="append", metavar="ID", help="check id such as P2.6 (repeatable)")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--max-carrier", type=int, default=6)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--list", action="store_true", help="list check ids and exit")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.list:
        for pc in K.CHECKS.values():
            print(f"{pc.id:7s} {pc.description}")
        return 0
    try:
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"ueq: error: {e}", file=sys.stderr)
        return 2
    except (SchemaError, ValidationError, UnknownCheckId) as e:
        print(f"ueq: {e}", file=sys.stderr)
        return 2
    except (UeqError, ValueError, IndexError, OSError) as e:
        print(f"ueq: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
