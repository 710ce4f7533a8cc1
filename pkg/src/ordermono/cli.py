"""Command line front end.

Exit codes are a stable contract: 0 success, 2 parse or usage error,
3 dimension mismatch, 4 invalid multi-utility input, 5 infeasible
constraint, 6 failed internal verification (never expected).  Result
documents go to stdout (or --out), human summaries to stderr, so outputs
stay byte-identical for identical configurations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import jsonio
from .core_order import OrderRelation, relate
from .errors import (
    DimensionMismatchError,
    InfeasibleConstraintError,
    NotMultiUtilityError,
    VerificationError,
)
from .majorization import (
    Dist,
    EnergyFunction,
    equal_entropy_incomparable_pair,
    maxent_audit_rows,
    order_dense_witness_dim2,
    shannon_entropy,
    trumping_check,
    uncertainty_compare,
    upper_dense_witness,
)
from .monotones import (
    MonotoneClass,
    classify,
    eliminate_noninjective,
    injective_from_multi_utility,
    injective_multi_utility_swap,
    is_multi_utility,
    verify_representation,
)
from .separability import density_report

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_NOT_MULTI_UTILITY = 4
EXIT_INFEASIBLE = 5
EXIT_VERIFICATION = 6

SEED_ENV_VAR = "ORDERMONO_SEED"


@dataclass(frozen=True)
class RunConfig:
    """Everything that may influence a run; equal configs give equal bytes."""

    seed: int


def resolve_seed(flag_value: int, env: dict | None = None) -> int:
    """The environment variable wins over the command line flag."""
    environment = os.environ if env is None else env
    raw = environment.get(SEED_ENV_VAR)
    if raw is None:
        return flag_value
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from exc


def _load_json(path: str):
    return json.loads(Path(path).read_text())


def _parse_fraction(text: str) -> Fraction:
    return jsonio.str_to_fraction(text)


def _parse_dist(text: str) -> Dist:
    return Dist(tuple(_parse_fraction(part) for part in text.split(",")))


def _emit(doc, out_path: str | None) -> None:
    payload = json.dumps(doc, indent=2) + "\n"
    if out_path:
        Path(out_path).write_text(payload)
    else:
        sys.stdout.write(payload)


def _note(message: str) -> None:
    sys.stderr.write(message + "\n")


def _cmd_relate(args) -> int:
    preorder = jsonio.preorder_from_dict(_load_json(args.preorder))
    print(relate(preorder, args.x, args.y).value)
    return EXIT_OK


def _cmd_classify(args) -> int:
    preorder = jsonio.preorder_from_dict(_load_json(args.preorder))
    table = jsonio.value_table_from_dict(_load_json(args.table))
    cls = classify(preorder, table)
    print(f"class: {cls.label}")
    if preorder.n <= 6:
        report = verify_representation(preorder, table)
        print(f"represents_maximal: {str(report.represents).lower()}")
        print(
            "injectively_represents_maximal: "
            f"{str(report.injectively_represents).lower()}"
        )
    else:
        print("representation flags skipped (exhaustive check needs n <= 6)")
    return EXIT_OK


def _cmd_build_injective(args) -> int:
    preorder = jsonio.preorder_from_dict(_load_json(args.preorder))
    family = jsonio.multi_utility_from_list(_load_json(args.multi_utility))
    table = injective_from_multi_utility(preorder, family, _parse_fraction(args.r))
    cls = classify(preorder, table)
    if cls < MonotoneClass.INJECTIVE_MONOTONE:
        raise VerificationError(f"aggregate classifies as {cls.label}")
    _emit(jsonio.value_table_to_dict(table), args.out)
    _note(f"built injective monotone, classifies as {cls.label}")
    return EXIT_OK


def _cmd_build_multi(args) -> int:
    preorder = jsonio.preorder_from_dict(_load_json(args.preorder))
    family = jsonio.multi_utility_from_list(_load_json(args.multi_utility))
    result = injective_multi_utility_swap(
        preorder, family, _parse_fraction(args.r)
    )
    ok, pair = is_multi_utility(preorder, result)
    weakest = min(classify(preorder, f) for f in result.functions)
    if not ok or weakest < MonotoneClass.INJECTIVE_MONOTONE:
        raise VerificationError(
            f"swap family failed verification (pair {pair}, weakest {weakest.label})"
        )
    _emit(jsonio.multi_utility_to_list(result), args.out)
    _note(
        f"built multi-utility of {len(result)} injective monotones, "
        f"weakest member {weakest.label}"
    )
    return EXIT_OK


def _cmd_eliminate(args) -> int:
    preorder = jsonio.preorder_from_dict(_load_json(args.preorder))
    table = jsonio.value_table_from_dict(_load_json(args.table))
    result = eliminate_noninjective(preorder, table)
    cls = classify(preorder, result)
    if cls < MonotoneClass.INJECTIVE_MONOTONE:
        raise VerificationError(f"elimination output classifies as {cls.label}")
    _emit(jsonio.value_table_to_dict(result), args.out)
    _note(f"eliminated non-injective values, output classifies as {cls.label}")
    return EXIT_OK


def _cmd_density(args) -> int:
    preorder = jsonio.preorder_from_dict(_load_json(args.preorder))
    if args.subset is None:
        subset = list(preorder.elements())
    else:
        subset = [int(part) for part in args.subset.split(",") if part != ""]
    report = density_report(preorder, subset)
    _emit(jsonio.density_report_to_dict(report), args.out)
    return EXIT_OK


def _cmd_maxent_audit(args) -> int:
    energy = EnergyFunction(
        tuple(_parse_fraction(part) for part in args.energy.split(","))
    )
    report, rows = maxent_audit_rows(
        energy, _parse_fraction(args.level), _parse_fraction(args.step)
    )
    if args.csv:
        with open(args.csv, "w", newline="") as stream:
            jsonio.write_maxent_csv(stream, rows)
    summary = {
        "constraint_level": jsonio.fraction_to_str(report.constraint_level),
        "grid_step": jsonio.fraction_to_str(report.grid_step),
        "grid_size": report.grid_size,
        "maximal_count": len(report.maximal_set),
        "entropy_argmax_count": len(report.entropy_argmax),
        "missed_count": len(report.missed),
        "max_entropy": max(row.entropy for row in rows),
    }
    _emit(summary, args.out)
    return EXIT_OK


def _cmd_witness(args) -> int:
    if args.kind == "upper-dense":
        x = _parse_dist(args.x)
        y = _parse_dist(args.y)
        z = upper_dense_witness(x, y)
        if (
            uncertainty_compare(x, z) is not OrderRelation.INCOMPARABLE
            or uncertainty_compare(z, y) is not OrderRelation.STRICTLY_LESS
        ):
            raise VerificationError("upper dense witness failed re-verification")
        doc = {
            "witness": jsonio.dist_to_dict(z),
            "relation_to_x": OrderRelation.INCOMPARABLE.value,
            "relation_to_y": OrderRelation.STRICTLY_LESS.value,
            "verified": True,
        }
    elif args.kind == "order-dense-2":
        p = _parse_dist(args.p)
        q = _parse_dist(args.q)
        r = order_dense_witness_dim2(p, q)
        if (
            uncertainty_compare(p, r) is not OrderRelation.STRICTLY_LESS
            or uncertainty_compare(r, q) is not OrderRelation.STRICTLY_LESS
        ):
            raise VerificationError("midpoint witness failed re-verification")
        doc = {"witness": jsonio.dist_to_dict(r), "verified": True}
    elif args.kind == "equal-entropy":
        first, second = equal_entropy_incomparable_pair(
            args.entropy, args.outcomes, args.tol
        )
        if uncertainty_compare(first, second) is not OrderRelation.INCOMPARABLE:
            raise VerificationError("equal entropy pair failed re-verification")
        doc = {
            "first": jsonio.dist_to_dict(first),
            "second": jsonio.dist_to_dict(second),
            "entropy_first": shannon_entropy(first),
            "entropy_second": shannon_entropy(second),
            "relation": OrderRelation.INCOMPARABLE.value,
            "verified": True,
        }
    else:
        p = _parse_dist(args.p)
        q = _parse_dist(args.q)
        r = _parse_dist(args.r)
        base, catalyzed = trumping_check(p, q, r)
        doc = {"base": base.value, "catalyzed": catalyzed}
    _emit(doc, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordermono",
        description="monotones, multi-utilities and majorization on finite preorders",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help=f"run seed; the {SEED_ENV_VAR} environment variable overrides it",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("relate", help="relation between two elements")
    p.add_argument("preorder", help="preorder JSON file")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.set_defaults(handler=_cmd_relate)

    p = sub.add_parser("classify", help="monotone class of a value table")
    p.add_argument("preorder")
    p.add_argument("table", help="value table JSON file")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser(
        "build-injective", help="injective monotone from a multi-utility"
    )
    p.add_argument("preorder")
    p.add_argument("multi_utility", help="multi-utility JSON file")
    p.add_argument("--r", default="1/3", help="geometric ratio in (0, 1/2)")
    p.add_argument("--out", help="output path (defaults to stdout)")
    p.set_defaults(handler=_cmd_build_injective)

    p = sub.add_parser(
        "build-multi",
        help="multi-utility of injective monotones via transpositions",
    )
    p.add_argument("preorder")
    p.add_argument("multi_utility")
    p.add_argument("--r", default="1/3")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_build_multi)

    p = sub.add_parser(
        "eliminate", help="make a strict monotone injective by value bumps"
    )
    p.add_argument("preorder")
    p.add_argument("table")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_eliminate)

    p = sub.add_parser("density", help="density report for a subset")
    p.add_argument("preorder")
    p.add_argument("--subset", help="comma separated element indices; default all")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_density)

    p = sub.add_parser(
        "maxent-audit", help="entropy maximization vs order maximality on a line"
    )
    p.add_argument("--energy", required=True, help="three rationals, e.g. 1,-1,0")
    p.add_argument("--level", required=True, help="constraint level, exact rational")
    p.add_argument("--step", default="1/1000", help="grid step, exact rational")
    p.add_argument("--csv", help="write the full grid to this CSV file")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_maxent_audit)

    p = sub.add_parser("witness", help="constructive witnesses on distributions")
    kinds = p.add_subparsers(dest="kind", required=True)

    k = kinds.add_parser("upper-dense", help="z with x incomparable z, z below y")
    k.add_argument("--x", required=True, help="comma separated rationals")
    k.add_argument("--y", required=True)
    k.add_argument("--out")
    k.set_defaults(handler=_cmd_witness, kind="upper-dense")

    k = kinds.add_parser("order-dense-2", help="strictly-between point, 2 outcomes")
    k.add_argument("--p", required=True)
    k.add_argument("--q", required=True)
    k.add_argument("--out")
    k.set_defaults(handler=_cmd_witness, kind="order-dense-2")

    k = kinds.add_parser(
        "equal-entropy", help="incomparable pair at one entropy level"
    )
    k.add_argument("--entropy", type=float, required=True, help="target in nats")
    k.add_argument("--outcomes", type=int, default=3)
    k.add_argument("--tol", type=float, default=1e-9)
    k.add_argument("--out")
    k.set_defaults(handler=_cmd_witness, kind="equal-entropy")

    k = kinds.add_parser("trumping", help="can r catalyze p below q")
    k.add_argument("--p", required=True)
    k.add_argument("--q", required=True)
    k.add_argument("--r", required=True)
    k.add_argument("--out")
    k.set_defaults(handler=_cmd_witness, kind="trumping")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(seed=resolve_seed(args.seed))
        del config  # all current commands are deterministic
        return args.handler(args)
    except NotMultiUtilityError as exc:
        _note(f"error: {exc}")
        return EXIT_NOT_MULTI_UTILITY
    except DimensionMismatchError as exc:
        _note(f"error: {exc}")
        return EXIT_DIMENSION
    except InfeasibleConstraintError as exc:
        _note(f"error: {exc}")
        return EXIT_INFEASIBLE
    except VerificationError as exc:
        _note(f"internal verification failure: {exc}")
        return EXIT_VERIFICATION
    except (ValueError, TypeError, KeyError, OSError, json.JSONDecodeError) as exc:
        _note(f"error: {exc}")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
