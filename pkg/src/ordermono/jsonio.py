"""JSON and CSV wire formats.

Rationals travel as strings ("3/4", "2", "0.25" all parse exactly);
preorders as {"n", "pairs", "labels"?}; value tables as {"values": [...]};
multi-utilities as arrays of value tables; increasing families as
{"sets": [[...], ...]}; distributions as {"probs": [...]}.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from typing import IO, Iterable

from .core_order import FinitePreorder, from_relation_pairs
from .majorization import Dist, GridRow
from .monotones import IncreasingFamily, MultiUtility, ValueTable
from .separability import DensityReport


def fraction_to_str(value: Fraction) -> str:
    return str(value)


def str_to_fraction(text) -> Fraction:
    if isinstance(text, float):
        raise ValueError("rationals must be strings or integers, not floats")
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rational from {text!r}") from exc


def preorder_to_dict(preorder: FinitePreorder) -> dict:
    pairs = [
        [x, y]
        for x in preorder.elements()
        for y in preorder.elements()
        if x != y and preorder.le(x, y)
    ]
    doc: dict = {"n": preorder.n, "pairs": pairs}
    if preorder.labels is not None:
        doc["labels"] = list(preorder.labels)
    return doc


def preorder_from_dict(doc: dict) -> FinitePreorder:
    if not isinstance(doc, dict) or "n" not in doc or "pairs" not in doc:
        raise ValueError('preorder document needs "n" and "pairs"')
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError('"n" must be a non-negative integer')
    pairs = []
    for entry in doc["pairs"]:
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(v, int) for v in entry)
        ):
            raise ValueError(f"malformed pair {entry!r}")
        pairs.append((entry[0], entry[1]))
    labels = doc.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or not all(isinstance(s, str) for s in labels)
    ):
        raise ValueError('"labels" must be a list of strings')
    return from_relation_pairs(n, pairs, labels)


def value_table_to_dict(table: ValueTable) -> dict:
    return {"values": [fraction_to_str(v) for v in table.values]}


def value_table_from_dict(doc: dict) -> ValueTable:
    if not isinstance(doc, dict) or "values" not in doc:
        raise ValueError('value table document needs "values"')
    return ValueTable(tuple(str_to_fraction(v) for v in doc["values"]))


def multi_utility_to_list(family: MultiUtility) -> list:
    return [value_table_to_dict(f) for f in family.functions]


def multi_utility_from_list(doc: list) -> MultiUtility:
    if not isinstance(doc, list) or not doc:
        raise ValueError("multi-utility document must be a non-empty array")
    return MultiUtility(tuple(value_table_from_dict(entry) for entry in doc))


def family_to_dict(family: IncreasingFamily) -> dict:
    return {"sets": [sorted(members) for members in family.sets]}


def family_from_dict(doc: dict, n: int) -> IncreasingFamily:
    if not isinstance(doc, dict) or "sets" not in doc:
        raise ValueError('increasing family document needs "sets"')
    return IncreasingFamily(
        n=n, sets=tuple(frozenset(members) for members in doc["sets"])
    )


def dist_to_dict(dist: Dist) -> dict:
    return {"probs": [fraction_to_str(p) for p in dist.probs]}


def dist_from_dict(doc: dict) -> Dist:
    if not isinstance(doc, dict) or "probs" not in doc:
        raise ValueError('distribution document needs "probs"')
    return Dist(tuple(str_to_fraction(p) for p in doc["probs"]))


def density_report_to_dict(report: DensityReport) -> dict:
    return {
        "order_dense": report.order_dense,
        "debreu_dense": report.debreu_dense,
        "upper_dense": report.upper_dense,
        "debreu_upper_dense": report.debreu_upper_dense,
        "first_violation": (
            list(report.first_violation) if report.first_violation else None
        ),
    }


MAXENT_CSV_HEADER = ("t", "p1", "p2", "p3", "entropy", "is_maximal", "is_entropy_argmax")


def write_maxent_csv(stream: IO[str], rows: Iterable[GridRow]) -> None:
    """One row per grid point; rationals exact, entropy as shortest float repr."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(MAXENT_CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                fraction_to_str(row.t),
                *(fraction_to_str(p) for p in row.dist.probs),
                repr(row.entropy),
                int(row.is_maximal),
                int(row.is_entropy_argmax),
            ]
        )
