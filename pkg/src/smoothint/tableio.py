"""Reading and writing integral tables.

Two on-disk forms:

* JSON: a meta block (bump width, coefficient family descriptor, row count,
  format version) plus the rows.  Floats are written with Python's shortest
  round-trip repr, so save, load, save produces byte-identical files.
* CSV: header ``N,I`` and one row per line at 17 significant digits, which
  is enough to reproduce every double exactly.  The CSV form carries no
  metadata, so tables loaded from it have no family or width attached.

All files are written with newline-only line endings.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .coefficients import Canonical, CoefficientFamily, ExpPoly, Generalized, Trig
from .integral_map import IntegralTable

__all__ = [
    "FORMAT_VERSION",
    "family_descriptor",
    "family_from_descriptor",
    "save_table_json",
    "load_table_json",
    "save_table_csv",
    "load_table_csv",
    "load_table",
]

FORMAT_VERSION = 1


def family_descriptor(family: CoefficientFamily) -> dict:
    """JSON-ready tagged description of a coefficient family."""
    if isinstance(family, Canonical):
        return {"kind": "canonical"}
    if isinstance(family, Generalized):
        return {
            "kind": "generalized",
            "alpha": family.alpha,
            "beta": family.beta,
            "gamma": family.gamma,
        }
    if isinstance(family, ExpPoly):
        return {"kind": "exppoly", "p": family.p}
    if isinstance(family, Trig):
        return {"kind": "trig"}
    raise TypeError(f"unknown coefficient family {type(family).__name__}")


def family_from_descriptor(descriptor: dict) -> CoefficientFamily:
    """Inverse of :func:`family_descriptor`."""
    if not isinstance(descriptor, dict) or "kind" not in descriptor:
        raise ValueError(f"malformed family descriptor: {descriptor!r}")
    kind = descriptor["kind"]
    if kind == "canonical":
        return Canonical()
    if kind == "generalized":
        return Generalized(
            alpha=float(descriptor["alpha"]),
            beta=float(descriptor["beta"]),
            gamma=float(descriptor["gamma"]),
        )
    if kind == "exppoly":
        return ExpPoly(p=float(descriptor["p"]))
    if kind == "trig":
        return Trig()
    raise ValueError(f"unknown family kind {kind!r}")


def save_table_json(table: IntegralTable, path) -> None:
    """Write a table with its metadata; requires known provenance."""
    if table.family is None or table.delta is None:
        raise ValueError("table has no family/width metadata; save it as CSV instead")
    document = {
        "meta": {
            "delta": table.delta,
            "family": family_descriptor(table.family),
            "n_max": table.n_max,
            "format_version": FORMAT_VERSION,
        },
        "rows": [[int(n), float(v)] for n, v in zip(table.ns, table.values)],
    }
    text = json.dumps(document, indent=2, sort_keys=True) + "\n"
    with open(path, "w", newline="") as handle:
        handle.write(text)


def load_table_json(path) -> IntegralTable:
    """Load a JSON table, re-validating rows against the closed form."""
    with open(path) as handle:
        document = json.load(handle)
    try:
        meta = document["meta"]
        if meta["format_version"] != FORMAT_VERSION:
            raise ValueError(f"unsupported format version {meta['format_version']!r}")
        family = family_from_descriptor(meta["family"])
        delta = float(meta["delta"])
        n_max = int(meta["n_max"])
        rows = document["rows"]
        ns = np.array([row[0] for row in rows], dtype=int)
        values = np.array([row[1] for row in rows], dtype=float)
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed table file {path}: {exc}") from exc
    return IntegralTable(delta=delta, family=family, n_max=n_max, ns=ns, values=values)


def save_table_csv(table: IntegralTable, path) -> None:
    """Write rows as ``N,I`` lines at 17 significant digits."""
    lines = ["N,I"]
    for n, value in zip(table.ns, table.values):
        lines.append(f"{int(n)},{float(value):.17g}")
    with open(path, "w", newline="") as handle:
        handle.write("\n".join(lines) + "\n")


def load_table_csv(path) -> IntegralTable:
    """Load a CSV table; the result carries no family or width metadata."""
    with open(path) as handle:
        lines = [line.strip() for line in handle if line.strip()]
    if not lines or lines[0] != "N,I":
        raise ValueError(f"{path} is not a table file (missing N,I header)")
    ns = []
    values = []
    for line in lines[1:]:
        try:
            n_text, value_text = line.split(",")
            ns.append(int(n_text))
            values.append(float(value_text))
        except ValueError as exc:
            raise ValueError(f"malformed table row {line!r} in {path}") from exc
    if not ns:
        raise ValueError(f"{path} contains no rows")
    return IntegralTable(
        delta=None,
        family=None,
        n_max=len(ns),
        ns=np.array(ns, dtype=int),
        values=np.array(values, dtype=float),
    )


def load_table(path) -> IntegralTable:
    """Load either on-disk form, sniffing JSON by its leading brace."""
    head = Path(path).read_text()[:64].lstrip()
    if head.startswith("{"):
        return load_table_json(path)
    return load_table_csv(path)
