"""Newform data files: one JSON document per newform, a directory per dataset.

Schema::

    {"d": 11,
     "level": {"generator": [2, 0], "exponent": 4},
     "min_poly": [c0, c1, ..., 1],
     "eigenvalues": [{"prime": "3.3.0.1", "a": [a0, a1, ...]}, ...],
     "name": "optional", "provenance": "optional"}
"""

from __future__ import annotations

import json
from pathlib import Path

from .hecke import HeckeField
from .okarith import make_field, prime_from_label
from .sieve import NewformRecord, SieveError

REQUIRED_KEYS = ("d", "level", "min_poly", "eigenvalues")


class DatasetError(SieveError):
    pass


def newform_from_dict(doc: dict, name: str = "") -> NewformRecord:
    missing = [k for k in REQUIRED_KEYS if k not in doc]
    if missing:
        raise DatasetError(f"{name}: missing keys {missing}")
    try:
        K = make_field(doc["d"])
        gen = doc["level"]["generator"]
        level_gen = K(int(gen[0]), int(gen[1]))
        exponent = int(doc["level"]["exponent"])
        F = HeckeField(tuple(int(c) for c in doc["min_poly"]))
        eig = {}
        primes = {}
        for row in doc["eigenvalues"]:
            label = row["prime"]
            primes[label] = prime_from_label(K, label)
            if label in eig:
                raise DatasetError(f"{name}: duplicate eigenvalue at {label}")
            eig[label] = F(tuple(int(c) for c in row["a"]))
    except DatasetError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DatasetError(f"{name}: {exc}") from None
    record = NewformRecord(K.d, level_gen, exponent, F, eig, doc.get("name", name))
    try:
        record.validate(primes)
    except SieveError as exc:
        raise DatasetError(f"{name}: {exc}") from None
    return record


def newform_to_dict(f: NewformRecord, provenance: str | None = None) -> dict:
    g = f.level_generator
    doc = {
        "d": f.field_d,
        "level": {"generator": [g.x, g.y], "exponent": f.level_exponent},
        "min_poly": list(f.hecke_field.min_poly),
        "eigenvalues": [
            {"prime": label, "a": list(a.coeffs)}
            for label, a in sorted(f.eigenvalues.items(), key=lambda kv: _label_key(kv[0]))
        ],
    }
    if f.name:
        doc["name"] = f.name
    if provenance:
        doc["provenance"] = provenance
    return doc


def _label_key(label: str):
    l, n, x, y = (int(t) for t in label.split("."))
    return (n, label)


def load_newform(path: Path) -> NewformRecord:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DatasetError(f"{path.name}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise DatasetError(f"{path.name}: top level must be an object")
    return newform_from_dict(doc, name=doc.get("name", path.stem))


def load_dataset(directory: Path, d: int | None = None) -> list[NewformRecord]:
    """All ``*.json`` newforms in a directory, in filename order."""
    directory = Path(directory)
    if not directory.is_dir():
        raise DatasetError(f"{directory} is not a directory")
    records = [load_newform(p) for p in sorted(directory.glob("*.json"))]
    if not records:
        raise DatasetError("no newforms")
    if d is not None:
        wrong = [r.name for r in records if r.field_d != d]
        if wrong:
            raise DatasetError(f"newforms {wrong} are not over Q(sqrt(-{d}))")
    return records


def save_newform(f: NewformRecord, path: Path, provenance: str | None = None) -> None:
    Path(path).write_text(json.dumps(newform_to_dict(f, provenance), indent=2) + "\n")
