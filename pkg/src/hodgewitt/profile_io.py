"""JSON profile documents.

Structure is checked with a JSON schema so that errors carry a pointer into
the document; semantic invariants are left to :func:`validate_profile`.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

import jsonschema

from .profile import CohomologyProfile, DominoTable, Flags, NumberTable, SlopeMultiset
from .rational import format_rational, parse_rational


class ProfileFormatError(ValueError):
    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer


_INT = {"type": "integer"}
_NAT = {"type": "integer", "minimum": 0}

PROFILE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "additionalProperties": False,
    "required": ["name", "dim", "flags", "cohomology"],
    "properties": {
        "name": {"type": "string"},
        "dim": _NAT,
        "flags": {
            "type": "object",
            "additionalProperties": False,
            "required": ["hodge_witt", "crystalline_torsion_free", "hodge_de_rham_degenerates"],
            "properties": {
                "hodge_witt": {"type": ["boolean", "null"]},
                "crystalline_torsion_free": {"type": "boolean"},
                "hodge_de_rham_degenerates": {"type": "boolean"},
            },
        },
        "cohomology": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["degree", "slopes"],
                "properties": {
                    "degree": _NAT,
                    "slopes": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "additionalProperties": False,
                            "required": ["slope", "mult"],
                            "properties": {
                                "slope": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
                                "mult": _INT,
                            },
                        },
                    },
                },
            },
        },
        "hodge": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["degree", "numbers"],
                "properties": {
                    "degree": _NAT,
                    "numbers": {"type": "array", "items": _INT},
                },
            },
        },
        "dominoes": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["i", "j", "T"],
                "properties": {"i": _INT, "j": _INT, "T": _INT},
            },
        },
    },
}

_VALIDATOR = jsonschema.Draft202012Validator(PROFILE_SCHEMA)


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path)


def _unique_degrees(items: list, where: str) -> None:
    seen = set()
    for k, item in enumerate(items):
        if item["degree"] in seen:
            raise ProfileFormatError(f"/{where}/{k}/degree", f"degree {item['degree']} repeated")
        seen.add(item["degree"])


def profile_from_dict(doc: Any) -> CohomologyProfile:
    errors = sorted(_VALIDATOR.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise ProfileFormatError(_pointer(err.absolute_path), err.message)
    _unique_degrees(doc["cohomology"], "cohomology")
    slopes = {}
    for k, item in enumerate(doc["cohomology"]):
        n = item["degree"]
        entries = []
        for e, s in enumerate(item["slopes"]):
            try:
                value = parse_rational(s["slope"])
            except ValueError as exc:
                raise ProfileFormatError(f"/cohomology/{k}/slopes/{e}/slope", str(exc)) from None
            entries.append((value, s["mult"]))
        slopes[n] = SlopeMultiset(n, tuple(entries))

    hodge = None
    if "hodge" in doc:
        _unique_degrees(doc["hodge"], "hodge")
        rows = {}
        for k, item in enumerate(doc["hodge"]):
            n = item["degree"]
            if len(item["numbers"]) != n + 1:
                raise ProfileFormatError(
                    f"/hodge/{k}/numbers", f"degree {n} needs {n + 1} numbers"
                )
            rows[n] = tuple(item["numbers"])
        hodge = NumberTable(rows)

    dominoes = None
    if "dominoes" in doc:
        values: dict[tuple[int, int], int] = {}
        for k, item in enumerate(doc["dominoes"]):
            key = (item["i"], item["j"])
            if key in values:
                raise ProfileFormatError(f"/dominoes/{k}", f"T^{key} repeated")
            values[key] = item["T"]
        dominoes = DominoTable(values)

    f = doc["flags"]
    return CohomologyProfile(
        name=doc["name"],
        dim=doc["dim"],
        slopes=slopes,
        hodge=hodge,
        dominoes=dominoes,
        flags=Flags(f["hodge_witt"], f["crystalline_torsion_free"], f["hodge_de_rham_degenerates"]),
    )


def profile_to_dict(p: CohomologyProfile) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "name": p.name,
        "dim": p.dim,
        "flags": {
            "hodge_witt": p.flags.hodge_witt,
            "crystalline_torsion_free": p.flags.crystalline_torsion_free,
            "hodge_de_rham_degenerates": p.flags.hodge_de_rham_degenerates,
        },
        "cohomology": [
            {
                "degree": n,
                "slopes": [{"slope": format_rational(s), "mult": m} for s, m in ms.entries],
            }
            for n, ms in p.slopes.items()
        ],
    }
    if p.hodge is not None:
        doc["hodge"] = [
            {"degree": n, "numbers": [int(v) for v in row]} for n, row in p.hodge.rows.items()
        ]
    if p.dominoes is not None:
        doc["dominoes"] = [
            {"i": i, "j": j, "T": t} for (i, j), t in p.dominoes.values.items()
        ]
    return doc


def dumps_profile(p: CohomologyProfile) -> str:
    return json.dumps(profile_to_dict(p), indent=2) + "\n"


def loads_profile(text: str) -> CohomologyProfile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProfileFormatError("", f"malformed JSON: {exc}") from None
    return profile_from_dict(doc)


def load_profile(path: Union[str, Path]) -> CohomologyProfile:
    return loads_profile(Path(path).read_text(encoding="utf-8"))
