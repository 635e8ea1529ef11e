"""JSON interchange for structures and semimodules.

A structure file is one JSON object with ``name``, ``size``, row-major
``add`` and ``mul`` tables, optional ``zero`` and ``one`` designations, and a
``claims`` list of law names the loader must verify. Semimodule files add
``msize``, ``madd``, ``mzero``, and ``action``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .corpus import claim_holds
from .errors import StructureError
from .tables import (
    CayleyStructure,
    FiniteSemimodule,
    check_laws,
    require_semimodule,
    verify_designations,
)

STRUCTURE_KEYS = {"name", "size", "add", "mul", "zero", "one", "claims"}
MODULE_KEYS = {"msize", "madd", "mzero", "action"}


def structure_to_json(s: CayleyStructure, claims=()) -> dict:
    doc = {
        "name": s.name,
        "size": s.size,
        "add": [list(r) for r in s.add],
        "mul": [list(r) for r in s.mul],
        "claims": sorted(claims),
    }
    if s.zero is not None:
        doc["zero"] = s.zero
    if s.one is not None:
        doc["one"] = s.one
    return doc


def semimodule_to_json(m: FiniteSemimodule, claims=()) -> dict:
    doc = structure_to_json(m.semiring, claims)
    doc["name"] = m.name or doc["name"]
    doc["msize"] = m.msize
    doc["madd"] = [list(r) for r in m.madd]
    doc["mzero"] = m.mzero
    doc["action"] = [list(r) for r in m.action]
    return doc


def _structure_from_doc(doc: dict) -> CayleyStructure:
    try:
        size = int(doc["size"])
        add = doc["add"]
        mul = doc["mul"]
    except (KeyError, TypeError, ValueError) as exc:
        raise StructureError(f"missing or malformed field: {exc}") from exc
    return CayleyStructure(
        size=size,
        add=add,
        mul=mul,
        zero=doc.get("zero"),
        one=doc.get("one"),
        name=str(doc.get("name", "")),
    )


def _verify_claims(s: CayleyStructure, claims) -> None:
    rep = check_laws(s)
    failures = []
    for claim in claims:
        try:
            ok = claim_holds(s, claim)
        except KeyError:
            raise StructureError(f"unknown claim {claim!r}")
        if not ok:
            failures.append((claim, rep.witnesses.get(claim, ())))
    if failures:
        lines = ", ".join(f"{c} (witness {w})" for c, w in failures)
        raise StructureError(f"claims failed: {lines}")


def ingest_doc(doc: dict) -> Union[CayleyStructure, FiniteSemimodule]:
    if not isinstance(doc, dict):
        raise StructureError("top level must be a JSON object")
    s = _structure_from_doc(doc)
    verify_designations(s)
    _verify_claims(s, doc.get("claims", ()))
    if not MODULE_KEYS & doc.keys():
        return s
    missing = MODULE_KEYS - doc.keys()
    if missing:
        raise StructureError(f"semimodule file missing {sorted(missing)}")
    m = FiniteSemimodule(
        semiring=s,
        msize=int(doc["msize"]),
        madd=doc["madd"],
        mzero=int(doc["mzero"]),
        action=doc["action"],
        name=str(doc.get("name", "")),
    )
    require_semimodule(m)
    return m


def ingest(path: Union[str, Path]) -> Union[CayleyStructure, FiniteSemimodule]:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"{path}: not valid JSON: {exc}") from exc
    try:
        return ingest_doc(doc)
    except StructureError as exc:
        raise StructureError(f"{path}: {exc}") from exc
