"""JSON interchange format for permutation groups given by generators.

A group file is a UTF-8 JSON object
``{"name": optional string, "degree": n, "generators": [[i0,...,i_{n-1}], ...]}``
with 0-indexed image arrays.  Serialization emits keys in the order name,
degree, generators, with no insignificant whitespace, so files are bit-exact
reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import FormatError
from .perm import DEFAULT_MAX_ORDER, FiniteGroup, _validate_images, closure


@dataclass
class GroupFile:
    degree: int
    generators: list[list[int]]
    name: str | None = None


def parse_group_file(text: str) -> GroupFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise FormatError("top-level value must be an object")
    degree = obj.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise FormatError("'degree' must be a positive integer")
    gens = obj.get("generators")
    if not isinstance(gens, list):
        raise FormatError("'generators' must be a list of image arrays")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError("'name' must be a string when present")
    out: list[list[int]] = []
    for g in gens:
        if not isinstance(g, list) or not all(
            isinstance(i, int) and not isinstance(i, bool) for i in g
        ):
            raise FormatError("each generator must be a list of integers")
        if len(g) != degree:
            raise FormatError(
                f"generator has {len(g)} images but degree is {degree}"
            )
        _validate_images(g, degree)  # MalformedPermutation on non-bijections
        out.append(list(g))
    return GroupFile(degree=degree, generators=out, name=name)


def serialize_group_file(f: GroupFile) -> str:
    obj: dict = {}
    if f.name is not None:
        obj["name"] = f.name
    obj["degree"] = f.degree
    obj["generators"] = f.generators
    return json.dumps(obj, separators=(",", ":"))


def group_to_file(G: FiniteGroup) -> GroupFile:
    gens = [G.elements[g].tolist() for g in G.generators]
    return GroupFile(degree=G.degree, generators=gens, name=G.name)


def load_group(path: str | Path, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    gf = parse_group_file(Path(path).read_text(encoding="utf-8"))
    return closure(gf.degree, gf.generators, max_order=max_order, name=gf.name)


def save_group(G: FiniteGroup, path: str | Path) -> None:
    Path(path).write_text(serialize_group_file(group_to_file(G)), encoding="utf-8")
