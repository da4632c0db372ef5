"""JSON ingestion for groups, based groups, rings and integer matrices."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import InputParseError, SpecdecError
from .ggroups import GGroup
from .groups import (
    FiniteGroup,
    GroupHomomorphism,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
    generalized_quaternion,
    metacyclic,
    symmetric,
    trivial_group,
)
from .rings import FiniteRing


def build_named(spec: str) -> FiniteGroup:
    """Construct a group from a compact spec string.

    Atoms: ``trivial``, ``cyclic:n``, ``dihedral:n``, ``quaternion:n``,
    ``symmetric:k``, ``alternating:k``, ``metacyclic:p,a,q,b,k``.  Products
    nest: ``product(symmetric:3,cyclic:5)``.
    """
    spec = spec.strip()
    if spec == "trivial":
        return trivial_group()
    if spec.startswith("product(") and spec.endswith(")"):
        inner = spec[len("product("):-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return direct_product(build_named(inner[:i]), build_named(inner[i + 1:]))
        raise InputParseError(f"product spec needs two comma-separated parts: {spec!r}")
    if ":" not in spec:
        raise InputParseError(f"unknown named group {spec!r}")
    kind, _, args = spec.partition(":")
    try:
        nums = [int(x) for x in args.split(",")]
    except ValueError as exc:
        raise InputParseError(f"bad arguments in {spec!r}") from exc
    makers = {
        "cyclic": (cyclic, 1),
        "dihedral": (dihedral, 1),
        "quaternion": (generalized_quaternion, 1),
        "symmetric": (symmetric, 1),
        "alternating": (alternating, 1),
        "metacyclic": (metacyclic, 5),
    }
    if kind not in makers:
        raise InputParseError(f"unknown named group kind {kind!r}")
    maker, arity = makers[kind]
    if len(nums) != arity:
        raise InputParseError(f"{kind} takes {arity} argument(s), got {len(nums)}")
    return maker(*nums)


def group_from_json(obj: dict) -> FiniteGroup:
    fmt = obj.get("format")
    name = obj.get("name")
    if fmt == "cayley":
        table = obj.get("table")
        if not isinstance(table, list):
            raise InputParseError("cayley format needs a table")
        order = obj.get("order")
        if order is not None and order != len(table):
            raise InputParseError("declared order does not match table size")
        return from_cayley_table(table, name=name or "G")
    if fmt == "perm":
        degree = obj.get("degree")
        gens = obj.get("generators")
        if not isinstance(degree, int) or not isinstance(gens, list):
            raise InputParseError("perm format needs degree and generators")
        g = from_permutation_generators(degree, gens, name=name or "G")
        return g
    if fmt == "named":
        spec = obj.get("spec")
        if not isinstance(spec, str):
            raise InputParseError("named format needs a spec string")
        g = build_named(spec)
        if name:
            return FiniteGroup(g.table, name=name, validate=False)
        return g
    raise InputParseError(f"unknown group format {fmt!r}")


def ggroup_from_json(obj: dict) -> GGroup:
    carrier = group_from_json(obj["carrier"]) if isinstance(obj.get("carrier"), dict) \
        else None
    if carrier is None:
        raise InputParseError("based group needs a carrier")
    base_spec = obj.get("base", "trivial")
    if base_spec == "trivial":
        base = trivial_group()
    elif isinstance(base_spec, dict):
        base = group_from_json(base_spec)
    else:
        raise InputParseError("base must be a group object or \"trivial\"")
    morph = obj.get("morphism", "trivial" if base.order == 1 else None)
    if morph == "trivial":
        image = (0,) * base.order
    elif morph == "identity":
        if base.table != carrier.table:
            raise InputParseError("identity morphism needs base == carrier")
        image = tuple(range(base.order))
    elif isinstance(morph, list):
        image = tuple(int(x) for x in morph)
    else:
        raise InputParseError("morphism must be a list, \"identity\" or \"trivial\"")
    try:
        hom = GroupHomomorphism(base, carrier, image)
    except ValueError as exc:
        raise InputParseError(f"morphism is not a homomorphism: {exc}") from exc
    return GGroup(base, carrier, hom)


def ring_from_json(obj: dict) -> FiniteRing:
    fmt = obj.get("format")
    if fmt == "modular":
        m = obj.get("modulus")
        if not isinstance(m, int) or m < 1:
            raise InputParseError("modular format needs a positive modulus")
        return FiniteRing.modular(m)
    if fmt == "tables":
        add = obj.get("add")
        mul = obj.get("mul")
        if not isinstance(add, list) or not isinstance(mul, list):
            raise InputParseError("tables format needs add and mul tables")
        order = obj.get("order")
        if order is not None and order != len(add):
            raise InputParseError("declared order does not match table size")
        return FiniteRing(add, mul, name=obj.get("name", "R"), validate=True)
    raise InputParseError(f"unknown ring format {fmt!r}")


def load_json(path: Union[str, Path]) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputParseError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputParseError(f"{path} is not valid JSON: {exc}") from exc


def load_ggroup(path: Union[str, Path]) -> GGroup:
    obj = load_json(path)
    if not isinstance(obj, dict):
        raise InputParseError(f"{path}: expected an object")
    if "carrier" in obj:
        return ggroup_from_json(obj)
    return GGroup.with_trivial_base(group_from_json(obj))


def load_ring(path: Union[str, Path]) -> FiniteRing:
    obj = load_json(path)
    if not isinstance(obj, dict):
        raise InputParseError(f"{path}: expected an object")
    return ring_from_json(obj)


def load_matrix(path: Union[str, Path]) -> list[list[int]]:
    obj = load_json(path)
    if not (isinstance(obj, list) and obj and all(isinstance(r, list) for r in obj)):
        raise InputParseError(f"{path}: expected a nonempty array of integer rows")
    width = len(obj[0])
    for row in obj:
        if len(row) != width or not all(isinstance(x, int) for x in row):
            raise InputParseError(f"{path}: rows must be equal-length integer lists")
    return [[int(x) for x in row] for row in obj]
