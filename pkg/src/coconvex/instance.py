"""JSON instance documents: a cone, named coconvex bodies, named polytopes.

Every number is a rational string "p/q" (or "p").  Example::

    {"dim": 2,
     "cone": {"generators": [["1", "0"], ["0", "1"]]},
     "bodies": {"K1": [["2", "0"], ["0", "1"]]},
     "polytopes": {"A0": [["0", "0"], ["1", "0"], ["0", "1"]]}}

Witness files use the same layout plus ``check``, ``lambda`` and ``verdict``
(and ``hyperplane`` for polytope checks).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from . import body as bodies
from . import cone as cones
from . import polytope as poly
from .errors import GeometryError, InstanceSyntaxError, SchemaError
from .geom import Hyperplane, format_scalar, parse_scalar

TOP_KEYS = {"dim", "cone", "bodies", "polytopes"}
WITNESS_KEYS = {"check", "lambda", "verdict", "hyperplane"}


@dataclass
class Instance:
    dim: int
    cone: Optional[cones.PolyhedralCone] = None
    bodies: dict = field(default_factory=dict)
    polytopes: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)  # witness fields, if any


def _scalar(value, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise SchemaError(f"expected a rational string, got {value!r}", where)
    if isinstance(value, int):
        return parse_scalar(str(value))
    try:
        return parse_scalar(value)
    except ValueError as exc:
        raise InstanceSyntaxError(str(exc), where) from None


def _points(value, dim, where):
    if not isinstance(value, list) or not value:
        raise SchemaError("expected a nonempty list of points", where)
    out = []
    for i, p in enumerate(value):
        if not isinstance(p, list) or len(p) != dim:
            raise SchemaError(f"point {i} must be a list of {dim} rationals", where)
        out.append(tuple(_scalar(c, f"{where}[{i}][{j}]") for j, c in enumerate(p)))
    return out


def _named(doc, key, dim):
    value = doc.get(key, {})
    if not isinstance(value, dict):
        raise SchemaError(f"'{key}' must be an object mapping names to point lists", key)
    return {name: _points(pts, dim, f"{key}.{name}") for name, pts in value.items()}


def parse_instance(text: str, witness: bool = False) -> Instance:
    """Parse and validate an instance; geometry errors name the bad object."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceSyntaxError(f"{exc.msg} at line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    allowed = TOP_KEYS | (WITNESS_KEYS if witness else set())
    unknown = set(doc) - allowed
    if unknown:
        raise SchemaError(f"unknown fields {sorted(unknown)}")
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise SchemaError("'dim' must be a positive integer", "dim")

    inst = Instance(dim)
    if "cone" in doc:
        c = doc["cone"]
        if not isinstance(c, dict) or set(c) != {"generators"}:
            raise SchemaError("'cone' must be {\"generators\": [...]}", "cone")
        gens = _points(c["generators"], dim, "cone.generators")
        try:
            inst.cone = cones.validate(gens)
        except GeometryError as exc:
            raise type(exc)(f"cone: {exc}") from None
    for name, apexes in _named(doc, "bodies", dim).items():
        if inst.cone is None:
            raise SchemaError("bodies need a cone", name)
        try:
            inst.bodies[name] = bodies.make_coconvex(inst.cone, apexes)
        except GeometryError as exc:
            raise type(exc)(f"{name}: {exc}") from None
    for name, verts in _named(doc, "polytopes", dim).items():
        inst.polytopes[name] = poly.convex_hull(verts)
    if witness:
        inst.extra = {k: doc[k] for k in WITNESS_KEYS if k in doc}
    return inst


def _pts(points):
    return [[format_scalar(c) for c in p] for p in points]


def document(cone, named_bodies: dict, named_polytopes: dict, dim: Optional[int] = None) -> dict:
    if dim is None:
        dim = cone.dim if cone is not None else next(iter(named_polytopes.values())).dim
    doc = {"dim": dim}
    if cone is not None:
        doc["cone"] = cone.to_json()
    if named_bodies:
        doc["bodies"] = {k: _pts(K.apexes) for k, K in named_bodies.items()}
    if named_polytopes:
        doc["polytopes"] = {k: _pts(P.vertices) for k, P in named_polytopes.items()}
    return doc


def serialize(inst: Instance) -> str:
    doc = document(inst.cone, inst.bodies, inst.polytopes, inst.dim)
    doc.update(inst.extra)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def hyperplane_json(h: Hyperplane) -> dict:
    return {"normal": [format_scalar(c) for c in h.normal], "offset": format_scalar(h.offset)}


def polytope_witness(A0, A1, h: Hyperplane) -> dict:
    doc = document(None, {}, {"A0": A0, "A1": A1})
    doc["hyperplane"] = hyperplane_json(h)
    return doc
