"""JSON group files.

    {"kind": "cyclic", "n": 6}
    {"kind": "frobenius", "m": 7, "t": 2, "k": 3}
    {"kind": "perm", "degree": 4, "gens": [[1, 2, 3, 0], [1, 0, 2, 3]]}
    {"kind": "mat2m", "alpha": 3, "modulus": "0b1011", "gens": [["1", "0", ...16 hex entries], ...]}
    {"kind": "product", "factors": [<group>, ...]}

Matrix entries are hex strings of the field element's bit pattern, bit i
being the coefficient of x^i.  Generators are row-major.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .field import FieldCtx
from .specs import Cyclic, DirectProduct, FrobeniusMetacyclic, GroupSpec, GroupSpecError, MatGenerators, PermGenerators


def _require(obj: dict, *keys: str) -> list[Any]:
    missing = [k for k in keys if k not in obj]
    if missing:
        raise GroupSpecError(f"group of kind {obj.get('kind')!r} is missing {', '.join(missing)}")
    return [obj[k] for k in keys]


def spec_from_json(obj: Any) -> GroupSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise GroupSpecError("group description must be an object with a 'kind' field")
    kind = obj["kind"]
    if kind == "cyclic":
        (n,) = _require(obj, "n")
        return Cyclic(int(n))
    if kind == "frobenius":
        m, t, k = _require(obj, "m", "t", "k")
        return FrobeniusMetacyclic(int(m), int(t), int(k))
    if kind == "perm":
        degree, gens = _require(obj, "degree", "gens")
        return PermGenerators(int(degree), tuple(tuple(int(x) for x in g) for g in gens))
    if kind == "mat2m":
        alpha, modulus, gens = _require(obj, "alpha", "modulus", "gens")
        ctx = FieldCtx(int(alpha), int(modulus, 0) if isinstance(modulus, str) else int(modulus))
        mats = []
        for g in gens:
            if len(g) != 16:
                raise GroupSpecError("each matrix generator needs 16 hex entries")
            mats.append(tuple(int(x, 16) for x in g))
        return MatGenerators(ctx, tuple(mats))
    if kind == "product":
        (factors,) = _require(obj, "factors")
        return DirectProduct(tuple(spec_from_json(f) for f in factors))
    raise GroupSpecError(f"unknown group kind {kind!r}")


def spec_to_json(spec: GroupSpec) -> dict:
    if isinstance(spec, Cyclic):
        return {"kind": "cyclic", "n": spec.n}
    if isinstance(spec, FrobeniusMetacyclic):
        return {"kind": "frobenius", "m": spec.m, "t": spec.t, "k": spec.k}
    if isinstance(spec, PermGenerators):
        return {"kind": "perm", "degree": spec.degree, "gens": [list(g) for g in spec.gens]}
    if isinstance(spec, MatGenerators):
        return {
            "kind": "mat2m",
            "alpha": spec.ctx.alpha,
            "modulus": bin(spec.ctx.modulus),
            "gens": [[format(x, "x") for x in g] for g in spec.gens],
        }
    if isinstance(spec, DirectProduct):
        return {"kind": "product", "factors": [spec_to_json(f) for f in spec.factors]}
    raise TypeError(f"unknown group spec {spec!r}")


def load(path: str | Path) -> GroupSpec:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GroupSpecError(f"{path}: not valid JSON ({exc})") from None
    return spec_from_json(obj)


def dump(spec: GroupSpec, path: str | Path) -> None:
    Path(path).write_text(json.dumps(spec_to_json(spec)) + "\n")
