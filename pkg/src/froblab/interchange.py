"""JSON bundles for algebras, Hopf data and module lists.

Scalars travel as text in the scalars grammar.  Structure constants are
sparse [i, j, k, text] rows; every other array is dense nested lists.
"""
from __future__ import annotations

import json

import numpy as np

from .algcore import Algebra, Module, check_algebra, check_module
from .exactla import Matrix
from .scalars import ScalarParseError, field_context, format_scalar

__all__ = [
    "BundleError",
    "algebra_to_bundle",
    "hopf_to_bundle",
    "bundle_to_algebra",
    "bundle_to_hopf",
    "modules_to_json",
    "json_to_modules",
    "load_json",
    "dump_json",
]

HOPF_FIELDS = ("delta", "counit", "antipode", "phi", "phi_inv", "alpha", "beta")


class BundleError(ValueError):
    """Malformed or inconsistent bundle."""


def _text_array(ctx, raw):
    """Raw (..., deg) array -> nested lists of scalar text."""
    raw = np.asarray(raw, dtype=object)
    if raw.ndim == 1:
        return format_scalar(ctx(tuple(raw)))
    return [_text_array(ctx, x) for x in raw]


def _parse_array(ctx, obj, shape, what):
    try:
        arr = np.asarray(obj, dtype=object)
    except ValueError:
        raise BundleError(f"{what}: ragged array") from None
    if arr.shape != tuple(shape):
        raise BundleError(f"{what}: expected shape {tuple(shape)}, got {arr.shape}")
    out = np.zeros(tuple(shape) + (ctx.deg,), dtype=object)
    for idx in np.ndindex(*shape):
        out[idx] = _scalar(ctx, arr[idx], what).coeffs
    return out


def _scalar(ctx, text, what):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise BundleError(f"{what}: scalars must be text, got {text!r}")
    try:
        return ctx(str(text))
    except ScalarParseError as exc:
        raise BundleError(f"{what}: {exc}") from None


def algebra_to_bundle(A: Algebra, name=None) -> dict:
    ctx = A.ctx
    sc = [[int(i), int(j), int(k), format_scalar(ctx(tuple(v)))]
          for i, j, k, v in zip(A.I, A.J, A.K, A.V)]
    out = {"p": ctx.p, "dim": A.dim, "basis_labels": list(A.labels),
           "structure_constants": sc, "unit": _text_array(ctx, A.unit)}
    if name:
        out["name"] = name
    return out


def hopf_to_bundle(Hd) -> dict:
    out = algebra_to_bundle(Hd.algebra, Hd.name)
    for key in HOPF_FIELDS:
        val = getattr(Hd, key)
        if val is not None:
            out[key] = _text_array(Hd.algebra.ctx, val.data)
    return out


def _require(obj, key, types):
    if key not in obj:
        raise BundleError(f"missing field {key!r}")
    if not isinstance(obj[key], types) or isinstance(obj[key], bool):
        raise BundleError(f"field {key!r} has the wrong type")
    return obj[key]


def bundle_to_algebra(obj) -> Algebra:
    """Parse and validate; associativity and the unit are checked on load."""
    if not isinstance(obj, dict):
        raise BundleError("bundle must be a JSON object")
    p = _require(obj, "p", int)
    try:
        ctx = field_context(p)
    except (TypeError, ValueError) as exc:
        raise BundleError(str(exc)) from None
    n = _require(obj, "dim", int)
    if n < 1:
        raise BundleError(f"dim must be positive, got {n}")
    labels = obj.get("basis_labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise BundleError("basis_labels must list one label per basis element")
    entries = []
    for row in _require(obj, "structure_constants", list):
        if not isinstance(row, list) or len(row) != 4:
            raise BundleError(f"structure constant row {row!r} is not [i, j, k, scalar]")
        i, j, k, v = row
        if not all(isinstance(x, int) and not isinstance(x, bool) and 0 <= x < n for x in (i, j, k)):
            raise BundleError(f"structure constant indices {row[:3]} out of range")
        entries.append((i, j, k, _scalar(ctx, v, "structure_constants")))
    unit = _parse_array(ctx, _require(obj, "unit", list), (n,), "unit")
    A = Algebra.from_table(ctx, n, entries, [ctx(tuple(u)) for u in unit], labels)
    rep = check_algebra(A)
    if not rep.ok:
        raise BundleError(f"structure constants are not associative and unital: {rep.associativity_violations[:3]}")
    return A


def bundle_to_hopf(obj, require=()):
    """HopfData from a bundle; fields named in ``require`` must be present."""
    from .hopfax import HopfData
    A = bundle_to_algebra(obj)
    n, ctx = A.dim, A.ctx
    shapes = {"delta": (n * n, n), "counit": (1, n), "antipode": (n, n),
              "phi": (n ** 3, 1), "phi_inv": (n ** 3, 1), "alpha": (n, 1), "beta": (n, 1)}
    data = {}
    for key in HOPF_FIELDS:
        if key in obj:
            data[key] = Matrix(ctx, _parse_array(ctx, obj[key], shapes[key], key))
        elif key in ("delta", "counit", "antipode") or key in require:
            raise BundleError(f"missing field {key!r}")
    return HopfData(A, name=obj.get("name", "H"), **data)


def modules_to_json(modules) -> list:
    out = []
    for M in modules:
        ctx = M.ctx
        out.append({"name": M.name, "dim": M.dim, "actions": _text_array(ctx, M.actions())})
    return out


def json_to_modules(obj, A: Algebra) -> list:
    if not isinstance(obj, list):
        raise BundleError("module list must be a JSON array")
    mods = []
    for t, entry in enumerate(obj):
        if not isinstance(entry, dict):
            raise BundleError(f"module {t} is not an object")
        m = _require(entry, "dim", int)
        acts = _parse_array(A.ctx, _require(entry, "actions", list), (A.dim, m, m), f"module {t} actions")
        M = Module.from_actions(A, acts, name=entry.get("name") or f"M{t}")
        if not check_module(M):
            raise BundleError(f"module {t} does not satisfy the action axioms")
        mods.append(M)
    return mods


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise BundleError(f"cannot read {path}: {exc}") from None


def dump_json(obj, path=None):
    text = json.dumps(obj, indent=1)
    if path is None:
        return text
    with open(path, "w") as fh:
        fh.write(text + "\n")
    return text
