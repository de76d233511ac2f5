"""
JSON input formats.

Algebra::

    {"name": "r2", "basis": ["x", "y"],
     "brackets": [{"left": "x", "right": "y", "value": {"y": "1"}}]}

Omitted brackets are zero.  A listed bracket is taken literally: its partner
[right, left] is only filled in by antisymmetry when it is not listed too,
so inconsistent input reaches the validator instead of being repaired.

Module: ``{"dim": d, "action": {label: [[ "p/q", ...], ...]}}`` (row-major).
Bimodule: ``{"dim": d, "left": {label: matrix}, "right": {label: matrix}}``;
a missing side is the zero action.
"""

import json

from liedual import catalog as _catalog
from liedual.ce import (
    KCBimodule, adjoint_bimodule, dual_adjoint_bimodule, trivial_bimodule,
)
from liedual.lie import (
    LieAlgebra, LieAlgebraError, LieIdeal, LieModule, adjoint_module, dual_module,
    trivial_module,
)
from liedual.linalg import dense_zero, scalar


class InputError(ValueError):
    """Malformed or unusable input (CLI exit code 2)."""


def _read_json(path):
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from None
    except json.JSONDecodeError as exc:
        raise InputError("%s is not valid JSON: %s" % (path, exc)) from None


def _scalar(v):
    if isinstance(v, float):
        raise InputError("floating point scalar %r; write it as a string 'p/q'" % v)
    try:
        return scalar(v)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None


def algebra_from_dict(doc):
    try:
        labels = [str(s) for s in doc["basis"]]
        index = {s: i for i, s in enumerate(labels)}
        c = {}
        listed = set()
        for br in doc.get("brackets", []):
            i, j = index[br["left"]], index[br["right"]]
            if (i, j) in listed:
                raise InputError("bracket [%s, %s] listed twice" % (br["left"], br["right"]))
            listed.add((i, j))
            c[i, j] = {index[k]: _scalar(v) for k, v in br.get("value", {}).items()}
        for (i, j), vec in list(c.items()):
            if (j, i) not in listed:
                c[j, i] = {k: -v for k, v in vec.items()}
        return LieAlgebra(labels, c, name=doc.get("name"))
    except KeyError as exc:
        raise InputError("missing or unknown key %s in algebra document" % exc) from None
    except LieAlgebraError as exc:
        raise InputError(str(exc)) from None


def algebra_to_dict(g):
    brackets = []
    for (i, j), row in g.nonzero_brackets().items():
        if i < j or (j, i) not in g.nonzero_brackets():
            brackets.append({"left": g.labels[i], "right": g.labels[j],
                             "value": {g.labels[k]: str(v) for k, v in sorted(row.items())}})
    return {"name": g.name, "basis": list(g.labels), "brackets": brackets}


def _matrices(g, doc, dim):
    out = []
    for label in g.labels:
        mat = doc.get(label)
        if mat is None:
            out.append(dense_zero(dim))
            continue
        if len(mat) != dim or any(len(r) != dim for r in mat):
            raise InputError("action of %s must be a %dx%d matrix" % (label, dim, dim))
        out.append(tuple(tuple(_scalar(v) for v in row) for row in mat))
    unknown = set(doc) - set(g.labels)
    if unknown:
        raise InputError("action given for unknown labels %s" % sorted(unknown))
    return out


def module_from_dict(g, doc):
    try:
        dim = int(doc["dim"])
        return LieModule(g, _matrices(g, doc.get("action", {}), dim), name=doc.get("name", "file"))
    except KeyError as exc:
        raise InputError("module document lacks %s" % exc) from None
    except LieAlgebraError as exc:
        raise InputError("invalid module: %s" % exc) from None


def bimodule_from_dict(g, doc):
    try:
        dim = int(doc["dim"])
        return KCBimodule(g, _matrices(g, doc.get("left", {}), dim),
                          _matrices(g, doc.get("right", {}), dim), name=doc.get("name", "file"))
    except KeyError as exc:
        raise InputError("bimodule document lacks %s" % exc) from None
    except LieAlgebraError as exc:
        raise InputError("invalid bimodule: %s" % exc) from None


def load_algebra(spec):
    """``builtin:NAME``, ``file:PATH`` or a bare catalog name."""
    if spec.startswith("file:"):
        return algebra_from_dict(_read_json(spec[5:]))
    name = spec[8:] if spec.startswith("builtin:") else spec
    try:
        return _catalog.lookup(name).algebra
    except KeyError:
        raise InputError("unknown builtin algebra %r (see 'catalog list')" % name) from None


def load_module(g, spec):
    if spec == "trivial":
        return trivial_module(g)
    if spec == "adjoint":
        return adjoint_module(g)
    if spec == "coadjoint":
        return dual_module(adjoint_module(g))
    if spec.startswith("file:"):
        return module_from_dict(g, _read_json(spec[5:]))
    raise InputError("unknown module %r" % spec)


def load_bimodule(g, spec):
    if spec == "trivial":
        return trivial_bimodule(g)
    if spec == "adjoint":
        return adjoint_bimodule(g)
    if spec in ("dual-adjoint", "coadjoint"):
        return dual_adjoint_bimodule(g)
    if spec.startswith("file:"):
        return bimodule_from_dict(g, _read_json(spec[5:]))
    raise InputError("unknown bimodule %r" % spec)


def load_ideal(g, spec):
    try:
        if spec == "commutator":
            return LieIdeal.commutator(g)
        if spec == "center":
            return LieIdeal.center(g)
        if spec == "whole":
            return LieIdeal.whole(g)
        if spec.startswith("span:"):
            labels = [s for s in spec[5:].split(",") if s]
            return LieIdeal.span(g, labels)
    except LieAlgebraError as exc:
        raise InputError(str(exc)) from None
    raise InputError("unknown ideal %r" % spec)


def parse_ladder(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InputError("ladder must be comma-separated integers: %r" % text) from None
