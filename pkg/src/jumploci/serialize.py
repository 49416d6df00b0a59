"""JSON problem documents and canonical serialization of domain values.

Rationals are written as strings ("3", "-1/2"); integers are accepted on
input, floats never.  ``dumps`` sorts keys so output is byte-stable.
"""

import json
import re
from fractions import Fraction

import jsonschema

from .complexes import FreeComplex
from .dgla import adjoint_rep, dgla_from_entries, representation_from_entries, trivial_rep
from .mc import MCCandidate, lie_element
from .rings import (
    ArtinianAlgebra,
    DgArtinianAlgebra,
    Polynomial,
    artinian_from_truncation,
    field,
    ideal_from_generators,
    parse_element,
)

SCHEMA_TAG = "jumploci/1"


class SchemaError(ValueError):
    def __init__(self, path, message):
        super().__init__(f"{path or '<document>'}: {message}")
        self.path = path or "<document>"
        self.message = message


# ---------------------------------------------------------------------------
# JSON schema (structure only; names and math are checked afterwards)

_Q = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}]}
_NAME = {"type": "string", "minLength": 1}
_BASIS = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {"name": _NAME, "degree": {"type": "integer"}},
        "required": ["name", "degree"],
        "additionalProperties": False,
    },
}
_COORDS = {"type": "array", "items": _Q}
_RING_ELEMENT = {"oneOf": [_COORDS, {"type": "string"}]}


def _triples(n):
    return {"type": "array", "items": {"type": "array", "prefixItems": [_NAME] * (n - 1) + [_Q], "minItems": n, "maxItems": n}}


_DGLA = {
    "type": "object",
    "properties": {"name": {"type": "string"}, "basis": _BASIS, "differential": _triples(3), "bracket": _triples(4)},
    "required": ["basis"],
    "additionalProperties": False,
}
_MODULE = {
    "oneOf": [
        {"enum": ["adjoint", "trivial"]},
        {
            "type": "object",
            "properties": {"name": {"type": "string"}, "basis": _BASIS, "differential": _triples(3), "action": _triples(4)},
            "required": ["basis"],
            "additionalProperties": False,
        },
    ]
}
_RING = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["field", "truncated_poly", "dg", "table", "catalog"]},
        "vars": {"type": "array", "items": _NAME},
        "order": {"type": "integer", "minimum": 1},
        "relations": {"type": "array", "items": {"type": "string"}},
        "basis": _BASIS,
        "product": _triples(4),
        "differential": {"oneOf": [_triples(3), {"type": "array", "items": _COORDS}]},
        "mul": {"type": "array", "items": {"type": "array", "items": _COORDS}},
        "name": {"type": "string"},
    },
    "required": ["kind"],
    "additionalProperties": False,
    "allOf": [
        {"if": {"properties": {"kind": {"const": "field"}}}, "then": {"propertyNames": {"enum": ["kind"]}}},
        {
            "if": {"properties": {"kind": {"const": "truncated_poly"}}},
            "then": {"required": ["vars", "order"], "propertyNames": {"enum": ["kind", "vars", "order", "relations"]}},
        },
        {
            "if": {"properties": {"kind": {"const": "dg"}}},
            "then": {"required": ["basis"], "propertyNames": {"enum": ["kind", "basis", "product", "differential"]}},
        },
        {
            "if": {"properties": {"kind": {"const": "table"}}},
            "then": {"required": ["basis", "mul"], "propertyNames": {"enum": ["kind", "basis", "mul", "differential"]}},
        },
        {
            "if": {"properties": {"kind": {"const": "catalog"}}},
            "then": {"required": ["name"], "propertyNames": {"enum": ["kind", "name"]}},
        },
    ],
}
_LIE_ELEMENT = {"type": "array", "items": {"type": "array", "prefixItems": [_NAME, _RING_ELEMENT], "minItems": 2, "maxItems": 2}}
_COMPLEX = {
    "type": "object",
    "properties": {
        "lo": {"type": "integer"},
        "ranks": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "differentials": {
            "type": "object",
            "patternProperties": {r"^-?\d+$": {"type": "array", "items": {"type": "array", "items": _RING_ELEMENT}}},
            "additionalProperties": False,
        },
    },
    "required": ["lo", "ranks"],
    "additionalProperties": False,
}
_QUERY = {
    "type": "object",
    "properties": {
        "op": {"type": "string"},
        "weight": {"type": "integer", "minimum": 0},
        "matrices": {"type": "boolean"},
        "omega": _LIE_ELEMENT,
        "u": _LIE_ELEMENT,
        "i": {"type": "integer"},
        "k": {"type": "integer", "minimum": 1},
        "method": {"enum": ["blocks", "direct"]},
        "complex": _COMPLEX,
        "samples": {"type": "array", "items": {"oneOf": [_COORDS, {"type": "array", "items": {"type": "array", "prefixItems": [_NAME, _Q], "minItems": 2, "maxItems": 2}}]}},
        "convention": {"enum": ["standard", "verbatim"]},
    },
    "additionalProperties": False,
}
DOCUMENT_SCHEMA = {
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA_TAG},
        "field": {"const": "Q"},
        "dgla": _DGLA,
        "module": _MODULE,
        "ring": _RING,
        "query": _QUERY,
    },
    "required": ["field"],
    "additionalProperties": False,
}

_VALIDATOR = jsonschema.Draft202012Validator(DOCUMENT_SCHEMA)


def format_path(parts):
    out = ""
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out


def check_document(doc):
    """Raise SchemaError on the first (deepest, then leftmost) structural problem."""
    errors = list(_VALIDATOR.iter_errors(doc))
    if not errors:
        return
    best = jsonschema.exceptions.best_match(errors)
    parts = list(best.absolute_path)
    message = best.message
    if best.validator == "additionalProperties" and isinstance(best.instance, dict):
        allowed = set(best.schema.get("properties", {}))
        extra = sorted(k for k in best.instance if k not in allowed and not _pattern_ok(best.schema, k))
        if extra:
            parts.append(extra[0])
            message = "unknown field"
    elif "propertyNames" in best.relative_schema_path:
        parts.append(best.instance)
        message = "unknown field for this kind"
    raise SchemaError(format_path(parts), message)


def _pattern_ok(schema, key):
    return any(re.match(p, key) for p in schema.get("patternProperties", {}))


# ---------------------------------------------------------------------------
# Scalars and simple values


def load_rational(value, path=""):
    if isinstance(value, bool) or isinstance(value, float):
        raise SchemaError(path, "rationals must be integers or 'p/q' strings")
    try:
        return Fraction(value.replace(" ", "") if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise SchemaError(path, f"not a rational: {value!r}") from exc


def dump_rational(q):
    return str(Fraction(q))


def dump_vector(v):
    return [dump_rational(c) for c in v]


def load_vector(values, path=""):
    return tuple(load_rational(c, f"{path}[{n}]") for n, c in enumerate(values))


def dump_polynomial(p):
    return {"nvars": p.nvars, "terms": [[list(e), dump_rational(c)] for e, c in p.sorted_terms()]}


def load_polynomial(obj):
    return Polynomial(obj["nvars"], {tuple(e): load_rational(c) for e, c in obj["terms"]})


# ---------------------------------------------------------------------------
# Rings


def dump_algebra(A):
    """Canonical dense form: labels, degrees, structure constants and d."""
    out = {
        "kind": "table",
        "basis": [{"name": n, "degree": d} for n, d in zip(A.labels, A.degrees)],
        "mul": [[dump_vector(A.mul_table[i][j]) for j in range(A.dim)] for i in range(A.dim)],
    }
    if A.is_dg:
        out["differential"] = [dump_vector(A.d(A.basis_vector(j))) for j in range(A.dim)]
    return out


def _check_unique(names, path):
    seen = set()
    for n, name in enumerate(names):
        if name in seen:
            raise SchemaError(f"{path}[{n}].name", f"duplicate basis name {name!r}")
        seen.add(name)


def _index_of(names, name, path):
    try:
        return names.index(name)
    except ValueError:
        raise SchemaError(path, f"unknown basis name {name!r}") from None


def load_ring(spec, path="ring"):
    from .fixtures import RINGS

    kind = spec["kind"]
    if kind == "field":
        return field()
    if kind == "catalog":
        if spec["name"] not in RINGS:
            raise SchemaError(f"{path}.name", f"unknown catalog ring {spec['name']!r}")
        return RINGS[spec["name"]]()
    if kind == "truncated_poly":
        names = spec["vars"]
        _check_unique(names, f"{path}.vars")
        try:
            return artinian_from_truncation(len(names), spec["order"], spec.get("relations", ()), names)
        except ValueError as exc:
            raise SchemaError(f"{path}.relations", str(exc)) from exc
    names = [b["name"] for b in spec["basis"]]
    degrees = [b["degree"] for b in spec["basis"]]
    _check_unique(names, f"{path}.basis")
    n = len(names)
    if n == 0:
        raise SchemaError(f"{path}.basis", "an algebra needs at least the unit")
    if kind == "table":
        mul = spec["mul"]
        if len(mul) != n or any(len(row) != n or any(len(v) != n for v in row) for row in mul):
            raise SchemaError(f"{path}.mul", f"expected a {n}x{n}x{n} tensor")
        mul = [[load_vector(v, f"{path}.mul[{i}][{j}]") for j, v in enumerate(row)] for i, row in enumerate(mul)]
        diff = spec.get("differential")
        if diff is None and not any(degrees):
            return ArtinianAlgebra(names, mul)
        diff = diff or [[0] * n for _ in range(n)]
        if len(diff) != n or any(len(v) != n for v in diff):
            raise SchemaError(f"{path}.differential", f"expected {n} vectors of length {n}")
        diff = [load_vector(v, f"{path}.differential[{j}]") for j, v in enumerate(diff)]
        return DgArtinianAlgebra(names, degrees, mul, diff)
    # kind == "dg": sparse products, unit products implied
    if degrees[0] != 0:
        raise SchemaError(f"{path}.basis[0].degree", "the first basis element is the unit and has degree 0")
    mul = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        mul[0][j][j] = Fraction(1)
        mul[j][0][j] = Fraction(1)
    for t, (a, b, c, coeff) in enumerate(spec.get("product", [])):
        ia = _index_of(names, a, f"{path}.product[{t}][0]")
        ib = _index_of(names, b, f"{path}.product[{t}][1]")
        ic = _index_of(names, c, f"{path}.product[{t}][2]")
        if ia == 0 or ib == 0:
            raise SchemaError(f"{path}.product[{t}]", "products with the unit are implied")
        mul[ia][ib][ic] += load_rational(coeff, f"{path}.product[{t}][3]")
    diff = [[Fraction(0)] * n for _ in range(n)]
    for t, entry in enumerate(spec.get("differential", [])):
        if len(entry) != 3 or not isinstance(entry[0], str):
            raise SchemaError(f"{path}.differential[{t}]", "expected [source, target, coeff]")
        src, tgt, coeff = entry
        diff[_index_of(names, src, f"{path}.differential[{t}][0]")][_index_of(names, tgt, f"{path}.differential[{t}][1]")] += load_rational(coeff, f"{path}.differential[{t}][2]")
    return DgArtinianAlgebra(names, degrees, mul, diff)


def load_ring_element(A, value, path):
    if isinstance(value, str):
        try:
            return parse_element(A, value)
        except ValueError as exc:
            raise SchemaError(path, str(exc)) from exc
    if len(value) != A.dim:
        raise SchemaError(path, f"expected {A.dim} coordinates")
    return load_vector(value, path)


def dump_ring_element(A, u):
    return dump_vector(u)


# ---------------------------------------------------------------------------
# DGLAs and modules


def dump_dgla(g):
    names = g.labels
    out = {"basis": [{"name": n, "degree": d} for n, d in zip(names, g.degrees)]}
    out["differential"] = [
        [names[j], names[l], dump_rational(c)] for j in range(g.dim) for l, c in enumerate(g.differential[j]) if c
    ]
    out["bracket"] = [
        [names[i], names[j], names[l], dump_rational(c)]
        for i in range(g.dim)
        for j in range(g.dim)
        for l, c in enumerate(g.bracket_table[i][j])
        if c
    ]
    if g.name:
        out["name"] = g.name
    return out


def load_dgla(spec, path="dgla"):
    names = [b["name"] for b in spec["basis"]]
    _check_unique(names, f"{path}.basis")
    diff = []
    for t, (src, tgt, c) in enumerate(spec.get("differential", [])):
        _index_of(names, src, f"{path}.differential[{t}][0]")
        _index_of(names, tgt, f"{path}.differential[{t}][1]")
        diff.append((src, tgt, load_rational(c, f"{path}.differential[{t}][2]")))
    br = []
    for t, (a, b, c, coeff) in enumerate(spec.get("bracket", [])):
        for pos, name in enumerate((a, b, c)):
            _index_of(names, name, f"{path}.bracket[{t}][{pos}]")
        br.append((a, b, c, load_rational(coeff, f"{path}.bracket[{t}][3]")))
    degrees = [b["degree"] for b in spec["basis"]]
    return dgla_from_entries(names, degrees, diff, br, antisymmetrize=True, name=spec.get("name"))


def dump_module(V):
    g, names = V.dgla, V.labels
    if V.space == g.space and V.action_table == g.bracket_table and V.differential == g.differential:
        return "adjoint"
    out = {"basis": [{"name": n, "degree": d} for n, d in zip(names, V.degrees)]}
    out["differential"] = [
        [names[j], names[l], dump_rational(c)] for j in range(V.dim) for l, c in enumerate(V.differential[j]) if c
    ]
    out["action"] = [
        [g.labels[a], names[j], names[l], dump_rational(c)]
        for a in range(g.dim)
        for j in range(V.dim)
        for l, c in enumerate(V.action_table[a][j])
        if c
    ]
    if V.name:
        out["name"] = V.name
    return out


def load_module(g, spec, path="module"):
    if spec == "adjoint":
        return adjoint_rep(g)
    if spec == "trivial":
        return trivial_rep(g)
    names = [b["name"] for b in spec["basis"]]
    _check_unique(names, f"{path}.basis")
    diff = []
    for t, (src, tgt, c) in enumerate(spec.get("differential", [])):
        _index_of(names, src, f"{path}.differential[{t}][0]")
        _index_of(names, tgt, f"{path}.differential[{t}][1]")
        diff.append((src, tgt, load_rational(c, f"{path}.differential[{t}][2]")))
    act = []
    for t, (a, src, tgt, c) in enumerate(spec.get("action", [])):
        _index_of(list(g.labels), a, f"{path}.action[{t}][0]")
        _index_of(names, src, f"{path}.action[{t}][1]")
        _index_of(names, tgt, f"{path}.action[{t}][2]")
        act.append((a, src, tgt, load_rational(c, f"{path}.action[{t}][3]")))
    degrees = [b["degree"] for b in spec["basis"]]
    return representation_from_entries(g, names, degrees, diff, act, name=spec.get("name"))


# ---------------------------------------------------------------------------
# Lie elements, complexes, ideals


def load_lie_pairs(g, A, pairs, path):
    out = []
    for t, (name, value) in enumerate(pairs):
        if name not in g.labels:
            raise SchemaError(f"{path}[{t}][0]", f"unknown Lie basis name {name!r}")
        out.append((name, load_ring_element(A, value, f"{path}[{t}][1]")))
    return lie_element(g, A, out)


def load_candidate(g, A, pairs, path, cls=MCCandidate):
    X = load_lie_pairs(g, A, pairs, path)
    try:
        return cls(g, A, X)
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from exc


def dump_lie(g, X):
    return [[g.labels[a], dump_vector(r)] for a, r in enumerate(X) if any(r)]


def dump_complex(C):
    return {
        "lo": C.lo,
        "ranks": list(C.ranks),
        "differentials": {
            str(i): [[dump_vector(e) for e in row] for row in m] for i, m in sorted(C.diffs.items())
        },
    }


def load_complex(A, spec, path="complex"):
    diffs = {}
    for key, m in spec.get("differentials", {}).items():
        diffs[int(key)] = [
            [load_ring_element(A, e, f"{path}.differentials.{key}[{r}][{c}]") for c, e in enumerate(row)]
            for r, row in enumerate(m)
        ]
    try:
        return FreeComplex(A, spec["lo"], spec["ranks"], diffs)
    except ValueError as exc:
        raise SchemaError(f"{path}.differentials", str(exc)) from exc


def dump_ideal(I):
    A = I.ambient
    return {
        "generators": [A.format(v) for v in I.minimal_generators()],
        "normal_form": [dump_vector(v) for v in I.normal_form],
        "is_zero": I.is_zero(),
        "is_unit": I.is_unit(),
        "in_maximal": I.in_maximal(),
    }


def load_ideal(A, obj):
    return ideal_from_generators(A, [load_vector(v) for v in obj["normal_form"]])


# ---------------------------------------------------------------------------
# Documents


class Problem:
    """A parsed document: structures built, math not yet validated."""

    def __init__(self, doc):
        check_document(doc)
        self.doc = doc
        self.query = dict(doc.get("query", {}))
        self.dgla = load_dgla(doc["dgla"]) if "dgla" in doc else None
        self.module = None
        if "module" in doc:
            if self.dgla is None:
                raise SchemaError("module", "a module needs a dgla")
            self.module = load_module(self.dgla, doc["module"])
        self.ring = load_ring(doc["ring"]) if "ring" in doc else None

    def require(self, *names):
        for name in names:
            if getattr(self, name) is None:
                raise SchemaError(name, "required for this operation")

    def param(self, name, default=None, required=False):
        if name in self.query:
            return self.query[name]
        if required:
            raise SchemaError(f"query.{name}", "required for this operation")
        return default


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("<document>", f"invalid JSON: {exc.msg} at line {exc.lineno}") from exc
    return Problem(doc)


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
