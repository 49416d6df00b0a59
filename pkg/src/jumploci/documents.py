"""Shipped problem documents with default query parameters per subcommand."""

import copy

from . import fixtures as fx
from .serialize import SCHEMA_TAG, dump_dgla, dump_module

OPS = (
    "validate",
    "ce",
    "mc-check",
    "gauge",
    "aomoto",
    "jump-ideal",
    "jump-membership",
    "resonance-scan",
    "subscheme",
)

# name -> (dgla, module, catalog ring, description, defaults per op)
_SPECS = {
    "abelian": (
        "abelian",
        "trivial",
        "k[t]/t^3",
        "abelian a (deg 0), b (deg 1) with trivial coefficients",
        {
            "mc-check": {"omega": [["b", "t"]]},
            "gauge": {"u": [["a", "t"]], "omega": [["b", "t^2"]]},
            "aomoto": {"omega": [["b", "t"]]},
            "jump-ideal": {"omega": [["b", "t"]], "i": 0, "k": 1},
            "jump-membership": {"omega": [["b", "t"]], "i": 0, "k": 1},
            "resonance-scan": {"samples": [["0", "0"], ["0", "1"], ["0", "-2"]], "i": 0, "k": 1},
            "subscheme": {"omega": [["b", "t"]], "i": 0, "k": 2},
        },
    ),
    "cone": (
        "abelian",
        "cone",
        "k[t]/t^3",
        "abelian g acting on the cone v0 -> v1",
        {
            "mc-check": {"omega": [["b", "t"]]},
            "gauge": {"u": [["a", "t"]], "omega": [["b", "t"]]},
            "aomoto": {"omega": [["b", "t"]]},
            "jump-ideal": {"omega": [["b", "t"]], "i": 0, "k": 1},
            "jump-membership": {"omega": [["b", "t^2"]], "i": 0, "k": 1},
            "resonance-scan": {"samples": [["0", "0"], ["0", "-1"], ["0", "3"]], "i": 1, "k": 1},
            "subscheme": {"omega": [["b", "t"]], "i": 1, "k": 1},
        },
    ),
    "sl2": (
        "sl2",
        "standard",
        "k[t]/t^3",
        "sl2 with its standard 2-dimensional module",
        {
            "ce": {"weight": 3},
            "mc-check": {"omega": []},
            "gauge": {"u": [["e", "t"], ["h", "t^2"]], "omega": []},
            "aomoto": {"omega": []},
            "jump-ideal": {"omega": [], "i": 0, "k": 1},
            "jump-membership": {"omega": [], "i": 0, "k": 2},
            "resonance-scan": {"samples": [["0", "0", "0"]], "i": 0, "k": 2},
            "subscheme": {"omega": [], "i": 0, "k": 3},
        },
    ),
    "sl2-corrupt": (
        "sl2-corrupt",
        "adjoint",
        "k[t]/t^3",
        "sl2 with [h,e] = 3e; fails Jacobi on (e, f, h)",
        {
            "ce": {"weight": 3},
            "mc-check": {"omega": []},
            "gauge": {"u": [["e", "t"]], "omega": []},
            "aomoto": {"omega": []},
            "jump-ideal": {"omega": [], "i": 0, "k": 1},
            "jump-membership": {"omega": [], "i": 0, "k": 1},
            "resonance-scan": {"samples": [["0", "0", "0"]]},
            "subscheme": {"omega": [], "i": 0, "k": 1},
        },
    ),
    "odd-square": (
        "odd-square",
        "V_sq",
        "k[t]/t^3",
        "e (deg 1), f (deg 2), [e,e] = f, acting on V_sq",
        {
            "mc-check": {"omega": [["e", "t"]]},
            "gauge": {"u": [], "omega": [["e", "t^2"]]},
            "aomoto": {"omega": [["e", "t^2"]]},
            "jump-ideal": {"omega": [["e", "t^2"]], "i": 1, "k": 1},
            "jump-membership": {"omega": [["e", "t^2"]], "i": 1, "k": 1},
            "resonance-scan": {"samples": [["0", "0"], ["1", "0"]], "i": 0, "k": 1},
            "subscheme": {"omega": [["e", "t^2"]], "i": 0, "k": 1},
        },
    ),
    "odd-square-dg": (
        "odd-square",
        "V_sq",
        "k+ks",
        "odd-square over the dg ring k + k s with ω = f s",
        {
            "mc-check": {"omega": [["f", "s"]]},
            "gauge": {"u": [], "omega": [["f", "s"]]},
            "aomoto": {"omega": [["f", "s"]]},
            "jump-ideal": {"omega": [["f", "s"]], "i": 0, "k": 1},
            "jump-membership": {"omega": [["f", "s"]], "i": 0, "k": 1},
            "resonance-scan": {"samples": [["0", "0"]], "i": 0, "k": 1},
            "subscheme": {"omega": [["f", "s"]], "i": 2, "k": 1},
        },
    ),
    "koszul": (
        "koszul",
        "exterior",
        "k[x,y]/(x^2,y^2)",
        "abelian a1, a2 (deg 1) acting on the exterior algebra Λ(x1, x2)",
        {
            "mc-check": {"omega": [["a1", "x"], ["a2", "y"]]},
            "gauge": {"u": [], "omega": [["a1", "x"], ["a2", "y"]]},
            "aomoto": {"omega": [["a1", "x"], ["a2", "y"]]},
            "jump-ideal": {"omega": [["a1", "x"], ["a2", "y"]], "i": 1, "k": 1},
            "jump-membership": {"omega": [["a1", "x"], ["a2", "y"]], "i": 1, "k": 2},
            "resonance-scan": {
                "samples": [["0", "0"], ["1", "0"], ["0", "1"], ["2", "-3"], ["1/2", "5"]],
                "i": 0,
                "k": 1,
            },
            "subscheme": {"omega": [["a1", "x"], ["a2", "y"]], "i": 0, "k": 1},
        },
    ),
    "dual-numbers": (
        "dual-line",
        "dual-line",
        "k[x]/x^2",
        "e (deg 1) acting by v0 -> v1, with ω = x e over the dual numbers",
        {
            "mc-check": {"omega": [["e", "x"]]},
            "gauge": {"u": [], "omega": [["e", "x"]]},
            "aomoto": {"omega": [["e", "x"]]},
            "jump-ideal": {"omega": [["e", "x"]], "i": 0, "k": 1},
            "jump-membership": {"omega": [["e", "x"]], "i": 0, "k": 1},
            "resonance-scan": {"samples": [["0"], ["1"], ["-7/3"]], "i": 0, "k": 1},
            "subscheme": {"omega": [["e", "x"]], "i": 0, "k": 1},
        },
    ),
    "sl2-ext": (
        "sl2-ext",
        "adjoint",
        "k[t]/t^3",
        "sl2 ⊗ Λ(t, p) with its adjoint module",
        {
            "ce": {"weight": 2},
            "mc-check": {"omega": [["e.t", "t"], ["f.p", "t^2"]]},
            "gauge": {"u": [["h", "t"], ["e", "t^2"]], "omega": [["e.t", "t"], ["f.p", "t^2"]]},
            "aomoto": {"omega": [["e.t", "t"], ["f.p", "t^2"]]},
            "jump-ideal": {"omega": [["e.t", "t"], ["f.p", "t^2"]], "i": 1, "k": 1},
            "jump-membership": {"omega": [["e.t", "t"], ["f.p", "t^2"]], "i": 0, "k": 1},
            "resonance-scan": {
                "samples": [["0"] * 12, ["0"] * 3 + ["1"] + ["0"] * 8, ["0"] * 3 + ["1", "0", "0", "0", "1"] + ["0"] * 4],
                "i": 0,
                "k": 1,
            },
            "subscheme": {"omega": [["e.t", "t"], ["f.p", "t^2"]], "i": 0, "k": 1},
        },
    ),
}

DEFAULT_CE = {"weight": 4}


def fixture_names():
    return list(_SPECS)


def describe(name):
    return _SPECS[name][3]


def fixture_document(name, op="validate"):
    """The shipped document for ``name`` with the default query for ``op``."""
    if name not in _SPECS:
        raise KeyError(f"unknown fixture {name!r}")
    if op not in OPS:
        raise KeyError(f"unknown operation {op!r}")
    gname, mname, ring, _, defaults = _SPECS[name]
    g = fx.lie_fixture(gname)
    V = fx.module_fixture(gname, mname, g)
    query = {"op": op}
    if op == "ce":
        query.update(DEFAULT_CE)
    query.update(copy.deepcopy(defaults.get(op, {})))
    return {
        "schema": SCHEMA_TAG,
        "field": "Q",
        "dgla": dump_dgla(g),
        "module": dump_module(V),
        "ring": {"kind": "catalog", "name": ring},
        "query": query,
    }


def listing():
    """Everything shipped, grouped by kind."""
    out = {
        "fixture": [{"name": n, "description": describe(n), "ring": _SPECS[n][2]} for n in fixture_names()],
        "dgla": sorted(fx.DGLAS),
        "module": [f"{g}/{m}" for g, m in sorted(fx.MODULES)],
        "ring": list(fx.RINGS),
        "morphism": sorted(fx.catalog_morphisms()),
    }
    return out
