"""Shipped test objects: DGLAs, modules, rings and ring morphisms."""

from fractions import Fraction

from .dgla import adjoint_rep, dgla_from_entries, representation_from_entries, trivial_rep
from .rings import (
    DgArtinianAlgebra,
    artinian_from_truncation,
    augmentation_map,
    field,
    h0,
    identity,
    morphism_from_variables,
    unit_map,
)

SL2_BRACKET = (("e", "f", "h", 1), ("h", "e", "e", 2), ("h", "f", "f", -2))


# ---------------------------------------------------------------------------
# DGLAs


def abelian():
    """a in degree 0, b in degree 1, everything zero."""
    return dgla_from_entries(["a", "b"], [0, 1], name="abelian")


def sl2():
    return dgla_from_entries(["e", "f", "h"], [0, 0, 0], bracket=SL2_BRACKET, name="sl2")


def sl2_corrupt():
    """sl2 with [h,e] = 3e, which breaks Jacobi only on (e, f, h)."""
    br = (("e", "f", "h", 1), ("h", "e", "e", 3), ("h", "f", "f", -2))
    return dgla_from_entries(["e", "f", "h"], [0, 0, 0], bracket=br, name="sl2-corrupt")


def odd_square():
    """e in degree 1 with [e,e] = f in degree 2."""
    return dgla_from_entries(["e", "f"], [1, 2], bracket=(("e", "e", "f", 1),), name="odd-square")


def koszul_pair():
    """Abelian a1, a2 in degree 1."""
    return dgla_from_entries(["a1", "a2"], [1, 1], name="koszul")


def dual_line():
    """Abelian line e in degree 1."""
    return dgla_from_entries(["e"], [1], name="dual-line")


_SUFFIXES = (("", 0), (".t", 1), (".p", 1), (".tp", 2))
_SUFFIX_MUL = {
    ("", ""): ("", 1),
    ("", ".t"): (".t", 1),
    ("", ".p"): (".p", 1),
    ("", ".tp"): (".tp", 1),
    (".t", ""): (".t", 1),
    (".p", ""): (".p", 1),
    (".tp", ""): (".tp", 1),
    (".t", ".p"): (".tp", 1),
    (".p", ".t"): (".tp", -1),
}


def sl2_exterior():
    """sl2 ⊗ Λ(t, p) with t, p of degree 1: [Xα, Yβ] = [X,Y] αβ."""
    names = ["e", "f", "h"]
    labels = [x + s for s, _ in _SUFFIXES for x in names]
    degrees = [d for _, d in _SUFFIXES for _ in names]
    full = {}
    for x, y, z, c in SL2_BRACKET:
        full[(x, y)] = (z, c)
        full[(y, x)] = (z, -c)
    entries = []
    for (x, y), (z, c) in full.items():
        for (a, b), (s, sg) in _SUFFIX_MUL.items():
            entries.append((x + a, y + b, z + s, c * sg))
    return dgla_from_entries(labels, degrees, bracket=entries, antisymmetrize=False, name="sl2-ext")


# ---------------------------------------------------------------------------
# Modules


def sl2_standard(g=None):
    g = g or sl2()
    act = (
        ("e", "v-", "v+", 1),
        ("f", "v+", "v-", 1),
        ("h", "v+", "v+", 1),
        ("h", "v-", "v-", -1),
    )
    return representation_from_entries(g, ["v+", "v-"], [0, 0], action=act, name="standard")


def odd_square_module(g=None):
    """v0, v1, v2 in degrees 0, 1, 2 with f acting faithfully."""
    g = g or odd_square()
    act = (
        ("e", "v0", "v1", 1),
        ("e", "v1", "v2", Fraction(1, 2)),
        ("f", "v0", "v2", 1),
    )
    return representation_from_entries(g, ["v0", "v1", "v2"], [0, 1, 2], action=act, name="V_sq")


def koszul_module(g=None):
    """Λ(x1, x2) with a_i acting by x_i ∧ -."""
    g = g or koszul_pair()
    act = (
        ("a1", "1", "x1", 1),
        ("a2", "1", "x2", 1),
        ("a1", "x2", "x1x2", 1),
        ("a2", "x1", "x1x2", -1),
    )
    return representation_from_entries(g, ["1", "x1", "x2", "x1x2"], [0, 1, 1, 2], action=act, name="exterior")


def abelian_cone(g=None):
    """v0 -> v1 with a acting as the identity and b v0 = v1."""
    g = g or abelian()
    act = (("a", "v0", "v0", 1), ("a", "v1", "v1", 1), ("b", "v0", "v1", 1))
    return representation_from_entries(
        g, ["v0", "v1"], [0, 1], differential=(("v0", "v1", 1),), action=act, name="cone"
    )


def dual_line_module(g=None):
    g = g or dual_line()
    return representation_from_entries(g, ["v0", "v1"], [0, 1], action=(("e", "v0", "v1", 1),), name="dual-line")


DGLAS = {
    "abelian": abelian,
    "sl2": sl2,
    "sl2-corrupt": sl2_corrupt,
    "odd-square": odd_square,
    "koszul": koszul_pair,
    "dual-line": dual_line,
    "sl2-ext": sl2_exterior,
}

# (dgla name, module name) -> builder
MODULES = {
    ("abelian", "trivial"): lambda g: trivial_rep(g),
    ("abelian", "cone"): abelian_cone,
    ("sl2", "standard"): sl2_standard,
    ("sl2", "adjoint"): adjoint_rep,
    ("sl2-corrupt", "adjoint"): adjoint_rep,
    ("odd-square", "V_sq"): odd_square_module,
    ("koszul", "exterior"): koszul_module,
    ("dual-line", "dual-line"): dual_line_module,
    ("sl2-ext", "adjoint"): adjoint_rep,
}


def lie_fixture(name):
    return DGLAS[name]()


def module_fixture(dgla_name, module_name, g=None):
    g = g or lie_fixture(dgla_name)
    return MODULES[(dgla_name, module_name)](g)


# ---------------------------------------------------------------------------
# Rings


def dg_dual():
    """k ⊕ k·s with s in degree -1, s² = 0 and ds = 0."""
    z, o = Fraction(0), Fraction(1)
    mul = [[(o, z), (z, o)], [(z, o), (z, z)]]
    return DgArtinianAlgebra(["1", "s"], [0, -1], mul, [(z, z), (z, z)])


RINGS = {
    "k": field,
    "k[x]/x^2": lambda: artinian_from_truncation(1, 2, names=["x"]),
    "k[t]/t^3": lambda: artinian_from_truncation(1, 3, names=["t"]),
    "k[t]/t^4": lambda: artinian_from_truncation(1, 4, names=["t"]),
    "k[x,y]/(x,y)^2": lambda: artinian_from_truncation(2, 2, names=["x", "y"]),
    "k[x,y]/(x^2,y^2)": lambda: artinian_from_truncation(2, 3, relations=["x^2", "y^2"], names=["x", "y"]),
    "k+ks": dg_dual,
}


def ring_fixture(name):
    return RINGS[name]()


def catalog_morphisms():
    """Named ring morphisms between catalog rings (source, target built fresh)."""
    R = {name: make() for name, make in RINGS.items()}
    out = {
        "t^4->t^3": morphism_from_variables(R["k[t]/t^4"], R["k[t]/t^3"], ["t"]),
        "t^3->x^2": morphism_from_variables(R["k[t]/t^3"], R["k[x]/x^2"], ["x"]),
        "x^2->k": augmentation_map(R["k[x]/x^2"], R["k"]),
        "k->t^3": unit_map(R["k[t]/t^3"], R["k"]),
        "(x,y)^2->x^2": morphism_from_variables(R["k[x,y]/(x,y)^2"], R["k[x]/x^2"], ["x", "0"]),
        "(x^2,y^2)->x^2": morphism_from_variables(R["k[x,y]/(x^2,y^2)"], R["k[x]/x^2"], ["x", "0"]),
        "(x^2,y^2)->(x,y)^2": morphism_from_variables(R["k[x,y]/(x^2,y^2)"], R["k[x,y]/(x,y)^2"], ["x", "y"]),
        "id t^3": identity(R["k[t]/t^3"]),
    }
    H, proj = h0(R["k+ks"])
    out["dg->H0"] = proj
    return out
