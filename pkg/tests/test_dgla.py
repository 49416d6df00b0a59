from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jumploci import fixtures as fx
from jumploci.dgla import (
    RepMorphism,
    adjoint_rep,
    dgla_from_entries,
    representation_from_entries,
    tensor_label,
    tensor_rep,
    trivial_rep,
    validate_dgla,
    validate_representation,
)

VALID = [n for n in fx.DGLAS if n != "sl2-corrupt"]
VALID_MODULES = [key for key in fx.MODULES if key[0] != "sl2-corrupt"]


@pytest.mark.parametrize("name", VALID)
def test_shipped_dglas_valid(name):
    assert validate_dgla(fx.lie_fixture(name)) == []


@pytest.mark.parametrize("key", VALID_MODULES, ids=lambda k: "/".join(k))
def test_shipped_modules_valid(key):
    V = fx.module_fixture(*key)
    assert validate_representation(V) == []


def test_corrupt_sl2_witness():
    bad = validate_dgla(fx.sl2_corrupt())
    assert [(v.law, v.witness) for v in bad] == [("jacobi", ("e", "f", "h"))]


def test_verbatim_sign_breaks_sl2_adjoint():
    g = fx.sl2()
    assert validate_representation(adjoint_rep(g)) == []
    bad = validate_representation(adjoint_rep(g), "verbatim")
    assert bad and all(v.law == "bracket-compatibility" for v in bad)
    with pytest.raises(ValueError):
        validate_representation(adjoint_rep(g), "other")


def test_abelian_adjoint_is_zero():
    V = adjoint_rep(fx.abelian())
    assert all(not any(row) for table in V.action_table for row in table)


def test_odd_square_adjoint_valid():
    assert validate_representation(adjoint_rep(fx.odd_square())) == []


def test_bad_degree_and_d_squared_reported():
    g = dgla_from_entries(["a", "b"], [0, 0], differential=[("a", "b", 1)])
    assert {v.law for v in validate_dgla(g)} == {"differential-degree"}
    h = dgla_from_entries(["a", "b", "c"], [0, 1, 2], differential=[("a", "b", 1), ("b", "c", 1)])
    assert {v.law for v in validate_dgla(h)} == {"d-squared"}


def test_broken_chain_map_reported():
    g = dgla_from_entries(["x", "y"], [0, 1], differential=[("x", "y", 1)])
    # d(x v) = 0 but (dx) v = y v = w
    V = representation_from_entries(g, ["v", "w"], [0, 1], action=[("y", "v", "w", 1)])
    laws = {v.law for v in validate_representation(V)}
    assert "chain-map" in laws


def test_tensor_with_trivial_is_v():
    g = fx.sl2()
    V = fx.sl2_standard(g)
    T = tensor_rep(V, trivial_rep(g))
    assert T.action_table == V.action_table
    kk = tensor_rep(trivial_rep(g), trivial_rep(g))
    assert kk.dim == 1 and all(not any(r) for t in kk.action_table for r in t)


def test_sl2_adjoint_squared():
    g = fx.sl2()
    T = tensor_rep(adjoint_rep(g), adjoint_rep(g))
    assert T.dim == 9 and validate_representation(T) == []


def test_tensor_requires_same_dgla():
    with pytest.raises(ValueError):
        tensor_rep(adjoint_rep(fx.sl2()), adjoint_rep(fx.abelian()))


@pytest.mark.parametrize(
    "key", [("sl2", "standard"), ("odd-square", "V_sq"), ("abelian", "cone"), ("koszul", "exterior")], ids="/".join
)
def test_tensor_associative(key):
    g = fx.lie_fixture(key[0])
    V = fx.module_fixture(key[0], key[1], g)
    W = adjoint_rep(g) if key[0] != "koszul" else V
    left = tensor_rep(tensor_rep(V, W), V)
    right = tensor_rep(V, tensor_rep(W, V))
    assert validate_representation(left) == [] and validate_representation(right) == []
    # (a.b).c and a.(b.c) both print as a.b.c, so labels line up one to one
    assert left.labels == right.labels
    assert left.degrees == right.degrees
    assert left.action_table == right.action_table
    assert left.differential == right.differential


def test_tensor_label():
    assert tensor_label("v+", "e") == "v+.e"


def test_rep_morphism_identity_and_failure():
    g = fx.sl2()
    V = fx.sl2_standard(g)
    ident = RepMorphism(V, V, [V.basis_vector(j) for j in range(V.dim)])
    assert ident.violations() == []
    swap = RepMorphism(V, V, [V.basis_vector(1), V.basis_vector(0)])
    assert any(v.law == "equivariance" for v in swap.violations())


constants = st.integers(-3, 3)


@given(constants, constants, constants, constants)
def test_adjoint_valid_iff_jacobi(a, b, c, d):
    # three-dimensional degree-0 brackets; antisymmetry is built in
    g = dgla_from_entries(
        ["x", "y", "z"],
        [0, 0, 0],
        bracket=[("x", "y", "z", a), ("z", "x", "x", b), ("z", "y", "y", c), ("x", "y", "x", d)],
    )
    jacobi_ok = validate_dgla(g) == []
    assert jacobi_ok == (validate_representation(adjoint_rep(g)) == [])


@given(st.integers(-2, 2), st.integers(-2, 2))
def test_odd_adjoint_metamorphic(a, b):
    # e (deg 1), f (deg 2), u (deg 3) with [e,e] = a f and [e,f] = b u
    g = dgla_from_entries(["e", "f", "u"], [1, 2, 3], bracket=[("e", "e", "f", a), ("e", "f", "u", b)])
    assert (validate_dgla(g) == []) == (validate_representation(adjoint_rep(g)) == [])


def test_violation_reports_sorted():
    bad = validate_representation(adjoint_rep(fx.sl2()), "verbatim")
    assert bad == sorted(bad, key=lambda v: (v.witness, v.law))


def test_fraction_constants():
    g = dgla_from_entries(["x", "y"], [0, 0], bracket=[("x", "y", "y", Fraction(1, 2))])
    assert g.bracket(g.basis_vector(0), g.basis_vector(1)) == (0, Fraction(1, 2))
