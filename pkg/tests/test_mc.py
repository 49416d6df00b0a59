from fractions import Fraction

import pytest

from helpers import rand_gauge, rand_lie, rand_mc
from jumploci import fixtures as fx
from jumploci.complexes import JumpIndex, check_complex, jump_ideal, tensor_along
from jumploci.dgla import adjoint_rep, dgla_from_entries, representation_from_entries
from jumploci.mc import (
    GaugeElement,
    MCCandidate,
    NotMaurerCartan,
    aomoto,
    bch,
    gauge,
    h0_pushforward,
    is_maurer_cartan,
    lie_element,
    lie_zero,
    mc_defect,
)
from jumploci.rings import parse_element

RINGS = list(fx.RINGS)
ORBIT_CASES = [("odd-square", "V_sq"), ("koszul", "exterior"), ("dual-line", "dual-line"), ("sl2-ext", "adjoint"), ("abelian", "cone")]


def t3():
    return fx.ring_fixture("k[t]/t^3")


def cand(g, A, pairs, cls=MCCandidate):
    return cls(g, A, lie_element(g, A, [(n, parse_element(A, r)) for n, r in pairs]))


def test_defect_examples():
    A = t3()
    g = fx.odd_square()
    assert mc_defect(cand(g, A, [])) == lie_zero(g, A)
    assert mc_defect(cand(g, A, [("e", "t")])) == lie_element(g, A, [("f", parse_element(A, "1/2*t^2"))])
    assert is_maurer_cartan(cand(g, A, [("e", "t^2")]))
    ab = fx.koszul_pair()
    assert is_maurer_cartan(cand(ab, A, [("a1", "t"), ("a2", "2*t - t^2")]))


def test_candidate_invariants():
    A, g = t3(), fx.odd_square()
    with pytest.raises(ValueError):
        cand(g, A, [("e", "1 + t")])
    with pytest.raises(ValueError):
        cand(g, A, [("f", "t")])
    with pytest.raises(ValueError):
        cand(g, A, [("e", "t")], GaugeElement)


def test_gauge_examples():
    A = t3()
    g = fx.sl2_exterior()
    w = cand(g, A, [("e.t", "t"), ("f.p", "t^2")])
    assert gauge(GaugeElement(g, A, lie_zero(g, A)), w) == w
    # abelian with dx = y: gauge by x⊗t shifts ω by -y⊗t
    h = dgla_from_entries(["x", "y"], [0, 1], differential=[("x", "y", 1)])
    out = gauge(cand(h, A, [("x", "t")], GaugeElement), cand(h, A, [("y", "t^2")]))
    assert out == cand(h, A, [("y", "t^2 - t")])
    # d = 0 and [u, ω] = 0
    k2 = fx.koszul_pair()
    w = cand(k2, A, [("a1", "t")])
    assert gauge(GaugeElement(k2, A, lie_zero(k2, A)), w) == w


def test_gauge_rejects_non_mc():
    A, g = t3(), fx.odd_square()
    with pytest.raises(NotMaurerCartan) as info:
        gauge(GaugeElement(g, A, lie_zero(g, A)), cand(g, A, [("e", "t")]))
    assert any(any(r) for r in info.value.defect)


@pytest.mark.parametrize("gname", ["odd-square", "sl2-ext", "abelian", "koszul"])
@pytest.mark.parametrize("rname", RINGS)
def test_gauge_preserves_mc_and_is_an_action(gname, rname, rng):
    g, A = fx.lie_fixture(gname), fx.ring_fixture(rname)
    for _ in range(4):
        w = rand_mc(rng, g, A)
        u, v = rand_gauge(rng, g, A), rand_gauge(rng, g, A)
        once = gauge(u, gauge(v, w))
        assert is_maurer_cartan(once)
        assert gauge(GaugeElement(g, A, bch(g, A, u.u, v.u)), w) == once


def test_bch_of_commuting_elements_is_sum():
    A, g = t3(), fx.sl2()
    X = lie_element(g, A, [("h", parse_element(A, "t"))])
    Y = lie_element(g, A, [("h", parse_element(A, "2*t^2"))])
    assert bch(g, A, X, Y) == lie_element(g, A, [("h", parse_element(A, "t + 2*t^2"))])


def test_aomoto_zero_and_dual_numbers():
    g = fx.dual_line()
    V = fx.dual_line_module(g)
    D = fx.ring_fixture("k[x]/x^2")
    C = aomoto(V, cand(g, D, [])).free_complex()
    assert all(not any(e) for m in C.diffs.values() for row in m for e in row)
    C = aomoto(V, cand(g, D, [("e", "x")])).free_complex()
    assert C.ranks == (1, 1) and C.d(0) == [[D.basis_vector(1)]]


@pytest.mark.parametrize("rname", RINGS)
def test_squares_to_zero_iff_mc(rname, rng):
    A = fx.ring_fixture(rname)
    for gname, mname in [("odd-square", "V_sq"), ("sl2-ext", "adjoint")]:
        g = fx.lie_fixture(gname)
        V = fx.module_fixture(gname, mname, g)
        for _ in range(8):
            c = MCCandidate(g, A, rand_lie(rng, g, A, 1)) if rng.random() < 0.6 else rand_mc(rng, g, A)
            assert aomoto(V, c).squares_to_zero() == is_maurer_cartan(c)


def test_degree_mismatch_needs_pushforward():
    B = fx.dg_dual()
    g = fx.odd_square()
    A = aomoto(fx.odd_square_module(g), cand(g, B, [("f", "s")]))
    with pytest.raises(ValueError):
        A.free_complex()
    P = h0_pushforward(A)
    assert P.ring.dim == 1
    assert all(not any(e) for m in P.diffs.values() for row in m for e in row)


def test_pushforward_is_identity_in_degree_zero(rng):
    A = t3()
    g = fx.sl2_exterior()
    V = adjoint_rep(g)
    c = rand_mc(rng, g, A)
    assert h0_pushforward(aomoto(V, c)).same_as(aomoto(V, c).free_complex())


def test_boundaries_vanish_in_pushforward():
    z, o = Fraction(0), Fraction(1)
    zero3 = (z, z, z)
    mul = [[(o, z, z), (z, o, z), (z, z, o)], [(z, o, z), zero3, zero3], [(z, z, o), zero3, zero3]]
    B = fx.DgArtinianAlgebra(["1", "x", "s"], [0, 0, -1], mul, [zero3, zero3, (z, o, z)])
    g = fx.dual_line()
    c = MCCandidate(g, B, lie_element(g, B, [("e", (0, 1, 0))]))
    P = h0_pushforward(aomoto(fx.dual_line_module(g), c))
    assert P.d(0) == [[(0,)]]


@pytest.mark.parametrize("key", ORBIT_CASES, ids="/".join)
def test_jump_ideals_gauge_invariant(key, rng):
    g = fx.lie_fixture(key[0])
    V = fx.module_fixture(key[0], key[1], g)
    for rname in ("k[t]/t^3", "k[x,y]/(x^2,y^2)", "k+ks"):
        A = fx.ring_fixture(rname)
        for _ in range(3):
            w = rand_mc(rng, g, A)
            w2 = gauge(rand_gauge(rng, g, A), w)
            C, C2 = h0_pushforward(aomoto(V, w)), h0_pushforward(aomoto(V, w2))
            assert check_complex(C) and check_complex(C2)
            for i in C.degrees():
                for k in (1, 2):
                    assert jump_ideal(C, JumpIndex(i, k)) == jump_ideal(C2, JumpIndex(i, k))


@pytest.mark.parametrize("name", sorted(fx.catalog_morphisms()))
def test_aomoto_commutes_with_base_change(name, rng):
    f = fx.catalog_morphisms()[name]
    for gname, mname in ORBIT_CASES:
        g = fx.lie_fixture(gname)
        V = fx.module_fixture(gname, mname, g)
        w = rand_mc(rng, g, f.source)
        if f.source.is_dg or f.target.is_dg:
            continue
        lhs = tensor_along(f, aomoto(V, w).free_complex())
        assert lhs.same_as(aomoto(V, w.pushforward(f)).free_complex())


def test_non_faithful_action_can_hide_defect():
    # a one-dimensional trivial module sees nothing of [ω, ω]
    A, g = t3(), fx.odd_square()
    V = representation_from_entries(g, ["v"], [0])
    c = cand(g, A, [("e", "t")])
    assert not is_maurer_cartan(c) and aomoto(V, c).squares_to_zero()
