from fractions import Fraction

import pytest

from helpers import rand_element, rand_invertible, random_complex, sympy_rank
from jumploci import fixtures as fx
from jumploci.complexes import (
    AcyclicSummand,
    BasisChange,
    ComplexError,
    FreeComplex,
    JumpIndex,
    check_complex,
    cohomology_dims_over_field,
    jump_ideal,
    k_cohomology_dims,
    minors_ideal,
    residue_complex,
    stabilize,
    tensor_along,
)
from jumploci.rings import artinian_from_truncation, field, identity, ideal_from_generators, morphism_from_variables

K = field()
ONE, ZERO = (Fraction(1),), (Fraction(0),)
ARTINIAN = [n for n in fx.RINGS if n != "k+ks"]


def D():
    return artinian_from_truncation(1, 2)


def test_check_complex_examples():
    assert check_complex(FreeComplex(K, 0, [1, 1, 1]))
    assert check_complex(FreeComplex(K, 0, [1, 1], {0: [[ONE]]}))
    assert not check_complex(FreeComplex(K, 0, [1, 1, 1], {0: [[ONE]], 1: [[ONE]]}))


def test_shape_mismatch_raises():
    with pytest.raises(ComplexError):
        FreeComplex(K, 0, [1, 2], {0: [[ONE]]})


def test_field_cohomology_examples():
    assert cohomology_dims_over_field(FreeComplex(K, 0, [1, 1])) == {0: 1, 1: 1}
    assert cohomology_dims_over_field(FreeComplex(K, 0, [1, 1], {0: [[ONE]]})) == {0: 0, 1: 0}
    # Koszul complex of the unit on one generator: k --1--> k
    assert set(cohomology_dims_over_field(FreeComplex(K, -1, [1, 1], {-1: [[ONE]]})).values()) == {0}
    with pytest.raises(ComplexError):
        cohomology_dims_over_field(FreeComplex(D(), 0, [1]))


def test_minors_examples():
    A = D()
    x = A.basis_vector(1)
    assert minors_ideal(A, [[x]], 1) == ideal_from_generators(A, [x])
    assert minors_ideal(A, [[x]], 0).is_unit()
    assert minors_ideal(A, [[A.one(), A.zero()], [A.zero(), x]], 2) == ideal_from_generators(A, [x])
    assert minors_ideal(A, [[x]], 2).is_zero()


@pytest.mark.parametrize("name", ARTINIAN)
def test_minors_monotone(name, rng):
    A = fx.ring_fixture(name)
    for _ in range(10):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        M = [[rand_element(rng, A) for _ in range(m)] for _ in range(n)]
        for r in range(0, min(n, m)):
            assert minors_ideal(A, M, r + 1) <= minors_ideal(A, M, r)


def test_jump_ideal_examples():
    A = D()
    x = A.basis_vector(1)
    for i in range(-1, 3):
        assert jump_ideal(FreeComplex(K, 0, []), JumpIndex(i, 1)).is_unit()
    assert jump_ideal(FreeComplex(K, 0, [1]), JumpIndex(0, 1)).is_zero()
    C = FreeComplex(A, 0, [1, 1], {0: [[x]]})
    assert jump_ideal(C, JumpIndex(0, 1)) == ideal_from_generators(A, [x])


def test_jump_index_requires_positive_level():
    with pytest.raises(ValueError):
        JumpIndex(0, 0)


@pytest.mark.parametrize("name", ARTINIAN)
def test_block_and_direct_paths_agree(name, rng):
    A = fx.ring_fixture(name)
    for _ in range(25):
        C = random_complex(rng, A, max_rank=3)
        for i in range(C.lo - 1, C.hi + 2):
            for k in range(1, 4):
                idx = JumpIndex(i, k)
                assert jump_ideal(C, idx) == jump_ideal(C, idx, method="direct")


def test_field_dichotomy_against_sympy(rng):
    for _ in range(60):
        C = random_complex(rng, K, max_rank=4)
        for i in C.degrees():
            r_out = sympy_rank([[e[0] for e in row] for row in C.d(i)], C.rank(i))
            r_in = sympy_rank([[e[0] for e in row] for row in C.d(i - 1)], C.rank(i - 1))
            h = C.rank(i) - r_out - r_in
            for k in range(1, 5):
                J = jump_ideal(C, JumpIndex(i, k))
                assert (J.is_zero() if h >= k else J.is_unit())


def test_stabilize_examples():
    A = D()
    x = A.basis_vector(1)
    C = FreeComplex(A, 0, [1, 1], {0: [[x]]})
    assert stabilize(C, []).same_as(C)
    S = stabilize(C, [AcyclicSummand(0)])
    T = stabilize(C, [BasisChange(0, ((A.add(A.one(), x),),))])
    C2 = FreeComplex(A, 0, [2, 1], {0: [[x, A.zero()]]})
    U = stabilize(C2, [BasisChange(0, ((A.add(A.one(), x), A.zero()), (A.zero(), A.one())))])
    for i in range(-1, 3):
        for k in (1, 2):
            idx = JumpIndex(i, k)
            assert jump_ideal(S, idx) == jump_ideal(C, idx)
            assert jump_ideal(T, idx) == jump_ideal(C, idx)
            assert jump_ideal(U, idx) == jump_ideal(C2, idx)


def test_non_invertible_basis_change_rejected():
    A = D()
    C = FreeComplex(A, 0, [1])
    with pytest.raises(ValueError):
        stabilize(C, [BasisChange(0, ((A.basis_vector(1),),))])


@pytest.mark.parametrize("name", ARTINIAN)
def test_stabilize_preserves_k_cohomology(name, rng):
    A = fx.ring_fixture(name)
    for _ in range(10):
        C = random_complex(rng, A, max_rank=2)
        j = rng.randint(C.lo - 1, C.hi)
        S = stabilize(C, [BasisChange(C.lo, rand_invertible(rng, A, C.rank(C.lo))), AcyclicSummand(j)])
        assert check_complex(S)
        hc, hs = k_cohomology_dims(C), k_cohomology_dims(S)
        for i in set(hc) | set(hs):
            assert hc.get(i, 0) == hs.get(i, 0)


def test_tensor_along_examples():
    A = artinian_from_truncation(1, 3)
    x2 = A.basis_vector(2)
    C = FreeComplex(A, 0, [1, 1], {0: [[x2]]})
    assert tensor_along(identity(A), C).same_as(C)
    f = morphism_from_variables(A, artinian_from_truncation(1, 2), ["x"])
    assert not any(tensor_along(f, C).d(0)[0][0])
    R = residue_complex(FreeComplex(A, 0, [1, 1], {0: [[A.add(A.one(), A.basis_vector(1))]]}))
    assert R.ring.dim == 1 and R.d(0) == [[ONE]]
    with pytest.raises(ComplexError):
        tensor_along(f, FreeComplex(K, 0, [1]))


@pytest.mark.parametrize("name", ARTINIAN)
def test_maximal_ideal_criterion(name, rng):
    A = fx.ring_fixture(name)
    for _ in range(20):
        C = random_complex(rng, A, max_rank=3)
        h = cohomology_dims_over_field(residue_complex(C))
        for i in C.degrees():
            for k in (1, 2, 3):
                assert jump_ideal(C, JumpIndex(i, k)).in_maximal() == (h[i] >= k)
