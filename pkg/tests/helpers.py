"""Random complexes, random ring elements and an independent rank oracle."""

import itertools
import math
from fractions import Fraction

import sympy

from jumploci.complexes import FreeComplex
from jumploci.linalg import kernel
from jumploci.mc import GaugeElement, MCCandidate, is_maurer_cartan
from jumploci.rings import ideal_from_generators, ideal_product

SMALL = [Fraction(n) for n in (-2, -1, 1, 2)] + [Fraction(1, 2), Fraction(-3, 2)]


def rand_q(rng, zero_bias=0.3):
    if rng.random() < zero_bias:
        return Fraction(0)
    return rng.choice(SMALL)


def rand_element(rng, A, nilpotent=False, zero_bias=0.3):
    v = [rand_q(rng, zero_bias) for _ in range(A.dim)]
    if nilpotent:
        v[0] = Fraction(0)
    return tuple(v)


def rand_unit(rng, A):
    v = list(rand_element(rng, A))
    v[0] = rng.choice(SMALL)
    return tuple(v)


def rand_invertible(rng, A, n):
    """Unipotent-times-diagonal matrix over A, invertible by construction."""
    M = [[A.zero() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        M[i][i] = rand_unit(rng, A)
        for j in range(i + 1, n):
            M[i][j] = rand_element(rng, A)
    if n > 1 and rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        M[i], M[j] = M[j], M[i]
    return M


def _annihilator_rows(A, prev, pr, pc):
    """k-basis of rows y ∈ A^pr with y·prev = 0, as flat coordinate vectors."""
    n = A.dim
    # column (r, b) holds the coordinates of e_b·prev[r][c] for every c
    cols = []
    for r in range(pr):
        for b in range(n):
            img = []
            for c in range(pc):
                img.extend(A.mul(A.basis_vector(b), prev[r][c]))
            cols.append(img)
    M = [[cols[j][i] for j in range(pr * n)] for i in range(pc * n)]
    return kernel(M, pc * n, pr * n)


def random_complex(rng, A, max_rank=3, length=None, lo=None):
    """A random bounded complex of free A-modules with d∘d = 0 exactly.

    d_lo is arbitrary; every later row is a random combination of the
    k-linear annihilator of the previous differential.
    """
    if length is None:
        length = rng.randint(1, 4)
    if lo is None:
        lo = rng.randint(-1, 1)
    ranks = [rng.randint(0, max_rank) for _ in range(length)]
    n = A.dim
    diffs = {}
    prev = None
    for t in range(length - 1):
        nr, nc = ranks[t + 1], ranks[t]
        if prev is None:
            m = [[rand_element(rng, A, zero_bias=0.5) for _ in range(nc)] for _ in range(nr)]
        else:
            basis = _annihilator_rows(A, prev, nc, ranks[t - 1])
            m = []
            for _ in range(nr):
                acc = [Fraction(0)] * (nc * n)
                if basis and rng.random() > 0.15:
                    for vec in rng.sample(basis, min(len(basis), rng.randint(1, 3))):
                        c = rng.choice(SMALL)
                        acc = [a + c * b for a, b in zip(acc, vec)]
                m.append([tuple(acc[c * n : (c + 1) * n]) for c in range(nc)])
        diffs[lo + t] = m
        prev = m
    return FreeComplex(A, lo, ranks, diffs)


def sympy_rank(rows, ncols):
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in r] for r in rows]).rank()


def exterior_ce_matrices(g):
    """d: Λ^p g* -> Λ^{p+1} g* for g concentrated in degree 0, from the classical formula.

    (dφ)(x_0, ..., x_p) = Σ_{i<j} (-1)^{i+j} φ([x_i, x_j], x_0, ..^i..^j.., x_p),
    with φ stored by its values on increasing index tuples.
    """
    assert all(d == 0 for d in g.degrees)
    n = g.dim
    out = {}
    for p in range(0, n):
        src = list(itertools.combinations(range(n), p))
        tgt = list(itertools.combinations(range(n), p + 1))
        pos = {s: c for c, s in enumerate(src)}
        M = [[Fraction(0)] * len(src) for _ in tgt]
        for r, T in enumerate(tgt):
            for i, j in itertools.combinations(range(p + 1), 2):
                rest = [T[t] for t in range(p + 1) if t not in (i, j)]
                for l, c in enumerate(g.bracket_table[T[i]][T[j]]):
                    if not c or l in rest:
                        continue
                    word = [l] + rest
                    sign = _perm_sign(word)
                    M[r][pos[tuple(sorted(word))]] += (-1) ** (i + j) * sign * c
        out[p] = (M, len(tgt), len(src))
    return out


def _perm_sign(word):
    sign = 1
    w = list(word)
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] > w[j]:
                sign = -sign
    return sign


def exterior_ce_dims(g):
    mats = exterior_ce_matrices(g)
    n = g.dim
    ranks = {p: sympy_rank(M, nc) if nr and nc else 0 for p, (M, nr, nc) in mats.items()}
    ranks[-1] = 0
    ranks[n] = 0
    return {p: math.comb(n, p) - ranks[p] - ranks[p - 1] for p in range(n + 1)}


def maximal_power_basis(A, e):
    """k-basis of m^e."""
    m = ideal_from_generators(A, [A.basis_vector(i) for i in range(1, A.dim)])
    I = m
    for _ in range(e - 1):
        I = ideal_product(I, m)
    return list(I.normal_form)


def rand_lie(rng, g, A, degree, span=None):
    """Random element of (g ⊗ m)_degree, coefficients from ``span`` (default m)."""
    out = []
    for a in range(g.dim):
        r = A.zero()
        for i in range(1, A.dim):
            if g.degrees[a] + A.degrees[i] != degree or rng.random() < 0.4:
                continue
            if span is None:
                r = A.add(r, A.scale(rng.choice(SMALL), A.basis_vector(i)))
        if span is not None:
            for v in span:
                if rng.random() < 0.6:
                    w = tuple(c if g.degrees[a] + A.degrees[i] == degree else Fraction(0) for i, c in enumerate(v))
                    r = A.add(r, A.scale(rng.choice(SMALL), w))
        out.append(r)
    return tuple(out)


def rand_mc(rng, g, A, tries=4):
    """A random Maurer-Cartan element, generic when rejection sampling finds one."""
    for _ in range(tries):
        c = MCCandidate(g, A, rand_lie(rng, g, A, 1))
        if is_maurer_cartan(c):
            return c
    N = A.nilpotency_index()
    square_zero = maximal_power_basis(A, max(1, (N + 1) // 2))
    c = MCCandidate(g, A, rand_lie(rng, g, A, 1, square_zero))
    assert is_maurer_cartan(c)
    return c


def rand_gauge(rng, g, A):
    return GaugeElement(g, A, rand_lie(rng, g, A, 0))
