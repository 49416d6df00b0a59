"""Bounded free cochain complexes over artinian algebras and their jump ideals."""

import itertools
from dataclasses import dataclass

from .linalg import rank as k_rank
from .rings import (
    ZERO,
    AlgebraError,
    augmentation_map,
    ideal_from_generators,
    ideal_product,
    ideal_sum,
    unit_ideal,
    zero_ideal,
)

# minor enumeration is combinatorial; larger matrices are refused
MAX_MATRIX_DIM = 12


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class JumpIndex:
    i: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("jump level k must be at least 1")


def zero_matrix(ring, nrows, ncols):
    z = ring.zero()
    return [[z] * ncols for _ in range(nrows)]


def ring_matmul(ring, a, b, n, m, p):
    """(n×m)·(m×p) over ``ring``."""
    out = zero_matrix(ring, n, p)
    for i in range(n):
        for j in range(p):
            acc = ring.zero()
            for k in range(m):
                x, y = a[i][k], b[k][j]
                if any(x) and any(y):
                    acc = ring.add(acc, ring.mul(x, y))
            out[i][j] = acc
    return out


def is_zero_matrix(m):
    return all(not any(e) for row in m for e in row)


class FreeComplex:
    """Cochain complex ``F^lo -> ... -> F^hi`` of free modules over ``ring``.

    ``diffs[i]`` is the matrix of ``d_i: F^i -> F^{i+1}`` with shape
    ``rank(i+1) × rank(i)`` and entries that are ring elements.
    """

    def __init__(self, ring, lo, ranks, diffs=None):
        self.ring = ring
        self.lo = int(lo)
        self.ranks = tuple(int(r) for r in ranks)
        if any(r < 0 for r in self.ranks):
            raise ComplexError("ranks must be non-negative")
        diffs = dict(diffs or {})
        self.diffs = {}
        for i in range(self.lo, self.hi):
            m = diffs.pop(i, None)
            rows, cols = self.rank(i + 1), self.rank(i)
            if m is None:
                m = zero_matrix(ring, rows, cols)
            m = [[tuple(e) for e in row] for row in m]
            if len(m) != rows or any(len(row) != cols for row in m):
                raise ComplexError(f"d_{i} must have shape {rows}x{cols}")
            for row in m:
                for e in row:
                    if len(e) != ring.dim:
                        raise ComplexError(f"entry of d_{i} is not an element of the ring")
            self.diffs[i] = m
        for i, m in diffs.items():
            if any(any(e) for row in m for e in row):
                raise ComplexError(f"d_{i} lies outside the degree window")

    @property
    def hi(self):
        return self.lo + len(self.ranks) - 1

    def rank(self, i):
        if self.lo <= i <= self.hi:
            return self.ranks[i - self.lo]
        return 0

    def d(self, i):
        if i in self.diffs:
            return self.diffs[i]
        return zero_matrix(self.ring, self.rank(i + 1), self.rank(i))

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def same_as(self, other):
        return (
            self.ring.same_as(other.ring)
            and self.lo == other.lo
            and self.ranks == other.ranks
            and all(self.d(i) == other.d(i) for i in range(self.lo, self.hi))
        )

    def __repr__(self):
        return f"FreeComplex(lo={self.lo}, ranks={list(self.ranks)}, ring={self.ring!r})"


def check_complex(C):
    """True iff every composite d_{i+1} d_i vanishes exactly."""
    R = C.ring
    for i in range(C.lo, C.hi - 1):
        prod = ring_matmul(R, C.d(i + 1), C.d(i), C.rank(i + 2), C.rank(i + 1), C.rank(i))
        if not is_zero_matrix(prod):
            return False
    return True


def _require_field(C):
    if C.ring.dim != 1:
        raise ComplexError("complex is not over the ground field")


def field_matrix(m):
    return [[e[0] for e in row] for row in m]


def cohomology_dims_over_field(C):
    _require_field(C)
    ranks = {i: k_rank(field_matrix(C.d(i)), C.rank(i)) for i in range(C.lo - 1, C.hi + 1)}
    return {i: C.rank(i) - ranks[i] - ranks[i - 1] for i in C.degrees()}


def k_linear_matrix(ring, m, nrows, ncols):
    """An A-linear map A^ncols -> A^nrows written as a matrix over k."""
    n = ring.dim
    out = [[ZERO] * (ncols * n) for _ in range(nrows * n)]
    for r in range(nrows):
        for c in range(ncols):
            e = m[r][c]
            if not any(e):
                continue
            for b in range(n):
                prod = ring.mul(e, ring.basis_vector(b))
                for l, v in enumerate(prod):
                    if v:
                        out[r * n + l][c * n + b] = v
    return out


def k_cohomology_dims(C):
    """dim_k H^i of the complex viewed as k-vector spaces."""
    n = C.ring.dim
    ranks = {}
    for i in range(C.lo - 1, C.hi + 1):
        M = k_linear_matrix(C.ring, C.d(i), C.rank(i + 1), C.rank(i))
        ranks[i] = k_rank(M, C.rank(i) * n) if M else 0
    return {i: C.rank(i) * n - ranks[i] - ranks[i - 1] for i in C.degrees()}


# ---------------------------------------------------------------------------
# Determinantal ideals


def _minors_for_rows(ring, M, rows, ncols, r):
    """All r×r minors using ``rows``, keyed by column tuple."""
    memo = {}

    def det(k, cols):
        if k == r:
            return ring.one()
        key = cols
        if key in memo:
            return memo[key]
        acc = ring.zero()
        row = M[rows[k]]
        for idx, c in enumerate(cols):
            e = row[c]
            if not any(e):
                continue
            sub = det(k + 1, cols[:idx] + cols[idx + 1 :])
            if not any(sub):
                continue
            term = ring.mul(e, sub)
            acc = ring.sub(acc, term) if idx % 2 else ring.add(acc, term)
        memo[key] = acc
        return acc

    for cols in itertools.combinations(range(ncols), r):
        yield det(0, cols)


def determinant(ring, M):
    n = len(M)
    if n == 0:
        return ring.one()
    return next(_minors_for_rows(ring, M, list(range(n)), n, n))


def minors_ideal(ring, M, r, nrows=None, ncols=None):
    """Ideal generated by the r×r minors of ``M`` (entries in ``ring``)."""
    if nrows is None:
        nrows = len(M)
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if r <= 0:
        return unit_ideal(ring)
    if r > min(nrows, ncols):
        return zero_ideal(ring)
    if max(nrows, ncols) > MAX_MATRIX_DIM:
        raise ComplexError(f"matrix {nrows}x{ncols} exceeds the minor-enumeration cap {MAX_MATRIX_DIM}")
    current = zero_ideal(ring)
    for rows in itertools.combinations(range(nrows), r):
        for minor in _minors_for_rows(ring, M, rows, ncols, r):
            if any(minor) and not current.contains(minor):
                current = ideal_from_generators(ring, list(current.generators) + [minor])
                if current.is_unit():
                    return current
    return current


def block_diagonal(ring, P, Q, p_shape, q_shape):
    (pr, pc), (qr, qc) = p_shape, q_shape
    out = zero_matrix(ring, pr + qr, pc + qc)
    for i in range(pr):
        for j in range(pc):
            out[i][j] = P[i][j]
    for i in range(qr):
        for j in range(qc):
            out[pr + i][pc + j] = Q[i][j]
    return out


def jump_matrix(C, i):
    """Matrix of ``d_{i-1} ⊕ d_i``: shape (n_i + n_{i+1}) × (n_{i-1} + n_i)."""
    return block_diagonal(
        C.ring,
        C.d(i - 1),
        C.d(i),
        (C.rank(i), C.rank(i - 1)),
        (C.rank(i + 1), C.rank(i)),
    )


def jump_ideal(C, idx, method="blocks"):
    """Cohomology jump ideal J_k^i: minors of size rank(F^i) - k + 1 of d_{i-1} ⊕ d_i.

    ``method="blocks"`` uses I_r(P ⊕ Q) = Σ_{a+b=r} I_a(P)·I_b(Q);
    ``method="direct"`` enumerates minors of the assembled block matrix.
    """
    if not isinstance(idx, JumpIndex):
        idx = JumpIndex(*idx)
    R = C.ring
    i = idx.i
    r = C.rank(i) - idx.k + 1
    if method == "direct":
        return minors_ideal(R, jump_matrix(C, i), r, C.rank(i) + C.rank(i + 1), C.rank(i - 1) + C.rank(i))
    if r <= 0:
        return unit_ideal(R)
    P, ps = C.d(i - 1), (C.rank(i), C.rank(i - 1))
    Q, qs = C.d(i), (C.rank(i + 1), C.rank(i))
    total = zero_ideal(R)
    for a in range(0, r + 1):
        b = r - a
        if a > min(ps) or b > min(qs):
            continue
        Ia = minors_ideal(R, P, a, *ps)
        if Ia.is_zero():
            continue
        Ib = minors_ideal(R, Q, b, *qs)
        total = ideal_sum(total, ideal_product(Ia, Ib))
        if total.is_unit():
            break
    return total


# ---------------------------------------------------------------------------
# Base change and stabilization


def tensor_along(f, C):
    if not C.ring.same_as(f.source):
        raise ComplexError("complex does not live over the morphism's source")
    diffs = {i: [[f(e) for e in row] for row in m] for i, m in C.diffs.items()}
    return FreeComplex(f.target, C.lo, C.ranks, diffs)


def residue_complex(C):
    return tensor_along(augmentation_map(C.ring), C)


@dataclass(frozen=True)
class AcyclicSummand:
    """Direct sum with ``A --1--> A`` placed in degrees ``degree``, ``degree+1``."""

    degree: int


@dataclass(frozen=True)
class BasisChange:
    """Replace the basis of F^degree via an invertible matrix over the ring."""

    degree: int
    matrix: tuple


def ring_matrix_inverse(ring, M):
    """Inverse over a local ring; invertible iff the residue determinant is nonzero."""
    n = len(M)
    work = [list(M[i]) + [ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col][0]), None)
        if pivot is None:
            raise AlgebraError("matrix is not invertible over the local ring")
        work[col], work[pivot] = work[pivot], work[col]
        inv = ring.inverse(work[col][col])
        work[col] = [ring.mul(inv, e) for e in work[col]]
        for r in range(n):
            if r != col and any(work[r][col]):
                c = work[r][col]
                work[r] = [ring.sub(e, ring.mul(c, p)) for e, p in zip(work[r], work[col])]
    return [row[n:] for row in work]


def _apply_move(C, move):
    R = C.ring
    if isinstance(move, AcyclicSummand):
        j = move.degree
        lo = min(C.lo, j)
        hi = max(C.hi, j + 1)
        ranks = [C.rank(t) for t in range(lo, hi + 1)]
        ranks[j - lo] += 1
        ranks[j + 1 - lo] += 1
        diffs = {}
        for t in range(lo, hi):
            old = C.d(t)
            rows, cols = ranks[t + 1 - lo], ranks[t - lo]
            m = zero_matrix(R, rows, cols)
            for a in range(C.rank(t + 1)):
                for b in range(C.rank(t)):
                    m[a][b] = old[a][b]
            if t == j:
                m[rows - 1][cols - 1] = R.one()
            diffs[t] = m
        return FreeComplex(R, lo, ranks, diffs)
    if isinstance(move, BasisChange):
        j = move.degree
        n = C.rank(j)
        P = [[tuple(e) for e in row] for row in move.matrix]
        if len(P) != n or any(len(row) != n for row in P):
            raise ComplexError(f"basis change in degree {j} must be {n}x{n}")
        Pinv = ring_matrix_inverse(R, P)
        diffs = dict(C.diffs)
        if j in diffs:
            diffs[j] = ring_matmul(R, diffs[j], Pinv, C.rank(j + 1), n, n)
        if j - 1 in diffs:
            diffs[j - 1] = ring_matmul(R, P, diffs[j - 1], n, n, C.rank(j - 1))
        return FreeComplex(R, C.lo, C.ranks, diffs)
    raise TypeError(f"unknown stabilization move {move!r}")


def stabilize(C, moves):
    """Apply acyclic-summand and basis-change moves; the result is quasi-isomorphic to C."""
    for move in moves:
        C = _apply_move(C, move)
    return C
