"""Maurer-Cartan elements, gauge action and Aomoto complexes over test rings.

An element of g ⊗ A is a tuple indexed by the Lie basis whose entries are
ring elements.  Signs follow the Koszul rule:

    [x⊗a, y⊗b] = (-1)^{|a||y|} [x,y] ⊗ ab
    d(x⊗a)     = dx⊗a + (-1)^{|x|} x⊗da

and g ⊗ A acts on V ⊗ A by (x⊗a)(v⊗b) = (-1)^{|a||v|} (xv)⊗(ab).
"""

import itertools
import math
from fractions import Fraction

from .complexes import FreeComplex
from .linalg import mat_mul
from .rings import ZERO, h0

HALF = Fraction(1, 2)


class NotMaurerCartan(ValueError):
    """Raised when an operation needs a Maurer-Cartan element; carries the defect."""

    def __init__(self, defect, message="element is not Maurer-Cartan"):
        super().__init__(message)
        self.defect = defect


def _sign(e):
    return -1 if e % 2 else 1


# ---------------------------------------------------------------------------
# Arithmetic in g ⊗ A


def lie_zero(g, A):
    return tuple(A.zero() for _ in range(g.dim))


def lie_element(g, A, pairs):
    """Element from ``[(lie_name_or_index, ring_element), ...]``."""
    out = [A.zero() for _ in range(g.dim)]
    for key, r in pairs:
        a = key if isinstance(key, int) else g.space.index(key)
        out[a] = A.add(out[a], tuple(Fraction(c) for c in r))
    return tuple(out)


def lie_add(A, X, Y):
    return tuple(A.add(a, b) for a, b in zip(X, Y))


def lie_sub(A, X, Y):
    return tuple(A.sub(a, b) for a, b in zip(X, Y))


def lie_scale(A, c, X):
    return tuple(A.scale(c, a) for a in X)


def lie_is_zero(X):
    return not any(any(a) for a in X)


def total_degrees(g, A, X):
    return {g.degrees[a] + A.degrees[i] for a, r in enumerate(X) for i, c in enumerate(r) if c}


def tensor_bracket(g, A, X, Y):
    out = [[ZERO] * A.dim for _ in range(g.dim)]
    adeg, gdeg = A.degrees, g.degrees
    for a, ra in enumerate(X):
        if not any(ra):
            continue
        for b, rb in enumerate(Y):
            if not any(rb):
                continue
            br = g.bracket_table[a][b]
            if not any(br):
                continue
            for i, x in enumerate(ra):
                if not x:
                    continue
                s = _sign(adeg[i] * gdeg[b])
                for j, y in enumerate(rb):
                    if not y:
                        continue
                    prod = A.mul_table[i][j]
                    if not any(prod):
                        continue
                    coef = s * x * y
                    for l, c in enumerate(br):
                        if c:
                            row = out[l]
                            for t, p in enumerate(prod):
                                if p:
                                    row[t] += coef * c * p
    return tuple(tuple(r) for r in out)


def tensor_d(g, A, X):
    out = [list(A.zero()) for _ in range(g.dim)]
    for a, r in enumerate(X):
        if not any(r):
            continue
        for l, c in enumerate(g.differential[a]):
            if c:
                for t, v in enumerate(r):
                    out[l][t] += c * v
        if A.is_dg:
            dr = A.d(r)
            s = _sign(g.degrees[a])
            for t, v in enumerate(dr):
                out[a][t] += s * v
    return tuple(tuple(r) for r in out)


def push_lie(f, X):
    """Apply a ring morphism to the coefficients."""
    return tuple(f(r) for r in X)


def format_lie(g, A, X):
    parts = []
    for a, r in enumerate(X):
        if any(r):
            parts.append(f"{g.labels[a]}⊗({A.format(r)})")
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Candidates


class MCCandidate:
    """ω in (g ⊗ m_A) of total degree 1."""

    degree = 1

    def __init__(self, dgla, ring, omega):
        self.dgla = dgla
        self.ring = ring
        self.omega = tuple(tuple(Fraction(c) for c in r) for r in omega)
        if len(self.omega) != dgla.dim or any(len(r) != ring.dim for r in self.omega):
            raise ValueError("coefficients have the wrong shape")
        if any(r[0] for r in self.omega):
            raise ValueError("coefficients must lie in the maximal ideal")
        degs = total_degrees(dgla, ring, self.omega)
        if degs - {self.degree}:
            raise ValueError(f"element must be homogeneous of total degree {self.degree}, found {sorted(degs)}")

    @classmethod
    def from_pairs(cls, dgla, ring, pairs):
        return cls(dgla, ring, lie_element(dgla, ring, pairs))

    def is_zero(self):
        return lie_is_zero(self.omega)

    def pushforward(self, f):
        return type(self)(self.dgla, f.target, push_lie(f, self.omega))

    def __eq__(self, other):
        return type(self) is type(other) and self.ring.same_as(other.ring) and self.omega == other.omega

    def __repr__(self):
        return f"{type(self).__name__}({format_lie(self.dgla, self.ring, self.omega)})"


class GaugeElement(MCCandidate):
    """u in (g ⊗ m_A) of total degree 0."""

    degree = 0

    @property
    def u(self):
        return self.omega


def mc_defect(c):
    """dω + ½[ω,ω] in g ⊗ A."""
    g, A, w = c.dgla, c.ring, c.omega
    return lie_add(A, tensor_d(g, A, w), lie_scale(A, HALF, tensor_bracket(g, A, w, w)))


def is_maurer_cartan(c):
    return lie_is_zero(mc_defect(c))


def _series_limit(A):
    return A.nilpotency_index() + 1


def ad_series(g, A, u, X, coeffs):
    """Σ_n coeffs(n) ad_u^n(X), stopping once ad_u^n(X) vanishes."""
    total = lie_zero(g, A)
    term = X
    for n in range(_series_limit(A) * 2 + 2):
        if lie_is_zero(term):
            break
        total = lie_add(A, total, lie_scale(A, coeffs(n), term))
        term = tensor_bracket(g, A, u, term)
    return total


def gauge(u, c):
    """e^{ad_u}(ω) - Σ_{n≥0} ad_u^n/(n+1)! (du)."""
    g, A = c.dgla, c.ring
    if not u.ring.same_as(A):
        raise ValueError("gauge element and candidate live over different rings")
    defect = mc_defect(c)
    if not lie_is_zero(defect):
        raise NotMaurerCartan(defect)
    rotated = ad_series(g, A, u.u, c.omega, lambda n: Fraction(1, math.factorial(n)))
    drift = ad_series(g, A, u.u, tensor_d(g, A, u.u), lambda n: Fraction(1, math.factorial(n + 1)))
    return MCCandidate(g, A, lie_sub(A, rotated, drift))


def _nested(g, A, word):
    out = word[-1]
    for letter in reversed(word[:-1]):
        out = tensor_bracket(g, A, letter, out)
    return out


def bch(g, A, X, Y):
    """log(e^X e^Y) by Dynkin's formula, exact because m_A is nilpotent."""
    maxlen = max(A.nilpotency_index() - 1, 1)
    total = lie_zero(g, A)
    for n in range(1, maxlen + 1):
        pairs = [(r, s) for r in range(maxlen + 1) for s in range(maxlen + 1) if 0 < r + s <= maxlen]
        for combo in itertools.product(pairs, repeat=n):
            length = sum(r + s for r, s in combo)
            if length > maxlen:
                continue
            word = []
            denom = 1
            for r, s in combo:
                word.extend([X] * r + [Y] * s)
                denom *= math.factorial(r) * math.factorial(s)
            coeff = Fraction(_sign(n - 1), n * length * denom)
            total = lie_add(A, total, lie_scale(A, coeff, _nested(g, A, word)))
    return total


# ---------------------------------------------------------------------------
# Aomoto complexes


class AomotoComplex:
    """V ⊗ A with differential d_ω = d_V ⊗ 1 + ω acting.

    ``entries[l][j]`` is the ring coefficient of v_l in d_ω(v_j ⊗ 1).
    """

    def __init__(self, module, candidate):
        if not module.dgla.same_as(candidate.dgla):
            raise ValueError("module and Maurer-Cartan candidate use different DGLAs")
        self.module = module
        self.candidate = candidate
        V, A, w = module, candidate.ring, candidate.omega
        n = V.dim
        entries = [[list(A.zero()) for _ in range(n)] for _ in range(n)]
        for j in range(n):
            for l, c in enumerate(V.differential[j]):
                if c:
                    entries[l][j][0] += c
            for a, r in enumerate(w):
                if not any(r):
                    continue
                for l, c in enumerate(V.action_table[a][j]):
                    if not c:
                        continue
                    for i, x in enumerate(r):
                        if x:
                            entries[l][j][i] += _sign(A.degrees[i] * V.degrees[j]) * c * x
        self.entries = tuple(tuple(tuple(e) for e in row) for row in entries)

    @property
    def ring(self):
        return self.candidate.ring

    @property
    def omega(self):
        return self.candidate

    def degree_blocks(self):
        """``(lo, ranks, positions)`` where positions[j] = (degree, slot)."""
        degs = self.module.degrees
        if not degs:
            return 0, [], []
        lo, hi = min(degs), max(degs)
        counts = {p: 0 for p in range(lo, hi + 1)}
        positions = []
        for p in degs:
            positions.append((p, counts[p]))
            counts[p] += 1
        return lo, [counts[p] for p in range(lo, hi + 1)], positions

    def _assemble(self, ring, transform):
        lo, ranks, pos = self.degree_blocks()
        diffs = {}
        for p in range(lo, lo + len(ranks) - 1):
            diffs[p] = [[ring.zero() for _ in range(ranks[p - lo])] for _ in range(ranks[p + 1 - lo])]
        for l, row in enumerate(self.entries):
            pl, sl = pos[l]
            for j, e in enumerate(row):
                if not any(e):
                    continue
                pj, sj = pos[j]
                img = transform(e)
                if not any(img):
                    continue
                if pl != pj + 1:
                    raise ValueError("entry of nonzero ring degree; use h0_pushforward")
                diffs[pj][sl][sj] = img
        return FreeComplex(ring, lo, ranks, diffs)

    def free_complex(self):
        """The complex as free modules over a ring concentrated in degree 0."""
        A = self.ring
        if A.is_dg and any(A.degrees):
            raise ValueError("ring is not concentrated in degree 0; use h0_pushforward")
        return self._assemble(A, lambda e: e)

    def total_operator(self):
        """d_ω as a k-linear matrix on the basis v_j ⊗ b_i (index j*dim A + i)."""
        V, A, w = self.module, self.ring, self.candidate.omega
        n, m = V.dim, A.dim
        N = n * m
        M = [[ZERO] * N for _ in range(N)]
        for j in range(n):
            for i in range(m):
                col = j * m + i
                b = A.basis_vector(i)
                for l, c in enumerate(V.differential[j]):
                    if c:
                        M[l * m + i][col] += c
                if A.is_dg:
                    s = _sign(V.degrees[j])
                    for t, c in enumerate(A.d(b)):
                        if c:
                            M[j * m + t][col] += s * c
                for a, r in enumerate(w):
                    if not any(r):
                        continue
                    for l, c in enumerate(V.action_table[a][j]):
                        if not c:
                            continue
                        for q, x in enumerate(r):
                            if not x:
                                continue
                            s = _sign(A.degrees[q] * V.degrees[j])
                            for t, p in enumerate(A.mul_table[q][i]):
                                if p:
                                    M[l * m + t][col] += s * c * x * p
        return M

    def squares_to_zero(self):
        M = self.total_operator()
        if not M:
            return True
        return not any(any(row) for row in mat_mul(M, M))


def aomoto(V, candidate):
    return AomotoComplex(V, candidate)


def h0_pushforward(C):
    """H^0(A) ⊗_A (V ⊗ A, d_ω) as a free complex over H^0(A)."""
    H, proj = h0(C.ring)
    return C._assemble(H, proj)

