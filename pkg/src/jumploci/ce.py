"""Weight-truncated Chevalley-Eilenberg cochains C*(g) and C*(g, V).

Cochains are functionals on graded-symmetric words in the suspension of g:
a Lie basis element of degree r sits in shifted degree r - 1, and a
functional on inputs x_1..x_m has total degree Σ (1 - r_j).  Basis
functionals are dual to canonical monomials (nondecreasing index tuples,
odd shifted elements never repeated).  Functionals of weight > W are
dropped; the truncated cochains are the dual of a sub-dg-coalgebra, so the
differential still squares to zero exactly.

The differential is λ ↦ λ∘Q, where Q is the coderivation built from
l1(sx) = -s(dx) and l2(sx, sy) = (-1)^{|x|} s[x, y].  With coefficients,

    (Dφ)(y) = (-1)^{|y|} d_V φ(y) + φ(Qy) - Σ_i κ_i (-1)^{|x_i||φ|} x_i·φ(y without y_i)

where κ_i is the Koszul sign for moving y_i to the front.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .dgla import require_valid
from .linalg import rank

ZERO = Fraction(0)
DEFAULT_WEIGHT = 4


class WeightOverflow(ValueError):
    """A product would need functionals beyond the truncation weight."""


def _sign(e):
    return -1 if e % 2 else 1


@dataclass
class CeCohomology:
    dims: dict
    unreliable: set = field(default_factory=set)


class CeComplex:
    """Truncated CE complex of ``g`` with coefficients ``module`` (None = trivial k).

    Degrees use the suspension convention; ``internal_degree`` gives the
    unshifted label of a basis monomial.
    """

    grading = "suspension"

    def __init__(self, g, module=None, weight=DEFAULT_WEIGHT, check=False):
        if module is not None and not module.dgla.same_as(g):
            raise ValueError("module is over a different DGLA")
        self.dgla = g
        self.module = module
        self.weight = int(weight)
        if self.weight < 0:
            raise ValueError("truncation weight must be nonnegative")
        self.shifted = tuple(r - 1 for r in g.degrees)
        self.monomials = self._enumerate_monomials()
        self._mono_index = {m: i for i, m in enumerate(self.monomials)}
        if module is None:
            self.basis = [(m, None) for m in self.monomials]
        else:
            self.basis = [(m, v) for m in self.monomials for v in range(module.dim)]
        self.index = {b: i for i, b in enumerate(self.basis)}
        self.degrees = [self._degree(b) for b in self.basis]
        self._q = {m: self._q_on(m) for m in self.monomials}
        self.differential = self._assemble_differential()
        if check:
            bad = self.d_squared_violations()
            if bad:
                raise ArithmeticError(f"d∘d is nonzero on {bad[0]}")

    # -- basis -------------------------------------------------------------

    def _enumerate_monomials(self):
        n = self.dgla.dim
        out = [()]
        for w in range(1, self.weight + 1):
            for combo in itertools.combinations_with_replacement(range(n), w):
                if self._valid(combo):
                    out.append(combo)
        return out

    def _valid(self, mono):
        for a, b in zip(mono, mono[1:]):
            if a == b and self.shifted[a] % 2:
                return False
        return True

    def word_degree(self, mono):
        """Shifted degree of the input word."""
        return sum(self.shifted[a] for a in mono)

    def functional_degree(self, mono):
        return -self.word_degree(mono)

    def internal_degree(self, mono):
        """Unshifted label Σ r_j of the inputs (metadata only)."""
        return sum(self.dgla.degrees[a] for a in mono)

    def _degree(self, b):
        mono, v = b
        d = self.functional_degree(mono)
        if v is not None:
            d += self.module.degrees[v]
        return d

    def label(self, b):
        mono, v = b
        names = self.dgla.labels
        text = "1" if not mono else "*".join(f"{names[a]}^" for a in mono)
        if v is not None:
            text = f"{text}->{self.module.labels[v]}"
        return text

    def canonical(self, word):
        """(sign, monomial) for an arbitrary word; sign 0 if it vanishes."""
        word = list(word)
        sign = 1
        sd = self.shifted
        # insertion sort tracking Koszul signs
        for i in range(1, len(word)):
            j = i
            while j > 0 and word[j - 1] > word[j]:
                if sd[word[j - 1]] % 2 and sd[word[j]] % 2:
                    sign = -sign
                word[j - 1], word[j] = word[j], word[j - 1]
                j -= 1
        mono = tuple(word)
        if not self._valid(mono):
            return 0, mono
        return sign, mono

    def split_sign(self, mono, positions):
        """ε for taking ``positions`` as the first factor: crossings of later-first pairs."""
        sd = self.shifted
        chosen = set(positions)
        s = 1
        for j in positions:
            for i in range(j):
                if i not in chosen and sd[mono[i]] % 2 and sd[mono[j]] % 2:
                    s = -s
        return s

    # -- the coderivation Q ------------------------------------------------

    def _q_on(self, mono):
        g, sd = self.dgla, self.shifted
        out = {}

        def add(sign, word, c):
            s, m = self.canonical(word)
            if s and c:
                out[m] = out.get(m, ZERO) + s * sign * c

        prefix = 0
        for i, a in enumerate(mono):
            for l, c in enumerate(g.differential[a]):
                if c:
                    add(_sign(prefix), mono[:i] + (l,) + mono[i + 1 :], -c)
            prefix += sd[a]
        n = len(mono)
        for i in range(n):
            for j in range(i + 1, n):
                a, b = mono[i], mono[j]
                br = g.bracket_table[a][b]
                if not any(br):
                    continue
                before_i = sum(sd[mono[t]] for t in range(i))
                before_j = sum(sd[mono[t]] for t in range(j) if t != i)
                s = _sign(sd[a] * before_i + sd[b] * before_j) * _sign(g.degrees[a])
                rest = mono[:i] + mono[i + 1 : j] + mono[j + 1 :]
                for l, c in enumerate(br):
                    if c:
                        add(s, (l,) + rest, c)
        return {m: c for m, c in out.items() if c}

    def q(self, mono):
        return dict(self._q[mono])

    # -- differential ------------------------------------------------------

    def _assemble_differential(self):
        """Sparse map: basis index -> {basis index: coeff}."""
        D = {i: {} for i in range(len(self.basis))}

        def add(src, tgt, c):
            if c:
                row = D[src]
                row[tgt] = row.get(tgt, ZERO) + c
                if not row[tgt]:
                    del row[tgt]

        V = self.module
        for T in self.monomials:
            for S, c in self._q[T].items():
                if V is None:
                    add(self.index[(S, None)], self.index[(T, None)], c)
                else:
                    for v in range(V.dim):
                        add(self.index[(S, v)], self.index[(T, v)], c)
        if V is None:
            return D
        for S in self.monomials:
            s = _sign(self.word_degree(S))
            for v in range(V.dim):
                for w, c in enumerate(V.differential[v]):
                    if c:
                        add(self.index[(S, v)], self.index[(S, w)], s * c)
        sd, g = self.shifted, self.dgla
        for T in self.monomials:
            for i, a in enumerate(T):
                S = T[:i] + T[i + 1 :]
                # move y_i to the front, then x passes φ: -κ (-1)^{|x||φ|}
                before = sum(sd[T[t]] for t in range(i))
                kappa = _sign(sd[a] * before)
                for v in range(V.dim):
                    s = -kappa * _sign(g.degrees[a] * (self.word_degree(S) + V.degrees[v]))
                    for w, c in enumerate(V.action_table[a][v]):
                        if c:
                            add(self.index[(S, v)], self.index[(T, w)], s * c)
        return D

    def d(self, elem):
        self._own(elem)
        out = {}
        for i, c in elem.coords.items():
            for j, e in self.differential[i].items():
                out[j] = out.get(j, ZERO) + c * e
        return CeElement(self, out)

    def d_squared_violations(self):
        """Basis functionals on which d∘d is nonzero."""
        bad = []
        for i in range(len(self.basis)):
            acc = {}
            for j, c in self.differential[i].items():
                for k, e in self.differential[j].items():
                    acc[k] = acc.get(k, ZERO) + c * e
            if any(acc.values()):
                bad.append(self.label(self.basis[i]))
        return bad

    def degree_range(self):
        return (min(self.degrees), max(self.degrees))

    def basis_census(self):
        census = {}
        for d in self.degrees:
            census[d] = census.get(d, 0) + 1
        return dict(sorted(census.items()))

    def matrix(self, p):
        """Dense matrix of d: C^p -> C^{p+1} (rows: degree p+1 basis)."""
        src = [i for i, d in enumerate(self.degrees) if d == p]
        tgt = [i for i, d in enumerate(self.degrees) if d == p + 1]
        pos = {j: r for r, j in enumerate(tgt)}
        M = [[ZERO] * len(src) for _ in tgt]
        for col, i in enumerate(src):
            for j, c in self.differential[i].items():
                M[pos[j]][col] = c
        return M, len(tgt), len(src)

    # -- elements ----------------------------------------------------------

    def element(self, coords):
        if isinstance(coords, dict):
            items = {self.index[k] if not isinstance(k, int) else k: Fraction(c) for k, c in coords.items()}
        else:
            items = {i: Fraction(c) for i, c in enumerate(coords) if c}
        return CeElement(self, items)

    def basis_element(self, mono, v=None):
        s, m = self.canonical(mono)
        if not s:
            raise ValueError("monomial vanishes by graded symmetry")
        return CeElement(self, {self.index[(m, v)]: Fraction(s)})

    def unit(self):
        if self.module is not None:
            raise ValueError("C*(g, V) has no unit")
        return self.basis_element(())

    def _own(self, elem):
        if elem.owner is not self:
            raise ValueError("element belongs to a different CE complex")

    def evaluate(self, elem, word):
        """Value on a word of Lie indices: scalar (trivial) or V-vector."""
        s, m = self.canonical(word)
        if self.module is None:
            if not s:
                return ZERO
            return s * elem.coords.get(self.index.get((m, None), -1), ZERO)
        out = [ZERO] * self.module.dim
        if s:
            for v in range(self.module.dim):
                c = elem.coords.get(self.index.get((m, v), -1), ZERO)
                out[v] = s * c
        return tuple(out)

    def __repr__(self):
        return f"CeComplex({self.dgla!r}, weight={self.weight}, dim={len(self.basis)})"


class CeElement:
    """Homogeneous cochain, stored sparsely by basis index."""

    def __init__(self, owner, coords):
        self.owner = owner
        self.coords = {i: c for i, c in coords.items() if c}
        degs = {owner.degrees[i] for i in self.coords}
        if len(degs) > 1:
            raise ValueError("CE element is not homogeneous")
        self.degree = degs.pop() if degs else None

    def coordinates(self):
        return tuple(self.coords.get(i, ZERO) for i in range(len(self.owner.basis)))

    def weights(self):
        return {len(self.owner.basis[i][0]) for i in self.coords}

    def is_zero(self):
        return not self.coords

    def __add__(self, other):
        out = dict(self.coords)
        for i, c in other.coords.items():
            out[i] = out.get(i, ZERO) + c
        return CeElement(self.owner, out)

    def __rmul__(self, c):
        return CeElement(self.owner, {i: c * v for i, v in self.coords.items()})

    def __neg__(self):
        return (-1) * self

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, CeElement) and self.owner is other.owner and self.coords == other.coords

    def __repr__(self):
        terms = [f"{c}*[{self.owner.label(self.owner.basis[i])}]" for i, c in sorted(self.coords.items())]
        return "CeElement(" + " + ".join(terms or ["0"]) + ")"


def _shuffle_product(left, right, target, combine):
    """Evaluate Σ_{S,S'} ε λ(x_S) μ(x_S') on every target monomial of allowed weight."""
    lowner, rowner = left.owner, right.owner
    lw, rw = left.weights(), right.weights()
    if not lw or not rw:
        return CeElement(target, {})
    if max(lw) + max(rw) > target.weight:
        raise WeightOverflow(
            f"product needs weight {max(lw) + max(rw)} beyond the truncation {target.weight}"
        )
    lmono = {}
    for i, c in left.coords.items():
        lmono.setdefault(lowner.basis[i][0], []).append((lowner.basis[i][1], c))
    rmono = {}
    for i, c in right.coords.items():
        rmono.setdefault(rowner.basis[i][0], []).append((rowner.basis[i][1], c))
    out = {}
    wanted = {a + b for a in lw for b in rw}
    for T in target.monomials:
        if len(T) not in wanted:
            continue
        n = len(T)
        for m in lw:
            if n - m not in rw:
                continue
            for P in itertools.combinations(range(n), m):
                Pc = tuple(i for i in range(n) if i not in P)
                S = tuple(T[i] for i in P)
                Sp = tuple(T[i] for i in Pc)
                if S not in lmono or Sp not in rmono:
                    continue
                eps = target.split_sign(T, P)
                for (lv, a) in lmono[S]:
                    for (rv, b) in rmono[Sp]:
                        for key, c in combine(lv, rv, eps * a * b):
                            idx = target.index[(T, key)]
                            out[idx] = out.get(idx, ZERO) + c
    return CeElement(target, out)


def ce_product(lam, mu):
    """(λμ)(x_1⋯x_n) = Σ_{S,S'} ε(S,S') λ(x_S) μ(x_S')."""
    if lam.owner is not mu.owner or lam.owner.module is not None:
        raise ValueError("ce_product needs two elements of the same C*(g)")
    return _shuffle_product(lam, mu, lam.owner, lambda lv, rv, c: [(None, c)])


def ce_module_action(lam, mu):
    """C*(g) × C*(g, V) -> C*(g, V) by the same shuffle formula."""
    A, M = lam.owner, mu.owner
    if A.module is not None:
        raise ValueError("first argument must lie in C*(g)")
    if not A.dgla.same_as(M.dgla):
        raise ValueError("elements come from different DGLAs")
    if M.module is None:
        return _shuffle_product(lam, mu, M, lambda lv, rv, c: [(None, c)])
    return _shuffle_product(lam, mu, M, lambda lv, rv, c: [(rv, c)])


def ce_build(g, module=None, weight=DEFAULT_WEIGHT):
    """Validate the inputs, build the truncated complex and confirm d∘d = 0."""
    require_valid(g, module)
    return CeComplex(g, module, weight, check=True)


def horizon_degree(C):
    """Smallest total degree carried by any functional of weight > W (None = -∞)."""
    contrib = []
    for a, r in enumerate(C.dgla.degrees):
        c = 1 - r
        if c <= 0:
            return None
        contrib.append((c, C.shifted[a] % 2 == 0))
    need = C.weight + 1
    reps = sorted(c for c, rep in contrib if rep)
    singles = sorted(c for c, rep in contrib if not rep)
    best = None
    for j in range(0, min(len(singles), need) + 1):
        rest = need - j
        if rest and not reps:
            continue
        total = sum(singles[:j]) + (rest * reps[0] if rest else 0)
        best = total if best is None else min(best, total)
    if best is None:
        return float("inf")
    if C.module is not None and C.module.dim:
        best += min(C.module.degrees)
    return best


def ce_cohomology(C):
    """dim H^p of the truncated complex; degrees the truncation may distort are flagged."""
    lo, hi = C.degree_range()
    ranks = {}
    for p in range(lo - 1, hi + 1):
        M, nr, nc = C.matrix(p)
        ranks[p] = rank(M, nc) if nr and nc else 0
    census = C.basis_census()
    dims = {p: census.get(p, 0) - ranks[p] - ranks[p - 1] for p in range(lo, hi + 1)}
    h = horizon_degree(C)
    if h is None:
        unreliable = set(dims)
    else:
        unreliable = {p for p in dims if p + 1 >= h}
    return CeCohomology(dims, unreliable)
