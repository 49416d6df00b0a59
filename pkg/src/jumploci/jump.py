"""Jump-locus membership, sheaf-level predicates and resonance scans."""

from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import FreeComplex, JumpIndex, check_complex, cohomology_dims_over_field, jump_ideal
from .linalg import rank
from .mc import HALF, MCCandidate, NotMaurerCartan, aomoto, h0_pushforward, mc_defect
from .rings import ZERO, Ideal, field as ground_field


@dataclass
class JumpQuery:
    dgla: object
    module: object
    ring: object
    omega: MCCandidate
    idx: JumpIndex

    def __post_init__(self):
        if not isinstance(self.idx, JumpIndex):
            self.idx = JumpIndex(*self.idx)
        if not self.module.dgla.same_as(self.dgla) or not self.omega.dgla.same_as(self.dgla):
            raise ValueError("query mixes different DGLAs")
        if not self.omega.ring.same_as(self.ring):
            raise ValueError("ω does not live over the query ring")


@dataclass
class Membership:
    member: bool
    ideal: Ideal
    complex: FreeComplex

    def __bool__(self):
        return self.member


def jump_membership(q):
    """Is ω in the (i, k) jump locus over this ring?  The ideal is the witness."""
    defect = mc_defect(q.omega)
    if any(any(r) for r in defect):
        raise NotMaurerCartan(defect)
    C = h0_pushforward(aomoto(q.module, q.omega))
    J = jump_ideal(C, q.idx)
    return Membership(J.is_zero(), J, C)


def push_query(q, f):
    """The same query after pushing ω along a ring morphism f."""
    return JumpQuery(q.dgla, q.module, f.target, q.omega.pushforward(f), q.idx)


# ---------------------------------------------------------------------------
# Sheaf predicates


class FiniteModule:
    """H^n / (span of relation vectors), a finitely generated module over a local ring."""

    def __init__(self, ring, ngens, relations=(), label=None):
        self.ring = ring
        self.ngens = ngens
        self.relations = [tuple(tuple(Fraction(c) for c in e) for e in rel) for rel in relations]
        self.label = label

    @classmethod
    def free(cls, ring, n, label=None):
        return cls(ring, n, (), label)

    def _submodule_rank(self, residue):
        R, n = self.ring, self.ngens
        rows = []
        for rel in self.relations:
            if residue:
                rows.append([e[0] for e in rel])
                continue
            for b in range(R.dim):
                vec = []
                for e in rel:
                    vec.extend(R.mul(e, R.basis_vector(b)))
                rows.append(vec)
        return rank(rows, n if residue else n * R.dim) if rows else 0

    def k_dim(self):
        return self.ngens * self.ring.dim - self._submodule_rank(False)

    def minimal_generators(self):
        """dim_k M / mM."""
        return self.ngens - self._submodule_rank(True)

    def is_free(self):
        return self.k_dim() == self.minimal_generators() * self.ring.dim


@dataclass
class SheafPredicateReport:
    coherent: bool
    flat: bool
    bounded_above: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def jumping(self):
        return self.bounded_above and self.flat


def sheaf_predicates(V, catalog, extra_terms=()):
    """Catalog-relative coherence and flatness of ω ↦ H^0(A) ⊗ (V ⊗ A, d_ω).

    ``catalog`` is a list of MC candidates; ``extra_terms`` is a list of
    ``(label, FiniteModule)`` pairs treated as additional stalk terms.
    """
    witnesses = {}
    coherent = flat = True
    degs = V.degrees
    bounded = True
    witnesses["bounded_above"] = max(degs) if degs else None
    for n, c in enumerate(catalog):
        C = h0_pushforward(aomoto(V, c))
        H = C.ring
        for i in C.degrees():
            term = FiniteModule.free(H, C.rank(i))
            if not term.is_free():
                flat = False
                witnesses.setdefault("flat", f"catalog[{n}] degree {i}")
        if not check_complex(C):
            coherent = False
            witnesses.setdefault("coherent", f"catalog[{n}] is not a complex")
    for label, M in extra_terms:
        if not M.is_free():
            flat = False
            witnesses.setdefault(
                "flat", f"{label}: dim_k = {M.k_dim()} but {M.minimal_generators()} generators over a ring of dim {M.ring.dim}"
            )
        # finitely generated over an artinian ring, so always finite-dimensional
    return SheafPredicateReport(coherent, flat, bounded, witnesses)


# ---------------------------------------------------------------------------
# Resonance scans over the ground field


@dataclass
class ResonanceRow:
    sample: tuple
    dims: dict = None
    defect: tuple = None

    @property
    def rejected(self):
        return self.dims is None


def _k_candidate(g, eta):
    eta = tuple(Fraction(c) for c in eta)
    if len(eta) != g.dim:
        raise ValueError("sample has the wrong length")
    if any(c and g.degrees[a] != 1 for a, c in enumerate(eta)):
        raise ValueError("sample must be supported in degree 1")
    return eta


def flat_connection_defect(g, eta):
    """dη + ½[η, η] in g."""
    eta = _k_candidate(g, eta)
    d = g.d(eta)
    b = g.bracket(eta, eta)
    return tuple(x + HALF * y for x, y in zip(d, b))


def twisted_complex(V, eta):
    """(V, d_V + η·) over k, as a free complex over the ground field."""
    k = ground_field()
    degs = V.degrees
    lo, hi = min(degs), max(degs)
    blocks = {p: [j for j in range(V.dim) if degs[j] == p] for p in range(lo, hi + 1)}
    slot = {j: n for p in blocks for n, j in enumerate(blocks[p])}
    diffs = {p: [[(ZERO,)] * len(blocks[p]) for _ in blocks[p + 1]] for p in range(lo, hi)}
    for j in range(V.dim):
        col = list(V.differential[j])
        for a, c in enumerate(eta):
            if c:
                for l, x in enumerate(V.action_table[a][j]):
                    col[l] += c * x
        for l, x in enumerate(col):
            if x:
                diffs[degs[j]][slot[l]][slot[j]] = (x,)
    return FreeComplex(k, lo, [len(blocks[p]) for p in range(lo, hi + 1)], diffs)


def resonance_scan(g, V, samples):
    rows = []
    for s in samples:
        eta = _k_candidate(g, s)
        defect = flat_connection_defect(g, eta)
        if any(defect):
            rows.append(ResonanceRow(eta, None, defect))
            continue
        C = twisted_complex(V, eta)
        rows.append(ResonanceRow(eta, cohomology_dims_over_field(C)))
    return rows


def resonance_locus(rows, i, k=1):
    """Accepted samples with dim H^i ≥ k."""
    return [r.sample for r in rows if not r.rejected and r.dims.get(i, 0) >= k]


# ---------------------------------------------------------------------------
# Closed subscheme presentation


def jump_subscheme(A, C, idx):
    """Defining ideal of the (i, k) jump subscheme of Spec A, generators in normal form."""
    if not C.ring.same_as(A):
        raise ValueError("complex does not live over the given ring")
    if not check_complex(C):
        raise ValueError("input is not a complex: some d∘d is nonzero")
    J = jump_ideal(C, idx)
    return Ideal(A, J.normal_form, J.normal_form, J.pivots)
