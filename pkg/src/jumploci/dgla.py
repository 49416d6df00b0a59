"""Finite-dimensional DGLAs and their representations by structure constants.

Cohomological grading: differentials raise degree by one.  All laws are
checked exhaustively on basis tuples, which suffices by multilinearity.
"""

import itertools
from collections import namedtuple
from fractions import Fraction

ZERO = Fraction(0)

# Sign in the bracket-compatibility law [x,y]v = x(yv) + s·(-1)^{pq} y(xv).
# "standard" takes s = -1 (the adjoint representation is a representation);
# "verbatim" takes s = +1.
SIGN_CONVENTION = "standard"

Violation = namedtuple("Violation", "law witness detail")


def _sign(e):
    return -1 if e % 2 else 1


def _compat_sign(convention):
    convention = convention or SIGN_CONVENTION
    if convention == "standard":
        return -1
    if convention == "verbatim":
        return 1
    raise ValueError(f"unknown sign convention {convention!r}")


class GradedSpace:
    """Basis labels with integer degrees."""

    def __init__(self, labels, degrees):
        self.labels = tuple(labels)
        self.degrees = tuple(int(d) for d in degrees)
        if len(self.labels) != len(self.degrees):
            raise ValueError("need one degree per basis label")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be unique")
        self._index = {name: i for i, name in enumerate(self.labels)}

    @property
    def dim(self):
        return len(self.labels)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown basis element {name!r}") from None

    def indices_of_degree(self, p):
        return [i for i, d in enumerate(self.degrees) if d == p]

    def degree_window(self):
        if not self.degrees:
            return (0, -1)
        return (min(self.degrees), max(self.degrees))

    def zero(self):
        return (ZERO,) * self.dim

    def basis_vector(self, i):
        v = [ZERO] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def __eq__(self, other):
        return isinstance(other, GradedSpace) and self.labels == other.labels and self.degrees == other.degrees

    def __hash__(self):
        return hash((self.labels, self.degrees))

    def __repr__(self):
        return f"GradedSpace({list(zip(self.labels, self.degrees))})"


def _vec(obj, n):
    v = tuple(Fraction(c) for c in obj)
    if len(v) != n:
        raise ValueError(f"expected a vector of length {n}")
    return v


def _linear(table, u, n_out):
    """Apply a linear map given by basis images ``table[j]``."""
    acc = [ZERO] * n_out
    for j, a in enumerate(u):
        if a:
            for l, c in enumerate(table[j]):
                if c:
                    acc[l] += a * c
    return tuple(acc)


def _bilinear(table, u, v, n_out):
    acc = [ZERO] * n_out
    for i, a in enumerate(u):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for l, c in enumerate(row[j]):
                if c:
                    acc[l] += ab * c
    return tuple(acc)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _scale(c, u):
    return tuple(c * a for a in u)


class Dgla:
    """``differential[j]`` = d(b_j); ``bracket[i][j]`` = [b_i, b_j] as coordinate vectors."""

    def __init__(self, space, differential=None, bracket=None, name=None):
        self.space = space
        n = space.dim
        if differential is None:
            differential = [space.zero()] * n
        if bracket is None:
            bracket = [[space.zero()] * n for _ in range(n)]
        self.differential = tuple(_vec(v, n) for v in differential)
        self.bracket_table = tuple(tuple(_vec(bracket[i][j], n) for j in range(n)) for i in range(n))
        if len(self.differential) != n or len(self.bracket_table) != n:
            raise ValueError("structure constants have the wrong shape")
        self.name = name

    @property
    def dim(self):
        return self.space.dim

    @property
    def degrees(self):
        return self.space.degrees

    @property
    def labels(self):
        return self.space.labels

    def d(self, u):
        return _linear(self.differential, u, self.dim)

    def bracket(self, u, v):
        return _bilinear(self.bracket_table, u, v, self.dim)

    def basis_vector(self, i):
        return self.space.basis_vector(i)

    def zero(self):
        return self.space.zero()

    def same_as(self, other):
        return self is other or (
            self.space == other.space
            and self.differential == other.differential
            and self.bracket_table == other.bracket_table
        )

    def __repr__(self):
        return f"Dgla({self.name or list(self.labels)})"


def dgla_from_entries(labels, degrees, differential=(), bracket=(), antisymmetrize=True, name=None):
    """Build a Dgla from sparse entries.

    ``differential``: (src, tgt, coeff) meaning d(src) has coeff on tgt.
    ``bracket``: (a, b, c, coeff) meaning [a, b] has coeff on c.  With
    ``antisymmetrize`` an ordered pair whose swap has no entries is filled
    in by graded antisymmetry.
    """
    space = GradedSpace(labels, degrees)
    n = space.dim
    D = [[ZERO] * n for _ in range(n)]
    for src, tgt, c in differential:
        D[space.index(src)][space.index(tgt)] += Fraction(c)
    B = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    given = set()
    for a, b, c, coeff in bracket:
        i, j, l = space.index(a), space.index(b), space.index(c)
        B[i][j][l] += Fraction(coeff)
        given.add((i, j))
    if antisymmetrize:
        for i, j in list(given):
            if (j, i) not in given:
                s = -_sign(space.degrees[i] * space.degrees[j])
                for l in range(n):
                    B[j][i][l] = s * B[i][j][l]
    return Dgla(space, D, B, name=name)


class ValidationError(ValueError):
    """A structure failed its validator; ``violations`` holds the report."""

    def __init__(self, what, violations):
        first = violations[0]
        super().__init__(f"{what} violates {first.law} at {first.witness}")
        self.violations = violations


def require_valid(g, V=None):
    bad = validate_dgla(g)
    if bad:
        raise ValidationError("dgla", bad)
    if V is not None:
        bad = validate_representation(V)
        if bad:
            raise ValidationError("module", bad)


def _report(violations):
    return sorted(violations, key=lambda v: (v.witness, v.law))


def validate_dgla(g):
    """Violated DGLA laws with witnessing basis tuples; empty iff valid."""
    out = []
    n, degs, names = g.dim, g.degrees, g.labels
    basis = [g.basis_vector(i) for i in range(n)]
    for j in range(n):
        for l, c in enumerate(g.differential[j]):
            if c and degs[l] != degs[j] + 1:
                out.append(Violation("differential-degree", (names[j],), f"d({names[j]}) hits {names[l]}"))
                break
    for i in range(n):
        for j in range(n):
            for l, c in enumerate(g.bracket_table[i][j]):
                if c and degs[l] != degs[i] + degs[j]:
                    out.append(
                        Violation("bracket-degree", (names[i], names[j]), f"[{names[i]},{names[j]}] hits {names[l]}")
                    )
                    break
    for j in range(n):
        if any(g.d(g.differential[j])):
            out.append(Violation("d-squared", (names[j],), "d(d(x)) != 0"))
    for i in range(n):
        for j in range(i, n):
            lhs = g.bracket_table[i][j]
            rhs = _scale(-_sign(degs[i] * degs[j]), g.bracket_table[j][i])
            if lhs != rhs:
                out.append(Violation("antisymmetry", (names[i], names[j]), "[x,y] != -(-1)^{pq}[y,x]"))
    for i, j, k in itertools.combinations_with_replacement(range(n), 3):
        x, y, z = basis[i], basis[j], basis[k]
        p, q, r = degs[i], degs[j], degs[k]
        total = _add(
            _add(
                _scale(_sign(p * r), g.bracket(x, g.bracket(y, z))),
                _scale(_sign(q * p), g.bracket(y, g.bracket(z, x))),
            ),
            _scale(_sign(r * q), g.bracket(z, g.bracket(x, y))),
        )
        if any(total):
            out.append(Violation("jacobi", (names[i], names[j], names[k]), "graded Jacobi sum nonzero"))
    for i in range(n):
        for j in range(n):
            x, y = basis[i], basis[j]
            lhs = g.d(g.bracket_table[i][j])
            rhs = _add(g.bracket(g.d(x), y), _scale(_sign(degs[i]), g.bracket(x, g.d(y))))
            if lhs != rhs:
                out.append(Violation("leibniz", (names[i], names[j]), "d[x,y] != [dx,y] + (-1)^p [x,dy]"))
    return _report(out)


class Representation:
    """``action[a][j]`` = b_a · v_j; ``differential[j]`` = d(v_j)."""

    def __init__(self, dgla, space, differential=None, action=None, name=None):
        self.dgla = dgla
        self.space = space
        n, m = space.dim, dgla.dim
        if differential is None:
            differential = [space.zero()] * n
        if action is None:
            action = [[space.zero()] * n for _ in range(m)]
        self.differential = tuple(_vec(v, n) for v in differential)
        self.action_table = tuple(tuple(_vec(action[a][j], n) for j in range(n)) for a in range(m))
        self.name = name

    @property
    def dim(self):
        return self.space.dim

    @property
    def degrees(self):
        return self.space.degrees

    @property
    def labels(self):
        return self.space.labels

    def d(self, v):
        return _linear(self.differential, v, self.dim)

    def act(self, x, v):
        return _bilinear(self.action_table, x, v, self.dim)

    def basis_vector(self, i):
        return self.space.basis_vector(i)

    def zero(self):
        return self.space.zero()

    def __repr__(self):
        return f"Representation({self.name or list(self.labels)} over {self.dgla!r})"


def representation_from_entries(dgla, labels, degrees, differential=(), action=(), name=None):
    """``action``: (lie, src, tgt, coeff) meaning lie·src has coeff on tgt."""
    space = GradedSpace(labels, degrees)
    n = space.dim
    D = [[ZERO] * n for _ in range(n)]
    for src, tgt, c in differential:
        D[space.index(src)][space.index(tgt)] += Fraction(c)
    act = [[[ZERO] * n for _ in range(n)] for _ in range(dgla.dim)]
    for a, src, tgt, c in action:
        act[dgla.space.index(a)][space.index(src)][space.index(tgt)] += Fraction(c)
    return Representation(dgla, space, D, act, name=name)


def validate_representation(V, convention=None):
    """Violations of the chain-map and bracket-compatibility laws."""
    s = _compat_sign(convention)
    g = V.dgla
    out = []
    gd, vd = g.degrees, V.degrees
    gn, vn = g.labels, V.labels
    gb = [g.basis_vector(i) for i in range(g.dim)]
    vb = [V.basis_vector(j) for j in range(V.dim)]
    for j in range(V.dim):
        for l, c in enumerate(V.differential[j]):
            if c and vd[l] != vd[j] + 1:
                out.append(Violation("differential-degree", (vn[j],), f"d({vn[j]}) hits {vn[l]}"))
                break
        if any(V.d(V.differential[j])):
            out.append(Violation("d-squared", (vn[j],), "d(d(v)) != 0"))
    for a in range(g.dim):
        for j in range(V.dim):
            for l, c in enumerate(V.action_table[a][j]):
                if c and vd[l] != gd[a] + vd[j]:
                    out.append(Violation("action-degree", (gn[a], vn[j]), f"{gn[a]}.{vn[j]} hits {vn[l]}"))
                    break
    for a in range(g.dim):
        for j in range(V.dim):
            x, v = gb[a], vb[j]
            lhs = V.d(V.action_table[a][j])
            rhs = _add(V.act(g.d(x), v), _scale(_sign(gd[a]), V.act(x, V.d(v))))
            if lhs != rhs:
                out.append(Violation("chain-map", (gn[a], vn[j]), "d(xv) != (dx)v + (-1)^p x(dv)"))
    for a in range(g.dim):
        for b in range(g.dim):
            x, y = gb[a], gb[b]
            p, q = gd[a], gd[b]
            for j in range(V.dim):
                v = vb[j]
                lhs = V.act(g.bracket(x, y), v)
                rhs = _add(V.act(x, V.act(y, v)), _scale(s * _sign(p * q), V.act(y, V.act(x, v))))
                if lhs != rhs:
                    out.append(Violation("bracket-compatibility", (gn[a], gn[b], vn[j]), "[x,y]v mismatch"))
    return _report(out)


def adjoint_rep(g):
    return Representation(g, g.space, g.differential, g.bracket_table, name=f"ad({g.name or 'g'})")


def trivial_rep(g, degree=0, label="1"):
    """The trivial module k concentrated in ``degree``."""
    return Representation(g, GradedSpace([label], [degree]), name="k")


def tensor_label(a, b):
    return f"{a}.{b}"


def tensor_rep(V, W):
    """V ⊗ W with x(v⊗w) = (xv)⊗w + (-1)^{|x||v|} v⊗(xw)."""
    if not V.dgla.same_as(W.dgla):
        raise ValueError("representations are over different DGLAs")
    g = V.dgla
    nV, nW = V.dim, W.dim
    labels = [tensor_label(a, b) for a in V.labels for b in W.labels]
    degrees = [p + q for p in V.degrees for q in W.degrees]
    space = GradedSpace(labels, degrees)
    N = nV * nW

    def pair(av, bw):
        out = [ZERO] * N
        for i, a in enumerate(av):
            if a:
                for j, b in enumerate(bw):
                    if b:
                        out[i * nW + j] += a * b
        return tuple(out)

    D = []
    for i in range(nV):
        for j in range(nW):
            v, w = V.basis_vector(i), W.basis_vector(j)
            D.append(_add(pair(V.d(v), w), _scale(_sign(V.degrees[i]), pair(v, W.d(w)))))
    act = []
    for a in range(g.dim):
        x = g.basis_vector(a)
        row = []
        for i in range(nV):
            for j in range(nW):
                v, w = V.basis_vector(i), W.basis_vector(j)
                s = _sign(g.degrees[a] * V.degrees[i])
                row.append(_add(pair(V.act(x, v), w), _scale(s, pair(v, W.act(x, w)))))
        act.append(row)
    return Representation(g, space, D, act, name=f"{V.name or 'V'}.{W.name or 'W'}")


class RepMorphism:
    """Degree-0 linear map between representations; ``matrix[j]`` is the image of v_j."""

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = tuple(_vec(v, target.dim) for v in matrix)

    def __call__(self, v):
        return _linear(self.matrix, v, self.target.dim)

    def violations(self):
        S, T = self.source, self.target
        out = []
        for j in range(S.dim):
            img = self.matrix[j]
            for l, c in enumerate(img):
                if c and T.degrees[l] != S.degrees[j]:
                    out.append(Violation("degree", (S.labels[j],), "map is not of degree 0"))
                    break
            v = S.basis_vector(j)
            if self(S.d(v)) != T.d(img):
                out.append(Violation("differential", (S.labels[j],), "f(dv) != d(f v)"))
            for a in range(S.dgla.dim):
                x = S.dgla.basis_vector(a)
                if self(S.act(x, v)) != T.act(x, img):
                    out.append(Violation("equivariance", (S.dgla.labels[a], S.labels[j]), "f(xv) != x f(v)"))
        return _report(out)
