"""Artinian local algebras presented by a basis and structure constants.

Elements are coordinate tuples of ``Fraction`` over the algebra's basis,
with ``b_0`` the unit and ``b_1..b_{n-1}`` spanning the maximal ideal.
"""

import itertools
import re
from fractions import Fraction

from .linalg import in_span, reduce_against, rref

ZERO = Fraction(0)
ONE = Fraction(1)


class AlgebraError(ValueError):
    """Raised when structure constants violate an algebra law."""


def parse_rational(text):
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not re.fullmatch(r"\s*[+-]?\d+(\s*/\s*\d+)?\s*", text):
        raise ValueError(f"not a rational: {text!r}")
    value = Fraction(text.replace(" ", ""))
    return value


def format_rational(q):
    return str(Fraction(q))


# ---------------------------------------------------------------------------
# Polynomials


def _grlex_key(exps):
    return (sum(exps), exps)


class Polynomial:
    """Polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, ZERO) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def variable(cls, nvars, i):
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    def sorted_terms(self):
        """Terms in descending graded-lex order (the canonical order)."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, ZERO)

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return Polynomial(self.nvars, out)

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def format(self, names):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            parts.append((c, monomial_label(exps, names)))
        return format_linear_combination(parts)

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.sorted_terms()!r})"


_TERM_RE = re.compile(r"([+-]?)\s*([^+-]+)")


def parse_polynomial(text, names):
    """Parse strings such as ``"x^2 - 3/2*x*y + y^3"`` over variables ``names``."""
    nvars = len(names)
    index = {n: i for i, n in enumerate(names)}
    src = text.replace(" ", "")
    if not src:
        raise ValueError("empty polynomial")
    result = Polynomial(nvars)
    pos = 0
    for m in _TERM_RE.finditer(src):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = m.end()
        sign, body = m.groups()
        coeff = Fraction(-1 if sign == "-" else 1)
        exps = [0] * nvars
        for factor in body.split("*"):
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            base, _, power = factor.partition("^")
            if base not in index:
                raise ValueError(f"unknown variable {base!r} in {text!r}")
            exps[index[base]] += int(power) if power else 1
        result = result + Polynomial(nvars, {tuple(exps): coeff})
    if pos != len(src):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return result


def monomial_label(exps, names):
    parts = []
    for n, e in zip(names, exps):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts) if parts else "1"


def format_linear_combination(pairs):
    """Render ``[(coeff, label), ...]`` as ``"1 + 2*x - 1/2*y"``."""
    out = []
    for c, label in pairs:
        if not c:
            continue
        mag = abs(c)
        if label == "1":
            body = format_rational(mag)
        elif mag == 1:
            body = label
        else:
            body = f"{format_rational(mag)}*{label}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out) if out else "0"


# ---------------------------------------------------------------------------
# Algebras


def _sparse(vec):
    return tuple((l, c) for l, c in enumerate(vec) if c)


class ArtinianAlgebra:
    """Commutative local k-algebra of finite dimension with residue field k.

    ``mul[i][j]`` is the coordinate vector of ``b_i * b_j``.  Optional
    ``variables``/``monomials`` record a truncated-polynomial presentation
    so morphisms can be specified by images of the variables.
    """

    def __init__(self, labels, mul, *, variables=None, monomials=None, reducer=None, check=True):
        self.labels = tuple(labels)
        n = len(self.labels)
        if n == 0:
            raise AlgebraError("an algebra needs at least the unit")
        if len(set(self.labels)) != n:
            raise AlgebraError("basis labels must be unique")
        self.mul_table = tuple(
            tuple(tuple(Fraction(c) for c in mul[i][j]) for j in range(n)) for i in range(n)
        )
        for i in range(n):
            for j in range(n):
                if len(self.mul_table[i][j]) != n:
                    raise AlgebraError(f"structure constant vector b{i}*b{j} has wrong length")
        self._sparse = [[_sparse(self.mul_table[i][j]) for j in range(n)] for i in range(n)]
        self.variables = tuple(variables) if variables else None
        self.monomials = tuple(monomials) if monomials else None
        self._reducer = reducer
        if check:
            problems = self.violations()
            if problems:
                raise AlgebraError("; ".join(problems))

    # graded data; overridden by the dg subclass
    @property
    def degrees(self):
        return (0,) * self.dim

    @property
    def is_dg(self):
        return False

    def d(self, u):
        return self.zero()

    @property
    def dim(self):
        return len(self.labels)

    def zero(self):
        return (ZERO,) * self.dim

    def one(self):
        return self.basis_vector(0)

    def basis_vector(self, i):
        v = [ZERO] * self.dim
        v[i] = ONE
        return tuple(v)

    def element(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return coords

    def mul(self, u, v):
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("dimension mismatch in multiplication")
        acc = [ZERO] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            row = self._sparse[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for l, c in row[j]:
                    acc[l] += ab * c
        return tuple(acc)

    def add(self, u, v):
        return tuple(a + b for a, b in zip(u, v))

    def sub(self, u, v):
        return tuple(a - b for a, b in zip(u, v))

    def scale(self, c, u):
        return tuple(c * a for a in u)

    def augmentation(self, u):
        return u[0]

    def in_maximal(self, u):
        return u[0] == 0

    def degree_of(self, u):
        """Degree of a nonzero homogeneous element (None for zero)."""
        degs = {self.degrees[i] for i, a in enumerate(u) if a}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def power(self, u, e):
        out = self.one()
        for _ in range(e):
            out = self.mul(out, u)
        return out

    def inverse(self, u):
        """Inverse of a unit via the finite geometric series in the maximal ideal."""
        a = u[0]
        if not a:
            raise ValueError("element lies in the maximal ideal; not invertible")
        n = self.scale(-1 / a, u)
        n = self.add(n, self.one())  # 1 - u/a, nilpotent
        total = self.one()
        term = self.one()
        for _ in range(self.dim):
            term = self.mul(term, n)
            if not any(term):
                break
            total = self.add(total, term)
        return self.scale(1 / a, total)

    def format(self, u):
        return format_linear_combination(list(zip(u, self.labels)))

    def nilpotency_index(self):
        """Smallest N with m^N = 0."""
        current = [self.basis_vector(i) for i in range(1, self.dim)]
        gens = current
        power = 1
        while True:
            if not any(any(v) for v in current):
                return power
            prods = [self.mul(a, b) for a in current for b in gens]
            basis, _ = rref(prods, self.dim)
            current = basis
            power += 1
            if power > self.dim + 1:
                raise AlgebraError("maximal ideal is not nilpotent")

    def violations(self):
        """Algebra laws that fail, as human-readable strings."""
        n = self.dim
        out = []
        T = self.mul_table
        for i in range(n):
            if T[0][i] != self.basis_vector(i) or T[i][0] != self.basis_vector(i):
                out.append(f"unit law fails for {self.labels[i]}")
        degs = self.degrees
        for i in range(n):
            for j in range(n):
                for l, c in enumerate(T[i][j]):
                    if c and degs[l] != degs[i] + degs[j]:
                        out.append(f"product {self.labels[i]}*{self.labels[j]} not degree-additive")
                        break
        for i in range(n):
            for j in range(i + 1, n):
                sign = -1 if degs[i] * degs[j] % 2 else 1
                if T[i][j] != tuple(sign * c for c in T[j][i]):
                    out.append(f"commutativity fails for ({self.labels[i]}, {self.labels[j]})")
        for i in range(1, n):
            for j in range(1, n):
                if T[i][j][0]:
                    out.append(f"product {self.labels[i]}*{self.labels[j]} leaves the maximal ideal")
        if out:
            return out
        for i, j, l in itertools.product(range(n), repeat=3):
            left = self.mul(T[i][j], self.basis_vector(l))
            right = self.mul(self.basis_vector(i), T[j][l])
            if left != right:
                out.append(
                    f"associativity fails for ({self.labels[i]}, {self.labels[j]}, {self.labels[l]})"
                )
                break
        if not out:
            try:
                self.nilpotency_index()
            except AlgebraError as exc:
                out.append(str(exc))
        return out

    def same_as(self, other):
        return self is other or (
            type(self) is type(other)
            and self.labels == other.labels
            and self.mul_table == other.mul_table
            and self.degrees == other.degrees
            and self._diff_key() == other._diff_key()
        )

    def _diff_key(self):
        return None

    # presentations --------------------------------------------------------

    def reduce_monomial(self, exps):
        """Coordinates of a monomial in the presentation variables."""
        if self._reducer is None:
            raise ValueError("algebra has no polynomial presentation")
        return self._reducer(tuple(exps))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.labels)})"


def alg_mul(A, u, v):
    return A.mul(u, v)


def field():
    """The ground field k as the one-dimensional artinian algebra."""
    return ArtinianAlgebra(["1"], [[[1]]], variables=(), monomials=[()], reducer=lambda e: (ONE,))


def truncated_monomials(r, N):
    """Exponent vectors of degree < N, by degree, leading variable first."""
    out = []
    for deg in range(N):
        layer = [e for e in itertools.product(range(deg + 1), repeat=r) if sum(e) == deg]
        layer.sort(reverse=True)
        out.extend(layer)
    return out


def default_names(r):
    if r <= 3:
        return ["x", "y", "z"][:r]
    return [f"x{i + 1}" for i in range(r)]


def artinian_from_truncation(r, N, relations=(), names=None):
    """The algebra k[x_1..x_r] / ((x)^N + (relations)).

    ``relations`` may be Polynomials or strings in the variable ``names``.
    """
    if N < 1:
        raise ValueError("truncation order N must be at least 1")
    names = list(names) if names is not None else default_names(r)
    if len(names) != r:
        raise ValueError("need one name per variable")
    rels = []
    for rel in relations:
        if isinstance(rel, str):
            rel = parse_polynomial(rel, names)
        if rel.nvars != r:
            raise ValueError("relation has the wrong number of variables")
        if rel.constant_term():
            raise ValueError(
                f"relation {rel.format(names)} has a nonzero constant term; the quotient would not be local"
            )
        rels.append(rel)

    monos = truncated_monomials(r, N)
    pos = {e: i for i, e in enumerate(monos)}
    M = len(monos)

    def to_vector(poly):
        v = [ZERO] * M
        for e, c in poly.terms.items():
            if sum(e) < N:
                v[pos[e]] += c
        return v

    span = []
    for rel in rels:
        for e in monos:
            span.append(to_vector(rel * Polynomial(r, {e: 1})))
    # pivot on the largest monomials so standard monomials stay small
    rel_basis, rel_pivots = rref(span, M, column_order=range(M - 1, -1, -1))
    standard = [i for i in range(M) if i not in rel_pivots]
    std_pos = {i: k for k, i in enumerate(standard)}

    def reduce_full(vec):
        red = reduce_against(vec, rel_basis, rel_pivots)
        return tuple(red[i] for i in standard)

    def reducer(exps):
        if sum(exps) >= N:
            return (ZERO,) * len(standard)
        vec = [ZERO] * M
        vec[pos[exps]] = ONE
        return reduce_full(vec)

    n = len(standard)
    mul = [[None] * n for _ in range(n)]
    for a, ia in enumerate(standard):
        for b, ib in enumerate(standard):
            e = tuple(x + y for x, y in zip(monos[ia], monos[ib]))
            mul[a][b] = reducer(e)
    labels = [monomial_label(monos[i], names) for i in standard]
    assert std_pos[0] == 0
    return ArtinianAlgebra(
        labels, mul, variables=names, monomials=[monos[i] for i in standard], reducer=reducer
    )


class DgArtinianAlgebra(ArtinianAlgebra):
    """Graded-commutative local algebra in degrees [-D, 0] with a degree +1 differential.

    ``differential[j]`` is the coordinate vector of ``d(b_j)``.
    """

    def __init__(self, labels, degrees, mul, differential, *, check=True):
        self._degrees = tuple(int(x) for x in degrees)
        n = len(labels)
        if len(self._degrees) != n:
            raise AlgebraError("need one degree per basis element")
        self._diff = tuple(tuple(Fraction(c) for c in differential[j]) for j in range(n))
        super().__init__(labels, mul, check=False)
        if check:
            problems = self.violations()
            if problems:
                raise AlgebraError("; ".join(problems))

    @property
    def degrees(self):
        return self._degrees

    @property
    def is_dg(self):
        return True

    @property
    def differential(self):
        return self._diff

    def _diff_key(self):
        return self._diff

    def d(self, u):
        acc = [ZERO] * self.dim
        for j, a in enumerate(u):
            if a:
                for l, c in enumerate(self._diff[j]):
                    if c:
                        acc[l] += a * c
        return tuple(acc)

    def violations(self):
        out = []
        n = self.dim
        degs = self.degrees
        if degs[0] != 0:
            out.append("unit must have degree 0")
        if any(x > 0 for x in degs):
            out.append("degrees must be non-positive")
        for j in range(n):
            for l, c in enumerate(self._diff[j]):
                if c and degs[l] != degs[j] + 1:
                    out.append(f"d({self.labels[j]}) is not of degree +1")
                    break
            if self._diff[j][0]:
                out.append(f"d({self.labels[j]}) has nonzero augmentation")
        out.extend(super().violations())
        if out:
            return out
        for j in range(n):
            if any(self.d(self._diff[j])):
                out.append(f"d^2 != 0 on {self.labels[j]}")
        for i in range(n):
            for j in range(n):
                bi, bj = self.basis_vector(i), self.basis_vector(j)
                lhs = self.d(self.mul_table[i][j])
                sign = -1 if degs[i] % 2 else 1
                rhs = self.add(self.mul(self.d(bi), bj), self.scale(sign, self.mul(bi, self.d(bj))))
                if lhs != rhs:
                    out.append(f"Leibniz rule fails for ({self.labels[i]}, {self.labels[j]})")
        return out


# ---------------------------------------------------------------------------
# Morphisms


class AlgebraMorphism:
    """k-algebra map given by the images of the source basis."""

    def __init__(self, source, target, images, *, check=True):
        self.source = source
        self.target = target
        self.images = tuple(tuple(Fraction(c) for c in img) for img in images)
        if len(self.images) != source.dim or any(len(img) != target.dim for img in self.images):
            raise ValueError("morphism matrix has the wrong shape")
        if check:
            problems = self.violations()
            if problems:
                raise AlgebraError("; ".join(problems))

    def __call__(self, u):
        if len(u) != self.source.dim:
            raise ValueError("element does not live in the morphism's source")
        acc = [ZERO] * self.target.dim
        for i, a in enumerate(u):
            if a:
                for l, c in enumerate(self.images[i]):
                    if c:
                        acc[l] += a * c
        return tuple(acc)

    def violations(self):
        S, T = self.source, self.target
        out = []
        if self.images[0] != T.one():
            out.append("unit is not sent to unit")
        for i in range(S.dim):
            img = self.images[i]
            if any(img) and T.degree_of(img) != S.degrees[i]:
                out.append(f"image of {S.labels[i]} has the wrong degree")
            if i > 0 and img[0]:
                out.append(f"image of {S.labels[i]} has nonzero augmentation")
            if self(S.d(S.basis_vector(i))) != T.d(img):
                out.append(f"differential not preserved on {S.labels[i]}")
        for i in range(S.dim):
            for j in range(i, S.dim):
                if self(S.mul_table[i][j]) != T.mul(self.images[i], self.images[j]):
                    out.append(f"not multiplicative on ({S.labels[i]}, {S.labels[j]})")
        return out

    def compose(self, first):
        """``self ∘ first``."""
        if not first.target.same_as(self.source):
            raise ValueError("morphisms are not composable")
        return AlgebraMorphism(first.source, self.target, [self(img) for img in first.images], check=False)

    def __repr__(self):
        return f"AlgebraMorphism({self.source!r} -> {self.target!r})"


def identity(A):
    return AlgebraMorphism(A, A, [A.basis_vector(i) for i in range(A.dim)], check=False)


def augmentation_map(A, k=None):
    k = k or field()
    return AlgebraMorphism(A, k, [(ONE,) if i == 0 else (ZERO,) for i in range(A.dim)], check=False)


def unit_map(A, k=None):
    k = k or field()
    return AlgebraMorphism(k, A, [A.one()], check=False)


def morphism_from_variables(source, target, images):
    """Morphism out of a truncated-polynomial algebra fixed by variable images.

    ``images`` maps variable name to a target element (or is a list in
    variable order); images may be expression strings. Raises AlgebraError if the relations are not respected.
    """
    if source.variables is None:
        raise ValueError("source has no polynomial presentation")
    if isinstance(images, dict):
        images = [images[name] for name in source.variables]
    images = [parse_element(target, v) if isinstance(v, str) else tuple(Fraction(c) for c in v) for v in images]
    basis_images = []
    for exps in source.monomials:
        img = target.one()
        for v, e in zip(images, exps):
            img = target.mul(img, target.power(v, e))
        basis_images.append(img)
    return AlgebraMorphism(source, target, basis_images)


# ---------------------------------------------------------------------------
# Ideals


class Ideal:
    """Finitely generated ideal, stored with a reduced row-echelon k-basis."""

    def __init__(self, ambient, generators, normal_form, pivots):
        self.ambient = ambient
        self.generators = tuple(generators)
        self.normal_form = tuple(normal_form)
        self.pivots = tuple(pivots)

    def __eq__(self, other):
        return ideal_equals(self, other)

    def __hash__(self):
        return hash(self.normal_form)

    def contains(self, v):
        return in_span(v, self.normal_form, self.pivots)

    def is_zero(self):
        return not self.normal_form

    def is_unit(self):
        return len(self.normal_form) == self.ambient.dim

    def in_maximal(self):
        return all(row[0] == 0 for row in self.normal_form)

    def issubset(self, other):
        _check_same(self, other)
        return all(other.contains(v) for v in self.normal_form)

    def __le__(self, other):
        return self.issubset(other)

    def minimal_generators(self):
        """A generating set chosen greedily from the normal form."""
        A = self.ambient
        chosen = []
        current = ideal_from_generators(A, [])
        for row in self.normal_form:
            if not current.contains(row):
                chosen.append(row)
                current = ideal_from_generators(A, chosen)
        return chosen

    def __repr__(self):
        gens = [self.ambient.format(g) for g in self.minimal_generators()]
        return f"Ideal({gens})"


def _check_same(I, J):
    if not I.ambient.same_as(J.ambient):
        raise ValueError("ideals live in different algebras")


def ideal_from_generators(A, gens):
    gens = [tuple(Fraction(c) for c in g) for g in gens]
    for g in gens:
        if len(g) != A.dim:
            raise ValueError("generator does not live in the ambient algebra")
    products = [A.mul(A.basis_vector(i), g) for g in gens for i in range(A.dim)]
    basis, pivots = rref(products, A.dim)
    return Ideal(A, gens, basis, pivots)


def ideal_from_span(A, vectors):
    """Ideal generated by ``vectors`` when their span is already an ideal."""
    basis, pivots = rref(vectors, A.dim)
    return Ideal(A, basis, basis, pivots)


def zero_ideal(A):
    return Ideal(A, [], [], [])


def unit_ideal(A):
    return ideal_from_generators(A, [A.one()])


def ideal_is_zero(I):
    return I.is_zero()


def ideal_equals(I, J):
    _check_same(I, J)
    return I.normal_form == J.normal_form


def ideal_in_maximal(I):
    return I.in_maximal()


def ideal_product(I, J):
    _check_same(I, J)
    A = I.ambient
    if I.is_zero() or J.is_zero():
        return zero_ideal(A)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    return ideal_from_span(A, [A.mul(u, v) for u in I.normal_form for v in J.normal_form])


def ideal_sum(I, J):
    _check_same(I, J)
    return ideal_from_span(I.ambient, list(I.normal_form) + list(J.normal_form))


def base_change(f, I):
    if not I.ambient.same_as(f.source):
        raise ValueError("ideal does not live over the morphism's source")
    return ideal_from_generators(f.target, [f(g) for g in I.generators])


# ---------------------------------------------------------------------------
# H^0 of a dg-artinian algebra


def h0(A):
    """``(H^0(A), projection)`` where H^0(A) = A_0 / d(A_{-1})."""
    if not A.is_dg:
        return A, identity(A)
    degs = A.degrees
    deg0 = [i for i in range(A.dim) if degs[i] == 0]
    m = len(deg0)

    def restrict(v):
        return tuple(v[i] for i in deg0)

    image = [restrict(A.d(A.basis_vector(j))) for j in range(A.dim) if degs[j] == -1]
    basis, pivots = rref(image, m, column_order=range(m - 1, -1, -1))
    keep = [k for k in range(m) if k not in pivots]
    if not keep or keep[0] != 0:
        raise AlgebraError("the unit is a boundary; H^0 is not local")

    def quotient_coords(v):
        red = reduce_against(restrict(v), basis, pivots)
        return tuple(red[k] for k in keep)

    labels = [A.labels[deg0[k]] for k in keep]
    mul = [
        [quotient_coords(A.mul_table[deg0[a]][deg0[b]]) for b in keep] for a in keep
    ]
    H = ArtinianAlgebra(labels, mul)
    images = []
    for i in range(A.dim):
        images.append(quotient_coords(A.basis_vector(i)) if degs[i] == 0 else H.zero())
    return H, AlgebraMorphism(A, H, images, check=False)


# ---------------------------------------------------------------------------
# Element parsing


def parse_element(A, text):
    """Ring element from an expression such as ``"2*t - 1/3*t^2"``.

    Truncated-polynomial algebras accept polynomials in their variables;
    other algebras accept linear combinations of basis labels.
    """
    if A.variables is not None:
        poly = parse_polynomial(text, A.variables) if A.variables else _constant(text)
        out = A.zero()
        for exps, c in poly.terms.items():
            out = A.add(out, A.scale(c, A.reduce_monomial(exps if A.variables else ())))
        return out
    names = list(A.labels[1:])
    poly = parse_polynomial(text, names)
    out = [ZERO] * A.dim
    for exps, c in poly.terms.items():
        if sum(exps) > 1:
            raise ValueError(f"{text!r} is not a linear combination of basis labels")
        idx = 0 if not any(exps) else 1 + exps.index(1)
        out[idx] += c
    return tuple(out)


def _constant(text):
    return Polynomial(0, {(): parse_rational(text)})
