"""Finite chain complexes of pairs with their L1 chain and L-infinity cochain norms.

A :class:`ChainComplexPair` stores a basis of simplices per degree, rational
boundary matrices, and the indices spanning the subcomplex ``W``.  Relative
chains live in the quotient ``C_n(X)/C_n(W)``; the relative L1 norm is the
infimum over coset representatives, which for the l1 norm is attained by
zeroing the ``W`` coordinates.

Homology is over the rationals.  Seminorms computed on a fixed finite complex
are simplicial seminorms, which bound the singular ones from above.
"""

from fractions import Fraction

from .errors import InputError, ValidationError
from .exact import RationalMatrix, independent_columns, kernel_basis, q_str, solve_linear, to_q

SCHEMA = "pair-complex/v1"


class Chain:
    """Sparse rational chain: basis index -> coefficient (zeros never stored)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs=None):
        self.degree = degree
        self.coeffs = {i: to_q(c) for i, c in (coeffs or {}).items() if c}

    @classmethod
    def from_dense(cls, degree, vector, indices=None):
        if indices is None:
            indices = range(len(vector))
        return cls(degree, {i: v for i, v in zip(indices, vector) if v})

    def dense(self, size):
        v = [Fraction(0)] * size
        for i, c in self.coeffs.items():
            v[i] = c
        return v

    def l1(self):
        return sum((abs(c) for c in self.coeffs.values()), Fraction(0))

    def _check(self, other):
        if not isinstance(other, Chain) or other.degree != self.degree:
            raise InputError("chains of different degrees")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0) + c
        return Chain(self.degree, out)

    def __neg__(self):
        return Chain(self.degree, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        k = to_q(k)
        return Chain(self.degree, {i: k * c for i, c in self.coeffs.items()})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Chain) and (self.degree, self.coeffs) == (other.degree, other.coeffs)

    def __repr__(self):
        terms = " + ".join(f"{q_str(c)}*s{i}" for i, c in sorted(self.coeffs.items()))
        return f"Chain({self.degree}: {terms or '0'})"


class Cochain:
    """Sparse rational cochain.  ``relative`` cochains vanish on ``W``."""

    __slots__ = ("degree", "values", "relative")

    def __init__(self, degree, values=None, relative=False):
        self.degree = degree
        self.values = {i: to_q(v) for i, v in (values or {}).items() if v}
        self.relative = relative

    def __call__(self, i):
        return self.values.get(i, Fraction(0))

    def __rmul__(self, k):
        k = to_q(k)
        return Cochain(self.degree, {i: k * v for i, v in self.values.items()}, self.relative)

    def __eq__(self, other):
        return (isinstance(other, Cochain)
                and (self.degree, self.values) == (other.degree, other.values))

    def __repr__(self):
        terms = ", ".join(f"s{i}:{q_str(v)}" for i, v in sorted(self.values.items()))
        return f"Cochain({self.degree}: {{{terms}}})"


class HomologyClass:
    """A class in ``H_n(X, W)`` given by a relative cycle."""

    __slots__ = ("degree", "representative")

    def __init__(self, representative):
        self.degree = representative.degree
        self.representative = representative

    def __rmul__(self, k):
        return HomologyClass(k * self.representative)

    def __repr__(self):
        return f"HomologyClass({self.representative!r})"


class ChainComplexPair:
    """Chain complex of ``X`` with the subcomplex ``W`` marked by basis indices."""

    def __init__(self, labels, boundaries, sub):
        self.labels = tuple(tuple(ls) for ls in labels)
        self.boundaries = tuple(boundaries)
        self.sub = tuple(frozenset(s) for s in sub)
        self.top_degree = len(self.labels) - 1
        self.index = tuple({label: i for i, label in enumerate(ls)} for ls in self.labels)

    def size(self, n):
        return len(self.labels[n]) if 0 <= n <= self.top_degree else 0

    def boundary_matrix(self, n):
        """``d_n : C_n -> C_{n-1}`` as a ``size(n-1) x size(n)`` matrix."""
        if 1 <= n <= self.top_degree:
            return self.boundaries[n]
        return RationalMatrix.zeros(self.size(n - 1), self.size(n))

    def sub_indices(self, n):
        return sorted(self.sub[n]) if 0 <= n <= self.top_degree else []

    def quotient_indices(self, n):
        if not 0 <= n <= self.top_degree:
            return []
        return [i for i in range(self.size(n)) if i not in self.sub[n]]

    def quotient_boundary(self, n):
        """Boundary of the relative complex ``C_n(X,W) -> C_{n-1}(X,W)``."""
        return self.boundary_matrix(n).submatrix(self.quotient_indices(n - 1),
                                                 self.quotient_indices(n))

    def is_sub(self, n, i):
        return i in self.sub[n]

    def chain(self, degree, terms):
        """Build a chain from ``{label: coefficient}``."""
        idx = self.index[degree]
        try:
            return Chain(degree, {idx[label]: c for label, c in terms.items()})
        except KeyError as exc:
            raise InputError(f"unknown simplex {exc.args[0]!r} in degree {degree}") from None

    def cochain(self, degree, values, relative=False):
        f = Cochain(degree, values, relative)
        self.check_cochain(f)
        return f

    def check_chain(self, c):
        if not 0 <= c.degree <= self.top_degree and c.coeffs:
            raise InputError(f"no simplices in degree {c.degree}")
        for i in c.coeffs:
            if not 0 <= i < self.size(c.degree):
                raise InputError(f"basis index {i} out of range in degree {c.degree}")

    def check_cochain(self, f):
        for i in f.values:
            if not 0 <= i < self.size(f.degree):
                raise InputError(f"basis index {i} out of range in degree {f.degree}")
            if f.relative and i in self.sub[f.degree]:
                raise InputError("relative cochain is nonzero on W")

    def is_relative_cycle(self, c):
        return all(i in self.sub[c.degree - 1] for i in boundary(self, c).coeffs) \
            if c.degree >= 1 else True

    def homology_class(self, c):
        self.check_chain(c)
        if not self.is_relative_cycle(c):
            raise InputError("representative is not a relative cycle")
        return HomologyClass(c)

    def subcomplex(self):
        """``(W, empty)`` as a pair in its own right."""
        keep = [self.sub_indices(n) for n in range(self.top_degree + 1)]
        labels = [[self.labels[n][i] for i in keep[n]] for n in range(self.top_degree + 1)]
        bds = [RationalMatrix.zeros(0, len(keep[0]))]
        for n in range(1, self.top_degree + 1):
            bds.append(self.boundaries[n].submatrix(keep[n - 1], keep[n]))
        return ChainComplexPair(labels, bds, [()] * (self.top_degree + 1))

    def to_json(self):
        degrees = []
        for n, ls in enumerate(self.labels):
            entry = {"simplices": [str(label) for label in ls]}
            if n >= 1:
                d = self.boundaries[n]
                entry["faces"] = {
                    str(label): [[q_str(d[i, j]), str(self.labels[n - 1][i])]
                                 for i in range(d.rows) if d[i, j]]
                    for j, label in enumerate(ls)}
            degrees.append(entry)
        sub = [str(self.labels[n][i]) for n in range(len(self.labels)) for i in sorted(self.sub[n])]
        return {"schema": SCHEMA, "degrees": degrees, "sub": sub}

    def __repr__(self):
        sizes = [self.size(n) for n in range(self.top_degree + 1)]
        subs = [len(s) for s in self.sub]
        return f"ChainComplexPair(sizes={sizes}, sub={subs})"


def build_pair_complex(description):
    """Validate a pair description and build the complex.

    ``description`` follows the ``pair-complex/v1`` layout::

        {"degrees": [{"simplices": [ids], "faces": {id: [[sign, face_id], ...]}}, ...],
         "sub": [ids]}

    Ids may be any hashable values (strings in JSON).
    """
    schema = description.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise ValidationError(f"expected schema {SCHEMA!r}, got {schema!r}")
    degrees = description.get("degrees")
    if not isinstance(degrees, list) or not degrees:
        raise ValidationError("'degrees' must be a nonempty list")
    labels, seen = [], {}
    for n, entry in enumerate(degrees):
        ls = list(entry.get("simplices", []))
        for label in ls:
            if label in seen:
                raise ValidationError(f"simplex id {label!r} is used twice")
            seen[label] = n
        labels.append(ls)
    index = [{label: i for i, label in enumerate(ls)} for ls in labels]

    boundaries = [RationalMatrix.zeros(0, len(labels[0]))]
    if degrees[0].get("faces"):
        raise ValidationError("0-simplices cannot have faces")
    for n in range(1, len(degrees)):
        faces = degrees[n].get("faces", {})
        rows = [[Fraction(0)] * len(labels[n]) for _ in labels[n - 1]]
        for label, incidences in faces.items():
            if label not in index[n]:
                raise ValidationError(f"faces given for unknown {n}-simplex {label!r}")
            j = index[n][label]
            for sign, face in incidences:
                if face not in index[n - 1]:
                    raise ValidationError(
                        f"face {face!r} of {label!r} is not a {n - 1}-simplex")
                rows[index[n - 1][face]][j] += to_q(sign)
        boundaries.append(RationalMatrix(rows, len(labels[n])))
    for n in range(2, len(degrees)):
        if not (boundaries[n - 1] @ boundaries[n]).is_zero():
            raise ValidationError(f"d_{n - 1} d_{n} != 0")

    sub = [set() for _ in labels]
    for label in description.get("sub", []):
        if label not in seen:
            raise ValidationError(f"sub-simplex {label!r} is not a simplex")
        n = seen[label]
        sub[n].add(index[n][label])
    for n in range(1, len(degrees)):
        d = boundaries[n]
        for j in sub[n]:
            for i in range(d.rows):
                if d[i, j] and i not in sub[n - 1]:
                    raise ValidationError(
                        f"face {labels[n - 1][i]!r} of sub-simplex {labels[n][j]!r} is not in W")
    return ChainComplexPair(labels, boundaries, sub)


def boundary(pair, c):
    """``d c``; the boundary of a 0-chain is the zero chain of degree -1."""
    if c.degree <= 0:
        return Chain(c.degree - 1)
    d = pair.boundary_matrix(c.degree)
    out = {}
    for j, a in c.coeffs.items():
        for i in range(d.rows):
            if d[i, j]:
                out[i] = out.get(i, 0) + a * d[i, j]
    return Chain(c.degree - 1, out)


def coboundary(pair, f):
    """``(delta f)(s) = f(d s)`` in degree ``f.degree + 1``."""
    d = pair.boundary_matrix(f.degree + 1)
    out = {}
    for j in range(d.cols):
        v = sum((d[i, j] * a for i, a in f.values.items() if d[i, j]), Fraction(0))
        if v:
            out[j] = v
    return Cochain(f.degree + 1, out, f.relative)


def l1_norm_relative(pair, c):
    """L1 norm of the image of ``c`` in ``C_n(X)/C_n(W)``."""
    sub = pair.sub[c.degree] if 0 <= c.degree <= pair.top_degree else ()
    return sum((abs(a) for i, a in c.coeffs.items() if i not in sub), Fraction(0))


def relative_part(pair, c):
    """The coset representative of ``c`` with its ``W`` coordinates zeroed."""
    sub = pair.sub[c.degree]
    return Chain(c.degree, {i: a for i, a in c.coeffs.items() if i not in sub})


def linf_norm(pair, f):
    return max((abs(v) for v in f.values.values()), default=Fraction(0))


def homology_basis(pair, n):
    """Representatives of a basis of ``H_n(X, W; Q)``."""
    if not 0 <= n <= pair.top_degree:
        return []
    q = pair.quotient_indices(n)
    cycles = kernel_basis(pair.quotient_boundary(n))
    dnext = pair.quotient_boundary(n + 1)
    bounds = [dnext.column(j) for j in range(dnext.cols)]
    keep = independent_columns(cycles, preceding=bounds)
    return [HomologyClass(Chain.from_dense(n, cycles[k], q)) for k in keep]


def homology_dim(pair, n):
    return len(homology_basis(pair, n))


def is_relative_boundary(pair, c):
    """Whether ``c`` is zero in ``H_n(X, W)`` (assumes ``c`` is a relative cycle)."""
    q = pair.quotient_indices(c.degree)
    v = [c.coeffs.get(i, 0) for i in q]
    if not any(v):
        return True
    return solve_linear(pair.quotient_boundary(c.degree + 1), v) is not None
