"""Bounded cohomology of finite groups and pairs through the standard resolution.

``B^n(G)`` is the space of real functions on ``G^{n+1}`` with the left
diagonal action ``(g.f)(x_0..x_n) = f(g^-1 x_0, .., g^-1 x_n)``; ``B^{-1}``
is the line of constants on the one-point set ``G^0 = {()}``.  For a finite
group every function is bounded, so the sup norm is a max.

Invariant cochains are stored in orbit coordinates: ``G``-orbits on
``G^{n+1}`` are indexed by their representatives with first entry ``e``.

The discrete model ``X = G x F`` (``G`` acting on the left factor) with
``W = A x F_W`` and a Bruhat function ``chi`` gives the averaging map
``beta`` into cochains on the model and its left inverse ``alpha``.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, InputError, ValidationError
from .exact import RationalMatrix, independent_columns, kernel_basis, q_str, rank, to_q


class FiniteGroup:
    """A group given by its multiplication table on ``0..order-1``."""

    def __init__(self, table, names=None, name="G"):
        n = len(table)
        if n == 0 or any(len(r) != n for r in table):
            raise ValidationError("multiplication table must be square and nonempty")
        if any(not isinstance(x, int) or not 0 <= x < n for r in table for x in r):
            raise ValidationError("table entries must be element indices")
        self.table = tuple(tuple(r) for r in table)
        self.order = n
        self.name = name
        self.names = tuple(names) if names else tuple(str(i) for i in range(n))
        ids = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))]
        if not ids:
            raise ValidationError("no identity element")
        self.e = ids[0]
        t = self.table
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ValidationError("multiplication is not associative")
        inv = []
        for a in range(n):
            found = [b for b in range(n) if t[a][b] == self.e]
            if not found or t[found[0]][a] != self.e:
                raise ValidationError(f"element {self.names[a]} has no inverse")
            inv.append(found[0])
        self.inv = tuple(inv)

    def mul(self, a, b):
        return self.table[a][b]

    def elements(self):
        return range(self.order)

    def is_subgroup(self, A):
        A = set(A)
        return (self.e in A and all(self.table[a][b] in A for a in A for b in A)
                and all(self.inv[a] in A for a in A))

    def check_subgroup(self, A):
        A = tuple(sorted(set(A)))
        if not A or any(not 0 <= a < self.order for a in A) or not self.is_subgroup(A):
            raise ValidationError(f"{A} is not a subgroup of {self.name}")
        return A

    def subgroups(self):
        """All subgroups, smallest first."""
        out = []
        others = [g for g in self.elements() if g != self.e]
        for k in range(len(others) + 1):
            for rest in itertools.combinations(others, k):
                A = (self.e,) + rest
                if self.is_subgroup(A):
                    out.append(tuple(sorted(A)))
        return out

    def to_json(self):
        return {"schema": "group/v1", "name": self.name, "elements": list(self.names),
                "table": [list(r) for r in self.table]}

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def group_from_json(data):
    if data.get("schema", "group/v1") != "group/v1":
        raise InputError("expected a group/v1 document")
    if "table" not in data:
        raise InputError("group document needs a multiplication table")
    return FiniteGroup(data["table"], data.get("elements"), data.get("name", "G"))


def cyclic(n):
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], name=f"Z{n}")


def _perm_group(perms, name):
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(p[q[k]] for k in range(len(q)))] for q in perms] for p in perms]
    return FiniteGroup(table, ["".join(map(str, p)) for p in perms], name)


def builtin(name):
    if name == "z2":
        return cyclic(2)
    if name == "z3":
        return cyclic(3)
    if name == "z2xz2":
        els = [(a, b) for a in range(2) for b in range(2)]
        table = [[els.index(((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)) for y in els] for x in els]
        return FiniteGroup(table, [f"{a}{b}" for a, b in els], "Z2xZ2")
    if name == "s3":
        return _perm_group(sorted(itertools.permutations(range(3))), "S3")
    raise InputError(f"unknown built-in group {name!r}")


BUILTINS = ("z2", "z3", "z2xz2", "s3")


class EquivariantCochain:
    """A function on ``P^{n+1}`` for a finite point set ``P`` (group or model points)."""

    __slots__ = ("degree", "values")

    def __init__(self, degree, values):
        self.degree = degree
        self.values = {k: to_q(v) for k, v in values.items()}

    def __call__(self, x):
        return self.values[tuple(x)]

    def norm(self):
        return max((abs(v) for v in self.values.values()), default=Fraction(0))

    def __eq__(self, other):
        return isinstance(other, EquivariantCochain) and (self.degree, self.values) == (
            other.degree, other.values)

    def __sub__(self, other):
        return EquivariantCochain(self.degree, {k: v - other.values[k] for k, v in self.values.items()})

    def __add__(self, other):
        return EquivariantCochain(self.degree, {k: v + other.values[k] for k, v in self.values.items()})

    def __rmul__(self, c):
        c = to_q(c)
        return EquivariantCochain(self.degree, {k: c * v for k, v in self.values.items()})

    def is_zero(self):
        return not any(self.values.values())

    def to_json(self):
        return {"degree": self.degree,
                "values": [[list(k), q_str(v)] for k, v in sorted(self.values.items())]}

    def __repr__(self):
        return f"EquivariantCochain(degree={self.degree}, size={len(self.values)})"


def tuples(points, n):
    return itertools.product(points, repeat=n + 1)


def cochain_from(fn, points, n):
    return EquivariantCochain(n, {x: fn(x) for x in tuples(points, n)})


def random_cochain(points, n, rng):
    return cochain_from(lambda x: Fraction(rng.randint(-9, 9), rng.randint(1, 5)), points, n)


def coboundary(G, f, points=None):
    """``delta f (x_0..x_{n+1}) = sum_i (-1)^i f(x_0..^x_i..x_{n+1})``; ``delta^-1`` is constant."""
    pts = list(G.elements()) if points is None else points
    n = f.degree
    vals = f.values

    def d(x):
        return sum((vals[x[:i] + x[i + 1:]] if i % 2 == 0 else -vals[x[:i] + x[i + 1:]]
                    for i in range(n + 2)), Fraction(0))
    return cochain_from(d, pts, n + 1)


def contracting_homotopy_std(G, f, base=None):
    """``k f (x_1..x_n) = f(base, x_1..x_n)`` with ``base = e`` by default."""
    b = G.e if base is None else base
    if f.degree < 0:
        raise InputError("no homotopy below degree 0")
    return EquivariantCochain(f.degree - 1, {x[1:]: v for x, v in f.values.items() if x[0] == b})


def act(G, g, f):
    """``(g.f)(x) = f(g^-1 x)`` on group tuples."""
    gi = G.inv[g]
    return EquivariantCochain(f.degree, {x: f.values[tuple(G.table[gi][a] for a in x)]
                                         for x in f.values})


def restrict(f, A):
    A = set(A)
    return EquivariantCochain(f.degree, {x: v for x, v in f.values.items() if all(a in A for a in x)})


# orbit coordinates

def orbit_reps(G, H, n):
    """Representatives ``(e, x_1..x_n)`` of ``H``-orbits on ``H^{n+1}``."""
    return [(G.e,) + rest for rest in itertools.product(sorted(H), repeat=n)]


def orbit_rep(G, x):
    g = G.inv[x[0]]
    return tuple(G.table[g][a] for a in x)


def invariant_from_coords(G, H, n, coords):
    reps = orbit_reps(G, H, n)
    where = dict(zip(reps, coords))
    return cochain_from(lambda x: where[orbit_rep(G, x)], sorted(H), n)


def coords_of_invariant(G, H, f):
    return [f.values[r] for r in orbit_reps(G, H, f.degree)]


def is_invariant(G, f, H=None):
    H = G.elements() if H is None else H
    return all(act(G, h, f) == f for h in H)


def invariant_coboundary_matrix(G, H, n):
    """``delta^n`` on ``H``-invariants in orbit coordinates (``n >= 0``)."""
    src = {r: j for j, r in enumerate(orbit_reps(G, H, n))}
    rows = []
    for r in orbit_reps(G, H, n + 1):
        row = [Fraction(0)] * len(src)
        for i in range(n + 2):
            row[src[orbit_rep(G, r[:i] + r[i + 1:])]] += 1 if i % 2 == 0 else -1
        rows.append(row)
    return RationalMatrix(rows, len(src))


def restriction_matrix(G, A, n):
    """``lambda^n : B^n(G)^G -> B^n(A)^A`` in orbit coordinates."""
    src = {r: j for j, r in enumerate(orbit_reps(G, G.elements(), n))}
    rows = []
    for r in orbit_reps(G, A, n):
        row = [Fraction(0)] * len(src)
        row[src[r]] = Fraction(1)
        rows.append(row)
    return RationalMatrix(rows, len(src))


@dataclass(frozen=True)
class RelativeComplex:
    degree: int
    dim_g: int
    dim_a: int
    restriction: RationalMatrix
    rank: int
    kernel: tuple  # orbit-coordinate vectors spanning B^n(G, A)^G

    @property
    def proper(self):
        return self.rank == self.dim_a


def relative_complex(G, A, n):
    """Invariant spaces, the restriction between them, and its kernel."""
    A = G.check_subgroup(A)
    lam = restriction_matrix(G, A, n)
    ker = tuple(kernel_basis(lam))
    r = rank(lam)
    dim_g = lam.cols
    if r + len(ker) != dim_g:
        raise ConsistencyError("rank and kernel of the restriction disagree")
    for v in ker:  # kernel vectors really are invariant cochains vanishing on A^{n+1}
        f = invariant_from_coords(G, G.elements(), n, v)
        if any(f.values[x] for x in itertools.product(A, repeat=n + 1)):
            raise ConsistencyError("kernel cochain does not vanish on A")
    return RelativeComplex(n, dim_g, lam.rows, lam, r, ker)


@dataclass(frozen=True)
class BoundedCohomology:
    degree: int
    dim: int
    representatives: tuple


def _cochain_space(G, A, n):
    """Basis (as columns) of the invariant (relative if ``A``) cochains of degree ``n``."""
    dim = G.order ** n
    if A is None:
        return [[Fraction(int(i == j)) for i in range(dim)] for j in range(dim)]
    return list(relative_complex(G, A, n).kernel)


def bounded_cohomology(G, A=None, n=0):
    """``H^n_b(G)`` or, given a subgroup ``A``, ``H^n_b(G, A)``, by exact linear algebra."""
    if n < 0:
        raise InputError("degree must be nonnegative")
    basis = _cochain_space(G, A, n)
    if not basis:
        return BoundedCohomology(n, 0, ())
    d = invariant_coboundary_matrix(G, G.elements(), n)
    K = RationalMatrix([list(col) for col in zip(*basis)], len(basis))
    cyc = [tuple(sum((K[i, k] * c[k] for k in range(len(c))), Fraction(0)) for i in range(K.rows))
           for c in kernel_basis(d @ K)]
    bounds = []
    if n >= 1:
        prev = _cochain_space(G, A, n - 1)
        dp = invariant_coboundary_matrix(G, G.elements(), n - 1)
        bounds = [dp.apply(v) for v in prev]
    keep = independent_columns(cyc, preceding=bounds)
    reps = tuple(invariant_from_coords(G, G.elements(), n, cyc[k]) for k in keep)
    return BoundedCohomology(n, len(reps), reps)


# the discrete G-set model

class GSetModel:
    """``X = G x F`` with ``W = A x F_W``, basepoint ``(e, f0)``, and ``chi(g, f) = p_f(g)``."""

    def __init__(self, G, A, fibers, sub_fibers, base, weights):
        self.G = G
        self.A = G.check_subgroup(A)
        self.fibers = tuple(fibers)
        self.sub_fibers = tuple(sub_fibers)
        self.base_fiber = base
        if base not in self.sub_fibers or any(f not in self.fibers for f in self.sub_fibers):
            raise InputError("the base fiber must lie in F_W, and F_W in F")
        self.weights = {f: tuple(to_q(w) for w in weights[f]) for f in self.fibers}
        self.points = [(g, f) for f in self.fibers for g in G.elements()]
        self.b0 = (G.e, base)
        self.verify_chi()

    def chi(self, x):
        return self.weights[x[1]][x[0]]

    def act(self, g, x):
        return (self.G.table[g][x[0]], x[1])

    def in_sub(self, x):
        return x[0] in self.A and x[1] in self.sub_fibers

    def verify_chi(self):
        """The Bruhat function properties, checked by enumeration."""
        G = self.G
        for f in self.fibers:
            p = self.weights[f]
            if len(p) != G.order or any(w < 0 for w in p):
                raise InputError(f"weights on fiber {f!r} must be {G.order} nonnegative rationals")
        for x in self.points:
            if sum(self.chi(self.act(g, x)) for g in G.elements()) != 1:
                raise InputError("chi is not a partition of unity along an orbit")
        if self.chi(self.b0) != 1:
            raise InputError("chi(b0) must be 1")
        for x in self.points:
            if self.in_sub(x):
                for g in G.elements():
                    if g not in self.A and self.chi(self.act(g, x)):
                        raise InputError("chi does not vanish on (G - A).W")
        return True

    def sub_model(self):
        """The model of ``A`` on ``W``: same weights, ``A`` as the group."""
        G, A = self.G, self.A
        pos = {a: i for i, a in enumerate(A)}
        table = [[pos[G.table[a][b]] for b in A] for a in A]
        H = FiniteGroup(table, [G.names[a] for a in A], f"A<{G.name}")
        weights = {f: [self.weights[f][a] for a in A] for f in self.sub_fibers}
        return GSetModel(H, tuple(range(len(A))), self.sub_fibers, self.sub_fibers,
                         self.base_fiber, weights), pos


def _distribution(G, A, kind, rng):
    if kind == "identity":
        return [Fraction(int(g == G.e)) for g in G.elements()]
    if kind == "uniform_G":
        return [Fraction(1, G.order)] * G.order
    if kind == "uniform_A":
        return [Fraction(int(g in A), len(A)) for g in G.elements()]
    if kind in ("random_G", "random_A"):
        support = list(G.elements()) if kind == "random_G" else list(A)
        raw = {g: rng.randint(0, 6) for g in support}
        if not any(raw.values()):
            raw[support[0]] = 1
        total = sum(raw.values())
        return [Fraction(raw.get(g, 0), total) for g in G.elements()]
    if isinstance(kind, (list, tuple)):
        return [to_q(w) for w in kind]
    raise InputError(f"unknown fiber distribution {kind!r}")


def bruhat_chi(G, A, fibers=("f0",), sub_fibers=None, base="f0", weights=None, seed=None):
    """Model with a Bruhat function.

    ``weights`` maps a fiber to ``identity``, ``uniform_G``, ``uniform_A``,
    ``random_G``, ``random_A`` or an explicit list.  Defaults: ``identity`` on
    the base fiber, ``uniform_A`` on the other fibers of ``F_W`` and
    ``uniform_G`` elsewhere; with a ``seed`` the non-base defaults are random.
    """
    A = G.check_subgroup(A)
    sub_fibers = (base,) if sub_fibers is None else tuple(sub_fibers)
    rng = random.Random(seed)
    weights = dict(weights or {})
    out = {}
    for f in fibers:
        kind = weights.get(f)
        if kind is None:
            if f == base:
                kind = "identity"
            elif seed is not None:
                kind = "random_A" if f in sub_fibers else "random_G"
            else:
                kind = "uniform_A" if f in sub_fibers else "uniform_G"
        out[f] = _distribution(G, A, kind, rng)
    return GSetModel(G, A, fibers, sub_fibers, base, out)


def model_from_spec(G, spec, seed=None):
    """Build a model from a JSON-style dict (``subgroup``, ``fibers``, ``sub_fibers``, ``base``, ``weights``)."""
    return bruhat_chi(G, spec.get("subgroup", [G.e]), spec.get("fibers", ["f0"]),
                      spec.get("sub_fibers"), spec.get("base", "f0"), spec.get("weights"), seed)


def beta_chi(model, f):
    """``beta(f)(x) = sum_g prod_i chi(g_i^-1 x_i) f(g)``, one tensor mode at a time."""
    G = model.G
    n = f.degree
    if n < 0:
        return EquivariantCochain(n, dict(f.values))
    # row x of the mode matrix: the nonzero weights chi(g^-1 x), g in G
    mode = {x: [(g, model.chi(model.act(G.inv[g], x))) for g in G.elements()] for x in model.points}
    mode = {x: [(g, w) for g, w in row if w] for x, row in mode.items()}
    cur = f.values
    for i in range(n + 1):
        nxt = {}
        for key in itertools.product(*([model.points] * i + [G.elements()] * (n - i))):
            pre, post = key[:i], key[i:]
            for x in model.points:
                s = Fraction(0)
                for g, w in mode[x]:
                    v = cur[pre + (g,) + post]
                    if v:
                        s += w * v
                nxt[pre + (x,) + post] = s
        cur = nxt
    return EquivariantCochain(n, cur)


def beta_chi_literal(model, f, x):
    """The defining sum over ``G^{n+1}`` at one point (test oracle)."""
    G = model.G
    total = Fraction(0)
    for g in itertools.product(G.elements(), repeat=f.degree + 1):
        w = Fraction(1)
        for gi, xi in zip(g, x):
            w *= model.chi(model.act(G.inv[gi], xi))
            if not w:
                break
        if w:
            total += w * f.values[g]
    return total


def model_act(model, g, phi):
    """``(g.phi)(x) = phi(g^-1 x)`` on model cochains given as callables."""
    gi = model.G.inv[g]
    return lambda x: phi(tuple(model.act(gi, p) for p in x))


def model_homotopy(model, phi):
    """``t(phi)(x_1..x_n) = phi(b0, x_1..x_n)``."""
    return lambda x: phi((model.b0,) + tuple(x))


def _alpha_inductive(model, phi, gs):
    if not gs:
        return phi(())
    g0 = gs[0]
    shifted = model_act(model, g0, model_homotopy(model, model_act(model, model.G.inv[g0], phi)))
    return _alpha_inductive(model, shifted, gs[1:])


def alpha_hat(model, phi):
    """``alpha(phi)(g_0..g_n)``: evaluated inductively and in closed form, which must agree."""
    G = model.G
    n = phi.degree
    vals = phi.values

    def call(x):
        return vals[tuple(x)]
    out = {}
    for gs in itertools.product(G.elements(), repeat=n + 1):
        closed = vals[tuple(model.act(g, model.b0) for g in gs)]
        if _alpha_inductive(model, call, gs) != closed:
            raise ConsistencyError("inductive and closed forms of alpha disagree")
        out[gs] = closed
    return EquivariantCochain(n, out)


def act_model_cochain(model, g, phi):
    """``(g.phi)(x) = phi(g^-1 x)`` on model cochains."""
    gi = model.G.inv[g]
    return EquivariantCochain(phi.degree, {x: phi.values[tuple(model.act(gi, p) for p in x)]
                                           for x in phi.values})


def beta_restricts(model, f):
    """Whether ``beta_G(f)`` restricted to ``W`` is ``beta_A(f|A)`` for the model of ``A``."""
    sub, pos = model.sub_model()
    fa = EquivariantCochain(f.degree, {tuple(pos[a] for a in x): v
                                       for x, v in restrict(f, model.A).values.items()})
    b = beta_chi(model, f)
    return all(b.values[tuple((model.A[p[0]], p[1]) for p in y)] == v
               for y, v in beta_chi(sub, fa).values.items())


def model_is_invariant(model, phi):
    return all(phi.values[tuple(model.act(g, p) for p in x)] == v
               for g in model.G.elements() for x, v in phi.values.items())
