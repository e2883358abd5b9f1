"""Mapping cones of ``W -> X`` with omega-weighted norms.

The cone complex in degree ``n`` is ``C_n(X) + C_{n-1}(W)`` with

    dbar(u, v) = (d u + i(v), -d v),

chain norm ``||u||_1 + (1 + omega) ||v||_1``, and dual norm
``max(||f||_inf, ||g||_inf / (1 + omega))`` on cochains ``(f, g)``, paired by
``<(f, g), (u, v)> = f(u) - g(v)``.  Chains on ``W`` are indexed by their
positions in the ``X`` basis, so ``i`` is the identity on indices.

``beta(u, v) = [u]`` identifies cone homology with relative homology; its
inverse sends ``[a]`` to ``[(a, -d a)]``.
"""

from fractions import Fraction

from .complexes import (Chain, Cochain, HomologyClass, boundary, coboundary, homology_basis,
                        linf_norm)
from .errors import ConsistencyError, InputError
from .exact import RationalMatrix, independent_columns, kernel_basis, q_str, solve_linear, to_q
from .lp import LpProblem, lp_solve
from .seminorm import dual_linf_value, l1_seminorm


def _omega(omega):
    w = to_q(omega)
    if w < 0:
        raise InputError("omega must be nonnegative")
    return w


class ConeChain:
    __slots__ = ("u", "v")

    def __init__(self, u, v=None):
        self.u = u
        self.v = v if v is not None else Chain(u.degree - 1)
        if self.v.degree != u.degree - 1:
            raise InputError("cone chain components have incompatible degrees")

    @property
    def degree(self):
        return self.u.degree

    def __add__(self, other):
        return ConeChain(self.u + other.u, self.v + other.v)

    def __neg__(self):
        return ConeChain(-self.u, -self.v)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return ConeChain(k * self.u, k * self.v)

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def __eq__(self, other):
        return isinstance(other, ConeChain) and (self.u, self.v) == (other.u, other.v)

    def __repr__(self):
        return f"ConeChain({self.u!r}, {self.v!r})"


class ConeCochain:
    __slots__ = ("f", "g")

    def __init__(self, f, g=None):
        self.f = f
        self.g = g if g is not None else Cochain(f.degree - 1)
        if self.g.degree != f.degree - 1:
            raise InputError("cone cochain components have incompatible degrees")

    @property
    def degree(self):
        return self.f.degree

    def __repr__(self):
        return f"ConeCochain({self.f!r}, {self.g!r})"


class ConeComplex:
    """The cone of the inclusion ``C_*(W) -> C_*(X)`` of a pair."""

    def __init__(self, pair):
        self.pair = pair
        self.top_degree = pair.top_degree + 1
        self._bars = {}

    def w_indices(self, n):
        return self.pair.sub_indices(n)

    def size(self, n):
        return self.pair.size(n) + len(self.w_indices(n - 1))

    def split(self, n, vector):
        """Dense cone vector in degree ``n`` -> ``ConeChain``."""
        k = self.pair.size(n)
        u = Chain.from_dense(n, vector[:k])
        v = Chain.from_dense(n - 1, vector[k:], self.w_indices(n - 1))
        return ConeChain(u, v)

    def dense(self, c):
        n = c.degree
        return c.u.dense(self.pair.size(n)) + [c.v.coeffs.get(i, Fraction(0))
                                               for i in self.w_indices(n - 1)]

    def boundary_matrix(self, n):
        """``dbar_n`` as a matrix; built once per degree."""
        if n not in self._bars:
            p = self.pair
            rows_x, rows_w = p.size(n - 1), self.w_indices(n - 2)
            cols_x, cols_w = p.size(n), self.w_indices(n - 1)
            d_x = p.boundary_matrix(n) if n >= 1 else RationalMatrix.zeros(0, cols_x)
            d_w = p.boundary_matrix(n - 1)
            out = []
            for i in range(rows_x):
                row = list(d_x.row(i)) if rows_x and cols_x else [Fraction(0)] * cols_x
                row += [Fraction(1 if i == w else 0) for w in cols_w]
                out.append(row)
            for i in rows_w:
                out.append([Fraction(0)] * cols_x + [-d_w[i, w] for w in cols_w])
            self._bars[n] = RationalMatrix(out, cols_x + len(cols_w))
        return self._bars[n]

    def boundary(self, c):
        u, v = c.u, c.v
        du = boundary(self.pair, u) if u.degree >= 1 else Chain(u.degree - 1)
        dv = boundary(self.pair, v) if v.degree >= 1 else Chain(v.degree - 1)
        return ConeChain(du + Chain(u.degree - 1, v.coeffs), -dv)

    def coboundary(self, cc):
        """``deltabar(f, g) = (delta f, -i^* f - delta g)``, dual to ``dbar``."""
        f, g = cc.f, cc.g
        w = set(self.w_indices(f.degree))
        restricted = Cochain(f.degree, {i: -a for i, a in f.values.items() if i in w})
        dg = coboundary(self.pair, g) if g.degree >= 0 else Cochain(g.degree + 1)
        out = dict(restricted.values)
        for i, a in dg.values.items():
            out[i] = out.get(i, 0) - a
        return ConeCochain(coboundary(self.pair, f), Cochain(f.degree, out))

    def check_chain(self, c):
        self.pair.check_chain(c.u)
        w = set(self.w_indices(c.v.degree))
        if any(i not in w for i in c.v.coeffs):
            raise InputError("second cone component must be supported on W")

    def is_cycle(self, c):
        return not self.boundary(c)

    def __repr__(self):
        return f"ConeComplex({self.pair!r})"


def build_cone(pair):
    cone = ConeComplex(pair)
    for n in range(2, cone.top_degree + 1):
        if not (cone.boundary_matrix(n - 1) @ cone.boundary_matrix(n)).is_zero():
            raise ConsistencyError(f"dbar_{n - 1} dbar_{n} != 0")
    return cone


def cone_l1_norm(c, omega):
    return c.u.l1() + (1 + _omega(omega)) * c.v.l1()


def cone_linf_norm(cc, omega):
    w = _omega(omega)
    return max(max((abs(a) for a in cc.f.values.values()), default=Fraction(0)),
               max((abs(a) for a in cc.g.values.values()), default=Fraction(0)) / (1 + w))


def cone_pairing(cc, c):
    """``f(u) - g(v)``."""
    if cc.degree != c.degree:
        raise InputError(f"cannot pair a degree {cc.degree} cone cochain with a degree {c.degree} chain")
    fu = sum((cc.f(i) * a for i, a in c.u.coeffs.items()), Fraction(0))
    gv = sum((cc.g(i) * a for i, a in c.v.coeffs.items()), Fraction(0))
    return fu - gv


def operator_norm_by_extreme_points(cone, cc, omega):
    """``sup |<cc, c>|`` over the unit ball of the weighted L1 norm.

    The ball is the convex hull of ``+-e_s`` for ``X``-simplices and
    ``+-e_w / (1 + omega)`` for ``W``-simplices, so a maximum over those
    points suffices.
    """
    w = _omega(omega)
    n = cc.degree
    best = Fraction(0)
    for i in range(cone.pair.size(n)):
        best = max(best, abs(cone_pairing(cc, ConeChain(Chain(n, {i: 1})))))
    for i in cone.w_indices(n - 1):
        c = ConeChain(Chain(n), Chain(n - 1, {i: 1 / (1 + w)}))
        best = max(best, abs(cone_pairing(cc, c)))
    return best


def beta_homology(cone, c):
    """``beta(u, v) = [u]`` as a relative class representative."""
    if not cone.is_cycle(c):
        raise InputError("cone chain is not a cycle")
    return HomologyClass(c.u)


def beta_inverse(cone, cls):
    """``[a] -> [(a, -d a)]``."""
    a = cls.representative if hasattr(cls, "representative") else cls
    if not cone.pair.is_relative_cycle(a):
        raise InputError("representative is not a relative cycle")
    da = boundary(cone.pair, a) if a.degree >= 1 else Chain(a.degree - 1)
    return ConeChain(a, -da)


def cone_homology_basis(cone, n):
    """Cycle representatives of a basis of ``H_n`` of the cone."""
    if not 0 <= n <= cone.top_degree:
        return []
    cycles = kernel_basis(cone.boundary_matrix(n))
    nxt = cone.boundary_matrix(n + 1) if n + 1 <= cone.top_degree else RationalMatrix.zeros(cone.size(n), 0)
    keep = independent_columns(cycles, preceding=[nxt.column(j) for j in range(nxt.cols)])
    return [cone.split(n, cycles[k]) for k in keep]


def cone_is_boundary(cone, c):
    v = cone.dense(c)
    if not any(v):
        return True
    if c.degree + 1 > cone.top_degree:
        return False
    return solve_linear(cone.boundary_matrix(c.degree + 1), v) is not None


def beta_is_isomorphism(cone, n):
    """``dim H_n(cone) = dim H_n(X, W)`` and ``beta`` maps a basis to a basis."""
    pair = cone.pair
    basis = cone_homology_basis(cone, n)
    rel = homology_basis(pair, n)
    if len(basis) != len(rel):
        return False
    if not basis:
        return True
    q = pair.quotient_indices(n)
    images = [[beta_homology(cone, c).representative.coeffs.get(i, 0) for i in q] for c in basis]
    d = pair.quotient_boundary(n + 1)
    bounds = [d.column(j) for j in range(d.cols)]
    if len(independent_columns(images, preceding=bounds)) != len(images):
        return False
    # round trip on the relative basis: beta(beta^-1 [a]) = [a]
    return all(beta_homology(cone, beta_inverse(cone, h)).representative == h.representative
               for h in rel)


def cone_l1_seminorm(cone, c, omega):
    """``(value, minimizer)``: least weighted L1 norm over the cone class of ``c``."""
    w = _omega(omega)
    cone.check_chain(c)
    if not cone.is_cycle(c):
        raise InputError("cone chain is not a cycle")
    n = c.degree
    size = cone.size(n)
    if size == 0:
        return Fraction(0), c
    k = cone.pair.size(n)
    d = cone.boundary_matrix(n + 1) if n + 1 <= cone.top_degree else RationalMatrix.zeros(size, 0)
    nb = d.cols
    rows = []
    for r in range(size):
        row = [Fraction(0)] * (2 * size + nb)
        row[r], row[size + r] = Fraction(1), Fraction(-1)
        for j in range(nb):
            row[2 * size + j] = -d[r, j]
        rows.append(row)
    weights = [Fraction(1)] * k + [1 + w] * (size - k)
    objective = weights + weights + [0] * nb
    bounds = [(0, None)] * (2 * size) + [(None, None)] * nb
    res = lp_solve(LpProblem(objective, RationalMatrix(rows, 2 * size + nb), cone.dense(c),
                             bounds=bounds))
    if res.status != "optimal":
        raise ConsistencyError(f"cone seminorm LP is {res.status}")
    x = res.witness
    best = cone.split(n, [x[r] - x[size + r] for r in range(size)])
    if cone_l1_norm(best, w) != res.value or not cone_is_boundary(cone, best - c):
        raise ConsistencyError("cone minimizer does not check out")
    return res.value, best


def cone_dual_seminorm(cone, phi, omega):
    """``(value, representative)``: least dual norm over the cone class of ``(phi, 0)``.

    ``phi`` must be a relative cocycle; ``(phi, 0)`` is then a cone cocycle.
    Minimizes ``t`` over ``(phi, 0) + deltabar(a, b)``.
    """
    w = _omega(omega)
    pair = cone.pair
    n = phi.degree
    if any(pair.is_sub(n, i) for i in phi.values) or coboundary(pair, phi).values:
        raise InputError("phi must be a relative cocycle")
    na = pair.size(n - 1) if n >= 1 else 0
    wb = cone.w_indices(n - 2) if n >= 2 else []
    nb = len(wb)
    nvar = 1 + na + nb  # t, a, b
    rows, rhs, senses = [], [], []
    d = pair.boundary_matrix(n)
    for s in range(pair.size(n)):
        # f'(s) = phi(s) + a(d s)
        coeffs = [Fraction(0)] * nvar
        if n >= 1:
            for i in range(na):
                coeffs[1 + i] = d[i, s]
        for sign in (1, -1):
            row = [sign * x for x in coeffs]
            row[0] = Fraction(-1)
            rows.append(row)
            rhs.append(-sign * phi(s))
            senses.append("<=")
    dw = pair.boundary_matrix(n - 1)
    for s in cone.w_indices(n - 1):
        # g'(s) = -a(s) - b(d s)
        coeffs = [Fraction(0)] * nvar
        coeffs[1 + s] = Fraction(-1)
        for j, i in enumerate(wb):
            coeffs[1 + na + j] = -dw[i, s]
        for sign in (1, -1):
            row = [sign * x for x in coeffs]
            row[0] = -(1 + w)
            rows.append(row)
            rhs.append(Fraction(0))
            senses.append("<=")
    bounds = [(0, None)] + [(None, None)] * (na + nb)
    matrix = RationalMatrix(rows, nvar) if rows else RationalMatrix.zeros(0, nvar)
    res = lp_solve(LpProblem([1] + [0] * (na + nb), matrix, rhs, senses, bounds))
    if res.status != "optimal":
        raise ConsistencyError(f"cone dual LP is {res.status}")
    x = res.witness
    a = Cochain(n - 1, {i: x[1 + i] for i in range(na)})
    b = Cochain(n - 2, {i: x[1 + na + j] for j, i in enumerate(wb)})
    shift = cone.coboundary(ConeCochain(a, b))
    f = Cochain(n, {s: phi(s) + shift.f(s) for s in range(pair.size(n))})
    rep = ConeCochain(f, shift.g)
    if cone_linf_norm(rep, w) != res.value:
        raise ConsistencyError("cone dual representative does not check out")
    return res.value, rep


CHECKS = {
    "monotone": "|beta(a)|_1 <= |a|_1(0) <= |a|_1(w)",
    "conto": "|a|_1(w) >= |[a]|_1 + (1+w) |[da]|_1,W",
    "sandwich": "|phi|_inf/(n+2) <= |(phi,0)|_inf(0) <= |phi|_inf",
    "pairing": "|(phi,0)|_inf(w) * |a|_1(w) >= 1",
}


class ConeReport:
    """Per class and per omega: seminorm values and the checked inequalities."""

    def __init__(self, degree, omegas, rows):
        self.degree = degree
        self.omegas = omegas
        self.rows = rows

    @property
    def ok(self):
        return all(all(r["checks"].values()) for r in self.rows)

    def to_json(self):
        def enc(x):
            if isinstance(x, Fraction):
                return q_str(x)
            if isinstance(x, dict):
                return {k: enc(v) for k, v in x.items()}
            if isinstance(x, list):
                return [enc(v) for v in x]
            return x
        return {"schema": "cone-report/v1", "degree": self.degree,
                "omegas": [q_str(w) for w in self.omegas], "checked": CHECKS,
                "rows": enc(self.rows), "ok": self.ok}

    def to_table(self):
        head = ["class", "omega", "rel", "cone", "[da]_W", "gap", "|phi|", "cone*(w)", "checks"]
        lines = []
        for r in self.rows:
            for w, cv, dv in zip(self.omegas, r["cone"], r["cone_dual"]):
                failed = [k for k, v in r["checks"].items() if not v]
                lines.append([r["class"], q_str(w), q_str(r["relative"]), q_str(cv),
                              q_str(r["boundary_seminorm"]), "strict" if cv > r["relative"] else "-",
                              "-" if r["phi_norm"] is None else q_str(r["phi_norm"]),
                              "-" if dv is None else q_str(dv),
                              "ok" if not failed else "FAIL " + ",".join(failed)])
        widths = [max(len(x) for x in col) for col in zip(head, *lines)]
        fmt = "  ".join("{:<%d}" % n for n in widths)
        out = [f"degree {self.degree}"] + [fmt.format(*head)] + [fmt.format(*ln) for ln in lines]
        out += [f"{k}: {v}" for k, v in CHECKS.items()]
        return "\n".join(out)


def _report_row(cone, name, a, omegas):
    pair = cone.pair
    n = a.degree
    rel, _ = l1_seminorm(pair, a)
    c = beta_inverse(cone, a)
    cones = [cone_l1_seminorm(cone, c, w)[0] for w in omegas]
    cone0 = cones[omegas.index(0)] if 0 in omegas else cone_l1_seminorm(cone, c, 0)[0]
    if n >= 1:
        sub = pair.subcomplex()
        keep = pair.sub_indices(n - 1)
        da = boundary(pair, a)
        da_w = Chain(n - 1, {keep.index(i): x for i, x in da.coeffs.items()})
        bsem = l1_seminorm(sub, da_w)[0]
    else:
        bsem = Fraction(0)
    _, phi = dual_linf_value(pair, a)
    checks = {
        "monotone": all(rel <= cone0 <= cv for cv in cones),
        "conto": all(cv >= rel + (1 + w) * bsem for w, cv in zip(omegas, cones)),
    }
    duals = [None] * len(omegas)
    phi_norm = None
    if phi is not None:
        phi_norm = linf_norm(pair, phi)
        dual0 = cone_dual_seminorm(cone, phi, 0)[0]
        duals = [cone_dual_seminorm(cone, phi, w)[0] for w in omegas]
        checks["sandwich"] = phi_norm / (n + 2) <= dual0 <= phi_norm
        checks["pairing"] = all(dv * cv >= 1 for dv, cv in zip(duals, cones))
    return {"class": name, "relative": rel, "cone": cones, "boundary_seminorm": bsem,
            "strict_gap": [cv > rel for cv in cones], "phi_norm": phi_norm,
            "cone_dual": duals, "checks": checks}


def norm_comparison_report(pair, n, omegas=(0, 1, 10), cone=None):
    """Compare relative and cone seminorms on a basis of ``H_n(X, W)``, plus the zero class."""
    omegas = [_omega(w) for w in omegas]
    if not 0 <= n <= pair.top_degree:
        raise InputError(f"degree {n} is outside 0..{pair.top_degree}")
    cone = cone or build_cone(pair)
    rows = [_report_row(cone, "0", Chain(n), omegas)]
    for k, h in enumerate(homology_basis(pair, n)):
        rows.append(_report_row(cone, f"h{k}", h.representative, omegas))
    return ConeReport(n, omegas, rows)
