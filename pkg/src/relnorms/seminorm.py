"""L1 seminorms of relative homology classes and their L-infinity duals, by exact LP.

Primal, for a relative cycle ``z`` of degree ``n``::

    minimize   sum_i (p_i + q_i)
    subject to p - q - D'b = z'          (rows indexed by simplices not in W)
               p, q >= 0,  b free in C_{n+1}(X)

where ``'`` means restriction to the non-``W`` coordinates; zeroing those
coordinates is how the quotient by ``C_n(W)`` enters.

Dual::

    maximize   <f, z>
    subject to f vanishes on W,  f(d s) = 0 for every (n+1)-simplex s,  |f_i| <= 1

If the optimum ``t`` is positive then ``phi = f / t`` pairs to 1 with the
class and ``1/||phi|| = t``; if it is zero no cocycle pairs to 1 and the
dual value is 0 by the convention ``sup(empty) = 0``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .complexes import (Chain, Cochain, coboundary, is_relative_boundary, l1_norm_relative,
                        linf_norm)
from .errors import ConsistencyError, InputError
from .exact import RationalMatrix, q_str
from .lp import LpProblem, lp_solve


def _check_class(pair, cls):
    c = cls.representative if hasattr(cls, "representative") else cls
    pair.check_chain(c)
    if not pair.is_relative_cycle(c):
        raise InputError("representative is not a relative cycle")
    return c


def l1_seminorm(pair, cls):
    """``(value, minimizer)``: the least relative L1 norm over the class."""
    z = _check_class(pair, cls)
    n = z.degree
    q = pair.quotient_indices(n)
    if not q:
        return Fraction(0), Chain(n)
    d = pair.quotient_boundary(n + 1) if n + 1 <= pair.top_degree else None
    nb = d.cols if d is not None else 0
    nq = len(q)
    rows = []
    for r in range(nq):
        row = [Fraction(0)] * (2 * nq + nb)
        row[r], row[nq + r] = Fraction(1), Fraction(-1)
        for j in range(nb):
            row[2 * nq + j] = -d[r, j]
        rows.append(row)
    rhs = [z.coeffs.get(i, Fraction(0)) for i in q]
    objective = [1] * (2 * nq) + [0] * nb
    bounds = [(0, None)] * (2 * nq) + [(None, None)] * nb
    res = lp_solve(LpProblem(objective, RationalMatrix(rows, 2 * nq + nb), rhs, bounds=bounds))
    if res.status != "optimal":
        raise ConsistencyError(f"primal seminorm LP is {res.status}")
    x = res.witness
    best = Chain.from_dense(n, [x[r] - x[nq + r] for r in range(nq)], q)
    return res.value, best


def dual_linf_value(pair, cls):
    """``(value, cocycle)``: sup of ``1/||phi||`` over relative cocycles with ``<phi, class> = 1``.

    Returns ``(0, None)`` when no such cocycle exists.
    """
    z = _check_class(pair, cls)
    n = z.degree
    q = pair.quotient_indices(n)
    if not q:
        return Fraction(0), None
    d = pair.boundary_matrix(n + 1)
    rows = [[d[i, j] for i in q] for j in range(d.cols)]
    rows = [r for r in rows if any(r)]
    objective = [z.coeffs.get(i, Fraction(0)) for i in q]
    matrix = RationalMatrix(rows, len(q)) if rows else RationalMatrix.zeros(0, len(q))
    res = lp_solve(LpProblem(objective, matrix, [0] * len(rows), bounds=[(-1, 1)] * len(q)),
                   direction="max")
    if res.status != "optimal":
        raise ConsistencyError(f"dual seminorm LP is {res.status}")
    t = res.value
    if t == 0:
        return Fraction(0), None
    phi = Cochain(n, {i: v / t for i, v in zip(q, res.witness)}, relative=True)
    return t, phi


def kronecker(pair, f, c):
    """``<f, c> = sum f(s) c(s)``."""
    if f.degree != c.degree:
        raise InputError(f"cannot pair a degree {f.degree} cochain with a degree {c.degree} chain")
    return sum((f(i) * a for i, a in c.coeffs.items()), Fraction(0))


@dataclass(frozen=True)
class SeminormCertificate:
    degree: int
    representative: Chain
    primal_value: Fraction
    optimal_chain: Chain
    dual_value: Fraction
    optimal_cocycle: Cochain | None
    labels: tuple = ()

    def to_json(self):
        def chain_json(c):
            return {str(self.labels[i]) if self.labels else str(i): q_str(a)
                    for i, a in sorted(c.coeffs.items())}
        return {
            "schema": "certificate/v1",
            "degree": self.degree,
            "representative": chain_json(self.representative),
            "primal_value": q_str(self.primal_value),
            "optimal_chain": chain_json(self.optimal_chain),
            "dual_value": q_str(self.dual_value),
            "optimal_cocycle": None if self.optimal_cocycle is None else {
                str(self.labels[i]) if self.labels else str(i): q_str(v)
                for i, v in sorted(self.optimal_cocycle.values.items())},
            "dual_feasible": self.optimal_cocycle is not None,
        }


def verify_certificate(pair, cert):
    """Re-check a certificate with plain arithmetic (no LP); raise on any defect."""
    z, c, phi = cert.representative, cert.optimal_chain, cert.optimal_cocycle
    if not pair.is_relative_cycle(c) or not is_relative_boundary(pair, c - z):
        raise ConsistencyError("optimal chain does not represent the class")
    if l1_norm_relative(pair, c) != cert.primal_value:
        raise ConsistencyError("optimal chain norm differs from the primal value")
    if phi is None:
        if cert.dual_value != 0 or cert.primal_value != 0:
            raise ConsistencyError("dual infeasible but a value is nonzero")
        return True
    if any(pair.is_sub(phi.degree, i) for i in phi.values):
        raise ConsistencyError("cocycle does not vanish on W")
    if coboundary(pair, phi).values:
        raise ConsistencyError("cocycle is not closed")
    if kronecker(pair, phi, z) != 1 or kronecker(pair, phi, c) != 1:
        raise ConsistencyError("cocycle does not pair to 1 with the class")
    if linf_norm(pair, phi) * cert.primal_value != 1:
        raise ConsistencyError("cocycle norm is not the reciprocal of the primal value")
    if cert.primal_value != cert.dual_value:
        raise ConsistencyError("primal and dual values differ")
    return True


def duality_certificate(pair, cls):
    """Solve both programs and return an independently verified certificate."""
    z = _check_class(pair, cls)
    primal, chain = l1_seminorm(pair, z)
    dual, phi = dual_linf_value(pair, z)
    cert = SeminormCertificate(z.degree, z, primal, chain, dual, phi, pair.labels[z.degree])
    verify_certificate(pair, cert)
    return cert
