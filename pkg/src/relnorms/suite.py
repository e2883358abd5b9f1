"""The acceptance properties as callable checks, shared by the CLI and the tests.

Every check is exact.  ``run_all`` returns one :class:`CheckResult` per
criterion with the detail lines that were verified.
"""

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import families
from .complexes import Chain, Cochain, boundary, homology_basis, linf_norm
from .cone import (ConeCochain, beta_inverse, beta_is_isomorphism, build_cone,
                   cone_dual_seminorm, cone_l1_seminorm, cone_linf_norm,
                   operator_norm_by_extreme_points)
from .exact import q_str
from .geometry import (StraightChain, build_net, chain_of, cylinder, homotopy_chain,
                       random_straight_simplex, straighten, straighten_chain, torus)
from .groups import (BUILTINS, EquivariantCochain, act, act_model_cochain, alpha_hat,
                     beta_chi, beta_chi_literal, beta_restricts, bounded_cohomology, bruhat_chi,
                     builtin, coboundary, contracting_homotopy_std, random_cochain,
                     relative_complex, restrict)
from .measures import (boundary_measure, iota, random_measure, relative_mea_norm, theta,
                       total_variation)
from .seminorm import dual_linf_value, duality_certificate, l1_seminorm

OMEGAS = (Fraction(0), Fraction(1), Fraction(10))
DEFAULT_SEED = 20240611


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool = True
    details: list = field(default_factory=list)
    seconds: float = 0.0
    limit: float | None = None

    def note(self, ok, line):
        self.details.append(("ok   " if ok else "FAIL ") + line)
        self.passed = self.passed and bool(ok)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.seconds:.2f}s)"


class Context:
    """Suite pairs, cones and seeds, built once."""

    def __init__(self, seed=DEFAULT_SEED):
        self.seed = seed
        self.pairs = families.suite_pairs()
        self.cones = {name: build_cone(p) for name, p in self.pairs.items()}

    def classes(self):
        for name, p in self.pairs.items():
            for n in range(p.top_degree + 1):
                for k, h in enumerate(homology_basis(p, n)):
                    yield name, p, n, k, h.representative

    def rng(self, salt):
        return random.Random(f"{self.seed}:{salt}")


def _timed(number, title, limit=None):
    def wrap(fn):
        def run(ctx):
            res = CheckResult(number, title, limit=limit)
            t = time.perf_counter()
            fn(ctx, res)
            res.seconds = time.perf_counter() - t
            if limit is not None:
                res.note(res.seconds < limit, f"finished within {limit}s")
            return res
        run.number = number
        return run
    return wrap


@_timed(1, "primal L1 seminorm equals dual L-infinity value", limit=60)
def check_duality(ctx, res):
    for name, p, n, k, z in ctx.classes():
        cert = duality_certificate(p, z)
        res.note(cert.primal_value == cert.dual_value,
                 f"{name} H_{n} class {k}: primal {q_str(cert.primal_value)} = dual {q_str(cert.dual_value)}")
        scaled = duality_certificate(p, Fraction(-3, 2) * z)
        res.note(scaled.primal_value == Fraction(3, 2) * cert.primal_value == scaled.dual_value,
                 f"{name} H_{n} class {k}: scaling by -3/2")
    for name, p in ctx.pairs.items():
        cert = duality_certificate(p, Chain(p.top_degree))
        res.note(cert.primal_value == cert.dual_value == 0 and cert.optimal_cocycle is None,
                 f"{name}: zero class gives 0 = 0 with no normalized cocycle")
    expected = {"circle3": 3, "circle4": 4, "circle5": 5, "circle6": 6, "interval": 1,
                "cylinder_grid6x2": 24, "torus_grid4x4": 32}
    for name, value in expected.items():
        p = ctx.pairs[name]
        z = homology_basis(p, p.top_degree)[0].representative
        res.note(l1_seminorm(p, z)[0] == value, f"{name}: top class seminorm is {value}")


def _cone_values(ctx, name, z):
    cone = ctx.cones[name]
    c = beta_inverse(cone, z)
    return {w: cone_l1_seminorm(cone, c, w)[0] for w in OMEGAS}


@_timed(2, "|beta(a)|_1 <= |a|_1(0) <= |a|_1(w) for w in {0, 1, 10}")
def check_monotone(ctx, res):
    for name, p, n, k, z in ctx.classes():
        rel = l1_seminorm(p, z)[0]
        vals = _cone_values(ctx, name, z)
        ok = all(rel <= vals[0] <= vals[w] for w in OMEGAS)
        res.note(ok, f"{name} H_{n} class {k}: {q_str(rel)} <= "
                 + " <= ".join(q_str(vals[w]) for w in OMEGAS))


@_timed(3, "cone(w) >= |[a]|_1 + (1+w)|[da]|_1 on the cylinder top class, strict gap at w = 0")
def check_conto(ctx, res):
    name = "cylinder_grid6x2"
    p = ctx.pairs[name]
    n = p.top_degree
    z = homology_basis(p, n)[0].representative
    rel = l1_seminorm(p, z)[0]
    sub = p.subcomplex()
    keep = p.sub_indices(n - 1)
    da = boundary(p, z)
    bsem = l1_seminorm(sub, Chain(n - 1, {keep.index(i): x for i, x in da.coeffs.items()}))[0]
    vals = _cone_values(ctx, name, z)
    for w in OMEGAS:
        res.note(vals[w] >= rel + (1 + w) * bsem,
                 f"w={q_str(w)}: cone {q_str(vals[w])} >= {q_str(rel)} + {q_str(1 + w)}*{q_str(bsem)}")
    res.note(vals[0] > rel, f"strict gap: cone(0) = {q_str(vals[0])} > relative {q_str(rel)}")


def _random_cone_cochain(cone, n, rng):
    p = cone.pair
    f = Cochain(n, {i: Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for i in range(p.size(n))})
    g = Cochain(n - 1, {i: Fraction(rng.randint(-20, 20), rng.randint(1, 7))
                        for i in cone.w_indices(n - 1)})
    return ConeCochain(f, g)


@_timed(4, "dual cone norm max(|f|, |g|/(1+w)) equals the operator norm (100 cochains per w)")
def check_operator_norm(ctx, res):
    rng = ctx.rng("operator")
    for name, n in (("cylinder_grid6x2", 1), ("cylinder_grid6x2", 2), ("interval", 1)):
        cone = ctx.cones[name]
        for w in OMEGAS:
            bad = 0
            for _ in range(100):
                cc = _random_cone_cochain(cone, n, rng)
                bad += cone_linf_norm(cc, w) != operator_norm_by_extreme_points(cone, cc, w)
            res.note(bad == 0, f"{name} degree {n}, w={q_str(w)}: 100 random cochains, {bad} mismatches")


@_timed(5, "|phi|/(n+2) <= |(phi,0)|(0) <= |phi| for every dual-optimal phi")
def check_sandwich(ctx, res):
    for name, p, n, k, z in ctx.classes():
        _, phi = dual_linf_value(p, z)
        if phi is None:
            continue
        norm = linf_norm(p, phi)
        val = cone_dual_seminorm(ctx.cones[name], phi, 0)[0]
        res.note(norm / (n + 2) <= val <= norm,
                 f"{name} H_{n} class {k}: {q_str(norm / (n + 2))} <= {q_str(val)} <= {q_str(norm)}")


def pair_chain_to_straight(pair, c):
    return StraightChain(c.degree, {pair.labels[c.degree][i]: a for i, a in c.coeffs.items()})


@_timed(6, "straightening: chain map, deck equivariance, W preserved, dT + Td = id - str")
def check_straightening(ctx, res):
    rng = ctx.rng("straighten")
    models = {"torus2": torus(2, 1), "torus3": torus(3, 1), "cylinder": cylinder(1, 1)}
    nets = {k: build_net(m, seed=ctx.seed) for k, m in models.items()}
    nets["torus2/4"] = build_net(models["torus2"], resolution=4, seed=ctx.seed)
    nets["cylinder/3x4"] = build_net(models["cylinder"], resolution=3, rows=4, seed=ctx.seed)
    res.note(True, f"{len(nets)} nets verified (partition, equivariance, W coverage)")
    chain_bad = homotopy_bad = deck_bad = 0
    count = translations = 0
    for name, net in nets.items():
        m = net.model
        for _ in range(40):
            d = rng.randint(0, 3)
            s = random_straight_simplex(m, d, rng)
            c = chain_of(s)
            count += 1
            if d:
                chain_bad += straighten_chain(net, c.boundary()) != straighten_chain(net, c).boundary()
                lhs = homotopy_chain(net, c).boundary() + homotopy_chain(net, c.boundary())
            else:
                lhs = homotopy_chain(net, c).boundary()
            homotopy_bad += lhs != c - straighten_chain(net, c)
            k = m.random_translation(rng)
            translations += 1
            lifted = tuple(net.assign(v) for v in s.translated(k))
            deck_bad += lifted != tuple(m.translate(net.assign(v), k) for v in s.vertices)
    res.note(chain_bad == 0, f"d str = str d on {count} random simplices")
    res.note(deck_bad == 0, f"str(g s) = g str(s) on {translations} sampled deck translations")
    res.note(homotopy_bad == 0, f"dT + Td = id - str on {count} random simplices of degree <= 3")
    wbad = wcount = 0
    for name in ("cylinder", "cylinder/3x4"):
        net = nets[name]
        for _ in range(60):
            comp = rng.randint(0, 1)
            s = random_straight_simplex(net.model, rng.randint(0, 3), rng, on_sub=comp)
            wcount += 1
            wbad += straighten(net, s).sub_component() != comp
            wbad += any(not t.in_sub() for t in homotopy_chain(net, chain_of(s)).terms)
    res.note(wbad == 0, f"W-simplices straighten and prism into W ({wcount} samples)")
    for pname, nname in (("torus_grid4x4", "torus2"), ("torus_grid4x4", "torus2/4"),
                         ("cylinder_grid6x2", "cylinder"), ("cylinder_grid6x2", "cylinder/3x4")):
        p, net = ctx.pairs[pname], nets[nname]
        for n in range(p.top_degree + 1):
            for k, h in enumerate(homology_basis(p, n)):
                z = pair_chain_to_straight(p, h.representative)
                resid = z - straighten_chain(net, z) - homotopy_chain(net, z).boundary()
                ok = all(s.in_sub() for s in resid.terms)
                res.note(ok, f"{pname} H_{n} class {k}, net {nname}: z - str z - dTz lies in W")


@_timed(7, "theta: chain map, W preserved, |theta(mu)|_1 <= |mu|, theta iota = str")
def check_theta(ctx, res):
    rng = ctx.rng("theta")
    nets = [build_net(torus(2, 1), seed=ctx.seed), build_net(cylinder(1, 1), seed=ctx.seed),
            build_net(torus(2, 1), resolution=3, seed=ctx.seed)]
    counts = dict.fromkeys(("chain", "W", "norm", "relnorm", "iota", "tv"), 0)
    total = 0
    for net in nets:
        for _ in range(40):
            mu = random_measure(net.model, rng.randint(1, 3), rng, atoms=20)
            total += 1
            t = theta(net, mu)
            counts["chain"] += theta(net, boundary_measure(mu)) != t.boundary()
            counts["norm"] += t.l1() > total_variation(mu)
            counts["relnorm"] += t.l1_relative() > relative_mea_norm(mu)
            wpart = type(mu)(mu.degree, {s: a for s, a in mu.terms.items() if s.in_sub()})
            counts["W"] += any(not s.in_sub() for s in theta(net, wpart).terms)
            c = StraightChain(mu.degree, mu.terms)
            counts["iota"] += theta(net, iota(c)) != straighten_chain(net, c)
            counts["tv"] += total_variation(iota(c)) != c.l1()
    res.note(counts["chain"] == 0, f"theta d = d theta on {total} random measure chains")
    res.note(counts["W"] == 0, "theta maps W-supported measures to W-chains")
    res.note(counts["norm"] == 0, "|theta(mu)|_1 <= |mu|_mea")
    res.note(counts["relnorm"] == 0, "relative norm contraction")
    res.note(counts["iota"] == 0, "theta(iota(c)) = str(c)")
    res.note(counts["tv"] == 0, "iota is isometric")


def _group_checks(G, A, rng, res, max_degree):
    pts = list(G.elements())
    tag = f"{G.name}, A={A}"
    t = EquivariantCochain(-1, {(): Fraction(rng.randint(-9, 9), rng.randint(1, 5))})
    res.note(contracting_homotopy_std(G, coboundary(G, t)) == t, f"{tag}: k delta^-1 = id")
    for n in range(max_degree + 1):
        f = random_cochain(pts, n, rng)
        if n < max_degree:
            res.note(coboundary(G, coboundary(G, f)).is_zero(), f"{tag}: dd = 0 from degree {n}")
        kf = contracting_homotopy_std(G, f)
        both = contracting_homotopy_std(G, coboundary(G, f)) + coboundary(G, kf)
        res.note(both == f, f"{tag}: delta k + k delta = id in degree {n}")
        res.note(kf.norm() <= f.norm(), f"{tag}: |k f| <= |f| in degree {n}")
        res.note(contracting_homotopy_std(G, restrict(f, A)) == restrict(kf, A),
                 f"{tag}: restriction commutes with k in degree {n}")
        rc = relative_complex(G, A, n)
        res.note(rc.proper, f"{tag}: restriction onto B^{n}(A)^A (rank {rc.rank} = {rc.dim_a})")


@_timed(8, "finite groups: dd = 0, homotopies, properness, H_b, alpha beta = id", limit=120)
def check_groups(ctx, res):
    rng = ctx.rng("groups")
    for gname in BUILTINS:
        G = builtin(gname)
        max_degree = 2 if G.order >= 6 else 3
        pts = list(G.elements())
        absolute = [bounded_cohomology(G, None, n).dim for n in range(3)]
        res.note(absolute == [1, 0, 0], f"{G.name}: dim H^0,1,2_b(G) = {absolute}")
        for A in G.subgroups():
            _group_checks(G, A, rng, res, max_degree)
            rel = [bounded_cohomology(G, A, n).dim for n in range(3)]
            res.note(rel == [0, 0, 0], f"{G.name}, A={A}: dim H^0,1,2_b(G,A) = {rel}")
            for _ in range(5):
                seed = rng.randrange(10 ** 9)
                model = bruhat_chi(G, A, ("f0", "f1", "f2"), ("f0", "f1"), seed=seed)
                for n in range(3):
                    f = random_cochain(pts, n, rng)
                    b = beta_chi(model, f)
                    x = tuple(rng.choice(model.points) for _ in range(n + 1))
                    g = rng.choice(pts)
                    ok = (alpha_hat(model, b) == f and b.norm() <= f.norm()
                          and beta_chi_literal(model, f, x) == b(x)
                          and beta_chi(model, act(G, g, f)) == act_model_cochain(model, g, b)
                          and beta_restricts(model, f))
                    res.note(ok, f"{G.name}, A={A}, chi seed {seed}, n={n}: alpha beta = id, "
                             "literal sum, equivariance, restriction to W")


@_timed(9, "dim H_n(cone) = dim H_n(X, W) via beta on every suite pair", limit=300)
def check_cone_homology(ctx, res):
    for name, cone in ctx.cones.items():
        for n in range(cone.top_degree + 1):
            res.note(beta_is_isomorphism(cone, n), f"{name}: beta is an isomorphism in degree {n}")


CHECKS = (check_duality, check_monotone, check_conto, check_operator_norm, check_sandwich,
          check_straightening, check_theta, check_groups, check_cone_homology)


def run_all(seed=DEFAULT_SEED, only=None):
    t = time.perf_counter()
    ctx = Context(seed)
    out = [chk(ctx) for chk in CHECKS if only is None or chk.number in only]
    if only is None or 9 in only:
        total = time.perf_counter() - t
        out[-1].note(total < 300, "whole run finished within 300s")
    return out
