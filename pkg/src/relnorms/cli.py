"""Command line front end.

Exit status: 0 on success, 1 on unreadable or invalid input, 2 when a check
or certificate fails.  Output depends only on the arguments (and ``--seed``).
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import families
from .complexes import build_pair_complex, homology_basis
from .cone import build_cone, norm_comparison_report
from .errors import ConsistencyError, InputError
from .exact import q_str, to_q
from .geometry import (StraightChain, build_net, chain_of, cylinder, homotopy_chain,
                       random_straight_simplex, straight_chain_from_json, straighten_chain, torus)
from .groups import (alpha_hat, beta_chi, bounded_cohomology, builtin, group_from_json,
                     model_from_spec, random_cochain, relative_complex)
from .measures import (boundary_measure, measure_from_json, random_measure, relative_mea_norm,
                       theta, total_variation)
from .seminorm import duality_certificate
from .suite import DEFAULT_SEED, run_all


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _pair(arg):
    """A pair from a pair-complex/v1 file or a built-in name."""
    if arg.endswith(".json"):
        return build_pair_complex(_load_json(arg))
    return families.by_name(arg)


def _omegas(text):
    try:
        ws = [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad omega list {text!r}") from None
    if not ws or any(w < 0 for w in ws):
        raise InputError("omega list must be nonempty and nonnegative")
    return ws


def _grid(text):
    m, _, n = text.partition("x")
    if not (m.isdigit() and n.isdigit()):
        raise InputError(f"--grid expects MxN, got {text!r}")
    return int(m), int(n)


def _emit(obj, as_json, table):
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        print(table)


def _classes(pair, args):
    if args.chain:
        data = _load_json(args.chain)
        return [pair.chain(args.degree, {k: to_q(v) for k, v in data.items()})]
    return [h.representative for h in homology_basis(pair, args.degree)]


def cmd_seminorm(args):
    pair = _pair(args.pair)
    _check_degree(pair, args.degree)
    certs = [duality_certificate(pair, z) for z in _classes(pair, args)]
    lines = [f"{'class':<6} {'primal':>10} {'dual':>10}  cocycle norm"]
    for k, c in enumerate(certs):
        norm = "-" if c.optimal_cocycle is None else q_str(1 / c.primal_value)
        lines.append(f"h{k:<5} {q_str(c.primal_value):>10} {q_str(c.dual_value):>10}  {norm}")
    _emit([c.to_json() for c in certs], args.format != "table", "\n".join(lines))
    return 0


def _check_degree(pair, n):
    if not 0 <= n <= pair.top_degree:
        raise InputError(f"degree {n} is outside 0..{pair.top_degree}")


def cmd_cone(args):
    pair = _pair(args.pair)
    _check_degree(pair, args.degree)
    report = norm_comparison_report(pair, args.degree, _omegas(args.omega), build_cone(pair))
    _emit(report.to_json(), args.format == "json", report.to_table())
    return 0 if report.ok else 2


def _model(space):
    return torus(2, 1) if space == "torus" else cylinder(1, 1)


def cmd_straighten(args):
    if args.chain:
        data = _load_json(args.chain)
        chain = straight_chain_from_json(data)
        model = next(iter(chain.terms)).model if chain.terms else _model(args.space)
    elif args.grid:
        m, n = _grid(args.grid)
        pair = (families.torus_grid if args.space == "torus" else families.cylinder_grid)(m, n)
        h = homology_basis(pair, 2)[0].representative
        chain = StraightChain(2, {pair.labels[2][i]: a for i, a in h.coeffs.items()})
        model = next(iter(chain.terms)).model
    else:
        model = _model(args.space)
        rng = random.Random(args.seed)
        chain = chain_of(random_straight_simplex(model, 2, rng))
    net = build_net(model, args.resolution, args.rows, seed=args.seed)
    st = straighten_chain(net, chain)
    T = homotopy_chain(net, chain)
    ok = T.boundary() + homotopy_chain(net, chain.boundary()) == chain - st
    out = {"schema": "straighten-result/v1", "input": chain.to_json(),
           "straightened": st.to_json(), "homotopy": T.to_json(),
           "identity dT + Td = id - str": ok}
    table = "\n".join([f"model {model.kind}, net resolution {args.resolution}",
                       f"input: {len(chain)} simplices, l1 {q_str(chain.l1())}",
                       f"straightened: {len(st)} simplices, l1 {q_str(st.l1())}",
                       f"prism chain: {len(T)} simplices",
                       f"dT + Td = id - str: {'ok' if ok else 'FAIL'}"])
    _emit(out, args.format == "json", table)
    return 0 if ok else 2


def cmd_measure(args):
    if args.measure:
        mu = measure_from_json(_load_json(args.measure))
        model = next(iter(mu.terms)).model if mu.terms else _model(args.space)
    else:
        model = _model(args.space)
        mu = random_measure(model, args.degree, random.Random(args.seed))
    net = build_net(model, args.resolution, args.rows, seed=args.seed)
    t = theta(net, mu)
    checks = {
        "theta d = d theta": mu.degree == 0 or theta(net, boundary_measure(mu)) == t.boundary(),
        "|theta(mu)|_1 <= |mu|": t.l1() <= total_variation(mu),
        "relative: |theta(mu)| <= |mu| mod W": t.l1_relative() <= relative_mea_norm(mu),
    }
    out = {"schema": "theta-result/v1", "measure": mu.to_json(), "theta": t.to_json(),
           "total_variation": q_str(total_variation(mu)),
           "relative_norm": q_str(relative_mea_norm(mu)), "theta_l1": q_str(t.l1()),
           "checks": checks}
    table = "\n".join([f"atoms {len(mu)}, total variation {q_str(total_variation(mu))}, "
                       f"relative {q_str(relative_mea_norm(mu))}",
                       f"theta: {len(t)} net simplices, l1 {q_str(t.l1())}"]
                      + [f"{k}: {'ok' if v else 'FAIL'}" for k, v in checks.items()])
    _emit(out, args.format == "json", table)
    return 0 if all(checks.values()) else 2


def cmd_group(args):
    G = group_from_json(_load_json(args.group)) if args.group.endswith(".json") else builtin(args.group)
    A = [int(a) for a in args.subgroup.split(",")] if args.subgroup else [G.e]
    A = G.check_subgroup(A)
    rng = random.Random(args.seed)
    rows, ok = [], True
    for n in range(args.degree + 1):
        rc = relative_complex(G, A, n)
        hg, ha = bounded_cohomology(G, None, n).dim, bounded_cohomology(G, A, n).dim
        model = model_from_spec(G, {"subgroup": list(A), "fibers": ["f0", "f1"],
                                    "sub_fibers": ["f0"]}, seed=rng.randrange(10 ** 9))
        f = random_cochain(list(G.elements()), n, rng)
        ab = alpha_hat(model, beta_chi(model, f)) == f
        ok = ok and rc.proper and ab
        rows.append({"degree": n, "dim_invariant_G": rc.dim_g, "dim_invariant_A": rc.dim_a,
                     "restriction_rank": rc.rank, "proper": rc.proper, "dim_H_b(G)": hg,
                     "dim_H_b(G,A)": ha, "alpha beta = id": ab})
    out = {"group": G.to_json(), "subgroup": list(A), "rows": rows}
    head = f"{G.name}, A = {list(A)}"
    table = "\n".join([head] + [
        f"n={r['degree']}: H_b(G) {r['dim_H_b(G)']}, H_b(G,A) {r['dim_H_b(G,A)']}, "
        f"restriction rank {r['restriction_rank']}/{r['dim_invariant_A']}, "
        f"alpha beta = id: {'ok' if r['alpha beta = id'] else 'FAIL'}" for r in rows])
    _emit(out, args.format == "json", table)
    return 0 if ok else 2


def cmd_suite(args):
    only = None
    if args.criterion:
        only = {int(c) for c in args.criterion.split(",")}
    results = run_all(args.seed, only)
    if args.format == "json":
        print(json.dumps([{"criterion": r.number, "title": r.title, "passed": r.passed,
                           "details": r.details} for r in results], indent=2))
    else:
        for r in results:
            print(r.line().rsplit(" (", 1)[0] if not args.timings else r.line())
            if args.verbose:
                for d in r.details:
                    print("    " + d)
    return 0 if all(r.passed for r in results) else 2


def cmd_generate(args):
    pair = families.by_name(args.name)
    print(json.dumps(pair.to_json(), indent=2))
    return 0


def build_parser():
    p = _Parser(prog="relnorms", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", dest="format", action="store_const", const="json")
        g.add_argument("--table", dest="format", action="store_const", const="table")
        sp.set_defaults(format=default)

    s = sub.add_parser("seminorm", help="L1 seminorm with a dual L-infinity certificate")
    s.add_argument("--pair", required=True, help="pair-complex/v1 file or built-in name")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--chain", help="JSON {simplex id: coefficient}; default: a homology basis")
    fmt(s, "json")
    s.set_defaults(func=cmd_seminorm)

    s = sub.add_parser("cone", help="relative versus mapping-cone seminorms")
    s.add_argument("--pair", required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--omega", default="0,1,10", help="comma separated rationals")
    fmt(s, "table")
    s.set_defaults(func=cmd_cone)

    for name, fn, hlp in (("straighten", cmd_straighten, "straighten a chain and check the homotopy"),
                          ("measure", cmd_measure, "discretize a measure chain")):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("--space", choices=("torus", "cylinder"), default="torus")
        s.add_argument("--resolution", type=int, default=1, help="net points per period")
        s.add_argument("--rows", type=int, default=2, help="cylinder net levels above 0")
        s.add_argument("--seed", type=int, default=DEFAULT_SEED)
        if name == "straighten":
            s.add_argument("--chain", help="straight-chain/v1 file")
            s.add_argument("--grid", help="MxN: use the fundamental cycle of a grid")
        else:
            s.add_argument("--measure", help="measure-chain/v1 file")
            s.add_argument("--degree", type=int, default=2)
        fmt(s, "table")
        s.set_defaults(func=fn)

    s = sub.add_parser("group", help="bounded cohomology of a finite group pair")
    s.add_argument("--group", required=True, help="z2, z3, z2xz2, s3 or a group/v1 file")
    s.add_argument("--subgroup", help="comma separated element indices (default: trivial)")
    s.add_argument("--degree", type=int, default=2)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    fmt(s, "table")
    s.set_defaults(func=cmd_group)

    s = sub.add_parser("suite", help="run the acceptance checks")
    s.add_argument("--all", action="store_true", help="every criterion (the default)")
    s.add_argument("--criterion", help="comma separated criterion numbers")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--verbose", "-v", action="store_true")
    s.add_argument("--timings", action="store_true", help="print elapsed times (not reproducible)")
    fmt(s, "table")
    s.set_defaults(func=cmd_suite)

    s = sub.add_parser("generate", help="print a built-in pair as pair-complex/v1")
    s.add_argument("name", help="circleK, interval, simplex2, torus_gridMxN, cylinder_gridMxN")
    s.set_defaults(func=cmd_generate)
    return p


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ConsistencyError as exc:
        print(f"relnorms: check failed: {exc}", file=sys.stderr)
        return 2
    except (InputError, KeyError, TypeError, ValueError) as exc:
        print(f"relnorms: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
