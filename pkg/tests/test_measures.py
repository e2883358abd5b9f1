import random
from fractions import Fraction as Q

from relnorms.geometry import StraightChain, build_net, chain_of, cylinder, straight_simplex, straighten_chain, torus
from relnorms.measures import (MeasureChain, boundary_measure, iota, measure_from_json, random_measure,
                               relative_mea_norm, theta, total_variation)

T = torus(2, 1)
C = cylinder(1, 1)


def edge(model, a, b):
    return straight_simplex(model, [a, b])


def test_total_variation():
    s, t = edge(T, (0, 0), (Q(1, 2), 0)), edge(T, (0, 0), (0, Q(1, 2)))
    assert total_variation(MeasureChain(1, [(s, 2), (t, -3)])) == 5
    assert total_variation(MeasureChain(1, [(s, 1), (s, -1)])) == 0
    c = StraightChain(1, {s: Q(1, 2), t: -4})
    assert total_variation(iota(c)) == c.l1()


def test_boundary_measure():
    s = edge(T, (Q(1, 5), 0), (Q(4, 5), Q(1, 5)))
    d = boundary_measure(MeasureChain(1, {s: 1}))
    assert d == MeasureChain(0, {straight_simplex(T, [(Q(4, 5), Q(1, 5))]): 1,
                                 straight_simplex(T, [(Q(1, 5), 0)]): -1})
    rng = random.Random(1)
    for _ in range(30):
        mu = random_measure(T, 2, rng)
        assert not boundary_measure(boundary_measure(mu))
        c = StraightChain(2, mu.terms)
        assert boundary_measure(iota(c)) == iota(c.boundary())


def test_iota():
    s = edge(T, (0, 0), (1, 1))
    assert iota(chain_of(s)) == MeasureChain(1, {s: 1})
    assert not iota(StraightChain(1))


def test_relative_norm():
    w = edge(C, (0, 0), (Q(1, 2), 0))
    x = edge(C, (0, 0), (0, 1))
    assert relative_mea_norm(MeasureChain(1, {w: 5})) == 0
    assert relative_mea_norm(MeasureChain(1, {x: 1})) == 1
    assert relative_mea_norm(MeasureChain(1, {x: -2, w: 7})) == 2
    across = edge(C, (0, 0), (0, 1))  # one vertex on each boundary circle: not in W
    assert relative_mea_norm(MeasureChain(1, {across: 1})) == 1


def test_theta_examples():
    net = build_net(T)
    a = edge(T, (Q(1, 10), 0), (Q(9, 10), 0))
    b = edge(T, (Q(-1, 10), Q(1, 10)), (Q(11, 10), 0))
    tau = edge(T, (0, 0), (1, 0))
    assert theta(net, MeasureChain(1, {a: Q(1, 2), b: Q(1, 2)})) == chain_of(tau)


def test_theta_properties():
    rng = random.Random(6)
    for model in (T, C):
        net = build_net(model)
        for _ in range(50):
            mu = random_measure(model, rng.randint(1, 3), rng)
            t = theta(net, mu)
            assert theta(net, boundary_measure(mu)) == t.boundary()
            assert t.l1() <= total_variation(mu)
            assert t.l1_relative() <= relative_mea_norm(mu)
            c = StraightChain(mu.degree, mu.terms)
            assert theta(net, iota(c)) == straighten_chain(net, c)


def test_json_roundtrip():
    mu = random_measure(C, 2, random.Random(2))
    assert measure_from_json(mu.to_json()) == mu
