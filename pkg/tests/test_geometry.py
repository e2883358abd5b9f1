import random
from fractions import Fraction as Q

import pytest

from relnorms.errors import InputError
from relnorms.geometry import (Net, StraightChain, build_net, chain_of, cylinder, face, homotopy_chain,
                               make_model, prism_homotopy, random_straight_simplex, straight_chain_from_json,
                               straight_simplex, straighten, straighten_chain, straighten_lifts, torus)


def test_make_model():
    T = make_model({"kind": "torus", "dim": 2, "scale": 1})
    assert T.periods == (1, 1) and T.component((Q(0), Q(0))) is None
    C = make_model({"kind": "cylinder", "circumference": 1, "height": 1})
    assert C.component((Q(1, 3), Q(0))) == 0 and C.component((Q(1, 3), Q(1))) == 1
    for bad in ({"kind": "cylinder", "circumference": 0, "height": 1},
                {"kind": "torus", "dim": 0}, {"kind": "klein"}, {"kind": "torus", "scale": -1}):
        with pytest.raises(InputError):
            make_model(bad)


def test_straight_simplex_canonical_form():
    T = torus(2, 1)
    p = straight_simplex(T, [("1/3", "5/2")])
    assert p.degree == 0 and p.vertices == ((Q(1, 3), Q(1, 2)),)
    e = straight_simplex(T, [(0, 0), (1, 0)])
    assert e.vertices == ((0, 0), (1, 0))
    moved = straight_simplex(T, [(3, -2), (4, -2)])
    assert moved == e and hash(moved) == hash(e)
    assert straight_simplex(T, [(0, 0), (-1, 0)]) != e
    with pytest.raises(InputError):
        straight_simplex(cylinder(), [(0, 2)])
    with pytest.raises(InputError):
        straight_simplex(T, [])


def test_faces():
    T = torus(2, 1)
    s = straight_simplex(T, [(0, 0), (Q(3, 2), 0), (Q(1, 2), Q(1, 2))])
    assert face(s, 1) == straight_simplex(T, [(0, 0), (Q(1, 2), Q(1, 2))])
    assert face(face(s, 0), 0) == straight_simplex(T, [(Q(1, 2), Q(1, 2))])
    e = straight_simplex(T, [(Q(1, 4), 0), (Q(3, 4), 0)])
    assert face(e, 0) == straight_simplex(T, [(Q(3, 4), 0)])
    with pytest.raises(InputError):
        face(s, 3)
    rng = random.Random(1)
    for _ in range(30):
        c = chain_of(random_straight_simplex(T, 3, rng))
        assert not c.boundary().boundary()


def test_net_examples():
    T = torus(2, 1)
    net = build_net(T)
    assert net.assign((Q(1, 10), Q(2, 10))) == (0, 0)
    assert net.assign((Q(1, 2), Q(-1, 2))) == (1, 0)  # right edges of cells are open
    C = cylinder(1, 1)
    cn = build_net(C)
    assert cn.assign((Q(3, 10), Q(0))) == (0, 0)
    assert [cn.assign((Q(0), Q(y, 4)))[1] for y in range(5)] == [0, Q(1, 2), Q(1, 2), 1, 1]
    assert cn.cell((0, 1)) == [(Q(-1, 2), Q(1, 2), False), (Q(3, 4), 1, True)]
    rng = random.Random(2)
    for _ in range(50):
        x = (Q(rng.randint(-40, 40), 7), Q(rng.randint(0, 7), 7))
        k = (rng.randint(-3, 3), 0)
        assert cn.assign(C.translate(x, k)) == C.translate(cn.assign(x), k)


def test_net_rejects_bad_parameters():
    with pytest.raises(InputError):
        Net(torus(), resolution=0)


def test_straighten_examples():
    T = torus(2, 1)
    net = build_net(T)
    fixed = straight_simplex(T, [(0, 0), (1, 0), (1, 1)])
    assert straighten(net, fixed) == fixed
    e = straight_simplex(T, [(Q(1, 10), Q(2, 10)), (Q(9, 10), Q(1, 10))])
    assert straighten(net, e) == straight_simplex(T, [(0, 0), (1, 0)])
    C = cylinder(1, 1)
    cn = build_net(C)
    s = straight_simplex(C, [(Q(1, 5), 0), (Q(7, 5), 0), (Q(-2, 3), 0)])
    assert straighten(cn, s).sub_component() == 0


def test_prism_examples():
    T = torus(2, 1)
    net = build_net(T)
    v = straight_simplex(T, [(Q(1, 3), Q(1, 4))])
    w = straight_simplex(T, [(0, 0)])
    Tv = prism_homotopy(net, v)
    assert Tv == StraightChain(1, {straight_simplex(T, [(Q(1, 3), Q(1, 4)), (0, 0)]): -1})
    assert Tv.boundary() == chain_of(v) - chain_of(w)
    fixed = straight_simplex(T, [(0, 0), (1, 0)])
    P = prism_homotopy(net, fixed)
    assert all(len(set(s.vertices)) < len(s.vertices) for s in P.terms)
    assert P.boundary() + homotopy_chain(net, chain_of(fixed).boundary()) == StraightChain(1)


def test_homotopy_identity_random():
    rng = random.Random(3)
    for model in (torus(2, 1), torus(3, Q(1, 2)), cylinder(2, 3)):
        net = build_net(model, resolution=2)
        for _ in range(40):
            c = StraightChain(d := rng.randint(0, 3), [(random_straight_simplex(model, d, rng), rng.randint(-3, 3))
                                                       for _ in range(3)])
            lhs = homotopy_chain(net, c).boundary() + homotopy_chain(net, c.boundary())
            assert lhs == c - straighten_chain(net, c)
            assert straighten_chain(net, c.boundary()) == straighten_chain(net, c).boundary()


def test_deck_equivariance_at_lift_level():
    rng = random.Random(4)
    C = cylinder(1, 1)
    net = build_net(C)
    for _ in range(40):
        s = random_straight_simplex(C, 2, rng)
        k = C.random_translation(rng)
        assert straighten_lifts(net, s.translated(k)) == tuple(C.translate(v, k) for v in straighten_lifts(net, s.vertices))


def test_json_roundtrip():
    T = torus(2, 1)
    c = StraightChain(1, {straight_simplex(T, [(0, 0), (Q(1, 2), 1)]): Q(-2, 3)})
    assert straight_chain_from_json(c.to_json()) == c
