import random
from fractions import Fraction

import pytest

from relnorms.complexes import (Chain, Cochain, boundary, build_pair_complex, coboundary,
                                homology_basis, homology_dim, is_relative_boundary,
                                l1_norm_relative, linf_norm)
from relnorms.errors import InputError, ValidationError
from relnorms.families import circle, cylinder_grid, interval, simplex2, torus_grid


def circle3_desc():
    return {"degrees": [{"simplices": ["v0", "v1", "v2"]},
                        {"simplices": ["e1", "e2", "e3"],
                         "faces": {"e1": [[1, "v1"], [-1, "v0"]], "e2": [[1, "v2"], [-1, "v1"]],
                                   "e3": [[1, "v0"], [-1, "v2"]]}}],
            "sub": []}


def test_builds_examples():
    I = interval()
    assert I.size(0) == 2 and I.size(1) == 1 and I.sub_indices(0) == [0, 1]
    C = build_pair_complex(circle3_desc())
    assert C.top_degree == 1 and C.sub_indices(1) == []


def test_rejects_unknown_face():
    d = circle3_desc()
    d["degrees"][1]["faces"]["e1"] = [[1, "v9"], [-1, "v0"]]
    with pytest.raises(ValidationError):
        build_pair_complex(d)


def test_rejects_non_square_zero():
    d = {"degrees": [{"simplices": ["a", "b", "c"]},
                     {"simplices": ["ab", "bc", "ca"],
                      "faces": {"ab": [[1, "b"], [-1, "a"]], "bc": [[1, "c"], [-1, "b"]],
                                "ca": [[1, "a"], [-1, "c"]]}},
                     {"simplices": ["t"], "faces": {"t": [[1, "ab"], [1, "bc"]]}}]}
    with pytest.raises(ValidationError, match="d_1 d_2"):
        build_pair_complex(d)


def test_rejects_open_subcomplex():
    d = circle3_desc()
    d["sub"] = ["e1", "v0"]
    with pytest.raises(ValidationError, match="not in W"):
        build_pair_complex(d)


def test_rejects_bad_schema_and_duplicates():
    with pytest.raises(ValidationError):
        build_pair_complex({"schema": "other", "degrees": []})
    d = circle3_desc()
    d["degrees"][1]["simplices"].append("v0")
    with pytest.raises(ValidationError, match="twice"):
        build_pair_complex(d)


def test_boundary_examples():
    C = build_pair_complex(circle3_desc())
    e1 = C.chain(1, {"e1": 1})
    assert boundary(C, e1) == C.chain(0, {"v1": 1, "v0": -1})
    assert not boundary(C, C.chain(1, {"e1": 1, "e2": 1, "e3": 1}))
    assert boundary(C, C.chain(0, {"v0": 1})) == Chain(-1)
    with pytest.raises(InputError):
        C.chain(1, {"nope": 1})


def test_dd_zero_on_random_chains():
    rng = random.Random(5)
    for pair in (torus_grid(3, 3), cylinder_grid(4, 2), simplex2()):
        for _ in range(20):
            c = Chain(2, {i: rng.randint(-3, 3) for i in range(pair.size(2))})
            assert not boundary(pair, boundary(pair, c))


def test_relative_l1_norm():
    C = build_pair_complex(circle3_desc())
    assert l1_norm_relative(C, C.chain(1, {"e1": 2, "e2": -3})) == 5
    I = interval()
    assert l1_norm_relative(I, I.chain(0, {"v0": 4, "v1": -1})) == 0
    assert l1_norm_relative(I, I.chain(0, {"v0": 4})) == 0
    d = circle3_desc()
    d["sub"] = ["v0"]
    P = build_pair_complex(d)
    assert l1_norm_relative(P, P.chain(0, {"v1": 1, "v0": 7})) == 1


def test_relative_norm_bounded_by_plain_norm():
    rng = random.Random(2)
    P = cylinder_grid(4, 2)
    for n in range(3):
        for _ in range(20):
            c = Chain(n, {i: rng.randint(-3, 3) for i in range(P.size(n))})
            rel = l1_norm_relative(P, c)
            assert rel <= c.l1()
            assert (rel == c.l1()) == (not any(P.is_sub(n, i) for i in c.coeffs))


def test_linf_norm():
    C = build_pair_complex(circle3_desc())
    assert linf_norm(C, Cochain(1)) == 0
    assert linf_norm(C, Cochain(1, {0: Fraction(1, 3), 1: Fraction(1, 3), 2: Fraction(1, 3)})) == Fraction(1, 3)
    I = interval()
    assert linf_norm(I, I.cochain(1, {0: 2}, relative=True)) == 2
    with pytest.raises(InputError):
        I.cochain(0, {0: 1}, relative=True)


def test_homology_examples():
    C = build_pair_complex(circle3_desc())
    (h,) = homology_basis(C, 1)
    coeffs = set(h.representative.coeffs.values())
    assert len(h.representative.coeffs) == 3 and len(coeffs) == 1
    (h,) = homology_basis(interval(), 1)
    assert h.representative == Chain(1, {0: 1}) or h.representative == Chain(1, {0: -1})
    assert homology_basis(simplex2(), 1) == []
    assert [homology_dim(torus_grid(3, 3), n) for n in range(3)] == [1, 2, 1]
    assert [homology_dim(cylinder_grid(3, 1), n) for n in range(3)] == [0, 1, 1]
    assert [homology_dim(circle(5), n) for n in range(2)] == [1, 1]


def test_homology_class_requires_cycle():
    C = build_pair_complex(circle3_desc())
    with pytest.raises(InputError):
        C.homology_class(C.chain(1, {"e1": 1}))
    assert is_relative_boundary(C, C.chain(1, {}))


def test_kronecker_vanishes_on_boundaries():
    rng = random.Random(9)
    P = cylinder_grid(4, 2)
    from relnorms.seminorm import dual_linf_value, kronecker
    (h,) = homology_basis(P, 2)
    _, phi = dual_linf_value(P, h)
    (h1,) = homology_basis(P, 1)
    _, phi1 = dual_linf_value(P, h1)
    for _ in range(20):
        b = Chain(2, {i: rng.randint(-3, 3) for i in range(P.size(2))})
        assert kronecker(P, phi1, boundary(P, b)) == kronecker(P, coboundary(P, phi1), b) == 0
    assert not coboundary(P, phi).values


def test_json_roundtrip():
    P = interval()
    again = build_pair_complex(P.to_json())
    assert again.labels == P.labels and again.sub == P.sub
    T = torus_grid(2, 2)
    back = build_pair_complex(T.to_json())
    assert [homology_dim(back, n) for n in range(3)] == [1, 2, 1]
