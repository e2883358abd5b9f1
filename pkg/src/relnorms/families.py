"""Built-in pairs: circles, the interval, a 2-simplex, and flat grid triangulations.

Geometric families are triangulations by straight simplices of a flat model,
so their basis labels are :class:`StraightSimplex` values and chains on them
can be straightened.  Within each triangle the vertices are ordered by a
global vertex id; ordering every simplex the same way makes shared faces
coincide as canonical simplices.
"""

from fractions import Fraction

from .complexes import build_pair_complex
from .errors import InputError
from .geometry import cylinder, face, straight_simplex, torus


def pair_from_simplices(top, in_sub=lambda s: s.in_sub()):
    """Pair complex generated by ``top`` and all their faces."""
    by_degree = {}
    todo = list(top)
    while todo:
        s = todo.pop()
        if s in by_degree.setdefault(s.degree, set()):
            continue
        by_degree[s.degree].add(s)
        if s.degree:
            todo.extend(face(s, i) for i in range(s.degree + 1))
    degrees = []
    for n in range(max(by_degree) + 1):
        simplices = sorted(by_degree.get(n, ()))
        entry = {"simplices": simplices}
        if n:
            entry["faces"] = {s: [[(-1) ** i, face(s, i)] for i in range(n + 1)] for s in simplices}
        degrees.append(entry)
    sub = [s for n in by_degree for s in by_degree[n] if in_sub(s)]
    return build_pair_complex({"degrees": degrees, "sub": sub})


def _grid_triangles(model, m, n, wrap_y):
    def vid(i, j):
        return (i % m, j % n if wrap_y else j)

    tris = []
    for i in range(m):
        for j in range(n):
            for corners in (((i, j), (i + 1, j), (i + 1, j + 1)), ((i, j), (i, j + 1), (i + 1, j + 1))):
                corners = sorted(corners, key=lambda c: vid(*c))
                lifts = [(Fraction(a, m), Fraction(b, n)) for a, b in corners]
                tris.append(straight_simplex(model, lifts))
    return tris


def torus_grid(m, n):
    """``m x n`` grid on the unit square torus, each square cut into two triangles."""
    if m < 2 or n < 2:
        raise InputError("torus grid needs m, n >= 2")
    return pair_from_simplices(_grid_triangles(torus(2, 1), m, n, True))


def cylinder_grid(m, n):
    """``m x n`` grid on ``R x [0,1] / Z`` relative to both boundary circles."""
    if m < 2 or n < 1:
        raise InputError("cylinder grid needs m >= 2, n >= 1")
    return pair_from_simplices(_grid_triangles(cylinder(1, 1), m, n, False))


def circle(k):
    """The circle ``R/Z`` cut into ``k`` straight edges."""
    if k < 2:
        raise InputError("circle needs at least 2 edges")
    model = torus(1, 1)
    edges = [straight_simplex(model, [(Fraction(j, k),), (Fraction(j + 1, k),)]) for j in range(k)]
    return pair_from_simplices(edges)


def interval():
    """``(I, dI)``: one edge relative to its two endpoints."""
    return build_pair_complex({
        "degrees": [{"simplices": ["v0", "v1"]},
                    {"simplices": ["e"], "faces": {"e": [[1, "v1"], [-1, "v0"]]}}],
        "sub": ["v0", "v1"]})


def simplex2():
    """A full 2-simplex with no subspace (acyclic)."""
    return build_pair_complex({
        "degrees": [{"simplices": ["v0", "v1", "v2"]},
                    {"simplices": ["e01", "e02", "e12"],
                     "faces": {"e01": [[1, "v1"], [-1, "v0"]], "e02": [[1, "v2"], [-1, "v0"]],
                               "e12": [[1, "v2"], [-1, "v1"]]}},
                    {"simplices": ["t"], "faces": {"t": [[1, "e12"], [-1, "e02"], [1, "e01"]]}}],
        "sub": []})


def by_name(name):
    """Look up a family from a short name such as ``circle5`` or ``torus_grid4x4``."""
    if name == "interval":
        return interval()
    if name == "simplex2":
        return simplex2()
    if name.startswith("circle") and name[6:].isdigit():
        return circle(int(name[6:]))
    for prefix, fn in (("torus_grid", torus_grid), ("cylinder_grid", cylinder_grid)):
        if name.startswith(prefix):
            m, _, n = name[len(prefix):].partition("x")
            if m.isdigit() and n.isdigit():
                return fn(int(m), int(n))
    raise InputError(f"unknown built-in pair {name!r}")


def suite_pairs():
    """The pairs exercised by the acceptance suite, by name."""
    names = [f"circle{k}" for k in range(3, 7)] + ["interval", "cylinder_grid6x2", "torus_grid4x4"]
    return {name: by_name(name) for name in names}
