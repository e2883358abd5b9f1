"""Flat locally convex model pairs: tori and cylinders with their straight simplices.

The universal cover of every model is (a slab of) ``R^d`` and deck
transformations are lattice translations, so a straight simplex is the affine
simplex on its vertices and is determined by a tuple of vertex lifts.  We
store that tuple in canonical form: the whole tuple is translated so that the
first vertex lies in the fundamental domain ``[0, period)`` along every
periodic direction.  Two simplices are equal iff their canonical tuples are.

A :class:`Net` is a deck-invariant partition of the cover into half-open
boxes, one marked point per box.  Straightening replaces each vertex by the
marked point of its box; :func:`prism_homotopy` is the chain homotopy between
straightening and the identity, triangulating the prism between a simplex and
its straightening.
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, ValidationError
from .exact import q_str, to_q

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ModelSpace:
    """Torus ``R^d / (scale Z)^d`` or cylinder ``R x [0, height] / (circumference Z)``."""

    kind: str
    periods: tuple  # per coordinate: period, or None if not periodic
    height: Fraction | None = None

    @property
    def dim(self):
        return len(self.periods)

    def contains(self, point):
        if len(point) != self.dim:
            return False
        if self.kind == "cylinder":
            return 0 <= point[1] <= self.height
        return True

    def component(self, point):
        """Which lifted boundary component holds ``point`` (``None`` if none).

        Cylinder: 0 for the line ``y = 0``, 1 for ``y = height``.  A torus has
        an empty subspace.
        """
        if self.kind == "cylinder":
            if point[1] == 0:
                return 0
            if point[1] == self.height:
                return 1
        return None

    def translate(self, point, k):
        """Apply the deck translation with integer coordinates ``k``."""
        return tuple(x if p is None else x + kk * p for x, p, kk in zip(point, self.periods, k))

    def domain_shift(self, point):
        """The deck translation moving ``point`` into the fundamental domain."""
        return tuple(0 if p is None else -math.floor(x / p) for x, p in zip(point, self.periods))

    def random_translation(self, rng, radius=3):
        return tuple(0 if p is None else rng.randint(-radius, radius) for p in self.periods)

    def to_json(self):
        if self.kind == "torus":
            return {"kind": "torus", "dim": self.dim, "scale": q_str(self.periods[0])}
        return {"kind": "cylinder", "circumference": q_str(self.periods[0]),
                "height": q_str(self.height)}


def torus(dim=2, scale=1):
    return make_model({"kind": "torus", "dim": dim, "scale": scale})


def cylinder(circumference=1, height=1):
    return make_model({"kind": "cylinder", "circumference": circumference, "height": height})


def make_model(spec):
    kind = spec.get("kind")
    if kind == "torus":
        dim = spec.get("dim", 2)
        scale = to_q(spec.get("scale", 1))
        if not isinstance(dim, int) or dim < 1:
            raise InputError("torus dimension must be a positive integer")
        if scale <= 0:
            raise InputError("torus scale must be positive")
        return ModelSpace("torus", (scale,) * dim)
    if kind == "cylinder":
        c = to_q(spec.get("circumference", 1))
        h = to_q(spec.get("height", 1))
        if c <= 0 or h <= 0:
            raise InputError("cylinder circumference and height must be positive")
        return ModelSpace("cylinder", (c, None), h)
    raise InputError(f"unknown model kind {kind!r}")


def _point(model, p):
    pt = tuple(to_q(x) for x in p)
    if not model.contains(pt):
        raise InputError(f"point {tuple(q_str(x) for x in pt)} is not in the cover")
    return pt


def point_str(p):
    return "(" + ",".join(q_str(x) for x in p) + ")"


@dataclass(frozen=True)
class StraightSimplex:
    """Affine simplex on canonical vertex lifts (see module docstring)."""

    model: ModelSpace
    vertices: tuple

    @property
    def degree(self):
        return len(self.vertices) - 1

    def sub_component(self):
        """Component of the lifted subspace holding every vertex, else ``None``."""
        comps = {self.model.component(v) for v in self.vertices}
        if len(comps) == 1:
            return comps.pop()
        return None

    def in_sub(self):
        return self.sub_component() is not None

    def translated(self, k):
        """Vertex lifts of ``gamma . s`` for the deck translation ``k`` (not canonicalized)."""
        return tuple(self.model.translate(v, k) for v in self.vertices)

    def sort_key(self):
        return self.vertices

    def __lt__(self, other):
        return self.vertices < other.vertices

    def __str__(self):
        return "[" + ",".join(point_str(v) for v in self.vertices) + "]"

    def __repr__(self):
        return f"StraightSimplex{self}"

    def to_json(self):
        return [[q_str(x) for x in v] for v in self.vertices]


def _canonical(model, lifts):
    k = model.domain_shift(lifts[0])
    return StraightSimplex(model, tuple(model.translate(v, k) for v in lifts))


def straight_simplex(model, lifts):
    """Straight simplex on the given compatible lifts, in canonical form."""
    lifts = [_point(model, p) for p in lifts]
    if not lifts:
        raise InputError("a simplex needs at least one vertex")
    return _canonical(model, lifts)


def face(s, i):
    """The ``i``-th face: drop vertex ``i`` and re-canonicalize."""
    if not 0 <= i <= s.degree or s.degree == 0:
        raise InputError(f"face index {i} out of range for a {s.degree}-simplex")
    return _canonical(s.model, s.vertices[:i] + s.vertices[i + 1:])


class FormalSum:
    """Finitely supported rational combination of straight simplices."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        out = {}
        for s, c in (terms.items() if isinstance(terms, dict) else (terms or ())):
            if s.degree != degree:
                raise InputError(f"{s.degree}-simplex in a degree {degree} combination")
            out[s] = out.get(s, 0) + to_q(c)
        self.terms = {s: c for s, c in out.items() if c}

    def _same(self, other):
        if type(other) is not type(self) or other.degree != self.degree:
            raise InputError("incompatible combinations")

    def __add__(self, other):
        self._same(other)
        return type(self)(self.degree, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return type(self)(self.degree, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        k = to_q(k)
        return type(self)(self.degree, {s: k * c for s, c in self.terms.items()})

    def __eq__(self, other):
        return type(other) is type(self) and (self.degree, self.terms) == (other.degree, other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def l1(self):
        return sum((abs(c) for c in self.terms.values()), Fraction(0))

    def l1_relative(self):
        """L1 norm modulo chains supported in the lifted subspace."""
        return sum((abs(c) for s, c in self.terms.items() if not s.in_sub()), Fraction(0))

    def off_sub(self):
        """The part supported outside the subspace."""
        return type(self)(self.degree, {s: c for s, c in self.terms.items() if not s.in_sub()})

    def __repr__(self):
        body = " + ".join(f"{q_str(c)}*{s}" for s, c in self.items())
        return f"{type(self).__name__}({self.degree}: {body or '0'})"


class StraightChain(FormalSum):
    """Chain of straight simplices (free module on canonical simplices)."""

    __slots__ = ()

    def boundary(self):
        if self.degree == 0:
            return StraightChain(-1)
        terms = []
        for s, c in self.terms.items():
            for i in range(s.degree + 1):
                terms.append((face(s, i), c if i % 2 == 0 else -c))
        return StraightChain(self.degree - 1, terms)

    def to_json(self):
        model = next(iter(self.terms)).model.to_json() if self.terms else None
        return {"schema": "straight-chain/v1", "model": model, "degree": self.degree,
                "terms": [{"coeff": q_str(c), "simplex": s.to_json()} for s, c in self.items()]}


def chain_of(simplex, coeff=1):
    return StraightChain(simplex.degree, {simplex: coeff})


def straight_chain_from_json(data, model=None):
    if data.get("schema", "straight-chain/v1") != "straight-chain/v1":
        raise InputError("expected a straight-chain/v1 document")
    if model is None:
        if data.get("model") is None:
            raise InputError("straight chain has no model")
        model = make_model(data["model"])
    degree = data.get("degree")
    terms = [(straight_simplex(model, t["simplex"]), to_q(t["coeff"])) for t in data.get("terms", [])]
    if degree is None:
        degree = terms[0][0].degree if terms else 0
    return StraightChain(degree, terms)


class Net:
    """Lattice net on the cover of a flat model.

    Periodic directions are cut into boxes of width ``period / resolution``
    centred on the marked points, half-open on the right.  The cylinder's
    bounded direction has marked levels ``j * height / rows`` (``j = 0..rows``)
    with cells ``[(j - 1/2) h/rows, (j + 1/2) h/rows)`` clipped to ``[0, h]``,
    the top cell closed.  Boundary points therefore fall in boundary cells.
    """

    def __init__(self, model, resolution=1, rows=2):
        if resolution < 1 or rows < 1:
            raise InputError("net resolution and rows must be positive")
        self.model = model
        self.resolution = resolution
        self.rows = rows
        self.spacing = tuple(None if p is None else p / resolution for p in model.periods)
        self.level = model.height / rows if model.kind == "cylinder" else None

    def _coord(self, k, x):
        h = self.spacing[k]
        if h is not None:
            return h * math.floor(x / h + HALF)
        j = min(math.floor(x / self.level + HALF), self.rows)
        return j * self.level

    def assign(self, point):
        """The marked point whose cell contains ``point``."""
        return tuple(self._coord(k, x) for k, x in enumerate(point))

    def is_net_point(self, point):
        return self.model.contains(point) and self.assign(point) == tuple(point)

    def cell(self, net_point):
        """Per coordinate ``(lo, hi, hi_closed)`` bounds of the cell of ``net_point``."""
        bounds = []
        for k, c in enumerate(net_point):
            h = self.spacing[k]
            if h is not None:
                bounds.append((c - h / 2, c + h / 2, False))
            else:
                lo = max(c - self.level / 2, Fraction(0))
                top = c == self.model.height
                bounds.append((lo, self.model.height if top else c + self.level / 2, top))
        return bounds

    def contains(self, net_point, point):
        """Cell membership tested directly against the box bounds."""
        for (lo, hi, closed), x in zip(self.cell(net_point), point):
            if x < lo or x > hi or (x == hi and not closed):
                return False
        return True

    def candidates(self, point):
        """Marked points whose cells could contain ``point`` (a 3^d block)."""
        base = self.assign(point)
        out = [()]
        for k, c in enumerate(base):
            step = self.spacing[k] if self.spacing[k] is not None else self.level
            opts = [c - step, c, c + step]
            if self.spacing[k] is None:
                opts = [y for y in opts if 0 <= y <= self.model.height]
            out = [o + (y,) for o in out for y in opts]
        return out

    def verify(self, rng, samples=200):
        """Check the three net conditions on sampled points; raise on failure."""
        pts = [random_point(self.model, rng) for _ in range(samples)]
        pts += [self._cell_corner(rng) for _ in range(samples // 4)]
        for p in pts:
            owners = [x for x in self.candidates(p) if self.contains(x, p)]
            if owners != [self.assign(p)]:
                raise ValidationError(f"cells do not partition the cover at {point_str(p)}")
            k = self.model.random_translation(rng)
            q, x = self.model.translate(p, k), self.assign(p)
            if self.assign(q) != self.model.translate(x, k):
                raise ValidationError("net is not deck-invariant")
            if self.contains(x, p) != self.contains(self.model.translate(x, k), q):
                raise ValidationError("cells are not deck-invariant")
            comp = self.model.component(p)
            if comp is not None and self.model.component(x) != comp:
                raise ValidationError("a boundary point lies in a cell marked off the boundary")
        return True

    def _cell_corner(self, rng):
        """A point on a cell boundary, where tie-breaking matters."""
        x = self.assign(random_point(self.model, rng))
        out = []
        for (lo, hi, _), c in zip(self.cell(x), x):
            out.append(rng.choice([lo, hi, c]))
        p = tuple(out)
        return p if self.model.contains(p) else x


def build_net(model, resolution=1, rows=2, seed=0):
    net = Net(model, resolution, rows)
    net.verify(random.Random(seed))
    return net


def straighten_lifts(net, lifts):
    """Lift-level straightening: each vertex goes to the marked point of its cell."""
    return tuple(net.assign(v) for v in lifts)


def straighten(net, s):
    return _canonical(s.model, straighten_lifts(net, s.vertices))


def straighten_chain(net, c):
    return StraightChain(c.degree, [(straighten(net, s), a) for s, a in c.terms.items()])


def prism_homotopy(net, s):
    """Chain homotopy ``T`` with ``d T + T d = id - str``.

    ``T(s) = sum_i (-1)^(i+1) [v_0..v_i, w_i..w_n]`` where ``v`` are the vertex
    lifts of ``s`` and ``w`` those of its straightening.  Degenerate prism
    pieces are kept; the identity fails without them.
    """
    v = s.vertices
    w = straighten_lifts(net, v)
    terms = []
    for i in range(len(v)):
        piece = _canonical(s.model, v[:i + 1] + w[i:])
        terms.append((piece, -1 if i % 2 == 0 else 1))
    return StraightChain(s.degree + 1, terms)


def homotopy_chain(net, c):
    out = StraightChain(c.degree + 1)
    for s, a in c.terms.items():
        out = out + a * prism_homotopy(net, s)
    return out


def random_rational(rng, lo, hi, den=12):
    """A random rational in ``[lo, hi]`` with denominator dividing ``den``."""
    lo_n, hi_n = math.ceil(lo * den), math.floor(hi * den)
    return Fraction(rng.randint(lo_n, hi_n), den)


def random_point(model, rng, den=12):
    out = []
    for p in model.periods:
        if p is not None:
            out.append(random_rational(rng, 0, p, den))
        else:
            y = random_rational(rng, 0, model.height, den)
            r = rng.random()
            out.append(Fraction(0) if r < 0.15 else model.height if r < 0.3 else y)
    return tuple(out)


def random_straight_simplex(model, degree, rng, spread=1, den=12, on_sub=None):
    """Random straight simplex with vertices within ``spread`` of the first one.

    ``on_sub`` pins every vertex to the given boundary component (cylinder).
    """
    v0 = random_point(model, rng, den)
    if on_sub is not None:
        v0 = v0[:1] + (Fraction(0) if on_sub == 0 else model.height,)
    verts = [v0]
    for _ in range(degree):
        v = []
        for k, p in enumerate(model.periods):
            if p is not None:
                v.append(v0[k] + random_rational(rng, -spread, spread, den))
            elif on_sub is not None:
                v.append(v0[k])
            else:
                v.append(random_point(model, rng, den)[k])
        verts.append(tuple(v))
    if rng.random() < 0.1 and degree:  # occasionally degenerate
        verts[-1] = verts[0]
    return straight_simplex(model, verts)
