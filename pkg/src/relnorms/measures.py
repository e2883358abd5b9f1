"""Finitely supported signed measures on spaces of straight simplices.

An atom is a canonical :class:`StraightSimplex` with a rational weight; atoms
on the same simplex are combined on construction, so the total variation is
the sum of absolute weights.  The discretization ``theta`` sends a measure to
the chain of net simplices weighted by the measure of their straightening
preimages, which for atomic measures is a finite sum.
"""

from fractions import Fraction

from .errors import InputError
from .exact import q_str, to_q
from .geometry import (StraightChain, FormalSum, face, make_model, random_straight_simplex,
                       straight_simplex, straighten)


class MeasureChain(FormalSum):
    """Sum of weighted Dirac masses on straight simplices of one degree."""

    __slots__ = ()

    @property
    def atoms(self):
        return self.terms

    def to_json(self):
        model = next(iter(self.terms)).model.to_json() if self.terms else None
        return {"schema": "measure-chain/v1", "model": model, "degree": self.degree,
                "atoms": [{"weight": q_str(w), "simplex": s.to_json()} for s, w in self.items()]}


def measure_from_json(data, model=None):
    if data.get("schema", "measure-chain/v1") != "measure-chain/v1":
        raise InputError("expected a measure-chain/v1 document")
    if model is None:
        if data.get("model") is None:
            raise InputError("measure chain has no model")
        model = make_model(data["model"])
    atoms = [(straight_simplex(model, a["simplex"]), to_q(a["weight"])) for a in data.get("atoms", [])]
    degree = data.get("degree", atoms[0][0].degree if atoms else 0)
    return MeasureChain(degree, atoms)


def total_variation(mu):
    return mu.l1()


def boundary_measure(mu):
    """``sum_j (-1)^j`` times the pushforward under the ``j``-th face map."""
    if mu.degree == 0:
        return MeasureChain(-1)
    atoms = []
    for s, w in mu.terms.items():
        for j in range(s.degree + 1):
            atoms.append((face(s, j), w if j % 2 == 0 else -w))
    return MeasureChain(mu.degree - 1, atoms)


def iota(c):
    """Chain -> atomic measure ``sum a_i delta_{s_i}``."""
    return MeasureChain(c.degree, c.terms)


def relative_mea_norm(mu, model=None):
    """Norm of the image in the quotient by measures supported in ``W``.

    ``W``-supported atoms can be cancelled exactly, so the infimum is the
    total variation of the remaining atoms.  ``model`` is accepted for
    symmetry with the chain norm; each atom already carries its model.
    """
    return mu.l1_relative()


def theta(net, mu):
    """``sum_sigma mu(str^-1(sigma)) sigma`` over net simplices ``sigma``."""
    return StraightChain(mu.degree, [(straighten(net, s), w) for s, w in mu.terms.items()])


def random_measure(model, degree, rng, atoms=20, spread=1):
    """Random measure with up to ``atoms`` atoms, some on the subspace when there is one."""
    out = []
    for _ in range(rng.randint(1, atoms)):
        on_sub = None
        if model.kind == "cylinder" and rng.random() < 0.25:
            on_sub = rng.randint(0, 1)
        s = random_straight_simplex(model, degree, rng, spread, on_sub=on_sub)
        out.append((s, Fraction(rng.randint(-9, 9), rng.randint(1, 6))))
    if out and rng.random() < 0.2:  # force some cancellation
        out.append((out[0][0], -out[0][1]))
    return MeasureChain(degree, out)
