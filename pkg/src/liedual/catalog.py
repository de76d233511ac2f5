"""Built-in small Lie algebras used as the verification corpus."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from liedual.lie import LieAlgebra, LieIdeal, validate


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    ideals: dict = field(default_factory=dict)
    note: str = ""
    # (values, provenance) of the expected unimodular character
    expected_character: tuple = None
    # frozen H^*(g, k) with provenance, where known
    expected_cohomology: tuple = None

    @property
    def unimodular(self):
        return not any(self.expected_character[0])


def _r3(mu):
    mu = Fraction(mu)
    return LieAlgebra.from_brackets("xyz", {("x", "y"): {"y": 1}, ("x", "z"): {"z": mu}},
                                    name="r3(%s)" % mu)


def _ideals(g):
    out = {"commutator": LieIdeal.commutator(g), "center": LieIdeal.center(g),
           "whole": LieIdeal.whole(g)}
    return out


def _entry(g, note, character, cohomology=None):
    validate(g)
    return CatalogEntry(g.name, g, _ideals(g), note, character, cohomology)


@lru_cache(maxsize=None)
def _build():
    entries = []
    for n in range(1, 5):
        g = LieAlgebra.abelian(n)
        entries.append(_entry(g, "abelian, zero brackets", ((0,) * n, "TRIVIAL"),
                              (tuple(comb(n, q) for q in range(n + 1)), "TRIVIAL")))
    r2 = LieAlgebra.from_brackets("xy", {("x", "y"): {"y": 1}}, name="r2")
    entries.append(_entry(r2, "nonabelian 2-dimensional algebra, [x,y] = y", ((-1, 0), "PAPER"),
                          ((1, 1, 0), "DERIVED")))
    heis = LieAlgebra.from_brackets("xyz", {("x", "y"): {"z": 1}}, name="heis3")
    entries.append(_entry(heis, "Heisenberg, [x,y] = z", ((0, 0, 0), "DERIVED"),
                          ((1, 2, 2, 1), "DERIVED")))
    sl2 = LieAlgebra.from_brackets(
        "efh", {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}}, name="sl2")
    entries.append(_entry(sl2, "simple, [h,e] = 2e, [h,f] = -2f, [e,f] = h", ((0, 0, 0), "TRIVIAL"),
                          ((1, 0, 0, 1), "DERIVED")))
    for mu in (1, -1, 2):
        g = _r3(mu)
        entries.append(_entry(g, "[x,y] = y, [x,z] = %d z" % mu, ((-(1 + mu), 0, 0), "DERIVED")))
    rr = LieAlgebra.from_brackets(
        ["x1", "y1", "x2", "y2"], {("x1", "y1"): {"y1": 1}, ("x2", "y2"): {"y2": 1}}, name="r2+r2")
    entries.append(_entry(rr, "direct sum of two copies of r2", ((-1, 0, -1, 0), "DERIVED")))
    return tuple(entries)


def catalog():
    return list(_build())


def lookup(name):
    for e in _build():
        if e.name == name:
            return e
    raise KeyError("no catalog entry named %r" % name)


def names():
    return [e.name for e in _build()]
