from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liedual import catalog
from liedual.lie import (
    AntisymmetryViolation, Character, JacobiViolation, LieAlgebra, LieAlgebraError, LieIdeal,
    LieModule, NotACharacter, NotAnIdeal, RepresentationViolation, adjoint_module,
    character_module, dual_module, exterior_power, quotient_algebra, tensor_module,
    trace_character, trivial_module, unimodular_character, validate,
)
from liedual.linalg import dense_trace

from conftest import ALL_NAMES, abelian, r3


def test_validate_examples(r2):
    validate(abelian(3))
    validate(r2)
    bad = LieAlgebra(["x", "y"], {(0, 1): {0: 1, 1: 1}, (1, 0): {1: -1}})
    with pytest.raises(AntisymmetryViolation) as info:
        validate(bad)
    assert info.value.witness == (0, 1)


def test_jacobi_violation_located():
    g = LieAlgebra.from_brackets("efh", {("h", "e"): {"e": 3}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}})
    with pytest.raises(JacobiViolation) as info:
        validate(g)
    assert info.value.witness == (0, 1, 2)


def test_diagonal_bracket_must_vanish():
    g = LieAlgebra(["x"], {(0, 0): {0: 1}})
    with pytest.raises(AntisymmetryViolation):
        validate(g)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_catalog_valid(name):
    e = catalog.lookup(name)
    validate(e.algebra)
    for h in e.ideals.values():
        assert h.is_ideal()


def test_adjoint_examples(r2, sl2):
    assert all(all(v == 0 for row in a for v in row) for a in adjoint_module(abelian(3)).actions)
    ad = adjoint_module(r2)
    assert ad.actions[0] == ((0, 0), (0, 1))
    assert ad.actions[1] == ((0, 0), (-1, 0))
    e, f, h = adjoint_module(sl2).actions
    assert h == ((2, 0, 0), (0, -2, 0), (0, 0, 0))


def test_exterior_power_examples(r2, sl2):
    ad = adjoint_module(r2)
    assert exterior_power(ad, 0).dim == 1
    assert exterior_power(ad, 0).actions == trivial_module(r2).actions
    top = exterior_power(ad, 2)
    assert top.dim == 1
    assert trace_character(top) == (1, 0)
    assert exterior_power(ad, 1).actions == ad.actions
    with pytest.raises(LieAlgebraError):
        exterior_power(ad, 3)
    # valid representations
    for p in range(4):
        exterior_power(adjoint_module(sl2), p).validate()


def test_dual_module_examples(r2):
    k = trivial_module(r2)
    assert dual_module(k).actions == k.actions
    ad = adjoint_module(r2)
    assert dual_module(dual_module(ad)).actions == ad.actions
    assert dual_module(exterior_power(ad, 2)).actions[0] == ((-1,),)
    dual_module(ad).validate()


def test_tensor_module_examples(r2, sl2):
    ad = adjoint_module(sl2)
    assert tensor_module(ad, trivial_module(sl2)).actions == ad.actions
    a = character_module(Character(r2, [2, 0]))
    b = character_module(Character(r2, [-5, 0]))
    assert tensor_module(a, b).actions == (((-3,),), ((0,),))
    t = tensor_module(adjoint_module(r2), dual_module(adjoint_module(r2)))
    t.validate()
    assert t.dim == 4
    assert dense_trace(t.actions[1]) == 0
    # direct matrix computation for y: ad(y) (x) 1 + 1 (x) (-ad(y)^T)
    ady = ((0, 0), (-1, 0))
    expected = [[0] * 4 for _ in range(4)]
    for a_ in range(2):
        for b_ in range(2):
            for a2 in range(2):
                expected[a2 * 2 + b_][a_ * 2 + b_] += ady[a2][a_]
            for b2 in range(2):
                expected[a_ * 2 + b2][a_ * 2 + b_] += -ady[b_][b2]
    assert [list(r) for r in t.actions[1]] == expected


def test_tensor_mismatch(r2, sl2):
    with pytest.raises(LieAlgebraError):
        tensor_module(trivial_module(r2), trivial_module(sl2))


def test_quotient_examples(r2, heis3):
    q, proj = quotient_algebra(r2, LieIdeal.span(r2, ["y"]))
    assert q.n == 1 and q.nonzero_brackets() == {}
    assert proj == ((1, 0),)
    q, proj = quotient_algebra(r2, LieIdeal.zero(r2))
    assert q == LieAlgebra(r2.labels, r2.nonzero_brackets())
    assert proj == ((1, 0), (0, 1))
    q, _ = quotient_algebra(heis3, LieIdeal.center(heis3))
    assert q.n == 2 and q.nonzero_brackets() == {}


@pytest.mark.parametrize("name", ALL_NAMES)
def test_quotient_by_commutator_is_valid_and_abelian(name):
    g = catalog.lookup(name).algebra
    for h in catalog.lookup(name).ideals.values():
        q, proj = quotient_algebra(g, h)
        validate(q)
        assert q.n == g.n - h.m
        # projection is a Lie homomorphism
        for i in range(g.n):
            for j in range(g.n):
                pi = lambda v: tuple(sum(proj[a][k] * v[k] for k in range(g.n)) for a in range(q.n))
                lhs = pi(g.bracket(g.basis_vector(i), g.basis_vector(j)))
                rhs = q.bracket(pi(g.basis_vector(i)), pi(g.basis_vector(j)))
                assert lhs == rhs
    q, _ = quotient_algebra(g, catalog.lookup(name).ideals["commutator"])
    assert q.nonzero_brackets() == {}


def test_not_an_ideal(r2):
    with pytest.raises(NotAnIdeal):
        LieIdeal.span(r2, ["x"])


def test_ideal_coordinates(r2):
    h = LieIdeal.commutator(r2)
    assert h.basis == ((0, 1),)
    assert h.coordinates((0, 5)) == (5,)
    assert not h.contains((1, 0))


def test_trace_character_examples(r2, sl2):
    assert trace_character(trivial_module(sl2)) == (0, 0, 0)
    assert trace_character(exterior_power(adjoint_module(r2), 2)) == (1, 0)
    assert trace_character(adjoint_module(sl2)) == (0, 0, 0)


def test_unimodular_character_examples(r2):
    assert unimodular_character(abelian(4)).is_zero()
    assert unimodular_character(r2).values == (-1, 0)
    for mu in (1, -1, 2):
        assert unimodular_character(r3(mu)).values == (-(1 + mu), 0, 0)


def test_character_must_vanish_on_brackets(r2):
    with pytest.raises(NotACharacter):
        Character(r2, [0, 1])


def test_representation_violation(r2):
    with pytest.raises(RepresentationViolation):
        LieModule(r2, [((0, 0), (0, 0)), ((0, 1), (0, 0))])


# --- properties -------------------------------------------------------------

modules = st.sampled_from(["adjoint", "coadjoint", "wedge2", "trivial2"])


def make_module(g, kind):
    ad = adjoint_module(g)
    return {"adjoint": ad, "coadjoint": dual_module(ad), "wedge2": exterior_power(ad, 2),
            "trivial2": trivial_module(g, 2)}[kind]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([n for n in ALL_NAMES if catalog.lookup(n).algebra.n >= 2]), modules, modules)
def test_tensor_trace_rule(name, k1, k2):
    g = catalog.lookup(name).algebra
    m, n = make_module(g, k1), make_module(g, k2)
    t = tensor_module(m, n)
    t.validate()
    expect = tuple(n.dim * a + m.dim * b for a, b in zip(trace_character(m), trace_character(n)))
    assert trace_character(t) == expect


@pytest.mark.parametrize("name", ALL_NAMES)
def test_top_exterior_power_is_trace(name):
    g = catalog.lookup(name).algebra
    for M in (adjoint_module(g), dual_module(adjoint_module(g))):
        top = exterior_power(M, M.dim)
        assert top.dim == 1
        assert tuple(a[0][0] for a in top.actions) == trace_character(M)


@st.composite
def solvable_algebras(draw):
    # x acts on span(y, z) by an arbitrary 2x2 matrix: always a Lie algebra
    a = [[Fraction(draw(st.integers(-3, 3))) for _ in range(2)] for _ in range(2)]
    c = {(0, 1): {1: a[0][0], 2: a[1][0]}, (0, 2): {1: a[0][1], 2: a[1][1]}}
    c[1, 0] = {k: -v for k, v in c[0, 1].items()}
    c[2, 0] = {k: -v for k, v in c[0, 2].items()}
    return LieAlgebra("xyz", c, name="rand")


@settings(max_examples=60, deadline=None)
@given(solvable_algebras())
def test_unimodular_character_is_character(g):
    validate(g)
    chi = unimodular_character(g)
    Character(g, chi.values)  # re-validates vanishing on brackets
    assert chi.values[0] == -(g.constant(0, 1, 1) + g.constant(0, 2, 2))
    h = LieIdeal.commutator(g)
    q, _ = quotient_algebra(g, h)
    validate(q)
