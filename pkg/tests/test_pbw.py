from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from liedual import catalog
from liedual.lie import LieAlgebraError, AmbientMismatch, adjoint_module, exterior_power, tensor_module
from liedual.linalg import dense_add, dense_identity, dense_mul, dense_scale, dense_zero
from liedual.pbw import (
    FilteredAutomorphism, UEAElement, apply_automorphism, dualizing_automorphism,
    filtration_dim, monomials, monomials_of_degree,
)

from conftest import ALL_NAMES, abelian

U = UEAElement


def test_relation_examples(r2, sl2):
    x, y = U.generator(r2, 0), U.generator(r2, 1)
    assert y * x == x * y - y
    assert str(y * x) == "x*y - y"
    e, f, h = (U.generator(sl2, i) for i in range(3))
    assert f * e == e * f - h
    a = abelian(3)
    x1, x2, x3 = (U.generator(a, i) for i in range(3))
    assert x3 * x2 * x1 == x1 * x2 * x3


def test_degree_and_parts(r2):
    x, y = U.generator(r2, 0), U.generator(r2, 1)
    u = y * x * x + 3
    assert u.degree() == 3
    assert u.constant_term() == 3
    assert u.top_part() == x * x * y
    assert U.zero(r2).degree() == -1 or U.zero(r2).is_zero()


def test_filtration_dims():
    assert filtration_dim(2, 3) == 10
    assert len(list(monomials(3, 4))) == comb(7, 3)
    assert len(monomials_of_degree(2, 5)) == 6


def test_mixed_algebras(r2, sl2):
    with pytest.raises(AmbientMismatch):
        U.generator(r2, 0) * U.generator(sl2, 0)


def _rho(M, u):
    """Image of u under the representation M, evaluated monomial by monomial."""
    out = dense_zero(M.dim)
    for a, v in u.terms.items():
        m = dense_identity(M.dim)
        for i, e in enumerate(a):
            for _ in range(e):
                m = dense_mul(m, M.actions[i])
        out = dense_add(out, dense_scale(m, v))
    return out


@st.composite
def elements(draw, g, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        d = draw(st.integers(0, max_deg))
        opts = monomials_of_degree(g.n, d)
        m = opts[draw(st.integers(0, len(opts) - 1))]
        terms[m] = draw(st.integers(-3, 3))
    return U(g, terms)


NONTRIVIAL = ["r2", "sl2", "heis3", "r3(2)", "r2+r2"]


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_associativity(data):
    g = catalog.lookup(data.draw(st.sampled_from(NONTRIVIAL))).algebra
    a, b, c = (data.draw(elements(g)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_multiplication_matches_representations(data):
    # a module is an algebra map U(g) -> End(M); the PBW product must agree
    g = catalog.lookup(data.draw(st.sampled_from(NONTRIVIAL))).algebra
    ad = adjoint_module(g)
    M = data.draw(st.sampled_from([ad, exterior_power(ad, 2), tensor_module(ad, ad)]))
    a, b = data.draw(elements(g, 2, 3)), data.draw(elements(g, 2, 3))
    assert _rho(M, a * b) == dense_mul(_rho(M, a), _rho(M, b))


@pytest.mark.parametrize("name", ALL_NAMES)
def test_defining_relations(name):
    g = catalog.lookup(name).algebra
    gens = [U.generator(g, i) for i in range(g.n)]
    for i in range(g.n):
        for j in range(g.n):
            br = U.from_vector(g, g.bracket(g.basis_vector(i), g.basis_vector(j)))
            assert gens[i] * gens[j] - gens[j] * gens[i] == br


def test_automorphism_examples(r2):
    gam = dualizing_automorphism(r2)
    assert gam.shifts == (-1, 0)
    x, y = U.generator(r2, 0), U.generator(r2, 1)
    assert gam(x * y) == (x - 1) * y
    assert gam(x * x) == x * x - 2 * x + 1
    assert dualizing_automorphism(catalog.lookup("sl2").algebra).is_identity()
    with pytest.raises(LieAlgebraError):
        FilteredAutomorphism(r2, [0, 1])


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_automorphism_is_multiplicative_and_invertible(data):
    name = data.draw(st.sampled_from(["r2", "r3(1)", "r3(-1)", "r2+r2", "abelian2"]))
    g = catalog.lookup(name).algebra
    lam = dualizing_automorphism(g).shifts
    k = data.draw(st.integers(-2, 2))
    gam = FilteredAutomorphism(g, [k * c for c in lam] if any(lam) else [k] + [0] * (g.n - 1))
    a, b = data.draw(elements(g)), data.draw(elements(g))
    assert apply_automorphism(gam, a * b) == gam(a) * gam(b)
    assert gam.inverse()(gam(a)) == a
    # filtered: degree does not grow and the top part is unchanged
    assert gam(a).degree() == a.degree()
    assert gam(a).top_part() == a.top_part()
