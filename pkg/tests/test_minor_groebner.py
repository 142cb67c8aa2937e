from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from abct.minor_groebner import (
    LexOrder,
    MultiPoly,
    buchberger_check,
    minor_variables,
    minors_ideal_generators,
    lex_order,
    reduce,
    s_polynomial,
)

XY = ("x", "y")
LEX_XY = LexOrder.natural(2)


def poly(terms, variables=XY):
    return MultiPoly(variables, terms)


X = poly({(1, 0): 1})
Y2 = poly({(0, 2): 1})
F = X - Y2


def test_variables_and_order():
    assert minor_variables(3) == ["x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33"]
    assert lex_order(2).priority == (0, 1, 2, 3, 4, 5)
    with pytest.raises(ValueError):
        LexOrder((0, 0, 1))
    order = LexOrder((1, 0))  # y > x
    assert order.leading(F) == ((0, 2), -1)
    assert LEX_XY.leading(F) == ((1, 0), 1)


def test_generator_shape():
    (g,) = minors_ideal_generators(3)
    assert len(g.terms) == 6
    assert all(sum(e) == 6 for e in g.terms)
    assert g.is_squarefree()
    assert set(g.terms.values()) == {1, -1}
    assert len(minors_ideal_generators(6)) == 20
    with pytest.raises(ValueError):
        minors_ideal_generators(2)


def test_generator_matches_sympy_determinant():
    names = minor_variables(4)
    syms = {v: sympy.Symbol(v) for v in names}
    for gen, cols in zip(minors_ideal_generators(4), combinations(range(1, 5), 3)):
        x = lambda i, j: syms[f"x{i}{j}"]  # noqa: E731
        mat = sympy.Matrix([[x(1, j) * x(2, j) for j in cols],
                            [x(1, j) * x(3, j) for j in cols],
                            [x(2, j) * x(3, j) for j in cols]])
        expected = sympy.Poly(mat.det(), *[syms[v] for v in names])
        assert {tuple(m): int(c) for m, c in expected.terms()} == gen.terms


def test_generator_vanishes_on_conic_through_coordinate_points():
    # x y + x z + y z = 0 passes through e1, e2, e3
    points = [(1, 1, Fraction(-1, 2)), (1, 2, Fraction(-2, 3)), (2, 3, Fraction(-6, 5))]
    values = {}
    for j, p in enumerate(points, start=1):
        for i in range(3):
            values[f"x{i + 1}{j}"] = p[i]
    (g,) = minors_ideal_generators(3)
    assert g.evaluate(values) == 0
    values["x33"] = Fraction(1)
    assert g.evaluate(values) != 0


def test_s_polynomial_examples():
    assert not s_polynomial(F, F, LEX_XY)
    assert s_polynomial(F, X, LEX_XY) == -Y2
    with pytest.raises(ValueError):
        s_polynomial(F, poly({}), LEX_XY)


def test_reduce_examples():
    assert not reduce(F, [F], LEX_XY)
    f = poly({(2, 0): 1, (0, 1): 1})
    assert reduce(f, [X], LEX_XY) == poly({(0, 1): 1})
    with pytest.raises(ArithmeticError):
        reduce(X, [poly({(1, 0): 2})], LEX_XY)


def test_buchberger_examples():
    r = buchberger_check([F, X], LEX_XY)
    assert not r.is_groebner and r.failing_pair == (1, 2)
    assert buchberger_check([F], LEX_XY).is_groebner
    # coprime leading monomials are skipped
    r = buchberger_check([X, Y2], LEX_XY)
    assert r.is_groebner and r.skipped == 1


def test_minors_form_groebner_basis():
    G = minors_ideal_generators(6)
    report = buchberger_check(G, lex_order(6), trace=True)
    assert report.is_groebner
    assert report.pairs == 190
    assert all(k == 0 for _, k in report.remainder_sizes)


def test_check_detects_non_basis():
    G = minors_ideal_generators(6)
    assert not buchberger_check(G[1:], lex_order(6)).is_groebner


def test_leading_terms_squarefree():
    order = lex_order(6)
    for g in minors_ideal_generators(6):
        exp, c = order.leading(g)
        assert max(exp) == 1 and abs(c) == 1


def unit_lead(g, order):
    """Replace the leading coefficient by 1 so integer division always applies."""
    exp, c = order.leading(g)
    terms = dict(g.terms)
    terms[exp] = 1
    return MultiPoly(g.variables, terms)


monomials = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monomials, st.integers(-5, 5), min_size=1, max_size=6).map(
    lambda t: MultiPoly(("a", "b", "c"), t)
)


@settings(max_examples=150, deadline=None)
@given(polys, st.lists(polys, min_size=1, max_size=3))
def test_reduce_idempotent_and_deterministic(f, G):
    G = [g for g in G if g]
    if not G:
        return
    order = LexOrder.natural(3)
    G = [unit_lead(g, order) for g in G]
    r = reduce(f, G, order)
    assert reduce(r, G, order) == r
    assert reduce(f, G, order) == r
    leads = [order.leading(g)[0] for g in G]
    for e in r.terms:
        assert not any(all(a <= b for a, b in zip(lt, e)) for lt in leads)
