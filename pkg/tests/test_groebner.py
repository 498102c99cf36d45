import random
from fractions import Fraction

import pytest

from wcfg import (
    MonomialOrder,
    NoUnivariateElement,
    Polynomial,
    RationalFunction,
    SystemPolynomial,
    algebraic_system,
    eliminate_to_univariate,
    groebner_basis,
    monomial_cmp,
    poly_reduce,
    reduce_basis,
    render_system_polynomial,
    system_polynomials,
    univar_build,
    univar_coefficients,
    univar_gcd_squarefree,
)
from wcfg.groebner import buchberger, s_polynomial

from fixtures import load_fixture
from system_gen import random_system

SYMS = ("a",)
VARS = ("X1", "X2")
ORDER = MonomialOrder(VARS)


def sp(terms):
    return SystemPolynomial(SYMS, VARS, terms, ORDER)


def rf(value):
    return RationalFunction.const(SYMS, value)


def rfp(poly):
    return RationalFunction.from_poly(poly)


A = Polynomial.variable(SYMS, "a")
ONE = Polynomial.const(SYMS, 1)


def test_monomial_order_eliminates_later_variables_first():
    # X2 outranks any power of X1, so basis elements low in the order
    # are free of the later variables
    assert monomial_cmp(ORDER, (3, 0), (0, 1)) == -1
    assert monomial_cmp(ORDER, (0, 0), (1, 0)) == -1
    assert monomial_cmp(ORDER, (0, 1), (1, 0)) == 1
    assert monomial_cmp(ORDER, (1, 1), (1, 1)) == 0


def test_lead_monomial_and_monic():
    p = sp({(1, 0): rf(2), (0, 1): rf(4)})
    assert p.lead_monomial() == (0, 1)
    m = p.monic()
    assert m.terms[(0, 1)].is_one()
    assert m.terms[(1, 0)] == rf(Fraction(1, 2))


def test_poly_reduce_eliminates_leading_terms():
    basis = [sp({(1, 0): rf(1), (0, 0): rfp(-A)})]  # X1 - a
    f = sp({(2, 0): rf(1)})                         # X1^2
    r = poly_reduce(f, basis)
    # X1^2 reduces to a^2
    assert r.terms == {(0, 0): rfp(A * A)}


def test_s_polynomial_cancels_leads():
    f = sp({(2, 0): rf(1), (0, 0): rf(1)})   # X1^2 + 1
    g = sp({(1, 1): rf(1), (1, 0): rf(1)})   # X1 X2 + X1
    s = s_polynomial(f, g)
    lead_f, lead_g = f.lead_monomial(), g.lead_monomial()
    assert all(m not in ((2, 1),) for m in s.terms)
    assert s.terms == {(0, 1): rf(1), (2, 0): rf(-1)}


def test_reduce_basis_makes_elements_monic_and_minimal():
    two_x1 = sp({(1, 0): rf(2)})
    out = reduce_basis([two_x1])
    assert len(out) == 1
    assert out[0].terms == {(1, 0): rf(1)}
    # a redundant multiple disappears
    out = reduce_basis([two_x1, sp({(2, 0): rf(5)})])
    assert [p.terms for p in out] == [{(1, 0): rf(1)}]


def test_buchberger_closes_under_s_polynomials():
    gens = [
        sp({(2, 0): rf(1), (0, 1): rf(-1)}),  # X1^2 - X2
        sp({(1, 1): rf(1), (0, 0): rf(-1)}),  # X1 X2 - 1
    ]
    basis = buchberger(gens)
    for i, f in enumerate(basis):
        for g in basis[i + 1:]:
            assert poly_reduce(s_polynomial(f, g), basis).is_zero()
    for gen in gens:
        assert poly_reduce(gen, basis).is_zero()


def test_catalan_basis_golden():
    g = load_fixture("catalan.wcfg")
    basis = groebner_basis(system_polynomials(algebraic_system(g)))
    assert [render_system_polynomial(p) for p in basis] == ["X^2 - (1/a)*X + 1"]


def test_binary_tail_basis_golden():
    g = load_fixture("binary_tail.wcfg")
    basis = groebner_basis(system_polynomials(algebraic_system(g)))
    assert [render_system_polynomial(p) for p in basis] == [
        "X1 - (a^3)/(1 - 2*b + b^2)",
        "X2 - (a)/(1 - b)",
    ]


def test_two_letter_star_cfl_basis_golden():
    g = load_fixture("two_letter_star_cfl.wcfg")
    basis = groebner_basis(system_polynomials(algebraic_system(g)))
    rendered = [render_system_polynomial(p) for p in basis]
    assert len(rendered) == 5
    assert rendered[0] == "X2 - (1)/(1 - a - abar)"
    assert rendered[2] == "D + Dbar - (1)/(1 - a - abar)"
    assert rendered[3] == "Y - (1)/(1 - a - abar)"


def test_unary_double_basis_golden():
    g = load_fixture("unary_double.wcfg")
    basis = groebner_basis(system_polynomials(algebraic_system(g)))
    rendered = [render_system_polynomial(p) for p in basis]
    assert rendered[0] == "X - (1)/(1 - 2*a)"
    assert rendered[1] == (
        "Dbar^2 + (1 - 2*a - 2*a^2)/(a^2 - 2*a^3)*Dbar"
        " - (2 - 5*a)/(a - 4*a^2 + 4*a^3)"
    )
    assert len(rendered) == 5


def test_basis_is_invariant_under_generator_permutation_and_scaling():
    g = load_fixture("unary_double.wcfg")
    gens = system_polynomials(algebraic_system(g))
    reference = {render_system_polynomial(p) for p in groebner_basis(gens)}
    rng = random.Random(7)
    for _ in range(3):
        shuffled = list(gens)
        rng.shuffle(shuffled)
        scaled = [p.scale(rf(rng.choice([2, -1, Fraction(1, 3)]))) for p in shuffled]
        assert {render_system_polynomial(p) for p in groebner_basis(scaled)} == reference


def test_random_systems_reduce_their_generators_to_zero():
    rng = random.Random(20260822)
    for _ in range(25):
        gens = random_system(rng)
        basis = groebner_basis(gens)
        for gen in gens:
            assert poly_reduce(gen, basis).is_zero()
        for i, f in enumerate(basis):
            for h in basis[i + 1:]:
                assert poly_reduce(s_polynomial(f, h), basis).is_zero()


def test_eliminate_to_univariate_golden():
    g = load_fixture("catalan.wcfg")
    univar = eliminate_to_univariate(algebraic_system(g))
    assert render_system_polynomial(univar) == "X^2 - (1/a)*X + 1"


def test_eliminate_to_univariate_requires_an_element():
    # the circular system X1 = X2, X2 = X1 eliminates to nothing
    from wcfg.series import AlgebraicSystem

    system = AlgebraicSystem(
        semiring=load_fixture("catalan.wcfg").semiring,
        terminals=SYMS,
        variables=("X1", "X2"),
        equations=(
            ((Fraction(1), (0,), (0, 1)),),
            ((Fraction(1), (0,), (1, 0)),),
        ),
    )
    with pytest.raises(NoUnivariateElement):
        eliminate_to_univariate(system)


def test_univar_coefficients_ascending():
    g = load_fixture("catalan.wcfg")
    univar = eliminate_to_univariate(algebraic_system(g))
    coeffs = univar_coefficients(univar)
    assert len(coeffs) == 3
    assert coeffs[0].is_one()
    assert coeffs[1] == RationalFunction(Polynomial.const(SYMS, -1), A)
    assert coeffs[2].is_one()


def test_univar_build_round_trip():
    g = load_fixture("catalan.wcfg")
    univar = eliminate_to_univariate(algebraic_system(g))
    rebuilt = univar_build(univar, univar_coefficients(univar))
    assert render_system_polynomial(rebuilt) == render_system_polynomial(univar)


def test_univar_gcd_squarefree():
    template = SystemPolynomial(SYMS, ("X",), {(1,): RationalFunction.const(SYMS, 1)})
    x_minus_a = univar_build(template, [rfp(-A), rf(1)])
    square = x_minus_a * x_minus_a
    assert render_system_polynomial(univar_gcd_squarefree(square)) == "X - a"
    # already squarefree inputs come back unchanged up to normalisation
    univar = eliminate_to_univariate(algebraic_system(load_fixture("catalan.wcfg")))
    assert render_system_polynomial(univar_gcd_squarefree(univar)) == "X^2 - (1/a)*X + 1"
    # X^2 (X - 1) loses the repeated factor
    cubic = univar_build(template, [rf(0), rf(0), rf(-1), rf(1)])
    assert render_system_polynomial(univar_gcd_squarefree(cubic)) == "X^2 - X"
