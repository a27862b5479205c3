"""Exact engine: ring laws, division, resultants, identity reports."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinsolve.solver import candidate_quartic
from spinsolve.families import FamilySpec, build
from spinsolve.symbolic import (
    MultiPoly,
    NonExactDivision,
    RationalFunction,
    bilinear_identity_checks,
    exact_divide,
    hamming_factor_check,
    hamming_profile_params,
    hamming_resultant_check,
    polynomial_ring,
    reciprocal_numerator,
    symbolic_quartic,
    symbolic_t,
    sylvester_resultant,
)

VARS = ("x", "y", "z")


def sparse_polys(max_terms=6, max_exp=4, coeff_bound=50):
    exponents = st.tuples(*[st.integers(0, max_exp)] * len(VARS))
    term = st.tuples(exponents, st.integers(-coeff_bound, coeff_bound))
    return st.lists(term, max_size=max_terms).map(
        lambda terms: MultiPoly(VARS, dict(terms))
    )


@given(sparse_polys(), sparse_polys(), sparse_polys())
@settings(max_examples=150, deadline=None)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + (-p) == MultiPoly(VARS, {})


@given(sparse_polys(), sparse_polys())
@settings(max_examples=100, deadline=None)
def test_exact_divide_inverts_multiplication(p, q):
    if q.is_zero():
        return
    assert exact_divide(p * q, q) == p


@given(sparse_polys(), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6),
       st.integers(-10**6, 10**6))
@settings(max_examples=100, deadline=None)
def test_substitution_is_a_ring_morphism(p, a, b, c):
    point = dict(zip(VARS, (a, b, c)))
    assert (p + p).substitute(point) == 2 * p.substitute(point)
    assert (p * p).substitute(point) == p.substitute(point) ** 2


def test_simple_products_and_division():
    x, y, z = polynomial_ring(*VARS)
    assert (x + 1) * (x - 1) == x**2 - 1
    assert exact_divide(x**4 + 2 * x**2 + 1, x**2 + 1) == x**2 + 1


def test_non_exact_division_reports_witness():
    x, y, z = polynomial_ring(*VARS)
    with pytest.raises(NonExactDivision) as err:
        exact_divide(x**2 + 1, x + 1)
    assert not err.value.remainder.is_zero()


def test_resultant_linear_convention():
    x, a, b = polynomial_ring("x", "a", "b")
    assert sylvester_resultant(x - a, x - b, "x") == a - b


def test_resultant_of_disjoint_quadratics():
    (x,) = polynomial_ring("x")
    assert sylvester_resultant(x**2 - 1, x**2 - 4, "x") == \
        MultiPoly.constant(("x",), 9)


def test_resultant_swap_symmetry_and_multiplicativity():
    x, a, b = polynomial_ring("x", "a", "b")
    p = x**2 - a
    q = x - b
    r = x + a * b
    res_pq = sylvester_resultant(p, q, "x")
    res_qp = sylvester_resultant(q, p, "x")
    assert res_pq == res_qp or res_pq == -res_qp
    lhs = sylvester_resultant(p, q * r, "x")
    assert lhs == res_pq * sylvester_resultant(p, r, "x")


def test_rational_function_reduction():
    x, nn, q = polynomial_ring("x", "N", "q")
    f = RationalFunction(nn * (q - 1) * x, nn * (q - 1))
    g = f.reduced([nn, q - 1])
    assert g.num == x and g.den == 1


# -- profile identities -------------------------------------------------------


def test_symbolic_profiles_match_worked_example():
    params = hamming_profile_params()
    t2 = symbolic_t(2, params)
    # at N = 3, q = 2 the degree-2 profile entry is (x^2 - 1)/2
    num = [c.substitute({"x": 0, "N": 3, "q": 2}) for c in t2.num.coefficients_in("x")]
    den = t2.den.substitute({"x": 0, "N": 3, "q": 2})
    assert [Fraction(c, den) for c in num] == [Fraction(-1, 2), 0, Fraction(1, 2)]


def test_symbolic_profile_at_x_equals_numeric_profile():
    from spinsolve.solver import t_profile

    params = hamming_profile_params()
    scheme = build(FamilySpec("hamming", {"N": 4, "q": 3}))
    x_val = Fraction(3, 7)
    numeric = t_profile(scheme.array, scheme.theta, float(x_val))
    for i in (2, 3):
        t = symbolic_t(i, params)
        point = {"x": x_val, "N": 4, "q": 3}
        exact = Fraction(t.num.substitute(point)) / t.den.substitute(point)
        assert abs(complex(numeric[i]) - float(exact)) < 1e-12


def test_profile_numerators_share_the_quadratic_factor():
    report = hamming_factor_check()
    assert report["ok"]
    assert report["profiles"]["t2"]["divisible"]
    assert report["profiles"]["t3"]["divisible"]
    assert report["profiles"]["t3"]["cofactor_degree_x"] == 4


def test_degree2_cofactor_coefficients():
    report = hamming_factor_check()
    coeffs = report["profiles"]["t2"]["cofactor_coefficients_x"]
    assert coeffs[0] == "-N*q + N + q"
    assert coeffs[1] == "q - 2"
    assert coeffs[2] == coeffs[0]  # palindromic: the x^2 coefficient is forced
    assert report["cofactor2_palindromic"]


def test_cofactor_resultant_identity():
    report = hamming_resultant_check()
    assert report["matches_target"] and report["sign"] == 1
    assert report["value_at_N3_q3"] == 82944
    assert report["ok"]


def test_cofactors_have_no_extra_common_root_generically():
    params = hamming_profile_params()
    x, nn, q = polynomial_ring(*params.vars)
    one = MultiPoly.constant(params.vars, 1)
    shared = one - 2 * x + q * x + x**2
    cof2 = exact_divide(reciprocal_numerator(symbolic_t(2, params)), shared)
    cof3 = exact_divide(reciprocal_numerator(symbolic_t(3, params)), shared)
    res = sylvester_resultant(cof2, cof3, "x")
    # nonzero away from the vanishing locus (here: N = 3, q = 3)
    assert res.substitute({"x": 0, "N": 3, "q": 3}) == 82944
    assert res.substitute({"x": 0, "N": 5, "q": 7}) != 0


def test_exact_quartic_matches_numeric_for_integer_instances():
    for spec in (FamilySpec("hamming", {"N": 3, "q": 3}),
                 FamilySpec("hamming", {"N": 6, "q": 5}),
                 FamilySpec("bilinear", {"M": 3, "N": 4, "q": 2}),
                 FamilySpec("bilinear", {"M": 3, "N": 3, "q": 3})):
        scheme = build(spec)
        arr = scheme.array
        exact = symbolic_quartic(int(scheme.theta[1]), int(arr.a[1]),
                                 int(arr.b[1]), int(arr.c[0]))
        numeric = candidate_quartic(arr, scheme.theta)
        assert numeric == exact  # floats carry the integers exactly


def test_bilinear_identity_report():
    report = bilinear_identity_checks(seed=7, points=20)
    assert report["ok"]
    assert report["points"] >= 20
    assert all(rec["ok"] for rec in report["per_point"])
    assert report["degree_bounds"]["g1"]["d"] == 2
    assert report["degree_bounds"]["g2"]["d"] == 4


def test_bilinear_identity_alternate_seed():
    report = bilinear_identity_checks(seed=12345, points=20)
    assert report["ok"]
