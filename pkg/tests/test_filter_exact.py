"""Exact-arithmetic cross-check of the profile filters.

An independent recurrence over Gaussian rationals (Fraction pairs)
recomputes the filter quantities with no rounding at all; decisions made
in double precision must agree wherever x itself is exactly
representable."""

from fractions import Fraction

import pytest

import spinsolve as sp
from spinsolve.core import valencies
from spinsolve.families import FamilySpec, build
from spinsolve.solver import filter_x


class QI:
    """Gaussian rational a + b i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        return QI(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return QI(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        return QI(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    def scaled(self, r):
        r = Fraction(r)
        return QI(self.re * r, self.im * r)

    def reciprocal(self):
        norm = self.re * self.re + self.im * self.im
        return QI(self.re / norm, -self.im / norm)

    def norm2(self):
        return self.re * self.re + self.im * self.im


def exact_profile(arr, theta, x: QI):
    v = valencies(arr)
    n = arr.n_classes
    t = [QI(1), x]
    for i in range(1, n):
        lhs = t[i].scaled(v[i]) * (x.scaled(theta[i]) - QI(arr.a[i]))
        prev = t[i - 1].scaled(arr.b[i - 1] * v[i - 1])
        t.append((lhs - prev).scaled(Fraction(1) / (arr.c[i] * v[i + 1])))
    return t


def exact_filter_decision(arr, theta, x: QI, tol: float):
    """Same acceptance rule as filter_x, but in exact arithmetic
    (thresholds compared through squared magnitudes)."""
    t = exact_profile(arr, theta, x)
    s = exact_profile(arr, theta, x.reciprocal())
    tol2 = Fraction(tol) ** 2
    for i in range(1, arr.n_classes + 1):
        if (t[i] * s[i] - QI(1)).norm2() > tol2:
            return False
    n = arr.n_classes
    v = valencies(arr)
    lhs = t[n].scaled(v[n]) * (x.scaled(theta[n]) - QI(arr.a[n]))
    rhs = t[n - 1].scaled(arr.b[n - 1] * v[n - 1])
    gap2 = (lhs - rhs).norm2()
    scale2 = max(lhs.norm2(), rhs.norm2())
    return scale2 == 0 or gap2 <= tol2 * scale2


def exact_theta(scheme):
    fam, p = scheme.family, scheme.params
    if fam == "hamming":
        return [Fraction(p["N"] * (p["q"] - 1) - p["q"] * i)
                for i in range(scheme.n_classes + 1)]
    return [Fraction(float(v)) for v in scheme.theta]  # floats are exact values


PROBES = [QI(0, 1), QI(0, -1), QI(-1), QI(1), QI(Fraction(3, 5), Fraction(4, 5)),
          QI(Fraction(-3, 5), Fraction(4, 5)), QI(2, 1), QI(Fraction(1, 3))]


@pytest.mark.parametrize("spec", [
    FamilySpec("hamming", {"N": 3, "q": 2}),
    FamilySpec("hamming", {"N": 4, "q": 4}),
    FamilySpec("hamming", {"N": 5, "q": 3}),
    FamilySpec("bilinear", {"M": 3, "N": 3, "q": 2}),
])
def test_float_filter_agrees_with_exact_filter(spec):
    scheme = build(spec)
    theta = exact_theta(scheme)
    tol = sp.DEFAULT_CONFIG.filter_tol
    for x in PROBES:
        exact = exact_filter_decision(scheme.array, theta, x, tol)
        numeric, _ = filter_x(scheme.array, scheme.theta,
                              complex(float(x.re), float(x.im)))
        assert numeric == exact, f"disagreement at x = {x.re} + {x.im}i"


def test_exact_filter_accepts_the_known_solutions():
    scheme = build(FamilySpec("hamming", {"N": 4, "q": 2}))
    theta = exact_theta(scheme)
    assert exact_filter_decision(scheme.array, theta, QI(0, 1), 1e-300)
    assert exact_filter_decision(scheme.array, theta, QI(0, -1), 1e-300)
    q4 = build(FamilySpec("hamming", {"N": 3, "q": 4}))
    assert exact_filter_decision(q4.array, exact_theta(q4), QI(-1), 1e-300)
