"""Exhaustive checks of the table-driven finite fields."""

import itertools

import pytest

from spinsolve.ffield import FiniteField, is_prime_power, prime_power_decomposition

DESK_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


@pytest.mark.parametrize("q", DESK_ORDERS)
def test_field_axioms_exhaustively(q):
    f = FiniteField(q)
    elems = range(q)
    for a, b in itertools.product(elems, repeat=2):
        assert f.add[a, b] == f.add[b, a]
        assert f.mul[a, b] == f.mul[b, a]
    for a, b, c in itertools.product(elems, repeat=3):
        assert f.add[f.add[a, b], c] == f.add[a, f.add[b, c]]
        assert f.mul[f.mul[a, b], c] == f.mul[a, f.mul[b, c]]
        assert f.mul[a, f.add[b, c]] == f.add[f.mul[a, b], f.mul[a, c]]
    for a in elems:
        assert f.add[a, 0] == a
        assert f.mul[a, 1] == a
        assert f.add[a, f.neg[a]] == 0
        if a:
            assert f.mul[a, f.inv[a]] == 1


@pytest.mark.parametrize("q", DESK_ORDERS)
def test_frobenius_is_additive_and_multiplicative(q):
    f = FiniteField(q)
    fr = f.frobenius
    for a, b in itertools.product(range(q), repeat=2):
        assert fr[f.add[a, b]] == f.add[fr[a], fr[b]]
        assert fr[f.mul[a, b]] == f.mul[fr[a], fr[b]]


@pytest.mark.parametrize("q2", [4, 9, 16])
def test_conjugation_is_involutive_automorphism(q2):
    f = FiniteField(q2)
    conj = f.conjugation()
    for a in range(q2):
        assert conj[conj[a]] == a
    for a, b in itertools.product(range(q2), repeat=2):
        assert conj[f.add[a, b]] == f.add[conj[a], conj[b]]
        assert conj[f.mul[a, b]] == f.mul[conj[a], conj[b]]
    root = round(q2**0.5)
    assert len(f.fixed_elements(conj)) == root


def test_conjugation_requires_square_order():
    with pytest.raises(ValueError):
        FiniteField(8).conjugation()


def test_prime_power_detection():
    assert is_prime_power(2) and is_prime_power(16) and is_prime_power(27)
    assert not is_prime_power(6) and not is_prime_power(1) and not is_prime_power(12)
    assert prime_power_decomposition(9) == (3, 2)


def test_unknown_extension_rejected():
    with pytest.raises(ValueError):
        FiniteField(25)  # no irreducible on file for 5^2
