"""Census machinery: ranks, exhaustive counts, closed-form agreement."""

import numpy as np
import pytest

import spinsolve as sp
from spinsolve.ffield import FiniteField
from spinsolve.oracle import (
    CensusError,
    PointSpace,
    census,
    rank,
    rank_batch_gf2,
    verify_family,
)

GF2 = FiniteField(2)


def test_rank_zero_matrix():
    assert rank([[0, 0, 0]] * 3, GF2) == 0


def test_rank_identity():
    eye = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert rank(eye, GF2) == 3


def test_rank_equal_rows():
    assert rank([[1, 1], [1, 1]], GF2) == 1


def test_rank_gf4_conjugate_pair():
    f = FiniteField(4)
    # [[1, t], [t^2, t^3 = 1...]]: second row = t^2 * first row
    t = 2
    t2 = int(f.mul[t, t])
    row2 = [int(f.mul[t2, 1]), int(f.mul[t2, t])]
    assert rank([[1, t], row2], f) == 1


def test_batch_rank_agrees_with_scalar():
    rng = np.random.default_rng(3)
    n = 5
    mats = rng.integers(0, 2, size=(200, n, n))
    rows = np.zeros((200, n), dtype=np.uint16)
    for j in range(n):
        rows |= (mats[:, :, j].astype(np.uint16) << j)
    batch = rank_batch_gf2(rows, n)
    scalar = np.array([rank(m.tolist(), GF2) for m in mats])
    assert np.array_equal(batch, scalar)


@pytest.mark.parametrize("family,params", [
    ("hamming", {"N": 3, "q": 2}),
    ("hamming", {"N": 2, "q": 3}),
    ("bilinear", {"M": 2, "N": 2, "q": 2}),
    ("bilinear", {"M": 3, "N": 3, "q": 2}),
    ("bilinear", {"M": 2, "N": 2, "q": 3}),
    ("ngon", {"n": 5}),
    ("ngon", {"n": 6}),
    ("ngon", {"n": 7}),
    ("ngon", {"n": 8}),
])
def test_census_matches_closed_form(family, params):
    report = verify_family(sp.FamilySpec(family, params))
    assert report["match"], report["mismatches"]


def test_census_local_counts_sum_to_degree(hamming32):
    cen = census(PointSpace(sp.FamilySpec("hamming", {"N": 3, "q": 2})))
    b0 = cen.class_sizes[1]
    for row in cen.measured_p:
        assert sum(row) == b0


def test_census_is_tridiagonal():
    cen = census(PointSpace(sp.FamilySpec("bilinear", {"M": 2, "N": 3, "q": 2})))
    n = cen.n_classes
    for r in range(n + 1):
        for j in range(n + 1):
            if abs(r - j) >= 2:
                assert cen.measured_p[r][j] == 0


def test_census_size_cap():
    space = PointSpace(sp.FamilySpec("alternating", {"n": 7, "q": 2}))
    with pytest.raises(CensusError, match="cap"):
        census(space, sp.DEFAULT_CONFIG)  # 2^21 points > 10^6 default


def test_census_point_counts():
    assert PointSpace(sp.FamilySpec("alternating", {"n": 6, "q": 2})).n_points == 2 ** 15
    assert PointSpace(sp.FamilySpec("hermitian", {"n": 3, "q": 2})).n_points == 2 ** 9
    assert PointSpace(sp.FamilySpec("bilinear", {"M": 3, "N": 4, "q": 2})).n_points == 2 ** 12


def test_alternating_census_consistency(big_cfg):
    report = verify_family(sp.FamilySpec("alternating", {"n": 6, "q": 2}), big_cfg)
    assert report["match"], report["mismatches"]
    sizes = report["census"]["class_sizes"]
    assert sum(sizes) == 2 ** 15


def test_hermitian_census_consistency():
    report = verify_family(sp.FamilySpec("hermitian", {"n": 2, "q": 2}))
    assert report["match"], report["mismatches"]


def test_alternating_q3_census():
    # odd characteristic goes through the generic table-driven path
    report = verify_family(sp.FamilySpec("alternating", {"n": 4, "q": 3}))
    assert report["match"], report["mismatches"]
    assert report["census"]["point_count"] == 3 ** 6


def test_representatives_are_recorded():
    cen = census(PointSpace(sp.FamilySpec("ngon", {"n": 8})))
    assert cen.representatives_checked[0] == 1  # only the base point
    assert all(k >= 1 for k in cen.representatives_checked)


class _BrokenSpace(PointSpace):
    """Circular distance from the base point, but a garbled pairwise
    distance: representatives of the same class then disagree."""

    def raw_between(self, code_y, codes_z):
        import numpy as np

        diff = (codes_z - code_y) % self.n
        return np.minimum(diff, self.n - diff + (code_y % 2))


def test_disagreeing_representatives_are_an_error():
    space = _BrokenSpace(sp.FamilySpec("ngon", {"n": 9}))
    with pytest.raises(CensusError, match="disagree|do not occur"):
        census(space)
