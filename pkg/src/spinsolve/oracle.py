"""Ground-truth scheme construction from exhaustive point enumeration.

Every point space here is a translation scheme: words, cyclic-group
elements, or matrices over a finite field, with the class of a pair
determined by the difference (Hamming weight, circular distance, or rank).
The census fixes the base point 0, classifies every point, then measures
the table p_{1,j}^r by histogramming the classes of y - z over all
first-class points z, for several representatives y of each class r.
Representatives must agree exactly, which catches wrong distance
functions without trusting translation invariance blindly.

GF(2) matrix families use a bit-packed vectorized rank so that spaces of
a few million points finish in seconds; everything else at desk scale is
small enough for the scalar path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import DEFAULT_CONFIG, SchemeCensus, SolverConfig
from .families import FamilySpec
from .ffield import FiniteField

__all__ = ["PointSpace", "CensusError", "rank", "rank_batch_gf2", "census", "verify_family"]


class CensusError(RuntimeError):
    """The enumeration is too large, or the measured structure is not a
    P-polynomial association scheme."""


def rank(matrix: Sequence[Sequence[int]], f: FiniteField) -> int:
    """Row-echelon rank of a matrix of field-element indices."""
    rows = [list(map(int, r)) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    sub, mul, inv = f.sub, f.mul, f.inv
    rk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        scale = int(inv[rows[rk][col]])
        prow = [int(mul[scale, x]) for x in rows[rk]]
        rows[rk] = prow
        for r in range(rk + 1, len(rows)):
            factor = rows[r][col]
            if factor:
                rows[r] = [int(sub[x, mul[factor, y]]) for x, y in zip(rows[r], prow)]
        rk += 1
        if rk == len(rows):
            break
    return rk


_LSB_TABLE: np.ndarray | None = None


def _lsb_table() -> np.ndarray:
    global _LSB_TABLE
    if _LSB_TABLE is None:
        idx = np.arange(1, 1 << 16, dtype=np.int64)
        table = np.zeros(1 << 16, dtype=np.int8)
        table[1:] = np.log2(idx & -idx).astype(np.int8)  # exact: powers of two
        _LSB_TABLE = table
    return _LSB_TABLE


def rank_batch_gf2(rows: np.ndarray, ncols: int) -> np.ndarray:
    """Ranks of a batch of GF(2) matrices given as per-row bitmasks.

    rows has shape (n_matrices, n_rows); bit j of rows[m, i] is entry (i, j).
    Elimination is position-free: each incoming row is reduced against the
    pivots collected so far (per column, in increasing column order); a
    surviving nonzero row becomes the pivot for its lowest set bit.
    """
    rows = np.ascontiguousarray(rows, dtype=np.uint16)
    nmat, nrows = rows.shape
    pivots = np.zeros((nmat, ncols), dtype=np.uint16)
    ranks = np.zeros(nmat, dtype=np.int64)
    lsb = _lsb_table()
    for i in range(nrows):
        row = rows[:, i].copy()
        for c in range(ncols):
            use = (((row >> c) & 1) == 1) & (pivots[:, c] != 0)
            if use.any():
                row[use] ^= pivots[use, c]
        nz = np.flatnonzero(row)
        if nz.size:
            cols = lsb[row[nz]]
            pivots[nz, cols] = row[nz]
            ranks[nz] += 1
    return ranks


@dataclass
class PointSpace:
    """An enumerated translation space with its distance function.

    Points are integer codes 0..n_points-1 in a mixed-radix encoding of
    the free coordinates; code 0 is always the zero point.
    """

    spec: FamilySpec

    def __post_init__(self):
        fam, p = self.spec.family, self.spec.params
        self.family = fam
        if fam == "hamming":
            self.word_len, self.alphabet = p["N"], p["q"]
            self.n_points = self.alphabet**self.word_len
            self.n_classes = self.word_len
        elif fam == "ngon":
            self.n = p["n"]
            self.n_points = self.n
            self.n_classes = self.n // 2
        elif fam == "bilinear":
            self.field = FiniteField(p["q"])
            self.shape = (p["M"], p["N"])
            self.n_points = p["q"] ** (p["M"] * p["N"])
            self.n_classes = min(p["M"], p["N"])
        elif fam == "alternating":
            self.field = FiniteField(p["q"])
            self.n = p["n"]
            self.upper = [(i, j) for i in range(self.n) for j in range(i + 1, self.n)]
            self.n_points = p["q"] ** len(self.upper)
            self.n_classes = self.n // 2
        elif fam == "hermitian":
            q = p["q"]
            self.field = FiniteField(q * q)
            self.n = p["n"]
            self.conj = self.field.conjugation()
            self.fixed = self.field.fixed_elements(self.conj)
            if len(self.fixed) != q:
                raise CensusError(f"conjugation of GF({q * q}) fixes {len(self.fixed)} "
                                  f"elements, expected {q}")
            self.upper = [(i, j) for i in range(self.n) for j in range(i + 1, self.n)]
            # mixed radix: diagonal digits over the fixed subfield, then
            # off-diagonal digits over the full field
            self.radices = [q] * self.n + [q * q] * len(self.upper)
            self.n_points = q ** (self.n**2)
        else:
            raise CensusError(f"no point space for family {fam!r}")
        if fam == "hermitian":
            self.n_classes = self.n

    # -- enumeration ------------------------------------------------------

    def codes(self) -> np.ndarray:
        return np.arange(self.n_points, dtype=np.int64)

    # -- distances --------------------------------------------------------

    def raw_from_zero(self, codes: np.ndarray) -> np.ndarray:
        """Raw distance (weight, circular distance, or rank) from 0."""
        fam = self.family
        if fam == "ngon":
            return np.minimum(codes, self.n - codes)
        if fam == "hamming":
            digits = self._digits(codes, self.alphabet, self.word_len)
            return np.count_nonzero(digits, axis=1)
        if fam == "bilinear":
            if self.field.q == 2:
                m, n = self.shape
                rows = np.empty((len(codes), m), dtype=np.uint16)
                for i in range(m):
                    rows[:, i] = (codes >> (i * n)) & ((1 << n) - 1)
                return rank_batch_gf2(rows, n)
            return self._rank_scalar(codes)
        if fam == "alternating":
            if self.field.q == 2:
                return rank_batch_gf2(self._alt_rows_gf2(codes), self.n)
            return self._rank_scalar(codes)
        if fam == "hermitian":
            return self._rank_scalar(codes)
        raise CensusError(f"no distance function for {fam!r}")

    def raw_between(self, code_y: int, codes_z: np.ndarray) -> np.ndarray:
        """Raw distance between y and each z, via the difference z - y."""
        fam = self.family
        if fam == "ngon":
            diff = (codes_z - code_y) % self.n
            return np.minimum(diff, self.n - diff)
        if fam == "hamming":
            dy = self._digits(np.array([code_y], dtype=np.int64), self.alphabet,
                              self.word_len)[0]
            dz = self._digits(codes_z, self.alphabet, self.word_len)
            return np.count_nonzero((dz - dy) % self.alphabet, axis=1)
        if fam in ("bilinear", "alternating") and self.field.q == 2:
            return self.raw_from_zero(codes_z ^ code_y)
        # generic path: subtract coordinates in the field, then rank
        dy = self._coord_digits(np.array([code_y], dtype=np.int64))[0]
        dz = self._coord_digits(codes_z)
        diff = self.field.sub[dz, dy[None, :]]
        return self._rank_of_coords(diff)

    # -- internals --------------------------------------------------------

    @staticmethod
    def _digits(codes: np.ndarray, base: int, ndigits: int) -> np.ndarray:
        out = np.empty((len(codes), ndigits), dtype=np.int16)
        rest = codes.copy()
        for k in range(ndigits):
            out[:, k] = rest % base
            rest //= base
        return out

    def _coord_digits(self, codes: np.ndarray) -> np.ndarray:
        """Decode codes to per-coordinate field-element indices."""
        fam = self.family
        if fam == "bilinear":
            m, n = self.shape
            return self._digits(codes, self.field.q, m * n)
        if fam == "alternating":
            return self._digits(codes, self.field.q, len(self.upper))
        if fam == "hermitian":
            out = np.empty((len(codes), len(self.radices)), dtype=np.int16)
            rest = codes.copy()
            fixed = np.array(self.fixed, dtype=np.int16)
            for k, radix in enumerate(self.radices):
                digit = (rest % radix).astype(np.int16)
                out[:, k] = fixed[digit] if k < self.n else digit
                rest //= radix
            return out
        raise CensusError(f"no coordinates for {fam!r}")

    def _materialize(self, coords: np.ndarray) -> list[list[int]]:
        """Full matrix of field-element indices from one coordinate vector."""
        fam = self.family
        f = self.field
        if fam == "bilinear":
            m, n = self.shape
            return [list(coords[i * n:(i + 1) * n]) for i in range(m)]
        mat = [[0] * self.n for _ in range(self.n)]
        if fam == "alternating":
            for k, (i, j) in enumerate(self.upper):
                val = int(coords[k])
                mat[i][j] = val
                mat[j][i] = int(f.neg[val])
            return mat
        if fam == "hermitian":
            for i in range(self.n):
                mat[i][i] = int(coords[i])
            for k, (i, j) in enumerate(self.upper):
                val = int(coords[self.n + k])
                mat[i][j] = val
                mat[j][i] = int(self.conj[val])
            return mat
        raise CensusError(f"no matrix form for {fam!r}")

    def _rank_of_coords(self, coords: np.ndarray) -> np.ndarray:
        return np.array([rank(self._materialize(row), self.field) for row in coords],
                        dtype=np.int64)

    def _rank_scalar(self, codes: np.ndarray) -> np.ndarray:
        return self._rank_of_coords(self._coord_digits(codes))

    def _alt_rows_gf2(self, codes: np.ndarray) -> np.ndarray:
        rows = np.zeros((len(codes), self.n), dtype=np.uint16)
        for k, (i, j) in enumerate(self.upper):
            bit = ((codes >> k) & 1).astype(np.uint16)
            rows[:, i] |= bit << j
            rows[:, j] |= bit << i
        return rows


def census(space: PointSpace, cfg: SolverConfig = DEFAULT_CONFIG) -> SchemeCensus:
    """Measure p_{1,j}^r and class sizes over the whole point space."""
    if space.n_points > cfg.census_max_points:
        raise CensusError(
            f"{space.family} space has {space.n_points} points, above the "
            f"configured cap {cfg.census_max_points}; raise census_max_points "
            "to force it"
        )
    codes = space.codes()
    raws = space.raw_from_zero(codes)

    observed = np.unique(raws)
    if space.family == "alternating" and np.any(observed % 2 != 0):
        raise CensusError(f"odd ranks {observed[observed % 2 != 0]} in an "
                          "alternating-forms space")
    class_of_raw = {int(r): k for k, r in enumerate(observed)}
    n_classes = len(observed) - 1
    if n_classes != space.n_classes:
        raise CensusError(
            f"observed {n_classes + 1} distance classes, expected "
            f"{space.n_classes + 1} for {space.family} {space.spec.params}"
        )
    raw_lookup = np.full(int(observed[-1]) + 1, -1, dtype=np.int64)
    for r, k in class_of_raw.items():
        raw_lookup[r] = k
    cls = raw_lookup[raws]
    class_sizes = np.bincount(cls, minlength=n_classes + 1)
    if np.any(class_sizes == 0):
        raise CensusError("empty distance class")

    neighbors = codes[cls == 1]
    n_reps = max(1, cfg.census_representatives)
    p_table: list[tuple[int, ...]] = []
    reps_checked: list[int] = []
    for r in range(n_classes + 1):
        members = codes[cls == r][:n_reps]
        rows = []
        for y in members:
            raw_j = space.raw_between(int(y), neighbors)
            bad = [int(v) for v in np.unique(raw_j) if int(v) not in class_of_raw]
            if bad:
                raise CensusError(f"distances {bad} between points do not occur "
                                  "from the base point")
            row = np.bincount(raw_lookup[raw_j], minlength=n_classes + 1)
            rows.append(tuple(int(x) for x in row))
        if len(set(rows)) != 1:
            raise CensusError(
                f"representatives of class {r} disagree: {sorted(set(rows))}; "
                "not an association scheme or wrong distance classes"
            )
        p_table.append(rows[0])
        reps_checked.append(len(members))

    for r in range(n_classes + 1):
        for j in range(n_classes + 1):
            if abs(r - j) >= 2 and p_table[r][j] != 0:
                raise CensusError(
                    f"p_(1,{j})^{r} = {p_table[r][j]} breaks tridiagonality"
                )

    return SchemeCensus(
        family=space.family,
        params=dict(space.spec.params),
        point_count=int(space.n_points),
        class_of_distance=class_of_raw,
        class_sizes=tuple(int(x) for x in class_sizes),
        measured_p=tuple(p_table),
        representatives_checked=tuple(reps_checked),
    )


def verify_family(spec: FamilySpec, cfg: SolverConfig = DEFAULT_CONFIG) -> dict:
    """Census vs closed form (exact), or internal consistency for the
    families whose arrays the census itself supplies."""
    from .families import closed_form_array  # local: families builds via census

    from .core import valencies

    cen = census(PointSpace(spec), cfg)
    arr = cen.derived_array()
    mismatches: list[str] = []

    v = valencies(arr)
    if [int(x) for x in v] != list(cen.class_sizes):
        mismatches.append(
            f"valencies {[int(x) for x in v]} != measured class sizes "
            f"{list(cen.class_sizes)}"
        )
    if sum(cen.class_sizes) != cen.point_count:
        mismatches.append("class sizes do not partition the space")
    b0 = int(arr.b[0])
    for r, row in enumerate(cen.measured_p):
        if sum(row) != b0:
            mismatches.append(f"row {r} of the p-table sums to {sum(row)} != {b0}")

    if spec.family in ("hamming", "bilinear", "ngon"):
        closed = closed_form_array(spec)
        if closed.b != arr.b or closed.c != arr.c or closed.a != arr.a:
            mismatches.append(
                f"census array b={arr.b} c={arr.c} a={arr.a} differs from the "
                f"closed form b={closed.b} c={closed.c} a={closed.a}"
            )

    return {
        "family": spec.family,
        "params": dict(spec.params),
        "match": not mismatches,
        "mismatches": mismatches,
        "census": cen.as_dict(),
    }
