"""Shared domain types for self-dual P-polynomial association schemes.

A P-polynomial (metric) scheme with N classes is described by its
intersection array: positive sequences b_0..b_{N-1} and c_1..c_N together
with the diagonal numbers a_0..a_N, constrained by a_i + b_i + c_i = b_0
(with c_0 = 0 and b_N = 0).  The valencies follow from the array as
v_j = prod_{i<j} b_i / c_{i+1}.  A concrete scheme additionally carries
its |X|, the N+1 distinct eigenvalues theta_i of the first relation, and
the eigenmatrix P with entries P_j(i); self-duality means P^2 = |X| I.

Array parameters are kept as exact Fractions (every named family yields
integers), with float views for the numeric solver.  All types are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

Rational = Fraction

__all__ = [
    "SolverConfig",
    "IntersectionArray",
    "SchemeInstance",
    "SolutionCandidate",
    "SchemeCensus",
    "validate_array",
    "valencies",
    "max_abs",
    "to_jsonable",
    "dumps_report",
]


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and guards threaded explicitly through every operation.

    residual_tol is absolute on matrix entries (the natural scale of
    (PT)^3 - I is 1); the remaining tolerances are used scale-relative
    wherever the compared quantities can be large.
    """

    residual_tol: float = 1e-10
    root_dedup_tol: float = 1e-8
    filter_tol: float = 1e-8
    self_dual_tol: float = 1e-8
    max_solutions_expected: int = 12
    census_representatives: int = 5
    census_max_points: int = 1_000_000

    def __post_init__(self):
        for name in ("residual_tol", "root_dedup_tol", "filter_tol", "self_dual_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def with_(self, **kwargs) -> "SolverConfig":
        return replace(self, **kwargs)


DEFAULT_CONFIG = SolverConfig()


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, float):
        return Fraction(x)  # exact binary value
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


@dataclass(frozen=True)
class IntersectionArray:
    """Tridiagonal parameters {b_i}, {c_i}, {a_i} of a P-polynomial scheme.

    b holds b_0..b_{N-1}, c holds c_1..c_N, a holds a_0..a_N.  If a is
    omitted it is derived from the row-sum constraint a_i = b_0 - b_i - c_i
    (reading c_0 = 0 and b_N = 0).
    """

    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    a: tuple[Fraction, ...]

    def __init__(self, b: Sequence, c: Sequence, a: Sequence | None = None):
        b = tuple(_as_fraction(x) for x in b)
        c = tuple(_as_fraction(x) for x in c)
        if len(b) != len(c):
            raise ValueError("b and c must have the same length N")
        if not b:
            raise ValueError("need at least one class (N >= 1)")
        if a is None:
            n = len(b)
            full_b = b + (Fraction(0),)
            full_c = (Fraction(0),) + c
            a = tuple(b[0] - full_b[i] - full_c[i] for i in range(n + 1))
        else:
            a = tuple(_as_fraction(x) for x in a)
            if len(a) != len(b) + 1:
                raise ValueError("a must have length N + 1")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "a", a)

    @property
    def n_classes(self) -> int:
        return len(self.b)

    def b_at(self, i: int) -> Fraction:
        """b_i with the convention b_N = 0."""
        return self.b[i] if 0 <= i < len(self.b) else Fraction(0)

    def c_at(self, i: int) -> Fraction:
        """c_i with the convention c_0 = 0."""
        return self.c[i - 1] if 1 <= i <= len(self.c) else Fraction(0)

    def b_floats(self) -> np.ndarray:
        return np.array([float(x) for x in self.b])

    def c_floats(self) -> np.ndarray:
        return np.array([float(x) for x in self.c])

    def a_floats(self) -> np.ndarray:
        return np.array([float(x) for x in self.a])

    def as_dict(self) -> dict:
        return {
            "n_classes": self.n_classes,
            "b": [_num_json(x) for x in self.b],
            "c": [_num_json(x) for x in self.c],
            "a": [_num_json(x) for x in self.a],
            "valencies": [_num_json(v) for v in valencies(self)],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "IntersectionArray":
        return cls(data["b"], data["c"], data.get("a"))


def validate_array(arr: IntersectionArray) -> list[str]:
    """Return every invariant violation of the array; empty list = valid."""
    problems: list[str] = []
    n = arr.n_classes
    if arr.a[0] != 0:
        problems.append(f"a_0 = {arr.a[0]} must be 0")
    for i, bi in enumerate(arr.b):
        if bi <= 0:
            problems.append(f"b_{i} = {bi} must be positive")
    for i, ci in enumerate(arr.c, start=1):
        if ci <= 0:
            problems.append(f"c_{i} = {ci} must be positive")
    for i, ai in enumerate(arr.a):
        if ai < 0:
            problems.append(f"a_{i} = {ai} must be nonnegative")
    b0 = arr.b[0]
    for i in range(n + 1):
        total = arr.a[i] + arr.b_at(i) + arr.c_at(i)
        if total != b0:
            problems.append(f"a_{i}+b_{i}+c_{i} = {total} != b_0 = {b0}")
    # valency positivity follows from b, c > 0; recheck defensively
    v = Fraction(1)
    for j in range(n):
        v = v * arr.b[j] / arr.c[j]
        if v <= 0:
            problems.append(f"v_{j + 1} = {v} must be positive")
    return problems


def ensure_valid(arr: IntersectionArray) -> None:
    problems = validate_array(arr)
    if problems:
        raise ValueError("invalid intersection array: " + "; ".join(problems))


def valencies(arr: IntersectionArray) -> list[Fraction]:
    """v_0..v_N with v_j = prod_{i=0}^{j-1} b_i / c_{i+1} (exact)."""
    ensure_valid(arr)
    v = [Fraction(1)]
    for j in range(arr.n_classes):
        v.append(v[-1] * arr.b[j] / arr.c[j])
    return v


@dataclass(frozen=True)
class SchemeInstance:
    """A concrete scheme: family tag, array, size, eigenvalues, eigenmatrix.

    Self-duality P^2 = |X| I is enforced by the family builders; a Custom
    instance records its measured defect without insisting on it, so the
    solver can be exercised on arbitrary valid arrays.
    """

    family: str
    params: dict
    array: IntersectionArray
    size: Fraction
    theta: np.ndarray  # shape (N+1,), theta_0 = b_0
    eigenmatrix: np.ndarray  # shape (N+1, N+1), P[i, j] = P_j(i)

    def __post_init__(self):
        self.theta.setflags(write=False)
        self.eigenmatrix.setflags(write=False)

    @property
    def n_classes(self) -> int:
        return self.array.n_classes

    @property
    def size_float(self) -> float:
        return float(self.size)

    def self_dual_defect(self) -> float:
        """max-entry norm of P^2 - |X| I, relative to |X|."""
        p = self.eigenmatrix
        resid = p @ p - self.size_float * np.eye(p.shape[0])
        return max_abs(resid) / self.size_float

    def valencies_float(self) -> np.ndarray:
        return np.array([float(v) for v in valencies(self.array)])

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "size": _num_json(self.size),
            "array": self.array.as_dict(),
            "eigenvalues": [float(t) for t in self.theta],
            "eigenmatrix": [[float(x) for x in row] for row in self.eigenmatrix],
            "self_dual_defect": self.self_dual_defect(),
        }


@dataclass(frozen=True)
class SolutionCandidate:
    """One diagonal solution: the ratio x = T_1/T_0, the profile t_i = T_i/T_0,
    the scalar mu with (P diag(t))^3 = mu I, a cube root T_0 of 1/mu, the
    full diagonal, and the verified residual of (P diag(T))^3 - I."""

    x: complex
    t: tuple[complex, ...]
    mu: complex
    t0: complex
    diag: tuple[complex, ...]
    residual: float

    def as_dict(self) -> dict:
        return {
            "x": _cplx(self.x),
            "t": [_cplx(z) for z in self.t],
            "mu": _cplx(self.mu),
            "T0": _cplx(self.t0),
            "T": [_cplx(z) for z in self.diag],
            "residual": self.residual,
        }


@dataclass(frozen=True)
class SchemeCensus:
    """Scheme structure measured from an exhaustive point enumeration."""

    family: str
    params: dict
    point_count: int
    class_of_distance: dict[int, int]
    class_sizes: tuple[int, ...]
    measured_p: tuple[tuple[int, ...], ...]  # measured_p[r][j] = p_{1,j}^r
    representatives_checked: tuple[int, ...]

    @property
    def n_classes(self) -> int:
        return len(self.class_sizes) - 1

    def derived_array(self) -> IntersectionArray:
        """Read {b, c, a} off the measured table: c_r = p_{1,r-1}^r,
        a_r = p_{1,r}^r, b_r = p_{1,r+1}^r."""
        n = self.n_classes
        p = self.measured_p
        b = [p[r][r + 1] for r in range(n)]
        c = [p[r][r - 1] for r in range(1, n + 1)]
        a = [p[r][r] for r in range(n + 1)]
        return IntersectionArray(b, c, a)

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "point_count": self.point_count,
            "class_of_distance": {str(k): v for k, v in sorted(self.class_of_distance.items())},
            "class_sizes": list(self.class_sizes),
            "p_table": [list(row) for row in self.measured_p],
            "representatives_checked": list(self.representatives_checked),
            "array": self.derived_array().as_dict(),
        }


def max_abs(m) -> float:
    """Entrywise max-abs norm used for every residual in this package."""
    return float(np.max(np.abs(m))) if np.size(m) else 0.0


# ---------------------------------------------------------------------------
# JSON helpers
#
# Complex numbers serialize as {"re": ..., "im": ...}; matrices row-major.
# Floats use Python's shortest round-trip repr, so identical inputs always
# produce byte-identical reports.
# ---------------------------------------------------------------------------


def _cplx(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _num_json(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else float(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    return x


def to_jsonable(obj):
    """Recursively convert package types into JSON-serializable data."""
    if hasattr(obj, "as_dict"):
        return to_jsonable(obj.as_dict())
    if isinstance(obj, complex):
        return _cplx(obj)
    if isinstance(obj, Fraction):
        return _num_json(obj)
    if isinstance(obj, np.ndarray):
        return [to_jsonable(row) for row in obj.tolist()]
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj


def dumps_report(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, allow_nan=False)
