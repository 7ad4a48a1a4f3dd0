"""Inertia via block LDL^T factorization, dense eigensolvers, and numerical rank.

All routines are pure functions of their inputs; distinct matrices may be
processed concurrently.  The LAPACK backends used here are the standard
choices for each task: Bunch-Kaufman LDL^T with partial pivoting and pivot
constant (1 + sqrt(17))/8 for inertia, tridiagonalization-based solvers for
Hermitian spectra, and Hessenberg QR for general spectra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.linalg

from .errors import ConvergenceError
from .matrices import HermitianMatrix

DEFAULT_RELATIVE_ZERO = 1e-12  # per unit dimension; see Tolerance.default


class Inertia3(NamedTuple):
    """Counts of positive, zero, and negative eigenvalues of a Hermitian matrix."""

    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def n(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def is_definite(self) -> bool:
        return self.n_zero == 0 and (self.n_plus == 0 or self.n_minus == 0)

    def flipped(self) -> "Inertia3":
        """Inertia of the negated matrix."""
        return Inertia3(self.n_minus, self.n_zero, self.n_plus)

    def to_json_dict(self) -> dict:
        return {"n_plus": self.n_plus, "n_zero": self.n_zero, "n_minus": self.n_minus}


@dataclass(frozen=True)
class Tolerance:
    """Zero-detection thresholds for spectra computed in floating point.

    ``relative_zero`` scales with the matrix norm, ``absolute_floor`` does
    not.  Exact-arithmetic zero tests have no finite-precision counterpart,
    so every report downstream records which thresholds were in force.
    """

    relative_zero: float
    absolute_floor: float = 0.0

    def __post_init__(self):
        if self.relative_zero < 0 or self.absolute_floor < 0:
            raise ValueError("tolerance components must be nonnegative")

    @classmethod
    def default(cls, n: int) -> "Tolerance":
        return cls(DEFAULT_RELATIVE_ZERO * n, 0.0)

    def zero_threshold(self, scale: float) -> float:
        return self.relative_zero * max(1.0, scale) + self.absolute_floor

    def rank_threshold(self, scale: float, n: int) -> float:
        return self.relative_zero * max(1.0, scale) * n + self.absolute_floor

    def to_json_dict(self) -> dict:
        return {"relative_zero": self.relative_zero, "absolute_floor": self.absolute_floor}


def resolve_tolerance(tol: Tolerance | None, n: int) -> Tolerance:
    return Tolerance.default(n) if tol is None else tol


def ldlt_inertia(m: HermitianMatrix, tol: Tolerance | None = None) -> Inertia3:
    """Inertia of a Hermitian matrix from the block diagonal of P^T M P = L D L^*.

    A 1x1 pivot counts as zero when its magnitude is at most
    ``relative_zero * max(1, ||m||_inf) + absolute_floor``; the two (real)
    eigenvalues of each 2x2 pivot block are classified the same way, so an
    indefinite block contributes (1, 0, 1).
    """
    n = m.n
    tol = resolve_tolerance(tol, n)
    thr = tol.zero_threshold(m.inf_norm())
    try:
        _, d, _ = scipy.linalg.ldl(np.array(m.entries), hermitian=True)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pivoting always completes
        raise ConvergenceError(f"LDL^T factorization failed: {exc}") from exc
    n_plus = n_zero = n_minus = 0
    i = 0
    while i < n:
        if i + 1 < n and d[i + 1, i] != 0:
            d11 = d[i, i].real
            d22 = d[i + 1, i + 1].real
            off = abs(d[i + 1, i])
            mid = (d11 + d22) / 2
            rad = math.hypot((d11 - d22) / 2, off)
            eigs = (mid - rad, mid + rad)
            i += 2
        else:
            eigs = (d[i, i].real,)
            i += 1
        for e in eigs:
            if abs(e) <= thr:
                n_zero += 1
            elif e > 0:
                n_plus += 1
            else:
                n_minus += 1
    return Inertia3(n_plus, n_zero, n_minus)


def symmetric_eigenvalues(m: HermitianMatrix) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending."""
    try:
        return np.linalg.eigvalsh(m.entries)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"Hermitian eigensolver did not converge: {exc}") from exc


def _as_square_array(m) -> np.ndarray:
    a = np.asarray(getattr(m, "entries", m))
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def general_eigenvalues(m) -> np.ndarray:
    """All eigenvalues of a general square matrix as complex numbers.

    For real input the result is conjugate-closed: pairs are returned exactly
    conjugate.
    """
    a = _as_square_array(m)
    try:
        return np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"general eigensolver did not converge: {exc}") from exc


def numeric_rank(m, tol: Tolerance | None = None) -> int:
    """Number of singular values above the rank threshold.

    Hermitian input is recognized (exactly) and handled through eigenvalue
    magnitudes instead of singular values.
    """
    a = _as_square_array(m)
    n = a.shape[0]
    tol = resolve_tolerance(tol, n)
    if isinstance(m, HermitianMatrix) or np.array_equal(a, a.conj().T):
        mags = np.abs(np.linalg.eigvalsh(a))
    else:
        mags = np.linalg.svd(a, compute_uv=False)
    scale = float(mags.max(initial=0.0))
    return int((mags > tol.rank_threshold(scale, n)).sum())
