"""Dense Hermitian containers, Matrix Market I/O, and generators for test families.

All values are immutable after construction and safe for concurrent reads.
Generators are pure functions of their arguments (and seed).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.io import mminfo, mmread, mmwrite

from .errors import MatrixFormatError, PreconditionError

_REAL = np.float64
_COMPLEX = np.complex128


def _coerce_square(arr) -> np.ndarray:
    a = np.asarray(arr)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise MatrixFormatError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise MatrixFormatError("matrix dimension must be at least 1")
    return a.astype(_COMPLEX if np.iscomplexobj(a) else _REAL, copy=True)


@dataclass(frozen=True)
class HermitianMatrix:
    """Dense real-symmetric or complex-Hermitian matrix.

    The stored array satisfies ``entries == entries.conj().T`` exactly
    (bitwise); use :meth:`from_array` to symmetrize noisy input first.
    """

    entries: np.ndarray

    def __post_init__(self):
        a = _coerce_square(self.entries)
        if not np.array_equal(a, a.conj().T):
            raise MatrixFormatError(
                "entries are not exactly Hermitian; construct via "
                "HermitianMatrix.from_array to symmetrize"
            )
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def from_array(cls, arr, symmetrize: bool = True) -> "HermitianMatrix":
        """Build from an array, averaging with its conjugate transpose first."""
        a = _coerce_square(arr)
        if symmetrize:
            a = (a + a.conj().T) / 2
        return cls(a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def scalar_kind(self) -> str:
        return "complex" if np.iscomplexobj(self.entries) else "real"

    def inf_norm(self) -> float:
        return float(np.abs(self.entries).sum(axis=1).max())

    def negated(self) -> "HermitianMatrix":
        return HermitianMatrix(-self.entries)

    def __repr__(self) -> str:  # keep reprs short in test output
        return f"HermitianMatrix(n={self.n}, kind={self.scalar_kind})"


@dataclass(frozen=True)
class Pencil:
    """Hermitian pencil a - z*b."""

    a: HermitianMatrix
    b: HermitianMatrix

    def __post_init__(self):
        if self.a.n != self.b.n:
            raise MatrixFormatError(
                f"pencil dimensions differ: {self.a.n} vs {self.b.n}"
            )

    @property
    def n(self) -> int:
        return self.a.n

    def shifted(self, t: float) -> HermitianMatrix:
        """Evaluate a - t*b at a real point t (exactly Hermitian)."""
        return HermitianMatrix(self.a.entries - t * self.b.entries)


@dataclass(frozen=True)
class MatrixPolynomial:
    """Hermitian matrix polynomial sum_i z^i coeffs[i], degree = len(coeffs)-1.

    The leading coefficient is stored even when it is the zero matrix: the
    degree is declared by the coefficient list, never inferred.
    """

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) < 2:
            raise MatrixFormatError("matrix polynomial degree must be at least 1")
        n = coeffs[0].n
        if any(c.n != n for c in coeffs):
            raise MatrixFormatError("all polynomial coefficients must share one dimension")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def n(self) -> int:
        return self.coeffs[0].n


# ---------------------------------------------------------------------------
# Matrix Market I/O
# ---------------------------------------------------------------------------

def load_matrix_market(path) -> HermitianMatrix:
    """Read a Matrix Market file declared symmetric or hermitian.

    Array and coordinate formats are both accepted; coordinate entries below
    the diagonal are mirrored.  Files declaring any other structure
    (``general``, ``skew-symmetric``, ``pattern``) are rejected.
    """
    path = os.fspath(path)
    try:
        rows, cols, _, _, field, symmetry = mminfo(path)
    except ValueError as exc:
        raise MatrixFormatError(f"cannot parse Matrix Market file {path!r}: {exc}") from exc
    if rows != cols:
        raise MatrixFormatError(f"{path!r}: matrix is {rows}x{cols}, not square")
    if field == "pattern":
        raise MatrixFormatError(f"{path!r}: pattern files carry no numeric values")
    if symmetry not in ("symmetric", "hermitian"):
        raise MatrixFormatError(
            f"{path!r}: declared symmetry {symmetry!r}; only 'symmetric' or "
            f"'hermitian' inputs are accepted"
        )
    data = mmread(path)
    if hasattr(data, "toarray"):
        data = data.toarray()
    return HermitianMatrix.from_array(data)


def save_matrix_market(m: HermitianMatrix, path) -> None:
    """Write a matrix in Matrix Market array format with explicit symmetry."""
    symmetry = "hermitian" if m.scalar_kind == "complex" else "symmetric"
    mmwrite(os.fspath(path), np.array(m.entries), symmetry=symmetry)


def save_polynomial_manifest(p: MatrixPolynomial, prefix) -> Path:
    """Write coefficient files ``<prefix>_c<i>.mtx`` plus a JSON manifest.

    The manifest lists coefficient paths (relative to its own directory) in
    ascending power order together with the declared degree.
    """
    prefix = Path(prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    names = []
    for i, coeff in enumerate(p.coeffs):
        name = f"{prefix.name}_c{i}.mtx"
        save_matrix_market(coeff, prefix.parent / name)
        names.append(name)
    manifest = prefix.with_suffix(".json")
    manifest.write_text(json.dumps({"degree": p.degree, "coefficients": names}, indent=2))
    return manifest


def load_polynomial_manifest(path) -> MatrixPolynomial:
    """Load a matrix polynomial from a JSON manifest written by save_polynomial_manifest."""
    path = Path(path)
    try:
        spec = json.loads(path.read_text())
        degree = int(spec["degree"])
        names = list(spec["coefficients"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise MatrixFormatError(f"bad polynomial manifest {path!r}: {exc}") from exc
    if degree != len(names) - 1:
        raise MatrixFormatError(
            f"{path!r}: declared degree {degree} but {len(names)} coefficients"
        )
    coeffs = [load_matrix_market(path.parent / name) for name in names]
    return MatrixPolynomial(tuple(coeffs))


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def gen_random_symmetric(n: int, seed: int) -> HermitianMatrix:
    """Random dense symmetric matrix X + X^T with X standard normal."""
    if n < 1:
        raise ValueError("n must be at least 1")
    x = np.random.default_rng(seed).standard_normal((n, n))
    return HermitianMatrix(x + x.T)


def gen_shifted_inertia(m: HermitianMatrix, k: int) -> HermitianMatrix:
    """Shift m by a multiple of the identity so exactly k eigenvalues are negative.

    For 0 < k < n the shift is the midpoint of the k-th and (k+1)-st smallest
    eigenvalues, which must be distinct; k = 0 shifts below the spectrum and
    k = n above it.
    """
    n = m.n
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    ev = np.linalg.eigvalsh(m.entries)
    if k == 0:
        s = ev[0] - 1.0
    elif k == n:
        s = ev[-1] + 1.0
    else:
        if not ev[k - 1] < ev[k]:
            raise PreconditionError(
                f"eigenvalues {k} and {k + 1} coincide; shift target is ambiguous"
            )
        s = (ev[k - 1] + ev[k]) / 2
    return HermitianMatrix(m.entries - s * np.eye(n, dtype=m.entries.dtype))


def _tridiag(n: int, off: float, mid: float, corner: float) -> np.ndarray:
    m = np.zeros((n, n))
    for i in range(n):
        m[i, i] = corner if i in (0, n - 1) else mid
        if i + 1 < n:
            m[i, i + 1] = m[i + 1, i] = off
    return m


def gen_spring_quadratic(n: int, beta: float) -> MatrixPolynomial:
    """Damped mass-spring quadratic t^2*I + t*B + C with damping scale beta.

    B = beta * tridiag(-10, diag [20, 30, ..., 30, 20], -10) and
    C = tridiag(-5, 15, -5).  The family is definite for beta above roughly
    0.52 and indefinite below.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if beta <= 0:
        raise ValueError("beta must be positive")
    a = HermitianMatrix(np.eye(n))
    b = HermitianMatrix(beta * _tridiag(n, -10.0, 30.0, 20.0))
    c = HermitianMatrix(_tridiag(n, -5.0, 15.0, 15.0))
    return MatrixPolynomial((c, b, a))


def gen_jordan_pair(n: int, lam: float) -> Pencil:
    """Pencil with a single real eigenvalue lam of algebraic multiplicity n.

    A carries lam on the antidiagonal and ones on the diagonal just above it
    (entries at i + j = n, 1-based); B is the anti-identity.  The geometric
    multiplicity of lam is 1, and the inertia of a - t*b is constant in t
    away from lam.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    a = np.zeros((n, n))
    b = np.zeros((n, n))
    for i in range(n):
        j_anti = n - 1 - i
        a[i, j_anti] = lam
        b[i, j_anti] = 1.0
        if j_anti - 1 >= 0:
            a[i, j_anti - 1] = 1.0
    return Pencil(HermitianMatrix(a), HermitianMatrix(b))
