"""Interval eigenvalue counts for Hermitian matrix polynomials and functions.

Counting rests on the continuity of the sorted eigenvalue curves of F(t):
sign changes of the spectrum between two evaluation points force crossings,
which are real eigenvalues.  For black-box functions only evaluated points
are available, so rank baselines and eigenvalue checks are relative to the
queried arguments rather than the (uncomputable) global normal rank.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .eig import Tolerance, ldlt_inertia, resolve_tolerance, symmetric_eigenvalues
from .errors import ConvergenceError, MatrixFormatError, PreconditionError
from .matrices import HermitianMatrix, MatrixPolynomial, Pencil


@dataclass(frozen=True)
class HermitianFunctionSlice:
    """A Hermitian-valued function of a real parameter, of fixed dimension.

    The evaluator must be pure per argument; analyticity in a neighborhood of
    the real axis is the caller's assertion.
    """

    evaluator: Callable[[float], HermitianMatrix]
    n: int
    description: str = ""

    def evaluate(self, t: float) -> HermitianMatrix:
        m = self.evaluator(t)
        if not isinstance(m, HermitianMatrix) or m.n != self.n:
            raise MatrixFormatError(
                f"evaluator returned an invalid matrix at t={t}: expected "
                f"HermitianMatrix of dimension {self.n}"
            )
        return m

    @classmethod
    def from_polynomial(cls, p: MatrixPolynomial, description: str = "") -> "HermitianFunctionSlice":
        return cls(
            evaluator=lambda t: poly_eval(p, t),
            n=p.n,
            description=description or f"matrix polynomial of degree {p.degree}",
        )

    @classmethod
    def from_pencil(cls, p: Pencil, description: str = "") -> "HermitianFunctionSlice":
        return cls(evaluator=p.shifted, n=p.n, description=description or "linear pencil")


@dataclass(frozen=True)
class Trace:
    """Sampled eigenvalue curves: one ascending list per grid point.

    Sorting keeps each sampled curve continuous but introduces kinks where
    the underlying analytic curves cross, so traces are a visualization
    surrogate and never feed bound logic.
    """

    grid: tuple
    curves: np.ndarray  # shape (len(grid), n), rows ascending

    def to_csv(self) -> str:
        n = self.curves.shape[1]
        out = io.StringIO()
        out.write("t," + ",".join(f"lambda_{j + 1}" for j in range(n)) + "\n")
        for t, row in zip(self.grid, self.curves):
            out.write(repr(float(t)) + "," + ",".join(repr(float(v)) for v in row) + "\n")
        return out.getvalue()


def poly_eval(p: MatrixPolynomial, t: float) -> HermitianMatrix:
    """Evaluate sum_i t^i coeffs[i] by Horner's scheme.

    An infinite argument is a sentinel for the leading coefficient (the
    pencil value at the infinite point).
    """
    if math.isinf(t):
        return p.coeffs[-1]
    acc = np.array(p.coeffs[-1].entries)
    for coeff in reversed(p.coeffs[:-1]):
        acc = acc * t + coeff.entries
    return HermitianMatrix(acc)


def nep_interval_lower(
    f: HermitianFunctionSlice | MatrixPolynomial,
    a: float,
    b: float,
    tol: Tolerance | None = None,
) -> int:
    """Lower bound |n_plus(F(a)) - n_plus(F(b))| on eigenvalues inside (a, b).

    Costs two LDL^T factorizations.  Both endpoints must carry the same rank
    deficiency (relative to the evaluated points; with only two evaluations
    the baseline is their common kernel dimension), otherwise an endpoint is
    singular beyond the baseline and the bound is undefined there.
    """
    if isinstance(f, MatrixPolynomial):
        f = HermitianFunctionSlice.from_polynomial(f)
    if a >= b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    tol = resolve_tolerance(tol, f.n)
    ia = ldlt_inertia(f.evaluate(a), tol)
    ib = ldlt_inertia(f.evaluate(b), tol)
    if ia.n_zero != ib.n_zero:
        bad = a if ia.n_zero > ib.n_zero else b
        raise PreconditionError(
            f"endpoint t={bad} is singular beyond the rank-deficiency baseline"
        )
    return abs(ia.n_plus - ib.n_plus)


@dataclass(frozen=True)
class DefinitePolyReport:
    """Outcome of the alternating-definiteness test over a mu grid.

    When ``definite`` holds, every interval (mu_i, mu_i+1) contains exactly
    ``count_per_interval`` eigenvalues, all n*k eigenvalues are real, and
    ``signs`` records the alternating definiteness sign at each grid point
    (the sign characteristic is constant inside each interval and flips
    between neighbors).  Otherwise ``not_definite_at`` is the index of the
    first grid point breaking the pattern.
    """

    definite: bool
    signs: tuple
    not_definite_at: Optional[int] = None
    count_per_interval: Optional[int] = None
    intervals: tuple = field(default=())


def definite_poly_check(
    p: MatrixPolynomial, mus, tol: Tolerance | None = None
) -> DefinitePolyReport:
    """Classify a polynomial as definite over an ascending grid of degree+1 points.

    The test requires each evaluation to be definite with signs alternating
    along the grid.  This is a classification, not a failure: an indefinite
    verdict reports the first offending index.
    """
    mus = [float(m) for m in mus]
    if len(mus) != p.degree + 1:
        raise ValueError(
            f"need degree+1 = {p.degree + 1} grid points, got {len(mus)}"
        )
    if any(x >= y for x, y in zip(mus, mus[1:])):
        raise ValueError("mu grid must be strictly ascending")
    tol = resolve_tolerance(tol, p.n)
    signs = []
    for i, mu in enumerate(mus):
        inertia = ldlt_inertia(poly_eval(p, mu), tol)
        if inertia.n_plus == p.n:
            sign = 1
        elif inertia.n_minus == p.n:
            sign = -1
        else:
            return DefinitePolyReport(definite=False, signs=tuple(signs), not_definite_at=i)
        if signs and sign == signs[-1]:
            return DefinitePolyReport(definite=False, signs=tuple(signs), not_definite_at=i)
        signs.append(sign)
    return DefinitePolyReport(
        definite=True,
        signs=tuple(signs),
        count_per_interval=p.n,
        intervals=tuple(zip(mus[:-1], mus[1:])),
    )


def _alternation_scale(p: MatrixPolynomial) -> float:
    lead_max = symmetric_eigenvalues(p.coeffs[2])[-1]
    norms = sum(c.inf_norm() for c in p.coeffs[:2])
    return 1.0 + norms / max(-lead_max, np.finfo(float).tiny)


def hyperbolic_quadratic_count(
    p: MatrixPolynomial,
    a: float,
    b: float,
    tol: Tolerance | None = None,
) -> int:
    """Exact eigenvalue count in (a, b) for t^2*A2 + t*A1 + A0 with A2 < 0 < A0.

    Such quadratics have 2n real eigenvalues, n on each side of zero, with
    each eigenvalue curve crossing once per side; counts therefore follow
    from inertias at the endpoints alone.  For a < 0 < b the count is
    n_minus(P(b)) + n_minus(P(a)).  Infinite endpoints are sentinels for the
    whole half/full line.  Endpoints must not be eigenvalues.
    """
    if p.degree != 2:
        raise ValueError(f"expected a quadratic, got degree {p.degree}")
    if a >= b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    n = p.n
    tol = resolve_tolerance(tol, n)
    lead = ldlt_inertia(p.coeffs[2], tol)
    trail = ldlt_inertia(p.coeffs[0], tol)
    if lead.n_minus != n or trail.n_plus != n:
        raise PreconditionError(
            "hyperbolic counting requires a negative definite leading and a "
            "positive definite trailing coefficient"
        )
    big = _alternation_scale(p)
    check = definite_poly_check(p, (-big, 0.0, big), tol)
    if not check.definite:  # pragma: no cover - implied by the definiteness above
        raise PreconditionError("sign alternation check failed at +/- scale bound")

    def below(t: float) -> int:
        # Number of eigenvalues smaller than t.
        if math.isinf(t):
            return 0 if t < 0 else 2 * n
        inertia = ldlt_inertia(poly_eval(p, t), tol)
        if inertia.n_zero:
            raise PreconditionError(f"endpoint t={t} is an eigenvalue")
        return inertia.n_plus if t < 0 else n + inertia.n_minus

    return below(b) - below(a)


def poly_endpoint_lower(p: MatrixPolynomial) -> tuple:
    """Lower bounds on positive and negative real eigenvalue counts.

    Determined by the trailing and leading coefficients alone and hence
    invariant under separate congruences of the two; the negative-side bound
    depends on the parity of the degree through the sign of the leading term
    at minus infinity.
    """
    trail = ldlt_inertia(p.coeffs[0])
    lead = ldlt_inertia(p.coeffs[-1])
    positive = abs(trail.n_plus - lead.n_plus)
    if p.degree % 2 == 0:
        negative = abs(trail.n_plus - lead.n_plus)
    else:
        negative = abs(trail.n_plus - lead.n_minus)
    return (positive, negative)


def trace_eigenfunctions(f: HermitianFunctionSlice | MatrixPolynomial | Pencil, grid) -> Trace:
    """Sorted eigenvalues of F(t) at each grid point.

    A pencil argument is traced as A - t*B, a polynomial as its evaluation.
    """
    if isinstance(f, MatrixPolynomial):
        f = HermitianFunctionSlice.from_polynomial(f)
    elif isinstance(f, Pencil):
        f = HermitianFunctionSlice.from_pencil(f)
    grid = [float(t) for t in grid]
    if not grid:
        raise ValueError("grid must be nonempty")
    if any(x >= y for x, y in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly ascending")
    rows = []
    for t in grid:
        try:
            rows.append(symmetric_eigenvalues(f.evaluate(t)))
        except ConvergenceError as exc:
            raise ConvergenceError(f"eigensolver failed at t={t}: {exc}") from exc
    return Trace(grid=tuple(grid), curves=np.array(rows))


def symmetric_linearization(p: MatrixPolynomial) -> Pencil:
    """Hermitian pencil of size n*degree with the polynomial's eigenvalues.

    Uses the block-Hankel pairing: with U the Hankel stack of coefficients
    A_1..A_k and W = diag(A_0, -Hankel(A_2..A_k)), the pencil (-W, U)
    satisfies (W + t*U) [x, t x, ..., t^(k-1) x] = [P(t) x, 0, ..., 0].  It
    is a strong linearization when the leading coefficient is nonsingular.
    """
    k = p.degree
    n = p.n
    dtype = complex if any(c.scalar_kind == "complex" for c in p.coeffs) else float
    u = np.zeros((k * n, k * n), dtype=dtype)
    w = np.zeros((k * n, k * n), dtype=dtype)
    for i in range(k):
        for j in range(k):
            d = i + j + 1
            if d <= k:
                u[i * n:(i + 1) * n, j * n:(j + 1) * n] = p.coeffs[d].entries
    w[:n, :n] = p.coeffs[0].entries
    for i in range(1, k):
        for j in range(1, k):
            d = i + j
            if d <= k:
                w[i * n:(i + 1) * n, j * n:(j + 1) * n] = -p.coeffs[d].entries
    return Pencil(HermitianMatrix(-w), HermitianMatrix(u))
