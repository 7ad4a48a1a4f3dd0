"""Shared fixtures and independent cross-check helpers for the test suite."""

import numpy as np
import scipy.linalg

from pencilslice import HermitianMatrix, Inertia5, Pencil


def random_congruence(n, rng, spread=(0.5, 2.0)):
    """Well-conditioned random invertible matrix (singular values in spread)."""
    q1, _ = np.linalg.qr(rng.standard_normal((n, n)))
    q2, _ = np.linalg.qr(rng.standard_normal((n, n)))
    return q1 @ np.diag(rng.uniform(*spread, size=n)) @ q2


def congruent(m: HermitianMatrix, x) -> HermitianMatrix:
    return HermitianMatrix.from_array(x.conj().T @ m.entries @ x)


def qz_inertia5(p: Pencil, real_tol=1e-8, zero_tol=1e-8, inf_tol=1e-10) -> Inertia5:
    """Classify all pencil eigenvalues via the QZ algorithm.

    Independent of the package's shift-invert oracle; intended for
    well-separated desk-scale spectra.
    """
    alpha, beta = scipy.linalg.eig(
        np.array(p.a.entries), np.array(p.b.entries), right=False,
        homogeneous_eigvals=True,
    )
    counts = {"pos": 0, "zero": 0, "neg": 0, "cplx": 0, "inf": 0}
    scale = max(1.0, float(np.abs(alpha).max()))
    for al, be in zip(alpha, beta):
        if abs(be) <= inf_tol * scale:
            counts["inf"] += 1
            continue
        lam = al / be
        if abs(lam.imag) > real_tol * (1 + abs(lam)):
            counts["cplx"] += 1
        elif abs(lam.real) <= zero_tol * (1 + abs(lam)):
            counts["zero"] += 1
        elif lam.real > 0:
            counts["pos"] += 1
        else:
            counts["neg"] += 1
    return Inertia5(counts["pos"], counts["zero"], counts["neg"], counts["cplx"], counts["inf"])


def qz_real_eigenvalues(p: Pencil, real_tol=1e-8, inf_tol=1e-10):
    """Finite real eigenvalues (with multiplicity) via QZ, ascending."""
    alpha, beta = scipy.linalg.eig(
        np.array(p.a.entries), np.array(p.b.entries), right=False,
        homogeneous_eigvals=True,
    )
    scale = max(1.0, float(np.abs(alpha).max()))
    vals = []
    for al, be in zip(alpha, beta):
        if abs(be) <= inf_tol * scale:
            continue
        lam = al / be
        if abs(lam.imag) <= real_tol * (1 + abs(lam)):
            vals.append(lam.real)
    return sorted(vals)


def deflate_common_kernel(p: Pencil) -> Pencil | None:
    """Drop coordinates where both diagonal matrices vanish exactly.

    Only valid for exactly diagonal pairs (the witness constructions); the
    deflated pencil is regular with the same eigenvalues and multiplicities.
    Returns None when nothing is left.
    """
    a, b = p.a.entries, p.b.entries
    assert np.array_equal(a, np.diag(np.diag(a)))
    assert np.array_equal(b, np.diag(np.diag(b)))
    da, db = np.diag(a).copy(), np.diag(b).copy()
    keep = ~((da == 0) & (db == 0))
    if not keep.any():
        return None
    return Pencil(
        HermitianMatrix(np.diag(da[keep])), HermitianMatrix(np.diag(db[keep]))
    )


def random_hyperbolic_quadratic(n, rng):
    """Quadratic with negative definite leading and positive definite trailing
    coefficient; every such quadratic has 2n real eigenvalues."""
    from pencilslice import MatrixPolynomial

    r = rng.standard_normal((n, n))
    s = rng.standard_normal((n, n))
    noise = rng.standard_normal((n, n))
    noise = noise + noise.T
    lead = HermitianMatrix.from_array(-(np.eye(n) + r @ r.T))
    trail = HermitianMatrix.from_array(np.eye(n) + s @ s.T)
    middle = HermitianMatrix.from_array(
        (1.0 + np.linalg.norm(noise, 2)) * np.eye(n) + noise
    )
    return MatrixPolynomial((trail, middle, lead))


def crossing_singular_pencil() -> Pencil:
    """3x3 singular pencil of normal rank 2 with an empty spectrum."""
    a = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
    b = np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    return Pencil(HermitianMatrix(a), HermitianMatrix(b))


def complementary_diag_pair() -> Pencil:
    """Regular pair diag(1, 0) vs diag(0, 1); eigenvalues 0 and infinity."""
    return Pencil(
        HermitianMatrix(np.diag([1.0, 0.0])), HermitianMatrix(np.diag([0.0, 1.0]))
    )
