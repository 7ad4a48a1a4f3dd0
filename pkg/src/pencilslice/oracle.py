"""Ground-truth eigenvalue classification for small regular Hermitian pencils.

The oracle reduces A - z*B to the ordinary eigenproblem of (A - sigma*B)^-1 B
for a well-conditioned real shift sigma, maps the eigenvalues back, clusters
them into algebraic multiplicities, and measures geometric multiplicities by
rank drop.  Intended for desk-scale validation; singular pencils are refused
(their eigenstructure needs staircase machinery that is out of scope here).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from .bounds import Inertia5
from .eig import Tolerance, general_eigenvalues, numeric_rank, resolve_tolerance
from .errors import ConvergenceError, SingularPencilError
from .matrices import Pencil

# Fixed irrational-looking shift ladder; scaled per pencil.  Deterministic
# and unlikely to align with the spectra of structured test matrices.
_SHIFT_LADDER = (
    0.317, -1.114, 2.503, -3.871, 5.429, -7.077, 9.643, -12.289, 15.901, -19.477,
)
_MIN_SHIFT_CONDITION = 1e-8  # required sigma_min / sigma_max of A - sigma*B

DEFAULT_MERGE_RADIUS = 1e-6


@dataclass(frozen=True)
class EigenRecord:
    """One eigenvalue of a pencil: value, multiplicities, and classification.

    ``value`` is a finite complex number, or None for the infinite
    eigenvalue.  ``classification`` is one of 'positive', 'zero', 'negative',
    'complex', 'infinite'.
    """

    value: Optional[complex]
    algebraic_mult: int
    geometric_mult: int
    classification: str

    def __post_init__(self):
        if self.geometric_mult > self.algebraic_mult:
            raise ValueError("geometric multiplicity exceeds algebraic multiplicity")

    def to_json_dict(self) -> dict:
        value = "inf" if self.value is None else {"re": self.value.real, "im": self.value.imag}
        return {
            "value": value,
            "algebraic_mult": self.algebraic_mult,
            "geometric_mult": self.geometric_mult,
            "classification": self.classification,
        }


def normal_rank(p: Pencil, seed: int = 0, tol: Tolerance | None = None) -> int:
    """Normal rank of the pencil: max rank of A - mu*B over random shifts mu.

    Probes three complex shifts drawn uniformly on a circle whose radius
    scales with the coefficient norms; a random shift realizes the maximal
    rank with probability one.  Deterministic per seed.
    """
    n = p.n
    tol = resolve_tolerance(tol, n)
    radius = 1.0 + p.a.inf_norm() / (1.0 + p.b.inf_norm())
    angles = np.random.default_rng(seed).uniform(0.0, 2.0 * np.pi, size=3)
    best = 0
    for theta in angles:
        mu = radius * complex(np.cos(theta), np.sin(theta))
        best = max(best, numeric_rank(p.a.entries - mu * p.b.entries, tol))
    return best


def _pick_shift(p: Pencil) -> tuple[float, np.ndarray]:
    scale = (1.0 + p.a.inf_norm()) / (1.0 + p.b.inf_norm())
    for base in _SHIFT_LADDER:
        sigma = base * scale
        shifted = p.a.entries - sigma * p.b.entries
        svals = np.linalg.svd(shifted, compute_uv=False)
        if svals[-1] > _MIN_SHIFT_CONDITION * max(1.0, svals[0]):
            return sigma, shifted
    raise ConvergenceError("no well-conditioned shift found on the ladder")


_MAX_DEFECTIVE_SIZE = 8  # multiplicity clusters are resolved up to this size


def _cluster(values: np.ndarray, base_radius: float) -> list:
    """Group eigenvalue approximations into multiplicity clusters.

    A candidate group of m values is accepted as one eigenvalue when its
    diameter is at most base_radius^(2/min(m, 8)) * (1 + |center|):
    defective eigenvalues of multiplicity m scatter like eps^(1/m) under
    rounding, so the admissible radius must grow with the group size.  For
    m = 2 this reduces to the plain pairwise merge radius; the exponent cap
    keeps the radius small on large spectra (defective blocks beyond the cap
    may come back split).  Groups failing the test are split between their
    two farthest members and re-examined.
    """
    values = list(values)
    total = len(values)
    if total == 0:
        return []

    def radius(m: int, center_abs: float) -> float:
        return base_radius ** (2.0 / min(m, _MAX_DEFECTIVE_SIZE)) * (1.0 + center_abs)

    # Connected components at the most permissive (largest-m) radius.
    parent = list(range(total))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    arr = np.asarray(values)
    explore = base_radius ** (2.0 / min(total, _MAX_DEFECTIVE_SIZE))
    gaps = np.abs(arr[:, None] - arr[None, :])
    limits = explore * (1.0 + 0.5 * (np.abs(arr)[:, None] + np.abs(arr)[None, :]))
    for i, j in zip(*np.nonzero(np.triu(gaps <= limits, k=1))):
        parent[find(int(i))] = find(int(j))
    components = {}
    for i in range(total):
        components.setdefault(find(i), []).append(values[i])

    clusters = []

    def handle(group):
        m = len(group)
        center = sum(group) / m
        diam = max((abs(x - y) for x in group for y in group), default=0.0)
        if m == 1 or diam <= radius(m, abs(center)):
            clusters.append((center, group))
            return
        seed_a, seed_b = max(
            ((x, y) for x in group for y in group), key=lambda pair: abs(pair[0] - pair[1])
        )
        near_a = [v for v in group if abs(v - seed_a) <= abs(v - seed_b)]
        near_b = [v for v in group if abs(v - seed_a) > abs(v - seed_b)]
        handle(near_a)
        handle(near_b)

    for group in components.values():
        handle(group)
    return clusters


def _classify(center: complex, tol: Tolerance) -> tuple[complex, str]:
    scale = 1.0 + abs(center)
    if abs(center.imag) > tol.relative_zero * scale + tol.absolute_floor:
        return center, "complex"
    value = complex(center.real, 0.0)
    if abs(center.real) <= tol.relative_zero * scale + tol.absolute_floor:
        return 0j, "zero"
    return value, "positive" if center.real > 0 else "negative"


def pencil_eigen_records(
    p: Pencil,
    seed: int = 0,
    tol: Tolerance | None = None,
    merge_radius: float = DEFAULT_MERGE_RADIUS,
) -> list:
    """All eigenvalues of a regular pencil with multiplicities and classes.

    Algebraic multiplicity is the cluster cardinality after shift-invert;
    geometric multiplicity is the rank drop n - rank(A - lambda*B) at the
    cluster center (n - rank(B) at infinity), evaluated with a threshold
    widened by the cluster diameter.  Clustering can over-merge genuinely
    close simple eigenvalues; spectra separated beyond ``merge_radius`` are
    classified exactly.
    """
    n = p.n
    tol = resolve_tolerance(tol, n)
    r = normal_rank(p, seed=seed, tol=tol)
    if r < n:
        raise SingularPencilError(
            f"pencil is singular (normal rank {r} < {n}); eigen records are "
            f"undefined, use rank-aware bounds instead"
        )
    sigma, shifted = _pick_shift(p)
    transform = scipy.linalg.solve(shifted, np.array(p.b.entries))
    mus = general_eigenvalues(transform)

    transform_scale = float(np.abs(transform).sum(axis=1).max())
    mu_threshold = tol.zero_threshold(transform_scale)
    finite_mus = mus[np.abs(mus) > mu_threshold]
    n_infinite = int(len(mus) - len(finite_mus))

    records = []
    if n_infinite:
        geometric = 1 if n_infinite == 1 else n - numeric_rank(p.b, tol)
        records.append(
            EigenRecord(
                value=None,
                algebraic_mult=n_infinite,
                geometric_mult=max(1, min(geometric, n_infinite)),
                classification="infinite",
            )
        )

    lambdas = sigma + 1.0 / finite_mus
    b_scale = p.b.inf_norm()
    for center, members in _cluster(lambdas, merge_radius):
        mult = len(members)
        value, kind = _classify(complex(center), tol)
        if kind != "complex":
            value = complex(value.real, 0.0)
        if mult == 1:
            geometric = 1
        else:
            diam = max(abs(x - y) for x in members for y in members)
            resolvent = p.a.entries - value * p.b.entries
            svals = np.linalg.svd(resolvent, compute_uv=False)
            threshold = tol.rank_threshold(float(svals[0]), n) + diam * (1.0 + b_scale)
            geometric = n - int((svals > threshold).sum())
            geometric = max(1, min(geometric, mult))
        records.append(
            EigenRecord(
                value=value,
                algebraic_mult=mult,
                geometric_mult=geometric,
                classification=kind,
            )
        )

    def _order(rec: EigenRecord):
        if rec.value is None:
            return (1, 0.0, 0.0)
        return (0, rec.value.real, rec.value.imag)

    return sorted(records, key=_order)


def classify_inertia5(
    p: Pencil,
    seed: int = 0,
    tol: Tolerance | None = None,
    merge_radius: float = DEFAULT_MERGE_RADIUS,
) -> Inertia5:
    """Pencil inertia quintuple: algebraic multiplicity totals per class."""
    totals = {"positive": 0, "zero": 0, "negative": 0, "complex": 0, "infinite": 0}
    for rec in pencil_eigen_records(p, seed=seed, tol=tol, merge_radius=merge_radius):
        totals[rec.classification] += rec.algebraic_mult
    return Inertia5(
        n_plus=totals["positive"],
        n_zero=totals["zero"],
        n_minus=totals["negative"],
        n_complex=totals["complex"],
        n_infinite=totals["infinite"],
    )
