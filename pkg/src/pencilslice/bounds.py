"""Congruence-invariant eigenvalue-count bounds for Hermitian pencils.

The bound system consumes only the inertias of the two coefficient matrices,
so every output is invariant under separate congruence transformations of
the coefficients.  Witness constructions produce diagonal pairs attaining
each nontrivial lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple, Optional

import numpy as np

from .eig import Inertia3, Tolerance, ldlt_inertia, resolve_tolerance
from .errors import PreconditionError, TrivialBoundError
from .matrices import HermitianMatrix, Pencil


class Inertia5(NamedTuple):
    """Counts of positive, zero, negative, complex, and infinite pencil eigenvalues."""

    n_plus: int
    n_zero: int
    n_minus: int
    n_complex: int
    n_infinite: int

    @property
    def n_real(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    def to_json_dict(self) -> dict:
        return dict(self._asdict())


class Bound(NamedTuple):
    lower: int
    upper: int

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper

    def to_json_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper}


ENTRY_NAMES = ("n_plus", "n_zero", "n_minus", "n_complex", "n_infinite", "n_real")

WITNESS_TARGETS = (
    "plus_lower",
    "minus_lower",
    "zero_lower",
    "infinite_lower",
    "complex_lower",
    "real_lower",
)


@dataclass(frozen=True)
class BoundsReport:
    """Lower/upper bounds for each pencil eigenvalue class, with provenance.

    ``provenance[entry]`` records which formula produced each side of the
    interval, in terms of the auxiliary counts carried by the report.
    """

    n: int
    n_plus: Bound
    n_zero: Bound
    n_minus: Bound
    n_complex: Bound
    n_infinite: Bound
    n_real: Bound
    n_pp: int
    n_mm: int
    n_pm: int
    n_mp: int
    delta: int
    N_pp: int
    N_pm: int
    tolerance_used: Tolerance
    rank_used: Optional[int] = None
    provenance: dict = None
    notes: tuple = ()

    def __post_init__(self):
        for name in ENTRY_NAMES:
            bound = getattr(self, name)
            if not 0 <= bound.lower <= bound.upper <= self.n:
                raise ValueError(f"inconsistent bound for {name}: {bound}")

    def entry(self, name: str) -> Bound:
        if name not in ENTRY_NAMES:
            raise ValueError(f"unknown bound entry {name!r}")
        return getattr(self, name)

    def contains(self, q: Inertia5) -> bool:
        """Whether a concrete pencil inertia lies inside every interval."""
        return (
            self.n_plus.contains(q.n_plus)
            and self.n_zero.contains(q.n_zero)
            and self.n_minus.contains(q.n_minus)
            and self.n_complex.contains(q.n_complex)
            and self.n_infinite.contains(q.n_infinite)
            and self.n_real.contains(q.n_real)
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            **{name: getattr(self, name).to_json_dict() for name in ENTRY_NAMES},
            "aux": {
                "n_pp": self.n_pp,
                "n_mm": self.n_mm,
                "n_pm": self.n_pm,
                "n_mp": self.n_mp,
                "delta": self.delta,
                "N_pp": self.N_pp,
                "N_pm": self.N_pm,
            },
            "tolerance_used": self.tolerance_used.to_json_dict(),
            "rank_used": self.rank_used,
            "provenance": self.provenance,
            "notes": list(self.notes),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BoundsReport":
        aux = data["aux"]
        return cls(
            n=data["n"],
            **{name: Bound(**data[name]) for name in ENTRY_NAMES},
            n_pp=aux["n_pp"],
            n_mm=aux["n_mm"],
            n_pm=aux["n_pm"],
            n_mp=aux["n_mp"],
            delta=aux["delta"],
            N_pp=aux["N_pp"],
            N_pm=aux["N_pm"],
            tolerance_used=Tolerance(**data["tolerance_used"]),
            rank_used=data.get("rank_used"),
            provenance=data.get("provenance"),
            notes=tuple(data.get("notes", ())),
        )


def _validate_pair(ia: Inertia3, ib: Inertia3, n: int | None) -> tuple[Inertia3, Inertia3, int]:
    ia, ib = Inertia3(*ia), Inertia3(*ib)
    if min(ia) < 0 or min(ib) < 0:
        raise ValueError("inertia counts must be nonnegative")
    if n is None:
        n = ia.n
    if ia.n != n or ib.n != n:
        raise ValueError(
            f"inertia triples sum to {ia.n} and {ib.n}, inconsistent with n={n}"
        )
    if n < 1:
        raise ValueError("dimension must be at least 1")
    return ia, ib, n


def _clamped(lower, lower_src, upper, upper_src, n) -> tuple[Bound, tuple[str, str]]:
    if lower < 0:
        lower, lower_src = 0, "clamp 0"
    if upper > n:
        upper, upper_src = n, "clamp n"
    bound = Bound(int(lower), int(upper))
    if bound.lower > bound.upper:
        raise ValueError(f"empty bound interval {bound}")
    return bound, (lower_src, upper_src)


def pencil_bounds(
    ia: Inertia3,
    ib: Inertia3,
    n: int | None = None,
    tol: Tolerance | None = None,
) -> BoundsReport:
    """Eigenvalue-count bounds for a Hermitian pencil from coefficient inertias.

    With ``ia = inertia(A)`` and ``ib = inertia(B)``, the report bounds the
    number of positive, zero, negative, complex, and infinite eigenvalues of
    ``A - z*B``, and the number ``n_real`` of finite real eigenvalues; every
    interval is clamped to [0, n].  When B is definite the real-class bounds
    collapse to the classical equalities with ``ia``.
    """
    ia, ib, n = _validate_pair(ia, ib, n)
    tol = resolve_tolerance(tol, n)

    n_pp = ia.n_plus + ib.n_plus
    n_mm = ia.n_minus + ib.n_minus
    n_pm = ia.n_plus + ib.n_minus
    n_mp = ia.n_minus + ib.n_plus
    delta = ia.n_zero - ib.n_zero
    cap_pp = max(n_pp, n_mm)
    cap_pm = max(n_pm, n_mp)

    bounds = {}
    prov = {}
    bounds["n_plus"], prov["n_plus"] = _clamped(
        cap_pp - n, "N_pp - n",
        2 * n - abs(delta) - cap_pm, "2n - |delta| - N_pm", n,
    )
    bounds["n_zero"], prov["n_zero"] = _clamped(
        delta, "delta",
        3 * n - cap_pp - cap_pm - ib.n_zero, "3n - N_pp - N_pm - n_zero(B)", n,
    )
    bounds["n_minus"], prov["n_minus"] = _clamped(
        cap_pm - n, "N_pm - n",
        2 * n - abs(delta) - cap_pp, "2n - |delta| - N_pp", n,
    )
    bounds["n_complex"], prov["n_complex"] = _clamped(
        0, "0",
        2 * min(ia.n_plus, ia.n_minus, ib.n_plus, ib.n_minus),
        "2 min(n_plus(A), n_minus(A), n_plus(B), n_minus(B))", n,
    )
    bounds["n_infinite"], prov["n_infinite"] = _clamped(
        -delta, "-delta",
        3 * n - cap_pp - cap_pm - ia.n_zero, "3n - N_pp - N_pm - n_zero(A)", n,
    )

    real_lo_candidates = [
        (abs(ib.signature), "|s(B)|"),
        (cap_pp + cap_pm - 2 * n + delta, "N_pp + N_pm - 2n + delta"),
    ]
    real_lo, real_lo_src = max(real_lo_candidates, key=lambda c: c[0])
    real_hi_candidates = [
        (n - ib.n_zero, "n - n_zero(B)"),
        (
            bounds["n_plus"].upper + bounds["n_zero"].upper + bounds["n_minus"].upper,
            "sum of real-entry uppers",
        ),
    ]
    real_hi, real_hi_src = min(real_hi_candidates, key=lambda c: c[0])
    bounds["n_real"], prov["n_real"] = _clamped(real_lo, real_lo_src, real_hi, real_hi_src, n)

    return BoundsReport(
        n=n,
        **bounds,
        n_pp=n_pp,
        n_mm=n_mm,
        n_pm=n_pm,
        n_mp=n_mp,
        delta=delta,
        N_pp=cap_pp,
        N_pm=cap_pm,
        tolerance_used=tol,
        provenance={k: list(v) for k, v in prov.items()},
    )


def pencil_bounds_with_rank(
    ia: Inertia3,
    ib: Inertia3,
    n: int | None = None,
    rank: int | None = None,
    tol: Tolerance | None = None,
) -> BoundsReport:
    """Bounds refined with the pencil's normal rank r.

    Intersects the plain bounds with the rank-aware inequalities; for a
    singular pencil (r < n) the refined upper bounds on the positive and
    negative counts are strictly tighter before clamping.
    """
    ia, ib, n = _validate_pair(ia, ib, n)
    if rank is None:
        raise ValueError("rank is required; use pencil_bounds when it is unknown")
    r = int(rank)
    r_min = max(n - ia.n_zero, n - ib.n_zero)
    if not r_min <= r <= n:
        raise PreconditionError(
            f"normal rank {r} outside feasible range [{r_min}, {n}]"
        )
    base = pencil_bounds(ia, ib, n, tol)
    prov = {k: list(v) for k, v in base.provenance.items()}
    updates = {}

    def tighten_upper(name, value, src):
        cur = base.entry(name)
        if value < cur.upper:
            new_upper = max(value, cur.lower)  # intervals stay nonempty
            updates[name] = Bound(cur.lower, int(new_upper))
            prov[name][1] = src

    def tighten_lower(name, value, src):
        cur = updates.get(name, base.entry(name))
        if value > cur.lower:
            updates[name] = Bound(int(min(value, cur.upper)), cur.upper)
            prov[name][0] = src

    slack = 3 * n - r - ia.n_zero - ib.n_zero
    tighten_upper("n_plus", slack - base.N_pm, "rank: 3n - r - n_zero(A) - n_zero(B) - N_pm")
    tighten_upper("n_minus", slack - base.N_pp, "rank: 3n - r - n_zero(A) - n_zero(B) - N_pp")
    tighten_lower("n_zero", ia.n_zero - n + r, "rank: n_zero(A) - n + r")
    tighten_lower("n_infinite", ib.n_zero - n + r, "rank: n_zero(B) - n + r")

    return replace(base, rank_used=r, provenance=prov, **updates)


def pencil_bounds_of(
    p: Pencil,
    tol: Tolerance | None = None,
    rank: int | None = None,
) -> BoundsReport:
    """Bounds computed directly from a pencil's matrices via LDL^T inertias."""
    ia = ldlt_inertia(p.a, tol)
    ib = ldlt_inertia(p.b, tol)
    if rank is None:
        return pencil_bounds(ia, ib, p.n, tol)
    return pencil_bounds_with_rank(ia, ib, p.n, rank, tol)


def real_lower_sharp(ia: Inertia3, ib: Inertia3) -> int:
    """Sharp lower bound on the finite real eigenvalue count.

    Valid under the caller's assertion that neither 0 nor infinity is an
    eigenvalue of the pencil.  Dominates |s(B)| by the triangle inequality.
    """
    ia, ib, _ = _validate_pair(ia, ib, None)
    return abs(ib.n_plus - ia.n_minus) + abs(ia.n_minus - ib.n_minus)


# ---------------------------------------------------------------------------
# Witness constructions
# ---------------------------------------------------------------------------

def _pencil_from_diags(avals, bvals) -> Pencil:
    a = HermitianMatrix(np.diag(np.asarray(avals, dtype=float)))
    b = HermitianMatrix(np.diag(np.asarray(bvals, dtype=float)))
    return Pencil(a, b)


def _superposition_pair(ia: Inertia3, ib: Inertia3) -> Pencil:
    """Diagonal pair whose positive eigenvalue count is max(N_pp - n, 0).

    Normalizes so the positive blocks of the two matrices overlap in exactly
    max(N_pp - n, 0) coordinates and no negative blocks overlap, then undoes
    the normalization.  Also attains zero complex eigenvalues.
    """
    flip = (ia.n_plus + ib.n_plus) < (ia.n_minus + ib.n_minus)
    ja, jb = (ia.flipped(), ib.flipped()) if flip else (ia, ib)
    swap = ja.n_plus < jb.n_minus
    if swap:
        ja, jb = jb, ja
    avals = [1.0] * ja.n_plus + [-1.0] * ja.n_minus + [0.0] * ja.n_zero
    bvals = [-1.0] * jb.n_minus + [0.0] * jb.n_zero + [1.0] * jb.n_plus
    if swap:
        avals, bvals = bvals, avals
    if flip:
        avals = [-v for v in avals]
        bvals = [-v for v in bvals]
    return _pencil_from_diags(avals, bvals)


def _aligned_kernel_pair(ia: Inertia3, ib: Inertia3) -> Pencil:
    """Diagonal pair with kernels aligned from the top-left corner.

    Attains max(delta, 0) zero eigenvalues and max(-delta, 0) infinite ones.
    Singular whenever both kernels are nonempty (forced: a regular pencil
    always has at least n_zero(A) zero eigenvalues).
    """
    avals = [0.0] * ia.n_zero + [1.0] * ia.n_plus + [-1.0] * ia.n_minus
    bvals = [0.0] * ib.n_zero + [1.0] * ib.n_plus + [-1.0] * ib.n_minus
    return _pencil_from_diags(avals, bvals)


def _balanced_real_pair(ib: Inertia3) -> Pencil:
    """Block-diagonal pair with exactly |s(B)| real eigenvalues.

    Pairs p = min(n_plus(B), n_minus(B)) antidiagonal 2x2 blocks in A with
    diag(1, -1) blocks in B (each pair contributes two complex eigenvalues),
    leaves |s(B)| real eigenvalues against the definite remainder of B, and
    sends the kernel of B to infinite eigenvalues.  Only the B-side inertia
    is prescribed; the diagonal fillers in A are arbitrary nonunit values.
    """
    n = ib.n
    p = min(ib.n_plus, ib.n_minus)
    s = ib.signature
    a = np.zeros((n, n))
    b = np.zeros((n, n))
    for j in range(p):
        a[2 * j, 2 * j + 1] = a[2 * j + 1, 2 * j] = 1.0
        b[2 * j, 2 * j] = 1.0
        b[2 * j + 1, 2 * j + 1] = -1.0
    off = 2 * p
    for j in range(abs(s)):
        a[off + j, off + j] = float(j + 2)
        b[off + j, off + j] = 1.0 if s > 0 else -1.0
    off += abs(s)
    for j in range(ib.n_zero):
        a[off + j, off + j] = -float(j + 2)
    return Pencil(HermitianMatrix(a), HermitianMatrix(b))


def witness_pair(ia: Inertia3, ib: Inertia3, target: str) -> Pencil:
    """Pencil with prescribed coefficient inertias attaining a lower bound.

    ``target`` selects which lower bound is witnessed.  For ``real_lower``
    only ``ib`` is prescribed (no inertia information on the first matrix is
    used by that bound).  Raises TrivialBoundError when the targeted bound is
    trivial, in which case no witness is defined.
    """
    ia, ib, n = _validate_pair(ia, ib, None)
    if target not in WITNESS_TARGETS:
        raise ValueError(f"unknown witness target {target!r}; expected one of {WITNESS_TARGETS}")

    delta = ia.n_zero - ib.n_zero
    if target == "plus_lower":
        raw = max(ia.n_plus + ib.n_plus, ia.n_minus + ib.n_minus) - n
        if raw < 0:
            raise TrivialBoundError(f"positive-count lower bound {raw} is trivial")
        return _superposition_pair(ia, ib)
    if target == "minus_lower":
        raw = max(ia.n_plus + ib.n_minus, ia.n_minus + ib.n_plus) - n
        if raw < 0:
            raise TrivialBoundError(f"negative-count lower bound {raw} is trivial")
        core = _superposition_pair(ia, ib.flipped())
        return Pencil(core.a, core.b.negated())
    if target == "zero_lower":
        if delta <= 0:
            raise TrivialBoundError(f"zero-count lower bound {delta} is trivial")
        return _aligned_kernel_pair(ia, ib)
    if target == "infinite_lower":
        if -delta <= 0:
            raise TrivialBoundError(f"infinite-count lower bound {-delta} is trivial")
        return _aligned_kernel_pair(ia, ib)
    if target == "complex_lower":
        return _superposition_pair(ia, ib)
    return _balanced_real_pair(ib)
