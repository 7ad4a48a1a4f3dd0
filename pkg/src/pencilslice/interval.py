"""Eigenvalue counting on real intervals by spectrum slicing.

An interval (a, b) is mapped to (0, infinity) by the substitution
C = A - a*B, D = b*B - A, after which the pencil bound system applies with
positive eigenvalues of (C, D) counting eigenvalues of (A, B) inside the
interval.  With an indefinite B only bounds and parity information are
available; exact counts require a definite B.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace
from typing import Optional

from .bounds import Bound, BoundsReport, pencil_bounds
from .eig import Inertia3, Tolerance, ldlt_inertia, resolve_tolerance
from .errors import PreconditionError
from .matrices import HermitianMatrix, Pencil
from .oracle import normal_rank


@dataclass(frozen=True)
class IntervalReport:
    """Bounds on eigenvalue counts relative to one real interval.

    ``count_open_interval`` bounds the count inside (a, b);
    ``count_at_a``/``count_at_b`` bound the multiplicities at the endpoints;
    ``count_outside_or_infinite`` bounds the count in the complement of
    [a, b] including the infinite eigenvalue; ``closed_interval_lower`` is
    the two-evaluation lower bound for the closed interval [a, b].
    ``parity_set`` lists the admissible open-interval counts when the
    near-definite parity hypotheses hold, else None.  Endpoint flags are set
    when the endpoint is an eigenvalue (kernel larger than n - normal rank).
    """

    a: float
    b: float
    count_open_interval: Bound
    count_at_a: Bound
    count_at_b: Bound
    count_outside_or_infinite: Bound
    count_complex: Bound
    closed_interval_lower: int
    parity_set: Optional[tuple]
    endpoint_eigenvalue_flags: tuple
    inertias_used: tuple
    tolerance_used: Tolerance
    notes: tuple = ()

    def to_json_dict(self) -> dict:
        def _end(x):
            if math.isinf(x):
                return "inf" if x > 0 else "-inf"
            return x

        return {
            "a": _end(self.a),
            "b": _end(self.b),
            "count_open_interval": self.count_open_interval.to_json_dict(),
            "count_at_a": self.count_at_a.to_json_dict(),
            "count_at_b": self.count_at_b.to_json_dict(),
            "count_outside_or_infinite": self.count_outside_or_infinite.to_json_dict(),
            "count_complex": self.count_complex.to_json_dict(),
            "closed_interval_lower": self.closed_interval_lower,
            "parity_set": None if self.parity_set is None else list(self.parity_set),
            "endpoint_eigenvalue_flags": list(self.endpoint_eigenvalue_flags),
            "inertias_used": [i.to_json_dict() for i in self.inertias_used],
            "tolerance_used": self.tolerance_used.to_json_dict(),
            "notes": list(self.notes),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "IntervalReport":
        def _end(x):
            return float(x) if isinstance(x, str) else x

        return cls(
            a=_end(data["a"]),
            b=_end(data["b"]),
            count_open_interval=Bound(**data["count_open_interval"]),
            count_at_a=Bound(**data["count_at_a"]),
            count_at_b=Bound(**data["count_at_b"]),
            count_outside_or_infinite=Bound(**data["count_outside_or_infinite"]),
            count_complex=Bound(**data["count_complex"]),
            closed_interval_lower=data["closed_interval_lower"],
            parity_set=None if data["parity_set"] is None else tuple(data["parity_set"]),
            endpoint_eigenvalue_flags=tuple(data["endpoint_eigenvalue_flags"]),
            inertias_used=tuple(Inertia3(**i) for i in data["inertias_used"]),
            tolerance_used=Tolerance(**data["tolerance_used"]),
            notes=tuple(data.get("notes", ())),
        )


def mobius_pair(p: Pencil, a: float, b: float) -> Pencil:
    """Substituted pencil (A - a*B, b*B - A) mapping (a, b) to (0, infinity)."""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("interval endpoints must be finite")
    if a >= b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    c = HermitianMatrix(p.a.entries - a * p.b.entries)
    d = HermitianMatrix(b * p.b.entries - p.a.entries)
    return Pencil(c, d)


def _parity_set(ic: Inertia3, iab: Inertia3, n: int, k: int) -> tuple:
    low = abs(ic.n_plus - iab.n_plus)
    return tuple(c for c in range(low, low + 2 * k + 1, 2) if c <= n)


def _effective_parity_k(ib: Inertia3) -> int:
    # Negative-dominant B is handled through B -> -B, which leaves the
    # admissible counts unchanged; only k adapts.
    return ib.n - max(ib.n_plus, ib.n_minus)


def _build_report(
    ic: Inertia3,
    iab: Inertia3,
    n: int,
    a: float,
    b: float,
    r: int,
    ib: Inertia3,
    tol: Tolerance,
    notes: tuple = (),
) -> IntervalReport:
    # iab is the inertia of A - b*B; the substituted second matrix b*B - A
    # is its negation.
    idd = iab.flipped()
    rep = pencil_bounds(ic, idd, n, tol)
    closed_lower = max(abs(ic.n_plus - iab.n_plus), abs(ic.n_minus - iab.n_minus))
    flags = (ic.n_zero > n - r, iab.n_zero > n - r)
    parity = None
    k = _effective_parity_k(ib)
    if n >= 2 * k and ic.n_zero == iab.n_zero == n - r:
        parity = _parity_set(ic, iab, n, k)
    open_bound = rep.n_plus
    if parity:
        # The admissible-count range sharpens the interval count; with a
        # definite B it collapses to the exact classical value.
        lo = max(open_bound.lower, parity[0])
        hi = min(open_bound.upper, parity[-1])
        if lo <= hi:
            open_bound = Bound(lo, hi)
    return IntervalReport(
        a=a,
        b=b,
        count_open_interval=open_bound,
        count_at_a=rep.n_zero,
        count_at_b=rep.n_infinite,
        count_outside_or_infinite=rep.n_minus,
        count_complex=rep.n_complex,
        closed_interval_lower=closed_lower,
        parity_set=parity,
        endpoint_eigenvalue_flags=flags,
        inertias_used=(ic, idd),
        tolerance_used=tol,
        notes=notes,
    )


def interval_bounds(
    p: Pencil, a: float, b: float, tol: Tolerance | None = None
) -> IntervalReport:
    """Eigenvalue-count bounds for the interval (a, b) from two inertias.

    An infinite endpoint routes to :func:`half_line_bounds`.  With B positive
    definite the open-interval bounds collapse to the exact classical count.
    """
    if math.isinf(b) and not math.isinf(a):
        return half_line_bounds(p, a, "above", tol)
    if math.isinf(a) and not math.isinf(b):
        return half_line_bounds(p, b, "below", tol)
    if a >= b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    n = p.n
    tol = resolve_tolerance(tol, n)
    ic = ldlt_inertia(p.shifted(a), tol)
    iab = ldlt_inertia(p.shifted(b), tol)
    r = normal_rank(p, tol=tol)
    ib = ldlt_inertia(p.b, tol)
    return _build_report(ic, iab, n, a, b, r, ib, tol)


def half_line_bounds(
    p: Pencil, t: float, side: str, tol: Tolerance | None = None
) -> IntervalReport:
    """Bounds for the counts above or below a real point t.

    The shifted pencil (A - t*B, B) has positive eigenvalues exactly where
    the original has eigenvalues above t and negative ones below t.  The
    infinite point is reported at the unbounded end of the interval, and
    ``count_outside_or_infinite`` covers the complementary open half line
    together with infinity.
    """
    if side not in ("above", "below"):
        raise ValueError(f"side must be 'above' or 'below', got {side!r}")
    n = p.n
    tol = resolve_tolerance(tol, n)
    ic = ldlt_inertia(p.shifted(t), tol)
    ib = ldlt_inertia(p.b, tol)
    rep = pencil_bounds(ic, ib, n, tol)
    r = normal_rank(p, tol=tol)
    flag_t = ic.n_zero > n - r

    def _joined(x: Bound, y: Bound) -> Bound:
        return Bound(min(n, x.lower + y.lower), min(n, x.upper + y.upper))

    if side == "above":
        a, b = t, math.inf
        open_bound, at_a, at_b = rep.n_plus, rep.n_zero, rep.n_infinite
        outside = _joined(rep.n_minus, rep.n_infinite)
        flags = (flag_t, False)
    else:
        a, b = -math.inf, t
        open_bound, at_a, at_b = rep.n_minus, rep.n_infinite, rep.n_zero
        outside = _joined(rep.n_plus, rep.n_infinite)
        flags = (False, flag_t)
    return IntervalReport(
        a=a,
        b=b,
        count_open_interval=open_bound,
        count_at_a=at_a,
        count_at_b=at_b,
        count_outside_or_infinite=outside,
        count_complex=rep.n_complex,
        closed_interval_lower=open_bound.lower,
        parity_set=None,
        endpoint_eigenvalue_flags=flags,
        inertias_used=(ic, ib),
        tolerance_used=tol,
        notes=(f"half-line {side} t={t}",),
    )


def near_definite_bounds(
    ia: Inertia3,
    ib: Inertia3,
    n: int | None = None,
    tol: Tolerance | None = None,
) -> BoundsReport:
    """Tight bounds when B has only k non-positive eigenvalues.

    With k = n - n_plus(B) small enough that n - k >= |n_minus(A) - n_plus(A)|,
    the positive and negative counts stay within k of those of A and at least
    n - 2k eigenvalues are real.  If the hypothesis fails the general bounds
    are returned with a note.
    """
    ia, ib = Inertia3(*ia), Inertia3(*ib)
    if n is None:
        n = ia.n
    base = pencil_bounds(ia, ib, n, tol)
    k = n - ib.n_plus
    if n - k < abs(ia.n_minus - ia.n_plus):
        return replace(
            base,
            notes=base.notes
            + ("near-definite hypothesis violated (n - k < |n_minus(A) - n_plus(A)|); general bounds returned",),
        )

    def _clamp_pair(lo, hi):
        return Bound(max(0, lo), min(n, hi))

    prov = {key: list(val) for key, val in base.provenance.items()}
    prov["n_plus"] = ["n_plus(A) - k", "n_plus(A) + k"]
    prov["n_minus"] = ["n_minus(A) - k", "n_minus(A) + k"]
    prov["n_real"] = ["n - 2k", "n"]
    return replace(
        base,
        n_plus=_clamp_pair(ia.n_plus - k, ia.n_plus + k),
        n_minus=_clamp_pair(ia.n_minus - k, ia.n_minus + k),
        n_real=_clamp_pair(n - 2 * k, n),
        provenance=prov,
        notes=base.notes + (f"near-definite refinement with k={k}",),
    )


def parity_counts(
    p: Pencil,
    a: float,
    b: float,
    tol: Tolerance | None = None,
    k: int | None = None,
) -> list:
    """Admissible open-interval counts {L, L+2, ..., L+2k} for (a, b).

    Requires the dominant sign class of B to have at least n - k eigenvalues
    with n >= 2k, and both endpoints to avoid the spectrum; the true count
    (with algebraic multiplicities) then differs from
    L = |n_plus(A - a*B) - n_plus(A - b*B)| by an even amount at most 2k.
    ``k`` may be overridden by the caller, otherwise it is computed from the
    inertia of B.
    """
    if a >= b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    n = p.n
    tol = resolve_tolerance(tol, n)
    ib = ldlt_inertia(p.b, tol)
    k_eff = _effective_parity_k(ib) if k is None else int(k)
    if n < 2 * k_eff:
        raise PreconditionError(
            f"parity law requires n >= 2k; got n={n}, k={k_eff}"
        )
    ic = ldlt_inertia(p.shifted(a), tol)
    iab = ldlt_inertia(p.shifted(b), tol)
    r = normal_rank(p, tol=tol)
    if ic.n_zero != n - r or iab.n_zero != n - r:
        raise PreconditionError(
            "an interval endpoint is an eigenvalue of the pencil"
        )
    return list(_parity_set(ic, iab, n, k_eff))


def geometric_interval_bounds(
    p: Pencil,
    a: float,
    b: float,
    k: int | None = None,
    tol: Tolerance | None = None,
) -> tuple:
    """Bounds [L, L + 2k] valid when counting with geometric multiplicities."""
    counts = parity_counts(p, a, b, tol=tol, k=k)
    return (counts[0], counts[-1])


def slice_spectrum(
    p: Pencil, grid, tol: Tolerance | None = None
) -> list:
    """One IntervalReport per consecutive grid pair, factoring each point once."""
    grid = [float(t) for t in grid]
    if len(grid) < 2:
        raise ValueError("grid needs at least two points")
    if any(x >= y for x, y in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly ascending")
    n = p.n
    tol = resolve_tolerance(tol, n)
    inertias = [ldlt_inertia(p.shifted(t), tol) for t in grid]
    r = normal_rank(p, tol=tol)
    ib = ldlt_inertia(p.b, tol)
    return [
        _build_report(inertias[i], inertias[i + 1], n, grid[i], grid[i + 1], r, ib, tol)
        for i in range(len(grid) - 1)
    ]


def slice_table_csv(reports) -> str:
    """Render slice reports as CSV rows: a, b, lower, upper, parity_set."""
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["a", "b", "lower", "upper", "parity_set"])
    for rep in reports:
        parity = "" if rep.parity_set is None else " ".join(str(c) for c in rep.parity_set)
        writer.writerow(
            [repr(rep.a), repr(rep.b), rep.count_open_interval.lower, rep.count_open_interval.upper, parity]
        )
    return out.getvalue()
