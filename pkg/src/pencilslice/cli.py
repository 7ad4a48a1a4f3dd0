"""Command-line interface: inertia, bounds, interval counts, slicing, tracing,
witness construction, oracle classification, and matrix generators.

Exit codes: 0 success, 2 usage error, 3 input or validation failure,
4 numerical failure.  Pencils on disk are two Matrix Market files;
polynomials are a JSON manifest listing coefficient files in ascending
power order.
"""

from __future__ import annotations

import functools
import json
import math
import sys

import click
import numpy as np

from . import bounds as bounds_mod
from . import interval as interval_mod
from . import matrices as mat
from . import nep as nep_mod
from . import oracle as oracle_mod
from .eig import Inertia3, Tolerance, ldlt_inertia
from .errors import ConvergenceError, PencilSliceError, SingularPencilError

EXIT_VALIDATION = 3
EXIT_NUMERICAL = 4


def _handled(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except SingularPencilError as exc:
            click.echo(f"error: {exc}", err=True)
            click.echo(
                "hint: run `pencilslice bounds A B --rank R` for rank-aware bounds",
                err=True,
            )
            sys.exit(EXIT_VALIDATION)
        except ConvergenceError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_NUMERICAL)
        except (PencilSliceError, ValueError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_VALIDATION)

    return wrapper


def _tol_options(fn):
    fn = click.option(
        "--tol-rel", type=float, default=None,
        help="Relative zero threshold (default: 1e-12 * n).",
    )(fn)
    fn = click.option(
        "--tol-abs", type=float, default=0.0,
        help="Absolute zero floor (default: 0).",
    )(fn)
    return fn


def _format_option(fn):
    return click.option(
        "--format", "fmt", type=click.Choice(["json", "human"]), default="json",
        help="Output format.",
    )(fn)


def _make_tol(tol_rel, tol_abs, n) -> Tolerance | None:
    if tol_rel is None and not tol_abs:
        return None
    rel = tol_rel if tol_rel is not None else 1e-12 * n
    return Tolerance(rel, tol_abs)


def _parse_grid(spec: str) -> list:
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise click.UsageError("grid must be lo:hi:steps or a comma list")
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
        if steps < 2 or lo >= hi:
            raise click.UsageError("grid needs lo < hi and at least 2 steps")
        return list(np.linspace(lo, hi, steps))
    return [float(x) for x in spec.split(",")]


def _parse_triple(text: str) -> Inertia3:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 3:
        raise click.UsageError(f"expected an inertia triple p,z,m, got {text!r}")
    return Inertia3(*parts)


def _emit(data: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        for line in _human_lines(data, prefix=""):
            click.echo(line)


def _human_lines(data, prefix):
    if isinstance(data, dict):
        if set(data) == {"lower", "upper"}:
            yield f"{prefix}: [{data['lower']}, {data['upper']}]"
            return
        for key, value in data.items():
            label = f"{prefix}.{key}" if prefix else str(key)
            yield from _human_lines(value, label)
    elif isinstance(data, list):
        yield f"{prefix}: {data}"
    else:
        yield f"{prefix}: {data}"


@click.group()
def main():
    """Inertia-based eigenvalue counting for Hermitian pencils and polynomials."""


@main.command()
@click.argument("matrix", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--poly", type=click.Path(exists=True, dir_okay=False),
              help="Polynomial manifest; evaluated at --at.")
@click.option("--at", "at_t", type=float, default=None, help="Evaluation point for --poly.")
@_tol_options
@_format_option
@_handled
def inertia(matrix, poly, at_t, tol_rel, tol_abs, fmt):
    """Inertia (n_plus, n_zero, n_minus) of a matrix or polynomial evaluation."""
    if (matrix is None) == (poly is None):
        raise click.UsageError("provide exactly one input: MATRIX or --poly")
    if poly is not None:
        if at_t is None:
            raise click.UsageError("--poly requires --at T")
        m = nep_mod.poly_eval(mat.load_polynomial_manifest(poly), at_t)
    else:
        m = mat.load_matrix_market(matrix)
    result = ldlt_inertia(m, _make_tol(tol_rel, tol_abs, m.n))
    _emit(result.to_json_dict(), fmt)


@main.command(name="bounds")
@click.argument("a_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("b_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--rank", type=int, default=None, help="Normal rank for refined bounds.")
@click.option("--sharp-real", is_flag=True,
              help="Also report the sharp real-count lower bound (asserts 0 and "
                   "infinity are not eigenvalues).")
@_tol_options
@_format_option
@_handled
def bounds_cmd(a_file, b_file, rank, sharp_real, tol_rel, tol_abs, fmt):
    """Eigenvalue-count bounds for the pencil A - z*B."""
    p = mat.Pencil(mat.load_matrix_market(a_file), mat.load_matrix_market(b_file))
    tol = _make_tol(tol_rel, tol_abs, p.n)
    report = bounds_mod.pencil_bounds_of(p, tol=tol, rank=rank)
    data = report.to_json_dict()
    ib = ldlt_inertia(p.b, tol)
    if ib.is_definite:
        data["notes"] = data["notes"] + ["definite: exact"]
    if sharp_real:
        ia = ldlt_inertia(p.a, tol)
        data["sharp_real_lower"] = bounds_mod.real_lower_sharp(ia, ib)
    _emit(data, fmt)


@main.command()
@click.argument("a_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("b_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--a", "a_end", type=str, required=True, help="Left endpoint (or -inf).")
@click.option("--b", "b_end", type=str, required=True, help="Right endpoint (or inf).")
@click.option("--parity", is_flag=True, help="Require the parity set (errors when its "
                                             "preconditions fail).")
@_tol_options
@_format_option
@_handled
def count(a_file, b_file, a_end, b_end, parity, tol_rel, tol_abs, fmt):
    """Bounds for the number of eigenvalues in the interval (a, b)."""
    p = mat.Pencil(mat.load_matrix_market(a_file), mat.load_matrix_market(b_file))
    a_val, b_val = float(a_end), float(b_end)
    if a_val >= b_val:
        raise click.UsageError(f"need --a < --b, got {a_val} and {b_val}")
    tol = _make_tol(tol_rel, tol_abs, p.n)
    report = interval_mod.interval_bounds(p, a_val, b_val, tol)
    data = report.to_json_dict()
    if parity:
        data["parity_set"] = interval_mod.parity_counts(p, a_val, b_val, tol)
    _emit(data, fmt)


@main.command(name="slice")
@click.argument("a_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("b_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--grid", required=True, help="Grid lo:hi:steps or comma list.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@_tol_options
@_handled
def slice_cmd(a_file, b_file, grid, fmt, tol_rel, tol_abs):
    """Interval reports for every consecutive pair of grid points."""
    p = mat.Pencil(mat.load_matrix_market(a_file), mat.load_matrix_market(b_file))
    reports = interval_mod.slice_spectrum(p, _parse_grid(grid), _make_tol(tol_rel, tol_abs, p.n))
    if fmt == "csv":
        click.echo(interval_mod.slice_table_csv(reports), nl=False)
    else:
        click.echo(json.dumps([r.to_json_dict() for r in reports], indent=2))


@main.command()
@click.argument("a_file", required=False, type=click.Path(exists=True, dir_okay=False))
@click.argument("b_file", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--poly", type=click.Path(exists=True, dir_okay=False),
              help="Polynomial manifest to trace instead of a pencil.")
@click.option("--grid", required=True, help="Grid lo:hi:steps or comma list.")
@_handled
def trace(a_file, b_file, poly, grid):
    """CSV of sorted eigenvalue curves of A - t*B (or P(t)) over a grid."""
    if poly is not None:
        if a_file is not None or b_file is not None:
            raise click.UsageError("provide either a pencil or --poly, not both")
        problem = mat.load_polynomial_manifest(poly)
    else:
        if a_file is None or b_file is None:
            raise click.UsageError("provide two matrix files or --poly")
        problem = mat.Pencil(mat.load_matrix_market(a_file), mat.load_matrix_market(b_file))
    result = nep_mod.trace_eigenfunctions(problem, _parse_grid(grid))
    click.echo(result.to_csv(), nl=False)


@main.command()
@click.option("--ia", required=True, help="Inertia triple of the first matrix, p,z,m.")
@click.option("--ib", required=True, help="Inertia triple of the second matrix, p,z,m.")
@click.option("--target", required=True, type=click.Choice(bounds_mod.WITNESS_TARGETS))
@click.option("-o", "--output", required=True, help="Output prefix for the matrix files.")
@_format_option
@_handled
def witness(ia, ib, target, output, fmt):
    """Construct a pencil attaining the targeted lower bound; writes two files."""
    ia_t, ib_t = _parse_triple(ia), _parse_triple(ib)
    pair = bounds_mod.witness_pair(ia_t, ib_t, target)
    a_path, b_path = f"{output}_a.mtx", f"{output}_b.mtx"
    mat.save_matrix_market(pair.a, a_path)
    mat.save_matrix_market(pair.b, b_path)
    report = bounds_mod.pencil_bounds(ia_t, ib_t, ia_t.n)
    entry = {
        "plus_lower": report.n_plus.lower,
        "minus_lower": report.n_minus.lower,
        "zero_lower": report.n_zero.lower,
        "infinite_lower": report.n_infinite.lower,
        "complex_lower": report.n_complex.lower,
        "real_lower": abs(ib_t.signature),
    }[target]
    _emit({"a": a_path, "b": b_path, "target": target, "bound": entry}, fmt)


@main.command(name="oracle")
@click.argument("a_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("b_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--seed", type=int, default=0)
@_tol_options
@_format_option
@_handled
def oracle_cmd(a_file, b_file, seed, tol_rel, tol_abs, fmt):
    """Exact eigenvalue classification of a small regular pencil."""
    p = mat.Pencil(mat.load_matrix_market(a_file), mat.load_matrix_market(b_file))
    tol = _make_tol(tol_rel, tol_abs, p.n)
    records = oracle_mod.pencil_eigen_records(p, seed=seed, tol=tol)
    quintuple = oracle_mod.classify_inertia5(p, seed=seed, tol=tol)
    _emit(
        {
            "normal_rank": oracle_mod.normal_rank(p, seed=seed, tol=tol),
            "inertia5": quintuple.to_json_dict(),
            "records": [r.to_json_dict() for r in records],
        },
        fmt,
    )


@main.group()
def gen():
    """Generators for the built-in matrix families."""


@gen.command(name="random")
@click.option("--n", type=int, required=True)
@click.option("--seed", type=int, default=0)
@click.option("-o", "--output", required=True)
@_handled
def gen_random(n, seed, output):
    """Random symmetric matrix X + X^T, X standard normal."""
    mat.save_matrix_market(mat.gen_random_symmetric(n, seed), output)
    click.echo(output)


@gen.command(name="shifted")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True, help="Exact number of negative eigenvalues.")
@click.option("--seed", type=int, default=0)
@click.option("-o", "--output", required=True)
@_handled
def gen_shifted(n, k, seed, output):
    """Random symmetric matrix shifted to have exactly k negative eigenvalues."""
    m = mat.gen_shifted_inertia(mat.gen_random_symmetric(n, seed), k)
    mat.save_matrix_market(m, output)
    click.echo(output)


@gen.command(name="spring")
@click.option("--n", type=int, required=True)
@click.option("--beta", type=float, required=True)
@click.option("-o", "--output", required=True, help="Prefix for manifest and coefficients.")
@_handled
def gen_spring(n, beta, output):
    """Damped mass-spring quadratic polynomial (three coefficient files)."""
    manifest = mat.save_polynomial_manifest(mat.gen_spring_quadratic(n, beta), output)
    click.echo(str(manifest))


@gen.command(name="jordan")
@click.option("--n", type=int, required=True)
@click.option("--lam", type=float, required=True)
@click.option("-o", "--output", required=True, help="Prefix for the two matrix files.")
@_handled
def gen_jordan(n, lam, output):
    """Pencil with one eigenvalue of algebraic multiplicity n."""
    pair = mat.gen_jordan_pair(n, lam)
    a_path, b_path = f"{output}_a.mtx", f"{output}_b.mtx"
    mat.save_matrix_market(pair.a, a_path)
    mat.save_matrix_market(pair.b, b_path)
    click.echo(f"{a_path}\n{b_path}")
