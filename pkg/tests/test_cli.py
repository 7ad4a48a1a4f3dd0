import json

import numpy as np
import pytest
from click.testing import CliRunner

from conftest import crossing_singular_pencil
from pencilslice import (
    HermitianMatrix,
    gen_random_symmetric,
    gen_shifted_inertia,
    gen_spring_quadratic,
    load_matrix_market,
    load_polynomial_manifest,
    save_matrix_market,
    save_polynomial_manifest,
)
from pencilslice.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def _write(tmp_path, name, matrix):
    path = tmp_path / name
    save_matrix_market(matrix, path)
    return str(path)


def _write_pair(tmp_path, ka, kb, n=6, seed=0):
    a = gen_shifted_inertia(gen_random_symmetric(n, seed), ka)
    b = gen_shifted_inertia(gen_random_symmetric(n, seed + 1000), kb)
    return _write(tmp_path, "a.mtx", a), _write(tmp_path, "b.mtx", b)


# ---------------------------------------------------------------------------
# inertia
# ---------------------------------------------------------------------------

def test_inertia_diagonal(runner, tmp_path):
    path = _write(tmp_path, "m.mtx", HermitianMatrix(np.diag([1.0, -1.0])))
    result = runner.invoke(main, ["inertia", path])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"n_plus": 1, "n_zero": 0, "n_minus": 1}


def test_inertia_zero_matrix(runner, tmp_path):
    path = _write(tmp_path, "z.mtx", HermitianMatrix(np.zeros((3, 3))))
    result = runner.invoke(main, ["inertia", path])
    assert json.loads(result.output) == {"n_plus": 0, "n_zero": 3, "n_minus": 0}


def test_inertia_polynomial_evaluation(runner, tmp_path):
    manifest = save_polynomial_manifest(gen_spring_quadratic(7, 0.3), tmp_path / "spring")
    result = runner.invoke(main, ["inertia", "--poly", str(manifest), "--at", "-13"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"n_plus": 7, "n_zero": 0, "n_minus": 0}


def test_inertia_requires_exactly_one_source(runner, tmp_path):
    path = _write(tmp_path, "m.mtx", HermitianMatrix(np.eye(2)))
    manifest = save_polynomial_manifest(gen_spring_quadratic(3, 1.0), tmp_path / "p")
    assert runner.invoke(main, ["inertia"]).exit_code == 2
    assert runner.invoke(main, ["inertia", path, "--poly", str(manifest), "--at", "0"]).exit_code == 2


def test_inertia_rejects_general_file(runner, tmp_path):
    path = tmp_path / "gen.mtx"
    path.write_text("%%MatrixMarket matrix array real general\n2 2\n1\n0\n0\n-1\n")
    result = runner.invoke(main, ["inertia", str(path)])
    assert result.exit_code == 3
    assert "symmetric" in result.output or "general" in result.output


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def test_bounds_indefinite_pair(runner, tmp_path):
    a_path, b_path = _write_pair(tmp_path, ka=3, kb=1)
    result = runner.invoke(main, ["bounds", a_path, b_path])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["n_minus"]["lower"] == 2
    assert data["aux"]["N_pm"] == 8


def test_bounds_definite_note_and_sharp_real(runner, tmp_path):
    a_path, b_path = _write_pair(tmp_path, ka=2, kb=0)
    result = runner.invoke(main, ["bounds", a_path, b_path, "--sharp-real"])
    data = json.loads(result.output)
    assert "definite: exact" in data["notes"]
    assert data["sharp_real_lower"] == 6
    assert data["n_plus"]["lower"] == data["n_plus"]["upper"] == 4


def test_bounds_rank_tightens(runner, tmp_path):
    p = crossing_singular_pencil()
    a_path = _write(tmp_path, "a.mtx", p.a)
    b_path = _write(tmp_path, "b.mtx", p.b)
    plain = json.loads(runner.invoke(main, ["bounds", a_path, b_path]).output)
    ranked = json.loads(
        runner.invoke(main, ["bounds", a_path, b_path, "--rank", "2"]).output
    )
    assert ranked["rank_used"] == 2
    assert ranked["n_zero"]["lower"] >= plain["n_zero"]["lower"]
    for name in ("n_plus", "n_zero", "n_minus", "n_complex", "n_infinite"):
        assert ranked[name]["lower"] <= 0 <= ranked[name]["upper"]


def test_bounds_human_format(runner, tmp_path):
    a_path, b_path = _write_pair(tmp_path, ka=3, kb=1)
    result = runner.invoke(main, ["bounds", a_path, b_path, "--format", "human"])
    assert result.exit_code == 0
    assert "N_pp" in result.output
    assert "n_minus: [2," in result.output


# ---------------------------------------------------------------------------
# count / slice / trace
# ---------------------------------------------------------------------------

def test_count_definite_weight(runner, tmp_path):
    a_path, b_path = _write_pair(tmp_path, ka=2, kb=0)
    result = runner.invoke(main, ["count", a_path, b_path, "--a", "-1", "--b", "1"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["count_open_interval"]["lower"] == data["count_open_interval"]["upper"]


def test_count_usage_error_on_reversed_interval(runner, tmp_path):
    a_path, b_path = _write_pair(tmp_path, ka=2, kb=0)
    result = runner.invoke(main, ["count", a_path, b_path, "--a", "1", "--b", "-1"])
    assert result.exit_code == 2


def test_count_parity_upper_half_line(runner, tmp_path):
    a = gen_shifted_inertia(gen_random_symmetric(7, 0), 2)
    b = gen_shifted_inertia(gen_random_symmetric(7, 1000), 1)
    a_path = _write(tmp_path, "a.mtx", a)
    b_path = _write(tmp_path, "b.mtx", b)
    result = runner.invoke(
        main, ["count", a_path, b_path, "--a", "-0.5", "--b", "60", "--parity"]
    )
    assert result.exit_code == 0
    assert json.loads(result.output)["parity_set"] == [5, 7]


def test_count_infinite_endpoint(runner, tmp_path):
    a_path, b_path = _write_pair(tmp_path, ka=3, kb=1)
    result = runner.invoke(main, ["count", a_path, b_path, "--a", "0", "--b", "inf"])
    assert result.exit_code == 0
    assert json.loads(result.output)["b"] == "inf"


def test_slice_csv(runner, tmp_path):
    a_path, b_path = _write_pair(tmp_path, ka=2, kb=0)
    result = runner.invoke(
        main, ["slice", a_path, b_path, "--grid", "-3:3:4"]
    )
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "a,b,lower,upper,parity_set"
    assert len(lines) == 4


def test_trace_pencil_rows_and_columns(runner, tmp_path):
    a_path, b_path = _write_pair(tmp_path, ka=2, kb=0, n=4)
    result = runner.invoke(main, ["trace", a_path, b_path, "--grid", "-1:1:3"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "t,lambda_1,lambda_2,lambda_3,lambda_4"
    assert len(lines) == 4


def test_trace_polynomial(runner, tmp_path):
    manifest = save_polynomial_manifest(gen_spring_quadratic(3, 0.4), tmp_path / "p")
    result = runner.invoke(main, ["trace", "--poly", str(manifest), "--grid", "-2,-1,0"])
    assert result.exit_code == 0
    assert len(result.output.strip().splitlines()) == 4


# ---------------------------------------------------------------------------
# witness / oracle pipeline
# ---------------------------------------------------------------------------

def test_witness_then_oracle_pipeline(runner, tmp_path):
    prefix = str(tmp_path / "wit")
    result = runner.invoke(
        main,
        ["witness", "--ia", "3,0,3", "--ib", "5,0,1", "--target", "minus_lower", "-o", prefix],
    )
    assert result.exit_code == 0
    info = json.loads(result.output)
    assert info["bound"] == 2
    oracle_out = runner.invoke(main, ["oracle", info["a"], info["b"]])
    assert oracle_out.exit_code == 0
    data = json.loads(oracle_out.output)
    assert data["inertia5"]["n_minus"] == 2
    assert data["normal_rank"] == 6


def test_witness_trivial_target_fails_cleanly(runner, tmp_path):
    result = runner.invoke(
        main,
        ["witness", "--ia", "1,1,0", "--ib", "1,1,0", "--target", "zero_lower",
         "-o", str(tmp_path / "w")],
    )
    assert result.exit_code == 3
    assert "trivial" in result.output


def test_oracle_refuses_singular_pencil_with_hint(runner, tmp_path):
    p = crossing_singular_pencil()
    a_path = _write(tmp_path, "a.mtx", p.a)
    b_path = _write(tmp_path, "b.mtx", p.b)
    result = runner.invoke(main, ["oracle", a_path, b_path])
    assert result.exit_code == 3
    assert "singular" in result.output
    assert "bounds" in result.output and "--rank" in result.output


def test_oracle_deterministic(runner, tmp_path):
    a_path, b_path = _write_pair(tmp_path, ka=3, kb=2)
    first = runner.invoke(main, ["oracle", a_path, b_path, "--seed", "11"])
    second = runner.invoke(main, ["oracle", a_path, b_path, "--seed", "11"])
    assert first.output == second.output


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def test_gen_random_roundtrip(runner, tmp_path):
    out = str(tmp_path / "r.mtx")
    result = runner.invoke(main, ["gen", "random", "--n", "5", "--seed", "7", "-o", out])
    assert result.exit_code == 0
    loaded = load_matrix_market(out)
    np.testing.assert_allclose(loaded.entries, gen_random_symmetric(5, 7).entries)


def test_gen_shifted_inertia_file(runner, tmp_path):
    out = str(tmp_path / "s.mtx")
    runner.invoke(main, ["gen", "shifted", "--n", "6", "--k", "2", "--seed", "3", "-o", out])
    result = runner.invoke(main, ["inertia", out])
    assert json.loads(result.output) == {"n_plus": 4, "n_zero": 0, "n_minus": 2}


def test_gen_spring_triple_on_disk(runner, tmp_path):
    prefix = str(tmp_path / "spring")
    result = runner.invoke(main, ["gen", "spring", "--n", "5", "--beta", "0.3", "-o", prefix])
    assert result.exit_code == 0
    manifest = result.output.strip()
    p = load_polynomial_manifest(manifest)
    assert p.degree == 2 and p.n == 5
    for i in range(3):
        assert (tmp_path / f"spring_c{i}.mtx").exists()


def test_gen_jordan_pair_files(runner, tmp_path):
    prefix = str(tmp_path / "j")
    result = runner.invoke(main, ["gen", "jordan", "--n", "6", "--lam", "1", "-o", prefix])
    assert result.exit_code == 0
    a_path, b_path = result.output.strip().splitlines()
    oracle_out = runner.invoke(main, ["oracle", a_path, b_path])
    data = json.loads(oracle_out.output)
    assert data["records"][0]["algebraic_mult"] == 6
