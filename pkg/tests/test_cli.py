"""End-to-end checks of the command line front end.

Everything drives cli.main in process; one test exercises the
installed console script through a real subprocess.
"""

import json
import math
import shutil
import subprocess

import pytest

from sharpweights import cli, embedding


def run_cli(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_plain(line):
    out = {}
    for token in line.strip().split():
        key, _, val = token.partition("=")
        out[key] = val
    return out


def test_constants_plain(capsys):
    code, out, err = run_cli(
        ["constants", "--p", "2", "--q", "10", "--delta", "2"], capsys
    )
    assert code == 0
    assert err == ""
    rec = parse_plain(out)
    assert float(rec["q_star"]) == pytest.approx(7.4641016151377545871, rel=1e-9)
    assert float(rec["c_q"]) == pytest.approx(11967.912848418276852, rel=1e-9)
    assert float(rec["c_inf"]) == pytest.approx(85.969840050095824801, rel=1e-9)


def test_constants_infinite_value_token(capsys):
    # q inside the critical band: c_q degenerates
    code, out, _ = run_cli(
        ["constants", "--p", "2", "--q", "5", "--delta", "2"], capsys
    )
    assert code == 0
    rec = parse_plain(out)
    assert rec["c_q"] == "inf"
    assert math.isinf(float(rec["c_q"]))


def test_constants_json_types(capsys):
    code, out, _ = run_cli(
        ["constants", "--p", "2", "--q", "5", "--delta", "2", "--format", "json"],
        capsys,
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["c_q"] == "inf"
    assert isinstance(obj["q_star"], float)
    assert obj["q_star"] == pytest.approx(7.4641016151377545871, rel=1e-9)


def test_constants_plain_roundtrips_exactly(capsys):
    # .17g is enough digits to reproduce the double bit for bit
    code, out, _ = run_cli(
        ["constants", "--p", "2", "--q", "10", "--delta", "2"], capsys
    )
    rec = parse_plain(out)
    assert float(rec["c_q"]) == embedding.aq_constant(2.0, 10.0, 2.0).constant


def test_constants_accepts_inf_exponent(capsys):
    code, out, _ = run_cli(
        ["constants", "--p", "inf", "--q", "3", "--delta", "2"], capsys
    )
    assert code == 0
    rec = parse_plain(out)
    assert float(rec["q_star"]) == 2.0
    assert float(rec["c_q"]) == 2.0
    assert float(rec["c_inf"]) == pytest.approx(1.3591409142295226177, rel=1e-12)


def test_gehring_csv_header(capsys):
    code, out, _ = run_cli(
        ["gehring", "--p", "2", "--t", "2", "--delta", "2", "--format", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,t,delta,t_star,c_t"
    row = dict(zip(lines[0].split(","), lines[1].split(",")))
    assert float(row["t_star"]) == pytest.approx(2.154700538379251529, rel=1e-10)
    assert float(row["c_t"]) == pytest.approx(2.0, rel=1e-9)


def test_bellman_record(capsys):
    code, out, _ = run_cli(
        ["bellman", "--p", "2", "--q", "10", "--delta", "2",
         "--x1", "1", "--x2", "4", "--limit"],
        capsys,
    )
    assert code == 0
    rec = parse_plain(out)
    # (1, 4) sits on the upper boundary curve, where both roots vanish
    assert float(rec["r_minus"]) == 0.0
    assert float(rec["r_plus"]) == 0.0
    assert float(rec["value"]) == pytest.approx(2.838658558458713017, rel=1e-10)
    assert float(rec["limit_value"]) == pytest.approx(85.969840050095824801, rel=1e-10)


def test_bellman_without_limit_flag(capsys):
    code, out, _ = run_cli(
        ["bellman", "--p", "2", "--q", "10", "--delta", "2",
         "--x1", "1", "--x2", "4"],
        capsys,
    )
    assert code == 0
    assert "limit_value" not in parse_plain(out)


def test_bellman_infinite_exponent_drops_root_columns(capsys):
    code, out, _ = run_cli(
        ["bellman", "--p", "inf", "--q", "3", "--delta", "2",
         "--x1", "1", "--x2", "1.5", "--limit"],
        capsys,
    )
    assert code == 0
    rec = parse_plain(out)
    assert "r_minus" not in rec and "r_plus" not in rec
    assert float(rec["value"]) == pytest.approx(1.3608276348795433879, rel=1e-10)
    assert float(rec["limit_value"]) == pytest.approx(1.2984893607031172378, rel=1e-10)


def test_extremal_residuals_vanish(capsys):
    code, out, _ = run_cli(
        ["extremal", "--p", "2", "--delta", "2", "--x1", "1", "--x2", "4"],
        capsys,
    )
    assert code == 0
    rec = parse_plain(out)
    assert rec["branch"] == "plus"
    assert float(rec["nu"]) == pytest.approx(6.4641016151377545871, rel=1e-10)
    assert float(rec["c"]) == pytest.approx(7.4641016151377545871, rel=1e-10)
    for key in ("resid_x1", "resid_x2", "resid_delta"):
        assert abs(float(rec[key])) < 1e-9


def test_extremal_minus_branch(capsys):
    code, out, _ = run_cli(
        ["extremal", "--p", "2", "--delta", "1.05", "--x1", "1", "--x2", "1.05",
         "--branch", "minus"],
        capsys,
    )
    assert code == 0
    rec = parse_plain(out)
    assert float(rec["nu"]) == pytest.approx(-0.23366402246522455604, rel=1e-9)
    for key in ("resid_x1", "resid_x2", "resid_delta"):
        assert abs(float(rec[key])) < 1e-9


def test_verify_moment_mode_passes(capsys):
    code, out, _ = run_cli(
        ["verify", "--p", "2", "--q", "10", "--delta", "2"], capsys
    )
    assert code == 0
    rec = parse_plain(out)
    assert rec["status"] == "ok"
    assert float(rec["rel_err"]) < 1e-6


def test_verify_infinite_exponent_passes(capsys):
    code, out, _ = run_cli(
        ["verify", "--p", "inf", "--q", "3", "--delta", "2"], capsys
    )
    assert code == 0
    rec = parse_plain(out)
    assert float(rec["constant"]) == 2.0
    assert float(rec["sup"]) == pytest.approx(2.0, rel=1e-12)


def test_verify_self_improvement_mode_passes(capsys):
    code, out, _ = run_cli(
        ["verify", "--p", "2", "--t", "2", "--delta", "2"], capsys
    )
    assert code == 0
    rec = parse_plain(out)
    assert float(rec["constant"]) == pytest.approx(2.0, rel=1e-9)


def test_verify_trivial_class_is_exact(capsys):
    code, out, _ = run_cli(
        ["verify", "--p", "2", "--q", "10", "--delta", "1"], capsys
    )
    assert code == 0
    rec = parse_plain(out)
    assert float(rec["constant"]) == 1.0
    assert float(rec["sup"]) == 1.0
    assert float(rec["rel_err"]) == 0.0


def test_verify_band_compares_infinities(capsys):
    code, out, _ = run_cli(
        ["verify", "--p", "2", "--q", "5", "--delta", "2"], capsys
    )
    assert code == 0
    rec = parse_plain(out)
    assert rec["constant"] == "inf" and rec["sup"] == "inf"
    assert float(rec["rel_err"]) == 0.0


def test_verify_reports_mismatch_under_tiny_tolerance(capsys):
    # the depth-12 search agrees to ~1e-10, so 1e-12 must trip
    code, out, _ = run_cli(
        ["verify", "--p", "2", "--q", "10", "--delta", "2", "--tol", "1e-12"],
        capsys,
    )
    assert code == 1
    rec = parse_plain(out)
    assert rec["status"] == "mismatch"
    assert 0.0 < float(rec["rel_err"]) < 1e-6


def test_verify_needs_exactly_one_mode(capsys):
    code, out, err = run_cli(
        ["verify", "--p", "2", "--q", "10", "--t", "2", "--delta", "2"], capsys
    )
    assert code == 2
    assert err.startswith("error:")
    code, out, err = run_cli(["verify", "--p", "2", "--delta", "2"], capsys)
    assert code == 2


def test_ndim_record(capsys):
    code, out, _ = run_cli(
        ["ndim", "--p", "2", "--q", "3", "--n", "2", "--delta", "1.01"], capsys
    )
    assert code == 0
    rec = parse_plain(out)
    assert float(rec["threshold"]) == pytest.approx(1.154700538379251529, rel=1e-12)
    assert float(rec["epsilon"]) == pytest.approx(1.0964148132382675322, rel=1e-9)
    assert float(rec["c_q"]) == pytest.approx(1.3857727785133213342, rel=1e-9)


def test_sweep_delta_increases_moment_constant(capsys):
    code, out, _ = run_cli(
        ["sweep", "--param", "delta", "--from", "1.01", "--to", "2",
         "--steps", "7", "--p", "2", "--q", "10", "--format", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].count("c_q") == 1
    assert len(lines) == 8
    cols = lines[0].split(",")
    values = [float(dict(zip(cols, ln.split(",")))["c_q"]) for ln in lines[1:]]
    assert all(math.isfinite(v) for v in values)
    assert all(b > a for a, b in zip(values, values[1:]))


def test_sweep_reaches_divergence(capsys):
    # past delta ~2.37 the moment exponent 10 falls inside the band
    code, out, _ = run_cli(
        ["sweep", "--param", "delta", "--from", "2", "--to", "3",
         "--steps", "5", "--p", "2", "--q", "10", "--format", "csv"],
        capsys,
    )
    assert code == 0
    last = out.strip().splitlines()[-1].split(",")
    assert "inf" in last


def test_sweep_q_decreases_constant(capsys):
    code, out, _ = run_cli(
        ["sweep", "--param", "q", "--from", "7.6", "--to", "20",
         "--steps", "6", "--p", "2", "--delta", "2", "--format", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    cols = lines[0].split(",")
    values = [float(dict(zip(cols, ln.split(",")))["c_q"]) for ln in lines[1:]]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_sweep_t_increases_toward_blowup(capsys):
    code, out, _ = run_cli(
        ["sweep", "--param", "t", "--from", "2", "--to", "2.1",
         "--steps", "3", "--p", "2", "--delta", "2", "--format", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,t,delta,t_star,c_t"
    values = [float(ln.split(",")[-1]) for ln in lines[1:]]
    assert all(math.isfinite(v) for v in values)
    assert values[0] < values[1] < values[2]


def test_sweep_ndim_limits_to_one(capsys):
    code, out, _ = run_cli(
        ["sweep", "--param", "delta", "--from", "1.01", "--to", "1",
         "--steps", "3", "--p", "2", "--q", "3", "--n", "2", "--format", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,q,n,delta,threshold,y,epsilon,c_q"
    last = dict(zip(lines[0].split(","), lines[-1].split(",")))
    assert float(last["delta"]) == 1.0
    assert float(last["c_q"]) == 1.0
    assert float(last["y"]) == 1.0


def test_sweep_missing_fixed_parameter(capsys):
    code, out, err = run_cli(
        ["sweep", "--param", "delta", "--from", "1.1", "--to", "2",
         "--steps", "3", "--p", "2"],
        capsys,
    )
    assert code == 2
    assert "error:" in err


def test_sweep_needs_two_steps(capsys):
    code, out, err = run_cli(
        ["sweep", "--param", "delta", "--from", "1.1", "--to", "2",
         "--steps", "1", "--p", "2", "--q", "10"],
        capsys,
    )
    assert code == 2
    assert "--steps" in err


def test_domain_error_exits_two(capsys):
    code, out, err = run_cli(
        ["constants", "--p", "2", "--q", "10", "--delta", "0.5"], capsys
    )
    assert code == 2
    assert err.startswith("error:")
    assert "delta" in err


def test_argparse_rejects_bad_usage():
    with pytest.raises(SystemExit) as exc:
        cli.main(["constants", "--p", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["constants", "--p", "two", "--q", "10", "--delta", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == 2


@pytest.mark.skipif(shutil.which("sharp-weights") is None, reason="script not installed")
def test_console_script_runs():
    proc = subprocess.run(
        ["sharp-weights", "constants", "--p", "2", "--q", "10", "--delta", "2",
         "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    obj = json.loads(proc.stdout)
    assert obj["q_star"] == pytest.approx(7.4641016151377545871, rel=1e-9)
