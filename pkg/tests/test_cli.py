"""Command-line interface: subcommands, job files, exit codes, determinism."""

import json

import pytest

from germkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# one-shot subcommands


def test_mult_zariski(capsys):
    code, out, _ = run(
        capsys, "mult", "--ring", "0 (x,y,z) ds", "--family", "zariski:40,30,8:t=0"
    )
    assert code == 0 and out.strip() == "17"


def test_milnor_json_envelope(capsys):
    code, out, _ = run(capsys, "milnor", "--family", "ft:5,4", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["mu"] == 11
    assert data["characteristic"] == 0
    assert data["ordering"] == "ds"
    assert data["strategy"]["pair_selection"] == "sugar"
    assert "version" in data


def test_ft_report(capsys):
    code, out, _ = run(capsys, "ft", "--k", "5", "--l", "4", "--report")
    assert code == 0
    data = json.loads(out)
    assert data["mu"] == 11 and data["tau"] == 10
    assert data["quasi_homogeneous"] == "no"


def test_ft_plain_text(capsys):
    code, out, _ = run(capsys, "ft", "--k", "6", "--l", "5")
    assert code == 0
    assert "mu 13" in out and "tau 12" in out


def test_qh_weights(capsys):
    code, out, _ = run(capsys, "qh", "--ring", "0 (x,y) ds", "--poly", "x^2+y^3")
    assert code == 0
    assert out.startswith("yes")
    assert "1/2" in out and "1/3" in out


def test_std_and_vdim(capsys):
    code, out, _ = run(
        capsys, "std", "--ring", "0 (x,y) dp", "--poly", "x^2+y", "--poly", "x*y-1"
    )
    assert code == 0
    assert "y^2+x" in out.splitlines()
    code, out, _ = run(
        capsys, "vdim", "--ring", "0 (x,y) dp", "--poly", "x^2+y", "--poly", "x*y-1"
    )
    assert code == 0 and out.strip() == "3"


def test_vdim_infinite(capsys):
    code, out, _ = run(capsys, "vdim", "--ring", "0 (x,y) ds", "--poly", "x")
    assert code == 0 and out.strip() == "infinite"


def test_reiffen_text(capsys):
    code, out, _ = run(capsys, "reiffen", "--family", "ft:5,4")
    assert code == 0
    assert "verdict: exact-up-to-order-3" in out
    assert "mu 11 = 12 - 1" in out


def test_char_override(capsys):
    code, out, _ = run(
        capsys, "tjurina", "--family", "ft:5,4", "--char", "32003", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["characteristic"] == 32003 and data["tau"] == 10


def test_json_determinism(capsys):
    args = ("milnor", "--family", "ft:6,5", "--json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_env_overrides(capsys, monkeypatch):
    monkeypatch.setenv("GERMKIT_STRATEGY", "fifo,first-found")
    code, out, _ = run(capsys, "milnor", "--family", "ft:5,4", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["strategy"]["pair_selection"] == "fifo"
    assert data["mu"] == 11


# ---------------------------------------------------------------------------
# usage errors


def test_missing_input_is_usage_error(capsys):
    code, _, err = run(capsys, "milnor")
    assert code == 2 and "need --family or --poly" in err


def test_unknown_family(capsys):
    code, _, err = run(capsys, "milnor", "--family", "brieskorn:2,3")
    assert code == 2 and "unknown family" in err


def test_no_command_prints_usage(capsys):
    code, _, err = run(capsys)
    assert code == 2


def test_computation_error_maps_to_one(capsys):
    code, _, err = run(capsys, "milnor", "--ring", "0 (x,y) ds", "--poly", "x+q")
    assert code == 1 and "q" in err


def test_unknown_flag_exits_two(capsys):
    with pytest.raises(SystemExit) as e:
        main(["milnor", "--bogus"])
    assert e.value.code == 2


# ---------------------------------------------------------------------------
# job files


def test_jobfile_roundtrip(tmp_path, capsys):
    job = tmp_path / "ft54.job"
    job.write_text(
        """# FT(5,4)
ring 0 (x,y,z) ds
f = x*y+z^3;
g = x*z+y*z^2+y^4;
tjurina;
milnor f, g;
mult;
"""
    )
    code, out, _ = run(capsys, str(job))
    assert code == 0
    assert out.splitlines() == ["10", "11", "5"]


def test_jobfile_std_and_vdim(tmp_path, capsys):
    job = tmp_path / "basis.job"
    job.write_text(
        """ring 0 (x,y) ds
f = x^2;
g = y^3;
vdim;
std f, g;
"""
    )
    code, out, _ = run(capsys, str(job))
    assert code == 0
    assert out.splitlines()[0] == "6"


def test_empty_jobfile(tmp_path, capsys):
    job = tmp_path / "empty.job"
    job.write_text("")
    code, out, _ = run(capsys, str(job))
    assert code == 0 and out == ""


def test_jobfile_unknown_variable(tmp_path, capsys):
    job = tmp_path / "bad.job"
    job.write_text("ring 0 (x,y) ds\nf = x + w^2;\n")
    code, _, err = run(capsys, str(job))
    assert code == 1
    assert "bad.job:2" in err and "w" in err


def test_jobfile_missing_file(capsys):
    code, _, err = run(capsys, "/nonexistent/path.job")
    assert code == 1 and "No such file" in err


def test_jobfile_unknown_binding(tmp_path, capsys):
    job = tmp_path / "oops.job"
    job.write_text("ring 0 (x,y) ds\nf = x;\nmilnor h;\n")
    code, _, err = run(capsys, str(job))
    assert code == 1 and "h" in err


# ---------------------------------------------------------------------------
# bench


def test_bench_digests_agree(capsys):
    code, out, _ = run(
        capsys,
        "bench",
        "--family",
        "ft:8,8",
        "--orderings",
        "ds,ls",
        "--strategies",
        "sugar;fifo",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    records = data["records"]
    assert len(records) == 4
    assert len({r["digest"] for r in records}) == 1
    assert all(r["pairs"] > 0 for r in records)


def test_bench_table_output(capsys):
    code, out, _ = run(capsys, "bench", "--family", "ft:5,4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:3] == ["input", "ordering", "strategy"]
    assert len(lines) == 2


def test_bench_parallel_jobs(capsys):
    code, out, _ = run(
        capsys, "bench", "--family", "ft:5,4", "--strategies",
        "sugar;fifo;min-lcm-degree", "--jobs", "3", "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert len(data["records"]) == 3
    assert len({r["digest"] for r in data["records"]}) == 1


# ---------------------------------------------------------------------------
# selftest plumbing


def test_selftest_single_criterion(capsys):
    code, out, _ = run(capsys, "selftest", "--criterion", "7")
    assert code == 0
    assert out.startswith("criterion 7")
    assert "PASS" in out
