import math
from pathlib import Path

import pytest

from pils.cli import main
from pils.metrics import parse_metric_report
from pils.cli import parse_descent_report, parse_summary
from pils.solvers import parse_run_result

INSTANCE_TEXT = "6 3\n12 7 31 58 24 9\n5 44 16 2 27 33\n41 8 19 22 3 50\n"


@pytest.fixture
def instance_file(tmp_path):
    path = tmp_path / "toy6.txt"
    path.write_text(INSTANCE_TEXT)
    return path


def read_tree(root: Path) -> dict:
    return {p.name: p.read_bytes() for p in sorted(root.iterdir()) if p.is_file()}


# --- solve ----------------------------------------------------------------


def test_solve_writes_runs_reference_and_summary(instance_file, tmp_path, capsys):
    out = tmp_path / "out"
    code = main(
        [
            "solve", "--instance", str(instance_file), "--tau", "0.6",
            "--algo", "pils,mos", "--runs", "3", "--budget", "400",
            "--seed", "5", "--out", str(out),
        ]
    )
    assert code == 0
    names = set(read_tree(out))
    assert {"pils_run000.txt", "pils_run002.txt", "mos_run001.txt", "reference.txt", "summary.txt"} <= names

    # per-run records carry base+index seeds
    rec = parse_run_result((out / "pils_run002.txt").read_text())
    assert rec.seed == 7 and rec.budget == 400 and rec.algorithm == "pils"

    # summary means match the per-run metric files
    summary = parse_summary((out / "summary.txt").read_text())
    for algo in ("pils", "mos"):
        reports = [
            parse_metric_report((out / f"{algo}_run{i:03d}_metrics.txt").read_text())
            for i in range(3)
        ]
        row = summary["rows"][algo]
        assert abs(row["mean_d1"] - math.fsum(r.d1 for r in reports) / 3) <= 1e-9
        assert abs(row["mean_d2"] - math.fsum(r.d2 for r in reports) / 3) <= 1e-9

    table = capsys.readouterr().out
    assert "pils" in table and "mos" in table


def test_solve_repeat_is_byte_identical(instance_file, tmp_path):
    args = [
        "solve", "--instance", str(instance_file), "--tau", "0.6",
        "--algo", "pils,mos,sample", "--runs", "2", "--budget", "300", "--seed", "1",
    ]
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    assert read_tree(out1) == read_tree(out2)


def test_solve_against_supplied_reference(instance_file, tmp_path):
    ref = tmp_path / "ref.txt"
    assert main(["oracle", "--instance", str(instance_file), "--tau", "0.6", "--out", str(ref)]) == 0
    out = tmp_path / "scored"
    code = main(
        [
            "solve", "--instance", str(instance_file), "--tau", "0.6", "--algo", "pils",
            "--runs", "2", "--budget", "2000", "--seed", "0",
            "--out", str(out), "--reference", str(ref),
        ]
    )
    assert code == 0
    assert not (out / "reference.txt").exists()
    summary = parse_summary((out / "summary.txt").read_text())
    assert summary["reference"] == str(ref)


def test_solve_sample_only_writes_scatter(instance_file, tmp_path):
    out = tmp_path / "s"
    code = main(
        ["solve", "--instance", str(instance_file), "--algo", "sample",
         "--runs", "1", "--budget", "1000", "--out", str(out)]
    )
    assert code == 0
    rows = (out / "sample_run000.txt").read_text().splitlines()
    assert len(rows) == 1000
    assert all(len(r.split()) == 2 for r in rows)
    assert not (out / "summary.txt").exists()


def test_solve_rejects_unknown_algorithm(instance_file, tmp_path):
    code = main(
        ["solve", "--instance", str(instance_file), "--algo", "annealing",
         "--budget", "10", "--out", str(tmp_path / "x")]
    )
    assert code == 2


def test_solve_rejects_bad_tau(instance_file, tmp_path):
    code = main(
        ["solve", "--instance", str(instance_file), "--tau", "-1", "--algo", "pils",
         "--budget", "10", "--out", str(tmp_path / "x")]
    )
    assert code == 2


def test_due_date_sources_are_mutually_exclusive(instance_file, tmp_path, capsys):
    code = main(
        ["solve", "--instance", str(instance_file), "--tau", "0.5", "--due-dates", "d.txt",
         "--algo", "pils", "--budget", "10", "--out", str(tmp_path / "x")]
    )
    capsys.readouterr()
    assert code == 2


# --- oracle ------------------------------------------------------------------


def test_oracle_round_trip(instance_file, tmp_path, capsys):
    ref = tmp_path / "ref.txt"
    assert main(["oracle", "--instance", str(instance_file), "--tau", "0.6", "--out", str(ref)]) == 0
    capsys.readouterr()
    lines = ref.read_text().splitlines()
    assert lines and all(len(line.split()) == 2 for line in lines)


def test_oracle_guards_large_instances(tmp_path, capsys):
    big = tmp_path / "big.txt"
    rows = ["11 1", " ".join(["5"] * 11)]
    big.write_text("\n".join(rows) + "\n")
    code = main(["oracle", "--instance", str(big), "--out", str(tmp_path / "ref.txt")])
    capsys.readouterr()
    assert code == 2


def test_missing_instance_is_an_input_error(tmp_path, capsys):
    code = main(["oracle", "--instance", str(tmp_path / "absent.txt"), "--out", str(tmp_path / "r.txt")])
    capsys.readouterr()
    assert code == 3


def test_malformed_instance_is_an_input_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n3 1\n")
    code = main(["oracle", "--instance", str(bad), "--out", str(tmp_path / "r.txt")])
    capsys.readouterr()
    assert code == 3


def test_unwritable_output_is_an_output_error(instance_file, tmp_path, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("occupied")
    code = main(
        ["solve", "--instance", str(instance_file), "--tau", "0.6", "--algo", "pils",
         "--budget", "10", "--out", str(blocker / "nested")]
    )
    capsys.readouterr()
    assert code == 4


# --- metrics -------------------------------------------------------------------


def test_metrics_identical_files(tmp_path, capsys):
    ref = tmp_path / "ref.txt"
    ref.write_text("3 9\n5 5\n")
    assert main(["metrics", "--reference", str(ref), "--approx", str(ref)]) == 0
    assert capsys.readouterr().out.strip() == "0.0000 0.0000"


def test_metrics_hand_example(tmp_path, capsys):
    ref = tmp_path / "ref.txt"
    approx = tmp_path / "approx.txt"
    ref.write_text("0 10\n10 0\n")
    approx.write_text("0 10\n")
    assert main(["metrics", "--reference", str(ref), "--approx", str(approx)]) == 0
    assert capsys.readouterr().out.strip() == "0.5000 1.0000"


def test_metrics_missing_file(tmp_path, capsys):
    ref = tmp_path / "ref.txt"
    ref.write_text("1 2\n")
    code = main(["metrics", "--reference", str(ref), "--approx", str(tmp_path / "nope.txt")])
    capsys.readouterr()
    assert code == 3


# --- descent ---------------------------------------------------------------------


def test_descent_report_round_trip(instance_file, tmp_path, capsys):
    out = tmp_path / "descent.txt"
    code = main(
        ["descent", "--instance", str(instance_file), "--tau", "0.6",
         "--repetitions", "8", "--seed", "3", "--out", str(out)]
    )
    capsys.readouterr()
    assert code == 0
    report = parse_descent_report(out.read_text())
    assert report["repetitions"] == 8 and len(report["counts"]) == 8
    assert abs(report["mean"] - math.fsum(report["counts"]) / 8) <= 1e-6

    rerun = tmp_path / "descent2.txt"
    main(
        ["descent", "--instance", str(instance_file), "--tau", "0.6",
         "--repetitions", "8", "--seed", "3", "--out", str(rerun)]
    )
    capsys.readouterr()
    assert rerun.read_bytes() == out.read_bytes()


# --- sample ------------------------------------------------------------------------


def test_sample_scatter_rows(instance_file, tmp_path, capsys):
    out = tmp_path / "scatter.txt"
    code = main(
        ["sample", "--instance", str(instance_file), "--tau", "0.6",
         "--count", "250", "--seed", "1", "--out", str(out)]
    )
    capsys.readouterr()
    assert code == 0
    assert len(out.read_text().splitlines()) == 250
