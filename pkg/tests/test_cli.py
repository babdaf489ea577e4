"""Command-line interface: exit codes, output formats, reproducibility."""

import csv
import io
import json

import pytest

from piradical.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv: str) -> tuple[int, dict]:
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def strip_timing(report: dict) -> dict:
    report = json.loads(json.dumps(report))
    report["provenance"].pop("wall_time_s")
    return report


# -- exit codes --------------------------------------------------------------


def test_success_exit_code(capsys):
    code, out, err = run(capsys, "radical", "--group", "S4", "--pi", "2")
    assert code == 0 and err == ""
    assert "radical" in out


def test_unknown_group_is_an_input_error(capsys):
    code, _, err = run(capsys, "radical", "--group", "E8", "--pi", "2")
    assert code == 2 and "error" in err


def test_missing_pi_is_an_input_error(capsys):
    code, _, err = run(capsys, "radical", "--group", "S4")
    assert code == 2 and "pi" in err


def test_non_prime_r_is_an_input_error(capsys):
    code, _, err = run(
        capsys, "beta", "--group", "A5", "--aut", "(1 2)", "--r", "6"
    )
    assert code == 2


def test_r_not_dividing_order_is_an_input_error(capsys):
    code, _, err = run(
        capsys, "beta", "--group", "A5", "--aut", "(1 2)", "--r", "7"
    )
    assert code == 2


def test_even_r_sweep_is_an_input_error(capsys):
    code, _, err = run(capsys, "transposition-sweep", "--r", "4")
    assert code == 2


def test_sampled_sweep_exits_three(capsys):
    code, out, _ = run(
        capsys, "transposition-sweep", "--r", "5", "--sample", "30",
        "--format", "json",
    )
    assert code == 3
    report = json.loads(out)
    assert report["results"][0]["exhaustive"] is False
    assert report["results"][0]["subsets_checked"] == 30


def test_exhaustive_sweep_exits_zero(capsys):
    code, report = run_json(capsys, "transposition-sweep", "--r", "5")
    assert code == 0
    rec = report["results"][0]
    assert rec["all_small_subsets_pi"] is True
    assert rec["exhaustive"] is True
    assert rec["implied_lower_bound"] == 4


def test_width_budget_exhaustion_exits_three(capsys):
    code, _, _ = run(
        capsys, "beta", "--group", "A5", "--aut", "(1 2)", "--r", "5",
        "--budget-max-width", "2",
    )
    assert code == 3


# -- computed values through the CLI ------------------------------------------


def test_alpha_value_on_five_points(capsys):
    code, report = run_json(capsys, "alpha", "--group", "A5", "--aut", "(1 2)")
    assert code == 0
    rec = report["results"][0]
    assert rec["value"] == 4
    assert rec["revalidated"] is True
    assert rec["exhaustive"] is True


def test_beta_value_on_semilinear_involution(capsys):
    code, report = run_json(
        capsys, "beta", "--group", "A6:pgammal", "--aut", "outer-involution",
        "--r", "3",
    )
    assert code == 0
    rec = report["results"][0]
    assert rec["value"] == 3
    assert rec["socle_order"] == 360 and rec["ambient_order"] == 720


def test_radical_crosscheck_agrees(capsys):
    code, report = run_json(capsys, "radical", "--group", "S4", "--pi", "2")
    assert code == 0
    rec = report["results"][0]
    assert rec["radical_order_int"] == 4
    assert rec["crosscheck"] == "agrees"


def test_bs_check_reports_violation_and_minimum(capsys):
    code, report = run_json(
        capsys, "bs-check", "--group", "S5", "--pi", "2,3", "--m", "3",
        "--find-min",
    )
    assert code == 0  # a diagnosed failure is a successful run
    assert report["summary"]["holds"] is False
    assert report["summary"]["violating_element"] == "(1 2)"
    assert report["summary"]["minimal_m"] == 4
    transposition_rows = [
        r for r in report["results"] if r["representative"] == "(1 2)"
    ]
    assert transposition_rows[0]["violation_width"] is None
    assert transposition_rows[0]["exhaustive"] is True


def test_verify_bs_all_primes(capsys):
    code, report = run_json(capsys, "verify-bs", "--group", "S4")
    assert code == 0
    assert {r["p"] for r in report["results"]} == {2, 3}
    assert report["summary"]["consistent"] is True
    assert all(
        r["in_radical"] == r["all_pairs_p_groups"] for r in report["results"]
    )


def test_verify_bs_sweep_small_cap(capsys):
    code, report = run_json(capsys, "verify-bs-sweep", "--order-cap", "60")
    assert code == 0
    rows = report["results"]
    assert all(r["consistent"] for r in rows)
    assert {r["group"] for r in rows} >= {"S4", "A5", "C12"}
    assert report["summary"]["consistent"] is True
    assert report["summary"]["groups_and_primes"] == len(rows)


def test_width_table_single_degree(capsys):
    code, report = run_json(capsys, "width-table", "--n", "5", "--r", "3")
    assert code == 0
    rows = report["results"]
    assert all(row["r"] == 3 for row in rows)
    transposition_row = next(r for r in rows if r["aut"] == "(1 2)")
    assert transposition_row["beta"] == 2
    assert transposition_row["expected"] == "= r-1"
    assert all(row["bound_ok"] for row in rows)


def test_width_table_includes_semilinear_row_at_six(capsys):
    code, report = run_json(
        capsys, "width-table", "--n", "6", "--r", "3", "--include-alpha"
    )
    assert code == 0
    outer = [r for r in report["results"] if r["socle"] == "A6:pgammal"]
    assert outer and outer[0]["beta"] == 3
    assert outer[0]["expected"] == "= 3"
    assert all(
        row["alpha"] is None or row["beta"] <= row["alpha"]
        for row in report["results"]
    )


# -- spec-file input -----------------------------------------------------------


SPEC_TEXT = """\
name five-sym
degree 5
gen a (1 2)
gen b (1 2 3 4 5)
socle a b
aut a
pi 2,3
"""


def test_spec_file_route(capsys, tmp_path):
    spec = tmp_path / "g.spec"
    spec.write_text(SPEC_TEXT, encoding="utf-8")
    code, report = run_json(capsys, "radical", "--spec", str(spec), "--pi", "5")
    assert code == 0
    assert report["results"][0]["radical_order_int"] == 1
    code, report = run_json(capsys, "alpha", "--spec", str(spec))
    assert code == 0
    assert report["results"][0]["socle"] == "five-sym"


def test_bad_spec_file_is_an_input_error(capsys, tmp_path):
    spec = tmp_path / "bad.spec"
    spec.write_text("degree 3\ngen a (1 5)\n", encoding="utf-8")
    code, _, err = run(capsys, "radical", "--spec", str(spec), "--pi", "2")
    assert code == 2
    code, _, err = run(capsys, "radical", "--spec", str(tmp_path / "no.spec"), "--pi", "2")
    assert code == 2


# -- output formats --------------------------------------------------------------


def test_text_format_mentions_key_facts(capsys):
    code, out, _ = run(capsys, "alpha", "--group", "A5", "--aut", "(1 2)")
    assert code == 0
    assert "alpha" in out and "4" in out
    assert out.endswith("\n")


def test_json_format_carries_provenance(capsys):
    code, report = run_json(capsys, "radical", "--group", "S4", "--pi", "2")
    assert code == 0
    prov = report["provenance"]
    assert prov["package"] == "piradical"
    assert "seed" in prov and "wall_time_s" in prov
    assert report["experiment"] == "radical"


def test_csv_format_matches_json_records(capsys):
    code, json_report = run_json(capsys, "bs-check", "--group", "S4", "--pi", "2", "--m", "2")
    assert code == 0
    code, out, _ = run(
        capsys, "bs-check", "--group", "S4", "--pi", "2", "--m", "2",
        "--format", "csv",
    )
    assert code == 0
    data_lines = [l for l in out.splitlines() if not l.startswith("#")]
    rows = list(csv.DictReader(io.StringIO("\n".join(data_lines))))
    assert len(rows) == len(json_report["results"])
    for row, rec in zip(rows, json_report["results"]):
        assert row["representative"] == rec["representative"]
        assert row["in_radical"] == ("true" if rec["in_radical"] else "false")


def test_repeat_runs_are_identical_modulo_timing(capsys):
    _, first = run_json(capsys, "bs-check", "--group", "S5", "--pi", "2,3", "--m", "4")
    _, second = run_json(capsys, "bs-check", "--group", "S5", "--pi", "2,3", "--m", "4")
    assert strip_timing(first) == strip_timing(second)


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "radical", "--group", "S4", "--pi", "2",
        "--format", "json", "--out", str(target),
    )
    assert code == 0 and out == ""
    report = json.loads(target.read_text(encoding="utf-8"))
    assert report["results"][0]["radical_order_int"] == 4
