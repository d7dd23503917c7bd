import json
from fractions import Fraction

import pytest

from bettibounds import BettiTable, pure_diagram
from bettibounds.cli import main
from bettibounds.tablefile import dump


@pytest.fixture
def worked_file(tmp_path, quotient_table):
    path = tmp_path / "worked.bt1"
    dump(quotient_table, path)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "machine")
    assert code == 0, err
    return json.loads(out)


# -- pure -----------------------------------------------------------------------


def test_pure_text(capsys):
    code, out, _ = run(capsys, "pure", "0,2,4,5")
    assert code == 0
    assert "10/3" in out and "8/3" in out
    assert "totals: 1  10/3  5  8/3" in out


def test_pure_koszul_row(capsys):
    code, out, _ = run(capsys, "pure", "0,1,2,3")
    assert code == 0
    assert "totals: 1  3  3  1" in out
    # a Koszul diagram has a single row, labelled 0
    diagram_block = out.split("\n\n")[0].splitlines()
    row_labels = [line.split()[0] for line in diagram_block[1:]]
    assert row_labels == ["0:"]


def test_pure_rejects_non_increasing(capsys):
    code, _, err = run(capsys, "pure", "0,0,1")
    assert code == 1
    assert "strictly increasing" in err


def test_pure_negative_leading_degree(capsys):
    # a leading '-' needs the standard argparse separator
    code, out, _ = run(capsys, "pure", "--", "-2,0,1")
    assert code == 0
    assert "totals: 1  3  2" in out


def test_pure_machine_round_trip(capsys):
    report = run_json(capsys, "pure", "0,2,4,5")
    assert report["status"] == "ok"
    assert report["command"] == "pure"
    assert report["inputs"]["degrees"] == [0, 2, 4, 5]
    rebuilt = BettiTable(
        {(e["i"], e["j"]): Fraction(e["value"]) for e in report["results"]["entries"]}
    )
    assert rebuilt == pure_diagram((0, 2, 4, 5))
    assert report["results"]["totals"] == ["1", "10/3", "5", "8/3"]


# -- decompose --------------------------------------------------------------------


def test_decompose_text(capsys, worked_file):
    code, out, _ = run(capsys, "decompose", worked_file)
    assert code == 0
    assert out.splitlines() == [
        "3/10  (0,2,4,5)",
        "1/30  (0,3,4,5)",
        "1/3  (0,3,4,6)",
        "1/15  (0,3,5,6)",
        "4/15  (0,3,5)",
    ]


def test_decompose_single_diagram(capsys, tmp_path):
    path = tmp_path / "pure.bt1"
    dump(pure_diagram((0, 1, 2)), path)
    code, out, _ = run(capsys, "decompose", str(path))
    assert code == 0
    assert out.strip() == "1  (0,1,2)"


def test_decompose_machine(capsys, worked_file):
    report = run_json(capsys, "decompose", worked_file, "--check", "--codim", "2")
    assert report["results"]["coefficient_sum"] == "1"
    assert report["results"]["checked"] is True
    assert [t["coefficient"] for t in report["results"]["terms"]] == [
        "3/10", "1/30", "1/3", "1/15", "4/15",
    ]
    assert [t["type"] for t in report["results"]["terms"]] == [
        [0, 2, 4, 5], [0, 3, 4, 5], [0, 3, 4, 6], [0, 3, 5, 6], [0, 3, 5],
    ]


def test_decompose_check_flag(capsys, worked_file):
    code, out, _ = run(capsys, "decompose", worked_file, "--check")
    assert code == 0
    assert "check: ok" in out


def test_decompose_codim_violation(capsys, worked_file):
    # the decomposition has a length-2 type, so codim 3 must fail the check
    code, _, err = run(capsys, "decompose", worked_file, "--check", "--codim", "3")
    assert code == 2
    assert "length" in err


def test_decompose_outside_cone(capsys, tmp_path):
    path = tmp_path / "gap.bt1"
    path.write_text("BT1\n0 0 1\n2 2 1\n")
    code, _, err = run(capsys, "decompose", str(path))
    assert code == 2
    assert "cone" in err


def test_decompose_parse_failures(capsys, tmp_path):
    bad = tmp_path / "bad.bt1"
    bad.write_text("BT1\n0 0 0\n")
    assert run(capsys, "decompose", str(bad))[0] == 1
    assert run(capsys, "decompose", str(tmp_path / "missing.bt1"))[0] == 1


# -- bounds ---------------------------------------------------------------------


def test_bounds_pure(capsys):
    code, out, _ = run(capsys, "bounds", "pure", "-N", "18", "-r", "2", "-i", "7")
    assert code == 0
    assert "lower = 884/9" in out
    assert "upper = 10310976" in out
    report = run_json(capsys, "bounds", "pure", "-N", "18", "-r", "2", "-i", "7")
    assert report["command"] == "bounds pure"
    assert Fraction(report["results"]["lower"]) == Fraction(884, 9)
    assert Fraction(report["results"]["upper"]) == 10310976


def test_bounds_module(capsys):
    report = run_json(
        capsys, "bounds", "module",
        "--codim", "2", "--pdim", "4", "--reg", "1", "--beta0", "3", "-i", "2",
    )
    assert report["results"] == {"mode": "exact", "lower": "3/2", "upper": "72"}


def test_bounds_veronese_exact(capsys):
    code, out, _ = run(capsys, "bounds", "veronese", "-n", "2", "-d", "5", "-i", "7")
    assert code == 0
    assert "N = 18" in out
    assert "lower = 884/9" in out
    assert "upper = 10310976" in out


def test_bounds_veronese_estimate(capsys):
    report = run_json(
        capsys, "bounds", "veronese",
        "-n", "2", "-d", "1000000", "-i", "100000000000", "--estimate",
    )
    results = report["results"]
    assert results["mode"] == "estimate"
    assert results["exp_lo"] == 108661150966
    assert results["exp_hi"] == 108661151025
    assert results["digits_lo"] == results["exp_lo"] + 1
    assert results["digits_hi"] == results["exp_hi"] + 1


def test_bounds_variety_estimate(capsys):
    report = run_json(
        capsys, "bounds", "variety",
        "--dim-l", "6441720", "--dim-x", "2", "--reg", "3", "-i", "1000000",
        "--estimate",
    )
    assert report["results"]["exp_lo"] == 1207665
    assert report["results"]["exp_hi"] == 1207714


def test_bounds_variety_falls_back_when_too_large(capsys):
    code, out, _ = run(
        capsys, "bounds", "variety",
        "--dim-l", "6441720", "--dim-x", "2", "--reg", "3", "-i", "1000000",
    )
    assert code == 0
    assert "estimated instead" in out
    assert "exp_lo = 1207665" in out


def test_bounds_pure_too_large_is_domain_error(capsys):
    code, _, err = run(
        capsys, "bounds", "pure", "-N", "1000000000", "-r", "1", "-i", "100000000"
    )
    assert code == 2
    assert "digit" in err


def test_bounds_veronese_domain_error(capsys):
    code, _, err = run(capsys, "bounds", "veronese", "-n", "2", "-d", "5", "-i", "19")
    assert code == 2
    assert "[0, 18]" in err


def test_paper_constants_flag_changes_only_estimates(capsys):
    exact_plain = run(capsys, "bounds", "veronese", "-n", "2", "-d", "5", "-i", "7")
    exact_flagged = run(
        capsys, "bounds", "veronese", "-n", "2", "-d", "5", "-i", "7", "--paper-constants"
    )
    assert exact_plain == exact_flagged

    est_plain = run_json(
        capsys, "bounds", "veronese", "-n", "2", "-d", "100", "-i", "2000", "--estimate"
    )
    est_flagged = run_json(
        capsys, "bounds", "veronese", "-n", "2", "-d", "100", "-i", "2000",
        "--estimate", "--paper-constants",
    )
    assert est_plain["results"]["exp_lo"] == 1482
    assert est_plain["results"]["exp_hi"] == 1501
    assert est_flagged["results"]["exp_hi"] == 1502  # unshifted constants add one nat


def test_precision_flag(capsys):
    low = run_json(
        capsys, "bounds", "veronese", "-n", "2", "-d", "100", "-i", "2000",
        "--estimate", "--precision", "12",
    )
    assert low["results"]["exp_lo"] == 1482
    # argparse rejects a non-integer precision: usage error
    code, _, _ = run(
        capsys, "bounds", "veronese", "-n", "2", "-d", "5", "-i", "7",
        "--precision", "many",
    )
    assert code == 1


def test_max_exact_digits_flag(capsys):
    code, out, _ = run(
        capsys, "bounds", "veronese", "-n", "2", "-d", "100", "-i", "2000",
        "--max-exact-digits", "100",
    )
    # over budget, and veronese supports estimation: falls back to a bracket
    assert code == 0
    assert "estimated instead" in out
    assert "exp_lo = 1482" in out


# -- dim-l -----------------------------------------------------------------------


def test_dim_l(capsys):
    code, out, _ = run(capsys, "dim-l", "-m", "3", "--delta", "13", "-e", "1000")
    assert code == 0
    assert "6441720" in out
    report = run_json(capsys, "dim-l", "-m", "3", "--delta", "1", "-e", "1")
    assert report["results"]["dim_l"] == 2
    report = run_json(capsys, "dim-l", "-m", "2", "--delta", "3", "-e", "4")
    assert report["results"]["dim_l"] == 11


def test_dim_l_domain_error(capsys):
    code, _, _ = run(capsys, "dim-l", "-m", "0", "--delta", "1", "-e", "1")
    assert code == 2


# -- exit-code contract -----------------------------------------------------------


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "bounds", "veronese", "-n", "2")[0] == 1   # missing flags
    assert run(capsys, "nonsense")[0] == 1                        # unknown command
    assert run(capsys, "bounds", "nonsense")[0] == 1              # unknown target
    assert run(capsys, "pure")[0] == 1                            # missing argument
    assert run(capsys, "pure", "a,b")[0] == 1                     # unparsable degrees
