import json

from click.testing import CliRunner

import contactgrad
import contactgrad.__main__ as main

CLI_RUNNER = CliRunner()


def run_cli(args, inputs=None, catch_exceptions=True):
    return CLI_RUNNER.invoke(main.cli, args=["--silent"] + args, catch_exceptions=catch_exceptions, input=inputs)


def test_version():
    result = run_cli(args=["--version"])
    assert result.exit_code == 0
    assert contactgrad.__version__ in result.output


def test_help():
    result = run_cli(args=["help"])
    assert result.exit_code == 0
    assert "Algebra names: g2-split" in result.output
    assert "contactize" in result.output


def test_verify_single_table():
    result = run_cli(args=["verify", "--table", "ov"])
    assert result.exit_code == 0
    assert result.output.rstrip().endswith("10/10 match")


def test_tables_as_csv():
    result = run_cli(args=["tables", "-t", "ov", "-t", "9", "--format", "csv", "--jobs", "1"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].startswith("table,row,status,reason")
    assert len(lines) == 1 + 10 + 11


def test_gradation_of_short_root_in_g2():
    result = run_cli(args=["gradation", "--algebra", "g2-split", "--root", "short", "--format", "json"])
    assert result.exit_code == 0
    fields = json.loads(result.output)
    assert fields["depth"] == 3
    assert fields["algebra"] == "g2(2)"
    assert not fields["contact"]
    assert fields["symmetric type"]


def test_gradation_rejects_short_root_of_simply_laced():
    result = run_cli(args=["gradation", "--algebra", "a3-split", "--root", "short"])
    assert result.exit_code == 2


def test_gradation_of_unknown_algebra():
    result = run_cli(args=["gradation", "--algebra", "h3"])
    assert result.exit_code == 1
    assert "h3" in result.output


def test_satake_contact_check():
    result = run_cli(args=["satake", "--form", "e6(-26)", "--check", "contact"])
    assert result.exit_code == 0
    assert result.output.startswith("E6 e6(-26) [EIV]")
    assert "fails Djoković criterion" in result.output
    result = run_cli(args=["satake", "--form", "e6(2)", "--check", "contact"])
    assert "passes Djoković criterion" in result.output


def test_satake_depth_one_check():
    result = run_cli(args=["satake", "--form", "e7(-25)", "--check", "depth-one"])
    assert result.exit_code == 0
    assert "node 7: passes" in result.output


def test_satake_unknown_form():
    result = run_cli(args=["satake", "--form", "e9(1)"])
    assert result.exit_code == 1


def test_contactize_rotation():
    result = run_cli(args=["contactize", "--algebra", "so(3)", "--xi", "0,1=1;1,0=-1"])
    assert result.exit_code == 0, result.output
    assert "elliptic" in result.output
    assert "imaginary" in result.output


def test_contactize_bad_input():
    result = run_cli(args=["contactize", "--algebra", "so(3)", "--xi", "0,1"])
    assert result.exit_code == 2
    result = run_cli(args=["contactize", "--algebra", "sl(2,R)", "--xi", "0,1=1"])
    assert result.exit_code == 1, "Nilpotent xi gives a conical form"
