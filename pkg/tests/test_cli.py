"""File formats, report schema, subcommand behavior, and exit codes."""

from __future__ import annotations

import json
import random

import jsonschema
import pytest

from seqineq import (
    Sequence,
    parse_sequence_csv,
    parse_sequence_json,
    read_sequence,
    write_sequence,
)
from seqineq.cli import run_cli, load_report_schema

VALIDATOR = jsonschema.Draft202012Validator(load_report_schema())


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def _report(capsys):
    out = capsys.readouterr().out
    doc = json.loads(out)
    VALIDATOR.validate(doc)
    return doc


# ---------------------------------------------------------------- file formats

def test_csv_defaults_to_base_one():
    u = parse_sequence_csv("1\n3\n2\n")
    assert u.start_index == 1
    assert u.values == (1.0, 3.0, 2.0)


def test_csv_header_sets_base_and_comments_are_skipped():
    text = "# a note\n# start_index=0\n\n0\n-1\n1\n3\n"
    u = parse_sequence_csv(text)
    assert u.start_index == 0
    assert u.values == (0.0, -1.0, 1.0, 3.0)


def test_csv_rejects_garbage():
    with pytest.raises(ValueError, match="line 2"):
        parse_sequence_csv("1\ntwo\n3\n")
    with pytest.raises(ValueError, match="no values"):
        parse_sequence_csv("# start_index=1\n")
    with pytest.raises(ValueError, match="start_index"):
        parse_sequence_csv("# start_index=2\n1\n")


def test_json_sequence_parsing():
    u = parse_sequence_json('{"start_index": 0, "values": [0, -1, 1, 3]}')
    assert u.start_index == 0
    assert u.values == (0.0, -1.0, 1.0, 3.0)
    assert parse_sequence_json('{"values": [1]}').start_index == 1
    for bad in (
        "[1, 2]",
        '{"values": "1"}',
        '{"values": [1, true]}',
        '{"start_index": "0", "values": [1]}',
        '{"start_index": 2, "values": [1]}',
        "not json",
    ):
        with pytest.raises(ValueError):
            parse_sequence_json(bad)


def test_sequence_files_round_trip_bitwise(tmp_path):
    values = (0.1, 1.0 / 3.0, -2.5e-17, 3.0, 123456789.123456789)
    u = Sequence(values, 0)
    for name in ("seq.csv", "seq.json"):
        path = tmp_path / name
        write_sequence(path, u)
        back = read_sequence(path)
        assert back.values == u.values
        assert back.start_index == u.start_index


# ------------------------------------------------------------ stated examples

def test_check_convex_example(tmp_path, capsys):
    path = _write(tmp_path, "convex.csv", "# start_index=0\n0\n-1\n1\n3\n")
    assert run_cli(["check-convex", path]) == 0
    doc = _report(capsys)
    assert doc["convexity"]["is_convex"] is True
    assert doc["input"] == {"length": 4, "start_index": 0}


def test_epsilon_example(tmp_path, capsys):
    path = _write(tmp_path, "u.csv", "1\n3\n2\n")
    assert run_cli(["epsilon", path]) == 0
    assert float(capsys.readouterr().out.strip()) == 1.0


def test_check_subadd_example(tmp_path, capsys):
    path = _write(tmp_path, "u.csv", "1\n3\n2\n")
    assert run_cli(["check-subadd", path, "--eps", "0.5"]) == 1
    doc = _report(capsys)
    assert doc["subadditivity"]["ok"] is False
    assert doc["subadditivity"]["epsilon_star"] == 1.0


# ------------------------------------------------------- reports and schema

def test_every_report_command_validates_against_schema(tmp_path, capsys):
    convex = _write(tmp_path, "c.csv", "# start_index=0\n0\n-1\n1\n3\n")
    base1 = _write(tmp_path, "s.csv", "1\n3\n2\n")
    invocations = [
        (["check-convex", convex], 0),
        (["support", convex], 0),
        (["spline", convex], 0),
        (["lagrange", convex], 0),
        (["hull", base1], 0),
        (["decompose", base1], 0),
        (["check-subadd", base1], 1),
        (["check-subadd", base1, "--eps", "1.0"], 0),
    ]
    for argv, expected in invocations:
        assert run_cli(argv) == expected, argv
        _report(capsys)  # raises if the document does not match the schema


def test_schema_is_itself_valid():
    jsonschema.Draft202012Validator.check_schema(load_report_schema())


def test_support_report_contents(tmp_path, capsys):
    path = _write(tmp_path, "c.csv", "# start_index=0\n0\n-1\n1\n3\n")
    assert run_cli(["support", path]) == 0
    doc = _report(capsys)
    assert doc["support"]["values"] == [-1.0, 2.0, 2.0]
    assert doc["support"]["first_index"] == 0
    assert doc["support"]["last_index"] == 2
    assert doc["support"]["witness_pairs"] == [[0, 1], [1, 2], [2, 3]]


def test_spline_report_contents(tmp_path, capsys):
    path = _write(tmp_path, "c.csv", "# start_index=0\n0\n-1\n1\n3\n")
    assert run_cli(["spline", path, "--samples", "2"]) == 0
    doc = _report(capsys)
    pieces = doc["spline"]["pieces"]
    assert pieces[0] == {"center": 1, "a": 1.5, "b": -2.5, "c": 0.0}
    assert pieces[1] == {"center": 2, "a": 0.0, "b": 2.0, "c": -3.0}
    samples = doc["spline"]["samples"]
    assert len(samples) == 2 * 3 + 1
    assert samples[0] == [0.0, 0.0]
    assert [0.5, -0.875] in samples
    assert samples[-1] == [3.0, 3.0]


def test_lagrange_report_contents(tmp_path, capsys):
    path = _write(tmp_path, "c.csv", "# start_index=0\n0\n-1\n1\n3\n")
    assert run_cli(["lagrange", path]) == 0
    doc = _report(capsys)
    got = doc["lagrange"]["coefficients"]
    for value, want in zip(got, (0.0, -3.5, 3.0, -0.5)):
        assert value == pytest.approx(want, abs=1e-12)
    assert doc["lagrange"]["convexity_class"] == "neither"
    assert doc["lagrange"]["interval"] == [0.0, 3.0]


def test_hull_report_contents(tmp_path, capsys):
    path = _write(tmp_path, "s.csv", "1\n3\n2\n")
    assert run_cli(["hull", path]) == 0
    doc = _report(capsys)
    assert doc["hull"]["v"] == [1.0, 2.0, 2.0]
    assert doc["hull"]["witnesses"] == [[1], [1, 1], [3]]


def test_check_convex_reports_violations(tmp_path, capsys):
    path = _write(tmp_path, "spike.csv", "# start_index=0\n0\n1\n0\n")
    assert run_cli(["check-convex", path]) == 1
    doc = _report(capsys)
    assert doc["convexity"]["is_convex"] is False
    assert doc["convexity"]["defining_violations"] == [[1, 2.0]]
    assert doc["convexity"]["first_violating_triple"] == [0, 1, 2]


def test_decompose_writes_round_trip_files(tmp_path, capsys):
    rng = random.Random(2020)
    values = tuple(float(rng.randint(-10, 10)) for _ in range(30))
    u = Sequence(values, 1)
    src = tmp_path / "u.json"
    write_sequence(src, u)
    out_v = tmp_path / "v.csv"
    out_w = tmp_path / "w.json"
    code = run_cli(
        ["decompose", str(src), "--out-v", str(out_v), "--out-w", str(out_w)]
    )
    assert code == 0
    doc = _report(capsys)
    v = read_sequence(out_v)
    w = read_sequence(out_w)
    assert list(v.values) == doc["decomposition"]["v"]
    assert list(w.values) == doc["decomposition"]["w"]
    assert tuple(a + b for a, b in zip(v.values, w.values)) == u.values


# ------------------------------------------------------------------ exit codes

def test_error_exits_with_one_line_diagnostic(tmp_path, capsys):
    base0 = _write(tmp_path, "zero.csv", "# start_index=0\n1\n2\n")
    garbage = _write(tmp_path, "bad.csv", "1\ntwo\n")
    pair = _write(tmp_path, "pair.csv", "1\n2\n")
    cases = [
        ["hull", str(tmp_path / "missing.csv")],
        ["hull", base0],
        ["epsilon", base0],
        ["decompose", base0],
        ["check-subadd", base0],
        ["check-convex", garbage],
        ["check-convex", base0, "--bogus"],
        ["no-such-command", base0],
        ["spline", pair],
        ["spline", base0, "--samples", "0"],
        ["check-subadd", _write(tmp_path, "ok.csv", "1\n2\n"), "--eps", "-1"],
        [],
    ]
    for argv in cases:
        assert run_cli(argv) == 2, argv
        captured = capsys.readouterr()
        assert captured.err.strip(), argv
        assert len(captured.err.strip().splitlines()) == 1, argv


def test_support_on_singleton_is_an_input_error(tmp_path, capsys):
    path = _write(tmp_path, "one.csv", "5\n")
    assert run_cli(["support", path]) == 2
    assert "too short" in capsys.readouterr().err


def test_help_exits_zero(capsys):
    assert run_cli(["--help"]) == 0
    capsys.readouterr()


# ------------------------------------------------------------- global options

def test_tolerance_flags_work_in_both_positions(tmp_path, capsys):
    # convex only if the checks run with a loose tolerance
    path = _write(tmp_path, "margin.csv", "# start_index=0\n0\n0.2\n0\n")
    assert run_cli(["check-convex", path]) == 1
    capsys.readouterr()
    assert run_cli(["--abs-tol", "0.5", "check-convex", path]) == 0
    capsys.readouterr()
    assert run_cli(["check-convex", path, "--abs-tol", "0.5"]) == 0
    doc = _report(capsys)
    assert doc["tolerance"]["abs_tol"] == 0.5


def test_csv_format_flattens_report(tmp_path, capsys):
    path = _write(tmp_path, "c.csv", "# start_index=0\n0\n-1\n1\n3\n")
    assert run_cli(["check-convex", path, "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "key,value"
    assert "convexity.is_convex,true" in lines
    assert "input.start_index,0" in lines


def test_csv_format_spline_emits_plot_data(tmp_path, capsys):
    path = _write(tmp_path, "c.csv", "# start_index=0\n0\n-1\n1\n3\n")
    assert run_cli(["spline", path, "--format", "csv", "--samples", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    pieces = [line for line in lines if line.startswith("# piece ")]
    assert len(pieces) == 2
    header_at = lines.index("x,y")
    assert len(lines) - header_at - 1 == 4 * 3 + 1
    assert lines[header_at + 1] == "0.0,0.0"


def test_output_is_deterministic(tmp_path, capsys):
    path = _write(tmp_path, "s.csv", "1\n3\n2\n")
    assert run_cli(["decompose", path]) == 0
    first = capsys.readouterr().out
    assert run_cli(["decompose", path]) == 0
    assert capsys.readouterr().out == first


def test_numbers_round_trip_through_report_json(tmp_path, capsys):
    from seqineq import subadditive_hull

    values = (0.1, 1.0 / 3.0, 2.0)
    u = Sequence(values, 1)
    path = tmp_path / "f.csv"
    write_sequence(path, u)
    assert run_cli(["hull", str(path)]) == 0
    doc = _report(capsys)
    # JSON serialization must not lose a single bit of the computed hull
    assert tuple(doc["hull"]["v"]) == subadditive_hull(u).v.values
