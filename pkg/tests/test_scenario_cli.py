import io
import json
import pathlib
import re

import jsonschema
import pytest

from semiframes import ScenarioError
from semiframes.cli import main
from semiframes.report import run_scenario, to_json
from semiframes.scenario import (BUILTIN, builtin_scenario, format_scenario, parse_scenario)

ROOT = pathlib.Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "tests" / "golden"
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())

MINIMAL = """\
SEQUENCES
f = weighted weight=n

TASKS
classify f
"""


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def _diagnostics(text):
    with pytest.raises(ScenarioError) as info:
        parse_scenario(text)
    return info.value.diagnostics


def test_minimal_scenario_parses():
    scn = parse_scenario(MINIMAL)
    assert [d.name for d in scn.sequences] == ["f"]
    assert scn.tasks[0].kind == "classify"
    assert scn.ladder.levels == (8, 16, 32, 64, 128)


def test_undefined_operator_is_reported_with_line():
    text = MINIMAL.replace("classify f", "classify f\ntransform image f K")
    diags = _diagnostics(text)
    assert any(line == 6 and "K" in msg for line, msg in diags)


@pytest.mark.parametrize("text,line,needle", [
    ("SEQUENCES\nf = weighted weight=n\nTASKS\nclassify g\n", 4, "g"),
    ("SEQUENCES\nf = wavelet a=1\n", 2, "wavelet"),
    ("SPACES\nladder = 8,4,16\n", 2, "ladder"),
    ("SEQUENCES\nf = weighted weight=n\nf = weighted weight=1\n", 3, "f"),
    ("TASKS\nclassify\n", 2, "classify"),
    ("OPERATORS\nL = diagonal 1/n\nTASKS\nclassify L\n", 4, "L"),
    ("SEQUENCES\nf = weighted weight=n\nTASKS\ncheck-prop Prop-7.1 f=f\n", 4, "Prop-7.1"),
    ("SEQUENCES\na = sum a a\n", 2, "a"),
    ("classify f\n", 1, ""),
])
def test_diagnostics_carry_locations(text, line, needle):
    diags = _diagnostics(text)
    assert any(ln == line and needle in msg for ln, msg in diags), diags


@pytest.mark.parametrize("name", sorted(BUILTIN))
def test_builtin_round_trip(name):
    scn = builtin_scenario(name)
    text = format_scenario(scn)
    assert parse_scenario(text) == scn
    assert format_scenario(parse_scenario(text)) == text


def test_round_trip_with_quoted_formulas():
    text = MINIMAL.replace("f = weighted weight=n",
                           "f = weighted 'weight=n*(1-n%2)' index=n/2 dim=d//2\n"
                           "g = weighted weight=periodic(0.5,-2.0;power=1) index=block(2,1)")
    scn = parse_scenario(text)
    assert parse_scenario(format_scenario(scn)) == scn


@pytest.mark.parametrize("name", sorted(BUILTIN))
def test_golden_reports(name):
    code, out, _ = run_cli("run", name, "--json")
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()
    jsonschema.validate(json.loads(out), SCHEMA)


def test_reports_are_byte_identical_across_runs():
    args = ("check", "--random", "2", "--seed", "5", "--prop", "Prop-4.3", "--json")
    assert run_cli(*args)[1] == run_cli(*args)[1]


def test_classify_output(tmp_path):
    code, out, err = run_cli("classify", "weighted weight=1/n", "--json")
    assert code == 0
    assert "lower_semi_frame: false (A trajectory VANISHING" in err
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    lower = report["tasks"][0]["verdict"]["lower"]
    assert lower["values"][-1] == pytest.approx(1 / 128**2)


def test_human_numbers_are_in_json():
    code, out, err = run_cli("transform", "family-sum", "weighted weight=n",
                             "weighted weight=-1/2", "--json")
    assert code == 0
    report = json.loads(out)
    sh = report["tasks"][0]["sum_hypotheses"]
    assert sh["guarantee"] == pytest.approx(0.25)
    assert "0.25" in err
    numbers, strings = set(), []

    def walk(o):
        if isinstance(o, dict):
            for v in o.values():
                walk(v)
        elif isinstance(o, list):
            for v in o:
                walk(v)
        elif isinstance(o, str):
            strings.append(o)
        elif isinstance(o, (int, float)) and not isinstance(o, bool):
            numbers.add(o)

    walk(report)
    # formula texts inside descriptions are strings in the JSON too
    for text in sorted(strings, key=len, reverse=True):
        err = err.replace(text, "")
    for tok in re.findall(r"(?<![\w.])-?\d+(?:\.\d+)?(?:e-?\d+)?", err):
        assert float(tok) in numbers, tok


def test_direct_sum_cli():
    code, out, _ = run_cli("direct-sum", "weighted 'weight=n*(1-n%2)' index=n/2 dim=d//2",
                           "weighted 'weight=n*(n%2)' 'index=(n+1)/2' 'dim=(d+1)//2'", "--json")
    assert code == 0
    task = json.loads(out)["tasks"][0]
    assert task["taxonomy"]["strongly_disjoint"] is True
    assert set(task["sum_verdict"]["lower"]["values"]) == {1.0}


def test_reproduce_all_examples():
    code, out, err = run_cli("reproduce-paper", "--json")
    assert code == 0
    report = json.loads(out)
    names = [e["example"] for t in report["tasks"] for e in t["examples"]]
    assert names == ["example-3.4", "example-3.8", "example-5.7"]
    assert report["summary"]["reproduced"] is True
    assert "printed_coefficient: 3" in err


@pytest.mark.parametrize("argv", [
    ("reproduce-paper", "example-9.9"),
    ("classify", "wavelet a=1"),
    ("classify", "weighted weight=n", "--ladder", "8,4"),
    ("check", "--seed", "-1"),
    ("check", "--random", "-2"),
    ("check", "--prop", "Prop-0.1"),
    ("transform", "image", "weighted weight=n", "weighted weight=1"),
    ("transform", "image", "weighted weight=n", "diagonal 1/n", "diagonal n"),
    ("run", "/nonexistent/scenario.txt"),
    ("frobnicate",),
    (),
])
def test_config_errors_exit_3(argv):
    assert run_cli(*argv)[0] == 3


def test_falsification_exits_2():
    code, out, _ = run_cli("check", "--no-builtin", "--counterexamples", "--json")
    assert code == 2
    assert json.loads(out)["summary"]["counts"]["FALSIFIED"] == 5


def test_check_builtins_exit_0():
    code, out, _ = run_cli("check", "--json")
    report = json.loads(out)
    assert code == 0 and report["summary"]["counts"]["FALSIFIED"] == 0


def test_run_from_file_and_format(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text(MINIMAL)
    code, out, err = run_cli("run", str(path), "--ladder", "4,8,16", "--json")
    assert code == 0
    assert json.loads(out)["ladder"] == [4, 8, 16]
    code, out, _ = run_cli("format", str(path))
    assert code == 0 and parse_scenario(out) == parse_scenario(MINIMAL)


def test_run_scenario_api_matches_cli():
    scn = builtin_scenario("example-3.8")
    assert to_json(run_scenario(scn)) == (GOLDEN / "example-3.8.json").read_text()
