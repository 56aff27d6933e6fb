import io
import json

import pytest

from zbeta import cli
from zbeta.algebra import parse_expr
from zbeta.beta import BetaElement, beta_eq
from zbeta.oracle import compare_up_to_units, wirtinger_alexander
from zbeta.tangle import parse_pd, read_table, z_beta

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_compute_pretty_and_json():
    code, out, _ = run("compute", "--pd", TREFOIL)
    assert code == 0 and "t1" in out and "h1" in out
    code, out, _ = run("compute", "--pd", TREFOIL, "--format", "json")
    assert code == 0
    element = BetaElement.from_json(json.loads(out))
    assert beta_eq(element, z_beta(parse_pd(TREFOIL)))


def test_compute_817_by_name():
    code, out, _ = run("compute", "--name", "8_17", "--format", "json")
    assert code == 0
    omega = BetaElement.from_json(json.loads(out)).omega
    expected = parse_expr("-T1^-3 + 4*T1^-2 - 8*T1^-1 + 11 - 8*T1 + 4*T1^2 - T1^3")
    assert omega == expected


def test_compute_from_file(tmp_path):
    path = tmp_path / "k.pd"
    path.write_text(TREFOIL + "\n")
    assert run("compute", "--file", str(path))[0] == 0
    assert run("compute", "--file", str(tmp_path / "missing.pd"))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("compute", "--pd", "X[1,2"),
        ("compute", "--pd", "garbage"),
        ("compute", "--name", "no_such_knot"),
        ("compute", "--pd", TREFOIL, "--stop-after", "-1"),
        ("compute", "--pd", TREFOIL, "--basepoint", "99"),
        ("alexander", "--name", "hopf_positive"),
        ("verify", "--suite", "axioms", "--trials", "0"),
        ("frobnicate",),
        (),
    ],
)
def test_bad_input_exits_2(argv):
    code, _, err = run(*argv)
    assert code == 2
    assert err


def test_error_message_names_type():
    _, _, err = run("compute", "--pd", "X[1,2")
    assert err.startswith("error: ParseError:")


def test_help_exits_0(capsys):
    assert run("--help")[0] == 0


def test_alexander():
    code, out, _ = run("alexander", "--pd", TREFOIL)
    assert code == 0
    assert compare_up_to_units(parse_expr(out.strip()), wirtinger_alexander(parse_pd(TREFOIL)))
    code, out, _ = run("alexander", "--name", "4_1", "--format", "json")
    assert code == 0 and "alexander" in json.loads(out)


def test_zg_outputs():
    assert run("zg", "--pd", "")[1].strip() == "(0,0)"
    assert run("zg", "--name", "hopf_positive")[1].strip() == "(1,1) (1,1)"
    out = run("zg", "--pd", "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")[1].strip()
    assert out in ("(3,3)", "(-3,-3)")
    data = json.loads(run("zg", "--name", "hopf_positive", "--format", "json")[1])
    assert [(c["over"], c["under"]) for c in data["components"]] == [(1, 1), (1, 1)]


def test_export_round_trip(tmp_path):
    path = tmp_path / "z.json"
    assert run("export", "--name", "6_2", "-o", str(path))[0] == 0
    element = BetaElement.from_json(json.loads(path.read_text()))
    assert beta_eq(element, z_beta(parse_pd(read_table()["6_2"])))


def test_partial_export_keeps_several_strands():
    code, out, _ = run("export", "--name", "5_2", "--stop-after", "2", "-o", "-")
    assert code == 0
    element = BetaElement.from_json(json.loads(out))
    assert len(element.tails) > 1 and len(element.heads) > 1


def test_export_unwritable_path(tmp_path):
    code, _, err = run("export", "--pd", TREFOIL, "-o", str(tmp_path / "no" / "dir" / "z.json"))
    assert code == 2 and "cannot write" in err


def test_output_is_deterministic():
    assert run("compute", "--name", "7_7")[1] == run("compute", "--name", "7_7")[1]
    a = run("verify", "--suite", "table", "--max-crossings", "5")[1]
    assert a == run("verify", "--suite", "table", "--max-crossings", "5")[1]


def test_table_override(tmp_path, monkeypatch):
    path = tmp_path / "t.tsv"
    path.write_text("# name\tpd\nmy_trefoil\t" + TREFOIL + "\n")
    assert run("compute", "--name", "my_trefoil", "--table", str(path))[0] == 0
    monkeypatch.setenv("ZBETA_TABLE", str(path))
    assert run("compute", "--name", "my_trefoil")[0] == 0
    assert run("compute", "--name", "3_1")[0] == 2
    code, out, _ = run("verify", "--suite", "table")
    assert code == 0 and "TABLE my_trefoil PASS" in out


def test_malformed_table(tmp_path):
    path = tmp_path / "t.tsv"
    path.write_text("just one column\n")
    assert run("compute", "--name", "x", "--table", str(path))[0] == 2


@pytest.mark.parametrize("suite", ["axioms", "reidemeister"])
def test_verify_suites_pass(suite):
    code, out, _ = run("verify", "--suite", suite, "--trials", "50")
    assert code == 0
    assert out.rstrip().endswith("ALL PASS")
    assert "FAIL" not in out.replace("does not", "")


def test_verify_table_json_and_timings():
    code, out, _ = run("verify", "--suite", "table", "--max-crossings", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] and {k["name"] for k in data["knots"]} >= {"3_1", "4_1"}
    assert "seconds" not in data["knots"][0]
    out = run("verify", "--suite", "table", "--max-crossings", "3", "--timings")[1]
    assert " s]" in out


def test_verify_reports_failure(monkeypatch):
    # a corner/oracle disagreement must surface as exit code 1
    monkeypatch.setattr("zbeta.verify.compare_up_to_units", lambda a, b: False)
    code, out, _ = run("verify", "--suite", "table", "--max-crossings", "3")
    assert code == 1 and "FAIL" in out
