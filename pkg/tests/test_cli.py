import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ROOT, ratio_integer_example
from hypernf.cli import InputError, Options, emit, load_report, main, parse_input, run_pipeline
from hypernf.liealg import basis
from hypernf.verify import verify_run

EXAMPLES = ROOT / "examples_io"


def pr_doc(system, **options):
    terms = [{"term": t.name(), "coeff": str(c)} for t, c in system.body.items()]
    return {"mode": "pr", "terms": terms, "options": options}


def test_ratio_integer_document_has_twenty_terms():
    spec = parse_input(pr_doc(ratio_integer_example()))
    # 19 body terms plus Theta
    assert len(spec.terms) + 1 == 20
    assert spec.system() == ratio_integer_example()


def test_empty_terms_is_valid():
    spec = parse_input({"mode": "pr", "terms": []})
    assert spec.terms == () and spec.options == Options()


@pytest.mark.parametrize(
    "doc,path",
    [
        ({"mode": "pr", "terms": [{"term": "P1[0,1]", "coeff": "1/0"}]}, "$.terms[0].coeff"),
        ({"mode": "pr", "terms": [{"term": "Q1[0,1]", "coeff": "1"}]}, "$.terms[0].term"),
        ({"mode": "pr", "terms": [{"term": "R1[0,0]", "coeff": "1"}]}, "$.terms[0].term"),
        ({"mode": "xx"}, "$.mode"),
        ({"mode": "pr", "extra": 1}, "$.extra"),
        ({"mode": "pr", "options": {"level": 0}}, "$.options.level"),
        ({"mode": "complex", "monomials": [{"exps": [1, 0, 0], "component": 1, "coeff": "1"}]}, "$.monomials[0].exps"),
    ],
)
def test_errors_carry_path(doc, path):
    with pytest.raises(InputError) as exc:
        parse_input(doc)
    assert exc.value.path == path


def test_bad_json():
    with pytest.raises(InputError):
        parse_input("{not json")


names = st.sampled_from([t.name() for n in range(1, 4) for t in basis(n)])
coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(bool).map(str)


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.tuples(names, coeffs), max_size=8, unique_by=lambda x: x[0]),
    st.integers(1, 6),
    st.one_of(st.integers(1, 5), st.just("inf")),
    st.sampled_from(["paper", "lex"]),
)
def test_roundtrip(terms, grade, level, style):
    doc = {
        "mode": "pr",
        "terms": [{"term": n, "coeff": c} for n, c in terms],
        "options": {"grade": grade, "level": level, "style": style},
    }
    spec = parse_input(doc)
    assert parse_input(emit(spec)) == spec


def test_complex_roundtrip():
    spec = parse_input((EXAMPLES / "complex_small.json").read_text())
    assert parse_input(emit(spec)) == spec


def test_pipeline_level_one_identity():
    spec = parse_input(pr_doc(ratio_integer_example(), grade=3, level=1))
    rep = run_pipeline(spec)
    assert rep.chain == [] or all(not g for g in rep.chain)
    assert rep.verification.status == "pass"


def test_report_reload_verifies():
    spec = parse_input(pr_doc(ratio_integer_example(2), grade=4, level=2))
    rep = run_pipeline(spec)
    again = load_report(json.loads(rep.dumps()))
    assert verify_run(spec.system(), again).status == "pass"


@pytest.mark.parametrize("name", ["case2_ratio_integer.json", "case3_a01_zero.json", "complex_small.json"])
def test_normalize_examples(name, tmp_path, capsys):
    out = tmp_path / "rep.json"
    assert main(["normalize", "--input", str(EXAMPLES / name), "--output", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["verification"]["status"] == "pass"
    assert main(["verify", "--input", str(EXAMPLES / name), "--report", str(out)]) == 0


def test_verify_detects_tampering(tmp_path):
    out = tmp_path / "rep.json"
    src = EXAMPLES / "case2_ratio_integer.json"
    assert main(["normalize", "--input", str(src), "--output", str(out)]) == 0
    rep = json.loads(out.read_text())
    rep["final"]["terms"][0]["coeff"] = "12345"
    out.write_text(json.dumps(rep))
    assert main(["verify", "--input", str(src), "--report", str(out)]) == 1


def test_exit_code_on_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"mode": "pr", "terms": [{"term": "P1[0,1]", "coeff": "1/0"}]}))
    assert main(["normalize", "--input", str(bad)]) == 2
    assert "$.terms[0].coeff" in capsys.readouterr().err


def test_rank_command(capsys):
    assert main(["rank", "--n", "2", "--coeffs", "1,-2,1,-1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["rank"] == 7 and out["dim"] == 12
    assert out["case"]["variant"] == "I"
    assert out["predicted_rank"] == 7


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "hypernf", "rank", "--n", "3", "--coeffs", "1,2,1,-1"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["rank"] == 12


def test_byte_identical_reports(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    src = str(EXAMPLES / "case3_a01_zero.json")
    main(["normalize", "--input", src, "--output", str(a)])
    main(["normalize", "--input", src, "--output", str(b)])
    assert a.read_bytes() == b.read_bytes()
