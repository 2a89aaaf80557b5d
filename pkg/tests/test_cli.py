import json

from fastapi.testclient import TestClient

from polystab import cli, hurwitz
from polystab.cli import HttpClient, main
from polystab.service.app import app


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_stable_exit_zero(capsys):
    code, out, _ = run(capsys, "analyze", "--coeffs", "5,10,10,5,1")
    assert code == 0
    assert "Stable" in out and "LienardChipartEven" in out


def test_analyze_unstable_exit_one_with_roots(capsys):
    code, out, _ = run(capsys, "analyze", "--coeffs", "1,2,1,1,0.5", "--roots")
    assert code == 1
    assert "NotStable" in out and "Cor2" in out
    assert "classification: Unstable" in out


def test_analyze_degree_mismatch_exit_two(capsys):
    code, _, err = run(capsys, "analyze", "--coeffs", "1,2", "--degree", "3")
    assert code == 2
    assert "degree" in err


def test_analyze_bad_coefficient_exit_two(capsys):
    code, _, err = run(capsys, "analyze", "--coeffs", "1,,2")
    assert code == 2
    assert "coefficient" in err


def test_analyze_json_document(capsys):
    code, out, _ = run(capsys, "analyze", "--coeffs", "5,10,10,5,1", "--json")
    assert code == 0
    body = json.loads(out)
    assert body["schema"] == 1
    assert body["verdict"] == "Stable"
    assert body["minors"][1] == "40/1"


def test_analyze_float_mode(capsys):
    code, out, _ = run(capsys, "analyze", "--coeffs", "5,10,10,5,1", "--float", "--json")
    assert code == 0
    body = json.loads(out)
    assert body["input"]["domain"] == "float"
    assert body["minors"][1] == 40.0


def test_analyze_leading(capsys):
    # 2s^5 + 10s^4 + 20s^3 + 20s^2 + 10s + 2 normalizes to (s+1)^5
    code, out, _ = run(capsys, "analyze", "--coeffs", "10,20,20,10,2", "--leading", "2")
    assert code == 0
    assert "Stable" in out
    assert "delta4=1024" in out


def test_analyze_zero_leading_exit_two(capsys):
    code, _, err = run(capsys, "analyze", "--coeffs", "1,2", "--leading", "0")
    assert code == 2
    assert "leading" in err


def test_minors_table(capsys):
    code, out, _ = run(capsys, "minors", "--coeffs", "1,3,9/4,1,1/2")
    assert code == 0
    assert "delta4 by determinant: 5/16" in out
    assert "delta4 by expansion:   5/16" in out
    assert "delta4 by factoring:   5/16" in out
    assert "agree: true" in out


def test_minors_low_degree_note(capsys):
    code, out, _ = run(capsys, "minors", "--coeffs", "1,2,3")
    assert code == 0
    assert "degree >= 4" in out


def test_roots_exit_codes(capsys):
    code, out, _ = run(capsys, "roots", "--coeffs", "5,10,10,5,1")
    assert code == 0
    code, out, _ = run(capsys, "roots", "--coeffs", "1,1,1,1,1")
    assert code == 1
    assert "Unstable" in out


def test_fuzz_deterministic_output(capsys):
    args = ("fuzz", "--count", "200", "--seed", "42", "--json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    body = json.loads(out1)
    assert body["ok"] is True


def test_fuzz_seed_changes_output(capsys):
    _, out1, _ = run(capsys, "fuzz", "--count", "50", "--seed", "1", "--json")
    _, out2, _ = run(capsys, "fuzz", "--count", "50", "--seed", "2", "--json")
    assert out1 != out2


def test_fuzz_single_degree_range(capsys):
    code, out, _ = run(capsys, "fuzz", "--count", "20", "--degrees", "5", "--json")
    assert code == 0
    assert json.loads(out)["degree_hi"] == 5


def test_fuzz_injected_bug_exits_one(capsys, monkeypatch):
    true_factored = hurwitz.delta4_factored
    monkeypatch.setattr(hurwitz, "delta4_factored", lambda p: -true_factored(p))
    code, out, _ = run(capsys, "fuzz", "--count", "100", "--seed", "42")
    assert code == 1
    assert "counterexample" in out
    assert "delta4_triple" in out


def test_box_certified_family(capsys, tmp_path):
    bounds = tmp_path / "box.json"
    bounds.write_text(
        json.dumps(
            {
                "schema": 1,
                "degree": 5,
                "bounds": [[1, 2], [1, 2], [1, 2], [1, 2], [4, 5]],
            }
        )
    )
    code, out, _ = run(capsys, "box", "--bounds", str(bounds), "--count", "100", "--seed", "3")
    assert code == 1
    assert "entire family unstable (Cor 1)" in out
    assert "Stable=0" in out


def test_box_degenerate_stable(capsys, tmp_path):
    bounds = tmp_path / "box.json"
    bounds.write_text(
        json.dumps(
            {
                "schema": 1,
                "degree": 5,
                "bounds": [[5, 5], [10, 10], [10, 10], [5, 5], [1, 1]],
            }
        )
    )
    code, out, _ = run(capsys, "box", "--bounds", str(bounds), "--count", "50")
    assert code == 0
    assert "Stable=50" in out


def test_box_malformed_json_exit_two(capsys, tmp_path):
    bounds = tmp_path / "box.json"
    bounds.write_text('{"schema": 1,\n "degree": }')
    code, _, err = run(capsys, "box", "--bounds", str(bounds))
    assert code == 2
    assert "line 2" in err and "column" in err


def test_box_missing_file_exit_two(capsys, tmp_path):
    code, _, err = run(capsys, "box", "--bounds", str(tmp_path / "absent.json"))
    assert code == 2


def test_box_missing_schema_field_exit_two(capsys, tmp_path):
    bounds = tmp_path / "box.json"
    bounds.write_text(json.dumps({"degree": 5, "bounds": [[1, 2]] * 5}))
    code, _, err = run(capsys, "box", "--bounds", str(bounds))
    assert code == 2
    assert "schema" in err


def test_box_deterministic_output(capsys, tmp_path):
    bounds = tmp_path / "box.json"
    bounds.write_text(
        json.dumps(
            {"schema": 1, "degree": 5, "bounds": [[1, 2], [1, 2], [1, 2], [1, 2], [4, 5]]}
        )
    )
    args = ("box", "--bounds", str(bounds), "--count", "150", "--seed", "9", "--json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2
    assert out1 == out2


def test_box_json_output(capsys, tmp_path):
    bounds = tmp_path / "box.json"
    bounds.write_text(
        json.dumps(
            {"schema": 1, "degree": 5, "bounds": [[1, 2], [1, 2], [1, 2], [1, 2], [4, 5]]}
        )
    )
    code, out, _ = run(
        capsys, "box", "--bounds", str(bounds), "--count", "20", "--json"
    )
    assert code == 1
    body = json.loads(out)
    assert body["family_unstable"] is True
    assert body["samples"]["count"] == 20


def _wired_http_client() -> HttpClient:
    client = HttpClient.__new__(HttpClient)
    client._client = TestClient(app)
    return client


def test_url_mode_goes_over_the_wire(capsys, monkeypatch):
    monkeypatch.setattr(cli, "HttpClient", lambda url: _wired_http_client())
    code, out, _ = run(
        capsys, "analyze", "--coeffs", "5,10,10,5,1", "--url", "http://example", "--json"
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "Stable"


def test_url_mode_maps_errors(capsys, monkeypatch):
    monkeypatch.setattr(cli, "HttpClient", lambda url: _wired_http_client())
    code, _, err = run(
        capsys, "analyze", "--coeffs", "1,2", "--degree", "3", "--url", "http://example"
    )
    assert code == 2
    assert "degree" in err
