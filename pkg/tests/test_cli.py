"""End-to-end tests of the command-line front end via main(argv)."""

import io
import json
import sys
from fractions import Fraction

from sqtaut.cli import main
from sqtaut.jsonio import emit_kl, emit_pointed, parse_kl, parse_kl_pretty, parse_pointed
from sqtaut.kappa_lambda import kappa_class, lambda_class, lambda_to_kappa
from sqtaut.pointed import chern_F, pc_mul, pc_psihat, theorem5_class
from sqtaut.curve import prop8_relation


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_relation_pretty_reparses(capsys):
    code, out = run(capsys, "relation", "--theorem5", "-g", "6", "-d", "2",
                    "-k", "1", "--kappa-only")
    assert code == 0
    header, body = out.strip().split("\n")
    assert header == "# theorem5 g=6 d=2 k=1 (kappa-only)"
    expected = lambda_to_kappa(theorem5_class(6, 2, 1))
    assert parse_kl_pretty(body, 6) == expected


def test_relation_json_provenance(capsys):
    code, out = run(capsys, "relation", "--theorem5", "-g", "5", "-d", "1",
                    "-k", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["provenance"] == {
        "theorem": "theorem5",
        "params": {"g": 5, "d": 1, "k": 1},
    }
    assert parse_kl(payload) == theorem5_class(5, 1, 1)


def test_relation_prop8_consistency(capsys):
    code, out = run(capsys, "relation", "--prop8", "-g", "5", "-d", "1",
                    "-a", "0", "-b", "1", "-c", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["provenance"]["params"] == {"a": 0, "b": 1, "c": 2, "g": 5, "d": 1}
    assert parse_kl(payload) == 2 * (2 * 5 - 2) * theorem5_class(5, 1, 1)
    assert parse_kl(payload) == prop8_relation(5, 1, 0, 1, 2)


def test_relation_bad_parameters(capsys):
    assert run(capsys, "relation", "--theorem5", "-g", "6", "-d", "2",
               "-k", "1", "-a", "2")[0] == 2
    assert run(capsys, "relation", "--prop8", "-g", "6", "-d", "2",
               "-a", "1", "-b", "1")[0] == 2
    assert run(capsys, "relation", "--theorem5", "-g", "1", "-d", "1",
               "-k", "1")[0] == 2


def test_chern_f_json(capsys):
    code, out = run(capsys, "chern-f", "-g", "5", "-d", "2", "--degree", "2",
                    "--json")
    assert code == 0
    parsed = parse_pointed(json.loads(out))
    assert parsed == chern_F(5, 2, 2).degree_part(2)


def test_push_from_file_and_stdin(capsys, tmp_path, monkeypatch):
    part = chern_F(5, 2, 2).degree_part(2)
    payload = json.dumps(emit_pointed(part))
    src = tmp_path / "class.json"
    src.write_text(payload)
    code, out = run(capsys, "push", str(src))
    assert code == 0
    assert out.strip() == "32"
    monkeypatch.setattr(sys, "stdin", io.StringIO(payload))
    code, out = run(capsys, "push")
    assert code == 0
    assert out.strip() == "32"


def test_mult_matches_library(capsys, tmp_path):
    a = pc_psihat(4, 3, 1)
    b = pc_psihat(4, 3, 2)
    fa = tmp_path / "a.json"
    fb = tmp_path / "b.json"
    fa.write_text(json.dumps(emit_pointed(a)))
    fb.write_text(json.dumps(emit_pointed(b)))
    code, out = run(capsys, "mult", str(fa), str(fb), "--json")
    assert code == 0
    assert parse_pointed(json.loads(out)) == pc_mul(a, b)


def test_betti_output(capsys):
    code, out = run(capsys, "betti", "--d", "4")
    assert code == 0
    assert out.strip() == "1 + 3*t^2 + 3*t^4 + t^6"
    code, out = run(capsys, "betti", "--d", "4", "--json")
    payload = json.loads(out)
    assert payload["coefficients"] == {"0": "1", "2": "3", "4": "3", "6": "1"}
    assert payload["d"] == 4


def test_intersect_output(capsys):
    code, out = run(capsys, "intersect", "--d", "5", "--x1", "2", "--x2", "2")
    assert code == 0
    assert out.strip() == "6"
    code, out = run(capsys, "intersect", "--d", "5", "--x1", "2", "--x2", "2",
                    "--json")
    payload = json.loads(out)
    assert payload["value"] == "6"
    assert payload["y"] == [0, 0, 0, 0, 0]
    assert run(capsys, "intersect", "--d", "3", "--x1", "1", "--x2", "1",
               "--y", "0")[0] == 2


def test_pairing_json_small_and_large(capsys):
    code, out = run(capsys, "pairing", "--d", "2", "--k", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 3
    assert [b["length"] for b in payload["blocks"]] == [2, 1]
    assert payload["full_rank"] is True
    assert payload["entries"] == [["2", "0", "."], ["0", "2", "."], ["z", "z", "1"]]

    code, out = run(capsys, "pairing", "--d", "5", "--k", "3", "--json")
    payload = json.loads(out)
    assert payload["size"] == 225
    assert "entries" not in payload
    assert sum(b["size"] for b in payload["blocks"]) == 225


def test_conifold_output(capsys):
    code, out = run(capsys, "conifold", "--max-genus", "3", "--d", "2")
    assert code == 0
    assert "N[2,1] = 1/240" in out
    code, out = run(capsys, "conifold", "--max-genus", "3", "--d", "2",
                    "--json")
    payload = json.loads(out)
    assert payload["n1"] == {"1": "1/12", "2": "1/240", "3": "1/6048"}
    assert payload["nd"]["1"] == "1/24"
    assert payload["constant_term"] == "1"


def test_lambda_to_kappa_preserves_provenance(capsys, tmp_path):
    p = lambda_class(6, 3) + kappa_class(6, 1) * lambda_class(6, 2)
    src = tmp_path / "kl.json"
    src.write_text(json.dumps(emit_kl(p, {"theorem": "theorem5",
                                          "params": {"g": 6, "d": 2, "k": 1}})))
    code, out = run(capsys, "lambda-to-kappa", str(src), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["provenance"]["theorem"] == "theorem5"
    assert parse_kl(payload) == lambda_to_kappa(p)


def test_verify_paper_filtering(capsys):
    code, out = run(capsys, "verify-paper", "--only", "lemma4")
    assert code == 0
    assert out.splitlines()[0] == "PASS  betti"
    assert out.strip().endswith("1/1 checks passed")
    code, out = run(capsys, "verify-paper", "--only", "genus6", "--json")
    payload = json.loads(out)
    assert payload["kind"] == "verify-report"
    assert payload["passed"] is True
    assert payload["checks"][0]["id"] == "relation-genus6"
    assert run(capsys, "verify-paper", "--only", "nonsense")[0] == 2


def test_output_directory_override(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SQTAUT_OUTPUT_DIR", str(tmp_path))
    code, out = run(capsys, "betti", "--d", "3", "--output", "betti.txt")
    assert code == 0
    assert out == ""
    assert (tmp_path / "betti.txt").read_text().strip() == "1 + 2*t^2 + t^4"


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["no-such-command"]) == 2
    assert run(capsys, "push", "/no/such/file.json")[0] == 2
