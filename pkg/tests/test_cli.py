import json
import pathlib

import pytest

from ringlab.cli import main

DATA = pathlib.Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_info_human_and_json(capsys):
    code, out = run(capsys, "info", str(DATA / "z12.json"))
    assert code == 0 and "size=12 local=False units=4" in out
    code, out = run(capsys, "--json", "info", str(DATA / "z12.json"))
    report = json.loads(out)
    assert code == 0
    assert report["ring_summary"]["maximal_ideals"] == ["(3)", "(2)"]
    assert report["tool_version"] and report["command"] == "info"


def test_ideals_lists_full_lattice(capsys):
    code, out = run(capsys, "--json", "ideals", str(DATA / "z12.json"))
    payload = json.loads(out)["payload"]
    assert code == 0 and len(payload) == 6
    assert payload[0]["size"] == 1 and payload[0]["generators"] == []
    assert payload[-1]["size"] == 12


def test_check_ideal_on_named_and_explicit_gens(capsys):
    code, out = run(capsys, "--json", "check-ideal", str(DATA / "local32.json"),
                    "--ideal", "X", "--n", "3")
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["prime"] is False and payload["n_oa"] is False
    assert payload["witness_kind"] == "n-oa"
    code, out = run(capsys, "--json", "check-ideal", str(DATA / "z12.json"),
                    "--gens", "0", "--n", "1")
    assert code == 0 and json.loads(out)["payload"]["prime"] is False


def test_check_ideal_on_pair_generators(capsys):
    code, out = run(capsys, "--json", "check-ideal", str(DATA / "te_z4.json"),
                    "--gens", "[0,1]", "--n", "2")
    assert code == 0
    assert json.loads(out)["payload"]["n_oa"] is True


def test_factor_prime_mode_with_replay(capsys):
    code, out = run(capsys, "--json", "factor", str(DATA / "z12.json"),
                    "--gens", "4", "--mode", "prime", "--replay")
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["factors"] == ["(2)", "(2)"] and payload["replayed"] is True


def test_factor_oa_mode_reports_none(capsys):
    code, out = run(capsys, "factor", str(DATA / "local32.json"),
                    "--ideal", "X", "--mode", "oa", "--n", "3")
    assert code == 0 and "NONE" in out


def test_classify_verdict_lines(capsys):
    code, out = run(capsys, "classify", str(DATA / "local32.json"), "--max-n", "4")
    assert code == 0
    assert "n=3 NO (witness (y3, x))" in out or "n=3 NO" in out
    assert "n=4 YES" in out and "oaf_dim (n<=4) = 4" in out


def test_spec_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"version":1,"ring":{"kind":"zmod","n":"x"}}')
    assert run(capsys, "info", str(bad))[0] == 2
    unparsable = tmp_path / "syntax.json"
    unparsable.write_text("{")
    assert run(capsys, "info", str(unparsable))[0] == 2
    assert run(capsys, "info", str(tmp_path / "missing.json"))[0] == 2


def test_guard_exit_code(capsys):
    assert run(capsys, "info", str(DATA / "z12.json"), "--max-ring-size", "5")[0] == 3
    assert run(capsys, "check-ideal", str(DATA / "z12.json"),
               "--gens", "6", "--n", "3", "--tuple-budget", "5")[0] == 3


def test_usage_exit_code(capsys):
    with pytest.raises(SystemExit) as err:
        main(["bogus-command"])
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 1


def test_verify_default_corpus_passes(capsys):
    code, out = run(capsys, "verify")
    assert code == 0 and "failures=0" in out


def test_verify_broken_corpus_exits_4(capsys):
    code, out = run(capsys, "verify", "--corpus", str(DATA / "broken_corpus.json"))
    assert code == 4


def test_worked_examples_match_golden_files(capsys):
    code, out = run(capsys, "worked-examples")
    assert code == 0
    assert out == (DATA / "worked_examples.txt").read_text()
    code, out = run(capsys, "--json", "worked-examples")
    assert code == 0
    assert out == (DATA / "worked_examples.json").read_text()


def test_json_output_is_deterministic(capsys):
    _, first = run(capsys, "--json", "verify")
    _, second = run(capsys, "--json", "verify")
    assert first == second
