import io
import json
import subprocess
import sys

import pytest

from quotsemi.cli import ScanConfig, main, run, run_scan


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_invariants_text():
    code, out = call("invariants", "7", "59", "6", "--mode", "both")
    assert code == 0
    assert "m=7 e=3 t=2 f=52 g=29" in out
    assert "Irr {7,11,59}" in out and "PF {48,52}" in out


def test_invariants_json_schema():
    code, out = call("invariants", "7", "59", "6", "--json")
    data = json.loads(out)
    assert code == 0
    assert list(data) == [
        "multiplicity",
        "embedding_dim",
        "type",
        "frobenius",
        "genus",
        "irr",
        "pf",
        "symmetric",
        "wilf_margin",
        "method",
        "case_tag",
    ]
    assert data["irr"] == [7, 11, 59] and data["pf"] == [48, 52]
    assert data["wilf_margin"] == "-19/159"


def test_json_and_text_agree():
    _, text = call("invariants", "13", "29", "17")
    _, js = call("invariants", "13", "29", "17", "--json")
    data = json.loads(js)
    assert f"f={data['frobenius']}" in text and f"g={data['genus']}" in text


def test_domain_error_exit(capsys):
    code, _ = call("invariants", "4", "6", "5")
    assert code == 1
    assert "NotCoprime" in capsys.readouterr().err


def test_usage_error_exit():
    assert main(["invariants", "4"]) == 2
    assert main(["nosuchverb"]) == 2


def test_reverse_case1():
    code, out = call("reverse", "7", "11", "59", "--case", "1")
    assert code == 0
    assert "(7,59,6)" in out and "(11,59,10)" in out


def test_reverse_json_verify():
    code, out = call("reverse", "10", "17", "24", "--limit", "2", "--verify", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["case1"]["triples"] == []
    assert [10, 127, 11] in data["case2"]["triples"]
    assert all(data["case2"]["verified"]) and all(data["case3"]["verified"])
    fam = data["case2"]["families"][0]
    assert fam["formula"] == "<10, 24k-17>/(2k-1)"
    assert fam["exclusions"] == [{"mod": 5, "residue": 3}]


def test_cf():
    code, out = call("cf", "5/7", "--ceiling", "--convergents")
    assert code == 0 and "⌈1,4,2⌉" in out and "2 5/7" in out
    code, out = call("cf", "5/7", "--semiconvergents")
    assert "[0,1,2,1,1]" in out and "1/2" in out
    code, _ = call("cf", "abc")
    assert code == 1


def test_ostrowski():
    code, out = call("ostrowski", "5/7", "4")
    assert code == 0
    assert "digits (1,0,1)" in out and "6/7" in out and "FAIL" not in out
    assert call("ostrowski", "5/7", "9")[0] == 1


def test_scan_clean_and_deterministic():
    n1, v1 = run_scan(ScanConfig(8, 12, 30, "oracle", 1))
    n2, v2 = run_scan(ScanConfig(8, 12, 30, "oracle", 2))
    assert n1 == n2 > 0 and v1 == v2 == []
    code, out = call("scan", "--max-a", "6", "--max-b", "9", "--max-d", "20", "--check", "cases")
    assert code == 0 and out == ""


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "quotsemi", "invariants", "5", "7", "23"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and "Irr {2,3}" in res.stdout


def test_scan_reports_violations(monkeypatch):
    import dataclasses

    import quotsemi.cli as cli

    real = cli.fast_report

    def broken(spec):
        rep = real(spec)
        if (spec.a, spec.b, spec.d) == (3, 5, 7):
            rep = dataclasses.replace(rep, genus=rep.genus + 1)
        return rep

    monkeypatch.setattr(cli, "fast_report", broken)
    code, out = call("scan", "--max-a", "4", "--max-b", "6", "--max-d", "8")
    assert code == 3
    assert out.strip().splitlines() == ["3 5 7 genus 2 1"]
