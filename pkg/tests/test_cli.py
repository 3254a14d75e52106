import io
import json
from importlib import resources

import pytest

from fpg.cli import cmd_dispatch


def run(capsys, *argv):
    code = cmd_dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def corpus_file(name):
    return str(resources.files("fpg") / "data" / "corpus" / f"{name}.cert")


def test_show(capsys):
    code, out, _ = run(capsys, "show", "main")
    assert code == 0
    assert len(out.splitlines()[0].split()[1:]) == 9
    code, out, _ = run(capsys, "show", "stab_beta")
    assert code == 0 and out.startswith("gens:")


def test_show_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("gens: x\nrel r: x x\n"))
    code, out, _ = run(capsys, "abelianize", "-")
    assert code == 0 and out.strip() == "Z2"


@pytest.mark.parametrize("argv", [[], ["show", "nope"], ["bogus"], ["tc", "main", "--strategy", "x"],
                                  ["verify-paper", "--only", "nothing"],
                                  ["tietze", "main", "--eliminate", "t"]])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_unknown_dataset_message(capsys):
    code, _, err = run(capsys, "show", "nope")
    assert code == 2 and "fpg: error" in err and "nope" in err


def test_abelianize(capsys):
    assert run(capsys, "abelianize", "main")[1].strip() == "Z2 x Z2 x Z2"


def test_tietze(capsys):
    code, out, _ = run(capsys, "tietze", "main", "--abelianize")
    assert code == 0
    assert out.splitlines()[0].split()[1:] == ["a1", "a2", "a3", "b", "u3"]
    assert "Z2 x Z2 x Z2" in out


def test_tc(capsys):
    code, out, _ = run(capsys, "tc", "main", "--subgroup", "a1; u3; b a1 a2 a3", "--verify")
    assert code == 0 and out.strip() == "index=1"


def test_tc_perm(capsys, tmp_path):
    f = tmp_path / "s3.txt"
    f.write_text("gens: x y\nrel 1: x x\nrel 2: y y y\nrel 3: x y x y\n")
    code, out, _ = run(capsys, "tc", str(f), "--perm", "--strategy", "felsch")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "index=6" and len(lines) == 3


def test_tc_cap(capsys):
    code, out, _ = run(capsys, "tc", "main", "--max-cosets", "5")
    assert code == 1 and out.startswith("cap-exceeded")


def test_cert_check(capsys, monkeypatch):
    code, out, _ = run(capsys, "cert", "check", corpus_file("RT12"))
    assert code == 0 and out.startswith("valid")
    with open(corpus_file("E2")) as fh:
        monkeypatch.setattr("sys.stdin", io.StringIO(fh.read()))
    assert run(capsys, "cert", "check", "-")[0] == 0


def test_cert_check_invalid(capsys, tmp_path):
    f = tmp_path / "bad.cert"
    f.write_text("presentation: main\ntarget: a1 a2\nfactor: 1 | main.15 | +1\n")
    code, out, _ = run(capsys, "cert", "check", str(f))
    assert code == 1 and out.startswith("invalid")
    f.write_text("nonsense\n")
    assert run(capsys, "cert", "check", str(f))[0] == 2


def test_cert_search(capsys):
    code, out, _ = run(capsys, "cert", "search", "main", "a1 a2 a1 a2^-1 a1^-1 a2^-1")
    assert code == 0 and "factor:" in out
    code, out, _ = run(capsys, "cert", "search", "main", "a1", "--max-factors", "1", "--max-conj", "0")
    assert code == 1


def test_cert_corpus(capsys):
    code, out, _ = run(capsys, "cert", "corpus")
    assert code == 0 and out.splitlines()[-1].endswith("valid")


def test_rep_verify(capsys):
    code, out, _ = run(capsys, "rep", "verify", "main")
    assert code == 0
    assert out.splitlines()[-1] == "27/27 relators hold; image order 48"


def test_brown(capsys):
    code, out, _ = run(capsys, "brown", "--crosscheck")
    assert code == 0
    assert "generators=43 relators=154 (expected 43, 154)" in out
    assert "torsion=[2, 2, 2] rank=0" in out
    code, out, _ = run(capsys, "brown", "--emit")
    assert code == 0 and len(out.splitlines()) == 155


def test_brown_bad_file(capsys, tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("vertex V\n")
    assert run(capsys, "brown", str(f))[0] == 2


def test_verify_paper_subset(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "abelianization,homology")
    assert code == 0
    assert out.splitlines()[-1] == "2/2 checks passed"


def test_verify_paper_json(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "abelianization", "--only", "brown", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["ok"]
    assert [c["name"] for c in payload["checks"]] == ["abelianization", "brown"]


def test_verify_paper_full(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert out.splitlines()[-1] == "8/8 checks passed"


def test_deterministic(capsys):
    first = run(capsys, "tietze", "main")
    assert run(capsys, "tietze", "main") == first
