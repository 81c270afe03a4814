import json

import pytest

from grothkit.cli import main
from grothkit.grothendieck import GrothCache
from grothkit.verify import run_verify


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute(capsys):
    assert run(capsys, "compute", "21", "--format", "latex")[:2] == (0, "1-\\frac{y_1}{x_1}\n")
    assert run(capsys, "compute", "12", "--format", "latex")[:2] == (0, "1\n")
    code, out, _ = run(capsys, "compute", "2,1", "--format", "json")
    assert json.loads(out)["n"] == 2


def test_compute_via_dumped_cache(capsys, tmp_path, monkeypatch):
    dump = tmp_path / "cache.json"
    monkeypatch.setenv("GROTHKIT_CACHE_DUMP", str(dump))
    _, first, _ = run(capsys, "compute", "132", "--format", "json")
    monkeypatch.delenv("GROTHKIT_CACHE_DUMP")
    assert dump.exists()
    _, second, _ = run(capsys, "compute", "132", "--format", "json", "--cache", str(dump))
    assert first == second


def test_parse_errors_exit_2(capsys):
    assert run(capsys, "compute", "2x")[0] == 2
    assert run(capsys, "compute", "221")[0] == 2
    assert run(capsys, "compute", "21", "--n", "3")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "21", "--format", "yaml"])
    assert exc.value.code == 2


def test_specialize(capsys):
    assert run(capsys, "specialize", "21", "21", "--format", "latex")[1] == "1-\\frac{y_1}{y_2}\n"
    assert run(capsys, "specialize", "21", "12")[1] == "0\n"
    assert run(capsys, "specialize", "e", "2413")[1] == "1\n"
    code, out, _ = run(capsys, "specialize", "231", "321", "--format", "json")
    assert code == 0
    assert all(not any(t["x"]) for t in json.loads(out)["terms"])


def test_diagram(capsys):
    code, out, _ = run(capsys, "diagram", "2157634", "--mode", "labels")
    assert code == 0
    assert out.splitlines()[3].split() == ["s4", "s5", "s6"]
    assert run(capsys, "diagram", "1")[:2] == (0, "")
    code, out, _ = run(capsys, "diagram", "2157634", "--mode", "json")
    assert len(json.loads(out)["boxes"]) == 8
    code, out, _ = run(capsys, "diagram", "2157634", "--mode", "weights")
    assert "1-y6/y7" in out


def test_hecke(capsys):
    code, out, _ = run(capsys, "hecke", "321", "321")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 1
    assert doc["diagrams"][0]["word"] == [2, 1, 2]
    _, pruned, _ = run(capsys, "hecke", "321", "321", "--prune")
    assert pruned == out
    code, out, _ = run(capsys, "hecke", "21", "12")
    assert json.loads(out)["count"] == 0 and json.loads(out)["rhs"]["terms"] == []


def test_verify_small(capsys):
    code, out, err = run(capsys, "verify", "--n", "2", "--mode", "theorem", "--jobs", "1")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert len(doc["rows"]) == 4 and all(r["equal"] for r in doc["rows"])
    zero_row = next(r for r in doc["rows"] if (r["u"], r["v"]) == ("21", "12"))
    assert zero_row["hecke_count"] == 0 and zero_row["lhs_terms"] == 0
    assert "PASS" in err and '"u"' not in err

    code, out, _ = run(capsys, "verify", "--n", "3", "--jobs", "1")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 36 and all(r["equal"] for r in rows)


def test_verify_rank_guard(capsys):
    assert run(capsys, "verify", "--n", "0")[0] == 2
    assert run(capsys, "verify", "--n", "7")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "3", "--mode", "bogus"])
    assert exc.value.code == 2


def test_verify_lemmas_mode(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--mode", "lemmas", "--jobs", "1")
    doc = json.loads(out)
    assert code == 0 and doc["rows"] == []
    assert [c["lemma"] for c in doc["lemmas"]] == ["lemma1", "lemma2", "lemma3", "lemma4", "lemma5"]
    assert all(c["cases"] > 0 and not c["failures"] for c in doc["lemmas"])


def test_verify_prune_same_rows(capsys):
    _, plain, _ = run(capsys, "verify", "--n", "4", "--jobs", "1")
    _, pruned, _ = run(capsys, "verify", "--n", "4", "--jobs", "1", "--prune")
    assert plain == pruned


def test_verify_reports_mismatch(capsys, monkeypatch):
    # corrupt one cached polynomial: the harness must flag exactly the affected pairs
    cache = GrothCache(3).warm()
    from grothkit.permutation import parse
    cache.table[parse("132")] = cache.table[parse("132")] + 1
    report = run_verify(3, "theorem", jobs=1, cache=cache)
    assert not report.passed
    assert report.mismatches() and all(u == "132" for u, _ in report.mismatches())

    import grothkit.cli as cli
    monkeypatch.setattr(cli, "run_verify", lambda *a, **k: report)
    code, _, err = run(capsys, "verify", "--n", "3", "--jobs", "1")
    assert code == 1 and "MISMATCH u=132" in err


def test_cache_dump_env(capsys, tmp_path, monkeypatch):
    dump = tmp_path / "dump.json"
    monkeypatch.setenv("GROTHKIT_CACHE_DUMP", str(dump))
    run(capsys, "verify", "--n", "3", "--jobs", "1")
    doc = json.loads(dump.read_text())
    assert doc["n"] == 3 and len(doc["groth"]) == 6
    assert list(doc["groth"]) == sorted(doc["groth"])
