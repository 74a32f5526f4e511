import json

import pytest

from rwise.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def last_json(out):
    return json.loads(out.strip().splitlines()[-1])


def test_construct_g(capsys):
    code, out, _ = run(capsys, "construct", "--family", "g", "--n", "5", "--k", "2", "--r", "2", "--t", "1")
    assert code == 0 and json.loads(out)["sets"] == [[1, 2], [1, 3], [2, 3]]


def test_construct_trivial(capsys):
    code, out, _ = run(capsys, "construct", "--family", "trivial", "--n", "4", "--k", "2", "--t", "1")
    assert json.loads(out)["sets"] == [[1, 2], [1, 3], [1, 4]]


def test_construct_frankl_file(tmp_path, capsys):
    path = tmp_path / "f.json"
    code, _, _ = run(capsys, "construct", "--family", "frankl", "--n", "12", "--k", "4", "--t", "1",
                     "--ell", "5", "--out", str(path))
    assert code == 0 and len(json.loads(path.read_text())["sets"]) == 131


def test_construct_missing_arg(capsys):
    code, _, err = run(capsys, "construct", "--family", "frankl", "--n", "12", "--k", "4", "--t", "1")
    assert code == 2 and "--ell" in err


def test_construct_bad_params(capsys):
    assert run(capsys, "construct", "--family", "g", "--n", "3", "--k", "2", "--r", "2", "--t", "2")[0] == 2


@pytest.fixture
def g22(tmp_path, capsys):
    path = tmp_path / "g.json"
    main(["construct", "--family", "g", "--n", "6", "--k", "4", "--r", "2", "--t", "2", "--out", str(path)])
    capsys.readouterr()
    return str(path)


@pytest.fixture
def tri(tmp_path):
    path = tmp_path / "tri.json"
    path.write_text('{"n":3,"k":2,"sets":[[1,2],[1,3],[2,3]]}\n')
    return str(path)


def test_triangles(g22, capsys):
    code, out, _ = run(capsys, "triangles", "--in", g22)
    rep = last_json(out)
    assert code == 0 and rep["triangle_count"] == 24 and rep["reference_count"] == 24
    assert "n>=k^4" in rep["gates"]


def test_triangles_list(g22, capsys):
    code, out, _ = run(capsys, "triangles", "--in", g22, "--list")
    lines = out.strip().splitlines()
    assert len(lines) == 25 and len(json.loads(lines[0])) == 3


def test_triangles_precondition(tri, capsys):
    assert run(capsys, "triangles", "--in", tri, "--t", "2")[0] == 3
    code, out, _ = run(capsys, "triangles", "--in", tri, "--t", "2", "--force", "--quiet")
    assert code == 0 and last_json(out)["triangle_count"] == 0


def test_missing_t(tri, capsys):
    assert run(capsys, "check", "--in", tri)[0] == 2


def test_covers(tri, capsys):
    code, out, _ = run(capsys, "covers", "--in", tri, "--t", "1", "--list")
    rep = last_json(out)
    assert rep["tau"] == 2 and rep["min_cover_count"] == 3 and len(rep["min_covers"]) == 3


def test_check(g22, capsys):
    rep = last_json(run(capsys, "check", "--in", g22)[1])
    assert rep["intersecting"] and not rep["trivial"] and rep["tau"] == 3


def test_hypergraph(tmp_path, capsys):
    path = tmp_path / "tb.json"
    main(["construct", "--family", "two-block", "--n", "10", "--k", "7", "--r", "2", "--t", "2", "--out", str(path)])
    capsys.readouterr()
    rep = last_json(run(capsys, "hypergraph", "--in", str(path))[1])
    assert rep["verdict"] == "MultiClique" and rep["claim"]["holds"] is True


def test_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n":3,"k":2,"sets":[[1,4]]}')
    assert run(capsys, "check", "--in", str(bad), "--t", "1")[0] == 2
    assert run(capsys, "check", "--in", str(tmp_path / "missing.json"), "--t", "1")[0] == 2


@pytest.mark.parametrize("argv, expected", [
    (["--which", "exact-count", "--n", "6", "--k", "4", "--r", "2", "--t", "2"], "24"),
    (["--which", "lower-21", "--n", "16", "--k", "2", "--r", "2", "--t", "1"], "999/1000"),
    (["--which", "floor-41", "--r", "3", "--s", "2", "--t", "1"], "2"),
    (["--which", "size-22", "--n", "81", "--k", "3", "--t", "1"], "27"),
    (["--which", "size-24", "--n", "81", "--k", "3", "--t", "1", "--case", "2"], "1659/10"),
    (["--which", "threshold", "--r", "3", "--t", "1", "--lemma", "4.4"], "c=16000/999 d=12"),
])
def test_formula(capsys, argv, expected):
    code, out, _ = run(capsys, "formula", "--quiet", *argv)
    assert code == 0 and out.strip() == expected


def test_formula_missing(capsys):
    assert run(capsys, "formula", "--which", "floor-41", "--r", "3")[0] == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["formula", "--which", "nonsense"])
    assert exc.value.code == 2


def test_verify_two_block_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma47")
    assert code == 0 and out.strip().splitlines()[-1].startswith("SUMMARY ")


def test_verify_failure_writes_counterexample(tmp_path, capsys):
    # the hypergraph grid includes the n = k + 1 points, which are known to fail
    code, out, _ = run(capsys, "verify", "--suite", "hypergraph", "--max-n", "4", "--max-k", "3",
                       "--counterexample-dir", str(tmp_path))
    assert code == 1
    assert json.loads((tmp_path / "counterexample-hypergraph.json").read_text())["n"] == 4


def test_search_exhaustive(capsys):
    code, out, _ = run(capsys, "search", "exhaustive", "--n", "5", "--k", "2", "--t", "1")
    rep = json.loads(out)
    assert code == 0 and len(rep["classes"]) == 2 and rep["best_count"] == 1


def test_search_stochastic_budget_zero(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, _, _ = run(capsys, "search", "stochastic", "--n", "8", "--k", "3", "--r", "2", "--t", "1",
                     "--budget", "0", "--out", str(path))
    rep = json.loads(path.read_text())
    assert code == 0 and rep["families_examined"] == 0 and rep["best_family"] is None


def test_search_exceedance_exit_code(capsys, monkeypatch):
    from rwise import cli
    from rwise.search import SearchReport

    fake = SearchReport("stochastic", 8, 3, 2, 1, 0, 1, best_count=10**9, reference_count=1)
    monkeypatch.setattr(cli, "stochastic_search", lambda *a, **k: fake)
    code, _, _ = run(capsys, "search", "stochastic", "--n", "8", "--k", "3", "--r", "2", "--t", "1", "--quiet")
    assert code == 4


def test_search_exhaustive_rejects_r3(capsys):
    assert run(capsys, "search", "exhaustive", "--n", "5", "--k", "2", "--r", "3", "--t", "1")[0] == 2
