import json

import pytest

from isodom.cli import main
from isodom.graph import gen_family, gen_random_split, serialize_edge_list


@pytest.fixture
def graph_file(tmp_path):
    def make(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(serialize_edge_list(g) + "\n")
        return str(p)
    return make


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_path(capsys):
    code, out, _ = run(capsys, "gen", "--family", "path", "--n", "7")
    assert code == 0 and out == serialize_edge_list(gen_family("path", 7)) + "\n"


def test_gen_random_bipartite_deterministic(capsys):
    args = ("gen", "--family", "random-bipartite", "--m", "4", "--n", "4", "--p", "0.5", "--seed", "7")
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args)[1]
    assert first.startswith("8 8\n")


def test_gen_bad_params(capsys):
    code, _, err = run(capsys, "gen", "--family", "cycle", "--n", "2")
    assert code == 1 and "error" in err


def test_gen_json(capsys):
    code, out, _ = run(capsys, "gen", "--family", "complete", "--n", "3", "--json")
    assert json.loads(out) == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}


def test_check_exit_codes(capsys, graph_file):
    p7 = graph_file(gen_family("path", 7))
    assert run(capsys, "check", "--problem", "isds", "--set", "1,3,5", "--input", p7)[0] == 0
    p3 = graph_file(gen_family("path", 3), "p3.txt")
    code, out, _ = run(capsys, "check", "--problem", "isds", "--set", "0,2", "--input", p3, "--json")
    assert code == 2
    assert json.loads(out)["violation"]["vertex"] == 1


def test_check_epn_matches_naive(capsys, graph_file):
    path = graph_file(gen_family("star", 3))
    for s in ("0", "1,2,3", "0,1", "0,1,2,3"):
        a = run(capsys, "check", "--problem", "sds", "--method", "epn", "--set", s, "--input", path, "--json")
        b = run(capsys, "check", "--problem", "sds", "--method", "naive", "--set", s, "--input", path, "--json")
        assert a[0] == b[0] and json.loads(a[1])["verdict"] == json.loads(b[1])["verdict"]


def test_check_bad_set(capsys, graph_file):
    assert run(capsys, "check", "--problem", "ds", "--set", "a,b", "--input",
               graph_file(gen_family("path", 3)))[0] == 1


def test_solve_brute_infeasible(capsys, graph_file):
    code, out, _ = run(capsys, "solve", "--problem", "isds", "--method", "brute", "--json",
                       "--input", graph_file(gen_family("complete_bipartite", 2, 3)))
    assert code == 2 and json.loads(out)["status"] == "infeasible"


def test_solve_decision(capsys, graph_file):
    c9 = graph_file(gen_family("cycle", 9))
    code, out, _ = run(capsys, "solve", "--problem", "isds", "--method", "bnb", "--k", "3", "--json", "--input", c9)
    assert code == 2 and json.loads(out)["decision"]["answer"] is False
    code, out, _ = run(capsys, "solve", "--problem", "isds", "--method", "bnb", "--k", "4", "--json", "--input", c9)
    assert code == 0 and json.loads(out)["value"] == 4


def test_solve_treewidth_matches_brute(capsys, graph_file):
    p7 = graph_file(gen_family("path", 7))
    tw = json.loads(run(capsys, "solve", "--problem", "ids", "--method", "treewidth", "--json", "--input", p7)[1])
    br = json.loads(run(capsys, "solve", "--problem", "ids", "--method", "brute", "--json", "--input", p7)[1])
    assert tw["value"] == br["value"]
    assert run(capsys, "solve", "--problem", "isds", "--method", "treewidth", "--input", p7)[0] == 1


def test_solve_treewidth_with_td_file(capsys, graph_file, tmp_path):
    td = tmp_path / "p3.td"
    td.write_text("td 2\nb 0 0 1\nb 1 1 2\ne 0 1\n")
    code, out, _ = run(capsys, "solve", "--problem", "ds", "--method", "treewidth", "--td", str(td),
                       "--json", "--input", graph_file(gen_family("path", 3)))
    assert code == 0 and json.loads(out)["witness"] == [1]


def test_solve_closed_form(capsys):
    code, out, _ = run(capsys, "solve", "--problem", "isds", "--method", "closed-form",
                       "--family", "path", "--n", "14", "--json")
    assert code == 0 and json.loads(out)["value"] == 6
    code, out, _ = run(capsys, "solve", "--problem", "isds", "--method", "closed-form",
                       "--family", "complete-bipartite", "--m", "2", "--n", "3", "--json")
    assert code == 2 and json.loads(out)["status"] == "infeasible"


def test_solve_oracle_limit(capsys, graph_file, monkeypatch):
    monkeypatch.setenv("ISODOM_ORACLE_LIMIT", "6")
    code, _, err = run(capsys, "solve", "--problem", "ds", "--method", "brute",
                       "--input", graph_file(gen_family("path", 7)))
    assert code == 1 and "oracle limit" in err


def test_solve_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(serialize_edge_list(gen_family("path", 7))))
    code, out, _ = run(capsys, "solve", "--problem", "isds", "--method", "brute", "--input", "-")
    assert code == 0 and "value=3" in out


def test_solve_json_is_stable(capsys, graph_file):
    path = graph_file(gen_family("cycle", 8))
    args = ("solve", "--problem", "sds", "--method", "bnb", "--json", "--no-timing", "--input", path)
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_reduce_bipartite(capsys, graph_file):
    code, out, _ = run(capsys, "reduce", "--kind", "dom-bipartite", "--k", "2",
                       "--input", graph_file(gen_family("cycle", 4)))
    side = json.loads(out)
    assert code == 0 and side["attestation"]["n_out"] == 18 and side["k_out"] == 8
    assert side["graph"].startswith("18 ")


def test_reduce_split_writes_files(capsys, graph_file, tmp_path):
    g, _ = gen_random_split(3, 3, 0.5, 4)
    out_path = tmp_path / "red.txt"
    code, out, _ = run(capsys, "reduce", "--kind", "sdom-split", "--k", "2",
                       "--input", graph_file(g), "--out", str(out_path))
    assert code == 0 and json.loads(out)["k_out"] == 4
    assert out_path.read_text().startswith("10 ")
    side = json.loads((tmp_path / "red.txt.json").read_text())
    assert side["input_partition"]["clique"] == [0, 1, 2]


def test_reduce_split_explicit_clique(capsys, graph_file):
    code, out, _ = run(capsys, "reduce", "--kind", "sdom-split", "--k", "1", "--clique", "0,1,2",
                       "--input", graph_file(gen_family("complete", 3)))
    assert code == 0 and json.loads(out)["attestation"]["m_out"] == 12


def test_reduce_rejects_wrong_class(capsys, graph_file):
    assert run(capsys, "reduce", "--kind", "dom-bipartite", "--k", "2",
               "--input", graph_file(gen_family("cycle", 5)))[0] == 1
    assert run(capsys, "reduce", "--kind", "sdom-split", "--k", "2",
               "--input", graph_file(gen_family("cycle", 5)))[0] == 1


@pytest.mark.parametrize("suite", ["reductions", "treewidth", "chain"])
def test_bench_suites(capsys, suite):
    code, out, _ = run(capsys, "bench", "--suite", suite, "--count", "5", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["passed"] and len(payload["rows"]) >= 5


def test_bench_formulas(capsys, tmp_path):
    out_path = tmp_path / "formulas.json"
    code, out, _ = run(capsys, "bench", "--suite", "formulas", "--out", str(out_path))
    rows = json.loads(out_path.read_text())["rows"]
    assert code == 0 and "30/30" in out
    c4 = next(r for r in rows if (r["family"], r["n"]) == ("cycle", 4))
    assert c4["brute"] is None and c4["formula_equal"] is False
