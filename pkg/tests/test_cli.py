import json

import pytest

from hyperps.cli import main
from hyperps.formats import read_results_tsv

FIG1_TEXT = "1 2\n1 2 3 4\n1 4 5\n3 4\n"


@pytest.fixture
def fig1_file(tmp_path):
    p = tmp_path / "fig1.txt"
    p.write_text(FIG1_TEXT)
    return p


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_stats(capsys, fig1_file):
    code, out, _ = run_cli(capsys, "stats", "--input", fig1_file, "--representation", "clique")
    assert code == 0
    assert json.loads(out) == {"vertices": 5, "hyperedges": 4, "max_degree": 3,
                               "max_cardinality": 4, "bipartite_edges": 11, "clique_edges": 8}


def test_partition(capsys, fig1_file):
    code, out, _ = run_cli(capsys, "partition", "--input", fig1_file, "--strategy", "rvc",
                           "--parts", "2")
    doc = json.loads(out)
    assert code == 0 and doc["rf_hyperedge"] == 1.0
    assert sum(doc["per_partition_edges"]) == 11 and doc["partition_seconds"] >= 0


@pytest.mark.parametrize("algo", ["pagerank", "pagerank-entropy", "labelprop", "sssp"])
def test_run_writes_report_and_results(capsys, tmp_path, fig1_file, algo):
    out_dir = tmp_path / algo
    code, _, _ = run_cli(capsys, "run", "--input", fig1_file, "--algorithm", algo,
                         "--strategy", "hvc", "--cutoff", "3", "--parts", "2",
                         "--source", "5", "--out", out_dir, "--threads", "2", "--debug")
    assert code == 0
    report = json.loads((out_dir / "report.json").read_text())
    assert report["config"]["algorithm"] == algo
    assert report["partition_stats"]["per_partition_edges"]
    assert report["partition_seconds"] >= 0 and report["execution_seconds"] >= 0
    rows = read_results_tsv(out_dir / "results.tsv")
    assert len(rows) == 9
    if algo == "sssp":
        assert dict((i, v[0]) for k, i, v in rows if k == "vertex") == {1: 1, 2: 2, 3: 2, 4: 1, 5: 0}
    if algo == "labelprop":
        assert {v[0] for _, _, v in rows} == {5}


def test_run_reproducible(capsys, tmp_path, fig1_file):
    docs = []
    for i in range(2):
        run_cli(capsys, "run", "--input", fig1_file, "--algorithm", "pagerank",
                "--strategy", "gvc", "--parts", "3", "--out", tmp_path / str(i))
        doc = json.loads((tmp_path / str(i) / "report.json").read_text())
        for key in ("partition_seconds", "execution_seconds", "result_paths"):
            doc.pop(key)
        doc["config"].pop("out")
        for p in doc["phases"]:
            p.pop("wall_seconds")
        docs.append(doc)
    assert docs[0] == docs[1]
    assert (tmp_path / "0" / "results.tsv").read_text() == (tmp_path / "1" / "results.tsv").read_text()


def test_clique_pagerank(capsys, tmp_path, fig1_file):
    code, _, _ = run_cli(capsys, "run", "--input", fig1_file, "--algorithm", "pagerank",
                         "--representation", "clique", "--out", tmp_path)
    assert code == 0
    assert len(read_results_tsv(tmp_path / "results.tsv")) == 5 + 8


@pytest.mark.parametrize("algo", ["labelprop", "pagerank-entropy", "sssp"])
def test_clique_rejected_for_stateful(capsys, tmp_path, fig1_file, algo):
    with pytest.raises(SystemExit) as exc:
        main(["run", "--input", str(fig1_file), "--algorithm", algo, "--source", "1",
              "--representation", "clique", "--out", str(tmp_path / "x")])
    assert exc.value.code != 0
    assert "clique" in capsys.readouterr().err
    assert not (tmp_path / "x").exists()


def test_sssp_needs_source(capsys, fig1_file, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["run", "--input", str(fig1_file), "--algorithm", "sssp", "--out", str(tmp_path)])
    assert exc.value.code == 2
    assert "--source" in capsys.readouterr().err


def test_bad_input_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n3 x\n")
    code, _, err = run_cli(capsys, "stats", "--input", bad)
    assert code == 1 and "line 2" in err
    code, _, err = run_cli(capsys, "stats", "--input", tmp_path / "missing.txt")
    assert code == 1


def test_unknown_source(capsys, tmp_path, fig1_file):
    code, _, err = run_cli(capsys, "run", "--input", fig1_file, "--algorithm", "sssp",
                           "--source", "99", "--out", tmp_path)
    assert code == 1 and "99" in err


def test_generate_then_stats(capsys, tmp_path):
    p = tmp_path / "g.txt"
    code, out, _ = run_cli(capsys, "generate", "--vertices", "50", "--hyperedges", "20",
                           "--output", p, "--seed", "2")
    assert code == 0
    _, out2, _ = run_cli(capsys, "stats", "--input", p)
    gen, stats = json.loads(out), json.loads(out2)
    assert gen["bipartite_edges"] == stats["bipartite_edges"]
