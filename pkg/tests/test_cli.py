import json
import subprocess
import sys

from densecolor import coloring_to_doc, fixture, serialize, totalize
from densecolor.cli import main


def run_cli(*args: str, stdin: str = "") -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "densecolor", *args],
        input=stdin,
        capture_output=True,
        text=True,
    )


T2_TEXT = serialize(fixture("t2"))
C5_TEXT = serialize(fixture("c5"))


class TestDensity:
    def test_text(self):
        result = run_cli("density", stdin=T2_TEXT)
        assert result.returncode == 0
        assert "rho = 6" in result.stdout
        assert "witness: 0 1 2" in result.stdout

    def test_json(self):
        result = run_cli("density", "--format", "json", stdin=C5_TEXT)
        doc = json.loads(result.stdout)
        assert doc == {"value": "5/2", "witness": [0, 1, 2, 3, 4]}


class TestChiCommands:
    def test_chi_index(self):
        result = run_cli("chi-index", "--format", "json", stdin=T2_TEXT)
        doc = json.loads(result.stdout)
        assert doc["k"] == 6
        assert doc["quantity"] == "chromatic-index"
        assert len(doc["coloring"]["edges"]) == 6

    def test_chi_total(self):
        result = run_cli("chi-total", "--format", "json", stdin=C5_TEXT)
        doc = json.loads(result.stdout)
        assert doc["k"] == 4
        assert "vertices" in doc["coloring"]

    def test_too_large_exit_code(self):
        big = serialize(fixture("fat-c5-m4"))
        result = run_cli("chi-total", stdin=big)
        assert result.returncode == 3
        assert "capped" in result.stderr


class TestEmbedCommand:
    def test_embed_emits_graph_and_report(self, tmp_path):
        path = tmp_path / "g.mg"
        path.write_text(serialize(fixture("t2-2k1")))
        result = run_cli("embed", str(path))
        assert result.returncode == 0
        assert result.stdout.startswith("p multigraph 5 12")
        assert "dense check: True" in result.stdout

    def test_embed_json(self):
        result = run_cli(
            "embed", "--format", "json", stdin=serialize(fixture("t2-k1"))
        )
        doc = json.loads(result.stdout)
        assert doc["report"]["parity_vertex_added"] is True
        assert doc["report"]["final_m"] == 12
        assert len(doc["graph"]["edges"]) == 12


class TestTotalizeCommand:
    def test_success(self):
        result = run_cli("totalize", "--format", "json", stdin=T2_TEXT)
        doc = json.loads(result.stdout)
        assert doc["k"] == 6
        assert doc["pipeline"]["verified"] is True
        assert "g_prime" not in doc

    def test_witness_flag(self):
        result = run_cli(
            "totalize", "--witness", "--format", "json", stdin=T2_TEXT
        )
        doc = json.loads(result.stdout)
        assert doc["g_prime"].startswith("p multigraph 3 6")
        assert doc["g_prime_coloring"]["k"] == 6

    def test_hypothesis_not_met_exit_code(self):
        result = run_cli("totalize", stdin=C5_TEXT)
        assert result.returncode == 2
        assert "hypothesis not met" in result.stderr


class TestVerifyCommand:
    def test_valid_total_coloring(self, tmp_path):
        g = fixture("t2")
        cert = totalize(g)
        graph_path = tmp_path / "g.mg"
        graph_path.write_text(serialize(g))
        coloring_path = tmp_path / "c.json"
        coloring_path.write_text(json.dumps(coloring_to_doc(cert.coloring)))
        result = run_cli("verify", str(graph_path), str(coloring_path))
        assert result.returncode == 0
        assert "valid: True" in result.stdout

    def test_invalid_coloring_exit_code(self, tmp_path):
        graph_path = tmp_path / "g.mg"
        graph_path.write_text("p multigraph 2 1\ne 1 2\n")
        coloring_path = tmp_path / "c.json"
        coloring_path.write_text(
            json.dumps({"k": 2, "edges": [{"id": 0, "color": 1}],
                        "vertices": [{"v": 0, "color": 1}, {"v": 1, "color": 2}]})
        )
        result = run_cli("verify", str(graph_path), str(coloring_path))
        assert result.returncode == 1
        assert "valid: False" in result.stdout

    def test_malformed_graph_exit_code(self, tmp_path):
        graph_path = tmp_path / "g.mg"
        graph_path.write_text("p multigraph 2 1\ne 1 1\n")
        coloring_path = tmp_path / "c.json"
        coloring_path.write_text(json.dumps({"k": 1, "edges": []}))
        result = run_cli("verify", str(graph_path), str(coloring_path))
        assert result.returncode == 4


class TestGenCommand:
    def test_fixture(self):
        result = run_cli("gen", "--fixture", "t2")
        assert result.stdout == T2_TEXT

    def test_fat_cycle(self):
        result = run_cli("gen", "--fat-cycle", "5", "4")
        assert result.stdout == serialize(fixture("fat-c5-m4"))

    def test_random_respects_seed(self):
        a = run_cli("gen", "--random", "5", "8", "2", "--seed", "42")
        b = run_cli("gen", "--random", "5", "8", "2", "--seed", "42")
        assert a.stdout == b.stdout

    def test_list_fixtures(self):
        result = run_cli("gen", "--list-fixtures")
        assert "t2-2k1" in result.stdout.split()

    def test_requires_exactly_one_source(self):
        result = run_cli("gen")
        assert result.returncode == 4

    def test_gen_output_parses_back(self):
        result = run_cli("gen", "--fixture", "t2-t2")
        reparse = run_cli("density", stdin=result.stdout)
        assert reparse.returncode == 0


class TestSearchCommand:
    def test_fixture_corpus(self):
        result = run_cli("search", "--format", "json")
        doc = json.loads(result.stdout)
        assert doc["counts"]["violation"] == 0
        assert doc["violations"] == []
        names = [rec["name"] for rec in doc["instances"]]
        assert names == sorted(names)

    def test_corpus_file_with_multiple_graphs(self, tmp_path):
        path = tmp_path / "corpus.mg"
        path.write_text(T2_TEXT + C5_TEXT)
        result = run_cli("search", "--corpus", str(path), "--format", "json")
        doc = json.loads(result.stdout)
        assert len(doc["instances"]) == 2

    def test_corpus_directory(self, tmp_path):
        (tmp_path / "a.mg").write_text(T2_TEXT)
        (tmp_path / "b.mg").write_text(C5_TEXT)
        result = run_cli("search", "--corpus", str(tmp_path), "--format", "json")
        doc = json.loads(result.stdout)
        assert [rec["name"] for rec in doc["instances"]] == ["a.mg", "b.mg"]

    def test_empty_corpus_gives_empty_report(self, tmp_path):
        path = tmp_path / "empty.mg"
        path.write_text("c nothing here\n")
        result = run_cli("search", "--corpus", str(path), "--format", "json")
        doc = json.loads(result.stdout)
        assert doc["instances"] == [] and doc["violations"] == []

    def test_worker_pool_matches_serial(self, tmp_path):
        path = tmp_path / "corpus.mg"
        path.write_text(T2_TEXT + C5_TEXT + serialize(fixture("fat-c3-m3")))
        serial = run_cli("search", "--corpus", str(path), "--format", "json")
        pooled = run_cli(
            "search", "--corpus", str(path), "--jobs", "2", "--format", "json"
        )
        assert serial.returncode == pooled.returncode == 0
        assert serial.stdout == pooled.stdout


class TestMainFunction:
    def test_in_process_entry_point(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(T2_TEXT))
        assert main(["density", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["value"] == "6"

    def test_input_error_exit_code(self, tmp_path, capsys):
        missing = tmp_path / "nope.mg"
        assert main(["density", str(missing)]) == 4
