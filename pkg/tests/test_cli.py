import csv
import io
import json

from isolab.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_theorem5(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "--theorem", "5", "--n", "2")
        doc = json.loads(out)
        assert code == 0
        assert doc["y"] == "(1/2*x^3 - 2*x^2 + 1/2*x)/(x^3 - 3/2*x^2 - 3/2*x + 1)"
        assert doc["schema_version"] == 1

    def test_theorem10_case2(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "--theorem", "10",
                               "--M", "2", "--m", "4", "--n", "1")
        doc = json.loads(out)
        assert code == 0
        assert doc["b"][0] == "-3/4*a1 + 1/4*a2 + 1/4"

    def test_divisible_n_rejected(self, capsys):
        code, _, err = run_cli(capsys, "generate", "--theorem", "5", "--n", "3")
        assert code == 2
        assert "3" in err

    def test_missing_parameters(self, capsys):
        code, _, err = run_cli(capsys, "generate", "--theorem", "7", "--n", "1")
        assert code == 2

    def test_deterministic_output(self, capsys):
        _, out1, _ = run_cli(capsys, "generate", "--theorem", "6", "--n", "-2")
        _, out2, _ = run_cli(capsys, "generate", "--theorem", "6", "--n", "-2")
        assert out1 == out2


class TestVerify:
    def test_family_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--theorem", "6", "--n", "-2")
        rep = json.loads(out)
        assert code == 0 and rep["pass"]
        names = [c["name"] for c in rep["checks"]]
        assert "pvi-residual-symbolic" in names

    def test_perturbed_document_fails(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "generate", "--theorem", "4",
                               "--p", "2", "--N", "3", "--m", "1", "--n", "-1")
        doc = json.loads(out)
        doc["entries"]["1,1,2"] = "a1"
        path = tmp_path / "doc.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run_cli(capsys, "verify", "--input", str(path))
        rep = json.loads(out)
        assert code == 1 and not rep["pass"]

    def test_garnier_numeric(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--theorem", "8", "--M", "2",
                               "--m", "2", "--n", "1")
        # --theorem 8 without --a-int etc is a pvi request; do garnier instead
        code, out, _ = run_cli(capsys, "verify", "--theorem", "10", "--M", "2",
                               "--m", "2", "--n", "1", "--numeric",
                               "--a", "2,3.5", "--eps", "++++")
        rep = json.loads(out)
        assert code == 0 and rep["pass"]


class TestZeros:
    def test_row_counts_small(self, capsys):
        code, out, _ = run_cli(capsys, "zeros", "--n", "1")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0
        assert rows[0] == ["poly_id", "degree", "re", "im",
                           "conj_paired", "inversion_paired"]
        assert len(rows) == 1 + 2 + 2
        p_roots = sorted(float(r[2]) for r in rows[1:] if r[0] == "P2")
        assert abs(p_roots[0] + 1) < 1e-9 and abs(p_roots[1]) < 1e-9

    def test_figure_case_counts(self, capsys):
        code, out, _ = run_cli(capsys, "zeros", "--n", "25")
        rows = list(csv.reader(io.StringIO(out)))[1:]
        assert code == 0
        assert sum(1 for r in rows if r[0] == "P26") == 26
        assert sum(1 for r in rows if r[0] == "Q26") == 26


class TestPeriods:
    def test_rank_row(self, capsys):
        code, out, _ = run_cli(capsys, "periods", "--m", "2", "--n", "1",
                               "--a", "0,1,2+1i")
        assert code == 0
        assert out.strip().splitlines()[-1].startswith("rank,2")


class TestPeriodsTrace:
    def test_trace_rows(self, capsys):
        code, out, _ = run_cli(capsys, "periods", "--m", "2", "--n", "1",
                               "--a", "0,1,2+1i", "--trace", "0")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0
        assert rows[0] == ["index", "z_re", "z_im", "w_re", "w_im"]
        assert len(rows) > 100


class TestThreadPool:
    def test_env_var_respected(self, capsys, monkeypatch):
        monkeypatch.setenv("ISOLAB_THREADS", "2")
        code, out, _ = run_cli(capsys, "verify", "--theorem", "6", "--n", "-1")
        assert code == 0 and json.loads(out)["pass"]


class TestReproduce:
    def test_known_ids(self, capsys):
        for eid in ("example-1", "example-3", "example-9"):
            code, out, _ = run_cli(capsys, "reproduce", eid)
            assert code == 0 and "PASS" in out

    def test_unknown_id(self, capsys):
        code, _, err = run_cli(capsys, "reproduce", "bogus")
        assert code == 2 and "unknown" in err

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "report.txt"
        code, out, _ = run_cli(capsys, "reproduce", "example-1",
                               "--out", str(path))
        assert code == 0 and out == ""
        assert "PASS" in path.read_text()
