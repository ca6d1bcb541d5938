import io
from contextlib import redirect_stdout

import pytest

from monopath.cli import main


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


class TestSearch:
    def test_n_exact_prints_value(self):
        code, out = run_cli("search", "--k", "2", "--q", "2", "--n", "3")
        assert code == 0
        assert out.strip() == "5"

    def test_f_exact(self):
        code, out = run_cli("search", "--mode", "f-exact", "--q", "2", "--n", "3")
        assert code == 0 and out.strip() == "3"

    def test_exists_witness_file(self, tmp_path):
        out_file = tmp_path / "w.txt"
        code, out = run_cli(
            "search", "--mode", "exists", "--k", "2", "--q", "2", "--n", "3",
            "--vertices", "4", "--out", str(out_file),
        )
        assert code == 0 and "witness" in out
        code, out = run_cli("verify", "--file", str(out_file), "--max-path", "2")
        assert code == 0 and "verdict: verified" in out

    def test_budget_exit_code(self):
        code, out = run_cli(
            "search", "--k", "2", "--q", "2", "--n", "4", "--node-cap", "5"
        )
        assert code == 2


class TestWitnessVerify:
    def test_stepup3_flow(self, tmp_path):
        f = tmp_path / "su3.txt"
        code, out = run_cli(
            "witness", "--construction", "stepup3", "--q", "2", "--n", "4",
            "--out", str(f),
        )
        assert code == 0 and "verified: true" in out
        code, out = run_cli("verify", "--file", str(f), "--max-path", "3")
        assert code == 0

    def test_verify_refutes_false_claim(self, tmp_path):
        f = tmp_path / "grid.txt"
        run_cli("witness", "--construction", "grid", "--q", "2", "--n", "3", "--out", str(f))
        code, out = run_cli("verify", "--file", str(f), "--max-path", "1")
        assert code == 1
        assert "refutation" in out and "verdict: refuted" in out

    def test_adversary_report(self):
        code, out = run_cli(
            "witness", "--construction", "adversary", "--q", "2",
            "--n1", "3", "--n2", "3", "--path-vertices", "20",
        )
        assert code == 0 and "path-free-at: 5" in out

    def test_missing_file_is_usage_error(self):
        code, _ = run_cli("verify", "--file", "/nonexistent/x.txt")
        assert code == 2


class TestGame:
    def test_lattice_play_and_replay(self, tmp_path):
        f = tmp_path / "lat.txt"
        code, out = run_cli(
            "game", "--play", "lattice", "--q", "2", "--n", "3", "--out", str(f)
        )
        assert code == 0 and "stages: 5" in out
        code, out = run_cli("game", "--replay", str(f))
        assert code == 0 and "verdict: verified" in out

    def test_online_play_and_replay(self, tmp_path):
        f = tmp_path / "online.txt"
        code, out = run_cli(
            "game", "--play", "online", "--q", "2", "--n", "3",
            "--painter", "extremal", "--out", str(f),
        )
        assert code == 0
        code, out = run_cli("game", "--replay", str(f))
        assert code == 0 and "verdict: verified" in out

    def test_tampered_replay_refuted(self, tmp_path):
        f = tmp_path / "lat.txt"
        run_cli("game", "--play", "lattice", "--q", "2", "--n", "3", "--out", str(f))
        text = f.read_text().replace("point 2,2", "point 9,9")
        f.write_text(text)
        code, out = run_cli("game", "--replay", str(f))
        assert code == 1 and "refuted" in out


class TestGeom:
    def test_clockwise_nontransitivity_fixture(self):
        code, out = run_cli("geom", "--fixture", "nontransitive")
        assert code == 0
        assert "strong-clockwise-134: False" in out
        assert "transitive: True" in out

    def test_family_file_pipeline(self, tmp_path):
        from monopath.geometry import staircase_family, write_family

        f = tmp_path / "fam.txt"
        with open(f, "w") as fh:
            write_family(staircase_family(6).bodies, fh)
        code, out = run_cli("geom", "--family", str(f), "--find-convex", "4")
        assert code == 0
        assert "convex-position: 1 2 3 4" in out
        assert "verified: True" in out

    def test_invalid_family_refuted(self, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("3 0 0 2 0 1 1\n3 0.5 0.1 1.5 0.1 1 0.8\n3 9 0 11 0 10 1\n")
        code, out = run_cli("geom", "--family", str(f))
        assert code == 1 and "violation" in out

    def test_find_path_recursive(self, tmp_path):
        f = tmp_path / "c.txt"
        run_cli(
            "search", "--mode", "exists", "--k", "3", "--q", "2", "--n", "4",
            "--vertices", "6", "--out", str(f),
        )
        code, out = run_cli("find-path", "--file", str(f), "--n", "4")
        assert code == 1 and "not found" in out
        code, out = run_cli("find-path", "--file", str(f), "--n", "3")
        assert code == 0 and "verified: True" in out


class TestDeterminism:
    def test_reports_reproduce_byte_for_byte(self, tmp_path):
        f1, f2 = tmp_path / "a.txt", tmp_path / "b.txt"
        args = ("witness", "--construction", "grid", "--q", "2", "--n", "4")
        code1, out1 = run_cli(*args, "--out", str(f1))
        code2, out2 = run_cli(*args, "--out", str(f2))
        assert (code1, out1.replace(str(f1), "F")) == (code2, out2.replace(str(f2), "F"))
        assert f1.read_text() == f2.read_text()
        v1 = run_cli("verify", "--file", str(f1), "--max-path", "3")
        v2 = run_cli("verify", "--file", str(f1), "--max-path", "3")
        assert v1 == v2

    def test_online_reduction_deterministic(self):
        a = run_cli("find-path", "--method", "online", "--n", "4", "--seed", "7",
                    "--big-n", "4097")
        b = run_cli("find-path", "--method", "online", "--n", "4", "--seed", "7",
                    "--big-n", "4097")
        assert a == b
