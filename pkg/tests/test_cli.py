import json
import subprocess
import sys

import pytest

from tower_schubert import cli, verify
from tower_schubert.cli import main, parse_args
from tower_schubert.monk import schubert_path
from tower_schubert.permcore import Permutation, Transposition, parse_perm, parse_word
from tower_schubert.render import render_ascii
from tower_schubert.towerdiag import TowerDiagram, diagram_of_perm, parse_diagram, perm_of_diagram

from conftest import MONK_DIAGRAM, PIERI_PERM


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParseArgs:
    def test_slide(self):
        ns = parse_args(["slide", "--word", "4,3,4,1,3"])
        assert ns.command == "slide" and ns.word == (4, 3, 4, 1, 3)

    def test_monk_verify(self):
        ns = parse_args(["monk", "--perm", "1,2,5,6,4,10,3,8,7,11,9", "--k", "5", "--verify"])
        assert ns.command == "monk" and ns.k == 5 and ns.verify
        assert ns.perm == Permutation([1, 2, 5, 6, 4, 10, 3, 8, 7, 11, 9])

    @pytest.mark.parametrize("argv", [
        [], ["slide"], ["slide", "--word", "1", "--hook", "1,2"], ["monk", "--perm", "1,x", "--k", "2"],
        ["monk", "--perm", "2,1", "--k", "0"], ["slide", "--hook", "3,2"], ["verify", "--scope", "all", "--n", "3"],
        ["frobnicate"],
    ])
    def test_usage_errors_exit_2(self, argv, capsys):
        with pytest.raises(SystemExit) as exc:
            parse_args(argv)
        assert exc.value.code == 2

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "tower_schubert", "slide"], capture_output=True, text=True)
        assert proc.returncode == 2 and "usage" in proc.stderr
        proc = subprocess.run([sys.executable, "-m", "tower_schubert", "perm2tower", "--perm", "2,1,4,5,3"],
                              capture_output=True, text=True)
        assert proc.returncode == 0 and proc.stdout.strip() == "[1,0,2]"


class TestCommands:
    def test_slide_steps(self, capsys):
        code, out, _ = run(capsys, "slide", "--word", "4,3,4,1,3", "--steps")
        assert code == 0
        assert out.splitlines() == [
            "4: [0,0,0,1]  added (4,0)", "3: [0,0,1,1]  added (3,0)", "4: [0,0,2,1]  added (3,1)",
            "1: [1,0,2,1]  added (1,0)", "3: [1,0,2]  deleted (4,0)", "[1,0,2]"]

    def test_slide_hook_trace(self, capsys):
        code, out, _ = run(capsys, "slide", "--hook", "1,2", "--into", "0,1", "--trace")
        assert code == 0 and out.splitlines() == ["tower=1 pass=broken+", "tower=2 letter=2 deleted", "[2]"]

    def test_slide_json(self, capsys):
        code, out, _ = run(capsys, "slide", "--word", "4,3,4,1,3", "--json", "--steps")
        data = json.loads(out)
        assert parse_word(data["word"]) == (4, 3, 4, 1, 3)
        assert TowerDiagram(data["heights"]) == TowerDiagram([1, 0, 2])
        assert parse_perm(data["perm"]) == Permutation([2, 1, 4, 5, 3])
        assert [s["outcome"] for s in data["steps"]] == ["added"] * 4 + ["deleted"]

    def test_perm_tower_round_trip(self, capsys):
        _, out, _ = run(capsys, "perm2tower", "--perm", "1,2,5,6,4,10,3,8,7,11,9")
        assert parse_diagram(out) == MONK_DIAGRAM
        _, out, _ = run(capsys, "tower2perm", "--tower", out.strip())
        assert parse_perm(out) == Permutation([1, 2, 5, 6, 4, 10, 3, 8, 7, 11, 9])

    def test_tower2perm_json(self, capsys):
        _, out, _ = run(capsys, "tower2perm", "--tower", "[0,4,4,1,1,0,1]", "--json")
        data = json.loads(out)
        assert data["perm"] == "1,6,4,5,8,2,3,7" and data["index"] == [1, 6, 7, 3, 4, 2, 8, 5]
        assert diagram_of_perm(parse_perm(data["perm"])) == TowerDiagram(data["heights"])

    def test_monk_json_round_trip(self, capsys):
        code, out, err = run(capsys, "monk", "--perm", "1,2,5,6,4,10,3,8,7,11,9", "--k", "5", "--json", "--verify")
        assert code == 0 and "OK" in err
        data = json.loads(out)
        assert len(data) == 7
        w = Permutation([1, 2, 5, 6, 4, 10, 3, 8, 7, 11, 9])
        for item in data:
            v = parse_perm(item["perm"])
            assert diagram_of_perm(v) == TowerDiagram(item["heights"])
            assert w * Transposition(item["a"], item["b"]).perm() == v

    def test_monk_verify_failure_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "verify_monk", lambda *args: False)
        code, _, err = run(capsys, "monk", "--perm", "2,1", "--k", "1", "--verify")
        assert code == 1 and "FAILED" in err

    @pytest.mark.parametrize("command, count", [("pieri-row", 5), ("pieri-col", 4)])
    def test_pieri_json_round_trip(self, capsys, command, count):
        code, out, err = run(capsys, command, "--perm", "1,2,6,4,3,7,5", "--k", "3", "--m", "2", "--json", "--verify")
        assert code == 0 and "OK" in err
        data = json.loads(out)
        assert len(data) == count
        for item in data:
            v = PIERI_PERM
            for link in item["chain"]:
                v = v * Transposition(link["a"], link["b"]).perm()
            assert v == parse_perm(item["perm"]) == perm_of_diagram(TowerDiagram(item["heights"]))
            assert [link["step"] for link in item["chain"]] == [1, 2]

    def test_pieri_labels_text(self, capsys):
        _, out, _ = run(capsys, "pieri-row", "--perm", "1,2,6,4,3,7,5", "--k", "3", "--m", "2", "--labels")
        assert out.splitlines()[0] == "1,2,8,4,3,6,5,7  [0,0,2,1,2,1,1]  1:(3,6)@(6,0) 2:(3,8)@(7,0)"

    def test_pieri_col_rejects_m_above_k(self, capsys):
        code, _, err = run(capsys, "pieri-col", "--perm", "2,1", "--k", "1", "--m", "2")
        assert code == 2 and "m <= k" in err

    def test_schubert(self, capsys):
        _, out, _ = run(capsys, "schubert", "--perm", "1,4,3,2")
        assert out.strip() == "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3"
        _, out, _ = run(capsys, "schubert", "--perm", "3,1,2", "--json")
        assert json.loads(out) == {"perm": "3,1,2", "polynomial": "x1^2", "reduced_word": "2,1"}

    def test_render(self, capsys):
        _, out, _ = run(capsys, "render", "--tower", "1,0,2")
        assert out == "..#\n#.#\n---\n"
        _, out, _ = run(capsys, "render", "--perm", "1,2,5,6,4,10,3,8,7,11,9", "--k", "5", "--unicode")
        assert out.splitlines()[0] == "∘········" and out.splitlines()[-1] == "      •"


class TestRender:
    def test_empty(self):
        assert render_ascii(TowerDiagram()) == "-"

    def test_towers(self):
        assert render_ascii(TowerDiagram([1, 0, 2])) == "..#\n#.#\n---"

    def test_path_headroom(self):
        assert render_ascii(TowerDiagram(), schubert_path(TowerDiagram(), 3)) == "o...\n.o..\n..*.\n----\n   @"

    def test_unicode(self):
        assert render_ascii(MONK_DIAGRAM, schubert_path(MONK_DIAGRAM, 5), unicode=True).splitlines()[1] == "·∗■······"


class TestVerify:
    def test_roundtrip_text(self, capsys):
        code, out, _ = run(capsys, "verify", "--scope", "roundtrip", "--n", "5")
        assert code == 0 and out.strip() == "120 permutations OK"

    def test_run_verify_scopes(self):
        assert verify.run_verify("monk", 5, workers=1).ok
        report = verify.run_verify("pieri-row", 4, max_m=3, workers=1)
        assert report.ok and report.perms == 24 and report.cases == 24 * 3 * 3
        assert verify.run_verify("pieri-col", 4, workers=1).ok

    def test_parallel_matches_serial(self):
        a = verify.run_verify("roundtrip", 6, workers=1)
        b = verify.run_verify("roundtrip", 6, workers=2)
        assert (a.perms, a.cases, a.ok) == (b.perms, b.cases, b.ok) == (720, 720, True)

    def test_sample_is_seeded(self):
        a = verify.run_verify("monk", 5, workers=1, sample=10, seed=4)
        b = verify.run_verify("monk", 5, workers=1, sample=10, seed=4)
        assert a.perms == 10 and a.cases == b.cases

    def test_failure_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr(verify, "monk_oracle", lambda w, k: set())
        code, out, err = run(capsys, "verify", "--scope", "monk", "--n", "3", "--workers", "1")
        assert code == 1 and "FAILED" in out and "algorithm != enumeration" in err

    def test_bad_scope(self):
        with pytest.raises(ValueError):
            verify.run_verify("everything", 3)

    def test_thread_cap(self, monkeypatch):
        monkeypatch.setenv("SCHUBERT_TOWERS_THREADS", "3")
        assert verify.worker_count() == 3
        monkeypatch.delenv("SCHUBERT_TOWERS_THREADS")
        assert verify.worker_count() >= 1
