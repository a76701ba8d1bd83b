"""CLI behavior: formats, exit codes, JSON stability."""
import io
import json
import re

import pytest

from mainspec import cli
from mainspec.analysis import RouteDisagreementError
from mainspec.theorems import TheoremReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_literal_graph6(self, capsys):
        code, out, _ = run(capsys, "analyze", "Ch")
        assert code == 0
        assert "main count: 2 (float route) / 2 (walk-matrix rank)" in out
        assert "harmonic: no" in out

    def test_cycle_harmonic(self, capsys):
        code, out, _ = run(capsys, "analyze", "Cl")
        assert code == 0
        assert "main count: 1" in out
        assert "harmonic: yes (level 2)" in out

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("Ch\n"))
        code, out, _ = run(capsys, "analyze", "-")
        assert code == 0
        assert "graph6=Ch" in out

    def test_file_input(self, capsys, tmp_path):
        p = tmp_path / "g.g6"
        p.write_text("Cs\n")
        code, out, _ = run(capsys, "analyze", str(p))
        assert code == 0
        assert "n=4 m=3" in out

    def test_edgelist_format(self, capsys):
        code, out, _ = run(capsys, "analyze", "4 3\n0 1\n1 2\n2 3",
                           "--format", "edgelist")
        assert code == 0
        assert "graph6=Ch" in out

    def test_parse_error_exit2(self, capsys):
        code, _, err = run(capsys, "analyze", "###bad###")
        assert code == 2
        assert "error" in err

    def test_edgelist_error_exit2(self, capsys):
        code, _, err = run(capsys, "analyze", "junk", "--format", "edgelist")
        assert code == 2

    def test_json_record(self, capsys):
        code, out, _ = run(capsys, "analyze", "Ch", "--json")
        assert code == 0
        rec = json.loads(out)
        assert rec["graph"]["n"] == 4
        assert rec["main_count"] == {"float_route": 2, "walk_rank": 2,
                                     "used_fallback": False}
        assert rec["harmonic"] == {"is_harmonic": False, "level": None}
        assert rec["complement"]["window"] == "equals-lambda2"
        assert "generated_at" in rec

    def test_json_bytes_stable_modulo_timestamp(self, capsys):
        _, first, _ = run(capsys, "analyze", "FsPA?", "--json")
        _, second, _ = run(capsys, "analyze", "FsPA?", "--json")
        scrub = lambda s: re.sub(r'"generated_at": "[^"]*"', '"generated_at": ""', s)
        assert scrub(first) == scrub(second)
        assert first != second or json.loads(first)["generated_at"] == json.loads(second)["generated_at"]

    def test_disagreement_exit3(self, capsys, monkeypatch):
        def boom(g, **kwargs):
            raise RouteDisagreementError(2, 3)

        monkeypatch.setattr(cli, "analyze_graph", boom)
        code, _, err = run(capsys, "analyze", "Ch")
        assert code == 3
        assert "2" in err and "3" in err


class TestGenerate:
    @pytest.mark.parametrize("argv,expected", [
        (("path", "4"), "Ch"),
        (("cycle", "4"), "Cl"),
        (("star", "4"), "Cs"),
        (("completebipartite", "3", "3"), "EFz_"),
        (("doublestar", "2", "3"), "FsPA?"),
    ])
    def test_frozen_lines(self, capsys, argv, expected):
        code, out, _ = run(capsys, "generate", *argv)
        assert code == 0
        assert out == expected + "\n"

    def test_pendant_q_token_optional(self, capsys):
        _, with_q, _ = run(capsys, "generate", "pendant", "cycle", "5", "q", "2")
        _, without, _ = run(capsys, "generate", "pendant", "cycle", "5", "2")
        assert with_q == without
        assert len(with_q.strip()) > 0

    def test_harmonictree_order(self, capsys):
        code, out, _ = run(capsys, "generate", "harmonictree", "3")
        from mainspec.graph6 import parse_graph6
        assert parse_graph6(out.strip()).n == 22

    def test_unknown_family_exit2(self, capsys):
        code, _, err = run(capsys, "generate", "mobius", "5")
        assert code == 2
        assert "unknown family" in err

    def test_bad_parameter_exit2(self, capsys):
        code, _, err = run(capsys, "generate", "doublestar", "0", "3")
        assert code == 2

    def test_non_integer_exit2(self, capsys):
        code, _, err = run(capsys, "generate", "path", "four")
        assert code == 2

    def test_pendant_irregular_base_exit2(self, capsys):
        code, _, err = run(capsys, "generate", "pendant", "path", "4", "2")
        assert code == 2


class TestVerify:
    def test_t45_small_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "T45", "--exhaustive", "4")
        assert code == 0
        assert "T45:" in out
        assert "0 fails" in out.replace("0 fails,", "0 fails,")  # summary line present
        assert "failure(s)" in out

    def test_paths_range(self, capsys):
        code, out, _ = run(capsys, "verify", "C43", "--paths", "2..10")
        assert code == 0
        assert "C43: 9 instances" in out

    def test_all_order3(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "--exhaustive", "3")
        assert code == 0
        for tid in ("P21", "T31", "COR47"):
            assert f"{tid}:" in out

    def test_connected_bipartite_filters(self, capsys):
        code, out, _ = run(capsys, "verify", "T37", "--exhaustive", "4",
                           "--connected", "--bipartite")
        assert code == 0

    def test_sampled_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "T45", "--exhaustive", "7",
                           "--sample", "64")
        assert code == 0
        # 64 sampled graphs plus their complements plus family extras
        assert "T45:" in out

    def test_json_lines(self, capsys):
        code, out, _ = run(capsys, "verify", "T46", "--doublestars", "3", "--json")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert all("verdict" in rec for rec in lines[:-1])
        assert lines[-1]["record"] == "summary"
        assert lines[-1]["failures"] == 0

    def test_bad_range_exit2(self, capsys):
        code, _, err = run(capsys, "verify", "P21", "--paths", "9..3")
        assert code == 2

    def test_bad_exhaustive_exit2(self, capsys):
        code, _, err = run(capsys, "verify", "P21", "--exhaustive", "99")
        assert code == 2

    def test_unknown_id_exit2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "ZZZ"])
        assert exc.value.code == 2

    def test_forced_failure_exit1(self, capsys, monkeypatch):
        def always_fails(g, *, analysis=None, co=None):
            return TheoremReport("T45", "stub", "fails", {"why": "forced"})

        monkeypatch.setitem(cli.GRAPH_CHECKERS, "T45", always_fails)
        code, out, _ = run(capsys, "verify", "T45", "--exhaustive", "3")
        assert code == 1
        assert "FAIL" in out

    def test_verify_json_reports_are_stable(self, capsys):
        _, first, _ = run(capsys, "verify", "C43", "--paths", "2..6", "--json")
        _, second, _ = run(capsys, "verify", "C43", "--paths", "2..6", "--json")
        strip = lambda s: [l for l in s.splitlines() if '"summary"' not in l]
        assert strip(first) == strip(second)


def test_usage_without_command():
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2
