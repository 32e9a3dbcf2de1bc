import io

import pytest

from bipower import bipartite_power, graph_power, read_edge_list, write_edge_list
from bipower.cli import main

from conftest import cycle_graph, path_graph


def graph_file(tmp_path, g, name="g.el"):
    path = tmp_path / name
    path.write_text(write_edge_list(g))
    return str(path)


class TestPowerCommand:
    def test_matches_api(self, tmp_path, capsys):
        f = graph_file(tmp_path, cycle_graph(6))
        assert main(["power", "--input", f, "--m", "2"]) == 0
        out = capsys.readouterr().out
        assert read_edge_list(out) == graph_power(cycle_graph(6), 2)

    def test_bipartite_flag(self, tmp_path, capsys):
        f = graph_file(tmp_path, cycle_graph(6))
        assert main(["power", "--input", f, "--m", "3", "--bipartite"]) == 0
        out = capsys.readouterr().out
        assert read_edge_list(out) == bipartite_power(cycle_graph(6), 3)

    def test_output_file(self, tmp_path, capsys):
        f = graph_file(tmp_path, path_graph(4))
        target = tmp_path / "out.el"
        assert main(["power", "--input", f, "--m", "1", "--output", str(target)]) == 0
        assert read_edge_list(target.read_text()) == path_graph(4)

    def test_stdin_dash(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(write_edge_list(path_graph(3))))
        assert main(["power", "--input", "-", "--m", "1"]) == 0
        assert read_edge_list(capsys.readouterr().out) == path_graph(3)

    def test_even_bipartite_exponent_is_usage_error(self, tmp_path, capsys):
        f = graph_file(tmp_path, cycle_graph(6))
        assert main(["power", "--input", f, "--m", "2", "--bipartite"]) == 2


class TestChordalityCommand:
    def test_output_lines(self, tmp_path, capsys):
        f = graph_file(tmp_path, cycle_graph(6))
        assert main(["chordality", "--input", f, "--k", "5"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "chordality=6"
        assert lines[1] == "hole=0 1 2 3 4 5"
        assert lines[2] == "k-chordal=false"

    def test_acyclic(self, tmp_path, capsys):
        f = graph_file(tmp_path, path_graph(4))
        assert main(["chordality", "--input", f]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == ["chordality=0", "hole=none"]

    def test_dot_export(self, tmp_path, capsys):
        f = graph_file(tmp_path, cycle_graph(4))
        dot = tmp_path / "g.dot"
        assert main(["chordality", "--input", f, "--dot", str(dot)]) == 0
        assert "color=red" in dot.read_text()

    def test_parse_error_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.el"
        bad.write_text("borken\n")
        assert main(["chordality", "--input", str(bad)]) == 2
        assert "parse error" in capsys.readouterr().err

    def test_empty_graph(self, tmp_path, capsys):
        empty = tmp_path / "empty.el"
        empty.write_text("n 0\n")
        assert main(["chordality", "--input", str(empty)]) == 0
        assert capsys.readouterr().out.splitlines() == ["chordality=0", "hole=none"]

    def test_missing_file_exit_2(self, tmp_path, capsys):
        assert main(["chordality", "--input", str(tmp_path / "nope.el")]) == 2


class TestWitnessCommand:
    def test_c14_all_claims_pass(self, tmp_path, capsys):
        f = graph_file(tmp_path, cycle_graph(14))
        assert main(["witness", "--input", f, "--m", "3", "--strict"]) == 0
        out = capsys.readouterr().out
        assert "hole_length=8" in out
        assert "pulled_back_length=14" in out
        assert "verdict=ok" in out
        assert "FAIL" not in out

    def test_skip_when_no_long_hole(self, tmp_path, capsys):
        f = graph_file(tmp_path, path_graph(6))
        assert main(["witness", "--input", f, "--m", "3", "--strict"]) == 0
        assert "verdict=skipped" in capsys.readouterr().out

    def test_dot_export(self, tmp_path, capsys):
        f = graph_file(tmp_path, cycle_graph(14))
        dot = tmp_path / "hprime.dot"
        assert main(["witness", "--input", f, "--m", "3", "--dot", str(dot)]) == 0
        text = dot.read_text()
        assert "color=red" in text and 'pos="' in text

    def test_non_bipartite_input_exit_2(self, tmp_path, capsys):
        f = graph_file(tmp_path, cycle_graph(5))
        assert main(["witness", "--input", f, "--m", "3"]) == 2
        assert "not bipartite" in capsys.readouterr().err


class TestFuzzCommand:
    def test_success_exit_0(self, capsys):
        rc = main([
            "fuzz", "--property", "oracle-equivalence",
            "--trials", "10", "--seed", "3", "--max-n", "8",
        ])
        assert rc == 0
        out = capsys.readouterr().out
        assert "failures=0" in out and "result=ok" in out

    def test_bad_m_list_exit_2(self, capsys):
        rc = main([
            "fuzz", "--property", "theorem",
            "--trials", "5", "--max-n", "8", "--m", "2,4",
        ])
        assert rc == 2

    def test_unknown_property_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["fuzz", "--property", "bogus", "--trials", "1", "--max-n", "8"])
        assert info.value.code == 2

    def test_missing_subcommand_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2

    def test_elapsed_goes_to_stderr(self, capsys):
        main([
            "fuzz", "--property", "oracle-equivalence",
            "--trials", "5", "--seed", "1", "--max-n", "8",
        ])
        captured = capsys.readouterr()
        assert "elapsed" in captured.err
        assert "elapsed" not in captured.out
