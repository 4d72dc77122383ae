import json

import pytest

from ospds.cli import main


@pytest.fixture
def run(capsys):
    def invoke(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err
    return invoke


class TestDs:
    def test_table(self, run):
        code, out, _ = run("ds", "+xoox", "--t", "1")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines == ["+x                   (0|2)", "ooox                 (1|0)"]

    def test_json_round_trip(self, run):
        code, out, _ = run("ds", "+xoox", "--t", "1", "--json")
        assert code == 0
        data = json.loads(out)
        assert data == {"t": 1, "rank": 1, "input": "+xoox",
                        "components": [{"diagram": "+x", "d0": 0, "d1": 2},
                                       {"diagram": "ooox", "d0": 1, "d1": 0}]}
        from ospds.diagram import parse
        for comp in data["components"]:
            parse(comp["diagram"], data["t"])

    def test_rank(self, run):
        code, out, _ = run("ds", "-x^2", "--t", "1", "--rank", "2")
        assert code == 0
        assert out.strip().startswith("o ")

    def test_parse_error_exits_2_with_grammar(self, run):
        code, out, err = run("ds", "junk", "--t", "1")
        assert code == 2
        assert "zerotok" in err

    def test_invalid_diagram_exits_1(self, run):
        code, _, err = run("ds", "+x", "--t", "2")
        assert code == 1
        assert "invalid" in err

    def test_deterministic(self, run):
        a = run("ds", "x^2oxooxxooooxo", "--t", "0", "--json")
        b = run("ds", "x^2oxooxxooooxo", "--t", "0", "--json")
        assert a == b

    def test_osp(self, run):
        code, out, _ = run("ds", "+oxox", "--t", "0", "--osp")
        assert code == 0
        assert "(0|2)" in out


class TestOracle:
    def test_value(self, run):
        code, out, _ = run("oracle", "+xoox", "+x", "--t", "1")
        assert code == 0
        assert out.strip() == "(0|2)"

    def test_trace(self, run):
        code, out, _ = run("oracle", "+xoox", "+x", "--t", "1", "--trace")
        assert code == 0
        assert "compact" in out and out.strip().endswith("(0|2)")


class TestOtherCommands:
    def test_parse_diagram(self, run):
        code, out, _ = run("parse", "-x^2oxoox", "--t", "1")
        assert code == 0 and out.strip() == "-x^2oxoox"

    def test_parse_weight(self, run):
        code, out, _ = run("parse", "B 1 1 / -1/2 / 1/2")
        assert code == 0 and out.strip() == "-x  (t=1)"

    def test_validate(self, run):
        assert run("validate", "-x", "--t", "1")[0] == 0
        code, out, _ = run("validate", "+x", "--t", "2")
        assert code == 1 and "violation" in out

    def test_core_howl(self, run):
        assert run("core", "x>", "--t", "0")[1].strip() == "+o>"
        assert run("howl", "<x<x", "--t", "1")[1].strip() == "+xx"

    def test_unhowl(self, run):
        code, out, _ = run("unhowl", "+o>", "o", "--t", "0")
        assert code == 0 and out.split() == ["+o>", "-o>"]

    def test_tau(self, run):
        assert run("tau", ">xoox", "--t", "2")[1].strip() == "+xoox"
        assert run("tau", "+xoox", "--t", "1", "--inverse")[1].strip() == ">xoox"

    def test_stabilize(self, run):
        code, out, _ = run("stabilize", ">x", "--t", "1")
        assert code == 0
        assert out.splitlines()[0] == "+x>"
        assert out.splitlines()[1] == "moves: 0"

    def test_arcs(self, run):
        code, out, _ = run("arcs", "+xoox", "--t", "1")
        assert code == 0
        assert "* arc(0;1)" in out and "* arc(3;4)" in out
        code, out, _ = run("arcs", "+xoox", "--t", "1", "--render")
        assert ".--." in out

    def test_es(self, run):
        code, out, _ = run("es", "+x^3x", "--t", "1", "--series", "B", "--json")
        data = json.loads(out)
        dotted = [(a["from"], a["to"]) for a in data["arcs"] if a["dotted"]]
        assert dotted == [(4, 5), (6, 7)]

    def test_sdim(self, run):
        code, out, _ = run("sdim", "+ox", "--t", "0", "--m", "1", "--n", "1")
        assert code == 0 and out.strip() == "-1"

    def test_enumerate(self, run):
        code, out, _ = run("enumerate", "--t", "1", "-k", "1", "--width", "2")
        assert code == 0 and out.split() == ["-x", "+x", "ox"]

    def test_usage_error(self, run):
        assert run("nonsense")[0] == 2
        assert run("ds", "+x")[0] == 2  # missing --t
