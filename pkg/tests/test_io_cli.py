import json
import subprocess
import sys

import pytest

from extpow import io
from extpow.cli import main
from extpow.families import cycle, star
from extpow.signed import SignedGraph, is_balanced


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def sg_file(tmp_path):
    def make(g, name="g.sg"):
        p = tmp_path / name
        io.write_sg(g, str(p))
        return str(p)

    return make


class TestFormat:
    def test_roundtrip_is_byte_stable(self):
        g = SignedGraph(5, [(3, 4, -1), (0, 1, 1), (1, 2, -1)])
        text = io.format_sg(g)
        assert io.parse_sg(text) == g
        assert io.format_sg(io.parse_sg(text)) == text

    def test_short_signs_and_comments(self):
        g = io.parse_sg("# triangle\n3 3\n0 1 +\n1 2 -\n\n0 2 1  # last\n")
        assert g.edges() == [(0, 1, 1), (0, 2, 1), (1, 2, -1)]

    @pytest.mark.parametrize(
        "text",
        ["", "3\n", "3 1\n", "3 1\n0 1 2\n", "3 1\n1 0 +1\n", "3 1\n0 5 +1\n", "2 2\n0 1 +\n0 1 -\n", "x y\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(io.GraphFormatError):
            io.parse_sg(text)

    def test_dot(self):
        dot = io.format_dot(SignedGraph(2, [(0, 1, -1)]))
        assert '0 -- 1 [style=dashed, label="-"]' in dot


class TestGen:
    def test_one_negative_cycle(self, capsys):
        code, out, _ = run(capsys, "gen", "cycle", "5", "--sign", "one-negative")
        g = io.parse_sg(out)
        assert code == 0 and g.sign(0, 4) == -1 and sum(s < 0 for *_, s in g.edges()) == 1

    def test_path(self, capsys):
        _, out, _ = run(capsys, "gen", "path", "4")
        assert out == "4 3\n0 1 +1\n1 2 +1\n2 3 +1\n"

    def test_johnson(self, capsys):
        _, out, _ = run(capsys, "gen", "johnson", "4", "2", "1")
        assert out.splitlines()[0] == "6 12"

    def test_bad_params(self, capsys):
        code, _, err = run(capsys, "gen", "cycle", "2")
        assert code == 2 and err.startswith("extpow: error:")

    def test_deterministic(self, capsys):
        a = run(capsys, "gen", "complete", "6", "--sign", "random", "--seed", "5")[1]
        b = run(capsys, "gen", "complete", "6", "--sign", "random", "--seed", "5")[1]
        assert a == b


class TestWedge:
    def test_c4_square(self, capsys, sg_file):
        code, out, _ = run(capsys, "wedge", "-k", "2", "-i", sg_file(cycle(4)))
        g = io.parse_sg(out)
        assert code == 0 and (g.n, g.m) == (6, 8)
        assert sum(s < 0 for *_, s in g.edges()) == 2

    def test_k1_is_input(self, capsys, sg_file):
        g = SignedGraph(4, [(0, 1, -1), (1, 2, 1), (2, 3, 1)])
        _, out, _ = run(capsys, "wedge", "-k", "1", "-i", sg_file(g))
        assert out == io.format_sg(g)

    def test_claw_square(self, capsys, sg_file):
        _, out, _ = run(capsys, "wedge", "-k", "2", "-i", sg_file(star(3)))
        g = io.parse_sg(out)
        assert (g.n, g.m) == (6, 6) and sum(s < 0 for *_, s in g.edges()) == 3
        assert not is_balanced(g).balanced

    def test_json_provenance(self, capsys, sg_file):
        _, out, _ = run(capsys, "wedge", "-k", "2", "-i", sg_file(star(3)), "--format", "json")
        data = json.loads(out)
        assert data["k"] == 2 and len(data["vertices"]) == 6
        for e in data["edges"]:
            assert e["sign"] == e["permutation_sign"] * e["base_sign"]

    def test_dot(self, capsys, sg_file):
        _, out, _ = run(capsys, "wedge", "-k", "2", "-i", sg_file(cycle(4)), "--format", "dot")
        assert out.count("style=dashed") == 2 and 'label="0^1"' in out

    @pytest.mark.parametrize("k", ["0", "4"])
    def test_bad_k(self, capsys, sg_file, k):
        code, _, err = run(capsys, "wedge", "-k", k, "-i", sg_file(cycle(4)))
        assert code == 2 and "-k must lie" in err

    def test_sidecar(self, capsys, sg_file, tmp_path):
        out = tmp_path / "w.sg"
        assert run(capsys, "wedge", "-k", "2", "-i", sg_file(cycle(4)), "-o", str(out))[0] == 0
        labels = json.loads((tmp_path / "w.sg.labels.json").read_text())
        assert labels["labels"]["0"] == [0, 1] and io.read_sg(str(out)).n == 6

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "wedge", "-k", "2", "-i", str(tmp_path / "nope.sg"))
        assert code == 2 and err


class TestBalance:
    def test_balanced(self, capsys, sg_file):
        code, out, _ = run(capsys, "balance", "-i", sg_file(cycle(4)))
        assert code == 0 and out.splitlines() == ["balanced", "switching: +1 +1 +1 +1"]

    def test_unbalanced(self, capsys, sg_file):
        g = SignedGraph(3, [(0, 1, -1), (1, 2), (0, 2)])
        code, out, _ = run(capsys, "balance", "-i", sg_file(g))
        lines = out.splitlines()
        assert code == 1 and lines[0] == "unbalanced"
        assert sorted(map(int, lines[1].split(":")[1].split())) == [0, 1, 2]

    def test_anti(self, capsys, sg_file):
        g = SignedGraph(4, [(a, b, -1) for a in range(4) for b in range(a + 1, 4)])
        code, out, _ = run(capsys, "balance", "--anti", "-i", sg_file(g))
        assert code == 0 and out.startswith("anti-balanced")

    def test_stdin(self, capsys, monkeypatch):
        import io as stdio

        monkeypatch.setattr(sys, "stdin", stdio.StringIO("2 1\n0 1 -1\n"))
        assert run(capsys, "balance")[0] == 0


class TestSwitchEquiv:
    def test_witness(self, capsys, sg_file):
        a = SignedGraph(3, [(0, 1, 1), (1, 2, 1)])
        b = SignedGraph(3, [(0, 1, -1), (1, 2, 1)])
        code, out, _ = run(capsys, "switch-equiv", "-a", sg_file(a, "a.sg"), "-b", sg_file(b, "b.sg"))
        assert code == 0 and out.startswith("equivalent")

    def test_not_equivalent(self, capsys, sg_file):
        a = cycle(3)
        b = SignedGraph(3, [(0, 1, -1), (1, 2), (0, 2)])
        assert run(capsys, "switch-equiv", "-a", sg_file(a, "a.sg"), "-b", sg_file(b, "b.sg"))[0] == 1

    def test_mismatch(self, capsys, sg_file):
        code, _, err = run(capsys, "switch-equiv", "-a", sg_file(cycle(4), "a.sg"), "-b", sg_file(cycle(3), "b.sg"))
        assert code == 2 and err


class TestCover:
    def test_p3(self, capsys, sg_file):
        from extpow.families import path

        code, out, _ = run(capsys, "cover", "-k", "2", "-i", sg_file(path(3)))
        assert code == 0
        assert out.splitlines() == [
            "cover vertices: 6",
            "cover edges: 4",
            "isomorphic: true",
            "double cover of the signed exterior square: true",
        ]

    def test_c5_written(self, capsys, sg_file, tmp_path):
        out_path = tmp_path / "c.sg"
        code, out, _ = run(capsys, "cover", "-k", "3", "-i", sg_file(cycle(5)), "-o", str(out_path))
        assert code == 0 and "isomorphic: true" in out
        assert io.read_sg(str(out_path)).n == 60


class TestVerify:
    @pytest.mark.parametrize("suite", [["--suite", "theorem1", "--nmax", "4"], ["--suite", "algebra"], ["--suite", "covers"]])
    def test_suites_pass(self, capsys, suite):
        code, out, _ = run(capsys, "verify", *suite)
        assert code == 0 and "[PASS]" in out and "[FAIL]" not in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "theorem1", "--nmax", "3", "--json")
        data = json.loads(out)
        assert code == 0 and data[0]["passed"] and data[0]["instances"] == 2 + (3 * 4 + 8) * 2

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "extpow", "gen", "path", "3"], capture_output=True, text=True, check=False
        )
        assert proc.returncode == 0 and proc.stdout.startswith("3 2")
