import json
import subprocess
import sys

import pydot
import pytest
from hypothesis import given, strategies as st

from divseq.cli import emit_dot, main, parse_polynomial
from divseq.errors import ParseError
from divseq.polyring import IntPoly, format_poly
from divseq.satset import MultiplicityMap, hasse_diagram, saturate


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParse:
    def test_examples(self):
        assert parse_polynomial("x^4+x^3-x-1").coeffs == (-1, -1, 0, 1, 1)
        assert parse_polynomial("x^2 - 2*x + 1").coeffs == (1, -2, 1)

    def test_variants(self):
        assert parse_polynomial("-3x^2+ 2 x").coeffs == (0, 2, -3)
        assert parse_polynomial(" 5 ").coeffs == (5,)
        assert parse_polynomial("x + x - 2x").is_zero()
        assert parse_polynomial("123456789012345678901234567890*x").coeffs == (0, 123456789012345678901234567890)

    @pytest.mark.parametrize(
        "text,pos",
        [("x^-1", 2), ("x^2 + y", 6), ("", 0), ("x +", 3), ("2**x", 2), ("x^", 2), ("x x", 2)],
    )
    def test_errors(self, text, pos):
        with pytest.raises(ParseError) as exc:
            parse_polynomial(text)
        assert exc.value.position == pos

    @given(st.lists(st.integers(-(10**6), 10**6), max_size=10).map(IntPoly))
    def test_left_inverse_of_printer(self, f):
        assert parse_polynomial(format_poly(f)) == f


class TestDot:
    def test_single_node(self):
        dot = emit_dot(hasse_diagram(saturate([1])))
        assert 'label="1"' in dot and "->" not in dot

    def test_divisors_of_six(self):
        dot = emit_dot(hasse_diagram(saturate([6])))
        assert dot.count("[label=") == 4
        for a, b in [(1, 2), (1, 3), (2, 6), (3, 6)]:
            assert f"n{a} -> n{b};" in dot
        assert dot.count("->") == 4

    def test_fig2a_labels(self):
        lam = MultiplicityMap.from_dict({1: 3, 2: 2, 3: 2, 6: 1})
        dot = emit_dot(hasse_diagram(lam))
        for label in ["1 (3)", "2 (2)", "3 (2)", "6 (1)"]:
            assert f'label="{label}"' in dot

    def test_deterministic_and_parseable(self):
        d = hasse_diagram(saturate([4, 6, 10]))
        text = emit_dot(d)
        assert text == emit_dot(hasse_diagram(saturate([10, 6, 4])))
        (graph,) = pydot.graph_from_dot_data(text)
        edges = {(e.get_source(), e.get_destination()) for e in graph.get_edges()}
        assert edges == {(f"n{a}", f"n{b}") for a, b in d.edges}


class TestCommands:
    def test_seq_table1(self, capsys):
        code, out, _ = run(capsys, "seq", "--set", "2,3", "-P", "1", "-Q", "-1", "-n", "9")
        assert code == 0
        assert out.split() == "0 1 12 68 504 3355 23256 158717 1089648 7463884".split()

    def test_seq_json(self, capsys):
        code, out, _ = run(capsys, "seq", "--set", "2,3", "-P", "1", "-Q", "-1", "-n", "30", "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["P"] == 1 and doc["Q"] == -1 and doc["generators"] == [2, 3]
        assert doc["map"] == {"1": 1, "2": 1, "3": 1}
        assert all(isinstance(t, str) for t in doc["terms"])
        assert doc["terms"][:4] == ["0", "1", "12", "68"]
        assert int(doc["terms"][30]) > 2**64

    def test_seq_csv(self, capsys):
        code, out, _ = run(capsys, "seq", "--set", "1", "-P", "3", "-Q", "2", "-n", "3", "--csv")
        assert out.splitlines() == ["n,term", "0,0", "1,1", "2,3", "3,7"]

    def test_seq_with_map(self, capsys):
        code, out, _ = run(
            capsys, "seq", "--set", "6", "--map", "1:3,2:2,3:2,6:1", "-P", "1", "-Q", "-1", "-n", "3"
        )
        assert code == 0 and out.split()[:2] == ["0", "1"]

    def test_seq_bad_map(self, capsys):
        code, _, err = run(capsys, "seq", "--set", "2", "--map", "2:3", "-P", "1", "-Q", "-1", "-n", "3")
        assert code == 2 and "order-reversing" in err

    def test_seq_degenerate(self, capsys):
        code, _, err = run(capsys, "seq", "--set", "2", "-P", "0", "-Q", "1", "-n", "3")
        assert code == 2 and "Phi_2" in err

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "out.txt"
        code, out, _ = run(capsys, "-o", str(path), "cyclo", "6")
        assert code == 0 and out == ""
        assert path.read_text() == "x^2 - x + 1\n"

    def test_cyclo_and_phi_set(self, capsys):
        assert run(capsys, "cyclo", "9")[1] == "x^6 + x^3 + 1\n"
        assert run(capsys, "phi-set", "2,3")[1] == "x^4 + x^3 - x - 1\n"

    def test_recognize(self, capsys):
        code, out, _ = run(capsys, "recognize", "x^4+x^3-x-1")
        assert code == 0 and "map = {1:1, 2:1, 3:1}" in out
        code, out, _ = run(capsys, "recognize", "x^2+x+1")
        assert code == 1 and "NotOrderReversing" in out

    def test_recognize_parse_error(self, capsys):
        code, _, err = run(capsys, "recognize", "x^-1")
        assert code == 2 and "position 2" in err

    def test_canon(self, capsys):
        assert run(capsys, "canon", "x^8 - x^6 - x^2 + 1")[1] == "Phi_<1>(x^6) * Phi_<1>(x^2)\n"
        assert run(capsys, "canon", "x^4+x^3-x-1")[1] == "Phi_<2,3>(x)\n"
        assert run(capsys, "canon", "2x^3-2x")[1] == "2 * x * Phi_<1>(x^2)\n"

    def test_hasse(self, capsys):
        code, out, _ = run(capsys, "hasse", "4,6,10", "--dot")
        assert code == 0 and out.startswith("digraph")
        code, out, _ = run(capsys, "hasse", "6")
        assert "edges: 1-2, 1-3, 2-6, 3-6" in out

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "verify", "div", "--set", "2,3", "-P", "1", "-Q", "-1", "-n", "12")
        assert (code, out) == (0, "OK\n")
        code, out, _ = run(capsys, "verify", "strongdiv", "--set", "2,3", "-P", "1", "-Q", "-1", "-n", "10")
        assert code == 1 and "m=2 n=3" in out
        code, out, _ = run(capsys, "verify", "strongdiv", "--set", "5", "-P", "3", "-Q", "2", "-n", "15")
        assert (code, out) == (0, "OK\n")

    def test_compress(self, capsys):
        assert run(capsys, "compress", "6,10")[1] == "core = <3,5>\nexponent = 2\n"

    @pytest.mark.parametrize(
        "argv",
        [["cyclo", "abc"], ["phi-set", "0,2"], ["seq", "--set", "2", "-P", "1", "-n", "3"], ["bogus"]],
    )
    def test_usage_errors(self, argv):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "divseq", "verify", "strongdiv", "--set", "2,3", "-P", "1", "-Q", "-1", "-n", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert proc.stdout.strip() == "counterexample: m=2 n=3"
