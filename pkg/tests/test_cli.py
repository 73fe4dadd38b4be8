import io
import json
from pathlib import Path

import pytest

from kuniv.cli import run

FIGURE_A = str(Path(__file__).parent / "data" / "figure_a.nfa")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_index_text_and_json():
    code, out, _ = call("index", "--word", "baaababb", "--sigma", "2")
    assert code == 0
    assert out.splitlines() == ["index 3", "arches ba|aab|ab", "rest b"]
    code, out, _ = call("index", "--word", "baaababb", "--sigma", "2", "--format", "json")
    assert json.loads(out) == {"index": 3, "arches": ["ba", "aab", "ab"], "rest": "b"}


def test_regex_esu():
    code, out, _ = call("esu", "--regex", "(a*b*c|bc)|a*", "--sigma", "3", "--k", "2")
    assert (code, out.strip()) == (0, "false")
    code, out, _ = call("esu", "--regex", "(a*b*c|bc)|a*", "--sigma", "3", "--k", "1")
    assert out.strip() == "true"


def test_algorithms_agree_on_figure_a():
    for k, expected in [(1, "true"), (2, "true"), (3, "false")]:
        verdicts = {call("esu", "--nfa", FIGURE_A, "--k", str(k), "--algo", algo)[1].strip()
                    for algo in ("sigma", "states", "product", "auto")}
        assert verdicts == {expected}


def test_maxindex_and_dump():
    code, out, err = call("maxindex", "--nfa", FIGURE_A, "--dump-scc")
    assert (code, out.strip()) == (0, "2")
    assert "C2: states [2] V=bc" in err
    _, out, _ = call("maxindex", "--regex", "(ab)*", "--sigma", "2")
    assert out.strip() == "unbounded"
    _, out, _ = call("maxindex", "--regex", "(ab)*", "--sigma", "2", "--format", "json")
    assert json.loads(out) == {"max_index": "unbounded"}


def test_usu():
    _, out, _ = call("usu", "--regex", "abc|bca", "--sigma", "3", "--k", "1")
    assert out.strip() == "true"
    _, out, _ = call("usu", "--nfa", FIGURE_A, "--k", "1", "--format", "json")
    assert json.loads(out) == {"verdict": False}


def test_count_and_rank(tmp_path):
    full = tmp_path / "full.nfa"
    full.write_text("nfa\nsigma 2\nstates 1\ninitial 0\nfinal 0\n0 1 0\n0 2 0\nend\n")
    _, out, _ = call("count", "--nfa", str(full), "--k", "1", "--len", "3")
    assert out.strip() == "6"
    _, out, _ = call("count", "--nfa", str(full), "--k", "1", "--len", "3", "--mode", "atmost",
                     "--format", "json")
    assert json.loads(out) == {"count": "8"}
    _, out, _ = call("count", "--nfa", str(full), "--k", "1", "--mode", "total")
    assert out.strip() == "infinite"
    _, out, _ = call("count", "--nfa", str(full), "--k", "1", "--len", "2", "--perfect")
    assert out.strip() == "2"
    _, out, _ = call("rank", "--nfa", str(full), "--k", "1", "--word", "ba")
    assert out.strip() == "1"
    _, out, _ = call("rank", "--nfa", str(full), "--k", "1", "--word", "aab", "--mode", "atmost",
                     "--len", "3", "--format", "json")
    assert json.loads(out) == {"rank": "2"}


def test_reduce_and_sat2regex(tmp_path):
    _, out, _ = call("reduce", "--regex", "a(bc)*d", "--sigma", "4")
    assert out.strip() == "abcbcd"
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 2 1\n1 2 0\n")
    _, out, _ = call("sat2regex", "--cnf", str(cnf))
    assert out.strip() == "(a|_)(a|_)"
    _, out, _ = call("sat2regex", "--cnf", str(cnf), "--print-nfa", "--format", "json")
    payload = json.loads(out)
    assert payload["sigma"] == 1 and payload["nfa"].startswith("nfa\n")


def test_oracle_report():
    _, out, _ = call("oracle", "--nfa", FIGURE_A, "--k", "2", "--max-len", "6",
                     "--format", "json")
    report = json.loads(out)
    assert report["max_index"] == 2 and report["max_index_product"] == 2
    assert report["verdict"] is True and report["usu"] is False
    _, out, _ = call("oracle", "--regex", "ab|ba", "--sigma", "2", "--max-len", "3")
    assert "index 1: 2" in out


@pytest.mark.parametrize("argv,code", [
    (["esu", "--nfa", FIGURE_A], 2),
    (["esu", "--nfa", FIGURE_A, "--regex", "a", "--sigma", "1", "--k", "1"], 2),
    (["esu", "--nfa", "/nonexistent.nfa", "--k", "1"], 2),
    (["esu", "--regex", "((", "--sigma", "2", "--k", "1"], 2),
    (["reduce", "--regex", "(ab)*", "--sigma", "2"], 2),
    (["bogus"], 2),
    (["count", "--nfa", FIGURE_A, "--k", "0", "--len", "3"], 2),
    (["esu", "--regex", "(a|b)(a|b)(a|b)(a|b)(a|b)(a|b)(a|b)", "--sigma", "2", "--k", "1",
      "--algo", "states"], 3),
])
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_capacity_error_message():
    code, _, err = call("maxindex", "--regex", "abababababab", "--sigma", "2", "--algo", "states")
    assert code == 3 and "capacity" in err


def test_json_fields_for_every_subcommand(tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 2 1\n1 2 0\n")
    cases = {
        "index": (["--word", "ab", "--sigma", "2"], {"index", "arches", "rest"}),
        "esu": (["--nfa", FIGURE_A, "--k", "1"], {"verdict", "max_index"}),
        "usu": (["--nfa", FIGURE_A, "--k", "1"], {"verdict"}),
        "maxindex": (["--nfa", FIGURE_A], {"max_index"}),
        "count": (["--nfa", FIGURE_A, "--k", "1", "--len", "4", "--paths"], {"count"}),
        "rank": (["--nfa", FIGURE_A, "--k", "1", "--word", "abca", "--paths"], {"rank"}),
        "reduce": (["--regex", "a*b", "--sigma", "2"], {"regex"}),
        "sat2regex": (["--cnf", str(cnf)], {"regex", "sigma"}),
        "oracle": (["--nfa", FIGURE_A, "--k", "1", "--max-len", "4"],
                   {"verdict", "max_index", "histogram"}),
    }
    for command, (extra, fields) in cases.items():
        code, out, err = call(command, *extra, "--format", "json")
        assert code == 0, (command, err)
        assert fields <= set(json.loads(out))
