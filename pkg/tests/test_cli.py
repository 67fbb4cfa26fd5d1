import subprocess
import sys

import pytest

from crispwta.cli import main
from crispwta.data import example_path
from crispwta.fileformat import load_wta, parse_wta
from crispwta.terms import enumerate_trees
from crispwta.wta import eval_init, eval_run, is_crisp_deterministic

from randgen import SIGMA


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def ex(name):
    return example_path(name)


def test_check(capsys):
    code, out, _ = run(capsys, "check", ex("sizemod2.wta"))
    assert code == 0 and "crisp-deterministic: yes" in out
    code, out, _ = run(capsys, "check", ex("size.wta"))
    assert "bu-deterministic: yes" in out and "crisp-deterministic: no" in out
    assert "semiring: yes" in out


def test_check_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.wta"
    bad.write_text("bimonoid tropical\nalphabet sigma:x\nstates p\n")
    code, _, err = run(capsys, "check", bad)
    assert code == 2 and "line 2, column 10" in err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", ex("example3_1.wta"), "gamma^3(alpha)")
    assert code == 0 and out.splitlines() == ["init: 2", "run: 16", "agree: no"]
    _, out, _ = run(capsys, "eval", ex("size.wta"), "sigma(alpha,alpha)", "--semantics", "run")
    assert out == "run: 3\n"
    _, out, _ = run(capsys, "eval", ex("sizemod2.wta"), "alpha", "--semantics", "init")
    assert out == "init: 3\n"


def test_eval_word_sugar(capsys):
    code, out, _ = run(capsys, "eval", ex("example3_1.wta"), "--word", "gamma,gamma,gamma")
    assert code == 0 and out.splitlines()[:2] == ["init: 2", "run: 16"]
    # letters of a word must be unary symbols
    assert run(capsys, "eval", ex("example3_1.wta"), "--word", "ggg")[0] == 2
    # not a wta file
    assert run(capsys, "eval", ex("swap.mealy"), "--word", "ab")[0] == 2
    # sigma is binary, so the alphabet is not monadic
    assert run(capsys, "eval", ex("size.wta"), "--word", "gamma")[0] == 2


def test_eval_errors(capsys):
    assert run(capsys, "eval", ex("size.wta"), "beta")[0] == 2
    assert run(capsys, "eval", ex("size.wta"), "sigma(alpha")[0] == 2
    assert run(capsys, "eval", ex("nope.wta"), "alpha")[0] == 2


def test_determinize_init(capsys, tmp_path):
    target = tmp_path / "d.wta"
    code, out, _ = run(capsys, "determinize", ex("exampleD.wta"), "--max-states", 10, "-o", target)
    assert code == 0 and "states: 2" in out
    assert "[inf, 0, 3]" in out and "[0, inf, 2]" in out
    N = load_wta(target)
    assert is_crisp_deterministic(N) and len(N.states) == 2
    code, out, _ = run(capsys, "equiv", ex("exampleD.wta"), target, "--max-size", 9)
    assert code == 0 and out == "equivalent up to size 9\n"


def test_determinize_to_stdout(capsys):
    code, out, err = run(capsys, "determinize", ex("exampleD.wta"))
    assert code == 0 and "states: 2" in err
    assert len(parse_wta(out).states) == 2


def test_determinize_run(capsys):
    code, out, err = run(capsys, "determinize", ex("exampleE.wta"), "--mode", "run", "--max-states", 100)
    assert code == 0 and "states: 4" in err and "index: 1 period: 1" in err
    R = parse_wta(out)
    E = load_wta(ex("exampleE.wta"))
    assert len(R.states) == 4
    for t in enumerate_trees(SIGMA, 7):
        assert eval_run(R, t) == eval_run(E, t)


def test_determinize_failures(capsys):
    code, out, _ = run(capsys, "determinize", ex("size_Finf.wta"), "--max-states", 1000)
    assert code == 1 and out.startswith("BudgetExceeded") and "explored 1001" in out
    code, out, _ = run(capsys, "determinize", ex("example3_1.wta"), "--mode", "run")
    assert code == 1 and out.startswith("NotEstablished")
    code, out, _ = run(capsys, "determinize", ex("exampleD.wta"), "--mode", "run", "--closure-budget", 5)
    assert code == 1 and "closure" in out


def test_equiv(capsys):
    A = ex("example3_1.wta")
    code, out, _ = run(capsys, "equiv", A, A)
    assert code == 0
    code, out, _ = run(capsys, "equiv", A, A, "--semantics", "run", "--semantics-b", "init")
    assert code == 1 and out.splitlines()[0] == "counterexample: gamma(alpha)"
    code, out, _ = run(capsys, "equiv", ex("sizemod2.wta"), ex("size.wta"))
    assert code == 1
    code, _, _ = run(capsys, "equiv", ex("sizemod2.wta"), ex("example3_1.wta"))
    assert code == 2


def test_export_is_deterministic(capsys):
    _, first, _ = run(capsys, "export", ex("size.wta"), "--format", "graph")
    _, second, _ = run(capsys, "export", ex("size.wta"))
    assert first == second and first.startswith("digraph")
    assert first.count("shape=box") == 3


def test_mealy_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "mealy", "explore", ex("swap.mealy"))
    assert code == 0 and out.startswith("finite: 2 elements")
    code, out, _ = run(capsys, "mealy", "explore", ex("adder.mealy"), "--budget", 50)
    assert code == 1 and out.startswith("BudgetExceeded")
    target = tmp_path / "adder.wta"
    assert run(capsys, "mealy", "to-wta", ex("adder.mealy"), "-o", target)[0] == 0
    A = load_wta(target)
    assert A.bimonoid.name == "fun:0,1"
    # monadic alphabet with one leaf: words work
    code, out, _ = run(capsys, "eval", target, "--word", "cc", "--semantics", "init")
    assert code == 0 and out.startswith("init: ")
    code, out, _ = run(capsys, "equiv", target, target, "--word", "c,n,c")
    assert code == 0 and out == "equivalent on c(n(c(e)))\n"


def test_mealy_wta_word_eval_matches_library(capsys, tmp_path):
    target = tmp_path / "swap.wta"
    run(capsys, "mealy", "to-wta", ex("swap.mealy"), "-o", target)
    A = load_wta(target)
    _, out, _ = run(capsys, "eval", target, "--word", "ss")
    lines = out.splitlines()
    assert lines[0] == "init: " + A.bimonoid.format(A.bimonoid.one)
    assert lines[-1] == "agree: yes"


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as err:
        main(["determinize", ex("exampleD.wta"), "--max-states", "0"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
    assert run(capsys, "eval", ex("size.wta"))[0] == 2


@pytest.mark.parametrize("argv", [
    ["check", "exampleD.wta"],
    ["determinize", "exampleE.wta", "--mode", "run"],
    ["determinize", "exampleD.wta"],
    ["export", "sizemod2.wta"],
    ["mealy", "explore", "swap.mealy"],
])
def test_byte_identical_output(capsys, argv):
    argv = [ex(a) if a.endswith((".wta", ".mealy")) else a for a in argv]
    first = run(capsys, *argv)
    assert run(capsys, *argv) == first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "crispwta", "eval", ex("sizemod2.wta"), "alpha",
                           "--semantics", "init"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "init: 3\n"


def test_eval_matches_library(capsys):
    A = load_wta(ex("exampleE.wta"))
    for t in list(enumerate_trees(SIGMA, 4)):
        _, out, _ = run(capsys, "eval", ex("exampleE.wta"), str(t))
        assert out.splitlines()[:2] == [f"init: {A.bimonoid.format(eval_init(A, t))}",
                                        f"run: {A.bimonoid.format(eval_run(A, t))}"]
