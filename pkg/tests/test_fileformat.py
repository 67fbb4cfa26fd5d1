import random

import pytest

from crispwta.data import example_names, example_path, load_example
from crispwta.errors import MalformedAcceptor, ParseError
from crispwta.fileformat import (load_stepmap, parse_mealy, parse_stepmap, parse_wta, write_algebra,
                                 write_mealy, write_wta)
from crispwta.mealy import to_wta as mealy_to_wta
from crispwta.rootalg import RootWeightAlgebra
from crispwta.stepmap import step_eval
from crispwta.terms import enumerate_trees

from randgen import FAMILIES, SIGMA, random_algebra, random_mealy, random_wta

HEADER = "bimonoid tropical\nalphabet sigma:2 gamma:1 alpha:0\nstates p q\n"


def test_every_example_loads():
    names = example_names()
    assert "sizemod2.wta" in names and "swap.mealy" in names and "sizemod2.step" in names
    for name in names:
        assert load_example(name) is not None


@pytest.mark.parametrize("family", FAMILIES)
def test_wta_round_trip(family):
    rng = random.Random(61)
    for _ in range(30):
        A = random_wta(rng, family)
        text = write_wta(A)
        assert parse_wta(text) == A
        assert write_wta(parse_wta(text)) == text


def test_algebra_round_trip():
    rng = random.Random(62)
    for name in ("tropical", "cut14", "nat"):
        for _ in range(10):
            K = random_algebra(rng, name)
            back = parse_wta(write_algebra(K))
            assert isinstance(back, RootWeightAlgebra)
            assert back == K


def test_product_state_names_survive(example):
    s = example("sizemod2.step")
    from crispwta.stepmap import step_to_crisp
    C = step_to_crisp(s)
    assert "(e|o)" in C.states
    assert parse_wta(write_wta(C)) == C


def test_function_bimonoid_wta_round_trip(example):
    A = mealy_to_wta(example("adder.mealy"))
    assert parse_wta(write_wta(A)) == A


def test_mealy_round_trip():
    rng = random.Random(63)
    for _ in range(20):
        M = random_mealy(rng)
        assert parse_mealy(write_mealy(M)) == M


def test_stepmap_file(tmp_path):
    for name in ("even.wta", "odd.wta"):
        (tmp_path / name).write_text(open(example_path(name)).read())
    (tmp_path / "s.step").write_text("stepmap tropical\nstep 1 even.wta\nstep 4 even.wta\n")
    s = load_stepmap(tmp_path / "s.step")
    assert not s.normal_form
    inf = float("inf")
    assert [step_eval(s, t) for t in enumerate_trees(SIGMA, 3)] == [inf, 1, inf, inf]
    (tmp_path / "bad.step").write_text(f"stepmap tropical\nstep 1 {example_path('sizemod2.wta')}\n")
    with pytest.raises(MalformedAcceptor):
        load_stepmap(tmp_path / "bad.step")
    with pytest.raises(ParseError):
        parse_stepmap("step 1 even.wta\n", str(tmp_path))


@pytest.mark.parametrize("text,line,column", [
    (HEADER.replace("gamma:1", "gamma"), 2, 18),
    (HEADER + "trans sigma(p) -> q : 1\n", 4, 7),
    (HEADER + "trans alpha() -> r : 1\n", 4, 18),
    (HEADER + "trans alpha() -> q : x\n", 4, 22),
    (HEADER + "trans alpha() q : 1\n", 4, 20),
    (HEADER + "trans gamma(r) -> p : 1\n", 4, 13),
    (HEADER + "frobnicate\n", 4, 1),
    ("bimonoid nope\n", 1, 10),
    (HEADER + "final p 1p\n", 4, 9),
])
def test_parse_error_positions(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_wta(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert str(err.value).startswith(f"line {line}, column {column}:")


def test_missing_sections():
    with pytest.raises(ParseError):
        parse_wta("alphabet alpha:0\nstates p\n")
    with pytest.raises(ParseError):
        parse_wta(HEADER + "trans alpha() -> p : 1\ntrans alpha() -> p : 2\n")
    with pytest.raises(ParseError):
        parse_mealy("alphabet a\nstates p\ntrans p a -> p / a\n")
    with pytest.raises(ParseError):
        parse_mealy("mealy\nalphabet a b\nstates p\ntrans p a -> p / a\n")


def test_comments_and_blank_lines():
    A = parse_wta("# header\n\n" + HEADER + "final p 0   # root\ntrans alpha() -> p : 0\n")
    assert A.final_weight("p") == 0 and len(A.delta) == 1
