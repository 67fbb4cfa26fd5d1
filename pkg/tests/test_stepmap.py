import random
from itertools import combinations

import pytest

from crispwta.algebra import BOOLEAN, INF, TROPICAL
from crispwta.errors import MalformedAcceptor, NotCrispDeterministic
from crispwta.rootalg import to_wta
from crispwta.stepmap import (StepMapping, accepts, crisp_to_step, is_normal_form, step_eval,
                              step_to_crisp)
from crispwta.terms import enumerate_trees, parse_tree
from crispwta.wta import Wta, eval_init, is_crisp_deterministic

import oracles
from randgen import SIGMA, random_algebra

T = parse_tree


def universal():
    delta = {((), "alpha", "u"): 1, (("u",), "gamma", "u"): 1, (("u", "u"), "sigma", "u"): 1}
    return Wta(SIGMA, ["u"], delta, {"u": 1}, BOOLEAN)


def test_shipped_step_mapping(example):
    s = example("sizemod2.step")
    assert s.normal_form
    assert [b for b, _ in s.steps] == [2, 3]
    assert step_eval(s, T("gamma(alpha)")) == 2
    assert step_eval(s, T("alpha")) == 3
    for t in enumerate_trees(SIGMA, 7):
        assert step_eval(s, t) == (2 if t.size % 2 == 0 else 3)


def test_trivial_steps():
    assert step_eval(StepMapping(SIGMA, TROPICAL, []), T("alpha")) == INF
    s = StepMapping(SIGMA, TROPICAL, [(5, universal())])
    assert all(step_eval(s, t) == 5 for t in enumerate_trees(SIGMA, 5))
    assert is_normal_form(s)


def test_crisp_to_step_example(example):
    A = example("sizemod2.wta")
    s = crisp_to_step(A)
    assert sorted(b for b, _ in s.steps) == [2, 3]
    assert s.normal_form and is_normal_form(s)
    with pytest.raises(NotCrispDeterministic):
        crisp_to_step(example("size.wta"))


def test_step_to_crisp_example(example):
    C = step_to_crisp(example("sizemod2.step"))
    assert is_crisp_deterministic(C)
    for t in enumerate_trees(SIGMA, 7):
        assert eval_init(C, t) == (2 if t.size % 2 == 0 else 3)


def test_overlapping_steps_add_up(example):
    even = example("even.wta")
    s = StepMapping(SIGMA, TROPICAL, [(4, even), (1, even), (7, universal())])
    assert not is_normal_form(s)
    C = step_to_crisp(s)
    for t in enumerate_trees(SIGMA, 7):
        assert eval_init(C, t) == step_eval(s, t) == (1 if t.size % 2 == 0 else 7)


def test_malformed_acceptor(example):
    bad = Wta(SIGMA, ["u"], {((), "alpha", "u"): 1}, {"u": 1}, BOOLEAN)
    with pytest.raises(MalformedAcceptor):
        step_to_crisp(StepMapping(SIGMA, TROPICAL, [(1, bad)]))
    with pytest.raises(MalformedAcceptor):
        step_to_crisp(StepMapping(SIGMA, TROPICAL, [(1, example("sizemod2.wta"))]))


def test_empty_step_list_is_zero():
    C = step_to_crisp(StepMapping(SIGMA, TROPICAL, []))
    assert all(eval_init(C, t) == INF for t in enumerate_trees(SIGMA, 5))


@pytest.mark.parametrize("name", ["tropical", "nat", "tbm", "cut14"])
def test_round_trips(name):
    rng = random.Random(31)
    trees = list(enumerate_trees(SIGMA, 7))
    for _ in range(15):
        A = to_wta(random_algebra(rng, name))
        s = crisp_to_step(A)
        assert is_normal_form(s)
        C = step_to_crisp(s)
        for t in trees:
            hits = [i for i, (_b, L) in enumerate(s.steps) if accepts(L, t)]
            assert len(hits) == 1
            assert step_eval(s, t) == eval_init(A, t) == eval_init(C, t) == oracles.init_value(A, t)


def test_image_is_within_sums_of_step_weights(example):
    rng = random.Random(32)
    langs = [example("even.wta"), example("odd.wta"), universal()]
    B = TROPICAL
    for _ in range(20):
        s = StepMapping(SIGMA, B, [(rng.choice([0, 1, 2, 5]), rng.choice(langs)) for _ in range(3)])
        weights = [b for b, _ in s.steps]
        sums = {B.sum(c) for k in range(len(weights) + 1) for c in combinations(weights, k)}
        assert {step_eval(s, t) for t in enumerate_trees(SIGMA, 6)} <= sums
