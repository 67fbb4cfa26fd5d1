import random
from itertools import product

import pytest

from crispwta.algebra import INF
from crispwta.errors import BudgetExceeded
from crispwta.nerode import build_nerode, minimality_probe
from crispwta.rootalg import RootWeightAlgebra, isomorphic, to_algebra, to_wta
from crispwta.terms import enumerate_trees
from crispwta.wta import Wta, eval_init, eval_vector, first_difference, is_crisp_deterministic, is_total

from randgen import SIGMA, random_wta


def test_example_d(example):
    D = example("exampleD.wta")
    res = build_nerode(D, max_states=10)
    assert set(res.vectors) == {(0, INF, 2), (INF, 0, 3)}
    finals = {res.vectors[i]: res.wta.final_weight(res.names[res.vectors[i]]) for i in range(2)}
    assert finals == {(0, INF, 2): 2, (INF, 0, 3): 3}
    assert isomorphic(to_algebra(res.wta), to_algebra(example("sizemod2.wta")))
    assert first_difference(res.wta, D, 9) is None


def test_literal_reading_of_d_is_larger(example):
    # with sigma also firing on r children the image of h_V has 8 vectors,
    # but the initial semantics is still size mod 2
    D = example("exampleD_literal.wta")
    res = build_nerode(D, max_states=50)
    assert res.size == 8
    assert first_difference(D, example("sizemod2.wta"), 8) is None


def test_size_with_infinite_root_weight(example):
    with pytest.raises(BudgetExceeded) as err:
        build_nerode(example("size_Finf.wta"), max_states=1000)
    assert err.value.explored == 1001


def test_boolean_always_terminates():
    rng = random.Random(5)
    for _ in range(50):
        A = random_wta(rng, "bool")
        res = build_nerode(A, max_states=2 ** len(A.states))
        assert res.size <= 2 ** len(A.states)


@pytest.mark.parametrize("family", ["bool", "tropical", "cut14"])
def test_success_invariants(family):
    rng = random.Random(11)
    checked = 0
    for _ in range(60):
        A = random_wta(rng, family, weights=None if family != "tropical" else [0, INF, 1])
        try:
            res = build_nerode(A, max_states=40)
        except BudgetExceeded:
            continue
        checked += 1
        N = res.wta
        assert is_crisp_deterministic(N) and is_total(N)
        for v in res.vectors:
            assert eval_vector(A, res.witnesses[v]) == v
        seen = set()
        for t in enumerate_trees(SIGMA, 7):
            assert eval_init(N, t) == eval_init(A, t)
            seen.add(eval_vector(A, t))
        assert seen <= set(res.vectors)
    assert checked > 10


def test_nerode_vectors_reachable_within_depth_are_found():
    rng = random.Random(12)
    for _ in range(30):
        A = random_wta(rng, "bool", n_states=3)
        res = build_nerode(A)
        assert {eval_vector(A, t) for t in enumerate_trees(SIGMA, 8)} == set(res.vectors)


def test_bu_det_over_multiplicatively_finite_terminates():
    # cut14 is multiplicatively locally finite; bu-det input gives a finite Nerode algebra
    rng = random.Random(13)
    for _ in range(40):
        A = random_wta(rng, "cut14", bu_det=True)
        build_nerode(A, max_states=500)


def _duplicate_state(N: Wta, q):
    """Same automaton with an extra copy of q that behaves exactly like q."""
    K = to_algebra(N)
    dup = q + "_copy"
    carrier = list(K.carrier) + [dup]
    unalias = lambda args: tuple(q if a == dup else a for a in args)
    theta = {sym: {args: K.theta[sym][unalias(args)] for args in product(carrier, repeat=k)}
             for sym, k in N.alphabet.items()}
    root = dict(K.root, **{dup: K.root[q]})
    return to_wta(RootWeightAlgebra(N.alphabet, carrier, theta, root, N.bimonoid))


def test_minimality_probe(example):
    D = example("exampleD.wta")
    res = build_nerode(D)
    same = minimality_probe(D, res.wta, depth=7, nerode=res)
    assert same.consistent and same.nerode_size == same.competitor_size == 2

    bigger = _duplicate_state(res.wta, "v0")
    assert is_crisp_deterministic(bigger)
    v = minimality_probe(D, bigger, depth=7, nerode=res)
    assert v.consistent and v.competitor_size == 3 and v.size_ok

    # one state only: cannot separate the parity vectors
    one = Wta(SIGMA, ["x"], {((), "alpha", "x"): 0, (("x",), "gamma", "x"): 0,
                             (("x", "x"), "sigma", "x"): 0}, {"x": 2}, D.bimonoid)
    bad = minimality_probe(D, one, depth=7, nerode=res)
    assert not bad.consistent
    t1, t2 = bad.counterexample
    assert eval_vector(D, t1) != eval_vector(D, t2)
