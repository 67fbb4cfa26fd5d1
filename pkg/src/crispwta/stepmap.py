"""Recognizable step mappings: finite sums of constants over tree languages.

Each step is a weight together with a language, given as a Boolean wta that
is bu-deterministic and total (a classical deterministic bottom-up tree
automaton with accepting states ``F_q = 1``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .algebra import BOOLEAN, Bimonoid
from .errors import AlphabetMismatch, MalformedAcceptor, NotCrispDeterministic
from .rootalg import product_name
from .terms import RankedAlphabet, Tree
from .wta import Wta, eval_init, is_bu_deterministic, is_crisp_deterministic, is_total


@dataclass
class StepMapping:
    alphabet: RankedAlphabet
    bimonoid: Bimonoid
    steps: list = field(default_factory=list)      # [(weight, acceptor wta)]
    normal_form: bool = False


def check_acceptor(L: Wta) -> None:
    if L.bimonoid.name != "bool":
        raise MalformedAcceptor("acceptors must be Boolean wta")
    if not (is_bu_deterministic(L) and is_total(L)):
        raise MalformedAcceptor("acceptors must be bu-deterministic and total")


def accepts(L: Wta, t: Tree) -> bool:
    return eval_init(L, t) == 1


def step_eval(s: StepMapping, t: Tree):
    B = s.bimonoid
    return B.sum(b for b, L in s.steps if accepts(L, t))


def crisp_to_step(A: Wta) -> StepMapping:
    """One step per state q: weight F_q, language {t : A reaches q on t}."""
    if not is_crisp_deterministic(A):
        raise NotCrispDeterministic("the wta is not crisp-deterministic")
    delta = {key: 1 for key in A.delta}
    steps = []
    for q in A.states:
        L = Wta(A.alphabet, A.states, delta, {q: 1}, BOOLEAN)
        steps.append((A.final_weight(q), L))
    return StepMapping(A.alphabet, A.bimonoid, steps, normal_form=True)


def _successor_tables(steps):
    tables = []
    for _b, L in steps:
        tables.append({(kids, s): q for (kids, s, q) in L.delta})
    return tables


def _product_reach(s: StepMapping, full: bool):
    """Product states of the acceptors, either all of them or the reachable ones."""
    for _b, L in s.steps:
        check_acceptor(L)
        if L.alphabet != s.alphabet:
            raise AlphabetMismatch("acceptor over a different alphabet")
    tables = _successor_tables(s.steps)

    def step(sym, args):
        return tuple(tables[i][(tuple(a[i] for a in args), sym)] for i in range(len(tables)))

    syms = sorted(s.alphabet.items())
    if full:
        states = list(product(*(L.states for _b, L in s.steps)))
    else:
        states = []
        seen = set()
        for sym, k in syms:
            if k == 0 and step(sym, ()) not in seen:
                seen.add(step(sym, ()))
                states.append(step(sym, ()))
        grew = True
        while grew:
            grew = False
            for sym, k in syms:
                for args in product(list(states), repeat=k):
                    q = step(sym, args)
                    if q not in seen:
                        seen.add(q)
                        states.append(q)
                        grew = True
    return states, step


def is_normal_form(s: StepMapping) -> bool:
    """Exact check that every tree is in exactly one step language."""
    if not s.steps:
        return False
    reachable, _ = _product_reach(s, full=False)
    for tup in reachable:
        hits = sum(1 for (b, L), q in zip(s.steps, tup) if L.final_weight(q) == 1)
        if hits != 1:
            return False
    return True


def step_to_crisp(s: StepMapping) -> Wta:
    """Product of all acceptors; F sums the weights of the accepting components."""
    if not s.steps:
        # the empty sum is the constant 𝟘 mapping
        delta = {((("*",) * k), sym, "*"): s.bimonoid.one for sym, k in s.alphabet.items()}
        return Wta(s.alphabet, ["*"], delta, {}, s.bimonoid)
    states, step = _product_reach(s, full=True)
    B = s.bimonoid
    names = {tup: product_name(tup) for tup in states}
    delta = {}
    for sym, k in s.alphabet.items():
        for args in product(states, repeat=k):
            delta[(tuple(names[a] for a in args), sym, names[step(sym, args)])] = B.one
    final = {}
    for tup in states:
        final[names[tup]] = B.sum(b for (b, L), q in zip(s.steps, tup) if L.final_weight(q) == 1)
    return Wta(s.alphabet, [names[t] for t in states], delta, final, B)
