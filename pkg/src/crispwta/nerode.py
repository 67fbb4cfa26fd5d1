"""Crisp determinization for the initial algebra semantics.

The Nerode algebra of a wta is the subalgebra of its vector algebra that
trees actually reach.  When it is finite, turning it into a crisp
deterministic wta gives an i-equivalent automaton.  Finiteness is
undecidable in general, so the construction runs under a state budget.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceeded
from .terms import Tree, enumerate_trees
from .wta import Wta, apply_symbol, eval_vector, is_crisp_deterministic, root_value


@dataclass
class NerodeResult:
    wta: Wta
    vectors: list            # discovered vectors, in discovery order
    witnesses: dict          # vector -> a tree evaluating to it
    names: dict              # vector -> state name in ``wta``

    @property
    def size(self) -> int:
        return len(self.vectors)


def build_nerode(A: Wta, max_states: int = 10_000) -> NerodeResult:
    """Saturate the image of h_V by FIFO worklist.

    Raises :class:`BudgetExceeded` as soon as more than ``max_states``
    distinct vectors have been found.
    """
    if max_states < 1:
        raise ValueError("max_states must be >= 1")
    vectors: list = []
    witness: dict = {}
    queue: deque = deque()

    def add(v, t):
        if v in witness:
            return
        witness[v] = t
        vectors.append(v)
        if len(vectors) > max_states:
            raise BudgetExceeded(f"more than {max_states} Nerode states", explored=len(vectors))
        queue.append(len(vectors) - 1)

    alphabet = sorted(A.alphabet.items())
    for sym, k in alphabet:
        if k == 0:
            add(apply_symbol(A, sym, ()), Tree(sym))
    theta = {}
    while queue:
        i = queue.popleft()
        # every tuple over vectors[0..i] that contains i, each exactly once:
        # the first occurrence of i is at position j
        for sym, k in alphabet:
            for j in range(k):
                for before in product(range(i), repeat=j):
                    for after in product(range(i + 1), repeat=k - j - 1):
                        args = before + (i,) + after
                        v = apply_symbol(A, sym, [vectors[a] for a in args])
                        add(v, Tree(sym, [witness[vectors[a]] for a in args]))
                        theta[(args, sym)] = v
    for sym, k in alphabet:
        if k == 0:
            theta[((), sym)] = apply_symbol(A, sym, ())

    names = {v: f"v{n}" for n, v in enumerate(vectors)}
    one = A.bimonoid.one
    delta = {(tuple(names[vectors[a]] for a in args), sym, names[v]): one
             for (args, sym), v in theta.items()}
    final = {names[v]: root_value(A, v) for v in vectors}
    out = Wta(A.alphabet, [names[v] for v in vectors], delta, final, A.bimonoid)
    return NerodeResult(out, vectors, witness, names)


@dataclass
class MinimalityVerdict:
    consistent: bool
    nerode_size: int
    competitor_size: int
    counterexample: tuple | None = None   # (tree1, tree2) separating an h_V component

    @property
    def size_ok(self) -> bool:
        return self.nerode_size <= self.competitor_size


def minimality_probe(A: Wta, competitor: Wta, depth: int = 6, nerode: NerodeResult | None = None) -> MinimalityVerdict:
    """Bounded necessary check that each h_V component is a final variant of ``competitor``.

    Every q-component t -> h_V(t)_q is realised by a final variant of a crisp
    deterministic automaton exactly when it factors through the state that
    automaton reaches on t.  We look for two trees of size <= ``depth`` that
    reach the same competitor state but differ in some component; a pair
    like that is a counterexample.  No counterexample is not a proof.
    """
    if not is_crisp_deterministic(competitor):
        raise ValueError("the competitor must be crisp-deterministic")
    if nerode is None:
        nerode = build_nerode(A)
    seen: dict = {}
    for t in enumerate_trees(A.alphabet, depth):
        v = eval_vector(A, t)
        state = _crisp_state(competitor, t)
        if state in seen and seen[state][0] != v:
            return MinimalityVerdict(False, nerode.size, len(competitor.states), (seen[state][1], t))
        seen.setdefault(state, (v, t))
    return MinimalityVerdict(True, nerode.size, len(competitor.states))


def _crisp_state(C: Wta, t: Tree):
    v = eval_vector(C, t)
    return next(q for q, x in zip(C.states, v) if x == C.bimonoid.one)

