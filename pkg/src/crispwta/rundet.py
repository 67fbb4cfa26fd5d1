"""Crisp determinization for the run semantics.

Requires the finite order property: the multiplicative closure H of the
transition weights is finite and every element of H * im(F) has finite
additive order.  Run counts can then be collapsed to residues in
[0, i + p - 1] without changing any n-fold sum, and the residue tables
(``PiState``) become the states of a crisp-deterministic wta.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import product

from .algebra import finite_order, mult_closure, nfold_sum
from .errors import BudgetExceeded, NotEstablished
from .terms import Tree, fold
from .wta import Wta, run_profile


@dataclass(frozen=True)
class OrderData:
    H: frozenset
    index: int
    period: int

    def j(self, n: int) -> int:
        return j_map(n, self)


def transition_image(A: Wta) -> set:
    """im(delta), including 𝟘 when some transition is missing."""
    image = set(A.delta.values())
    total = sum(len(A.states) ** (k + 1) for _s, k in A.alphabet.items())
    if len(A.delta) < total:
        image.add(A.bimonoid.zero)
    return image


def check_finite_order_property(A: Wta, closure_budget: int = 10_000, order_budget: int = 10_000) -> OrderData:
    """Compute H, i_A and p_A, or raise :class:`NotEstablished`."""
    if closure_budget < 1 or order_budget < 1:
        raise ValueError("budgets must be >= 1")
    B = A.bimonoid
    seed = transition_image(A)
    try:
        H = mult_closure(B, seed, budget=max(closure_budget, len(seed)))
    except BudgetExceeded as exc:
        raise NotEstablished("closure", f"multiplicative closure exceeds {closure_budget} elements") from exc
    finals = set(A.final_vector)
    index, period = 1, 1
    for h in sorted(H):
        for f in sorted(finals):
            try:
                info = finite_order(B, B.times(h, f), budget=order_budget)
            except BudgetExceeded as exc:
                raise NotEstablished("order", f"no finite order for {B.format(B.times(h, f))} within {order_budget} steps") from exc
            index = max(index, info.index)
            period = math.lcm(period, info.period)
    return OrderData(H, index, period)


def j_map(n: int, od: OrderData) -> int:
    if n < od.index:
        return n
    return od.index + (n - od.index) % od.period


class PiState:
    """Residues pi(q, b); zero residues are not stored."""

    __slots__ = ("entries", "_hash")

    def __init__(self, entries):
        self.entries = {k: r for k, r in dict(entries).items() if r}
        self._hash = hash(frozenset(self.entries.items()))

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def items(self):
        return self.entries.items()

    def __eq__(self, other):
        return isinstance(other, PiState) and self.entries == other.entries

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PiState({self.entries!r})"

    def describe(self, A: Wta) -> str:
        fmt = A.bimonoid.format
        rows = sorted(self.entries.items(), key=lambda kv: (A.index[kv[0][0]], str(kv[0][1])))
        return "{" + ", ".join(f"({q},{fmt(b)}):{r}" for (q, b), r in rows) + "}"


def compute_pi(symbol: str, children, A: Wta, od: OrderData) -> PiState:
    """The residue table at a ``symbol`` node from its children's tables.

    Each combination of child entries (q_i, b_i, r_i) contributes, for every
    target q, the product of the r_i to the key (q, (b_1...b_k) * delta).
    Counting runs multiplies along children, so residues do too.
    """
    if len(children) != A.alphabet.rank(symbol):
        raise ValueError(f"{symbol} expects {A.alphabet.rank(symbol)} children")
    B = A.bimonoid
    acc: dict = {}
    for combo in product(*(list(c.items()) for c in children)):
        kid_states = tuple(q for (q, _b), _r in combo)
        weight = B.one
        count = 1
        for (_q, b), r in combo:
            weight = B.times(weight, b)
            count *= r
        for q in A.states:
            key = (q, B.times(weight, A.weight(kid_states, symbol, q)))
            acc[key] = j_map(acc.get(key, 0) + count, od)
    return PiState(acc)


def pi_of_tree(A: Wta, od: OrderData, t: Tree) -> PiState:
    return fold(t, lambda s, cs: compute_pi(s, cs, A, od))


def pi_from_profile(A: Wta, od: OrderData, t: Tree) -> PiState:
    """Residues straight from exact run counts; the reference for pi_of_tree."""
    return PiState({k: j_map(n, od) for k, n in run_profile(A, t).items()})


def pi_final(A: Wta, pi: PiState):
    B = A.bimonoid
    total = B.zero
    for (q, b), r in sorted(pi.items(), key=lambda kv: (A.index[kv[0][0]], str(kv[0][1]))):
        total = B.plus(total, nfold_sum(B, B.times(b, A.final_weight(q)), r))
    return total


@dataclass
class RunDetResult:
    wta: Wta
    pistates: list       # in discovery order
    witnesses: dict      # PiState -> tree
    names: dict          # PiState -> state name

    @property
    def size(self) -> int:
        return len(self.pistates)


def build_run_det(A: Wta, od: OrderData, max_states: int = 10_000) -> RunDetResult:
    """Worklist construction of R(A) over reachable residue tables."""
    if max_states < 1:
        raise ValueError("max_states must be >= 1")
    states: list = []
    witness: dict = {}
    queue: deque = deque()

    def add(pi, t):
        if pi in witness:
            return
        witness[pi] = t
        states.append(pi)
        if len(states) > max_states:
            raise BudgetExceeded(f"more than {max_states} run-order states", explored=len(states))
        queue.append(len(states) - 1)

    alphabet = sorted(A.alphabet.items())
    theta = {}
    for sym, k in alphabet:
        if k == 0:
            pi = compute_pi(sym, (), A, od)
            theta[((), sym)] = pi
            add(pi, Tree(sym))
    while queue:
        i = queue.popleft()
        for sym, k in alphabet:
            for j in range(k):
                for before in product(range(i), repeat=j):
                    for after in product(range(i + 1), repeat=k - j - 1):
                        args = before + (i,) + after
                        pi = compute_pi(sym, [states[a] for a in args], A, od)
                        add(pi, Tree(sym, [witness[states[a]] for a in args]))
                        theta[(args, sym)] = pi

    names = {pi: f"r{n}" for n, pi in enumerate(states)}
    one = A.bimonoid.one
    delta = {(tuple(names[states[a]] for a in args), sym, names[pi]): one
             for (args, sym), pi in theta.items()}
    final = {names[pi]: pi_final(A, pi) for pi in states}
    out = Wta(A.alphabet, [names[pi] for pi in states], delta, final, A.bimonoid)
    return RunDetResult(out, states, witness, names)
