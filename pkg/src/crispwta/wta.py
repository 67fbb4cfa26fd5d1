"""Weighted tree automata and their two semantics.

``eval_vector``/``eval_init`` implement the initial algebra semantics through
the vector algebra B^Q.  ``eval_run_naive`` enumerates runs; ``run_profile``
and ``eval_run`` compute the same sum through exact run counts, which stays
polynomial in the tree size.

Products are always taken children left to right with the transition weight
last, so non-commutative multiplications are handled correctly.
"""

from __future__ import annotations

from collections import Counter
from itertools import product

from .algebra import Bimonoid, nfold_sum
from .errors import AlphabetMismatch, SafetyCapExceeded
from .terms import RankedAlphabet, Tree, check_tree, enumerate_trees, fold, positions

NAIVE_RUN_CAP = 10**6


class Wta:
    """A (Sigma, B)-wta with states, sparse transitions and root weights.

    ``delta`` maps ``(children_states, symbol, target)`` to a weight;
    missing keys (and explicit zeros, which are dropped) mean 𝟘.
    ``final`` maps states to root weights, missing states mean 𝟘.
    """

    def __init__(self, alphabet: RankedAlphabet, states, delta, final, bimonoid: Bimonoid):
        self.alphabet = alphabet
        self.states = tuple(states)
        self.bimonoid = B = bimonoid
        if not self.states:
            raise ValueError("a wta needs at least one state")
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state names")
        self.index = {q: i for i, q in enumerate(self.states)}
        clean = {}
        for (kids, sym, q), w in dict(delta).items():
            kids = tuple(kids)
            if sym not in alphabet:
                raise ValueError(f"unknown symbol {sym!r}")
            if alphabet.rank(sym) != len(kids):
                raise ValueError(f"{sym} has rank {alphabet.rank(sym)}, got {len(kids)} states")
            for p in kids + (q,):
                if p not in self.index:
                    raise ValueError(f"unknown state {p!r}")
            if w != B.zero:
                clean[(kids, sym, q)] = w
        self.delta = clean
        fin = {}
        for q, w in dict(final).items():
            if q not in self.index:
                raise ValueError(f"unknown state {q!r}")
            fin[q] = w
        self.final = fin
        # symbol -> list of (child indices, target index, weight), canonical order
        by_sym = {s: [] for s in alphabet}
        for (kids, sym, q), w in clean.items():
            by_sym[sym].append((tuple(self.index[p] for p in kids), self.index[q], w))
        for rows in by_sym.values():
            rows.sort(key=lambda r: (r[0], r[1]))
        self._by_symbol = by_sym
        by_kids = {s: {} for s in alphabet}
        for (kids, sym, q), w in clean.items():
            by_kids[sym].setdefault(kids, []).append((q, w))
        for table in by_kids.values():
            for rows in table.values():
                rows.sort(key=lambda r: self.index[r[0]])
        self._by_kids = by_kids

    def weight(self, kids, symbol, q):
        return self.delta.get((tuple(kids), symbol, q), self.bimonoid.zero)

    def final_weight(self, q):
        return self.final.get(q, self.bimonoid.zero)

    @property
    def final_vector(self) -> tuple:
        return tuple(self.final_weight(q) for q in self.states)

    def transitions(self, symbol):
        """Nonzero transitions for ``symbol`` as (child indices, target index, weight)."""
        return self._by_symbol[symbol]

    def __eq__(self, other):
        return (isinstance(other, Wta) and self.alphabet == other.alphabet
                and self.states == other.states and self.delta == other.delta
                and self.final_vector == other.final_vector
                and self.bimonoid.name == other.bimonoid.name)

    __hash__ = None

    def __repr__(self):
        return (f"Wta({self.bimonoid.name}, states={list(self.states)}, "
                f"{len(self.delta)} transitions)")


def _keys(A: Wta):
    for sym, k in A.alphabet.items():
        for kids in product(A.states, repeat=k):
            yield kids, sym


def _target_counts(A: Wta) -> Counter:
    return Counter((kids, sym) for (kids, sym, _q) in A.delta)


def is_bu_deterministic(A: Wta) -> bool:
    return all(n <= 1 for n in _target_counts(A).values())


def is_total(A: Wta) -> bool:
    counts = _target_counts(A)
    return all(counts[key] >= 1 for key in _keys(A))


def is_crisp_deterministic(A: Wta) -> bool:
    one = A.bimonoid.one
    if any(w != one for w in A.delta.values()):
        return False
    counts = _target_counts(A)
    return all(counts[key] == 1 for key in _keys(A))


def _check_input(A: Wta, t: Tree):
    try:
        check_tree(t, A.alphabet)
    except ValueError as exc:
        raise AlphabetMismatch(str(exc)) from None


def apply_symbol(A: Wta, symbol: str, child_vectors) -> tuple:
    """delta_A(sigma) applied to vectors: the vector algebra operation."""
    B = A.bimonoid
    zero = B.zero
    out = [zero] * len(A.states)
    for kids, q, w in A.transitions(symbol):
        acc = B.one
        for v, qi in zip(child_vectors, kids):
            x = v[qi]
            if x == zero:
                acc = zero
                break
            acc = B.times(acc, x)
        if acc == zero:
            continue
        out[q] = B.plus(out[q], B.times(acc, w))
    return tuple(out)


def eval_vector(A: Wta, t: Tree) -> tuple:
    """h_V(t) as a tuple aligned with ``A.states``."""
    _check_input(A, t)
    return fold(t, lambda s, cs: apply_symbol(A, s, cs))


def root_value(A: Wta, v) -> object:
    B = A.bimonoid
    return B.sum(B.times(v[i], A.final_weight(q)) for i, q in enumerate(A.states))


def eval_init(A: Wta, t: Tree):
    return root_value(A, eval_vector(A, t))


def eval_run_naive(A: Wta, t: Tree, cap: int = NAIVE_RUN_CAP):
    """Sum over all runs, enumerated explicitly; refuses more than ``cap`` runs."""
    _check_input(A, t)
    B = A.bimonoid
    pos = positions(t)
    n = len(A.states)
    if n ** len(pos) > cap:
        raise SafetyCapExceeded(f"{n}^{len(pos)} runs exceed the cap of {cap}")
    nodes = [t.subtree(p) for p in pos]
    slot = {p: i for i, p in enumerate(pos)}
    # children slots per position, children before parents when reversed
    kids_of = [tuple(slot[p + (j,)] for j in range(1, len(nodes[i].children) + 1))
               for i, p in enumerate(pos)]
    delta, zero, one = A.delta, B.zero, B.one
    syms = [nd.symbol for nd in nodes]
    total = zero
    for labels in product(A.states, repeat=len(pos)):
        fin = A.final_weight(labels[0])
        if fin == zero:
            continue
        wt = [None] * len(pos)
        for i in range(len(pos) - 1, -1, -1):
            acc = one
            for c in kids_of[i]:
                acc = B.times(acc, wt[c])
            kid_states = tuple(labels[c] for c in kids_of[i])
            wt[i] = B.times(acc, delta.get((kid_states, syms[i], labels[i]), zero))
        total = B.plus(total, B.times(wt[0], fin))
    return total


def profile_step(A: Wta, symbol: str, child_profiles) -> dict:
    """Combine children run profiles {(q, b): count} at a ``symbol`` node.

    Zero-weight runs are kept, including those through missing transitions,
    so the counts always add up to |Q|^|pos|.
    """
    B = A.bimonoid
    zero = B.zero
    total = 1
    items = []
    for p in child_profiles:
        total *= sum(p.values())
        items.append([((q, b), n) for (q, b), n in p.items() if b != zero])
    out: dict = {}
    live = dict.fromkeys(A.states, 0)
    table = A._by_kids[symbol]
    for combo in product(*items):
        acc = B.one
        count = 1
        for (_q, b), n in combo:
            acc = B.times(acc, b)
            count *= n
        if acc == zero:
            continue
        for q, w in table.get(tuple(q for (q, _b), _n in combo), ()):
            b = B.times(acc, w)
            if b != zero:
                out[(q, b)] = out.get((q, b), 0) + count
                live[q] += count
    # everything else, including runs through missing transitions, weighs 𝟘
    for q in A.states:
        if total > live[q]:
            out[(q, zero)] = out.get((q, zero), 0) + total - live[q]
    return out


def run_profile(A: Wta, t: Tree) -> dict:
    """p_t(q, b): the number of runs with root state q and weight b."""
    _check_input(A, t)
    return fold(t, lambda s, cs: profile_step(A, s, cs))


def profile_value(A: Wta, profile) -> object:
    B = A.bimonoid
    total = B.zero
    for (q, b), n in sorted(profile.items(), key=lambda kv: (A.index[kv[0][0]], str(kv[0][1]))):
        total = B.plus(total, nfold_sum(B, B.times(b, A.final_weight(q)), n))
    return total


def eval_run(A: Wta, t: Tree):
    return profile_value(A, run_profile(A, t))


def final_variant(A: Wta, final) -> Wta:
    return Wta(A.alphabet, A.states, A.delta, final, A.bimonoid)


def export_hypergraph(A: Wta) -> str:
    """DOT rendering of the functional hypergraph of ``A``.

    State nodes are ``q_<name>`` labelled with the root weight, boxes are
    ``t_<index>`` labelled with symbol and weight.  Incoming arcs carry the
    argument position as ``port``/``label``.
    """
    fmt = A.bimonoid.format
    lines = ["digraph wta {", "  rankdir=LR;"]
    for q in A.states:
        lines.append(f'  "q_{q}" [shape=circle, label="{q}\\n{fmt(A.final_weight(q))}"];')
    rows = sorted(A.delta.items(),
                  key=lambda kv: (kv[0][1], tuple(A.index[p] for p in kv[0][0]), A.index[kv[0][2]]))
    for i, ((kids, sym, q), w) in enumerate(rows):
        lines.append(f'  "t_{i}" [shape=box, label="{sym}\\n{fmt(w)}"];')
        for j, p in enumerate(kids, start=1):
            lines.append(f'  "q_{p}" -> "t_{i}" [label="{j}"];')
        lines.append(f'  "t_{i}" -> "q_{q}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def hypergraph_counts(A: Wta) -> tuple[int, int]:
    """(number of state nodes, number of transition boxes)."""
    return len(A.states), len(A.delta)


SEMANTICS = {"init": eval_init, "run": eval_run}


def first_difference(A: Wta, B: Wta, max_size: int, sem_a: str = "init", sem_b: str | None = None):
    """First tree of size <= ``max_size`` where the two semantics disagree, or None."""
    if A.alphabet != B.alphabet:
        raise AlphabetMismatch("automata over different alphabets")
    if A.bimonoid.name != B.bimonoid.name:
        raise AlphabetMismatch("automata over different bimonoids")
    fa = SEMANTICS[sem_a]
    fb = SEMANTICS[sem_b or sem_a]
    for t in enumerate_trees(A.alphabet, max_size):
        if fa(A, t) != fb(B, t):
            return t
    return None
