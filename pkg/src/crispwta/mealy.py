"""Mealy machines, the sequential functions they induce, and their monoid.

A :class:`SeqFunction` is a length-preserving sequential function stored as
a minimal complete transducer in canonical form, so structural equality is
functional equality.  Together with the constant-infinity function ``ZERO``
these form the fragment of the lcp/composition bimonoid that the Mealy
reduction needs.  The lcp sum is only defined when one side is ``ZERO`` or
both sides are equal; anything else raises :class:`NotRepresentable`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .algebra import Bimonoid
from .errors import AlphabetMismatch, BudgetExceeded, NotRepresentable, ParseError
from .terms import RankedAlphabet
from .wta import Wta


@dataclass(frozen=True)
class MealyMachine:
    states: tuple
    alphabet: tuple
    tau: dict        # (q, a) -> q'
    nu: dict         # (q, a) -> b

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        if not self.states or not self.alphabet:
            raise ValueError("states and alphabet must be nonempty")
        for q in self.states:
            for a in self.alphabet:
                if (q, a) not in self.tau or (q, a) not in self.nu:
                    raise ValueError(f"transition for ({q}, {a}) is missing")
                if self.tau[(q, a)] not in self.states:
                    raise ValueError(f"unknown target state {self.tau[(q, a)]!r}")
                if self.nu[(q, a)] not in self.alphabet:
                    raise ValueError(f"unknown output letter {self.nu[(q, a)]!r}")

    def __hash__(self):
        return hash((self.states, self.alphabet))

    def run(self, q, word) -> list:
        """nu_q(word) by the defining recurrence."""
        out = []
        for a in word:
            out.append(self.nu[(q, a)])
            q = self.tau[(q, a)]
        return out


class SeqFunction:
    """Canonical minimal transducer, or ZERO when ``table`` is None.

    ``table[s][i] = (next_state, output_letter)`` for the i-th alphabet letter;
    state 0 is initial and states are numbered in BFS order.
    """

    __slots__ = ("alphabet", "table", "_hash")

    def __init__(self, alphabet, table):
        self.alphabet = tuple(alphabet)
        self.table = table
        self._hash = hash((self.alphabet, table))

    @property
    def is_zero(self) -> bool:
        return self.table is None

    @property
    def size(self) -> int:
        return 0 if self.table is None else len(self.table)

    def __call__(self, word):
        """Image of ``word``; None stands for the infinity point."""
        if self.table is None:
            return None
        pos = {a: i for i, a in enumerate(self.alphabet)}
        s = 0
        out = []
        for a in word:
            s, b = self.table[s][pos[a]]
            out.append(b)
        return out

    def _key(self):
        return (0,) if self.table is None else (1, self.table)

    def __eq__(self, other):
        return (isinstance(other, SeqFunction) and self._hash == other._hash
                and self.alphabet == other.alphabet and self.table == other.table)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key() < other._key()

    def __repr__(self):
        return f"SeqFunction({format_seq(self)})"


def zero_function(alphabet) -> SeqFunction:
    return SeqFunction(alphabet, None)


def identity_function(alphabet) -> SeqFunction:
    return SeqFunction(alphabet, (tuple((0, a) for a in alphabet),))


def minimize(alphabet, nxt, out, initial) -> SeqFunction:
    """Canonical form of the transducer (nxt, out) pointed at ``initial``.

    ``nxt[s][i]`` / ``out[s][i]`` give successor and output for letter i.
    Moore-style refinement on output rows and successor classes, then BFS
    numbering from the initial class.
    """
    n_letters = len(alphabet)
    letters = range(n_letters)
    reach = [initial]
    local = {initial: 0}
    i = 0
    while i < len(reach):
        s = reach[i]
        i += 1
        for a in letters:
            t = nxt[s][a]
            if t not in local:
                local[t] = len(reach)
                reach.append(t)
    # work on local indices 0..m-1 from here on
    succ = [tuple(local[nxt[s][a]] for a in letters) for s in reach]
    outs = [tuple(out[s]) for s in reach]
    ids: dict = {}
    cls = [ids.setdefault(row, len(ids)) for row in outs]
    n_cls = len(ids)
    while True:
        ids = {}
        new = [ids.setdefault((cls[s],) + tuple(cls[t] for t in succ[s]), len(ids))
               for s in range(len(reach))]
        if len(ids) == n_cls:
            break
        cls, n_cls = new, len(ids)
    rep = {}
    for s in range(len(reach)):
        rep.setdefault(cls[s], s)
    number = {cls[0]: 0}
    order = [cls[0]]
    k = 0
    while k < len(order):
        s = rep[order[k]]
        k += 1
        for t in succ[s]:
            d = cls[t]
            if d not in number:
                number[d] = len(order)
                order.append(d)
    table = tuple(
        tuple((number[cls[succ[rep[c]][a]]], outs[rep[c]][a]) for a in letters)
        for c in order)
    return SeqFunction(alphabet, table)


def induced_map(M: MealyMachine, q) -> SeqFunction:
    idx = {p: i for i, p in enumerate(M.states)}
    nxt = [[idx[M.tau[(p, a)]] for a in M.alphabet] for p in M.states]
    out = [[M.nu[(p, a)] for a in M.alphabet] for p in M.states]
    return minimize(M.alphabet, nxt, out, idx[q])


def compose(f: SeqFunction, g: SeqFunction) -> SeqFunction:
    """f o g: apply g first, then f."""
    if f.alphabet != g.alphabet:
        raise AlphabetMismatch("sequential functions over different alphabets")
    if f.is_zero or g.is_zero:
        return zero_function(f.alphabet)
    return _compose_cached(f, g)


@lru_cache(maxsize=65536)
def _compose_cached(f: SeqFunction, g: SeqFunction) -> SeqFunction:
    alphabet = f.alphabet
    pos = {a: i for i, a in enumerate(alphabet)}
    index = {(0, 0): 0}
    pairs = [(0, 0)]
    nxt, out = [], []
    i = 0
    while i < len(pairs):
        sg, sf = pairs[i]
        i += 1
        row_n, row_o = [], []
        for a in range(len(alphabet)):
            g2, b = g.table[sg][a]
            f2, c = f.table[sf][pos[b]]
            key = (g2, f2)
            if key not in index:
                index[key] = len(pairs)
                pairs.append(key)
            row_n.append(index[key])
            row_o.append(c)
        nxt.append(row_n)
        out.append(row_o)
    return minimize(alphabet, nxt, out, 0)


def lcp_sum(f: SeqFunction, g: SeqFunction) -> SeqFunction:
    if f.alphabet != g.alphabet:
        raise AlphabetMismatch("sequential functions over different alphabets")
    if f.is_zero:
        return g
    if g.is_zero or f == g:
        return f
    raise NotRepresentable("the pointwise lcp of two different sequential functions "
                           "is not a length-preserving sequential function")


def format_seq(f: SeqFunction) -> str:
    """``inf`` for ZERO, else rows ``out>next,...`` joined by ``;``."""
    if f.is_zero:
        return "inf"
    return ";".join(",".join(f"{b}>{n}" for n, b in row) for row in f.table)


def parse_seq(alphabet, text: str) -> SeqFunction:
    text = text.strip()
    if text == "inf":
        return zero_function(alphabet)
    if text == "id":
        return identity_function(alphabet)
    rows = []
    try:
        for chunk in text.split(";"):
            cells = chunk.split(",")
            if len(cells) != len(alphabet):
                raise ValueError
            row = []
            for cell in cells:
                b, n = cell.split(">")
                if b not in alphabet:
                    raise ValueError
                row.append((int(n), b))
            rows.append(row)
    except ValueError:
        raise ParseError(f"bad sequential function {text!r}") from None
    if any(n >= len(rows) for row in rows for n, _b in row):
        raise ParseError(f"state out of range in {text!r}")
    f = minimize(tuple(alphabet), [[n for n, _ in r] for r in rows], [[b for _, b in r] for r in rows], 0)
    return f


@lru_cache(maxsize=None)
def function_bimonoid(alphabet: tuple) -> Bimonoid:
    alphabet = tuple(alphabet)
    for a in alphabet:
        if any(c in a for c in ">,;") or not a:
            raise ValueError(f"letter {a!r} cannot be encoded")
    return Bimonoid(
        "fun:" + ",".join(alphabet), zero_function(alphabet), identity_function(alphabet),
        plus=lcp_sum, times=compose,
        parse=lambda text: parse_seq(alphabet, text), format=format_seq,
        is_add_idempotent=True,
    )


def explore_monoid(M: MealyMachine, budget: int = 10_000) -> list:
    """Elements of the monoid generated by the nu_q, in BFS order.

    Raises :class:`BudgetExceeded` once more than ``budget`` elements exist.
    """
    elements, _depth = _explore(M, budget, None)
    return elements


def monoid_ball(M: MealyMachine, depth: int, budget: int = 10_000) -> set:
    """Products of at most ``depth`` generators (identity included)."""
    elements, _ = _explore(M, budget, depth)
    return set(elements)


def _explore(M: MealyMachine, budget: int, max_depth):
    if budget < 1:
        raise ValueError("budget must be >= 1")
    gens = sorted({induced_map(M, q) for q in M.states})
    ident = identity_function(M.alphabet)
    depth = {ident: 0}
    elements = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        if max_depth is not None and depth[x] >= max_depth:
            continue
        for g in gens:
            y = compose(x, g)
            if y not in depth:
                depth[y] = depth[x] + 1
                elements.append(y)
                if len(elements) > budget:
                    raise BudgetExceeded(f"monoid exceeds {budget} elements", explored=len(elements))
                queue.append(y)
    return elements, depth


def leaf_symbol(M: MealyMachine) -> str:
    e = "e"
    while e in M.states:
        e += "'"
    return e


def to_wta(M: MealyMachine) -> Wta:
    """The single-state wta over the function bimonoid simulating M.

    States of M become unary symbols; the tree q1(q2(...qk(e))) evaluates to
    nu_qk o ... o nu_q1.
    """
    for q in M.states:
        if not isinstance(q, str):
            raise ValueError("state names must be strings")
    B = function_bimonoid(M.alphabet)
    e = leaf_symbol(M)
    alphabet = RankedAlphabet([(q, 1) for q in M.states] + [(e, 0)])
    delta = {((), e, "*"): B.one}
    for q in M.states:
        delta[(("*",), q, "*")] = induced_map(M, q)
    return Wta(alphabet, ["*"], delta, {"*": B.one}, B)


def swap_machine(alphabet=("a", "b")) -> MealyMachine:
    a, b = alphabet
    return MealyMachine(("s",), (a, b), {("s", a): "s", ("s", b): "s"}, {("s", a): b, ("s", b): a})


def adder_machine() -> MealyMachine:
    """Binary odometer, least significant bit first: adds one to the input."""
    tau = {("c", "0"): "n", ("c", "1"): "c", ("n", "0"): "n", ("n", "1"): "n"}
    nu = {("c", "0"): "1", ("c", "1"): "0", ("n", "0"): "0", ("n", "1"): "1"}
    return MealyMachine(("c", "n"), ("0", "1"), tau, nu)
