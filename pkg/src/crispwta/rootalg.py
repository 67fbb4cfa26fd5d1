"""Finite Sigma-algebras with root weights and their crisp-deterministic wta."""

from __future__ import annotations

from collections import deque
from itertools import product

from .algebra import Bimonoid
from .errors import AlphabetMismatch, NotCrispDeterministic
from .terms import RankedAlphabet, Tree, check_tree, fold
from .wta import Wta, is_crisp_deterministic


class RootWeightAlgebra:
    """(Q, theta, F): ``theta[sym]`` maps state tuples to states."""

    def __init__(self, alphabet: RankedAlphabet, carrier, theta, root, bimonoid: Bimonoid):
        self.alphabet = alphabet
        self.carrier = tuple(carrier)
        self.bimonoid = bimonoid
        if not self.carrier:
            raise ValueError("carrier must be nonempty")
        members = set(self.carrier)
        self.theta = {}
        for sym, k in alphabet.items():
            table = dict(theta.get(sym, {}))
            for args in product(self.carrier, repeat=k):
                if args not in table:
                    raise ValueError(f"theta({sym}) undefined on {args}")
                if table[args] not in members:
                    raise ValueError(f"theta({sym}){args} = {table[args]!r} is not in the carrier")
            self.theta[sym] = {args: table[args] for args in product(self.carrier, repeat=k)}
        self.root = {q: root.get(q, bimonoid.zero) for q in self.carrier}

    def apply(self, sym, args):
        return self.theta[sym][tuple(args)]

    def __eq__(self, other):
        return (isinstance(other, RootWeightAlgebra) and self.alphabet == other.alphabet
                and self.carrier == other.carrier and self.theta == other.theta
                and self.root == other.root and self.bimonoid.name == other.bimonoid.name)

    __hash__ = None

    def __repr__(self):
        return f"RootWeightAlgebra({self.bimonoid.name}, carrier={list(self.carrier)})"


def hom(K: RootWeightAlgebra, t: Tree):
    """h_K(t), the value of ``t`` in the algebra."""
    check_tree(t, K.alphabet)
    return fold(t, lambda s, cs: K.theta[s][tuple(cs)])


def alg_eval(K: RootWeightAlgebra, t: Tree):
    return K.root[hom(K, t)]


def to_wta(K: RootWeightAlgebra) -> Wta:
    one = K.bimonoid.one
    delta = {(args, sym, q): one for sym, table in K.theta.items() for args, q in table.items()}
    return Wta(K.alphabet, K.carrier, delta, K.root, K.bimonoid)


def to_algebra(A: Wta) -> RootWeightAlgebra:
    if not is_crisp_deterministic(A):
        raise NotCrispDeterministic("the wta is not crisp-deterministic")
    theta = {sym: {} for sym in A.alphabet}
    for (kids, sym, q) in A.delta:
        theta[sym][kids] = q
    return RootWeightAlgebra(A.alphabet, A.states, theta, dict(A.final), A.bimonoid)


def accessible_part(K: RootWeightAlgebra) -> RootWeightAlgebra:
    """Restrict to the values of trees, i.e. the subalgebra generated by constants."""
    reached = set()
    changed = True
    while changed:
        changed = False
        for sym, table in K.theta.items():
            for args, q in table.items():
                if q not in reached and all(a in reached for a in args):
                    reached.add(q)
                    changed = True
    carrier = [q for q in K.carrier if q in reached]
    theta = {sym: {args: q for args, q in table.items() if all(a in reached for a in args)}
             for sym, table in K.theta.items()}
    return RootWeightAlgebra(K.alphabet, carrier, theta, K.root, K.bimonoid)


def product_name(parts) -> str:
    return "(" + "|".join(map(str, parts)) + ")"


def direct_product(Ks: list[RootWeightAlgebra]) -> RootWeightAlgebra:
    if not Ks:
        raise ValueError("need at least one algebra")
    first = Ks[0]
    for K in Ks[1:]:
        if K.alphabet != first.alphabet:
            raise AlphabetMismatch("algebras over different alphabets")
        if K.bimonoid.name != first.bimonoid.name:
            raise AlphabetMismatch("algebras over different bimonoids")
    B = first.bimonoid
    tuples = list(product(*(K.carrier for K in Ks)))
    name = {tup: product_name(tup) for tup in tuples}
    theta = {}
    for sym, k in first.alphabet.items():
        table = {}
        for args in product(tuples, repeat=k):
            out = tuple(K.theta[sym][tuple(a[i] for a in args)] for i, K in enumerate(Ks))
            table[tuple(name[a] for a in args)] = name[out]
        theta[sym] = table
    root = {name[tup]: B.prod(K.root[q] for K, q in zip(Ks, tup)) for tup in tuples}
    return RootWeightAlgebra(first.alphabet, [name[t] for t in tuples], theta, root, B)


def canonical_form(K: RootWeightAlgebra):
    """Relabel the accessible part as 0, 1, ... in discovery order.

    Two accessible algebras are isomorphic exactly when their canonical
    forms are equal.  Discovery runs over symbols in sorted order and
    argument tuples in index order, with new states numbered FIFO.
    """
    order: dict = {}
    queue = deque()
    syms = sorted(K.alphabet.items())

    def see(q):
        if q not in order:
            order[q] = len(order)
            queue.append(q)

    for sym, k in syms:
        if k == 0:
            see(K.theta[sym][()])
    # saturate: any tuple of known states may yield a new one
    done = 0
    while done < len(order):
        done = len(order)
        known = sorted(order, key=order.get)
        for sym, k in syms:
            for args in product(known, repeat=k):
                see(K.theta[sym][args])
    known = sorted(order, key=order.get)
    table = tuple(
        (sym, tuple((tuple(order[a] for a in args), order[K.theta[sym][args]])
                    for args in product(known, repeat=k)))
        for sym, k in syms)
    root = tuple(K.root[q] for q in known)
    return len(known), table, root


def isomorphic(K1: RootWeightAlgebra, K2: RootWeightAlgebra) -> bool:
    return K1.alphabet == K2.alphabet and canonical_form(K1) == canonical_form(K2)
