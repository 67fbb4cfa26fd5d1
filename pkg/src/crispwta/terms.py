"""Ranked alphabets, trees, positions and contexts.

Trees are immutable and hashable.  A context is just a tree that contains
the rank-0 symbol :data:`HOLE` exactly once.
"""

from __future__ import annotations

import re
from itertools import product
from typing import Iterator, Mapping

from .errors import ParseError

HOLE = "□"


class RankedAlphabet:
    """Finite map symbol -> rank, kept in declaration order."""

    __slots__ = ("_ranks",)

    def __init__(self, ranks: Mapping[str, int] | list[tuple[str, int]]):
        items = list(ranks.items()) if isinstance(ranks, Mapping) else list(ranks)
        if not items:
            raise ValueError("a ranked alphabet must be nonempty")
        table = {}
        for name, rank in items:
            if name in table:
                raise ValueError(f"duplicate symbol {name!r}")
            if not isinstance(rank, int) or rank < 0:
                raise ValueError(f"bad rank {rank!r} for {name!r}")
            table[name] = rank
        if 0 not in table.values():
            raise ValueError("a ranked alphabet needs at least one rank-0 symbol")
        self._ranks = table

    def rank(self, symbol: str) -> int:
        return self._ranks[symbol]

    def __contains__(self, symbol):
        return symbol in self._ranks

    def __iter__(self):
        return iter(self._ranks)

    def __len__(self):
        return len(self._ranks)

    def items(self):
        return self._ranks.items()

    def of_rank(self, k: int) -> list[str]:
        return [s for s, r in self._ranks.items() if r == k]

    @property
    def max_rank(self) -> int:
        return max(self._ranks.values())

    def __eq__(self, other):
        return isinstance(other, RankedAlphabet) and self._ranks == other._ranks

    def __hash__(self):
        return hash(frozenset(self._ranks.items()))

    def __repr__(self):
        return "RankedAlphabet(" + " ".join(f"{s}:{r}" for s, r in self._ranks.items()) + ")"


class Tree:
    __slots__ = ("symbol", "children", "_hash", "_size")

    def __init__(self, symbol: str, children=()):
        self.symbol = symbol
        self.children = tuple(children)
        self._hash = hash((symbol, self.children))
        self._size = 1 + sum(c._size for c in self.children)

    @property
    def size(self) -> int:
        """Number of positions, |pos(t)|."""
        return self._size

    @property
    def height(self) -> int:
        return 1 + max((c.height for c in self.children), default=0)

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, Tree) and self._hash == other._hash
                and self.symbol == other.symbol and self.children == other.children)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self._size, str(self)) < (other._size, str(other))

    def __str__(self):
        if not self.children:
            return self.symbol
        return self.symbol + "(" + ",".join(map(str, self.children)) + ")"

    def __repr__(self):
        return f"Tree({str(self)!r})"

    def subtree(self, pos: tuple[int, ...]) -> "Tree":
        t = self
        for i in pos:
            t = t.children[i - 1]
        return t

    def is_context(self) -> bool:
        return hole_count(self) == 1


def leaf(symbol: str) -> Tree:
    return Tree(symbol)


def fold(t: Tree, fn):
    """Bottom-up evaluation: ``fn(symbol, child_values)`` at every node.

    Iterative, so deep unary chains do not hit the recursion limit.
    Shared subtrees are evaluated once.
    """
    cache = {}
    stack = [t]
    while stack:
        node = stack[-1]
        if node in cache:
            stack.pop()
            continue
        pending = [c for c in node.children if c not in cache]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        cache[node] = fn(node.symbol, [cache[c] for c in node.children])
    return cache[t]


def positions(t: Tree) -> list[tuple[int, ...]]:
    """pos(t) in preorder; the root is the empty tuple."""
    out = []
    stack = [((), t)]
    while stack:
        pos, node = stack.pop()
        out.append(pos)
        for i in range(len(node.children), 0, -1):
            stack.append((pos + (i,), node.children[i - 1]))
    return out


def format_position(pos: tuple[int, ...]) -> str:
    return "".join(map(str, pos)) if pos else "e"


def hole_count(t: Tree) -> int:
    return fold(t, lambda s, cs: sum(cs) + (s == HOLE))


HOLE_TREE = Tree(HOLE)


def substitute(c: Tree, t: Tree) -> Tree:
    """c[t]: replace the single hole of ``c`` by ``t``."""
    if hole_count(c) != 1:
        raise ValueError(f"{c} is not a context")
    return fold(c, lambda s, cs: t if s == HOLE else Tree(s, cs))


def check_tree(t: Tree, alphabet: RankedAlphabet, allow_hole: bool = False) -> None:
    """Raise ValueError unless ``t`` is well formed over ``alphabet``."""
    def visit(s, cs):
        if s == HOLE and allow_hole:
            if cs:
                raise ValueError("the hole has rank 0")
            return None
        if s not in alphabet:
            raise ValueError(f"unknown symbol {s!r}")
        if alphabet.rank(s) != len(cs):
            raise ValueError(f"{s} has rank {alphabet.rank(s)} but {len(cs)} children")
        return None
    fold(t, visit)


def enumerate_trees(alphabet: RankedAlphabet, max_size: int) -> Iterator[Tree]:
    """All trees with at most ``max_size`` nodes, by size then by text."""
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    by_size: list[list[Tree]] = [[]]
    symbols = sorted(alphabet.items())
    for n in range(1, max_size + 1):
        level = []
        for s, k in symbols:
            if k == 0:
                if n == 1:
                    level.append(Tree(s))
                continue
            for sizes in _compositions(n - 1, k):
                for kids in product(*(by_size[m] for m in sizes)):
                    level.append(Tree(s, kids))
        level.sort(key=str)
        by_size.append(level)
        yield from level


def _compositions(total: int, parts: int):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def count_trees(alphabet: RankedAlphabet, max_size: int) -> int:
    return sum(1 for _ in enumerate_trees(alphabet, max_size))


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_'\-]*|□)|(\^)|(\d+)|([(),])|(\S))")


def parse_tree(text: str, alphabet: RankedAlphabet | None = None) -> Tree:
    """Parse ``name(child,...)`` notation.

    ``g^n(t)`` abbreviates n nested applications of the unary ``g``.
    With an alphabet given, ranks are checked.
    """
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(5):
            raise ParseError(f"unexpected character {m.group(5)!r}", 1, m.start(5) + 1)
        tokens.append((m.group(0).strip(), m.end()))
        pos = m.end()
    i = 0

    def peek():
        return tokens[i][0] if i < len(tokens) else None

    def take(expected=None):
        nonlocal i
        if i >= len(tokens):
            raise ParseError("unexpected end of tree", 1, len(text) + 1)
        tok, end = tokens[i]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r}", 1, end - len(tok) + 1)
        i += 1
        return tok

    def node():
        name = take()
        if not (name == HOLE or re.fullmatch(r"[A-Za-z_][A-Za-z0-9_'\-]*", name)):
            raise ParseError(f"expected a symbol, got {name!r}", 1, tokens[i - 1][1] - len(name) + 1)
        if peek() == "^":
            take("^")
            count = take()
            if not count.isdigit():
                raise ParseError("expected a repetition count after '^'", 1, tokens[i - 1][1])
            take("(")
            inner = node()
            take(")")
            for _ in range(int(count)):
                inner = Tree(name, (inner,))
            return inner
        kids = []
        if peek() == "(":
            take("(")
            if peek() != ")":
                kids.append(node())
                while peek() == ",":
                    take(",")
                    kids.append(node())
            take(")")
        return Tree(name, kids)

    t = node()
    if i != len(tokens):
        raise ParseError(f"trailing input {tokens[i][0]!r}", 1, tokens[i][1])
    if alphabet is not None:
        try:
            check_tree(t, alphabet, allow_hole=True)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    return t


def word_tree(word, leaf_symbol: str = "e") -> Tree:
    """Monadic tree for a word: ``abc`` becomes ``a(b(c(e)))``."""
    t = Tree(leaf_symbol)
    for letter in reversed(list(word)):
        t = Tree(letter, (t,))
    return t


def split_word(text: str) -> list[str]:
    """Letters of a CLI word: comma separated if it has commas, else characters."""
    if "," in text:
        return [x.strip() for x in text.split(",") if x.strip()]
    return list(text.strip())
