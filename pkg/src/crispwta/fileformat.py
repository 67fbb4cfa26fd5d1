"""Line-based text formats for automata, algebras, step mappings and Mealy machines.

Every format ignores blank lines and ``#`` comments.  Writers are
deterministic and their output parses back to an equal object.
"""

from __future__ import annotations

import os
from itertools import product

from .algebra import get_bimonoid
from .errors import ParseError
from .mealy import MealyMachine
from .rootalg import RootWeightAlgebra
from .stepmap import StepMapping, check_acceptor, is_normal_form
from .terms import RankedAlphabet
from .wta import Wta


def _lines(text: str):
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield n, line


def _col(line: str, token: str, start: int = 0) -> int:
    i = line.find(token, start)
    return i + 1 if i >= 0 else 1


def _split_args(inner: str) -> list[str]:
    """Split on top-level commas; state names may contain balanced parentheses."""
    if not inner.strip():
        return []
    parts, depth, cur = [], 0, []
    for ch in inner:
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
            continue
        depth += (ch == "(") - (ch == ")")
        cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


def _parse_application(text: str, n: int, line: str):
    """``sym(q1,...,qk)`` -> (sym, [q1, ..., qk])."""
    text = text.strip()
    if "(" not in text:
        return text, []
    i = text.index("(")
    if not text.endswith(")"):
        raise ParseError("missing ')'", n, _col(line, text) + len(text))
    return text[:i].strip(), _split_args(text[i + 1:-1])


def parse_wta(text: str):
    """Parse a wta file, or an algebra file when it starts with ``mode algebra``."""
    bimonoid = alphabet = states = None
    mode = "wta"
    finals: dict = {}
    rows = []
    for n, line in _lines(text):
        head, _, rest = line.strip().partition(" ")
        rest = rest.strip()
        if head == "mode":
            if rest not in ("wta", "algebra"):
                raise ParseError(f"unknown mode {rest!r}", n, _col(line, rest))
            mode = rest
        elif head == "bimonoid":
            try:
                bimonoid = get_bimonoid(rest)
            except ValueError as exc:
                raise ParseError(str(exc), n, _col(line, rest)) from None
        elif head == "alphabet":
            ranks = []
            for tok in rest.split():
                name, sep, r = tok.partition(":")
                if not sep or not r.isdigit() or not name:
                    raise ParseError(f"malformed rank in {tok!r}; expected name:rank", n, _col(line, tok))
                ranks.append((name, int(r)))
            try:
                alphabet = RankedAlphabet(ranks)
            except ValueError as exc:
                raise ParseError(str(exc), n, _col(line, rest)) from None
        elif head == "states":
            states = rest.split()
            if not states:
                raise ParseError("no states listed", n, len(line) + 1)
        elif head == "final":
            if bimonoid is None:
                raise ParseError("'final' before 'bimonoid'", n, 1)
            parts = rest.split()
            if len(parts) != 2:
                raise ParseError("expected 'final <state> <weight>'", n, 1)
            finals[parts[0]] = _weight(bimonoid, parts[1], n, line, line.find(parts[0]) + len(parts[0]))
        elif head in ("trans", "map"):
            rows.append((head, n, line, rest))
        else:
            raise ParseError(f"unknown directive {head!r}", n, _col(line, head))
    for what, val in (("bimonoid", bimonoid), ("alphabet", alphabet), ("states", states)):
        if val is None:
            raise ParseError(f"missing '{what}' line")
    known = set(states)
    for q in finals:
        if q not in known:
            raise ParseError(f"unknown state {q!r} in final")
    delta: dict = {}
    theta = {sym: {} for sym in alphabet}
    for head, n, line, rest in rows:
        lhs, arrow, rhs = rest.partition("->")
        if not arrow:
            raise ParseError("missing '->'", n, len(line) + 1)
        sym, args = _parse_application(lhs, n, line)
        if sym not in alphabet:
            raise ParseError(f"unknown symbol {sym!r}", n, _col(line, sym))
        if alphabet.rank(sym) != len(args):
            raise ParseError(f"{sym} has rank {alphabet.rank(sym)} but {len(args)} arguments", n, _col(line, sym))
        arrow_at = line.index("->")
        for q in args:
            if q not in known:
                raise ParseError(f"unknown state {q!r}", n, _col(line, q, line.find("(")))
        if head == "trans":
            if mode != "wta":
                raise ParseError("'trans' in an algebra file", n, 1)
            target, colon, w = rhs.rpartition(":")
            if not colon:
                raise ParseError("missing ': <weight>'", n, len(line) + 1)
            target = target.strip()
            if target not in known:
                raise ParseError(f"unknown state {target!r}", n, _col(line, target, arrow_at))
            key = (tuple(args), sym, target)
            if key in delta:
                raise ParseError("duplicate transition", n, 1)
            delta[key] = _weight(bimonoid, w.strip(), n, line, line.rindex(":"))
        else:
            if mode != "algebra":
                raise ParseError("'map' outside 'mode algebra'", n, 1)
            target = rhs.strip()
            if target not in known:
                raise ParseError(f"unknown state {target!r}", n, _col(line, target, arrow_at))
            if tuple(args) in theta[sym]:
                raise ParseError("duplicate map row", n, 1)
            theta[sym][tuple(args)] = target
    try:
        if mode == "algebra":
            return RootWeightAlgebra(alphabet, states, theta, finals, bimonoid)
        return Wta(alphabet, states, delta, finals, bimonoid)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _weight(B, text, n, line, start=0):
    try:
        return B.parse(text)
    except ParseError as exc:
        raise ParseError(str(exc), n, _col(line, text, start)) from None


def _alphabet_line(alphabet: RankedAlphabet) -> str:
    return "alphabet " + " ".join(f"{s}:{r}" for s, r in alphabet.items())


def _app(sym, args) -> str:
    return f"{sym}({','.join(args)})"


def write_wta(A: Wta) -> str:
    B = A.bimonoid
    out = [f"bimonoid {B.name}", _alphabet_line(A.alphabet), "states " + " ".join(A.states)]
    for q in A.states:
        w = A.final_weight(q)
        if w != B.zero:
            out.append(f"final {q} {B.format(w)}")
    order = {s: i for i, s in enumerate(A.alphabet)}
    rows = sorted(A.delta.items(), key=lambda kv: (order[kv[0][1]], tuple(A.index[p] for p in kv[0][0]),
                                                    A.index[kv[0][2]]))
    for (kids, sym, q), w in rows:
        out.append(f"trans {_app(sym, kids)} -> {q} : {B.format(w)}")
    return "\n".join(out) + "\n"


def write_algebra(K: RootWeightAlgebra) -> str:
    B = K.bimonoid
    out = ["mode algebra", f"bimonoid {B.name}", _alphabet_line(K.alphabet), "states " + " ".join(K.carrier)]
    for q in K.carrier:
        if K.root[q] != B.zero:
            out.append(f"final {q} {B.format(K.root[q])}")
    for sym, k in K.alphabet.items():
        for args in product(K.carrier, repeat=k):
            out.append(f"map {_app(sym, args)} -> {K.theta[sym][args]}")
    return "\n".join(out) + "\n"


def load_wta(path):
    with open(path, encoding="utf-8") as fh:
        return parse_wta(fh.read())


def parse_stepmap(text: str, base_dir: str = ".") -> StepMapping:
    bimonoid = None
    steps = []
    for n, line in _lines(text):
        head, _, rest = line.strip().partition(" ")
        if head == "stepmap":
            try:
                bimonoid = get_bimonoid(rest.strip())
            except ValueError as exc:
                raise ParseError(str(exc), n, _col(line, rest)) from None
        elif head == "step":
            if bimonoid is None:
                raise ParseError("'step' before 'stepmap' header", n, 1)
            parts = rest.split(None, 1)
            if len(parts) != 2:
                raise ParseError("expected 'step <weight> <acceptor-file>'", n, 1)
            b = _weight(bimonoid, parts[0], n, line)
            L = load_wta(os.path.join(base_dir, parts[1].strip()))
            check_acceptor(L)
            steps.append((b, L))
        else:
            raise ParseError(f"unknown directive {head!r}", n, _col(line, head))
    if bimonoid is None:
        raise ParseError("missing 'stepmap' header")
    if not steps:
        raise ParseError("a step mapping needs at least one step")
    s = StepMapping(steps[0][1].alphabet, bimonoid, steps)
    s.normal_form = is_normal_form(s)
    return s


def load_stepmap(path) -> StepMapping:
    with open(path, encoding="utf-8") as fh:
        return parse_stepmap(fh.read(), os.path.dirname(os.path.abspath(path)))


def parse_mealy(text: str) -> MealyMachine:
    alphabet = states = None
    seen_header = False
    tau, nu = {}, {}
    for n, line in _lines(text):
        head, _, rest = line.strip().partition(" ")
        rest = rest.strip()
        if head == "mealy":
            seen_header = True
        elif head == "alphabet":
            alphabet = rest.split()
        elif head == "states":
            states = rest.split()
        elif head == "trans":
            lhs, arrow, rhs = rest.partition("->")
            target, slash, outp = rhs.partition("/")
            src = lhs.split()
            if not arrow or not slash or len(src) != 2:
                raise ParseError("expected 'trans <state> <letter> -> <state> / <letter>'", n, 1)
            key = (src[0], src[1])
            if key in tau:
                raise ParseError("duplicate transition", n, 1)
            tau[key] = target.strip()
            nu[key] = outp.strip()
        else:
            raise ParseError(f"unknown directive {head!r}", n, _col(line, head))
    if not seen_header:
        raise ParseError("missing 'mealy' header")
    if alphabet is None or states is None:
        raise ParseError("missing 'alphabet' or 'states' line")
    try:
        return MealyMachine(tuple(states), tuple(alphabet), tau, nu)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_mealy(M: MealyMachine) -> str:
    out = ["mealy", "alphabet " + " ".join(M.alphabet), "states " + " ".join(M.states)]
    for q in M.states:
        for a in M.alphabet:
            out.append(f"trans {q} {a} -> {M.tau[(q, a)]} / {M.nu[(q, a)]}")
    return "\n".join(out) + "\n"


def load_mealy(path) -> MealyMachine:
    with open(path, encoding="utf-8") as fh:
        return parse_mealy(fh.read())
