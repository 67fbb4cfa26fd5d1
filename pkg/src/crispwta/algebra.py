"""Strong bimonoids: the weight structures of weighted tree automata.

A strong bimonoid ``(B, plus, times, zero, one)`` has a commutative additive
monoid, a (not necessarily commutative) multiplicative monoid, and a zero
that annihilates under ``times``.  Distributivity is *not* required; when
both distributive laws hold the instance is a semiring.

Elements are plain hashable Python values.  The two tropical structures use
``int`` plus the float ``INF`` for the extended naturals, the cut bimonoid
uses :class:`fractions.Fraction` so equality is always exact.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Any, Callable, Iterable

from .errors import BudgetExceeded, ParseError

INF = math.inf

_NAT_RE = re.compile(r"[0-9]+")


@dataclass(frozen=True, eq=False)
class Bimonoid:
    name: str
    zero: Any
    one: Any
    plus: Callable[[Any, Any], Any] = field(repr=False)
    times: Callable[[Any, Any], Any] = field(repr=False)
    parse: Callable[[str], Any] = field(repr=False)
    format: Callable[[Any], str] = field(repr=False)
    is_semiring: bool = False
    is_add_idempotent: bool = False
    is_right_distributive: bool = False

    def sum(self, items: Iterable) -> Any:
        return reduce(self.plus, items, self.zero)

    def prod(self, items: Iterable) -> Any:
        return reduce(self.times, items, self.one)

    def __repr__(self):
        return f"Bimonoid({self.name!r})"


def _parse_extnat(text: str):
    text = text.strip()
    if text == "inf":
        return INF
    if not _NAT_RE.fullmatch(text):
        raise ParseError(f"expected a natural number or 'inf', got {text!r}")
    return int(text)


def _format_extnat(value) -> str:
    return "inf" if value == INF else str(value)


def _parse_bool(text: str) -> int:
    text = text.strip()
    if text not in ("0", "1"):
        raise ParseError(f"expected 0 or 1, got {text!r}")
    return int(text)


def _parse_nat(text: str) -> int:
    text = text.strip()
    if not _NAT_RE.fullmatch(text):
        raise ParseError(f"expected a natural number, got {text!r}")
    return int(text)


CUT_LAMBDA = Fraction(1, 4)


def _cut_plus(a: Fraction, b: Fraction) -> Fraction:
    return min(a + b, Fraction(1))


def _cut_times(a: Fraction, b: Fraction) -> Fraction:
    c = a * b
    return c if c >= CUT_LAMBDA else Fraction(0)


def _parse_cut(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[0-9]+(/[0-9]+)?", text):
        raise ParseError(f"expected a rational p/q, got {text!r}")
    try:
        value = Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None
    if value != 0 and not (CUT_LAMBDA <= value <= 1):
        raise ParseError(f"{text!r} is outside the carrier {{0}} u [1/4, 1]")
    return value


def _add(a, b):
    return a + b


def _mul(a, b):
    return a * b


BOOLEAN = Bimonoid(
    "bool", 0, 1,
    plus=lambda a, b: a | b, times=lambda a, b: a & b,
    parse=_parse_bool, format=str,
    is_semiring=True, is_add_idempotent=True, is_right_distributive=True,
)

# (N_inf, min, +, inf, 0)
TROPICAL = Bimonoid(
    "tropical", INF, 0,
    plus=min, times=_add,
    parse=_parse_extnat, format=_format_extnat,
    is_semiring=True, is_add_idempotent=True, is_right_distributive=True,
)

# (N_inf, +, min, 0, inf): commutative but not distributive
TROPICAL_BIMONOID = Bimonoid(
    "tbm", 0, INF,
    plus=_add, times=min,
    parse=_parse_extnat, format=_format_extnat,
)

NATURAL = Bimonoid(
    "nat", 0, 1,
    plus=_add, times=_mul,
    parse=_parse_nat, format=str,
    is_semiring=True, is_right_distributive=True,
)

# bi-locally finite but not locally finite; not right distributive
CUT = Bimonoid(
    "cut14", Fraction(0), Fraction(1),
    plus=_cut_plus, times=_cut_times,
    parse=_parse_cut, format=str,
)

_REGISTRY = {b.name: b for b in (BOOLEAN, TROPICAL, TROPICAL_BIMONOID, NATURAL, CUT)}


def get_bimonoid(name: str) -> Bimonoid:
    """Look up a bimonoid by name.

    ``fun:a,b,...`` builds the function bimonoid over the given letters.
    """
    if name in _REGISTRY:
        return _REGISTRY[name]
    if name.startswith("fun:"):
        from .mealy import function_bimonoid
        letters = tuple(x for x in name[4:].split(",") if x)
        if not letters:
            raise ValueError("function bimonoid needs a nonempty alphabet")
        return function_bimonoid(letters)
    raise ValueError(f"unknown bimonoid {name!r}; known: {', '.join(sorted(_REGISTRY))}")


def bimonoid_names() -> list[str]:
    return sorted(_REGISTRY)


def nfold_sum(B: Bimonoid, b, n: int):
    """``b + b + ... + b`` (n times) by binary doubling; ``0b`` is zero."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = B.zero
    power = b
    while n:
        if n & 1:
            result = B.plus(result, power)
        n >>= 1
        if n:
            power = B.plus(power, power)
    return result


@dataclass(frozen=True)
class FiniteOrderInfo:
    index: int
    period: int
    orbit: tuple

    @property
    def order(self) -> int:
        return self.index + self.period - 1


def finite_order(B: Bimonoid, b, budget: int = 10_000) -> FiniteOrderInfo:
    """Index and period of ``b`` in the additive monoid.

    Walks ``0b, 1b, 2b, ...`` and stops at the first repeated element.
    Raises :class:`BudgetExceeded` if no repeat shows up within ``budget``
    steps.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    seen = {B.zero: 0}
    orbit = [B.zero]
    current = B.zero
    for n in range(1, budget + 1):
        current = B.plus(current, b)
        if current in seen:
            m = seen[current]
            if m == 0:
                # n*b = 0b; indices start at 1, so report (1, n)
                return FiniteOrderInfo(1, n, tuple(orbit) + (current,))
            return FiniteOrderInfo(m, n - m, tuple(orbit))
        seen[current] = n
        orbit.append(current)
    raise BudgetExceeded(f"no repeat within {budget} additions", explored=len(orbit))


def mult_closure(B: Bimonoid, seed: Iterable, budget: int = 10_000) -> frozenset:
    """The submonoid of ``(B, times, one)`` generated by ``seed``."""
    gens = sorted(set(seed))
    if budget < max(1, len(gens)):
        raise ValueError("budget must be at least the seed size")
    found = {B.one}
    queue = deque([B.one])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = B.times(x, g)
            if y not in found:
                found.add(y)
                if len(found) > budget:
                    raise BudgetExceeded(f"closure exceeds {budget} elements", explored=len(found))
                queue.append(y)
    return frozenset(found)

