"""
Monoidal action of simple reflections on symmetric clans.

Positions are 1-based and ``m(p) = N + 1 - p`` is the mirror position.  A word
``[a_1, ..., a_k]`` acts right to left, ``s_{a_1}(s_{a_2}(... s_{a_k} γ))``;
this is the order that reproduces the worked tables.

Rules ``B1``–``B4`` govern ``s_i`` for ``i < n`` in both types.  In type B,
``s_n`` uses ``B5``–``B7``; in type D it uses ``D1``–``D5``.  ``B7`` is the
rule that doubles a structure constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .clans import MINUS, PLUS, Clan, clan_signature, is_symmetric
from .errors import InvalidPosition, NotSymmetric, WrongSignature
from .weyl import LieType, _lie_type

__all__ = [
    "Rule", "ActionOutcome", "TraceStep", "WordOutcome", "act_simple",
    "act_simple_B", "act_simple_D", "act_word", "rank_of_clan",
]

# fresh labels; normalize() relabels them immediately
_X, _Y = 1001, 1002


class Rule(str, Enum):
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    B5 = "B5"
    B6 = "B6"
    B7 = "B7"
    D1 = "D1"
    D2 = "D2"
    D3 = "D3"
    D4 = "D4"
    D5 = "D5"
    FIXED = "fixed"


@dataclass(frozen=True)
class ActionOutcome:
    result: Clan
    rule: Rule

    @property
    def rule7_fired(self) -> bool:
        return self.rule is Rule.B7


@dataclass(frozen=True)
class TraceStep:
    letter: int
    rule: Rule
    clan: Clan

    def as_dict(self) -> dict:
        return {"letter": self.letter, "rule": self.rule.value, "clan": str(self.clan)}


@dataclass(frozen=True)
class WordOutcome:
    result: Clan
    trace: tuple[TraceStep, ...]

    @property
    def rule7_count(self) -> int:
        return sum(step.rule is Rule.B7 for step in self.trace)

    @property
    def rule7_fired(self) -> bool:
        return self.rule7_count > 0


def rank_of_clan(gamma: Clan, lie_type) -> int:
    t = _lie_type(lie_type)
    N = len(gamma)
    if (N % 2 == 1) != (t is LieType.B):
        raise WrongSignature(f"clan of length {N} cannot carry a type {t.value} action")
    return N // 2


def _validate(i: int, gamma: Clan, lie_type) -> int:
    n = rank_of_clan(gamma, lie_type)
    if gamma.signature != clan_signature(n, lie_type):
        raise WrongSignature(f"{gamma} has signature {gamma.signature}, "
                             f"expected {clan_signature(n, lie_type)}")
    if not is_symmetric(gamma):
        raise NotSymmetric(f"{gamma} is not symmetric")
    if not 1 <= i <= n:
        raise InvalidPosition(f"no simple reflection s_{i} in rank {n}")
    return n


def _act_low(i: int, g: Clan) -> ActionOutcome:
    """``s_i`` for ``i < n``; shared by both types."""
    a, b = i, i + 1
    ma, mb = g.mirror(a), g.mirror(b)
    ca, cb = g[a], g[b]
    if g.is_sign(a) and g.is_sign(b):
        if ca != cb:
            return ActionOutcome(g.replace({a: _X, b: _X, mb: _Y, ma: _Y}), Rule.B1)
    elif g.is_sign(a):
        if g.mate(b) > b:
            return ActionOutcome(g.swap((a, b), (mb, ma)), Rule.B2)
    elif g.is_sign(b):
        if g.mate(a) < a:
            return ActionOutcome(g.swap((a, b), (mb, ma)), Rule.B3)
    elif g.mate(a) != b and g.mate(a) == mb and g.mate(b) == ma:
        return ActionOutcome(g.swap((a, b)), Rule.B4)
    return ActionOutcome(g, Rule.FIXED)


def _act_top_B(n: int, g: Clan) -> ActionOutcome:
    a, mid, b = n, n + 1, n + 2
    if g.is_number(a) and g.is_number(b):
        if g.mate(a) != b and g.mate(a) < g.mate(b):
            return ActionOutcome(g.swap((a, b)), Rule.B5)
    elif (g[a], g[mid], g[b]) == (PLUS, MINUS, PLUS):
        return ActionOutcome(g.replace({a: _X, mid: PLUS, b: _X}), Rule.B6)
    elif (g[a], g[mid], g[b]) == (MINUS, PLUS, MINUS):
        return ActionOutcome(g.replace({a: _X, mid: MINUS, b: _X}), Rule.B7)
    return ActionOutcome(g, Rule.FIXED)


def _act_top_D(n: int, g: Clan) -> ActionOutcome:
    p1, p2, p3, p4 = n - 1, n, n + 1, n + 2
    signs = tuple(g.is_sign(p) for p in (p1, p2, p3, p4))
    exchange = ((p1, p3), (p2, p4))
    if signs == (True, False, False, True):
        if g.mate(p2) == p3:
            return ActionOutcome(g.swap(*exchange), Rule.D1)
        if g.mate(p2) < p1 and g.mate(p3) > p4:
            return ActionOutcome(g.swap(*exchange), Rule.D2)
    elif signs == (False, True, True, False):
        if g.mate(p1) < p1 and g.mate(p4) > p4:
            return ActionOutcome(g.swap(*exchange), Rule.D3)
    elif signs == (True, True, True, True):
        if (g[p1], g[p2], g[p3], g[p4]) in ((PLUS, MINUS, MINUS, PLUS), (MINUS, PLUS, PLUS, MINUS)):
            return ActionOutcome(g.replace({p1: _X, p2: _Y, p3: _X, p4: _Y}), Rule.D4)
    elif signs == (False, False, False, False):
        if g.mate(p1) == p2 and g.mate(p3) == p4:
            return ActionOutcome(g.replace({p1: _X, p2: _Y, p3: _Y, p4: _X}), Rule.D5)
    # no listed rule applies: fixed point
    return ActionOutcome(g, Rule.FIXED)


def act_simple_B(i: int, gamma: Clan) -> ActionOutcome:
    n = _validate(i, gamma, LieType.B)
    return _act_top_B(n, gamma) if i == n else _act_low(i, gamma)


def act_simple_D(i: int, gamma: Clan) -> ActionOutcome:
    n = _validate(i, gamma, LieType.D)
    return _act_top_D(n, gamma) if i == n else _act_low(i, gamma)


def act_simple(i: int, gamma: Clan, lie_type) -> ActionOutcome:
    t = _lie_type(lie_type)
    return act_simple_B(i, gamma) if t is LieType.B else act_simple_D(i, gamma)


def _act_unchecked(i: int, n: int, gamma: Clan, t: LieType) -> ActionOutcome:
    if i < n:
        return _act_low(i, gamma)
    return _act_top_B(n, gamma) if t is LieType.B else _act_top_D(n, gamma)


def act_word(word: Sequence[int], gamma: Clan, lie_type) -> WordOutcome:
    """Apply ``word`` right to left, recording the rule used at every letter.

    The trace lists the steps in the order they are applied (last letter first).
    """
    t = _lie_type(lie_type)
    n = _validate(1, gamma, t)
    trace = []
    for i in reversed(word):
        if not 1 <= i <= n:
            raise InvalidPosition(f"no simple reflection s_{i} in rank {n}")
        outcome = _act_unchecked(i, n, gamma, t)
        gamma = outcome.result
        trace.append(TraceStep(i, outcome.rule, gamma))
    return WordOutcome(gamma, tuple(trace))
