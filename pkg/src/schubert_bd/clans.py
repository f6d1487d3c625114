"""
Clans: strings of ``+``, ``-`` and paired natural numbers.

Only the positions of matching numbers matter, so a :class:`Clan` is always
kept in normal form (pairs relabelled 1, 2, ... by first occurrence) and two
clans are equal exactly when their normal forms are.

>>> normalize([5, 7, 5, 7]) == normalize([2, 1, 2, 1])
True
>>> str(parse_clan("-,1,2,-,-,-,2,1,-"))
'(-,1,2,-,-,-,2,1,-)'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Union

from .errors import NotClassifiable, NotSymmetric, UnmatchedNumber
from .weyl import LieType, _lie_type

__all__ = [
    "PLUS", "MINUS", "Clan", "ClanKind", "Classification", "normalize",
    "parse_clan", "format_clan", "is_symmetric", "classify_symmetric",
    "all_clans", "enumerate_symmetric_clans", "is_disconnected",
    "clan_length", "clan_signature",
]

PLUS = "+"
MINUS = "-"

Char = Union[str, int]


@dataclass(frozen=True)
class Clan:
    chars: tuple[Char, ...]
    _mates: tuple[int | None, ...] = field(default=(), compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.chars)

    def __getitem__(self, i: int) -> Char:
        """1-based character access, matching the usual ``c_1 .. c_N``."""
        return self.chars[i - 1]

    def __str__(self) -> str:
        return format_clan(self)

    @property
    def signature(self) -> tuple[int, int]:
        pairs = sum(isinstance(c, int) for c in self.chars) // 2
        return (self.chars.count(PLUS) + pairs, self.chars.count(MINUS) + pairs)

    def is_number(self, i: int) -> bool:
        return isinstance(self.chars[i - 1], int)

    def is_sign(self, i: int) -> bool:
        return not self.is_number(i)

    def mate(self, i: int) -> int | None:
        """1-based position of the other occurrence of ``c_i`` (None for signs)."""
        return self._mates[i - 1]

    def mirror(self, i: int) -> int:
        return len(self.chars) + 1 - i

    def replace(self, updates: dict[int, Char]) -> Clan:
        """Overwrite 1-based positions and renormalize."""
        chars = list(self.chars)
        for i, c in updates.items():
            chars[i - 1] = c
        return normalize(chars)

    def swap(self, *pairs: tuple[int, int]) -> Clan:
        """Interchange the characters at each pair of 1-based positions."""
        chars = list(self.chars)
        for i, j in pairs:
            chars[i - 1], chars[j - 1] = chars[j - 1], chars[i - 1]
        return normalize(chars)


def _token(c) -> Char:
    if isinstance(c, int) and not isinstance(c, bool):
        if c < 1:
            raise UnmatchedNumber(f"pair labels must be positive, got {c}")
        return c
    s = str(c).strip().replace("−", MINUS)
    if s in (PLUS, MINUS):
        return s
    if s.isdigit() and int(s) > 0:
        return int(s)
    raise UnmatchedNumber(f"bad clan character {c!r}")


def normalize(chars: Iterable) -> Clan:
    """Relabel pairs by first occurrence; every label must occur exactly twice."""
    tokens = [_token(c) for c in chars]
    relabel: dict[int, int] = {}
    first: dict[int, int] = {}
    out: list[Char] = []
    mates: list[int | None] = [None] * len(tokens)
    for pos, c in enumerate(tokens):
        if isinstance(c, int):
            if c not in relabel:
                relabel[c] = len(relabel) + 1
                first[c] = pos
            elif mates[first[c]] is not None:
                raise UnmatchedNumber(f"label {c} occurs more than twice")
            else:
                mates[first[c]] = pos + 1
                mates[pos] = first[c] + 1
            out.append(relabel[c])
        else:
            out.append(c)
    unmatched = [c for c, p in first.items() if mates[p] is None]
    if unmatched:
        raise UnmatchedNumber(f"labels {unmatched} occur only once")
    return Clan(tuple(out), tuple(mates))


def parse_clan(text: str) -> Clan:
    """Parse ``"-,1,2,-"`` (parentheses optional)."""
    body = text.strip().strip("()")
    return normalize(tok for tok in body.split(",") if tok.strip())


def format_clan(gamma: Clan) -> str:
    return "(" + ",".join(str(c) for c in gamma.chars) + ")"


def is_symmetric(gamma: Clan) -> bool:
    """Whether reversing the characters gives the same clan."""
    return normalize(reversed(gamma.chars)) == gamma


class ClanKind(str, Enum):
    TWO_PLUS = "a"           # two plus signs, the rest minus
    TWO_PAIRS = "b"          # two pairs of numbers, the rest minus
    ONE_PAIR_MIDDLE_PLUS = "c"  # one pair, one plus sign in the middle


@dataclass(frozen=True)
class Classification:
    kind: ClanKind
    pattern: tuple[int, ...] | None = None  # for TWO_PAIRS: (1,1,2,2), (1,2,1,2) or (1,2,2,1)


def classify_symmetric(gamma: Clan) -> Classification:
    if not is_symmetric(gamma):
        raise NotSymmetric(f"{gamma} is not symmetric")
    if gamma.signature[0] != 2:
        raise NotClassifiable(f"{gamma} does not have p = 2")
    numbers = tuple(c for c in gamma.chars if isinstance(c, int))
    plus = [i for i, c in enumerate(gamma.chars, start=1) if c == PLUS]
    N = len(gamma)
    if not numbers and len(plus) == 2:
        return Classification(ClanKind.TWO_PLUS)
    if len(numbers) == 4 and not plus:
        return Classification(ClanKind.TWO_PAIRS, numbers)
    if len(numbers) == 2 and len(plus) == 1 and N % 2 == 1 and plus[0] == (N + 1) // 2:
        return Classification(ClanKind.ONE_PAIR_MIDDLE_PLUS)
    raise NotClassifiable(f"{gamma} fits none of the three descriptions")


def _char_key(c: Char) -> tuple[int, int]:
    if c == PLUS:
        return (0, 0)
    if c == MINUS:
        return (1, 0)
    return (2, c)


def all_clans(p: int, q: int) -> list[Clan]:
    """Every ``(p, q)``-clan, in a fixed order (brute force)."""
    N = p + q
    out = []
    for pairs in range(min(p, q) + 1):
        n_plus, n_minus = p - pairs, q - pairs
        for numbered in combinations(range(N), 2 * pairs):
            for matching in _perfect_matchings(numbered):
                rest = [i for i in range(N) if i not in numbered]
                for plus_pos in combinations(rest, n_plus):
                    chars: list[Char] = [MINUS] * N
                    for i in plus_pos:
                        chars[i] = PLUS
                    for label, (a, b) in enumerate(matching, start=1):
                        chars[a] = chars[b] = label
                    out.append(normalize(chars))
    assert all(c.signature == (p, q) for c in out)
    return sorted(set(out), key=lambda c: tuple(_char_key(x) for x in c.chars))


def _perfect_matchings(points: tuple[int, ...]):
    if not points:
        yield []
        return
    a = points[0]
    for k in range(1, len(points)):
        rest = points[1:k] + points[k + 1:]
        for m in _perfect_matchings(rest):
            yield [(a, points[k])] + m


def clan_length(rank: int, lie_type) -> int:
    """Clan length ``N``: ``2n+1`` in type B, ``2n`` in type D."""
    return 2 * rank + 1 if _lie_type(lie_type) is LieType.B else 2 * rank


def clan_signature(rank: int, lie_type) -> tuple[int, int]:
    return (2, clan_length(rank, lie_type) - 2)


@lru_cache(maxsize=None)
def enumerate_symmetric_clans(rank: int, lie_type) -> tuple[Clan, ...]:
    """Symmetric ``(2, 2n-1)``-clans (type B) or ``(2, 2n-2)``-clans (type D)."""
    p, q = clan_signature(rank, lie_type)
    return tuple(c for c in all_clans(p, q) if is_symmetric(c))


def is_disconnected(gamma: Clan) -> bool:
    """No number sits in mirror position to its own mate."""
    return all(gamma.mate(i) != gamma.mirror(i)
               for i in range(1, len(gamma) + 1) if gamma.is_number(i))
