"""
Clans of L-stable Richardson varieties and the conjectural constants.

For a maximal coset representative ``u`` and a minimal one ``v`` with
``u >= v`` and ``v`` positive, :func:`gamma_of_pair` builds the symmetric clan
attached to the Richardson variety ``X_u^v``.  The constant ``c_{w0 u, v}^w``
is then predicted by acting on that clan with ``w`` and checking whether the
dense-orbit clan ``(1,2,-,...,-,2,1)`` is reached.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .action import WordOutcome, act_word
from .clans import PLUS, Clan, clan_length, normalize
from .errors import IncomparablePair, LengthMismatch, NegativeVNotSupported, TypeDCase5Excluded
from .weyl import (
    CosetDescriptor,
    CosetSign,
    LieType,
    SignedPermutation,
    _check_same,
    check_reduced_word,
    coset_descriptor,
    coset_max_rep,
    coset_min_rep,
    elements_of_length,
    is_max_rep,
    is_min_rep,
    lemma_comparable,
    length,
    longest_element,
    multiply,
    reduced_word,
)

__all__ = [
    "CaseId", "PairCase", "ConstantResult", "ExpansionRow", "ExpansionResult",
    "pair_case", "gamma_of_pair", "target_clan", "evaluate_constant",
    "structure_constant", "expand_richardson_class", "valid_pairs",
    "expansion_degree", "LengthMismatchWarning",
]


class LengthMismatchWarning(UserWarning):
    pass


class CaseId(str, Enum):
    C1 = "C1"  # both positive, 1 in the same position
    C2 = "C2"  # both positive, v^{-1}(1) < u^{-1}(1)
    C3 = "C3"  # v positive, u negative, different positions
    C4 = "C4"  # v positive, u negative, same position i < n
    C5 = "C5"  # v positive, u negative, both at position n (type B only)


@dataclass(frozen=True)
class PairCase:
    case: CaseId
    i: int
    j: int


def pair_case(u: SignedPermutation, v: SignedPermutation) -> PairCase:
    _check_same(u, v)
    du, dv = coset_descriptor(u), coset_descriptor(v)
    n = u.rank
    if is_max_rep(u) and is_min_rep(v) and dv.sign is CosetSign.NEGATIVE:
        raise NegativeVNotSupported(f"v = {v} is negative; no clan is attached to this pair")
    if (u.lie_type is LieType.D and du.sign is CosetSign.NEGATIVE
            and du.position == dv.position == n):
        raise TypeDCase5Excluded(f"({u}, {v}) would be case 5, which type D excludes")
    if not lemma_comparable(u, v):
        raise IncomparablePair(f"u = {u} is not above v = {v} in Bruhat order")
    i, j = dv.position, du.position
    if du.sign is CosetSign.POSITIVE:
        return PairCase(CaseId.C1 if i == j else CaseId.C2, i, j)
    if i != j:
        return PairCase(CaseId.C3, i, j)
    return PairCase(CaseId.C4 if i < n else CaseId.C5, i, j)


def gamma_of_pair(u: SignedPermutation, v: SignedPermutation) -> Clan:
    pc = pair_case(u, v)
    N = clan_length(u.rank, u.lie_type)
    m = lambda p: N + 1 - p  # noqa: E731
    i, j = pc.i, pc.j
    chars: list = ["-"] * N

    def put(*pairs):
        for label, (a, b) in enumerate(pairs, start=1):
            chars[a - 1] = chars[b - 1] = label

    if pc.case is CaseId.C1:
        chars[i - 1] = chars[m(i) - 1] = PLUS
    elif pc.case is CaseId.C2:
        put((i, j), (m(j), m(i)))
    elif pc.case is CaseId.C3:
        put((i, m(j)), (j, m(i)))
    elif pc.case is CaseId.C4:
        put((i, m(i)), (i + 1, m(i + 1)))
    else:
        n = u.rank
        put((n, n + 2))
        chars[n] = PLUS
    return normalize(chars)


def target_clan(rank: int, lie_type) -> Clan:
    """The dense-orbit clan ``(1,2,-,...,-,2,1)``."""
    N = clan_length(rank, lie_type)
    return normalize([1, 2] + ["-"] * (N - 4) + [2, 1])


def expansion_degree(u: SignedPermutation, v: SignedPermutation) -> int:
    """``l(w0 u) + l(v)``, the length of every ``w`` with a nonzero constant."""
    return length(multiply(longest_element(u.rank, u.lie_type), u)) + length(v)


@dataclass(frozen=True)
class ConstantResult:
    value: int
    clan: Clan
    outcome: WordOutcome | None
    word: tuple[int, ...]
    length_mismatch: bool = False


def evaluate_constant(u: SignedPermutation, v: SignedPermutation,
                      w: SignedPermutation | None = None,
                      word: Sequence[int] | None = None) -> ConstantResult:
    """Conjectural ``c_{w0 u, v}^w`` with the clan and rule trace behind it.

    ``w`` may be given as an element (its canonical reduced word is used) or as
    an explicit reduced ``word``.  A ``w`` of the wrong length gives 0 and sets
    ``length_mismatch``.
    """
    gamma = gamma_of_pair(u, v)
    if word is not None:
        word = tuple(word)
        w_elem = check_reduced_word(word, u.rank, u.lie_type)
        if w is not None and w_elem != w:
            raise LengthMismatch(f"word {list(word)} does not spell {w}")
        w = w_elem
    elif w is None:
        raise TypeError("need w or word")
    else:
        _check_same(u, w)
        word = reduced_word(w)
    if len(word) != expansion_degree(u, v):
        warnings.warn(f"l(w) = {len(word)} but the product has degree {expansion_degree(u, v)}",
                      LengthMismatchWarning, stacklevel=2)
        return ConstantResult(0, gamma, None, word, length_mismatch=True)
    outcome = act_word(word, gamma, u.lie_type)
    if outcome.result != target_clan(u.rank, u.lie_type):
        value = 0
    elif u.lie_type is LieType.B and outcome.rule7_fired:
        value = 2
    else:
        value = 1
    return ConstantResult(value, outcome.result, outcome, word)


def structure_constant(u: SignedPermutation, v: SignedPermutation, w: SignedPermutation) -> int:
    return evaluate_constant(u, v, w).value


@dataclass(frozen=True)
class ExpansionRow:
    w: SignedPermutation
    word: tuple[int, ...]
    clan: Clan
    coefficient: int
    rule7_count: int

    def as_dict(self) -> dict:
        return {"word": list(self.word), "w": ",".join(map(str, self.w.images)),
                "clan": str(self.clan), "coefficient": self.coefficient}


@dataclass(frozen=True)
class ExpansionResult:
    u: SignedPermutation
    v: SignedPermutation
    degree: int
    rows: tuple[ExpansionRow, ...]

    @property
    def coefficients(self) -> dict[SignedPermutation, int]:
        """Nonzero coefficients only."""
        return {r.w: r.coefficient for r in self.rows if r.coefficient}


def expand_richardson_class(u: SignedPermutation, v: SignedPermutation) -> ExpansionResult:
    """Conjectural Schubert expansion of ``S_{w0 u} S_v``, one row per ``w``."""
    deg = expansion_degree(u, v)
    rows = []
    for w in elements_of_length(u.rank, u.lie_type, deg):
        res = evaluate_constant(u, v, w)
        rows.append(ExpansionRow(w, res.word, res.clan, res.value, res.outcome.rule7_count))
    return ExpansionResult(u, v, deg, tuple(rows))


def valid_pairs(rank: int, lie_type) -> list[tuple[SignedPermutation, SignedPermutation]]:
    """Every comparable (max rep u, positive min rep v) pair the rule covers."""
    out = []
    for pv in range(1, rank + 1):
        v = coset_min_rep(CosetDescriptor(CosetSign.POSITIVE, pv), rank, lie_type)
        for sign in CosetSign:
            for pu in range(1, rank + 1):
                u = coset_max_rep(CosetDescriptor(sign, pu), rank, lie_type)
                if lemma_comparable(u, v):
                    out.append((u, v))
    return out
