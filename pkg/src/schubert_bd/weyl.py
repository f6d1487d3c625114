"""
Signed-permutation Weyl groups of types B and D.

Elements are stored in one-line notation: ``images[i-1] == w(i)``, with a
negative entry standing for a barred value.  Products compose as maps,
``(a*b)(i) = a(b(i))``, so right multiplication by a simple reflection acts on
positions and left multiplication acts on values.

Simple reflections, for rank ``n``:

* ``s_i`` (``1 <= i < n``) swaps positions ``i`` and ``i+1`` (root x_i - x_{i+1});
* type B: ``s_n`` negates position ``n`` (root x_n);
* type D: ``s_n`` sends ``n-1 -> -n`` and ``n -> -(n-1)`` (root x_{n-1} + x_n).

>>> w = parse_signed_perm("2,3,4,-1", "B")
>>> length(w), reduced_word(w)
(4, (1, 2, 3, 4))
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from .errors import (
    InvalidPosition,
    NotAPermutation,
    NotCosetRepresentatives,
    NotReduced,
    OddSignCountInTypeD,
    TypeMismatch,
)

__all__ = [
    "LieType", "SignedPermutation", "CosetSign", "CosetDescriptor",
    "make_signed_perm", "parse_signed_perm", "format_signed_perm",
    "identity", "simple_reflection", "multiply", "inverse", "longest_element",
    "length", "left_descents", "right_descents", "reduced_word",
    "reduced_words", "word_to_element", "is_reduced_word", "all_elements",
    "elements_of_length", "group_order", "bruhat_leq", "lower_interval",
    "coset_descriptor", "coset_min_rep", "coset_max_rep", "is_min_rep",
    "is_max_rep", "lemma_comparable",
]


class LieType(str, Enum):
    B = "B"
    D = "D"


@dataclass(frozen=True, order=True)
class SignedPermutation:
    images: tuple[int, ...]
    lie_type: LieType

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of the signed integer ``i``; ``w(-i) == -w(i)``."""
        if i > 0:
            return self.images[i - 1]
        return -self.images[-i - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return multiply(self, other)

    def position(self, value: int) -> int:
        """The 1-based position holding ``value`` (i.e. ``w^{-1}(value)``)."""
        return self.images.index(value) + 1

    def __str__(self) -> str:
        return format_signed_perm(self)


def _lie_type(t) -> LieType:
    try:
        return LieType(str(t.value if isinstance(t, LieType) else t).upper())
    except ValueError:
        raise TypeMismatch(f"unknown Lie type {t!r}") from None


def make_signed_perm(images: Sequence[int], lie_type, rank: int | None = None) -> SignedPermutation:
    """Validate one-line notation and build an element of W(B_n) or W(D_n)."""
    t = _lie_type(lie_type)
    images = tuple(int(x) for x in images)
    n = len(images)
    if rank is not None and rank != n:
        raise NotAPermutation(f"expected {rank} images, got {n}")
    if n < 1 or sorted(abs(x) for x in images) != list(range(1, n + 1)):
        raise NotAPermutation(f"{images} is not a signed permutation")
    if t is LieType.D and sum(x < 0 for x in images) % 2:
        raise OddSignCountInTypeD(f"{images} changes an odd number of signs")
    return SignedPermutation(images, t)


def parse_signed_perm(text: str, lie_type, rank: int | None = None) -> SignedPermutation:
    """Parse comma-separated one-line notation such as ``"-2,-3,-4,1"``."""
    try:
        images = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise NotAPermutation(f"cannot parse {text!r}") from None
    return make_signed_perm(images, lie_type, rank)


def format_signed_perm(w: SignedPermutation) -> str:
    return ",".join(str(x) for x in w.images)


def _check_same(a: SignedPermutation, b: SignedPermutation) -> None:
    if a.lie_type is not b.lie_type or a.rank != b.rank:
        raise TypeMismatch(f"{a.lie_type.value}{a.rank} vs {b.lie_type.value}{b.rank}")


@lru_cache(maxsize=None)
def identity(rank: int, lie_type) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, rank + 1)), _lie_type(lie_type))


@lru_cache(maxsize=None)
def simple_reflection(i: int, rank: int, lie_type) -> SignedPermutation:
    t = _lie_type(lie_type)
    if not 1 <= i <= rank or (t is LieType.D and rank < 2):
        raise InvalidPosition(f"no simple reflection s_{i} in {t.value}{rank}")
    images = list(range(1, rank + 1))
    if i < rank:
        images[i - 1], images[i] = images[i], images[i - 1]
    elif t is LieType.B:
        images[-1] = -rank
    else:
        images[-2], images[-1] = -rank, -(rank - 1)
    return SignedPermutation(tuple(images), t)


def multiply(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    _check_same(a, b)
    return SignedPermutation(tuple(a(x) for x in b.images), a.lie_type)


def inverse(a: SignedPermutation) -> SignedPermutation:
    images = [0] * a.rank
    for i, x in enumerate(a.images, start=1):
        images[abs(x) - 1] = i if x > 0 else -i
    return SignedPermutation(tuple(images), a.lie_type)


@lru_cache(maxsize=None)
def longest_element(rank: int, lie_type) -> SignedPermutation:
    t = _lie_type(lie_type)
    images = [-i for i in range(1, rank + 1)]
    if t is LieType.D and rank % 2:
        images[-1] = rank
    return SignedPermutation(tuple(images), t)


def length(w: SignedPermutation) -> int:
    """Coxeter length, counted as positive roots sent negative.

    With ``key(v) = v`` for ``v > 0`` and ``2n + 1 + v`` otherwise, the root
    ``x_a - x_b`` is positive exactly when ``key(a) < key(b)``.
    """
    n = w.rank
    key = [v if v > 0 else 2 * n + 1 + v for v in w.images]
    neg_key = [2 * n + 1 - v if v > 0 else -v for v in w.images]
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            count += key[i] > key[j]
            count += key[i] > neg_key[j]
    if w.lie_type is LieType.B:
        count += sum(v < 0 for v in w.images)
    return count


def left_descents(w: SignedPermutation) -> list[int]:
    ell = length(w)
    return [i for i in range(1, w.rank + 1)
            if length(multiply(simple_reflection(i, w.rank, w.lie_type), w)) < ell]


def right_descents(w: SignedPermutation) -> list[int]:
    ell = length(w)
    return [i for i in range(1, w.rank + 1)
            if length(multiply(w, simple_reflection(i, w.rank, w.lie_type))) < ell]


def reduced_word(w: SignedPermutation) -> tuple[int, ...]:
    """Canonical reduced word: repeatedly strip the smallest left descent."""
    word = []
    while True:
        descents = left_descents(w)
        if not descents:
            return tuple(word)
        i = descents[0]
        word.append(i)
        w = multiply(simple_reflection(i, w.rank, w.lie_type), w)


def reduced_words(w: SignedPermutation) -> Iterator[tuple[int, ...]]:
    """Every reduced word of ``w``, by backtracking over left descents."""
    descents = left_descents(w)
    if not descents:
        yield ()
        return
    for i in descents:
        rest = multiply(simple_reflection(i, w.rank, w.lie_type), w)
        for tail in reduced_words(rest):
            yield (i, *tail)


def word_to_element(word: Iterable[int], rank: int, lie_type) -> SignedPermutation:
    """The product ``s_{a_1} s_{a_2} ... s_{a_k}``."""
    w = identity(rank, lie_type)
    for i in word:
        w = multiply(w, simple_reflection(i, rank, lie_type))
    return w


def is_reduced_word(word: Sequence[int], rank: int, lie_type) -> bool:
    return length(word_to_element(word, rank, lie_type)) == len(word)


def check_reduced_word(word: Sequence[int], rank: int, lie_type) -> SignedPermutation:
    w = word_to_element(word, rank, lie_type)
    if length(w) != len(word):
        raise NotReduced(f"{list(word)} is not reduced in {_lie_type(lie_type).value}{rank}")
    return w


def group_order(rank: int, lie_type) -> int:
    from math import factorial
    order = 2 ** rank * factorial(rank)
    return order if _lie_type(lie_type) is LieType.B else order // 2


@lru_cache(maxsize=None)
def all_elements(rank: int, lie_type) -> tuple[SignedPermutation, ...]:
    """All group elements, lexicographic in one-line notation."""
    t = _lie_type(lie_type)
    out = []
    for perm in permutations(range(1, rank + 1)):
        for signs in product((1, -1), repeat=rank):
            if t is LieType.D and signs.count(-1) % 2:
                continue
            out.append(SignedPermutation(tuple(s * p for s, p in zip(signs, perm)), t))
    out.sort(key=lambda w: w.images)
    return tuple(out)


def elements_of_length(rank: int, lie_type, ell: int) -> list[SignedPermutation]:
    return [w for w in all_elements(rank, lie_type) if length(w) == ell]


@lru_cache(maxsize=None)
def lower_interval(b: SignedPermutation) -> frozenset[SignedPermutation]:
    """All ``a <= b`` in Bruhat order, via the subword property.

    If ``b = s*b'`` with ``l(b') = l(b) - 1`` then the subwords of a reduced
    word of ``b`` multiply out to ``[e, b'] ∪ s[e, b']``.
    """
    descents = left_descents(b)
    if not descents:
        return frozenset([b])
    s = simple_reflection(descents[0], b.rank, b.lie_type)
    below = lower_interval(multiply(s, b))
    return below | frozenset(multiply(s, a) for a in below)


def bruhat_leq(a: SignedPermutation, b: SignedPermutation) -> bool:
    _check_same(a, b)
    if length(a) > length(b):
        return False
    return a in lower_interval(b)


# -- parabolic cosets W_P \ W, P omitting the root x_1 - x_2 --------------------

class CosetSign(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class CosetDescriptor:
    sign: CosetSign
    position: int


def coset_descriptor(w: SignedPermutation) -> CosetDescriptor:
    """Sign and position of the entry 1 or -1 in one-line notation."""
    if 1 in w.images:
        return CosetDescriptor(CosetSign.POSITIVE, w.position(1))
    return CosetDescriptor(CosetSign.NEGATIVE, w.position(-1))


def _fill(desc: CosetDescriptor, rank: int, rest: list[int], t: LieType) -> SignedPermutation:
    if not 1 <= desc.position <= rank:
        raise InvalidPosition(f"position {desc.position} outside 1..{rank}")
    one = 1 if CosetSign(desc.sign) is CosetSign.POSITIVE else -1
    images = rest[:desc.position - 1] + [one] + rest[desc.position - 1:]
    return make_signed_perm(images, t, rank)


def coset_min_rep(desc: CosetDescriptor, rank: int, lie_type) -> SignedPermutation:
    t = _lie_type(lie_type)
    rest = list(range(2, rank + 1))
    if t is LieType.D and CosetSign(desc.sign) is CosetSign.NEGATIVE:
        rest[-1] = -rank
    return _fill(desc, rank, rest, t)


def coset_max_rep(desc: CosetDescriptor, rank: int, lie_type) -> SignedPermutation:
    t = _lie_type(lie_type)
    rest = [-v for v in range(2, rank + 1)]
    if t is LieType.D:
        positive = CosetSign(desc.sign) is CosetSign.POSITIVE
        # keep an even number of bars overall
        if positive == (rank % 2 == 0):
            rest[-1] = rank
    return _fill(desc, rank, rest, t)


def is_min_rep(w: SignedPermutation) -> bool:
    return w == coset_min_rep(coset_descriptor(w), w.rank, w.lie_type)


def is_max_rep(w: SignedPermutation) -> bool:
    return w == coset_max_rep(coset_descriptor(w), w.rank, w.lie_type)


def lemma_comparable(u: SignedPermutation, v: SignedPermutation) -> bool:
    """Whether ``u >= v`` for a maximal coset representative ``u`` and a
    minimal one ``v``, read off the positions of 1 and -1."""
    _check_same(u, v)
    if not (is_max_rep(u) and is_min_rep(v)):
        raise NotCosetRepresentatives(f"need (max rep, min rep), got ({u}, {v})")
    du, dv = coset_descriptor(u), coset_descriptor(v)
    if dv.sign is CosetSign.POSITIVE:
        if du.sign is CosetSign.NEGATIVE:
            return not (u.lie_type is LieType.D and du.position == dv.position == u.rank)
        return du.position >= dv.position
    return du.sign is CosetSign.NEGATIVE and du.position <= dv.position
