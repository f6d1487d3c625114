"""Root data for B_n and D_n in the coordinates x_1 .. x_n."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from ..weyl import LieType, SignedPermutation, _lie_type, group_order

Vector = tuple[int, ...]


def _unit(n: int, i: int, c: int = 1) -> list[int]:
    v = [0] * n
    v[i - 1] = c
    return v


@dataclass(frozen=True)
class RootSystemData:
    lie_type: LieType
    rank: int
    simple_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]

    @property
    def order(self) -> int:
        return group_order(self.rank, self.lie_type)

    @staticmethod
    def coroot(beta: Vector) -> tuple[Fraction, ...]:
        norm = sum(b * b for b in beta)
        return tuple(Fraction(2 * b, norm) for b in beta)

    @staticmethod
    def pairing(weight, coroot) -> Fraction:
        return sum((Fraction(a) * b for a, b in zip(weight, coroot)), Fraction(0))

    def fundamental_weights(self) -> tuple[tuple[Fraction, ...], ...]:
        """Dual basis to the simple coroots: ``<w_i, a_j^vee> = delta_ij``."""
        coroots = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator)
                                 for c in self.coroot(a)] for a in self.simple_roots])
        weights = coroots.T.inv()
        return tuple(tuple(Fraction(int(x.p), int(x.q)) for x in weights.row(i))
                     for i in range(self.rank))

    def reflection(self, beta: Vector) -> SignedPermutation:
        """The reflection in ``beta`` as a signed permutation."""
        support = [i + 1 for i, b in enumerate(beta) if b]
        images = list(range(1, self.rank + 1))
        if len(support) == 1:
            (a,) = support
            images[a - 1] = -a
        else:
            a, b = support
            if beta[a - 1] == -beta[b - 1]:
                images[a - 1], images[b - 1] = b, a
            else:
                images[a - 1], images[b - 1] = -b, -a
        return SignedPermutation(tuple(images), self.lie_type)


@lru_cache(maxsize=None)
def root_system(rank: int, lie_type) -> RootSystemData:
    t = _lie_type(lie_type)
    n = rank
    simple = [tuple(_unit(n, i)[k] - _unit(n, i + 1)[k] for k in range(n)) for i in range(1, n)]
    if t is LieType.B:
        simple.append(tuple(_unit(n, n)))
    else:
        simple.append(tuple(_unit(n, n - 1)[k] + _unit(n, n)[k] for k in range(n)))
    positive = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            positive.append(tuple(_unit(n, i)[k] - _unit(n, j)[k] for k in range(n)))
            positive.append(tuple(_unit(n, i)[k] + _unit(n, j)[k] for k in range(n)))
        if t is LieType.B:
            positive.append(tuple(_unit(n, i)))
    return RootSystemData(t, n, tuple(simple), tuple(positive))
