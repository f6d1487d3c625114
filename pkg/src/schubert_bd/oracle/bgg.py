"""
Schubert structure constants from divided differences.

``P_w = d_{w^{-1} w0} P_{w0}`` with ``P_{w0} = prod(positive roots) / |W|``
represents the Schubert class ``S_w`` of codimension ``l(w)``.  Since every
``d_i`` is linear over invariants, ``d_w(P_u P_v)`` is exactly the
coefficient of ``S_w`` in ``S_u S_v`` when ``l(w) = l(u) + l(v)``.

Internally the representatives are kept scaled by ``|W|`` so that all
coefficients stay integral.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..errors import DivisionError, LengthMismatch, NonIntegerResult
from ..weyl import (
    LieType,
    SignedPermutation,
    _check_same,
    _lie_type,
    identity,
    length,
    longest_element,
    multiply,
    reduced_word,
    simple_reflection,
)
from .polynomial import RationalPolynomial, product
from .roots import root_system

__all__ = [
    "weyl_substitute", "divided_difference", "divided_difference_word",
    "top_representative", "schubert_representative", "oracle_constant",
    "oracle_expansion", "SchubertOracle", "get_oracle",
]


def weyl_substitute(w: SignedPermutation, f: RationalPolynomial) -> RationalPolynomial:
    """Apply ``x_i -> sign * x_{|w(i)|}``; composes as ``(ab).f = a.(b.f)``."""
    if f.nvars != w.rank:
        raise ValueError("rank mismatch")
    return f.substitute_signed(w.images)


def _dd_pair(f: RationalPolynomial, a: int, b: int, eps: int) -> RationalPolynomial:
    """Divided difference for the root ``x_a - eps*x_b`` (reflection
    ``x_a -> eps*x_b``, ``x_b -> eps*x_a``).

    Writing ``y = eps*x_b``, each monomial ``x_a^p x_b^q`` contributes
    ``eps^q (x_a^p y^q - x_a^q y^p) / (x_a - y)``, a geometric sum.
    """
    ia, ib = a - 1, b - 1
    terms: dict = {}
    for mono, c in f.terms.items():
        p, q = mono[ia], mono[ib]
        if p == q:
            continue
        lo, d = min(p, q), abs(p - q)
        base = c if p > q else -c
        if eps < 0 and q % 2:
            base = -base
        rest = list(mono)
        for k in range(d):
            rest[ia] = lo + d - 1 - k
            rest[ib] = lo + k
            coeff = -base if eps < 0 and (lo + k) % 2 else base
            key = tuple(rest)
            terms[key] = terms.get(key, 0) + coeff
    return RationalPolynomial._raw(f.nvars, {m: c for m, c in terms.items() if c})


def _dd_sign(f: RationalPolynomial, a: int) -> RationalPolynomial:
    """Divided difference for the short root ``x_a`` (reflection ``x_a -> -x_a``)."""
    ia = a - 1
    terms = {}
    for mono, c in f.terms.items():
        if mono[ia] % 2:
            rest = list(mono)
            rest[ia] -= 1
            terms[tuple(rest)] = 2 * c
    return RationalPolynomial._raw(f.nvars, terms)


def divided_difference(i: int, f: RationalPolynomial, lie_type, verify: bool = False) -> RationalPolynomial:
    """``(f - s_i f) / alpha_i``.

    With ``verify=True`` the quotient is multiplied back and compared, and a
    mismatch raises :class:`DivisionError`.
    """
    t = _lie_type(lie_type)
    n = f.nvars
    if not 1 <= i <= n:
        raise ValueError(f"no simple root {i} in rank {n}")
    if i < n:
        out = _dd_pair(f, i, i + 1, 1)
    elif t is LieType.B:
        out = _dd_sign(f, n)
    else:
        out = _dd_pair(f, n - 1, n, -1)
    if verify:
        alpha = RationalPolynomial.linear_form(root_system(n, t).simple_roots[i - 1])
        s_f = weyl_substitute(simple_reflection(i, n, t), f)
        if out * alpha != f - s_f:
            raise DivisionError(f"divided difference {i} is not exact on {f!r}")
    return out


def divided_difference_word(word: Sequence[int], f: RationalPolynomial, lie_type) -> RationalPolynomial:
    """``d_{a_1} d_{a_2} ... d_{a_k} f`` (the last letter acts first)."""
    for i in reversed(word):
        if f.is_zero():
            return f
        f = divided_difference(i, f, lie_type)
    return f


def top_representative(rank: int, lie_type) -> RationalPolynomial:
    """``P_{w0} = prod(positive roots) / |W|``."""
    rs = root_system(rank, lie_type)
    return product((RationalPolynomial.linear_form(b) for b in rs.positive_roots), rank) / rs.order


class SchubertOracle:
    """Lazily computed Schubert representatives and constants for one group."""

    def __init__(self, rank: int, lie_type):
        self.rank = rank
        self.lie_type = _lie_type(lie_type)
        self.roots = root_system(rank, self.lie_type)
        self.order = self.roots.order
        top = product((RationalPolynomial.linear_form(b) for b in self.roots.positive_roots), rank)
        self._scaled = {longest_element(rank, self.lie_type): top}

    def scaled_representative(self, w: SignedPermutation) -> RationalPolynomial:
        """``|W| * P_w``, integral."""
        path = []
        while w not in self._scaled:
            ell = length(w)
            for i in range(1, self.rank + 1):
                up = multiply(w, simple_reflection(i, self.rank, self.lie_type))
                if length(up) > ell:
                    break
            path.append((w, i, up))
            w = up
        for w_low, i, w_up in reversed(path):
            self._scaled[w_low] = divided_difference(i, self._scaled[w_up], self.lie_type)
        return self._scaled[path[0][0] if path else w]

    def representative(self, w: SignedPermutation) -> RationalPolynomial:
        return self.scaled_representative(w) / self.order

    def _to_constant(self, value) -> int:
        c = Fraction(value) / (self.order * self.order)
        if c.denominator != 1:
            raise NonIntegerResult(f"structure constant {c} is not an integer")
        return c.numerator

    def constant(self, u: SignedPermutation, v: SignedPermutation, w: SignedPermutation) -> int:
        """``c_{u,v}^w``."""
        _check_same(u, v)
        _check_same(u, w)
        if length(u) + length(v) != length(w):
            raise LengthMismatch(f"l({u}) + l({v}) != l({w})")
        f = self.scaled_representative(u) * self.scaled_representative(v)
        g = divided_difference_word(reduced_word(w), f, self.lie_type)
        if g.degree() > 0:
            raise DivisionError("divided differences did not reach degree 0")
        return self._to_constant(g.constant_term())

    def expansion(self, u: SignedPermutation, v: SignedPermutation) -> dict[SignedPermutation, int]:
        """All ``c_{u,v}^w`` with ``l(w) = l(u) + l(v)``, zeros included.

        Walks up from the identity with ``d_{s_i x} = d_i d_x``, so each
        ``d_x(P_u P_v)`` is computed once.
        """
        _check_same(u, v)
        degree = length(u) + length(v)
        level = {identity(self.rank, self.lie_type):
                 self.scaled_representative(u) * self.scaled_representative(v)}
        for ell in range(degree):
            nxt: dict[SignedPermutation, RationalPolynomial] = {}
            for x, f in level.items():
                for i in range(1, self.rank + 1):
                    y = multiply(simple_reflection(i, self.rank, self.lie_type), x)
                    if y in nxt or length(y) != ell + 1:
                        continue
                    nxt[y] = f if f.is_zero() else divided_difference(i, f, self.lie_type)
            level = nxt
        return {w: self._to_constant(f.constant_term()) for w, f in sorted(level.items())}


@lru_cache(maxsize=None)
def get_oracle(rank: int, lie_type) -> SchubertOracle:
    return SchubertOracle(rank, _lie_type(lie_type))


def schubert_representative(w: SignedPermutation) -> RationalPolynomial:
    return get_oracle(w.rank, w.lie_type).representative(w)


def oracle_constant(u: SignedPermutation, v: SignedPermutation, w: SignedPermutation) -> int:
    return get_oracle(u.rank, u.lie_type).constant(u, v, w)


def oracle_expansion(u: SignedPermutation, v: SignedPermutation) -> dict[SignedPermutation, int]:
    return get_oracle(u.rank, u.lie_type).expansion(u, v)
