"""
A second route to structure constants that never touches polynomials.

Multiplication by a divisor class acts on the Schubert basis by the
Chevalley formula

    c_1(L_lambda) . S_w = sum_{beta > 0, l(w s_beta) = l(w) + 1} <lambda, beta^vee> S_{w s_beta}.

Rationally the cohomology ring is generated by divisors, so each ``S_u`` is a
polynomial ``f_u`` in the fundamental-weight classes; ``f_u`` is found by
exact linear algebra and ``S_u S_v = f_u(M) S_v`` follows by repeated
Chevalley steps.  Used to calibrate the divided-difference oracle.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

import sympy

from ..weyl import SignedPermutation, _lie_type, all_elements, identity, length, multiply
from .roots import root_system

Vec = dict[SignedPermutation, Fraction]


def chevalley_terms(w: SignedPermutation, weight) -> Vec:
    """Coefficients of ``c_1(L_weight) . S_w`` in the Schubert basis."""
    rs = root_system(w.rank, w.lie_type)
    ell = length(w)
    out: Vec = {}
    for beta in rs.positive_roots:
        y = multiply(w, rs.reflection(beta))
        if length(y) == ell + 1:
            c = rs.pairing(weight, rs.coroot(beta))
            if c:
                out[y] = out.get(y, Fraction(0)) + c
    return out


class ChevalleyRing:
    """Schubert-basis arithmetic for one group, built from divisor operators."""

    def __init__(self, rank: int, lie_type):
        self.rank = rank
        self.lie_type = _lie_type(lie_type)
        self.weights = root_system(rank, self.lie_type).fundamental_weights()
        self._by_length: dict[int, list[SignedPermutation]] = {}
        for w in all_elements(rank, self.lie_type):
            self._by_length.setdefault(length(w), []).append(w)
        self._step_cache: dict[tuple[SignedPermutation, int], Vec] = {}
        self._poly_cache: dict[SignedPermutation, dict[tuple[int, ...], Fraction]] = {}

    def divisor_times(self, vec: Vec, i: int) -> Vec:
        """Multiply a class by the ``i``-th fundamental-weight divisor."""
        out: Vec = {}
        for w, c in vec.items():
            key = (w, i)
            if key not in self._step_cache:
                self._step_cache[key] = chevalley_terms(w, self.weights[i - 1])
            for y, d in self._step_cache[key].items():
                out[y] = out.get(y, Fraction(0)) + c * d
        return {y: c for y, c in out.items() if c}

    def monomial_times(self, mono: tuple[int, ...], vec: Vec) -> Vec:
        """Apply the divisor monomial ``mono`` (a multiset of indices)."""
        for i in mono:
            vec = self.divisor_times(vec, i)
        return vec

    def as_divisor_polynomial(self, u: SignedPermutation) -> dict[tuple[int, ...], Fraction]:
        """A polynomial in the divisor classes equal to ``S_u``."""
        if u in self._poly_cache:
            return self._poly_cache[u]
        d = length(u)
        basis = self._by_length.get(d, [])
        monos = list(combinations_with_replacement(range(1, self.rank + 1), d))
        e = {identity(self.rank, self.lie_type): Fraction(1)}
        columns = [self.monomial_times(m, e) for m in monos]
        A = sympy.Matrix([[sympy.Rational(col.get(w, 0)) for col in columns] for w in basis])
        b = sympy.Matrix([1 if w == u else 0 for w in basis])
        sol, params = A.gauss_jordan_solve(b)
        sol = sol.subs({p: 0 for p in params})
        poly = {m: Fraction(int(x.p), int(x.q)) for m, x in zip(monos, sol) if x != 0}
        self._poly_cache[u] = poly
        return poly

    def product(self, u: SignedPermutation, v: SignedPermutation) -> Vec:
        """``S_u S_v`` expanded in the Schubert basis."""
        out: Vec = {}
        start = {v: Fraction(1)}
        for mono, c in self.as_divisor_polynomial(u).items():
            for y, d in self.monomial_times(mono, start).items():
                out[y] = out.get(y, Fraction(0)) + c * d
        return {y: c for y, c in out.items() if c}


@lru_cache(maxsize=None)
def get_chevalley_ring(rank: int, lie_type) -> ChevalleyRing:
    return ChevalleyRing(rank, _lie_type(lie_type))


def chevalley_product(u: SignedPermutation, v: SignedPermutation) -> Vec:
    return get_chevalley_ring(u.rank, u.lie_type).product(u, v)
