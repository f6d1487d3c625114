"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


def _exact(c):
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class RationalPolynomial:
    """Polynomial in ``x_1 .. x_n`` stored as ``{exponent vector: coefficient}``.

    Coefficients are ``int`` or :class:`~fractions.Fraction`; zero terms are
    never stored, so equality is structural.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        self.terms: dict[Monomial, object] = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has the wrong number of variables")
            c = _exact(c)
            if c:
                self.terms[tuple(mono)] = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, nvars: int, c=1) -> RationalPolynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> RationalPolynomial:
        """The variable ``x_i`` (1-based)."""
        mono = [0] * nvars
        mono[i - 1] = 1
        return cls(nvars, {tuple(mono): 1})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> RationalPolynomial:
        n = len(coeffs)
        return cls(n, {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> RationalPolynomial:
        # trusted constructor: caller guarantees exact non-zero coefficients
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, Rational):
            return self == RationalPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            var = "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                           for i, e in enumerate(mono) if e)
            parts.append(f"{c}" if not var else (var if c == 1 else f"{c}*{var}"))
        return " + ".join(parts)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> RationalPolynomial:
        if isinstance(other, RationalPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        return RationalPolynomial.constant(self.nvars, _exact(other))

    def __add__(self, other) -> RationalPolynomial:
        other = self._coerce(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, 0) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return RationalPolynomial._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> RationalPolynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RationalPolynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            c = _exact(other)
            if not c:
                return RationalPolynomial(self.nvars)
            return RationalPolynomial._raw(self.nvars, {m: a * c for m, a in self.terms.items()})
        other = self._coerce(other)
        terms: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return RationalPolynomial._raw(self.nvars, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> RationalPolynomial:
        if isinstance(scalar, RationalPolynomial):
            raise TypeError("use exact_divide_linear for polynomial division")
        s = _exact(scalar)
        return RationalPolynomial._raw(
            self.nvars, {m: _exact(Fraction(c) / s) for m, c in self.terms.items()})

    def __pow__(self, k: int) -> RationalPolynomial:
        out = RationalPolynomial.constant(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def substitute_signed(self, images: Sequence[int]) -> RationalPolynomial:
        """Ring map ``x_i -> sign(images[i]) * x_{|images[i]|}``."""
        terms: dict[Monomial, object] = {}
        n = self.nvars
        for mono, c in self.terms.items():
            new = [0] * n
            sign = 1
            for i, e in enumerate(mono):
                if e:
                    target = images[i]
                    new[abs(target) - 1] += e
                    if target < 0 and e % 2:
                        sign = -sign
            key = tuple(new)
            terms[key] = terms.get(key, 0) + sign * c
        return RationalPolynomial._raw(n, {m: c for m, c in terms.items() if c})


def product(polys: Iterable[RationalPolynomial], nvars: int) -> RationalPolynomial:
    out = RationalPolynomial.constant(nvars)
    for p in polys:
        out = out * p
    return out
