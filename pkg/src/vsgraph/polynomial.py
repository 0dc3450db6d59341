"""Exact arithmetic helpers: half-integers and Laurent polynomials in A."""
from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class HalfInteger:
    numerator: int   # value is numerator / 2

    @classmethod
    def of(cls, x):
        if isinstance(x, HalfInteger):
            return x
        return cls(2 * int(x))

    @property
    def is_integer(self):
        return self.numerator % 2 == 0

    def is_odd_integer(self):
        return self.numerator % 4 == 2

    def __add__(self, other):
        return HalfInteger(self.numerator + HalfInteger.of(other).numerator)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInteger(self.numerator - HalfInteger.of(other).numerator)

    def __neg__(self):
        return HalfInteger(-self.numerator)

    def __abs__(self):
        return HalfInteger(abs(self.numerator))

    def __lt__(self, other):
        return self.numerator < HalfInteger.of(other).numerator

    def __eq__(self, other):
        if isinstance(other, int):
            return self.numerator == 2 * other
        return isinstance(other, HalfInteger) and self.numerator == other.numerator

    def __hash__(self):
        return hash(("half", self.numerator))

    def __bool__(self):
        return self.numerator != 0

    def __str__(self):
        if self.is_integer:
            return str(self.numerator // 2)
        return f"{self.numerator}/2"

    def __repr__(self):
        return f"HalfInteger({self})"


class LaurentPolynomial:
    """Integer Laurent polynomial in A, stored as exponent -> nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if isinstance(terms, int):
            terms = {0: terms}
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exp, coef=1):
        return cls({exp: coef})

    @classmethod
    def sigma(cls):
        return cls({-1: 1, 0: 1, 1: 1})

    def _lift(self, other):
        return other if isinstance(other, LaurentPolynomial) else LaurentPolynomial(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = LaurentPolynomial(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial(other)
        return isinstance(other, LaurentPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def shift(self, k):
        """Multiply by A**k."""
        return LaurentPolynomial({e + k: c for e, c in self.terms.items()})

    def mirror(self):
        return LaurentPolynomial({-e: c for e, c in self.terms.items()})

    def pairs(self):
        return sorted(self.terms.items())

    def normalized(self, step=2):
        """Representative up to multiplication by +-A**(step*k): lowest exponent in [0, step)."""
        if not self.terms:
            return self
        lo = min(self.terms)
        p = self.shift(-(lo - lo % step))
        if p.terms[min(p.terms)] < 0:
            p = -p
        return p

    def __str__(self):
        if not self.terms:
            return "0"
        return " ".join(f"{e}:{c}" for e, c in self.pairs())

    def __repr__(self):
        return f"LaurentPolynomial({self})"
