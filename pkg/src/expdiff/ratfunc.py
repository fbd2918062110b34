"""Rational functions num/den in canonical form.

Canonical form: numerator and denominator coprime, denominator primitive
with positive leading (grevlex) coefficient.  Equality is representation
equality, which canonicalization makes semantic equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .multipoly import GREVLEX, MultiPoly, poly_gcd


class RationalFunction:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: MultiPoly, den: MultiPoly, _canonical: bool = False):
        if num.variables != den.variables:
            raise ValueError("variable tuples differ")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            if num.is_zero:
                den = MultiPoly.const(num.variables, 1)
            else:
                g = poly_gcd(num, den)
                if not (g.is_constant and g.constant_value() == 1):
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                c = den.content()
                if den.leading_coefficient(GREVLEX) < 0:
                    c = -c
                if c != 1:
                    num = num * (1 / c)
                    den = den * (1 / c)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "RationalFunction":
        return cls(p, MultiPoly.const(p.variables, 1), _canonical=True)

    @classmethod
    def const(cls, variables: Sequence[str], value) -> "RationalFunction":
        return cls.from_poly(MultiPoly.const(variables, value))

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "RationalFunction":
        return cls.from_poly(MultiPoly.var(variables, name))

    # -- predicates ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_rational(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational constant")
        if self.is_zero:
            return Fraction(0)
        return self.num.constant_value() / self.den.constant_value()

    @property
    def variables(self):
        return self.num.variables

    def support(self) -> frozenset:
        return self.num.support() | self.den.support()

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.const(self.variables, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, n: int):
        if n == 0:
            return RationalFunction.const(self.variables, 1)
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero

    # -- calculus ------------------------------------------------------------------

    def partial(self, name: str) -> "RationalFunction":
        """Formal partial derivative by the quotient rule."""
        dn = self.num.partial(name)
        dd = self.den.partial(name)
        return RationalFunction(dn * self.den - self.num * dd, self.den * self.den)

    def remap(self, new_variables: Sequence[str], rename: Mapping[str, str] | None = None):
        return RationalFunction(
            self.num.remap(new_variables, rename), self.den.remap(new_variables, rename)
        )

    def __str__(self):
        if self.den.is_constant and self.den.constant_value() == 1:
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        if len(self.num.terms) > 1 or self.num.terms.get((0,) * len(self.variables)) is not None and str(self.num).startswith("-"):
            num = f"({num})"
        elif num.startswith("-"):
            num = f"({num})"
        if len(self.den.terms) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    __repr__ = __str__
