"""Sparse multivariate polynomials over Q.

Terms are stored as a map from exponent tuples to nonzero Fraction
coefficients.  Monomial orders are small objects with a sort ``key``;
``grevlex`` is the library default, ``lex`` and block orders exist for
elimination.  Canonical-form decisions (leading coefficient signs, term
printing) always use grevlex so that representations do not depend on the
order a caller happens to be computing with.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class MonomialOrder:
    """A named admissible term order; ``key`` maps a monomial to a sort key."""

    def __init__(self, name: str, key):
        self.name = name
        self.key = key

    def __repr__(self):
        return f"MonomialOrder({self.name})"


def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


LEX = MonomialOrder("lex", lambda m: m)
GREVLEX = MonomialOrder("grevlex", _grevlex_key)


def block_order(split: int) -> MonomialOrder:
    """Eliminination order: lex on the first ``split`` variables, then lex.

    Any monomial involving the first block sorts above every monomial that
    avoids it, so a Groebner basis in this order intersects down to the
    subring in the remaining variables.
    """

    def key(m: Monomial):
        return (m[:split], m[split:])

    return MonomialOrder(f"block({split})", key)


def _monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _monomial_div(a: Monomial, b: Monomial):
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def _monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    """Immutable sparse polynomial over Q in a fixed, ordered variable tuple."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, Fraction]):
        self.variables = tuple(variables)
        arity = len(self.variables)
        clean: dict[Monomial, Fraction] = {}
        for mono, coef in terms.items():
            if len(mono) != arity:
                raise ValueError(f"exponent tuple {mono} does not match arity {arity}")
            c = Fraction(coef)
            if c != 0:
                clean[tuple(mono)] = c
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def const(cls, variables: Sequence[str], value) -> "MultiPoly":
        v = Fraction(value)
        if v == 0:
            return cls.zero(variables)
        return cls(variables, {(0,) * len(variables): v})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        i = variables.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {mono: Fraction(1)})

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, name: str) -> int:
        if self.is_zero:
            return -1
        i = self.variables.index(name)
        return max(m[i] for m in self.terms)

    def support(self) -> frozenset:
        """Names of variables that actually occur."""
        used = [False] * len(self.variables)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return frozenset(v for v, u in zip(self.variables, used) if u)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise ValueError("variable tuples differ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return MultiPoly.zero(self.variables)
            return MultiPoly(self.variables, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _monomial_mul(m1, m2)
                s = terms.get(m, Fraction(0)) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mul_term(self, mono: Monomial, coef: Fraction) -> "MultiPoly":
        if coef == 0:
            return MultiPoly.zero(self.variables)
        return MultiPoly(
            self.variables,
            {_monomial_mul(m, mono): c * coef for m, c in self.terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, tuple(sorted(self.terms.items()))))
        return self._hash

    def __bool__(self):
        return not self.is_zero

    # -- leading data ------------------------------------------------------

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "MultiPoly":
        if self.is_zero:
            return self
        lc = self.leading_coefficient(order)
        return self * (1 / lc)

    # -- calculus and evaluation -------------------------------------------

    def partial(self, name: str) -> "MultiPoly":
        i = self.variables.index(name)
        terms: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            new = list(m)
            new[i] -= 1
            key = tuple(new)
            s = terms.get(key, Fraction(0)) + c * m[i]
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return MultiPoly(self.variables, terms)

    def evaluate(self, values: Mapping[str, object], ring_one):
        """Substitute values (any commutative ring elements) for every variable.

        ``ring_one`` is the multiplicative unit of the target ring; values
        must support +, * and ** with small integer exponents.
        """
        idx = {v: i for i, v in enumerate(self.variables)}
        for v in self.variables:
            if v not in values:
                raise KeyError(f"no value supplied for '{v}'")
        total = None
        for m, c in sorted(self.terms.items()):
            term = ring_one * c
            for v, i in idx.items():
                if m[i]:
                    term = term * (values[v] ** m[i])
            total = term if total is None else total + term
        if total is None:
            return ring_one * 0
        return total

    def remap(self, new_variables: Sequence[str], rename: Mapping[str, str] | None = None) -> "MultiPoly":
        """Reinterpret over a new variable tuple (a superset after renaming)."""
        rename = rename or {}
        new_variables = tuple(new_variables)
        pos = {v: i for i, v in enumerate(new_variables)}
        arity = len(new_variables)
        terms: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            new = [0] * arity
            for old_i, e in enumerate(m):
                if e:
                    name = rename.get(self.variables[old_i], self.variables[old_i])
                    new[pos[name]] += e
            key = tuple(new)
            s = terms.get(key, Fraction(0)) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return MultiPoly(new_variables, terms)

    def drop_to(self, new_variables: Sequence[str]) -> "MultiPoly":
        """Project onto a smaller variable tuple; dropped variables must not occur."""
        new_variables = tuple(new_variables)
        sup = self.support()
        missing = sup - set(new_variables)
        if missing:
            raise ValueError(f"variables {sorted(missing)} still occur")
        return self.remap(new_variables)

    # -- content and gcd ----------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational content (gcd of coefficients); 0 for the zero poly."""
        if self.is_zero:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, abs(c.numerator))
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "MultiPoly":
        """Divide out the content; leading sign (grevlex) made positive."""
        if self.is_zero:
            return self
        c = self.content()
        if self.leading_coefficient(GREVLEX) < 0:
            c = -c
        return self * (1 / c)

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Exact polynomial division; raises if not divisible."""
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = divmod_poly(self, other, GREVLEX)
        if not r.is_zero:
            raise ValueError("not exactly divisible")
        return q

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_grevlex_key, reverse=True):
            c = self.terms[m]
            factors = []
            for v, e in zip(self.variables, m):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            body = "*".join(factors)
            if not body:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = body
            else:
                piece = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, piece))
        sign0, piece0 = parts[0]
        out = piece0 if sign0 == "+" else "-" + piece0
        for sign, piece in parts[1:]:
            out += f" {sign} {piece}"
        return out

    __repr__ = __str__


def divmod_poly(f: MultiPoly, g: MultiPoly, order: MonomialOrder = GREVLEX):
    """Single-divisor division with remainder."""
    q = MultiPoly.zero(f.variables)
    r = MultiPoly.zero(f.variables)
    lm_g = g.leading_monomial(order)
    lc_g = g.terms[lm_g]
    work = f
    while not work.is_zero:
        lm = work.leading_monomial(order)
        quot = _monomial_div(lm, lm_g)
        if quot is None:
            move = MultiPoly(f.variables, {lm: work.terms[lm]})
            r = r + move
            work = work - move
        else:
            coef = work.terms[lm] / lc_g
            q = q + MultiPoly(f.variables, {quot: coef})
            work = work - g.mul_term(quot, coef)
    return q, r


def reduce_poly(f: MultiPoly, basis: Sequence[MultiPoly], order: MonomialOrder) -> MultiPoly:
    """Remainder of f modulo a list of divisors (deterministic reducer choice)."""
    if not basis:
        return f
    lead = [(g.leading_monomial(order), g.terms[g.leading_monomial(order)], g) for g in basis if not g.is_zero]
    r = MultiPoly.zero(f.variables)
    work = f
    while not work.is_zero:
        lm = work.leading_monomial(order)
        c = work.terms[lm]
        hit = None
        for lm_g, lc_g, g in lead:
            quot = _monomial_div(lm, lm_g)
            if quot is not None:
                hit = (quot, c / lc_g, g)
                break
        if hit is None:
            move = MultiPoly(f.variables, {lm: c})
            r = r + move
            work = work - move
        else:
            quot, coef, g = hit
            work = work - g.mul_term(quot, coef)
    return r


# -- multivariate gcd -------------------------------------------------------
#
# Content/primitive-part recursion on the last occurring variable, with a
# subresultant PRS at the univariate layer.  Exact and dependency-free.


def _as_univariate(f: MultiPoly, i: int) -> dict[int, MultiPoly]:
    """Coefficients of f as a univariate polynomial in variable i."""
    coeffs: dict[int, dict[Monomial, Fraction]] = {}
    for m, c in f.terms.items():
        d = m[i]
        rest = list(m)
        rest[i] = 0
        coeffs.setdefault(d, {})[tuple(rest)] = c
    return {d: MultiPoly(f.variables, t) for d, t in coeffs.items()}


def _from_univariate(coeffs: dict[int, MultiPoly], i: int, variables) -> MultiPoly:
    out = MultiPoly.zero(variables)
    for d, p in coeffs.items():
        shift = tuple(d if j == i else 0 for j in range(len(variables)))
        out = out + p.mul_term(shift, Fraction(1))
    return out


def _uni_degree(coeffs: dict[int, MultiPoly]) -> int:
    live = [d for d, p in coeffs.items() if not p.is_zero]
    return max(live) if live else -1


def _uni_pseudo_rem(f: dict[int, MultiPoly], g: dict[int, MultiPoly], variables, i: int):
    """Pseudo-remainder of univariate polynomials with MultiPoly coefficients."""
    df = _uni_degree(f)
    dg = _uni_degree(g)
    if dg < 0:
        raise ZeroDivisionError
    lc_g = g[dg]
    work = {d: p for d, p in f.items() if not p.is_zero}
    e = df - dg + 1
    while True:
        dw = _uni_degree(work)
        if dw < dg:
            break
        lc_w = work[dw]
        new: dict[int, MultiPoly] = {}
        for d, p in work.items():
            new[d] = p * lc_g
        for d, p in g.items():
            shifted = d + dw - dg
            term = p * lc_w
            new[shifted] = new.get(shifted, MultiPoly.zero(variables)) - term
        work = {d: p for d, p in new.items() if not p.is_zero}
        e -= 1
    if e > 0:
        mult = _uni_content_free_power(lc_g, e)
        work = {d: p * mult for d, p in work.items()}
    return work


def _uni_content_free_power(p: MultiPoly, e: int) -> MultiPoly:
    out = MultiPoly.const(p.variables, 1)
    for _ in range(e):
        out = out * p
    return out


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Primitive gcd over Q; result has positive leading (grevlex) coefficient."""
    if f.variables != g.variables:
        raise ValueError("variable tuples differ")
    if f.is_zero:
        return g.primitive() if not g.is_zero else g
    if g.is_zero:
        return f.primitive()
    if f.is_constant or g.is_constant:
        return MultiPoly.const(f.variables, 1)
    shared = sorted(f.support() | g.support())
    # main variable: last occurring, so recursion strictly shrinks the support
    main = shared[-1]
    i = f.variables.index(main)
    fu = _as_univariate(f, i)
    gu = _as_univariate(g, i)
    if _uni_degree(fu) == 0 or _uni_degree(gu) == 0:
        cf = _poly_content_in(fu)
        cg = _poly_content_in(gu)
        return poly_gcd(cf, cg)
    cf = _poly_content_in(fu)
    cg = _poly_content_in(gu)
    cont = poly_gcd(cf, cg)
    fp = {d: p.exact_div(cf) for d, p in fu.items()}
    gp = {d: p.exact_div(cg) for d, p in gu.items()}
    if _uni_degree(fp) < _uni_degree(gp):
        fp, gp = gp, fp
    # subresultant-flavoured PRS: primitive-part reduction keeps growth tame
    while True:
        dg = _uni_degree(gp)
        if dg < 0:
            break
        rem = _uni_pseudo_rem(fp, gp, f.variables, i)
        fp, gp = gp, rem
        if _uni_degree(gp) >= 0:
            whole = _from_univariate(gp, i, f.variables)
            cr = _poly_content_in(_as_univariate(whole, i))
            gp = {d: p.exact_div(cr) for d, p in _as_univariate(whole, i).items()}
    result = _from_univariate(fp, i, f.variables).primitive()
    return (result * cont).primitive()


def _poly_content_in(coeffs: dict[int, MultiPoly]) -> MultiPoly:
    parts = [p for p in coeffs.values() if not p.is_zero]
    out = parts[0]
    for p in parts[1:]:
        out = poly_gcd(out, p)
        if out.is_constant:
            break
    if out.is_constant:
        vars_ = parts[0].variables
        return MultiPoly.const(vars_, 1)
    return out.primitive()


def poly_lcm(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    if f.is_zero or g.is_zero:
        return MultiPoly.zero(f.variables)
    return (f * g).exact_div(poly_gcd(f, g)).primitive()
