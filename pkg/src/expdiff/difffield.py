"""Finitely presented differential fields and low-degree differential forms.

A field is Q(z1,...,zk) with generators flagged constant or nonconstant and
finitely many commuting derivations given by their values on generators.
Presentations are purely transcendental: there are no algebraic relations
among generators, so field arithmetic stays canonical and membership in a
subfield generated by a generator subset is decided by formal partials.

The presented constant field is Q(constant generators).  ``is_constant`` is
the exact elementwise test (every derivation kills the element) and can be
strictly larger than the presented constants when the presentation hides
constants; consumers that need exactness route through ``is_constant``.

Forms are implemented to degree 2 over the basis dz for nonconstant
generators z, which models differentials relative to the presented
constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg
from .errors import InvalidPresentationError, NonCommutingError
from .multipoly import MultiPoly
from .ratfunc import RationalFunction


class DiffField:
    __slots__ = ("gen_names", "const_flags", "der_names", "der_values", "_index")

    def __init__(self, gens: Sequence[tuple[str, bool]],
                 derivations: Sequence[tuple[str, Mapping[str, RationalFunction]]],
                 check: bool = True):
        """gens: (name, is_constant) pairs; derivations: (name, {gen: value})."""
        self.gen_names = tuple(name for name, _ in gens)
        self.const_flags = tuple(bool(flag) for _, flag in gens)
        if len(set(self.gen_names)) != len(self.gen_names):
            raise InvalidPresentationError("duplicate generator name")
        self._index = {n: i for i, n in enumerate(self.gen_names)}
        der_names = []
        der_values = []
        for dname, mapping in derivations:
            values = []
            for g in self.gen_names:
                v = mapping.get(g)
                if v is None:
                    v = RationalFunction.const(self.gen_names, 0)
                if v.variables != self.gen_names:
                    raise InvalidPresentationError(
                        f"derivation value for '{g}' is over the wrong variables")
                values.append(v)
            der_names.append(dname)
            der_values.append(tuple(values))
        self.der_names = tuple(der_names)
        self.der_values = tuple(der_values)
        if len(set(self.der_names)) != len(self.der_names):
            raise InvalidPresentationError("duplicate derivation name")
        if check:
            self._validate()

    def _validate(self):
        for i, name in enumerate(self.gen_names):
            hit = [j for j in range(self.num_derivations) if not self.der_values[j][i].is_zero]
            if self.const_flags[i] and hit:
                raise InvalidPresentationError(
                    f"constant generator '{name}' has a nonzero derivative")
            if not self.const_flags[i] and not hit and self.num_derivations > 0:
                raise InvalidPresentationError(
                    f"nonconstant generator '{name}' is killed by every derivation")
        ok, witness = self.check_commuting()
        if not ok:
            raise NonCommutingError(witness[0] + 1, witness[1] + 1, witness[2])

    # -- basics ----------------------------------------------------------------

    @property
    def num_derivations(self) -> int:
        return len(self.der_names)

    @property
    def nonconstant_names(self) -> tuple[str, ...]:
        return tuple(n for n, c in zip(self.gen_names, self.const_flags) if not c)

    @property
    def constant_names(self) -> tuple[str, ...]:
        return tuple(n for n, c in zip(self.gen_names, self.const_flags) if c)

    def gen(self, name: str) -> RationalFunction:
        if name not in self._index:
            raise KeyError(name)
        return RationalFunction.var(self.gen_names, name)

    def rational(self, q) -> RationalFunction:
        return RationalFunction.const(self.gen_names, q)

    def zero(self) -> RationalFunction:
        return self.rational(0)

    def one(self) -> RationalFunction:
        return self.rational(1)

    def is_flagged_constant(self, name: str) -> bool:
        return self.const_flags[self._index[name]]

    # -- derivations -------------------------------------------------------------

    def apply_derivation(self, j: int, f: RationalFunction) -> RationalFunction:
        """D_j f via the chain rule through the generator values."""
        out = self.zero()
        for name in f.support():
            i = self._index[name]
            dv = self.der_values[j][i]
            if dv.is_zero:
                continue
            out = out + f.partial(name) * dv
        return out

    def check_commuting(self):
        """True, or (False, (a, b, generator)) for the first failing triple."""
        for a in range(self.num_derivations):
            for b in range(a + 1, self.num_derivations):
                for i, name in enumerate(self.gen_names):
                    g = self.gen(name)
                    ab = self.apply_derivation(a, self.apply_derivation(b, g))
                    ba = self.apply_derivation(b, self.apply_derivation(a, g))
                    if ab != ba:
                        return False, (a, b, name)
        return True, None

    def is_constant(self, f: RationalFunction) -> bool:
        """Exact test: every presented derivation kills f."""
        return all(self.apply_derivation(j, f).is_zero for j in range(self.num_derivations))

    def in_presented_constants(self, f: RationalFunction) -> bool:
        """Membership in Q(constant generators), by formal partials."""
        return all(self.is_flagged_constant(name) for name in f.support())

    def in_generated_subfield(self, f: RationalFunction, names: frozenset) -> bool:
        """Membership in Q(names, constants), by formal partials."""
        for name in f.support():
            if not self.is_flagged_constant(name) and name not in names:
                return False
        return True

    def jacobian_rank(self, tup: Sequence[RationalFunction]) -> int:
        """Rank over F of the (derivations x entries) matrix of derivatives."""
        mat = [[self.apply_derivation(j, f) for f in tup] for j in range(self.num_derivations)]
        return linalg.rank(mat)

    def formal_jacobian_rank(self, tup: Sequence[RationalFunction],
                             exclude: frozenset = frozenset()) -> int:
        """Rank of the formal Jacobian wrt nonconstant generators outside `exclude`.

        This is the transcendence degree of the tuple over the subfield
        generated by `exclude` and the presented constants.
        """
        cols = [n for n in self.nonconstant_names if n not in exclude]
        mat = [[f.partial(z) for z in cols] for f in tup]
        return linalg.rank(mat)

    def lift(self, f: RationalFunction, rename: Mapping[str, str] | None = None) -> RationalFunction:
        return f.remap(self.gen_names, rename)

    def __repr__(self):
        gens = ", ".join(
            f"{n}{'(const)' if c else ''}" for n, c in zip(self.gen_names, self.const_flags))
        return f"DiffField({gens}; derivations {', '.join(self.der_names)})"


# -- differential forms of degree 1 and 2 -------------------------------------


@dataclass(frozen=True)
class Form1:
    """Sum of c_z dz over nonconstant generators z; zero coefficients omitted."""

    field: DiffField
    coeffs: tuple[tuple[str, RationalFunction], ...]

    @classmethod
    def make(cls, field: DiffField, mapping: Mapping[str, RationalFunction]) -> "Form1":
        items = tuple(sorted((k, v) for k, v in mapping.items() if not v.is_zero))
        for name, _ in items:
            if field.is_flagged_constant(name):
                raise ValueError(f"dz of a constant generator '{name}'")
        return cls(field, items)

    def as_dict(self):
        return dict(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Form1") -> "Form1":
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, self.field.zero()) + v
        return Form1.make(self.field, d)

    def __sub__(self, other: "Form1") -> "Form1":
        return self + other.scale(self.field.rational(-1))

    def scale(self, a: RationalFunction) -> "Form1":
        return Form1.make(self.field, {k: a * v for k, v in self.coeffs})

    def __str__(self):
        if self.is_zero:
            return "0"
        return " + ".join(f"({v})*d{k}" for k, v in self.coeffs)


@dataclass(frozen=True)
class Form2:
    """Sum of c_(w,z) dw^dz with w < z lexicographically."""

    field: DiffField
    coeffs: tuple[tuple[tuple[str, str], RationalFunction], ...]

    @classmethod
    def make(cls, field: DiffField, mapping: Mapping[tuple[str, str], RationalFunction]) -> "Form2":
        canon: dict[tuple[str, str], RationalFunction] = {}
        for (a, b), v in mapping.items():
            if a == b:
                continue
            if a > b:
                a, b, v = b, a, -v
            canon[(a, b)] = canon.get((a, b), field.zero()) + v
        items = tuple(sorted((k, v) for k, v in canon.items() if not v.is_zero))
        return cls(field, items)

    def as_dict(self):
        return dict(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Form2") -> "Form2":
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, self.field.zero()) + v
        return Form2.make(self.field, d)

    def __str__(self):
        if self.is_zero:
            return "0"
        return " + ".join(f"({v})*d{a}^d{b}" for (a, b), v in self.coeffs)


def differential(field: DiffField, f: RationalFunction) -> Form1:
    """df over the presented constants: sum of (df/dz) dz, z nonconstant."""
    return Form1.make(field, {z: f.partial(z) for z in field.nonconstant_names})


def exterior_d(form: Form1) -> Form2:
    field = form.field
    out: dict[tuple[str, str], RationalFunction] = {}
    for z, c in form.coeffs:
        for w in field.nonconstant_names:
            dc = c.partial(w)
            if not dc.is_zero:
                out[(w, z)] = out.get((w, z), field.zero()) + dc
    return Form2.make(field, out)


def contract1(field: DiffField, j: int, form: Form1) -> RationalFunction:
    """Pairing of the j-th derivation with a 1-form."""
    out = field.zero()
    for z, c in form.coeffs:
        dz = field.der_values[j][field._index[z]]
        if not dz.is_zero:
            out = out + c * dz
    return out


def contract2(field: DiffField, j: int, form: Form2) -> Form1:
    """Pairing of the j-th derivation with a 2-form, in the first slot."""
    out: dict[str, RationalFunction] = {}
    for (a, b), c in form.coeffs:
        da = field.der_values[j][field._index[a]]
        db = field.der_values[j][field._index[b]]
        if not da.is_zero:
            out[b] = out.get(b, field.zero()) + c * da
        if not db.is_zero:
            out[a] = out.get(a, field.zero()) - c * db
    return Form1.make(field, out)


def lie_derivative(field: DiffField, j: int, form: Form1) -> Form1:
    """Cartan formula: L_D = D* d + d D* on 1-forms."""
    first = contract2(field, j, exterior_d(form))
    second = differential(field, contract1(field, j, form))
    return first + second
