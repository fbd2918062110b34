"""The group layer for the n-torus: tangent points, quotient maps, the
logarithmic derivative and membership in the solution set Gamma.

A tangent point is (x, y) with x in F^n (the Lie-algebra part) and y in
(F*)^n (the torus part).  Gamma is cut out by D x_i = D y_i / y_i for
every presented derivation; it is a subgroup of the tangent bundle and is
functorial under the tangent maps of monomial quotients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .difffield import DiffField
from .errors import InvalidPresentationError
from .intlattice import IntLattice, hnf
from .ratfunc import RationalFunction


class TangentPoint:
    __slots__ = ("field", "x", "y")

    def __init__(self, field: DiffField, x: Sequence[RationalFunction],
                 y: Sequence[RationalFunction]):
        if len(x) != len(y):
            raise InvalidPresentationError("x and y must have the same length")
        for f in list(x) + list(y):
            if f.variables != field.gen_names:
                raise InvalidPresentationError("coordinate over the wrong field")
        for i, f in enumerate(y):
            if f.is_zero:
                raise InvalidPresentationError(f"y[{i}] is zero")
        self.field = field
        self.x = tuple(x)
        self.y = tuple(y)

    @property
    def n(self) -> int:
        return len(self.x)

    def pairs(self):
        return tuple(zip(self.x, self.y))

    def __repr__(self):
        return f"TangentPoint(x={list(map(str, self.x))}, y={list(map(str, self.y))})"


def logd(point: TangentPoint) -> list[tuple[RationalFunction, ...]]:
    """Per derivation j, the tuple (D_j y_i / y_i)_i."""
    F = point.field
    return [
        tuple(F.apply_derivation(j, yi) / yi for yi in point.y)
        for j in range(F.num_derivations)
    ]


def gamma_member(point: TangentPoint) -> bool:
    F = point.field
    for j in range(F.num_derivations):
        for xi, yi in zip(point.x, point.y):
            if F.apply_derivation(j, xi) * yi != F.apply_derivation(j, yi):
                return False
    return True


class QuotientMap:
    """A surjection onto a k-torus, given by a full-row-rank integer matrix."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Sequence[Sequence[int]]):
        rows = [list(map(int, r)) for r in matrix]
        if not rows:
            raise InvalidPresentationError("empty quotient matrix")
        if len(hnf(rows)) != len(rows):
            raise InvalidPresentationError("quotient matrix must have full row rank")
        self.matrix = tuple(tuple(r) for r in rows)

    @property
    def k(self) -> int:
        return len(self.matrix)

    @property
    def n(self) -> int:
        return len(self.matrix[0])

    def character_lattice(self) -> IntLattice:
        return IntLattice(self.n, self.matrix)

    def __repr__(self):
        return f"QuotientMap({[list(r) for r in self.matrix]})"


def power_product(y: Sequence[RationalFunction], exponents: Sequence[int]) -> RationalFunction:
    """y^m with integer (possibly negative) exponents."""
    out = None
    for yi, e in zip(y, exponents):
        if e == 0:
            continue
        p = yi**e
        out = p if out is None else out * p
    if out is None:
        first = y[0] if y else None
        if first is None:
            raise ValueError("empty product with no ambient field")
        return first / first
    return out


def linear_combination(x: Sequence[RationalFunction], coeffs: Sequence[int]) -> RationalFunction:
    out = None
    for xi, c in zip(x, coeffs):
        if c == 0:
            continue
        p = xi * c
        out = p if out is None else out + p
    if out is None:
        return x[0] - x[0]
    return out


def tangent_map(q: QuotientMap, point: TangentPoint) -> TangentPoint:
    if q.n != point.n:
        raise InvalidPresentationError("arity mismatch")
    new_x = [linear_combination(point.x, row) for row in q.matrix]
    new_y = [power_product(point.y, row) for row in q.matrix]
    return TangentPoint(point.field, new_x, new_y)


def group_op(p: TangentPoint, q: TangentPoint) -> TangentPoint:
    if p.n != q.n or p.field is not q.field:
        raise InvalidPresentationError("points live in different bundles")
    return TangentPoint(
        p.field,
        [a + b for a, b in zip(p.x, q.x)],
        [a * b for a, b in zip(p.y, q.y)],
    )


def inverse(p: TangentPoint) -> TangentPoint:
    return TangentPoint(p.field, [-a for a in p.x], [1 / a for a in p.y])


def identity_point(field: DiffField, n: int) -> TangentPoint:
    return TangentPoint(field, [field.zero()] * n, [field.one()] * n)
