"""Ideals and Groebner bases (Buchberger), dimension and elimination.

The engine is deliberately plain: normal-strategy pair selection plus the
two classic pair-dropping criteria.  Resource budgets (total degree of any
basis element, number of S-pairs processed) are hard limits; hitting one
raises, it never returns a wrong basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BudgetExceededError
from .multipoly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    MultiPoly,
    _monomial_div,
    _monomial_lcm,
    _monomial_mul,
    block_order,
    reduce_poly,
)


@dataclass(frozen=True)
class Budgets:
    max_degree: int = 40
    max_pairs: int = 200_000


DEFAULT_BUDGETS = Budgets()


class Ideal:
    """An ideal of Q[variables] given by generators, with an optional cached
    reduced Groebner basis (and the order it was computed in)."""

    __slots__ = ("variables", "generators", "basis", "order")

    def __init__(self, variables: Sequence[str], generators: Sequence[MultiPoly],
                 basis: Sequence[MultiPoly] | None = None, order: MonomialOrder | None = None):
        self.variables = tuple(variables)
        gens = []
        for g in generators:
            if g.variables != self.variables:
                raise ValueError("generator over a different variable tuple")
            if not g.is_zero:
                gens.append(g)
        self.generators = tuple(gens)
        self.basis = tuple(basis) if basis is not None else None
        self.order = order

    def __repr__(self):
        return f"Ideal({list(self.variables)}, [{', '.join(map(str, self.generators))}])"

    @property
    def is_zero_ideal(self) -> bool:
        return not self.generators

    def with_poly(self, *polys: MultiPoly) -> "Ideal":
        return Ideal(self.variables, list(self.generators) + list(polys))


def spoly(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    lmf = f.leading_monomial(order)
    lmg = g.leading_monomial(order)
    lcm = _monomial_lcm(lmf, lmg)
    mf = _monomial_div(lcm, lmf)
    mg = _monomial_div(lcm, lmg)
    return f.mul_term(mf, 1 / f.terms[lmf]) - g.mul_term(mg, 1 / g.terms[lmg])


def _buchberger(gens: Sequence[MultiPoly], order: MonomialOrder, budgets: Budgets):
    G: list[MultiPoly] = []
    lead: list = []
    for f in gens:
        if not f.is_zero:
            G.append(f.monic(order))
            lead.append(G[-1].leading_monomial(order))
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    processed = 0
    while pairs:
        processed += 1
        if processed > budgets.max_pairs:
            raise BudgetExceededError("pairs", budgets.max_pairs)
        i, j = min(pairs, key=lambda p: (order.key(_monomial_lcm(lead[p[0]], lead[p[1]])), p))
        pairs.discard((i, j))
        lcm = _monomial_lcm(lead[i], lead[j])
        # product criterion
        if lcm == _monomial_mul(lead[i], lead[j]):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _monomial_div(lcm, lead[k]) is not None:
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            continue
        r = reduce_poly(spoly(G[i], G[j], order), G, order)
        if r.is_zero:
            continue
        if r.total_degree() > budgets.max_degree:
            raise BudgetExceededError("degree", budgets.max_degree)
        r = r.monic(order)
        t = len(G)
        G.append(r)
        lead.append(r.leading_monomial(order))
        pairs.update((k, t) for k in range(t))
    return G


def _interreduce(G: list[MultiPoly], order: MonomialOrder) -> list[MultiPoly]:
    # minimal: drop any element whose lead is divisible by another lead
    G = [g for g in G if not g.is_zero]
    G.sort(key=lambda g: order.key(g.leading_monomial(order)))
    minimal: list[MultiPoly] = []
    for g in G:
        lm = g.leading_monomial(order)
        if all(_monomial_div(lm, h.leading_monomial(order)) is None for h in minimal):
            minimal.append(g)
    # reduced: every element fully reduced against the others
    out = []
    for i, g in enumerate(minimal):
        rest = minimal[:i] + minimal[i + 1:]
        r = reduce_poly(g, rest, order) if rest else g
        out.append(r.monic(order))
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


def groebner(ideal: Ideal, order: MonomialOrder = GREVLEX,
             budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """Ideal with a cached reduced Groebner basis in the given order."""
    if ideal.basis is not None and ideal.order is not None and ideal.order.name == order.name:
        return ideal
    if ideal.is_zero_ideal:
        return Ideal(ideal.variables, (), basis=(), order=order)
    for g in ideal.generators:
        if g.total_degree() > budgets.max_degree:
            raise BudgetExceededError("degree", budgets.max_degree)
    G = _buchberger(ideal.generators, order, budgets)
    G = _interreduce(G, order)
    if any(g.is_constant for g in G):
        G = [MultiPoly.const(ideal.variables, 1)]
    return Ideal(ideal.variables, ideal.generators, basis=G, order=order)


def ideal_contains(ideal: Ideal, f: MultiPoly, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    gb = groebner(ideal, ideal.order or GREVLEX, budgets)
    if not gb.basis:
        return f.is_zero
    return reduce_poly(f, list(gb.basis), gb.order).is_zero


def is_unit_ideal(ideal: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    gb = groebner(ideal, ideal.order or GREVLEX, budgets)
    return any(g.is_constant and not g.is_zero for g in gb.basis)


def ideal_dimension(ideal: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Krull dimension of the affine variety; -1 for the unit ideal.

    Computed from the leading-term ideal of a grevlex basis: the dimension
    is the largest size of a variable subset meeting no leading monomial's
    support.
    """
    gb = groebner(ideal, GREVLEX, budgets)
    n = len(ideal.variables)
    if gb.basis is None or not gb.basis:
        return n
    if any(g.is_constant for g in gb.basis):
        return -1
    lead_supports = []
    for g in gb.basis:
        lm = g.leading_monomial(GREVLEX)
        lead_supports.append(frozenset(i for i, e in enumerate(lm) if e))
    for size in range(n, -1, -1):
        for subset in _subsets_of_size(n, size):
            if all(not s <= subset for s in lead_supports):
                return size
    return 0


def _subsets_of_size(n: int, size: int):
    from itertools import combinations

    for combo in combinations(range(n), size):
        yield frozenset(combo)


def eliminate(ideal: Ideal, drop: Sequence[str], budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """Elimination ideal in the remaining variables (block order, drop first)."""
    drop = list(drop)
    for name in drop:
        if name not in ideal.variables:
            raise ValueError(f"unknown variable '{name}'")
    keep = [v for v in ideal.variables if v not in drop]
    if not drop:
        return ideal
    reordered = list(drop) + keep
    gens = [g.remap(reordered) for g in ideal.generators]
    gb = groebner(Ideal(reordered, gens), block_order(len(drop)), budgets)
    kept = []
    dropset = set(drop)
    for g in gb.basis or ():
        if not (g.support() & dropset):
            kept.append(g.drop_to(keep))
    return Ideal(keep, kept, basis=kept, order=gb.order)


def radical_contains(ideal: Ideal, f: MultiPoly, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Membership of f in the radical, via the auxiliary-variable trick."""
    if f.is_zero:
        return True
    aux = "_rad"
    assert aux not in ideal.variables
    variables = ideal.variables + (aux,)
    gens = [g.remap(variables) for g in ideal.generators]
    gens.append(f.remap(variables) * MultiPoly.var(variables, aux) - 1)
    return is_unit_ideal(Ideal(variables, gens), budgets)


def verify_cached_basis(ideal: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Mutual-membership check: cached basis and generators span the same ideal."""
    if ideal.basis is None:
        return True
    order = ideal.order or GREVLEX
    basis = list(ideal.basis)
    for g in ideal.generators:
        if basis:
            if not reduce_poly(g, basis, order).is_zero:
                return False
        elif not g.is_zero:
            return False
    gen_ideal = Ideal(ideal.variables, ideal.generators)
    return all(ideal_contains(gen_ideal, b, budgets) for b in basis)
