"""Predimension bookkeeping and the Schanuel-property checker.

For a Gamma-point (x, y) in the tangent bundle of the n-torus we compute

  * the relation lattice: integer vectors m with every derivation killing
    m.x (for m in the lattice of a Gamma-point, y^m is then constant too,
    because logd(y^m) = D(m.x));
  * group rank grk = n - rank of that lattice, and the predimension
    delta = td - grk, with td taken as the formal-Jacobian rank over the
    presented transcendence base (exact when the presented constants are
    all the constants, an upper bound otherwise);
  * the witness route: whenever the lattice is nonzero, a canonical small
    character m is emitted together with the values of m.x and y^m, both
    re-verified with the exact constancy test.  Assertions therefore never
    depend on the presented-constants approximation; only the sensitivity
    of the td-based trigger does.

Relative variants are taken over subfields generated by generator subsets,
where membership is decided by formal partials.  The relative relation
lattice demands both m.x and y^m lie in the subfield, which is what lying
in a subfield-coset of a subgroup's tangent bundle means.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Iterable, Sequence

from .difffield import DiffField
from .errors import NotInGammaError, SoundnessAlarmError
from .intlattice import IntLattice, lattice_kernel
from .linalg import rank as matrix_rank
from .multipoly import MultiPoly, poly_lcm
from .ratfunc import RationalFunction
from .torus import TangentPoint, gamma_member, linear_combination, power_product


def integer_kernel_of_function_rows(rows: Sequence[Sequence[RationalFunction]],
                                    width: int) -> IntLattice:
    """Saturated lattice {m in Z^width : sum_i m_i row[i] = 0 for every row}.

    Each functional row is cleared to polynomial numerators over a common
    denominator; monomial coefficients then give rational linear equations
    for m, solved by an integer-kernel computation.
    """
    equations: list[list[Fraction]] = []
    for row in rows:
        if all(f.is_zero for f in row):
            continue
        variables = row[0].variables
        common = MultiPoly.const(variables, 1)
        for f in row:
            if not f.is_zero:
                common = poly_lcm(common, f.den)
        numerators = []
        for f in row:
            if f.is_zero:
                numerators.append(MultiPoly.zero(variables))
            else:
                numerators.append(f.num * common.exact_div(f.den))
        monomials = sorted({m for p in numerators for m in p.terms})
        for mono in monomials:
            equations.append([p.terms.get(mono, Fraction(0)) for p in numerators])
    if not equations:
        return lattice_kernel([], ambient=width)
    int_rows = []
    for eq in equations:
        denlcm = 1
        for c in eq:
            denlcm = denlcm * c.denominator // _gcd(denlcm, c.denominator)
        int_rows.append([int(c * denlcm) for c in eq])
    return lattice_kernel(int_rows, ambient=width)


def _gcd(a: int, b: int) -> int:
    import math

    return math.gcd(a, b)


def ldim_relations(point: TangentPoint, over: frozenset = frozenset()) -> IntLattice:
    """Saturated lattice of Q-linear relations of the x-part.

    over = empty: {m : D_j(m.x) = 0 for all j} — relations modulo the true
    constants, by exact linear algebra over the field.

    over = generator subset A: relations modulo Q(A, constants), decided by
    formal partials with respect to generators outside A; both m.x and y^m
    are required to land in the subfield.
    """
    F = point.field
    n = point.n
    if not over:
        rows = [
            [F.apply_derivation(j, xi) for xi in point.x]
            for j in range(F.num_derivations)
        ]
        return integer_kernel_of_function_rows(rows, n)
    rows = []
    outside = [z for z in F.nonconstant_names if z not in over]
    for z in outside:
        rows.append([xi.partial(z) for xi in point.x])
        rows.append([yi.partial(z) / yi for yi in point.y])
    return integer_kernel_of_function_rows(rows, n)


@dataclass(frozen=True)
class PredimReport:
    n: int
    td_presented: int
    rk_jac: int
    relation_lattice: IntLattice
    grk: int
    delta_presented: int
    witnesses: tuple[tuple[tuple[int, ...], RationalFunction, RationalFunction], ...]
    over: tuple[str, ...] = ()


def _verified_witnesses(point: TangentPoint, lattice: IntLattice):
    """Lattice basis vectors whose m.x and y^m both pass the exact constancy test."""
    F = point.field
    out = []
    for m in lattice.basis:
        s = linear_combination(point.x, m)
        p = power_product(point.y, m)
        if F.is_constant(s) and F.is_constant(p):
            out.append((tuple(m), s, p))
    return tuple(out)


def predim(point: TangentPoint, over: frozenset = frozenset()) -> PredimReport:
    F = point.field
    if not gamma_member(point):
        raise NotInGammaError("predimension is defined on Gamma-points only")
    lattice = ldim_relations(point, over)
    grk = point.n - lattice.rank
    td = F.formal_jacobian_rank(point.x + point.y, exclude=over)
    rk_jac = F.jacobian_rank(point.x + point.y)
    return PredimReport(
        n=point.n,
        td_presented=td,
        rk_jac=rk_jac,
        relation_lattice=lattice,
        grk=grk,
        delta_presented=td - grk,
        witnesses=_verified_witnesses(point, lattice),
        over=tuple(sorted(over)),
    )


def forms_rank(point: TangentPoint) -> int:
    """Rank over F of the n forms dy_i/y_i - dx_i in the presented module
    of differentials (basis dz over nonconstant generators)."""
    F = point.field
    cols = F.nonconstant_names
    mat = []
    for xi, yi in zip(point.x, point.y):
        mat.append([yi.partial(z) / yi - xi.partial(z) for z in cols])
    return matrix_rank(mat)


def select_witness(lattice: IntLattice):
    """Canonical witness: HNF basis vector of least max-norm, ties lexicographic."""
    if lattice.is_zero:
        return None
    return min(lattice.basis, key=lambda m: (max(abs(e) for e in m), m))


@dataclass(frozen=True)
class SchanuelVerdict:
    n: int
    td_presented: int
    rk_jac: int
    trigger: bool
    relation_lattice: IntLattice
    grk: int
    delta_presented: int
    witness: tuple[int, ...] | None
    witness_sum: RationalFunction | None
    witness_product: RationalFunction | None

    @property
    def fired(self) -> bool:
        return self.witness is not None


def schanuel_check(point: TangentPoint) -> SchanuelVerdict:
    """The theorem-level check with witness extraction.

    trigger is td_presented - rk_jac < n.  Whenever the relation lattice is
    nonzero a canonical witness character is emitted with both constancy
    checks re-verified.  trigger with a zero lattice is impossible when the
    presented constants are exact, and raises the soundness alarm.
    """
    F = point.field
    if not gamma_member(point):
        raise NotInGammaError("schanuel check requires a Gamma-point")
    lattice = ldim_relations(point)
    td = F.formal_jacobian_rank(point.x + point.y)
    rk_jac = F.jacobian_rank(point.x + point.y)
    trigger = td - rk_jac < point.n
    witness = select_witness(lattice)
    w_sum = w_prod = None
    if witness is not None:
        w_sum = linear_combination(point.x, witness)
        w_prod = power_product(point.y, witness)
        if not (F.is_constant(w_sum) and F.is_constant(w_prod)):
            # cannot happen for a Gamma-point: logd(y^m) = D(m.x) = 0
            raise SoundnessAlarmError()
    verdict = SchanuelVerdict(
        n=point.n,
        td_presented=td,
        rk_jac=rk_jac,
        trigger=trigger,
        relation_lattice=lattice,
        grk=point.n - lattice.rank,
        delta_presented=td - (point.n - lattice.rank),
        witness=tuple(witness) if witness is not None else None,
        witness_sum=w_sum,
        witness_product=w_prod,
    )
    if trigger and lattice.is_zero:
        raise SoundnessAlarmError(verdict)
    return verdict


def usp_collect(batch: Iterable[tuple[str, TangentPoint]]):
    """Empirical uniform-Schanuel witness collection.

    Returns (families, errors): families maps each family id to the
    deduplicated, canonically ordered set of witness character lattices
    observed over its instances; errors maps family id to a list of
    (index, error code) for items that failed, which do not stop the batch.
    """
    families: dict[str, set] = {}
    errors: dict[str, list] = {}
    counters: dict[str, int] = {}
    for fid, point in batch:
        idx = counters.get(fid, 0)
        counters[fid] = idx + 1
        families.setdefault(fid, set())
        try:
            verdict = schanuel_check(point)
        except (NotInGammaError, SoundnessAlarmError) as e:
            errors.setdefault(fid, []).append((idx, e.code))
            continue
        if verdict.witness is not None:
            families[fid].add(IntLattice(point.n, [list(verdict.witness)]))
    ordered = {
        fid: sorted(lats, key=lambda l: (l.ambient, l.basis))
        for fid, lats in families.items()
    }
    return ordered, errors
