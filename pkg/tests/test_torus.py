import itertools
import random

import pytest

from expdiff.errors import InvalidPresentationError
from expdiff.torus import (
    QuotientMap,
    TangentPoint,
    gamma_member,
    group_op,
    identity_point,
    inverse,
    logd,
    tangent_map,
)

from helpers import make_field


def exp_field():
    # Dt = 1, Du = u, Dw = 2w: u behaves like e^t, w like e^{2t}
    import expdiff.ratfunc as rf

    return make_field(
        ["t", "u", "w"],
        [{"t": 1, "u": "u", "w": lambda v: 2 * rf.RationalFunction.var(v, "w")}],
    )


def test_logd_examples():
    F = exp_field()
    t, u = F.gen("t"), F.gen("u")
    p = TangentPoint(F, [t], [u])
    assert logd(p)[0] == (F.one(),)
    p2 = TangentPoint(F, [t], [t])
    assert logd(p2)[0] == (1 / t,)
    p3 = TangentPoint(F, [t, 2 * t], [u, u**2])
    assert logd(p3)[0] == (F.one(), F.rational(2))


def test_gamma_member_basic():
    F = exp_field()
    t, u = F.gen("t"), F.gen("u")
    assert gamma_member(TangentPoint(F, [t], [u]))
    assert not gamma_member(TangentPoint(F, [t], [t]))
    assert gamma_member(TangentPoint(F, [t, 2 * t], [u, u**2]))


def test_y_must_be_nonzero():
    F = exp_field()
    with pytest.raises(InvalidPresentationError):
        TangentPoint(F, [F.gen("t")], [F.zero()])


def test_tangent_map_examples():
    F = exp_field()
    t, u = F.gen("t"), F.gen("u")
    p = TangentPoint(F, [t, 2 * t], [u, u**2])
    q = tangent_map(QuotientMap([[2, -1]]), p)
    assert q.x == (F.zero(),)
    assert q.y == (F.one(),)
    ident = tangent_map(QuotientMap([[1, 0], [0, 1]]), p)
    assert ident.x == p.x and ident.y == p.y
    s = tangent_map(QuotientMap([[1, 1]]), p)
    assert s.x == (3 * t,)
    assert s.y == (u**3,)


def test_quotient_map_rank_validated():
    with pytest.raises(InvalidPresentationError):
        QuotientMap([[1, 1], [2, 2]])


def test_group_op_and_inverse():
    F = exp_field()
    t, u = F.gen("t"), F.gen("u")
    p = TangentPoint(F, [t], [u])
    double = group_op(p, p)
    assert double.x == (2 * t,)
    assert double.y == (u**2,)
    e = group_op(p, inverse(p))
    ident = identity_point(F, 1)
    assert e.x == ident.x and e.y == ident.y


def gamma_points_pool(F):
    t, u, w = F.gen("t"), F.gen("u"), F.gen("w")
    return [
        TangentPoint(F, [t], [u]),
        TangentPoint(F, [2 * t], [u**2]),
        TangentPoint(F, [2 * t], [w]),
        TangentPoint(F, [t + 1], [3 * u]),
        TangentPoint(F, [F.rational(5)], [F.rational(7)]),
    ]


def test_u2_products_and_inverses_stay_in_gamma():
    F = exp_field()
    pool = gamma_points_pool(F)
    assert all(gamma_member(p) for p in pool)
    for p, q in itertools.combinations(pool, 2):
        assert gamma_member(group_op(p, q))
        assert gamma_member(inverse(p))


def test_u3_constant_points_in_gamma():
    F = exp_field()
    p = TangentPoint(F, [F.rational(3), F.rational(0)], [F.rational(2), F.rational(-1)])
    assert gamma_member(p)


def test_u4_zero_x_forces_constant_y_and_dually():
    F = exp_field()
    t, u = F.gen("t"), F.gen("u")
    # (0, y) in Gamma iff y constant
    assert gamma_member(TangentPoint(F, [F.zero()], [F.rational(4)]))
    assert not gamma_member(TangentPoint(F, [F.zero()], [u]))
    # (x, 1) in Gamma iff x constant
    assert gamma_member(TangentPoint(F, [F.rational(9)], [F.one()]))
    assert not gamma_member(TangentPoint(F, [t], [F.one()]))
    # and whenever membership holds with x = 0, each y_i passes is_constant
    from fractions import Fraction

    p = TangentPoint(F, [F.zero(), F.zero()], [F.rational(4), F.rational(Fraction(1, 3))])
    assert gamma_member(p)
    assert all(F.is_constant(yi) for yi in p.y)


def test_u5_functoriality_random_quotients():
    rng = random.Random(31)
    F = exp_field()
    pool = gamma_points_pool(F)
    two_dim = [
        TangentPoint(F, [t_x.x[0], q.x[0]], [t_x.y[0], q.y[0]])
        for t_x, q in itertools.combinations(pool, 2)
    ]
    for p in two_dim:
        assert gamma_member(p)
        for _ in range(6):
            row = [rng.randint(-2, 2), rng.randint(-2, 2)]
            if not any(row):
                continue
            q = QuotientMap([row])
            assert gamma_member(tangent_map(q, p))


def test_u7_products_split_componentwise():
    F = exp_field()
    t, u, w = F.gen("t"), F.gen("u"), F.gen("w")
    a = TangentPoint(F, [t], [u])
    b = TangentPoint(F, [2 * t], [w])
    prod = TangentPoint(F, [a.x[0], b.x[0]], [a.y[0], b.y[0]])
    assert gamma_member(prod) == (gamma_member(a) and gamma_member(b))
    bad = TangentPoint(F, [t], [t + 1])
    mixed = TangentPoint(F, [a.x[0], bad.x[0]], [a.y[0], bad.y[0]])
    assert not gamma_member(mixed)
