import random
from fractions import Fraction

import pytest

from expdiff.errors import BudgetExceededError
from expdiff.groebner import (
    Budgets,
    Ideal,
    eliminate,
    groebner,
    ideal_contains,
    ideal_dimension,
    is_unit_ideal,
    radical_contains,
    verify_cached_basis,
)
from expdiff.multipoly import GREVLEX, LEX, MultiPoly


def mk(vars_, s=None):
    return {name: MultiPoly.var(vars_, name) for name in vars_}


def test_groebner_factors_out_common_root():
    v = ("x",)
    x = MultiPoly.var(v, "x")
    gb = groebner(Ideal(v, [x**2 - 1, x - 1]), LEX)
    assert list(gb.basis) == [x - 1]


def test_groebner_already_reduced():
    v = ("x",)
    x = MultiPoly.var(v, "x")
    gb = groebner(Ideal(v, [x]))
    assert list(gb.basis) == [x]


def test_groebner_unit_ideal():
    v = ("x", "y")
    x, y = (MultiPoly.var(v, n) for n in v)
    gb = groebner(Ideal(v, [x * y - 1, x**2]))
    assert list(gb.basis) == [MultiPoly.const(v, 1)]
    assert is_unit_ideal(Ideal(v, [x * y - 1, x**2]))


def test_groebner_mutual_membership_random():
    rng = random.Random(23)
    v = ("x", "y", "z")
    for _ in range(12):
        gens = []
        for _ in range(rng.randint(1, 3)):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                m = tuple(rng.randint(0, 2) for _ in v)
                terms[m] = Fraction(rng.randint(-3, 3))
            p = MultiPoly(v, terms)
            if not p.is_zero:
                gens.append(p)
        if not gens:
            continue
        ideal = Ideal(v, gens)
        gb = groebner(ideal)
        assert verify_cached_basis(gb)


def test_dimension_whole_space_line_empty():
    v = ("x", "y")
    x, y = (MultiPoly.var(v, n) for n in v)
    assert ideal_dimension(Ideal(v, [])) == 2
    assert ideal_dimension(Ideal(v, [x - y])) == 1
    assert ideal_dimension(Ideal(v, [MultiPoly.const(v, 1)])) == -1


def test_dimension_monotone_under_more_generators():
    v = ("x", "y", "z")
    x, y, z = (MultiPoly.var(v, n) for n in v)
    chain = [Ideal(v, []), Ideal(v, [x - y]), Ideal(v, [x - y, z**2 - x])]
    dims = [ideal_dimension(i) for i in chain]
    assert dims == sorted(dims, reverse=True)


def test_dimension_twisted_cubic():
    v = ("x", "y", "z")
    x, y, z = (MultiPoly.var(v, n) for n in v)
    assert ideal_dimension(Ideal(v, [y - x**2, z - x**3])) == 1


def test_eliminate_parabola_image_is_whole_line():
    v = ("x", "y")
    x, y = (MultiPoly.var(v, n) for n in v)
    out = eliminate(Ideal(v, [y - x**2]), ["x"])
    assert out.variables == ("y",)
    assert not out.generators


def test_eliminate_substitution():
    v = ("x", "y")
    x, y = (MultiPoly.var(v, n) for n in v)
    out = eliminate(Ideal(v, [x - 1, y - x]), ["x"])
    yy = MultiPoly.var(("y",), "y")
    assert list(out.basis) == [yy - 1]


def test_eliminate_hyperbola_closure_is_line():
    v = ("x", "y")
    x, y = (MultiPoly.var(v, n) for n in v)
    out = eliminate(Ideal(v, [x * y - 1]), ["x"])
    assert not out.generators


def test_ideal_membership():
    v = ("x", "y")
    x, y = (MultiPoly.var(v, n) for n in v)
    ideal = Ideal(v, [x**2 + y, x * y])
    assert ideal_contains(ideal, (x**2 + y) * (x + 3) + x * y * y)
    assert not ideal_contains(ideal, x)


def test_radical_membership():
    v = ("x", "y")
    x, y = (MultiPoly.var(v, n) for n in v)
    ideal = Ideal(v, [x**2])
    assert radical_contains(ideal, x)
    assert not radical_contains(ideal, y)


def test_budget_pairs_exceeded():
    v = ("x", "y", "z")
    x, y, z = (MultiPoly.var(v, n) for n in v)
    gens = [x**3 - 2 * x * y, x**2 * y - 2 * y**2 + x, z * x - y**2]
    with pytest.raises(BudgetExceededError) as e:
        groebner(Ideal(v, gens), budgets=Budgets(max_degree=40, max_pairs=1))
    assert e.value.budget == "pairs"


def test_budget_degree_exceeded():
    v = ("x",)
    x = MultiPoly.var(v, "x")
    with pytest.raises(BudgetExceededError) as e:
        groebner(Ideal(v, [x**5 - 1]), budgets=Budgets(max_degree=4, max_pairs=100))
    assert e.value.budget == "degree"


def test_cyclic3_known_dimension():
    v = ("a", "b", "c")
    a, b, c = (MultiPoly.var(v, n) for n in v)
    gens = [a + b + c, a * b + b * c + c * a, a * b * c - 1]
    assert ideal_dimension(Ideal(v, gens)) == 0
