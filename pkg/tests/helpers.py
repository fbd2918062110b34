"""Shared builders for test fields and points."""

from fractions import Fraction

from expdiff.difffield import DiffField
from expdiff.ratfunc import RationalFunction


def make_field(gens, derivations):
    """gens: list of 'name' or ('name', True) for constants.
    derivations: list of dicts {gen_name: expr} where expr is built by a
    callback receiving the variable tuple, or a plain int/Fraction, or a
    string naming a generator (shorthand for that generator).
    """
    norm = []
    for g in gens:
        if isinstance(g, tuple):
            norm.append(g)
        else:
            norm.append((g, False))
    names = tuple(n for n, _ in norm)

    def to_rf(value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, str):
            return RationalFunction.var(names, value)
        if callable(value):
            return value(names)
        return RationalFunction.const(names, value)

    ders = []
    for k, mapping in enumerate(derivations):
        ders.append((f"D{k + 1}" if len(derivations) > 1 else "D",
                     {g: to_rf(v) for g, v in mapping.items()}))
    return DiffField(norm, ders)


def rf(field, expr):
    """Tiny expression helper: expr is a callable on a dict of generators."""
    gens = {name: field.gen(name) for name in field.gen_names}
    return expr(gens)
