"""Exact computation with the exponential differential equation of algebraic tori.

The library works over finitely presented differential fields F = Q(z1,...,zk)
and makes the following executable at desk scale: membership in the solution
set Gamma of D x = D y / y inside the tangent bundle of a torus, predimension
and group-rank bookkeeping with subgroup witnesses, the Hrushovski-style
pregeometry on finite configurations, rotundity analysis of subvarieties of
the tangent bundle, constructive extension of derivations along rotund
parametrizations, and instance-level atypical-intersection analysis.

All arithmetic is exact (rationals, sparse polynomials, integer lattices);
there is no floating point anywhere.
"""

__version__ = "0.1.0"
