"""Integer lattices: Hermite normal form, integer kernels, saturation.

A lattice is stored by a basis in row-style HNF (pivots positive, entries
above a pivot reduced into [0, pivot), zero rows dropped), which makes the
representation canonical: two lattices are equal iff their bases are.
Kernel lattices come out saturated automatically; ``saturate`` uses the
double-kernel construction for arbitrary input bases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def xgcd(a: int, b: int):
    """Returns (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def hnf_with_transform(rows: Sequence[Sequence[int]]):
    """Row HNF with unimodular transform: returns (H, U) with U @ A == H.

    H keeps its zero rows (at the bottom) so U rows stay aligned.
    """
    H = [list(map(int, r)) for r in rows]
    m = len(H)
    n = len(H[0]) if m else 0
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    pivot_row = 0
    pivot_cols = []
    for col in range(n):
        # clear column `col` below pivot_row down to a single entry
        while True:
            live = [i for i in range(pivot_row, m) if H[i][col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda i: (abs(H[i][col]), i))
            i, j = live[0], live[1]
            a, b = H[i][col], H[j][col]
            g, s, t = xgcd(a, b)
            ag, bg = a // g, b // g
            H[i], H[j] = (
                [s * p + t * q for p, q in zip(H[i], H[j])],
                [-bg * p + ag * q for p, q in zip(H[i], H[j])],
            )
            U[i], U[j] = (
                [s * p + t * q for p, q in zip(U[i], U[j])],
                [-bg * p + ag * q for p, q in zip(U[i], U[j])],
            )
        live = [i for i in range(pivot_row, m) if H[i][col] != 0]
        if not live:
            continue
        i = live[0]
        if i != pivot_row:
            H[i], H[pivot_row] = H[pivot_row], H[i]
            U[i], U[pivot_row] = U[pivot_row], U[i]
        if H[pivot_row][col] < 0:
            H[pivot_row] = [-x for x in H[pivot_row]]
            U[pivot_row] = [-x for x in U[pivot_row]]
        pivot_cols.append((pivot_row, col))
        pivot_row += 1
        if pivot_row == m:
            break
    # reduce entries above each pivot into [0, pivot)
    for r, c in pivot_cols:
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
    return H, U


def hnf(rows: Sequence[Sequence[int]]):
    """Canonical HNF basis rows (zero rows dropped)."""
    if not rows:
        return []
    H, _ = hnf_with_transform(rows)
    return [r for r in H if any(r)]


def int_kernel(mat: Sequence[Sequence[int]], n: int | None = None):
    """Basis of {v in Z^n : mat @ v == 0}; saturated, HNF-canonical.

    ``n`` is required when ``mat`` has no rows.
    """
    if not mat:
        if n is None:
            raise ValueError("ambient dimension required for an empty matrix")
        return [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    ncols = len(mat[0])
    transposed = [[mat[i][j] for i in range(len(mat))] for j in range(ncols)]
    H, U = hnf_with_transform(transposed)
    kernel = [U[i] for i in range(len(H)) if not any(H[i])]
    return hnf(kernel)


class IntLattice:
    """Sublattice of Z^n with a canonical HNF basis."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, rows: Iterable[Sequence[int]] = (), _canonical=False):
        self.ambient = ambient
        rows = [list(map(int, r)) for r in rows]
        for r in rows:
            if len(r) != ambient:
                raise ValueError("row length does not match ambient rank")
        if _canonical:
            self.basis = tuple(tuple(r) for r in rows)
        else:
            self.basis = tuple(tuple(r) for r in hnf(rows))

    @classmethod
    def zero(cls, ambient: int) -> "IntLattice":
        return cls(ambient, (), _canonical=True)

    @classmethod
    def kernel_of(cls, mat: Sequence[Sequence[int]], ambient: int) -> "IntLattice":
        return cls(ambient, int_kernel(mat, ambient), _canonical=True)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def contains(self, vec: Sequence[int]) -> bool:
        v = list(map(int, vec))
        if len(v) != self.ambient:
            return False
        for row in self.basis:
            c = next(j for j, x in enumerate(row) if x)
            q, r = divmod(v[c], row[c])
            if r != 0:
                return False
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def saturate(self) -> "IntLattice":
        """Smallest saturated lattice containing this one (double kernel)."""
        if self.is_zero:
            return self
        ortho = int_kernel(list(self.basis), self.ambient)
        if not ortho:
            return IntLattice(
                self.ambient,
                [[1 if j == i else 0 for j in range(self.ambient)] for i in range(self.ambient)],
                _canonical=True,
            )
        return IntLattice.kernel_of(ortho, self.ambient)

    @property
    def is_saturated(self) -> bool:
        return self.saturate() == self

    def __eq__(self, other):
        if not isinstance(other, IntLattice):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"IntLattice({self.ambient}, {[list(r) for r in self.basis]})"


def lattice_kernel(mat: Sequence[Sequence[int]], ambient: int | None = None) -> IntLattice:
    """Saturated lattice {m : mat @ m == 0}."""
    if mat:
        ambient = len(mat[0])
    if ambient is None:
        raise ValueError("ambient dimension required")
    return IntLattice.kernel_of(mat, ambient)
