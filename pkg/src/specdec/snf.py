"""Exact integer Smith normal form and finitely generated abelian group helpers.

Everything here runs on arbitrary-precision Python integers: intermediate
entries of the reduction can exceed any fixed width.  Pivots pick the smallest
nonzero absolute value, ties broken by (row, column), so outputs are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence, Union

Matrix = list[list[int]]

SPEC_ALL = "ALL"


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    rows, inner, cols = len(A), len(B), len(B[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        Ai = A[i]
        Oi = out[i]
        for k in range(inner):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(cols):
                    Oi[j] += a * Bk[j]
    return out


def determinant(A: Matrix) -> int:
    """Bareiss fraction-free determinant; exact on Python ints."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass
class SmithDecomposition:
    """U * A * V == D with unimodular U, V and a divisibility-chained diagonal."""

    U: Matrix
    D: Matrix
    V: Matrix

    def diagonal(self) -> list[int]:
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(k)]

    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal() if d not in (0, 1)]


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Diagonalize an integer matrix by unimodular row and column operations.

    The result is re-verified by multiplication and exact determinants before
    being returned.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    D = [[int(x) for x in row] for row in A]
    for row in D:
        if len(row) != cols:
            raise ValueError("matrix is ragged")
    U = identity_matrix(rows)
    V = identity_matrix(cols)

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def row_sub(i, j, q):
        """row_i -= q * row_j."""
        Di, Dj = D[i], D[j]
        for c in range(cols):
            Di[c] -= q * Dj[c]
        Ui, Uj = U[i], U[j]
        for c in range(rows):
            Ui[c] -= q * Uj[c]

    def col_sub(i, j, q):
        """col_i -= q * col_j."""
        for r in D:
            r[i] -= q * r[j]
        for r in V:
            r[i] -= q * r[j]

    def row_negate(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    def pivot_from(t) -> Optional[tuple[int, int]]:
        best = None
        best_val = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(D[i][j])
                if v and (best_val is None or v < best_val):
                    best, best_val = (i, j), v
        return best

    def reduce_from(t0: int) -> None:
        t = t0
        while t < min(rows, cols):
            piv = pivot_from(t)
            if piv is None:
                break
            row_swap(t, piv[0]) if piv[0] != t else None
            col_swap(t, piv[1]) if piv[1] != t else None
            while True:
                if D[t][t] < 0:
                    row_negate(t)
                p = D[t][t]
                dirty = False
                for i in range(t + 1, rows):
                    if D[i][t]:
                        row_sub(i, t, D[i][t] // p)
                        if D[i][t]:
                            dirty = True
                for j in range(t + 1, cols):
                    if D[t][j]:
                        col_sub(j, t, D[t][j] // p)
                        if D[t][j]:
                            dirty = True
                if not dirty:
                    break
                piv = pivot_from(t)
                if piv != (t, t):
                    if piv[0] != t:
                        row_swap(t, piv[0])
                    if piv[1] != t:
                        col_swap(t, piv[1])
            t += 1

    reduce_from(0)
    k = min(rows, cols)
    for guard in range(k * k + 1):
        violation = None
        for i in range(k - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if a and b % a != 0:
                violation = i
                break
        if violation is None:
            break
        i = violation
        col_sub(i, i + 1, -1)  # col_i += col_{i+1}, making the block 2x2 again
        reduce_from(i)
    else:
        raise AssertionError("divisibility pass did not converge")
    for i in range(k):
        if D[i][i] < 0:
            row_negate(i)

    dec = SmithDecomposition(U, D, V)
    _verify(A, dec)
    return dec


def _verify(A: Sequence[Sequence[int]], dec: SmithDecomposition) -> None:
    rows = len(dec.U)
    cols = len(dec.V)
    prod = matmul(matmul(dec.U, [list(map(int, r)) for r in A]), dec.V)
    if prod != dec.D:
        raise AssertionError("U*A*V != D")
    if rows and abs(determinant(dec.U)) != 1:
        raise AssertionError("U is not unimodular")
    if cols and abs(determinant(dec.V)) != 1:
        raise AssertionError("V is not unimodular")
    diag = dec.diagonal()
    for i, d in enumerate(diag):
        if d < 0:
            raise AssertionError("negative diagonal entry")
        if i and diag[i - 1] == 0 and d != 0:
            raise AssertionError("zeros are not trailing")
        if i and diag[i - 1] != 0 and d % diag[i - 1] != 0:
            raise AssertionError("divisibility chain broken")
    k = min(rows, len(dec.D[0]) if dec.D else 0)
    for i in range(len(dec.D)):
        for j in range(len(dec.D[0]) if dec.D else 0):
            if i != j and dec.D[i][j]:
                raise AssertionError("D is not diagonal")


@dataclass(frozen=True)
class FgAbelianType:
    """Free rank plus invariant torsion factors in a divisibility chain."""

    free_rank: int
    torsion: tuple[int, ...]

    def order(self) -> Optional[int]:
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out


def quotient_invariants(ambient_rank: int, generators: Sequence[Sequence[int]]
                        ) -> FgAbelianType:
    """Invariants of Z^r modulo the row span of ``generators``."""
    gens = [list(map(int, row)) for row in generators]
    for row in gens:
        if len(row) != ambient_rank:
            raise ValueError("generator rows must have ambient_rank entries")
    if not gens:
        return FgAbelianType(ambient_rank, ())
    dec = smith_normal_form(gens)
    diag = [d for d in dec.diagonal() if d != 0]
    torsion = tuple(d for d in diag if d > 1)
    return FgAbelianType(ambient_rank - len(diag), torsion)


def is_prime_power(n: int) -> Optional[tuple[int, int]]:
    if n < 2:
        return None
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            return (d, e) if n == 1 else None
        d += 1
    return (n, 1)


def is_prime_subgroup_fg_abelian(ambient_rank: int,
                                 generators: Sequence[Sequence[int]]) -> bool:
    """Whether the quotient by the row span is trivial, Z, or Z/p^n.

    The trivial quotient counts (exponent-zero prime power), mirroring the
    finite-group convention that the total group is always prime.
    """
    inv = quotient_invariants(ambient_rank, generators)
    if inv.free_rank == 0 and not inv.torsion:
        return True
    if inv.free_rank == 1 and not inv.torsion:
        return True
    if inv.free_rank == 0 and len(inv.torsion) == 1:
        return is_prime_power(inv.torsion[0]) is not None
    return False


def spec_of_integers(n: int) -> Union[str, list[tuple[int, int]]]:
    """Prime-power ideals (p, a) of the integers whose generator divides n.

    n = 1 has none; n = 0 lies in every prime-power ideal, reported as the
    symbolic marker ``SPEC_ALL``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return SPEC_ALL
    out = []
    m = n
    d = 2
    while d * d <= m:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        out.extend((d, a) for a in range(1, e + 1))
        d += 1
    if m > 1:
        out.append((m, 1))
    return sorted(out)
