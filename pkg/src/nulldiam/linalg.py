"""Exact integer linear algebra for adjacency spectra.

Everything here runs on arbitrary-precision integers (rationals for the
polynomial gcd); there is no floating point, so rank, nullity and
eigenvalue multiplicities are tolerance-free.  Two independent channels
are kept on purpose: fraction-free Gaussian elimination for ranks, and the
Faddeev-LeVerrier characteristic polynomial for cross checks, so a bug in
one cannot silently confirm itself through the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import Graph


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of Python ints (adjacency matrices and their shifts)."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for row in self.entries:
            if len(row) != len(self.entries):
                raise ValueError("matrix must be square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def order(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class IntPolynomial:
    """Monic integer polynomial, coefficients ascending (c0..cn, cn = 1)."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients or self.coefficients[-1] != 1:
            raise ValueError("expected a monic polynomial")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def adjacency_matrix(g: Graph) -> IntMatrix:
    return IntMatrix(
        tuple(tuple(g.rows[i] >> j & 1 for j in range(g.n)) for i in range(g.n))
    )


def shifted_adjacency(g: Graph, mu: int) -> IntMatrix:
    """A(g) - mu*I as an exact integer matrix."""
    return IntMatrix(
        tuple(
            tuple((g.rows[i] >> j & 1) - (mu if i == j else 0) for j in range(g.n))
            for i in range(g.n)
        )
    )


def rank_exact(m: IntMatrix) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination.

    Row pivoting with column skipping; every division is exact by the
    Sylvester identity, so intermediate entries stay integral.
    """
    n = m.order
    a = [list(row) for row in m.entries]
    rank = 0
    prev = 1
    for col in range(n):
        pivot_row = None
        for r in range(rank, n):
            if a[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        piv = a[rank][col]
        top = a[rank]
        for i in range(rank + 1, n):
            ai = a[i]
            f = ai[col]
            for j in range(col + 1, n):
                ai[j] = (ai[j] * piv - f * top[j]) // prev
            ai[col] = 0
        prev = piv
        rank += 1
    return rank


def rank_mod_p(m: IntMatrix, p: int) -> int:
    """Rank over GF(p) for an odd prime p.

    Always at most the rational rank; equality holds unless p divides the
    determinant of every maximal nonsingular minor, which makes this a
    cheap independent witness for ``rank_exact``.
    """
    if p <= 2 or not _is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    n = m.order
    a = [[x % p for x in row] for row in m.entries]
    rank = 0
    for col in range(n):
        pivot_row = None
        for r in range(rank, n):
            if a[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        inv = pow(a[rank][col], -1, p)
        top = [x * inv % p for x in a[rank]]
        a[rank] = top
        for i in range(rank + 1, n):
            f = a[i][col]
            if f:
                a[i] = [(x - f * t) % p for x, t in zip(a[i], top)]
        rank += 1
    return rank


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def verified_rank(m: IntMatrix, primes: Sequence[int] = (65521, 32003, 1000003)) -> tuple[int, int]:
    """Rank with a modular witness: (rank, prime that confirmed it).

    Tries the given primes in order until one reproduces the exact rank;
    with unit-sized entries a full miss indicates an elimination bug, so
    it fails loudly instead of returning.
    """
    r = rank_exact(m)
    for p in primes:
        if rank_mod_p(m, p) == r:
            return r, p
    raise ArithmeticError(f"no prime in {tuple(primes)} confirmed rank {r}")


def nullity(g: Graph) -> int:
    """Multiplicity of eigenvalue 0, computed as n - rank(A)."""
    return g.n - rank_exact(adjacency_matrix(g))


def integer_eigenvalue_multiplicity(g: Graph, mu: int) -> int:
    """Multiplicity of the integer eigenvalue ``mu``: n - rank(A - mu*I)."""
    return g.n - rank_exact(shifted_adjacency(g, mu))


def char_poly(m: IntMatrix) -> IntPolynomial:
    """Exact characteristic polynomial det(xI - m) via Faddeev-LeVerrier.

    Uses only matrix products and traces (no elimination), which keeps it
    independent of ``rank_exact``.  The trace divisions are exact for
    integer input; a nonzero remainder would be a hard bug and raises.
    """
    n = m.order
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    a = [list(row) for row in m.entries]
    work = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        prod = _matmul(a, work)
        trace = sum(prod[i][i] for i in range(n))
        q, r = divmod(-trace, k)
        if r:
            raise ArithmeticError("inexact trace division in Faddeev-LeVerrier")
        coeffs[n - k] = q
        if k < n:
            work = prod
            for i in range(n):
                work[i][i] += q
    return IntPolynomial(tuple(coeffs))


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def zero_root_multiplicity(p: IntPolynomial) -> int:
    """Multiplicity of the root 0: index of the lowest nonzero coefficient."""
    for i, c in enumerate(p.coefficients):
        if c:
            return i
    raise ValueError("the zero polynomial has no root multiplicities")


def distinct_eigenvalue_count(g: Graph) -> int:
    """Number of distinct eigenvalues: degree of the square-free part of
    the characteristic polynomial, deg p - deg gcd(p, p')."""
    p = [Fraction(c) for c in char_poly(adjacency_matrix(g)).coefficients]
    dp = [i * c for i, c in enumerate(p)][1:]
    return (len(p) - 1) - _poly_degree(_poly_gcd(p, dp))


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_degree(p: list[Fraction]) -> int:
    return len(p) - 1 if p else -1


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    db, lead = _poly_degree(b), b[-1]
    while _poly_degree(a) >= db:
        f = a[-1] / lead
        shift = _poly_degree(a) - db
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        _poly_trim(a)
    return a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _poly_trim(a[:]), _poly_trim(b[:])
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def path_nullity(m: int) -> int:
    """Nullity of the path on ``m`` vertices: 1 for odd ``m``, else 0."""
    if m < 1:
        raise ValueError("a path needs at least one vertex")
    return m % 2


def cycle_nullity(m: int) -> int:
    """Nullity of the cycle on ``m`` vertices: 2 when 4 | m, else 0."""
    if m < 3:
        raise ValueError("a cycle needs at least three vertices")
    return 2 if m % 4 == 0 else 0
