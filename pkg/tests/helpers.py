"""Independent oracles for the tests.

Everything here is computed from first principles (plain Gaussian
elimination over Fractions, Leibniz determinants, permutation search) so
the package's production code paths are checked against genuinely
different implementations, not against themselves.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from nulldiam import Graph, to_graph6


def fraction_rank(entries) -> int:
    """Row reduction over exact rationals."""
    a = [[Fraction(x) for x in row] for row in entries]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for r in range(rows):
            if r != rank and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _perm_sign(perm) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def char_poly_leibniz(entries) -> list[int]:
    """det(xI - A) as ascending coefficients, by the Leibniz sum (n <= 6)."""
    n = len(entries)
    total = [0] * (n + 1)
    for perm in permutations(range(n)):
        prod = [_perm_sign(perm)]
        for i in range(n):
            j = perm[i]
            factor = [-entries[i][j], 1] if i == j else [-entries[i][j]]
            prod = _poly_mul(prod, factor)
        for k, c in enumerate(prod):
            total[k] += c
    return total


def root_multiplicity(coeffs: list[int], root: int) -> int:
    """Multiplicity of an integer root, by repeated synthetic division."""
    coeffs = list(coeffs)
    count = 0
    while len(coeffs) > 1 and sum(c * root**k for k, c in enumerate(coeffs)) == 0:
        quotient = [0] * (len(coeffs) - 1)
        carry = 0
        for k in range(len(coeffs) - 1, 0, -1):
            carry = coeffs[k] + carry * root
            quotient[k - 1] = carry
        coeffs = quotient
        count += 1
    return count


def relabel(g: Graph, placement) -> Graph:
    """Graph with vertex ``placement[i]`` moved to position ``i``."""
    n = g.n
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and g.has_edge(placement[i], placement[j]):
                rows[i] |= 1 << j
    return Graph(tuple(rows))


def min_perm_graph6(g: Graph) -> str:
    """Reference canonical form: minimum graph6 over all labelings (tiny n)."""
    return min(to_graph6(relabel(g, p)) for p in permutations(range(g.n)))


def automorphism_count(rows) -> int:
    """Size of the automorphism group by degree-pruned backtracking."""
    n = len(rows)
    deg = [r.bit_count() for r in rows]
    image = [-1] * n
    used = [False] * n
    count = 0

    def assign(v: int) -> None:
        nonlocal count
        if v == n:
            count += 1
            return
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            if all((rows[v] >> u & 1) == (rows[w] >> image[u] & 1) for u in range(v)):
                used[w] = True
                image[v] = w
                assign(v + 1)
                used[w] = False
        image[v] = -1

    assign(0)
    return count


def labeled_connected_count(n: int) -> int:
    """Connected labeled graphs on n vertices by direct enumeration (n <= 6)."""
    if n == 1:
        return 1
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    count = 0
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= rows[low.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        count += seen == full
    return count


def labeled_connected_count_vectorized(n: int) -> int:
    """Same census, bit-parallel with numpy (handles n = 7 in seconds)."""
    import numpy as np

    pairs = list(combinations(range(n), 2))
    codes = np.arange(1 << len(pairs), dtype=np.uint32)
    rows = [np.zeros(1 << len(pairs), dtype=np.uint32) for _ in range(n)]
    for k, (i, j) in enumerate(pairs):
        bit = (codes >> np.uint32(k)) & np.uint32(1)
        rows[i] |= bit << np.uint32(j)
        rows[j] |= bit << np.uint32(i)
    del codes
    reach = np.ones(1 << len(pairs), dtype=np.uint32)
    for _ in range(n):
        nxt = reach.copy()
        for v in range(n):
            has = (reach >> np.uint32(v)) & np.uint32(1)
            nxt |= rows[v] * has
        reach = nxt
    return int((reach == np.uint32((1 << n) - 1)).sum())


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)
