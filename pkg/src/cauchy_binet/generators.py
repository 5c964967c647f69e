"""Seeded random instances for the property suites and the self-test."""

from __future__ import annotations

import random
from itertools import combinations

from .exact import Matrix, det, inverse
from .graphs import Graph, complete_graph, cycle_graph, path_graph, star_graph


def int_matrix(rng: random.Random, n: int, m: int, lo: int = -4, hi: int = 4) -> Matrix:
    return Matrix([[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)], cols=m)


def low_rank(rng: random.Random, n: int, m: int, r: int, lo: int = -3, hi: int = 3) -> Matrix:
    """Product of an n x r and an r x m integer matrix (rank at most r)."""
    return int_matrix(rng, n, r, lo, hi) @ int_matrix(rng, r, m, lo, hi)


def invertible(rng: random.Random, n: int, lo: int = -4, hi: int = 4) -> Matrix:
    while True:
        a = int_matrix(rng, n, n, lo, hi)
        if det(a) != 0:
            return a


def nilpotent(rng: random.Random, n: int) -> Matrix:
    """Strictly upper triangular matrix conjugated by a random invertible one."""
    u = Matrix(
        [[rng.randint(-3, 3) if j > i else 0 for j in range(n)] for i in range(n)], cols=n
    )
    s = invertible(rng, n, -2, 2)
    return s @ u @ inverse(s)


def square(rng: random.Random, n: int) -> Matrix:
    """A square matrix drawn from a mix of full-rank, low-rank and nilpotent cases."""
    kind = rng.randrange(4)
    if kind == 0:
        return int_matrix(rng, n, n)
    if kind == 1:
        return low_rank(rng, n, n, rng.randint(0, max(n - 1, 0)))
    if kind == 2:
        return nilpotent(rng, n)
    # a nilpotent part next to an invertible one, mixed by similarity
    k = rng.randint(0, n)
    blocks = [[0] * n for _ in range(n)]
    inv = int_matrix(rng, k, k)
    for i in range(k):
        for j in range(k):
            blocks[i][j] = inv[i, j]
    for i in range(k, n):
        for j in range(i + 1, n):
            blocks[i][j] = rng.randint(-2, 2)
    s = invertible(rng, n, -2, 2)
    return s @ Matrix(blocks, cols=n) @ inverse(s)


def normal(rng: random.Random, n: int) -> Matrix:
    """Random real normal matrix: symmetric, skew-symmetric or circulant."""
    kind = rng.randrange(3)
    if kind == 0:
        b = int_matrix(rng, n, rng.randint(0, n), -3, 3)
        return b @ b.T if rng.random() < 0.5 else b @ Matrix.diag(
            [rng.choice([-2, -1, 1, 2]) for _ in range(b.cols)]
        ) @ b.T
    if kind == 1:
        b = low_rank(rng, n, n, rng.randint(0, n))
        return b - b.T
    c = [rng.randint(-3, 3) for _ in range(n)]
    return Matrix([[c[(j - i) % n] for j in range(n)] for i in range(n)], cols=n)


def skew(rng: random.Random, n: int) -> Matrix:
    """Integer skew-symmetric matrix whose rank varies from 0 to n."""
    r = rng.randint(0, n)
    b, c = int_matrix(rng, n, r, -3, 3), int_matrix(rng, n, r, -3, 3)
    s = b @ c.T
    return s - s.T


def connected_graph(rng: random.Random, max_edges: int = 16, max_vertices: int = 9) -> Graph:
    """Erdos-Renyi graph conditioned on being connected with few edges."""
    while True:
        n = rng.randint(3, max_vertices)
        p = rng.uniform(0.25, 0.7)
        edges = tuple(e for e in combinations(range(n), 2) if rng.random() < p)
        g = Graph(n, edges)
        if len(edges) <= max_edges and g.is_connected():
            return g


def graph_corpus(seed: int = 0, random_graphs: int = 30) -> list[tuple[str, Graph]]:
    """Named families plus seeded random connected graphs, all with <= 16 edges."""
    out = [(f"K{n}", complete_graph(n)) for n in range(2, 6)]
    out += [(f"C{n}", cycle_graph(n)) for n in range(3, 9)]
    out += [(f"P{n}", path_graph(n)) for n in range(2, 9)]
    out += [(f"S{k}", star_graph(k)) for k in range(2, 7)]
    rng = random.Random(seed)
    out += [(f"ER{i}", connected_graph(rng)) for i in range(random_graphs)]
    return out
