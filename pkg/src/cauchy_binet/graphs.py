"""Graphs, clique complexes and their operators.

Vertices are ``0..n-1`` and every edge is oriented from its lower to its
higher endpoint. Simplices are sorted vertex tuples; a complex indexes them
by dimension first and lexicographically within a dimension, which makes
the Dirac operator's degree blocks contiguous.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .charpoly import pseudo_det
from .errors import BudgetExceeded, GraphError, ParseError
from .exact import Matrix, det, rank

DEFAULT_SIMPLEX_BUDGET = 100_000
DEFAULT_EDGE_BUDGET = 20


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{self.n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def neighbors(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_connected(self) -> bool:
        return self.n > 0 and len(_components(self.n, self.edges)) == 1


def _components(n: int, edges) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return list(groups.values())


def parse_graph(text: str) -> Graph:
    """Read the edge-list format: a vertex count, then one ``u v`` per line.

    ``#`` starts a comment; blank lines are ignored.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty edge list: missing vertex-count header")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"line {lineno}: expected a vertex count, got {head!r}") from None
    edges = []
    for lineno, body in lines[1:]:
        parts = body.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {body!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {body!r}") from None
        edges.append((u, v))
    try:
        return Graph(n, tuple(edges))
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges]) + "\n"


# -- scalar operators ---------------------------------------------------------


def incidence_matrix(g: Graph) -> Matrix:
    """|E| x |V| gradient: the row of edge (u, v) is -1 at u and +1 at v."""
    rows = []
    for u, v in g.edges:
        r = [0] * g.n
        r[u], r[v] = -1, 1
        rows.append(r)
    return Matrix(rows, cols=g.n)


def scalar_laplacian(g: Graph) -> Matrix:
    """Degree matrix minus adjacency matrix."""
    L = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    return Matrix(L, cols=g.n)


def spanning_tree_count(g: Graph) -> Fraction:
    L = scalar_laplacian(g)
    kernel = g.n - rank(L)
    if kernel != 1:
        raise GraphError(f"graph is not connected: Laplacian kernel has dimension {kernel}")
    return pseudo_det(L) / g.n


def rooted_forest_count(g: Graph) -> Fraction:
    """``det(1 + L)``."""
    return det(Matrix.identity(g.n) + scalar_laplacian(g))


def _check_edges(g: Graph, max_edges: int) -> None:
    if len(g.edges) > max_edges:
        raise BudgetExceeded("brute-force edge count", len(g.edges), max_edges)


def brute_force_tree_count(g: Graph, max_edges: int = DEFAULT_EDGE_BUDGET) -> int:
    """Count spanning trees by trying every (n-1)-edge subset."""
    _check_edges(g, max_edges)
    if g.n == 0:
        return 0
    count = 0
    for subset in combinations(g.edges, g.n - 1):
        parent = list(range(g.n))
        ok = True
        for u, v in subset:
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u == v:
                ok = False
                break
            parent[u] = v
        count += ok
    return count


def brute_force_rooted_forest_count(g: Graph, max_edges: int = DEFAULT_EDGE_BUDGET) -> int:
    """Sum over acyclic edge subsets of the product of their tree sizes.

    Each tree of a forest picks one root, and an isolated vertex is a tree
    with one root choice.
    """
    _check_edges(g, max_edges)
    parent = list(range(g.n))
    size = [1] * g.n
    edges = g.edges

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def walk(i: int) -> int:
        if i == len(edges):
            prod = 1
            for x in range(g.n):
                if parent[x] == x:
                    prod *= size[x]
            return prod
        total = walk(i + 1)
        u, v = find(edges[i][0]), find(edges[i][1])
        if u != v:
            if size[u] < size[v]:
                u, v = v, u
            parent[v] = u
            size[u] += size[v]
            total += walk(i + 1)
            size[u] -= size[v]
            parent[v] = v
        return total

    return walk(0)


# -- clique complex -----------------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplices grouped by dimension, each group sorted lexicographically."""

    simplices: tuple[tuple[tuple[int, ...], ...], ...]
    index: dict = field(init=False, repr=False, compare=False, hash=False)
    offsets: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index, offsets = {}, []
        for level in self.simplices:
            offsets.append(len(index))
            for s in level:
                index[s] = len(index)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "offsets", tuple(offsets))

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def counts(self) -> tuple[int, ...]:
        """Number of simplices of each dimension (the f-vector)."""
        return tuple(len(level) for level in self.simplices)

    @property
    def size(self) -> int:
        return len(self.index)

    def all_simplices(self) -> list[tuple[int, ...]]:
        return [s for level in self.simplices for s in level]


def clique_complex(g: Graph, budget: int = DEFAULT_SIMPLEX_BUDGET) -> SimplicialComplex:
    """Every complete subgraph of ``g`` as a simplex."""
    adj = g.neighbors()
    levels = [[(v,) for v in range(g.n)]]
    total = g.n
    if total > budget:
        raise BudgetExceeded("clique complex simplices", total, budget)
    while levels[-1]:
        nxt = []
        for s in levels[-1]:
            common = set.intersection(*(adj[v] for v in s))
            for w in sorted(x for x in common if x > s[-1]):
                nxt.append(s + (w,))
        if not nxt:
            break
        total += len(nxt)
        if total > budget:
            raise BudgetExceeded("clique complex simplices", total, budget)
        nxt.sort()
        levels.append(nxt)
    if not levels[0]:
        levels = []
    return SimplicialComplex(tuple(tuple(level) for level in levels))


def boundary_operator(c: SimplicialComplex, d: int) -> Matrix:
    """Boundary from d-simplices to (d-1)-simplices.

    The column of ``(v0 < ... < vd)`` has ``(-1)**i`` at the face omitting ``vi``.
    """
    if not 1 <= d <= c.dim:
        raise ValueError(f"dimension {d} outside 1..{c.dim}")
    lower, upper = c.simplices[d - 1], c.simplices[d]
    pos = {s: i for i, s in enumerate(lower)}
    M = [[0] * len(upper) for _ in lower]
    for j, s in enumerate(upper):
        for i in range(d + 1):
            M[pos[s[:i] + s[i + 1 :]]][j] = -1 if i % 2 else 1
    return Matrix(M, cols=len(upper))


def dirac_operator(c: SimplicialComplex) -> Matrix:
    """``d + d^T`` on all simplices in global index order."""
    v = c.size
    D = [[0] * v for _ in range(v)]
    for d in range(1, c.dim + 1):
        B = boundary_operator(c, d)
        lo, hi = c.offsets[d - 1], c.offsets[d]
        for i in range(B.rows):
            for j in range(B.cols):
                x = B[i, j]
                if x:
                    D[lo + i][hi + j] = x
                    D[hi + j][lo + i] = x
    return Matrix(D, cols=v)


def form_laplacian_blocks(c: SimplicialComplex, D: Matrix | None = None) -> list[Matrix]:
    """Diagonal blocks of ``D @ D``, one per form degree."""
    if D is None:
        D = dirac_operator(c)
    L = D @ D
    ends = list(c.offsets[1:]) + [c.size]
    return [L.submatrix(range(a, b), range(a, b)) for a, b in zip(c.offsets, ends)]


def betti_numbers(c: SimplicialComplex) -> list[int]:
    """Kernel dimension of each degree block of the form Laplacian."""
    return [block.rows - rank(block) for block in form_laplacian_blocks(c)]


def hodge_kernel_dim(c: SimplicialComplex) -> int:
    """Kernel dimension of the full form Laplacian ``D @ D``."""
    D = dirac_operator(c)
    return c.size - rank(D @ D)


def euler_characteristic_check(c: SimplicialComplex) -> tuple[int, int]:
    """(alternating sum of Betti numbers, alternating sum of simplex counts)."""
    b = betti_numbers(c)
    return (
        sum((-1) ** k * x for k, x in enumerate(b)),
        sum((-1) ** k * x for k, x in enumerate(c.counts)),
    )


def simplex_graph(g: Graph, budget: int = DEFAULT_SIMPLEX_BUDGET) -> Graph:
    """Graph on the simplices of ``g``; adjacency is codimension-one containment."""
    c = clique_complex(g, budget)
    edges = []
    for d in range(1, c.dim + 1):
        for s in c.simplices[d]:
            j = c.index[s]
            for i in range(d + 1):
                edges.append((c.index[s[:i] + s[i + 1 :]], j))
    return Graph(c.size, tuple(edges))


# -- named families -----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))
