"""Immutable bitset graphs: graph6 codec, metrics, twins, and path anatomy.

A graph is stored as one adjacency bitmask per vertex (one machine word,
capped at 64 vertices), so graphs are cheap hashable values and every
derived operation is a pure function.  Metric helpers (diameter, shortest
path enumeration, reduction) reject disconnected input explicitly, while
purely structural helpers (twins, pendants) accept anything, including the
empty graph that vertex-deletion identities produce.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

MAX_VERTICES = 64

#: Default cap on shortest-path enumeration.
DEFAULT_PATH_LIMIT = 10_000


class Graph6Error(ValueError):
    """Malformed graph6 input.

    ``reason`` names the defect: ``"length"`` (truncated or malformed size
    prefix), ``"charset"`` (byte outside the printable graph6 range),
    ``"trailing"`` (extra bytes after the edge bits), ``"padding"``
    (nonzero padding bits), or ``"too-large"`` (more than 64 vertices).
    """

    def __init__(self, message: str, reason: str) -> None:
        super().__init__(message)
        self.reason = reason


class DisconnectedGraphError(ValueError):
    """A metric operation required a connected graph."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is the open neighbourhood of ``v`` as a bitmask.  The
    constructor enforces symmetry and an empty diagonal, so instances are
    always simple graphs.
    """

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        full = (1 << n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} has neighbour bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.rows):
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(tuple(rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def neighbors(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitmask."""
        return self.rows[v]

    def neighbor_list(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def with_vertex(self, attach_mask: int) -> "Graph":
        """New graph with an extra vertex ``n`` adjacent to ``attach_mask``."""
        n = self.n
        if attach_mask & ~((1 << n) - 1):
            raise ValueError("attachment mask has bits outside the vertex set")
        rows = [r | ((attach_mask >> v & 1) << n) for v, r in enumerate(self.rows)]
        rows.append(attach_mask)
        return Graph(tuple(rows))

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Induced subgraph on ``keep``, relabelled to ``0..len(keep)-1`` in
        the given order."""
        index = {v: i for i, v in enumerate(keep)}
        if len(index) != len(keep):
            raise ValueError("duplicate vertices in induced subgraph")
        rows = [0] * len(keep)
        for i, v in enumerate(keep):
            for u in _bits(self.rows[v]):
                j = index.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(tuple(rows))

    def without(self, *drop: int) -> "Graph":
        """Delete the given vertices (order of the rest preserved)."""
        gone = set(drop)
        return self.induced([v for v in range(self.n) if v not in gone])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


# ---------------------------------------------------------------------------
# Standard constructions (used throughout the tests and the family builder)
# ---------------------------------------------------------------------------


def path_graph(m: int) -> Graph:
    """Path on ``m`` vertices, labelled along the path."""
    return Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def complete_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def star_graph(m: int) -> Graph:
    """Star on ``m`` vertices with centre 0."""
    return Graph.from_edges(m, [(0, i) for i in range(1, m)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------
#
# Bit-exact per the de-facto format: size is byte n+63 for n <= 62, else
# 126 followed by three bytes of n in big-endian 6-bit groups; edge bits are
# the upper triangle read column by column (x_{0,1}, x_{0,2}, x_{1,2}, ...),
# packed into 6-bit groups offset by 63 and zero-padded.


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [63 + n]
    else:
        head = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    chunk = 0
    filled = 0
    body: list[int] = []
    for col in range(1, n):
        for row in range(col):
            chunk = chunk << 1 | (g.rows[row] >> col & 1)
            filled += 1
            if filled == 6:
                body.append(63 + chunk)
                chunk = 0
                filled = 0
    if filled:
        body.append(63 + (chunk << (6 - filled)))
    return bytes(head + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    data = text.encode("ascii", errors="replace")
    if not data:
        raise Graph6Error("empty graph6 record", reason="length")
    for byte in data:
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte} outside graph6 range 63..126", reason="charset")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte size prefix implies n >= 258048", reason="too-large")
        if len(data) < 4:
            raise Graph6Error("truncated multi-byte size prefix", reason="length")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n <= 62:
            raise Graph6Error(f"multi-byte size prefix used for n={n}", reason="length")
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap", reason="too-large")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} edge bytes, got {len(body)}", reason="length")
    if len(body) > nbytes:
        raise Graph6Error(f"{len(body) - nbytes} trailing bytes after edge bits", reason="trailing")
    rows = [0] * n
    k = 0
    for col in range(1, n):
        for row in range(col):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            k += 1
    if nbytes and nbits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", reason="padding")
    return Graph(tuple(rows))


# ---------------------------------------------------------------------------
# Metrics
# ---------------------------------------------------------------------------


def bfs_distances(g: Graph, v: int) -> list[int | float]:
    """Shortest-path edge counts from ``v``; ``math.inf`` where unreachable."""
    dist: list[int | float] = [math.inf] * g.n
    dist[v] = 0
    seen = 1 << v
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.rows[u]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        for u in _bits(frontier):
            dist[u] = d
    return dist


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise DisconnectedGraphError("diameter of the empty graph is undefined")
    best = 0
    for v in range(g.n):
        ecc = max(bfs_distances(g, v))
        if ecc == math.inf:
            raise DisconnectedGraphError("graph is disconnected")
        best = max(best, int(ecc))
    return best


@dataclass(frozen=True, slots=True)
class DiameterPath:
    """An induced shortest path realising the diameter, as an ordered
    vertex tuple (length = number of edges)."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def is_diameter_path(g: Graph, path: DiameterPath) -> bool:
    vs = path.vertices
    if len(set(vs)) != len(vs) or not vs:
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            adjacent = g.has_edge(vs[i], vs[j])
            if adjacent != (j == i + 1):
                return False
    return diameter(g) == path.length


def diameter_paths(g: Graph, limit: int = DEFAULT_PATH_LIMIT) -> list[DiameterPath]:
    """All shortest paths of diameter length, one orientation each.

    Paths are enumerated between eccentric pairs ``u < v`` (oriented from
    ``u``) by walking the BFS DAG toward ``v``; order is deterministic.
    At most ``limit`` paths are returned, so a result shorter than
    ``limit`` is guaranteed to be complete.
    """
    d = diameter(g)
    if d == 0:
        return [DiameterPath((0,))]
    dist = [bfs_distances(g, v) for v in range(g.n)]
    out: list[DiameterPath] = []

    def extend(prefix: list[int], target: int) -> bool:
        cur = prefix[-1]
        if cur == target:
            out.append(DiameterPath(tuple(prefix)))
            return len(out) < limit
        want = dist[target][cur] - 1
        for w in _bits(g.rows[cur]):
            if dist[target][w] == want:
                if not extend(prefix + [w], target):
                    return False
        return True

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if dist[u][v] == d:
                if not extend([u], v):
                    return out
    return out


# ---------------------------------------------------------------------------
# Twins, reduction, pendants
# ---------------------------------------------------------------------------


def twin_classes(g: Graph) -> list[list[int]]:
    """Partition of the vertices by equal open neighbourhood.

    Vertices in one class of size >= 2 are twins; they are necessarily
    non-adjacent (a common neighbourhood containing either endpoint would
    be a self-loop).
    """
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.rows[v], []).append(v)
    return sorted(groups.values())


def _twin_victim(g: Graph) -> int | None:
    """Lowest-indexed vertex that has a twin, or None when reduced."""
    best: int | None = None
    for cls in twin_classes(g):
        if len(cls) >= 2 and (best is None or cls[0] < best):
            best = cls[0]
    return best


def is_reduced(g: Graph) -> bool:
    return _twin_victim(g) is None


@dataclass(frozen=True, slots=True)
class ReductionResult:
    graph: Graph
    removed: int
    original_diameter: int
    reduced_diameter: int


def reduce(g: Graph) -> ReductionResult:
    """Delete twins until none remain, lowest-indexed victim first.

    Twin deletion keeps the graph connected, so both diameters are well
    defined; they are reported side by side because reduction can shrink
    the diameter (C_4 reduces to K_2, dropping it from 2 to 1), and no
    equality between them is ever assumed.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("reduction is defined for connected graphs")
    original_d = diameter(g)
    cur = g
    removed = 0
    while True:
        victim = _twin_victim(cur)
        if victim is None:
            break
        cur = cur.without(victim)
        removed += 1
    return ReductionResult(cur, removed, original_d, diameter(cur))


def pendant_pairs(g: Graph) -> list[tuple[int, int]]:
    """All (pendant vertex, unique neighbour) pairs, ascending."""
    return [(v, g.rows[v].bit_length() - 1) for v in range(g.n) if g.rows[v].bit_count() == 1]


# ---------------------------------------------------------------------------
# Classification of vertices outside a diameter path
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OutsideClassification:
    """Vertices outside a diameter path, split by how they meet it.

    ``anchored`` maps each vertex at distance 1 from the path to its sorted
    path positions (0-based indices into ``path.vertices``); ``remote``
    maps each vertex at distance >= 2 to that distance.  For a valid
    diameter path an anchored vertex has 1..3 anchors spanning at most
    three consecutive positions, otherwise the path would admit a shortcut.
    """

    path: DiameterPath
    anchored: Mapping[int, tuple[int, ...]]
    remote: Mapping[int, int]

    def by_anchor_count(self) -> dict[int, list[int]]:
        """Group anchored vertices by their number of path neighbours."""
        out: dict[int, list[int]] = {}
        for v in sorted(self.anchored):
            out.setdefault(len(self.anchored[v]), []).append(v)
        return out


def classify_outside(g: Graph, path: DiameterPath) -> OutsideClassification:
    if not is_diameter_path(g, path):
        raise ValueError("not a diameter path of this graph")
    position = {v: i for i, v in enumerate(path.vertices)}
    path_mask = 0
    for v in path.vertices:
        path_mask |= 1 << v

    # multi-source BFS from the path for the remote distances
    dist_to_path = [0 if path_mask >> v & 1 else math.inf for v in range(g.n)]
    seen = path_mask
    frontier = path_mask
    d = 0
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.rows[u]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        for u in _bits(frontier):
            dist_to_path[u] = d

    anchored: dict[int, tuple[int, ...]] = {}
    remote: dict[int, int] = {}
    for x in range(g.n):
        if path_mask >> x & 1:
            continue
        anchors = tuple(sorted(position[u] for u in _bits(g.rows[x]) if u in position))
        if anchors:
            anchored[x] = anchors
        else:
            remote[x] = int(dist_to_path[x])
    return OutsideClassification(path, anchored, remote)
