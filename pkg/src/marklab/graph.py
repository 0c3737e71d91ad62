"""Immutable simple graphs plus the structural queries the rest of the package needs.

Vertices are dense integer ids 0..n-1 so higher layers can use bitsets and
plain arrays; label maps are carried separately by callers.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Iterator

INFINITE_GIRTH = math.inf


class EdgeListParseError(ValueError):
    """Malformed edge-list text; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class Graph:
    """Simple undirected graph on vertex ids 0..n-1, immutable after construction.

    Adjacency is stored as sorted tuples so that every iteration in the
    package is deterministic. Self-loops are rejected and parallel edges are
    collapsed.
    """

    __slots__ = ("n", "m", "adj", "_adj_sets", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._adj_sets = tuple(frozenset(s) for s in nbrs)
        self.m = sum(len(a) for a in self.adj) // 2
        self._masks: tuple[int, ...] | None = None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex neighborhood bitmasks, built lazily for bitset search."""
        if self._masks is None:
            masks = []
            for a in self.adj:
                bits = 0
                for v in a:
                    bits |= 1 << v
                masks.append(bits)
            self._masks = tuple(masks)
        return self._masks

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a graph; duplicate edges (in either orientation) collapse."""
    return Graph(n, edges)


def validate(g: Graph) -> None:
    """Re-derive the structural invariants from the stored adjacency.

    Raises AssertionError on a violation; used by tests on every generated graph.
    """
    assert len(g.adj) == g.n
    total = 0
    for u in range(g.n):
        row = g.adj[u]
        assert list(row) == sorted(set(row)), f"adjacency row {u} not sorted/deduped"
        for v in row:
            assert 0 <= v < g.n, f"neighbor {v} of {u} out of range"
            assert v != u, f"self-loop at {u}"
            assert u in g.adj[v], f"asymmetric edge ({u},{v})"
        total += len(row)
    assert g.m == total // 2, "edge count disagrees with degree sum"


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or INFINITE_GIRTH for a forest.

    One BFS per start vertex; each BFS stops expanding once it is deep enough
    that no shorter cycle can be found, so the n-fold sweep stays cheap on
    large sparse graphs while remaining exact.
    """
    best: int | float = INFINITE_GIRTH
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque((root,))
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if 2 * dx + 1 >= best:
                continue
            px = parent[x]
            for y in adj[x]:
                dy = dist.get(y)
                if dy is None:
                    dist[y] = dx + 1
                    parent[y] = x
                    queue.append(y)
                elif y != px:
                    # Non-tree edge: closes a walk of length dx + dy + 1
                    # through the root, which contains a cycle no longer.
                    cand = dx + dy + 1
                    if cand < best:
                        best = cand
    return best


def cycle(k: int) -> Graph:
    """The k-cycle on ids 0..k-1."""
    if k < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    """The path on ids 0..k-1."""
    if k < 1:
        raise ValueError(f"a path needs at least 1 vertex, got {k}")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def complete(k: int) -> Graph:
    """The complete graph on ids 0..k-1."""
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Place g2 next to g1, shifting g2's ids up by g1.n."""
    shift = g1.n
    edges = list(g1.edges())
    edges.extend((u + shift, v + shift) for u, v in g2.edges())
    return Graph(g1.n + g2.n, edges)


def subdivide_each_edge(g: Graph, t: int) -> Graph:
    """Replace every edge by a path with t internal vertices.

    Original ids are preserved; internal vertices get fresh ids in the
    lexicographic order of the edges they subdivide. Multiplies the girth of
    a cyclic graph by t + 1.
    """
    if t < 0:
        raise ValueError("subdivision count must be nonnegative")
    if t == 0:
        return g
    edges = []
    next_id = g.n
    for u, v in g.edges():
        chain = [u] + list(range(next_id, next_id + t)) + [v]
        next_id += t
        edges.extend(zip(chain, chain[1:]))
    return Graph(next_id, edges)


def planar_girth_edge_bound(g: Graph, assumed_girth: int) -> bool:
    """Necessary edge-count condition for planarity at a given girth.

    A planar graph with n >= 3 vertices and girth g has at most
    g/(g-2) * (n-2) edges, by counting face incidences. Returning False
    certifies that the graph cannot be planar with that girth; True says
    nothing more (this gate replaces full planarity testing).
    """
    if assumed_girth < 3:
        raise ValueError("girth must be at least 3")
    if g.n < 3:
        raise ValueError("bound needs at least 3 vertices")
    return g.m * (assumed_girth - 2) <= assumed_girth * (g.n - 2)


def degeneracy(g: Graph) -> int:
    """Smallest d such that every subgraph has a vertex of degree <= d."""
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    buckets: list[list[int]] = [[] for _ in range(g.max_degree() + 1)]
    for v in range(g.n):
        buckets[deg[v]].append(v)
    best = 0
    seen = 0
    cursor = 0
    while seen < g.n:
        while cursor < len(buckets) and not buckets[cursor]:
            cursor += 1
        v = buckets[cursor].pop()
        if removed[v] or deg[v] > cursor:
            continue
        removed[v] = True
        seen += 1
        best = max(best, deg[v])
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                buckets[deg[w]].append(w)
                if deg[w] < cursor:
                    cursor = deg[w]
    return best


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format: first line "n m", then m lines "u v".

    Every failure names the offending line. Blank lines are not allowed
    between records; trailing whitespace-only lines are ignored.
    """
    lines = text.splitlines()
    # Trim trailing blank lines only.
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise EdgeListParseError(1, "empty input, expected header 'n m'")
    header = lines[0].split()
    if len(header) != 2:
        raise EdgeListParseError(1, f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError(1, f"non-integer header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise EdgeListParseError(1, "negative counts in header")
    if len(lines) - 1 != m:
        raise EdgeListParseError(
            len(lines), f"declared {m} edges but found {len(lines) - 1} edge lines"
        )
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for i, raw in enumerate(lines[1:], start=2):
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListParseError(i, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(i, f"non-integer vertex id in {raw!r}") from None
        if not (0 <= u < n) or not (0 <= v < n):
            raise EdgeListParseError(i, f"vertex id out of range in edge ({u},{v})")
        if u == v:
            raise EdgeListParseError(i, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListParseError(i, f"duplicate edge ({u},{v}) vs declared count")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list, with edges in canonical sorted order."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def emit_dot(g: Graph, labels: dict[int, str] | None = None) -> str:
    """DOT text for visualization; optional per-vertex labels become node attributes."""
    labels = labels or {}
    out = ["graph {"]
    for v in range(g.n):
        if v in labels:
            out.append(f'  {v} [label="{labels[v]}"];')
        else:
            out.append(f"  {v};")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
