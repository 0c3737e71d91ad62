"""Hexagonal patches and their pendant-and-subdivision decorations.

The decorated graphs are the score-5 adversarial family: a patch of
concentric hexagon rings in which every horizontal edge is subdivided once
and every lattice vertex receives a pendant. The resulting graphs have girth
8, maximum degree 4 (for two or more rings), and interior vertices that can
be squeezed to back degree 4 by the right adversary.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, cycle, disjoint_union

# Axial ring walk, one direction per ring side.
_RING_DIRECTIONS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))


class VertexClass(str, Enum):
    HEX_INTERIOR = "interior"
    HEX_BOUNDARY = "boundary"
    PENDANT = "pendant"
    SUBDIVISION = "subdivision"


@dataclass(frozen=True)
class HexPatch:
    """A patch of 3n^2-3n+1 hexagons arranged in n concentric rings.

    coords[v] is (q, r, parity): the axial cell owning vertex v plus the
    two-vertex-basis parity bit. Horizontal edges are exactly the intra-cell
    basis edges, two per hexagon.
    """

    n: int
    graph: Graph
    coords: tuple[tuple[int, int, int], ...]
    boundary: frozenset[int]
    horizontal_edges: frozenset[tuple[int, int]]
    faces: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ConstructionGraph:
    """A hex patch with every horizontal edge subdivided and a pendant per lattice vertex.

    class_of covers the construction's own vertices; vertices added later by
    a disjoint cycle union carry no class. pendant_of maps each lattice
    vertex to its pendant.
    """

    n: int
    graph: Graph
    class_of: dict[int, VertexClass]
    pendant_of: dict[int, int]
    patch: HexPatch
    subdivision_of: dict[int, tuple[int, int]]
    union_cycle: int | None = None


@dataclass(frozen=True)
class ClassCounts:
    pendants: int
    subdivisions: int
    interior: int
    boundary: int
    vertices: int
    edges: int


def _spiral_cells(rings: int) -> list[tuple[int, int]]:
    """Axial cell coordinates in spiral order from the center outward."""
    cells = [(0, 0)]
    for k in range(1, rings + 1):
        q, r = -k, k
        for direction in range(6):
            dq, dr = _RING_DIRECTIONS[direction]
            for _ in range(k):
                cells.append((q, r))
                q, r = q + dq, dr + r
    return cells


def _face_corners(q: int, r: int) -> tuple[tuple[int, int, int], ...]:
    """Corner keys of the hexagon at cell (q, r), in cyclic order.

    Keys are (cell q, cell r, parity); parity 0 and 1 are the two basis
    vertices of a cell. The basis pairs of cells (q, r) and (q+1, r) are the
    face's two horizontal edges.
    """
    return (
        (q, r, 0),
        (q, r, 1),
        (q, r + 1, 0),
        (q + 1, r, 1),
        (q + 1, r, 0),
        (q + 1, r - 1, 1),
    )


def hex_patch(n: int) -> HexPatch:
    """Build the n-ring hexagon patch with deterministic spiral labeling."""
    if n <= 0:
        raise ValueError(f"ring count must be positive, got {n}")
    cells = _spiral_cells(n - 1)
    ids: dict[tuple[int, int, int], int] = {}
    coords: list[tuple[int, int, int]] = []
    faces: list[tuple[int, ...]] = []
    edges: set[tuple[int, int]] = set()
    horizontal: set[tuple[int, int]] = set()
    face_count: dict[int, int] = {}

    for q, r in cells:
        corner_ids = []
        for key in _face_corners(q, r):
            vid = ids.get(key)
            if vid is None:
                vid = len(ids)
                ids[key] = vid
                coords.append(key)
                face_count[vid] = 0
            corner_ids.append(vid)
            face_count[vid] += 1
        faces.append(tuple(corner_ids))
        for i in range(6):
            a, b = corner_ids[i], corner_ids[(i + 1) % 6]
            edge = (a, b) if a < b else (b, a)
            edges.add(edge)
            # The basis edges of this face sit at corner slots (0,1) and (3,4).
            if i in (0, 3):
                horizontal.add(edge)

    graph = Graph(len(ids), sorted(edges))
    # A lattice vertex is interior exactly when all three of its cells are in
    # the patch; with fewer incident faces it touches the unbounded region.
    boundary = frozenset(v for v, c in face_count.items() if c < 3)
    return HexPatch(
        n=n,
        graph=graph,
        coords=tuple(coords),
        boundary=boundary,
        horizontal_edges=frozenset(horizontal),
        faces=tuple(faces),
    )


def lower_bound_graph(n: int) -> ConstructionGraph:
    """Decorate hex_patch(n): subdivide each horizontal edge, pendant each vertex.

    Ids: patch vertices keep their spiral ids, pendants follow (pendant of v
    is patch_size + v), then one subdivision vertex per horizontal edge in
    sorted edge order.
    """
    patch = hex_patch(n)
    base = patch.graph.n
    pendant_of = {v: base + v for v in range(base)}
    sub_start = 2 * base
    subdivision_of: dict[int, tuple[int, int]] = {}

    edges: list[tuple[int, int]] = []
    for u, v in patch.graph.edges():
        if (u, v) in patch.horizontal_edges:
            w = sub_start + len(subdivision_of)
            subdivision_of[w] = (u, v)
            edges.append((u, w))
            edges.append((w, v))
        else:
            edges.append((u, v))
    edges.extend((v, pendant_of[v]) for v in range(base))

    total = sub_start + len(subdivision_of)
    graph = Graph(total, edges)

    class_of: dict[int, VertexClass] = {}
    for v in range(base):
        if v in patch.boundary:
            class_of[v] = VertexClass.HEX_BOUNDARY
        else:
            class_of[v] = VertexClass.HEX_INTERIOR
        class_of[pendant_of[v]] = VertexClass.PENDANT
    for w in subdivision_of:
        class_of[w] = VertexClass.SUBDIVISION

    return ConstructionGraph(
        n=n,
        graph=graph,
        class_of=class_of,
        pendant_of=pendant_of,
        patch=patch,
        subdivision_of=subdivision_of,
    )


def class_counts(n: int) -> ClassCounts:
    """Closed-form class sizes; must equal the counts measured on lower_bound_graph(n)."""
    if n <= 0:
        raise ValueError(f"ring count must be positive, got {n}")
    return ClassCounts(
        pendants=6 * n * n,
        subdivisions=3 * n * n - n,
        interior=6 * n * n - 12 * n + 6,
        boundary=12 * n - 6,
        vertices=15 * n * n - n,
        edges=18 * n * n - 4 * n,
    )


def measured_class_counts(c: ConstructionGraph) -> ClassCounts:
    """Count the classes actually present on a generated construction."""
    tally = {cls: 0 for cls in VertexClass}
    for cls in c.class_of.values():
        tally[cls] += 1
    return ClassCounts(
        pendants=tally[VertexClass.PENDANT],
        subdivisions=tally[VertexClass.SUBDIVISION],
        interior=tally[VertexClass.HEX_INTERIOR],
        boundary=tally[VertexClass.HEX_BOUNDARY],
        vertices=c.graph.n,
        edges=c.graph.m,
    )


def interior_exceeds_rest(n: int) -> bool:
    """Whether subdivisions + boundary + 1 < interior at ring count n."""
    c = class_counts(n)
    return c.subdivisions + c.boundary + 1 < c.interior


def interior_majority_threshold(limit: int = 100) -> int:
    """Smallest ring count at which the interior outnumbers the pre-marked classes.

    The adversarial squeeze is only guaranteed from ring count 9 on, but the
    count inequality itself first holds a little earlier; this reports where.
    """
    for n in range(1, limit + 1):
        if interior_exceeds_rest(n):
            return n
    raise ValueError(f"threshold not found below {limit}")


def with_cycle(n: int, k: int) -> ConstructionGraph:
    """Disjoint union of lower_bound_graph(n) with a k-cycle; girth becomes exactly k."""
    if not 3 <= k <= 8:
        raise ValueError(f"cycle length must be between 3 and 8, got {k}")
    c = lower_bound_graph(n)
    graph = disjoint_union(c.graph, cycle(k))
    return ConstructionGraph(
        n=c.n,
        graph=graph,
        class_of=c.class_of,
        pendant_of=c.pendant_of,
        patch=c.patch,
        subdivision_of=c.subdivision_of,
        union_cycle=k,
    )
