"""Exact graphs over mesh lattices, stored in doubled integer coordinates.

Vertices live on one of two lattices.  The even lattice is the plain
integer grid Z^k.  The odd lattice is (Z + 1/2) x Z^(k-1), the same grid
shifted by one half along the first axis.  To keep every computation in
exact integer arithmetic, all coordinates are stored doubled (true value
times two).  On the even lattice every stored entry is even; on the odd
lattice the first entry is odd and the rest are even.

Two lattice points are mesh neighbours exactly when their true taxicab
distance is 1, which in doubled coordinates reads as distance 2.  Graphs
here carry explicit edge sets: a graph may use fewer edges than the mesh
induces on its vertex set, but never an edge the mesh does not provide.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum

# Doubled coordinates: a point is a tuple of ints, true value times two.
Point = tuple

#: Distance value returned for disconnected vertex pairs.  Distinct from
#: any error: asking for the diameter of a disconnected graph is legal.
INFINITE = math.inf

COORD_SCALE = 2

FAMILY_CODES = ("e", "eprime", "o", "oprime", "g3", "edge", "cycle", "path")

#: Families whose graphs live on the odd lattice and carry two centers.
ODD_FAMILIES = ("o", "oprime")


class LatticeParity(Enum):
    """Which of the two lattices a graph lives on."""

    EVEN = "even"
    ODD = "odd"


def validate_point(coords, k: int, parity: LatticeParity) -> Point:
    """Check one doubled-coordinate tuple against a lattice.

    Args:
        coords: candidate coordinates, any iterable of ints.
        k: expected dimension, at least 1.
        parity: lattice the point must belong to.

    Returns:
        The validated point as a tuple.

    Raises:
        ValueError: wrong dimension, non-integer entries, or a doubled
            pattern that does not match the lattice parity.
    """
    pt = tuple(coords)
    if len(pt) != k:
        raise ValueError(f"point {pt!r} has dimension {len(pt)}, expected {k}")
    for c in pt:
        if not isinstance(c, int) or isinstance(c, bool):
            raise ValueError(f"point {pt!r} has non-integer entry {c!r}")
    first_odd = pt[0] & 1
    if parity is LatticeParity.EVEN and first_odd:
        raise ValueError(f"point {pt!r} is not on the even lattice")
    if parity is LatticeParity.ODD and not first_odd:
        raise ValueError(f"point {pt!r} is not on the odd lattice")
    for c in pt[1:]:
        if c & 1:
            raise ValueError(f"point {pt!r} has an odd entry outside axis 1")
    return pt


def _l1(a: Point, b: Point) -> int:
    return sum(abs(x - y) for x, y in zip(a, b))


def l1_distance(a: Point, b: Point) -> int:
    """Doubled taxicab distance between two points of one lattice.

    The result is twice the true distance, hence always an even integer
    for points of a common lattice.  Mesh neighbours are at distance 2.

    Raises:
        ValueError: dimension mismatch, or one point per lattice.
    """
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    if (a[0] ^ b[0]) & 1:
        raise ValueError(f"lattice parity mismatch between {a!r} and {b!r}")
    return _l1(a, b)


def true_coordinate(c: int) -> str:
    """Render one doubled coordinate as its true value, halves included."""
    if c % 2 == 0:
        return str(c // 2)
    return f"{c}/2"


def point_label(pt: Point) -> str:
    """Human-readable true-coordinate label, e.g. ``(1/2,0)``."""
    return "(" + ",".join(true_coordinate(c) for c in pt) + ")"


class MeshGraph:
    """Immutable graph whose vertices sit on one mesh lattice.

    Vertices and edges are canonicalised at construction: vertices are
    deduplicated and sorted lexicographically, edges are stored as
    sorted endpoint pairs in sorted order.  Every edge must join two
    stored vertices at doubled distance exactly 2.
    """

    __slots__ = ("parity", "k", "vertices", "edges", "_vset", "_adj", "_iadj")

    def __init__(self, parity: LatticeParity, k: int, vertices, edges):
        if not isinstance(parity, LatticeParity):
            raise ValueError(f"parity must be a LatticeParity, got {parity!r}")
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"dimension k must be an integer >= 1, got {k!r}")
        vts = sorted({tuple(v) for v in vertices})
        for v in vts:
            validate_point(v, k, parity)
        vset = frozenset(vts)
        canon = set()
        for e in edges:
            a, b = e
            a = tuple(a)
            b = tuple(b)
            if a not in vset or b not in vset:
                raise ValueError(f"edge {a!r} -- {b!r} has an endpoint outside the vertex set")
            if _l1(a, b) != 2:
                raise ValueError(
                    f"edge {a!r} -- {b!r} is not a mesh edge (doubled distance {_l1(a, b)})"
                )
            canon.add((a, b) if a < b else (b, a))
        self.parity = parity
        self.k = k
        self.vertices = tuple(vts)
        self.edges = tuple(sorted(canon))
        self._vset = vset
        adj = {v: [] for v in vts}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self._iadj = None

    def __setattr__(self, name, value):
        if hasattr(self, "_iadj") and name != "_iadj":
            raise AttributeError("MeshGraph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, MeshGraph):
            return NotImplemented
        return (
            self.parity is other.parity
            and self.k == other.k
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.parity, self.k, self.vertices, self.edges))

    def __repr__(self):
        return (
            f"MeshGraph(parity={self.parity.value}, k={self.k}, "
            f"vertices={len(self.vertices)}, edges={len(self.edges)})"
        )

    def has_vertex(self, v: Point) -> bool:
        return tuple(v) in self._vset

    def neighbors(self, v: Point) -> tuple:
        if v not in self._vset:
            raise ValueError(f"{v!r} is not a vertex of this graph")
        return self._adj[v]

    def degree(self, v: Point) -> int:
        return len(self.neighbors(v))

    def int_adjacency(self) -> list:
        """Adjacency lists over vertex indices, cached.

        Index i refers to ``self.vertices[i]``.  Used by the distance
        routines so breadth-first sweeps run over small ints instead of
        coordinate tuples.
        """
        if self._iadj is None:
            index = {v: i for i, v in enumerate(self.vertices)}
            iadj = [[] for _ in self.vertices]
            for a, b in self.edges:
                ia, ib = index[a], index[b]
                iadj[ia].append(ib)
                iadj[ib].append(ia)
            self._iadj = iadj
        return self._iadj


def _int_bfs(iadj: list, src: int) -> list:
    dist = [-1] * len(iadj)
    dist[src] = 0
    queue = deque((src,))
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in iadj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def bfs_distances(g: MeshGraph, src: Point) -> dict:
    """Hop counts from ``src`` to every vertex it can reach.

    Unreachable vertices are absent from the result.

    Raises:
        ValueError: ``src`` is not a vertex of ``g``.
    """
    src = tuple(src)
    if not g.has_vertex(src):
        raise ValueError(f"source {src!r} is not a vertex of this graph")
    iadj = g.int_adjacency()
    index = g.vertices.index(src)
    dist = _int_bfs(iadj, index)
    verts = g.vertices
    return {verts[i]: d for i, d in enumerate(dist) if d >= 0}


def max_degree(g: MeshGraph) -> int:
    """Largest vertex degree, 0 for an empty or edgeless graph."""
    if not g.vertices:
        return 0
    return max(len(g._adj[v]) for v in g.vertices)


def eccentricity(g: MeshGraph, v: Point):
    """Largest hop count from ``v``, INFINITE if some vertex is unreachable."""
    v = tuple(v)
    if not g.has_vertex(v):
        raise ValueError(f"{v!r} is not a vertex of this graph")
    iadj = g.int_adjacency()
    dist = _int_bfs(iadj, g.vertices.index(v))
    if min(dist) < 0:
        return INFINITE
    return max(dist)


def is_connected(g: MeshGraph) -> bool:
    if len(g.vertices) <= 1:
        return True
    dist = _int_bfs(g.int_adjacency(), 0)
    return min(dist) >= 0


def diameter(g: MeshGraph):
    """Exact diameter in hops, INFINITE when disconnected.

    Trees are resolved with two sweeps; anything else falls back to a
    full all-pairs scan, so keep an eye on graph size at call sites.

    Raises:
        ValueError: the graph has no vertices.
    """
    n = len(g.vertices)
    if n == 0:
        raise ValueError("diameter of an empty graph is undefined")
    if n == 1:
        return 0
    iadj = g.int_adjacency()
    dist0 = _int_bfs(iadj, 0)
    if min(dist0) < 0:
        return INFINITE
    if len(g.edges) == n - 1:
        # Connected with n-1 edges means a tree: the classic two-sweep
        # argument gives the exact diameter.
        far = max(range(n), key=dist0.__getitem__)
        return max(_int_bfs(iadj, far))
    best = 0
    for s in range(n):
        m = max(_int_bfs(iadj, s))
        if m > best:
            best = m
    return best


def _expected_centers(family: str, parity: LatticeParity, k: int) -> tuple:
    if family in ODD_FAMILIES or (family in ("cycle", "path") and parity is LatticeParity.ODD):
        minus = (-1,) + (0,) * (k - 1)
        plus = (1,) + (0,) * (k - 1)
        return (minus, plus)
    return ((0,) * k,)


@dataclass(frozen=True)
class CenteredGraph:
    """A built family member: graph plus centers, radius tag, family code.

    Families on the even lattice carry one center at the origin.
    Families on the odd lattice carry two centers at true coordinates
    (+-1/2, 0, ..., 0), which are doubled (+-1, 0, ..., 0) here.
    """

    graph: MeshGraph
    centers: tuple
    p: int
    family: str

    def __post_init__(self):
        if self.family not in FAMILY_CODES:
            raise ValueError(f"unknown family code {self.family!r}")
        if not isinstance(self.p, int) or self.p < 0:
            raise ValueError(f"radius parameter p must be an integer >= 0, got {self.p!r}")
        centers = tuple(sorted(tuple(c) for c in self.centers))
        object.__setattr__(self, "centers", centers)
        expected = _expected_centers(self.family, self.graph.parity, self.graph.k)
        if centers != expected:
            raise ValueError(
                f"family {self.family!r} on the {self.graph.parity.value} lattice "
                f"expects centers {expected!r}, got {centers!r}"
            )
        for c in centers:
            if not self.graph.has_vertex(c):
                raise ValueError(f"center {c!r} is not a vertex of the graph")


# ============================================================
# Serialization
# ============================================================

def mesh_to_obj(g: MeshGraph, centers=(), family: str = "", p: int = 0) -> dict:
    """Plain-dict form of a graph, shared by all JSON emitters.

    Key order is fixed so the JSON text is canonical: parity, k,
    coord_scale, vertices, edges, centers, family, p.
    """
    index = {v: i for i, v in enumerate(g.vertices)}
    return {
        "parity": g.parity.value,
        "k": g.k,
        "coord_scale": COORD_SCALE,
        "vertices": [list(v) for v in g.vertices],
        "edges": [[index[a], index[b]] for a, b in g.edges],
        "centers": sorted(index[tuple(c)] for c in centers),
        "family": family,
        "p": p,
    }


def mesh_from_obj(obj: dict):
    """Rebuild (MeshGraph, centers, family, p) from the dict form.

    Raises:
        ValueError: missing keys, wrong scale, malformed indices.
    """
    if not isinstance(obj, dict):
        raise ValueError("graph object must be a JSON object")
    required = ("parity", "k", "coord_scale", "vertices", "edges", "centers", "family", "p")
    for key in required:
        if key not in obj:
            raise ValueError(f"graph object is missing key {key!r}")
    if obj["coord_scale"] != COORD_SCALE:
        raise ValueError(f"unsupported coord_scale {obj['coord_scale']!r}, expected {COORD_SCALE}")
    try:
        parity = LatticeParity(obj["parity"])
    except ValueError:
        raise ValueError(f"unknown parity {obj['parity']!r}") from None
    k = obj["k"]
    verts = [tuple(v) for v in obj["vertices"]]
    n = len(verts)
    edges = []
    for pair in obj["edges"]:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge index pair {pair!r} is out of range")
        edges.append((verts[i], verts[j]))
    g = MeshGraph(parity, k, verts, edges)
    centers = []
    for i in obj["centers"]:
        if not (0 <= i < n):
            raise ValueError(f"center index {i!r} is out of range")
        centers.append(verts[i])
    p = obj["p"]
    if not isinstance(p, int) or p < 0:
        raise ValueError(f"field p must be an integer >= 0, got {p!r}")
    return g, tuple(centers), obj["family"], p


def graph_to_json(cg: CenteredGraph) -> str:
    """Canonical single-line JSON text for a built family member.

    Round trip is byte exact: parsing this text and serialising the
    result reproduces it unchanged.
    """
    obj = mesh_to_obj(cg.graph, cg.centers, cg.family, cg.p)
    return json.dumps(obj, separators=(",", ":"))


def graph_from_json(text: str) -> CenteredGraph:
    """Parse canonical graph JSON back into a CenteredGraph.

    Raises:
        ValueError: malformed JSON, unknown family, or centers that do
            not match the family convention.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    g, centers, family, p = mesh_from_obj(obj)
    return CenteredGraph(g, centers, p, family)


def graph_to_dot(cg: CenteredGraph) -> str:
    """Graphviz text with true-coordinate labels, centers double-ringed."""
    lines = ["graph mesh {"]
    center_set = set(cg.centers)
    for v in cg.graph.vertices:
        label = point_label(v)
        if v in center_set:
            lines.append(f'  "{label}" [peripheries=2];')
        else:
            lines.append(f'  "{label}";')
    for a, b in cg.graph.edges:
        lines.append(f'  "{point_label(a)}" -- "{point_label(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
