"""Deterministic builders for the bounded-degree mesh subgraph families.

Seven families are built here, all in doubled coordinates:

* ``edge``   two mesh-adjacent vertices, the degree-1 optimum.
* ``cycle``  a rectangle perimeter, the degree-2 optimum for either
  diameter parity: side lengths 1 x (2p-1) give a 4p-cycle of diameter
  2p, side lengths 1 x 2p give a (4p+2)-cycle of diameter 2p+1.
* ``e``      the even-lattice core family: a tree of stacked copies of
  the (k-1)-dimensional core along axis k, joined by a spine of copy
  centers.  Degree stays at most 4, every vertex is within p of the
  origin.
* ``eprime`` the enlarged even family: the stack starts two levels out,
  both innermost levels carry radius p-1 copies (the enlarged family on
  the minus side, the core family on the plus side), and the otherwise
  empty central plane is filled with degree-1 vertices hanging from the
  plus-side copy.
* ``o``      the odd-lattice core family: same stacking idea, but built
  over a two-chain spine through the pair of centers at true
  coordinates (+-1/2, 0, ..., 0).  The two centers are deliberately not
  joined, keeping both at degree 2.
* ``oprime`` the enlarged odd family, mirroring ``eprime``.
* ``g3``     the degree-3 family: stacked planes of the
  (k-1)-dimensional build at one quarter radius, chained through a
  designated adjacent vertex pair per plane.

Builders are pure functions of their arguments; building twice yields
identical graphs.  For k >= 2 and p < 3 the stacked families degenerate
to a one-dimensional path along axis 1 with the same family tag.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .lattice_core import (
    CenteredGraph,
    LatticeParity,
    MeshGraph,
    Point,
)

EVEN = LatticeParity.EVEN
ODD = LatticeParity.ODD


@dataclass(frozen=True)
class BuildParams:
    """Validated build arguments: dimension, radius parameter, parity."""

    k: int
    p: int
    parity: LatticeParity = EVEN

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"dimension k must be an integer >= 1, got {self.k!r}")
        if not isinstance(self.p, int) or isinstance(self.p, bool) or self.p < 0:
            raise ValueError(f"radius parameter p must be an integer >= 0, got {self.p!r}")
        if not isinstance(self.parity, LatticeParity):
            raise ValueError(f"parity must be a LatticeParity, got {self.parity!r}")


class FreePair(NamedTuple):
    """An adjacent vertex pair with spare degree, endpoints sorted."""

    v1: Point
    v2: Point


# ============================================================
# One-dimensional base paths
# ============================================================

def _even_axis_path(family: str, k: int, p: int) -> CenteredGraph:
    """Even-lattice path spanning true [-p, p] along axis 1."""
    verts = [(2 * t,) + (0,) * (k - 1) for t in range(-p, p + 1)]
    edges = [(verts[i], verts[i + 1]) for i in range(len(verts) - 1)]
    g = MeshGraph(EVEN, k, verts, edges)
    return CenteredGraph(g, ((0,) * k,), p, family)


def _odd_axis_path(family: str, k: int, p: int) -> CenteredGraph:
    """Odd-lattice path spanning true [-p - 1/2, p + 1/2] along axis 1."""
    verts = [(h,) + (0,) * (k - 1) for h in range(-(2 * p + 1), 2 * p + 2, 2)]
    edges = [(verts[i], verts[i + 1]) for i in range(len(verts) - 1)]
    g = MeshGraph(ODD, k, verts, edges)
    centers = ((-1,) + (0,) * (k - 1), (1,) + (0,) * (k - 1))
    return CenteredGraph(g, centers, p, family)


def _lift(cg: CenteredGraph, level2: int):
    """Copy a (k-1)-dimensional build into dimension k at doubled level."""
    verts = [v + (level2,) for v in cg.graph.vertices]
    edges = [(a + (level2,), b + (level2,)) for a, b in cg.graph.edges]
    return verts, edges


# ============================================================
# Even-lattice stacked families
# ============================================================

def build_even_core(k: int, p: int) -> CenteredGraph:
    """Family ``e``: the degree-4 even-lattice tree of radius p.

    Copies of the (k-1)-dimensional core of radius p-i sit at levels
    x_k = +-i for 1 <= i <= p-2.  A spine joins the copy centers through
    the origin, which is the only vertex of the central plane.
    """
    BuildParams(k, p)
    if k == 1 or p < 3:
        return _even_axis_path("e", k, p)
    verts = set()
    edges = set()
    for i in range(1, p - 1):
        sub = build_even_core(k - 1, p - i)
        for level2 in (2 * i, -2 * i):
            sv, se = _lift(sub, level2)
            verts.update(sv)
            edges.update(se)
    origin = (0,) * k
    verts.add(origin)
    zeros = (0,) * (k - 1)
    for j in range(-(p - 2), p - 2):
        edges.add((zeros + (2 * j,), zeros + (2 * j + 2,)))
    g = MeshGraph(EVEN, k, verts, edges)
    return CenteredGraph(g, (origin,), p, "e")


def _central_plane_pendants(plus_copy: CenteredGraph, p: int, odd_first: bool):
    """Degree-1 vertices filling the central plane of an enlarged family.

    Each pendant sits at (v, 0) and hangs from the vertex (v, 1) of the
    plus-side copy.  Admission works in doubled coordinates:

    * within the shrunken ball: sum of |coordinates| at most 2(p-2);
    * last stacked coordinate bounded: at most 2(p-2) on the even
      lattice, at most 2p-3 on the odd lattice;
    * away from the spine: every coordinate nonzero on the even lattice,
      first coordinate not +-1 on the odd lattice.

    Iterating over the plus-side copy keeps the hook vertex existent by
    construction; admissible positions whose hook is absent (possible on
    the odd lattice when all stacked coordinates vanish) are skipped.
    """
    limit = 2 * (p - 2)
    verts = []
    edges = []
    for w in plus_copy.graph.vertices:
        if sum(abs(c) for c in w) > limit:
            continue
        if odd_first:
            if abs(w[-1]) > 2 * p - 3:
                continue
            if w[0] in (1, -1):
                continue
        else:
            if abs(w[-1]) > limit:
                continue
            if any(c == 0 for c in w):
                continue
        verts.append(w + (0,))
        edges.append((w + (0,), w + (2,)))
    return verts, edges


def build_even_extended(k: int, p: int) -> CenteredGraph:
    """Family ``eprime``: the enlarged degree-4 even-lattice tree.

    Compared with the core family, the stack starts at level 2, both
    innermost levels hold radius p-1 copies (enlarged on the minus side,
    core on the plus side), and the central plane gains pendants.
    """
    BuildParams(k, p)
    if k == 1 or p < 3:
        return _even_axis_path("eprime", k, p)
    verts = set()
    edges = set()
    for i in range(2, p - 1):
        sub = build_even_extended(k - 1, p - i)
        for level2 in (2 * i, -2 * i):
            sv, se = _lift(sub, level2)
            verts.update(sv)
            edges.update(se)
    minus = build_even_extended(k - 1, p - 1)
    sv, se = _lift(minus, -2)
    verts.update(sv)
    edges.update(se)
    plus = build_even_core(k - 1, p - 1)
    sv, se = _lift(plus, 2)
    verts.update(sv)
    edges.update(se)
    origin = (0,) * k
    verts.add(origin)
    zeros = (0,) * (k - 1)
    for j in range(-(p - 2), p - 2):
        edges.add((zeros + (2 * j,), zeros + (2 * j + 2,)))
    pv, pe = _central_plane_pendants(plus, p, odd_first=False)
    verts.update(pv)
    edges.update(pe)
    g = MeshGraph(EVEN, k, verts, edges)
    return CenteredGraph(g, (origin,), p, "eprime")


# ============================================================
# Odd-lattice stacked families
# ============================================================

def _double_spine(k: int, p: int, verts: set, edges: set) -> None:
    """Two vertical chains through the center pair, levels -(p-2)..p-2.

    The chains pass through (+-1, 0, ..., 0, 2j) in doubled coordinates.
    No rung joins the two chains: the centers must stay at degree 2.
    """
    zeros = (0,) * (k - 2)
    for s in (-1, 1):
        verts.add((s,) + zeros + (0,))
        for j in range(-(p - 2), p - 2):
            edges.add(((s,) + zeros + (2 * j,), (s,) + zeros + (2 * j + 2,)))


def build_odd_core(k: int, p: int) -> CenteredGraph:
    """Family ``o``: the degree-4 odd-lattice family of radius p.

    Copies of the (k-1)-dimensional build of radius p-i sit at levels
    x_k = +-i for 1 <= i <= p-2, threaded by the double spine.  Every
    vertex ends up within p of one center and within p+1 of the other.
    """
    BuildParams(k, p)
    if k == 1 or p < 3:
        return _odd_axis_path("o", k, p)
    verts = set()
    edges = set()
    for i in range(1, p - 1):
        sub = build_odd_core(k - 1, p - i)
        for level2 in (2 * i, -2 * i):
            sv, se = _lift(sub, level2)
            verts.update(sv)
            edges.update(se)
    _double_spine(k, p, verts, edges)
    centers = ((-1,) + (0,) * (k - 1), (1,) + (0,) * (k - 1))
    g = MeshGraph(ODD, k, verts, edges)
    return CenteredGraph(g, centers, p, "o")


def build_odd_extended(k: int, p: int) -> CenteredGraph:
    """Family ``oprime``: the enlarged degree-4 odd-lattice family."""
    BuildParams(k, p)
    if k == 1 or p < 3:
        return _odd_axis_path("oprime", k, p)
    verts = set()
    edges = set()
    for i in range(2, p - 1):
        sub = build_odd_extended(k - 1, p - i)
        for level2 in (2 * i, -2 * i):
            sv, se = _lift(sub, level2)
            verts.update(sv)
            edges.update(se)
    minus = build_odd_extended(k - 1, p - 1)
    sv, se = _lift(minus, -2)
    verts.update(sv)
    edges.update(se)
    plus = build_odd_core(k - 1, p - 1)
    sv, se = _lift(plus, 2)
    verts.update(sv)
    edges.update(se)
    _double_spine(k, p, verts, edges)
    pv, pe = _central_plane_pendants(plus, p, odd_first=True)
    verts.update(pv)
    edges.update(pe)
    centers = ((-1,) + (0,) * (k - 1), (1,) + (0,) * (k - 1))
    g = MeshGraph(ODD, k, verts, edges)
    return CenteredGraph(g, centers, p, "oprime")


# ============================================================
# Degree-3 family
# ============================================================

def find_free_pair(g: MeshGraph, used=frozenset()) -> FreePair:
    """Smallest adjacent pair whose endpoints both have degree <= 2.

    Pairs are ordered by their sorted endpoint coordinates; pairs listed
    in ``used`` are skipped, so repeated stacking can consume distinct
    attachment sites.

    Raises:
        ValueError: no eligible pair remains, which signals that the
            radius is too small to support another stacking level.
    """
    blocked = set()
    for pair in used:
        a, b = pair
        a = tuple(a)
        b = tuple(b)
        blocked.add((a, b) if a < b else (b, a))
    for a, b in g.edges:
        if (a, b) in blocked:
            continue
        if len(g.neighbors(a)) <= 2 and len(g.neighbors(b)) <= 2:
            return FreePair(a, b)
    raise ValueError("no adjacent pair with both degrees at most 2 remains")


def build_degree_three(k: int, p: int) -> CenteredGraph:
    """Family ``g3``: the degree-3 even-lattice family of diameter <= 2p.

    Planes x_k = i for |i| <= ceil(p/4) - 1 each hold a copy of the
    (k-1)-dimensional build at radius floor(p/4).  One designated free
    pair per plane carries the chaining: every even plane sends its
    first pair vertex up and its second pair vertex down, so no vertex
    collects more than one chaining edge and degree stays at most 3.

    Raises:
        ValueError: p below 4^(k-1), the smallest radius with enough
            room for k stacking levels.
    """
    BuildParams(k, p)
    least = 4 ** (k - 1)
    if p < least:
        raise ValueError(
            f"family g3 needs p >= 4^(k-1) = {least} at k = {k}, got p = {p}"
        )
    if k == 1:
        return _even_axis_path("g3", 1, p)
    m = -(-p // 4) - 1
    q = p // 4
    inner = build_degree_three(k - 1, q)
    pair = find_free_pair(inner.graph)
    verts = set()
    edges = set()
    for i in range(-m, m + 1):
        sv, se = _lift(inner, 2 * i)
        verts.update(sv)
        edges.update(se)
        if i % 2 == 0:
            if i + 1 <= m:
                edges.add((pair.v1 + (2 * i,), pair.v1 + (2 * i + 2,)))
            if i - 1 >= -m:
                edges.add((pair.v2 + (2 * i,), pair.v2 + (2 * i - 2,)))
    g = MeshGraph(EVEN, k, verts, edges)
    return CenteredGraph(g, ((0,) * k,), p, "g3")


# ============================================================
# Degree-1 and degree-2 optima
# ============================================================

def build_edge(k: int) -> CenteredGraph:
    """Family ``edge``: one mesh edge from the origin along axis 1."""
    BuildParams(k, 0)
    origin = (0,) * k
    other = (2,) + (0,) * (k - 1)
    g = MeshGraph(EVEN, k, [origin, other], [(origin, other)])
    return CenteredGraph(g, (origin,), 0, "edge")


def build_cycle(k: int, p: int, parity: LatticeParity = EVEN) -> CenteredGraph:
    """Family ``cycle``: a rectangle perimeter of height 1.

    Even parity spans true x_1 in [-(p-1), p] for a 4p-cycle of diameter
    2p; odd parity spans [-p + 1/2, p + 1/2] for a (4p+2)-cycle of
    diameter 2p+1.  Only the two end rungs are included, so every vertex
    has degree exactly 2.

    Raises:
        ValueError: k < 2 (a cycle needs two axes) or p < 1.
    """
    BuildParams(k, p, parity)
    if k < 2:
        raise ValueError("family cycle needs k >= 2")
    if p < 1:
        raise ValueError(f"family cycle needs p >= 1, got p = {p}")
    tail = (0,) * (k - 2)
    if parity is EVEN:
        xs = list(range(-2 * (p - 1), 2 * p + 1, 2))
    else:
        xs = list(range(-(2 * p - 1), 2 * p + 2, 2))
    bottom = [(x,) + tail + (0,) for x in xs]
    top = [(x,) + tail + (2,) for x in xs]
    edges = []
    for row in (bottom, top):
        edges.extend((row[i], row[i + 1]) for i in range(len(row) - 1))
    edges.append((bottom[0], top[0]))
    edges.append((bottom[-1], top[-1]))
    g = MeshGraph(parity, k, bottom + top, edges)
    if parity is EVEN:
        centers = ((0,) * k,)
    else:
        centers = ((-1,) + (0,) * (k - 1), (1,) + (0,) * (k - 1))
    return CenteredGraph(g, centers, p, "cycle")


# ============================================================
# Dispatch
# ============================================================

FAMILY_BUILDERS = {
    "e": build_even_core,
    "eprime": build_even_extended,
    "o": build_odd_core,
    "oprime": build_odd_extended,
    "g3": build_degree_three,
}


def build_family(family: str, k: int, p=None, parity=None) -> CenteredGraph:
    """Build any family by its code.

    ``parity`` only matters for the cycle family (default even).  The
    edge family takes no radius; pass p = 0 or leave it unset.

    Raises:
        ValueError: unknown family code or arguments the family rejects.
    """
    if family == "edge":
        if p not in (None, 0):
            raise ValueError(f"family edge has no radius parameter, got p = {p!r}")
        return build_edge(k)
    if p is None:
        raise ValueError(f"family {family!r} needs a radius parameter p")
    if family == "cycle":
        return build_cycle(k, p, parity if parity is not None else EVEN)
    builder = FAMILY_BUILDERS.get(family)
    if builder is None:
        raise ValueError(f"unknown family code {family!r}")
    return builder(k, p)
