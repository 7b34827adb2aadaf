"""Exhaustive search for the largest degree- and diameter-bounded mesh subgraph.

The instance is: inside the infinite k-dimensional mesh, find the most
vertices a subgraph can have while keeping every degree at most delta
and the diameter at most a given hop bound.  Subgraphs need not be
induced: dropping mesh edges is allowed, and sometimes required to meet
the degree cap.

Canonical frame.  Any feasible subgraph can be translated so that its
lexicographically smallest vertex is the origin.  Every other vertex is
then lexicographically positive and, because each hop moves taxicab
distance one, lies in the taxicab ball of radius D about the origin.
The search therefore runs over the origin plus the positive half of
that ball and loses no solutions.

The search is target descending: candidate sizes n are tried from an
upper bound downward, so the first feasible size is the optimum.  The
upper bound is the bipartite Moore bound (every mesh subgraph is
bipartite).  Within one size, vertex sets are explored in lexicographic
order with include-first branching, so the first witness found is the
lexicographically smallest one in the canonical frame.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from . import formulas
from .lattice_core import (
    INFINITE,
    LatticeParity,
    MeshGraph,
    diameter,
    max_degree,
    mesh_from_obj,
    mesh_to_obj,
)

MODES = ("exact", "induced")

#: Default limit on the full candidate ball; about a k=2, D=4 instance.
DEFAULT_REGION_CAP = 45


@dataclass(frozen=True)
class SolveRequest:
    """One solver instance plus its budgets.

    ``mode`` is "exact" (edge subsets allowed) or "induced" (the chosen
    vertices keep every mesh edge between them; result is then a lower
    bound for the exact problem unless the degree cap equals the mesh
    degree 2k, in which case the two problems coincide).

    ``region_cap`` bounds the full candidate ball; instances whose ball
    is larger are refused instead of silently truncated.
    """

    k: int
    delta: int
    diameter: int
    mode: str = "exact"
    max_nodes: int = None
    max_seconds: float = None
    region_cap: int = DEFAULT_REGION_CAP

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"dimension k must be an integer >= 1, got {self.k!r}")
        if not isinstance(self.delta, int) or isinstance(self.delta, bool) or self.delta < 1:
            raise ValueError(f"degree bound must be an integer >= 1, got {self.delta!r}")
        if not isinstance(self.diameter, int) or isinstance(self.diameter, bool) or self.diameter < 0:
            raise ValueError(f"diameter bound must be an integer >= 0, got {self.diameter!r}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.max_nodes is not None and (not isinstance(self.max_nodes, int) or self.max_nodes < 1):
            raise ValueError(f"max_nodes must be a positive integer or None, got {self.max_nodes!r}")
        if self.max_seconds is not None and not self.max_seconds > 0:
            raise ValueError(f"max_seconds must be positive or None, got {self.max_seconds!r}")
        if not isinstance(self.region_cap, int) or self.region_cap < 1:
            raise ValueError(f"region_cap must be a positive integer, got {self.region_cap!r}")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one search.

    ``optimal`` is True only when the search exhausted every candidate
    within budget (and, in induced mode, the degree cap equals the mesh
    degree so induced and exact optima coincide).  The witness graph is
    in doubled coordinates like every other graph in this package.
    """

    request: SolveRequest
    optimum: int
    witness: MeshGraph
    optimal: bool
    explored: int
    elapsed: float
    notes: tuple = ()


class _BudgetExceeded(Exception):
    pass


class _Budget:
    __slots__ = ("max_nodes", "deadline", "nodes")

    def __init__(self, max_nodes, max_seconds):
        self.max_nodes = max_nodes
        self.deadline = None if max_seconds is None else time.monotonic() + max_seconds
        self.nodes = 0

    def spend(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExceeded(f"node budget {self.max_nodes} exhausted")
        if self.deadline is not None and (self.nodes & 0xFF) == 0:
            if time.monotonic() > self.deadline:
                raise _BudgetExceeded("time budget exhausted")


def _bipartite_moore(delta: int, d: int) -> int:
    # Largest possible bipartite graph with max degree delta and
    # diameter d; mesh subgraphs are bipartite, so this caps the search.
    return 2 * sum((delta - 1) ** i for i in range(d))


def _ball_points(k: int, radius: int) -> list:
    """All true-coordinate integer points with taxicab norm <= radius."""
    pts = []

    def walk(prefix, budget):
        if len(prefix) == k - 1:
            for c in range(-budget, budget + 1):
                pts.append(prefix + (c,))
            return
        for c in range(-budget, budget + 1):
            walk(prefix + (c,), budget - abs(c))

    walk((), radius)
    return pts


def _canonical(pt) -> bool:
    # Origin, or first nonzero coordinate positive: the half of the
    # ball that can follow a lexicographically minimal origin.
    for c in pt:
        if c:
            return c > 0
    return True


def _mask_bfs(adj, src, n):
    dist = [-1] * n
    dist[src] = 0
    frontier = 1 << src
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        nxt &= ~seen
        seen |= nxt
        f = nxt
        while f:
            b = f & -f
            dist[b.bit_length() - 1] = d
            f ^= b
        frontier = nxt
    return dist


class _Search:
    """Fixed-size subset search over the canonical half ball."""

    def __init__(self, adj, compat, delta, bound, mode, budget):
        self.adj = adj
        self.compat = compat
        self.delta = delta
        self.bound = bound
        self.mode = mode
        self.budget = budget
        self.target = 0

    def run(self, target):
        self.target = target
        if target == 1:
            return [0], []
        return self._rec([0], 1, self.compat[0])

    def _reach_within(self, src_bit, allowed):
        reach = src_bit
        frontier = src_bit
        for _ in range(self.bound):
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= self.adj[b.bit_length() - 1]
                f ^= b
            nxt &= allowed & ~reach
            if not nxt:
                break
            reach |= nxt
            frontier = nxt
        return reach

    def _rec(self, chosen, smask, cand):
        self.budget.spend()
        need = self.target - len(chosen)
        if need == 0:
            return self._leaf(chosen, smask)
        if cand.bit_count() < need:
            return None
        # Every chosen vertex must still reach every other within the
        # bound using only chosen-or-candidate vertices; subsets only
        # lose paths, so failure here dooms the whole subtree.
        allowed = smask | cand
        for i in chosen:
            if smask & ~self._reach_within(1 << i, allowed):
                return None
        b = cand & -cand
        j = b.bit_length() - 1
        rest = cand ^ b
        found = self._rec(chosen + [j], smask | b, rest & self.compat[j])
        if found is not None:
            return found
        return self._rec(chosen, smask, rest)

    def _leaf(self, chosen, smask):
        n = len(chosen)
        local = {v: i for i, v in enumerate(chosen)}
        nbrs = []
        for v in chosen:
            m = self.adj[v] & smask
            row = []
            while m:
                b = m & -m
                row.append(local[b.bit_length() - 1])
                m ^= b
            nbrs.append(row)
        dist = _all_pairs(nbrs)
        worst = 0
        for row in dist:
            for d in row:
                if d < 0:
                    return None  # induced graph disconnected: no edge subset can help
                if d > worst:
                    worst = d
        if worst > self.bound:
            return None  # removing edges only grows distances
        if max(len(r) for r in nbrs) <= self.delta:
            edges = _edge_list(nbrs)
        elif self.mode == "induced":
            return None
        else:
            edges = self._shed_degrees(nbrs)
            if edges is None:
                return None
        return chosen, [(chosen[a], chosen[b]) for a, b in edges]


    def _shed_degrees(self, nbrs):
        """Search edge subsets until every degree fits, distances allowing.

        Branches on the edges of the smallest over-degree vertex: any
        feasible edge subset must drop at least one of them.  States
        that disconnect the graph or stretch its diameter past the bound
        are cut, since further removal cannot undo either.
        """
        n = len(nbrs)
        all_edges = tuple(_edge_list(nbrs))
        seen = set()

        def attempt(present):
            if present in seen:
                return None
            seen.add(present)
            self.budget.spend()
            deg = [0] * n
            for a, b in present:
                deg[a] += 1
                deg[b] += 1
            bad = -1
            for v in range(n):
                if deg[v] > self.delta:
                    bad = v
                    break
            if bad < 0:
                return present
            for e in all_edges:
                if bad not in e or e not in present:
                    continue
                trimmed = present - {e}
                rows = [[] for _ in range(n)]
                for a, b in trimmed:
                    rows[a].append(b)
                    rows[b].append(a)
                dist = _all_pairs(rows)
                ok = True
                for row in dist:
                    for d in row:
                        if d < 0 or d > self.bound:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    continue
                found = attempt(trimmed)
                if found is not None:
                    return found
            return None

        found = attempt(frozenset(all_edges))
        if found is None:
            return None
        return sorted(found)


def _edge_list(nbrs):
    return sorted((a, b) for a, row in enumerate(nbrs) for b in row if a < b)


def _all_pairs(nbrs):
    n = len(nbrs)
    out = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = [s]
        for u in queue:
            du = dist[u] + 1
            for w in nbrs[u]:
                if dist[w] < 0:
                    dist[w] = du
                    queue.append(w)
        out.append(dist)
    return out


def solve_exact(req: SolveRequest) -> SolveResult:
    """Solve one instance exactly, or report how far the budget got.

    Returns the optimum size, the lexicographically smallest witness in
    the canonical frame (vertex list first, then the deterministic edge
    choice), and whether the result is proven optimal.  On budget
    exhaustion the result carries optimal=False, a single-vertex
    witness, and an explanatory note.

    Raises:
        ValueError: the candidate ball exceeds the request's region cap.
    """
    t0 = time.monotonic()
    notes = []
    delta = req.delta
    mesh_degree = 2 * req.k
    if delta > mesh_degree:
        notes.append(
            f"degree bound {delta} clamped to the mesh degree {mesh_degree}"
        )
        delta = mesh_degree
    bound = req.diameter

    if bound == 0:
        notes.append("diameter 0 admits single vertices only")
        return _finish(req, [(0,) * req.k], [], 1, True, 0, t0, notes)

    full = formulas.count_points(LatticeParity.EVEN, req.k, bound)
    if full > req.region_cap:
        raise ValueError(
            f"candidate ball holds {full} vertices, above the region cap "
            f"{req.region_cap}; raise region_cap to search this instance"
        )

    pts = sorted(pt for pt in _ball_points(req.k, bound) if _canonical(pt))
    n_r = len(pts)
    pos = {pt: i for i, pt in enumerate(pts)}
    adj = [0] * n_r
    for i, pt in enumerate(pts):
        for axis in range(req.k):
            for step in (-1, 1):
                q = pt[:axis] + (pt[axis] + step,) + pt[axis + 1:]
                j = pos.get(q)
                if j is not None:
                    adj[i] |= 1 << j
    dist = [_mask_bfs(adj, s, n_r) for s in range(n_r)]
    compat = [0] * n_r
    for i in range(n_r):
        for j in range(n_r):
            if i != j and 0 <= dist[i][j] <= bound:
                compat[i] |= 1 << j

    budget = _Budget(req.max_nodes, req.max_seconds)
    search = _Search(adj, compat, delta, bound, req.mode, budget)
    n_hi = min(n_r, _bipartite_moore(delta, bound))

    found = None
    exhausted = True
    try:
        for n in range(n_hi, 1, -1):
            found = search.run(n)
            if found is not None:
                break
    except _BudgetExceeded as exc:
        notes.append(f"{exc}; search incomplete, reporting the trivial witness")
        exhausted = False
        found = None

    if found is None:
        verts = [(0,) * req.k]
        edges = []
        optimum = 1
    else:
        chosen, edge_pairs = found
        verts = [pts[i] for i in chosen]
        edges = [(pts[a], pts[b]) for a, b in edge_pairs]
        optimum = len(verts)

    if req.mode == "induced":
        if delta == mesh_degree:
            optimal = exhausted
            notes.append(
                "induced search is exact here: the degree cap equals the mesh degree"
            )
        else:
            optimal = False
            notes.append(
                "induced-only optimum is a lower bound: exact subgraphs may drop edges"
            )
    else:
        optimal = exhausted

    return _finish(req, verts, edges, optimum, optimal, budget.nodes, t0, notes)


def _finish(req, verts, edges, optimum, optimal, explored, t0, notes):
    doubled = {v: tuple(2 * c for c in v) for v in verts}
    witness = MeshGraph(
        LatticeParity.EVEN,
        req.k,
        list(doubled.values()),
        [(doubled[a], doubled[b]) for a, b in edges],
    )
    return SolveResult(
        request=req,
        optimum=optimum,
        witness=witness,
        optimal=optimal,
        explored=explored,
        elapsed=time.monotonic() - t0,
        notes=tuple(notes),
    )


def verify_witness(res: SolveResult, req: SolveRequest) -> bool:
    """Recheck a result's witness from scratch against its request.

    Confirms the vertex count matches the claimed optimum, the maximum
    degree fits the requested cap, and the diameter fits the bound
    (which implies connectivity).  Edge validity is enforced by the
    witness graph itself.
    """
    w = res.witness
    if len(w.vertices) != res.optimum:
        return False
    if max_degree(w) > req.delta:
        return False
    if len(w.vertices) > 1:
        d = diameter(w)
        if d is INFINITE or d > req.diameter:
            return False
    return True


# ============================================================
# Serialization
# ============================================================

def request_to_obj(req: SolveRequest) -> dict:
    return {
        "k": req.k,
        "delta": req.delta,
        "diameter": req.diameter,
        "mode": req.mode,
        "max_nodes": req.max_nodes,
        "max_seconds": req.max_seconds,
        "region_cap": req.region_cap,
    }


def request_from_obj(obj: dict) -> SolveRequest:
    if not isinstance(obj, dict):
        raise ValueError("solve request must be a JSON object")
    try:
        return SolveRequest(
            k=obj["k"],
            delta=obj["delta"],
            diameter=obj["diameter"],
            mode=obj.get("mode", "exact"),
            max_nodes=obj.get("max_nodes"),
            max_seconds=obj.get("max_seconds"),
            region_cap=obj.get("region_cap", DEFAULT_REGION_CAP),
        )
    except KeyError as exc:
        raise ValueError(f"solve request is missing key {exc.args[0]!r}") from None


def result_to_obj(res: SolveResult) -> dict:
    return {
        "request": request_to_obj(res.request),
        "optimum": res.optimum,
        "optimal": res.optimal,
        "explored": res.explored,
        "elapsed": res.elapsed,
        "notes": list(res.notes),
        "witness": mesh_to_obj(res.witness, (), "witness", 0),
    }


def result_from_obj(obj: dict) -> SolveResult:
    if not isinstance(obj, dict):
        raise ValueError("solve result must be a JSON object")
    required = ("request", "optimum", "optimal", "explored", "elapsed", "notes", "witness")
    for key in required:
        if key not in obj:
            raise ValueError(f"solve result is missing key {key!r}")
    witness, _, family, _ = mesh_from_obj(obj["witness"])
    if family != "witness":
        raise ValueError(f"embedded graph has family {family!r}, expected 'witness'")
    return SolveResult(
        request=request_from_obj(obj["request"]),
        optimum=obj["optimum"],
        witness=witness,
        optimal=obj["optimal"],
        explored=obj["explored"],
        elapsed=obj["elapsed"],
        notes=tuple(obj["notes"]),
    )


def request_to_json(req: SolveRequest) -> str:
    return json.dumps(request_to_obj(req), separators=(",", ":"))


def request_from_json(text: str) -> SolveRequest:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return request_from_obj(obj)


def result_to_json(res: SolveResult) -> str:
    return json.dumps(result_to_obj(res), separators=(",", ":"))


def result_from_json(text: str) -> SolveResult:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return result_from_obj(obj)
