"""Finite graphs with a marked frontier sphere.

A TruncatedGraph is a connected, loop-free, simple undirected graph whose
`frontier` marks the vertices where a finite model was severed from an
infinite one.  Every analysis in this package is a pure function of such
graphs; instances are immutable after construction and safe to share
between concurrent readers.

Vertex identifiers are opaque strings.  All set-valued results come back
in canonical (sorted-identifier) order so reruns produce identical output.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .errors import InputError

#: Returned by set_diameter when two members cannot reach each other.
#: Unreachable for a connected carrier graph; kept for the contract.
DISCONNECTED_INFINITE = "disconnected-infinite"


def canonical_edge(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class TruncatedGraph:
    """A finite graph, optionally a radius-`radius` ball around `center`.

    When both `center` and `radius` are set, every frontier vertex lies at
    distance exactly `radius` from `center`.  Families whose truncations
    cannot be metric balls (non-locally-finite ones) set `radius=None` and
    mark severed vertices in `frontier` directly.
    """

    vertices: frozenset[str]
    edges: frozenset[tuple[str, str]]
    frontier: frozenset[str] = frozenset()
    center: str | None = None
    radius: int | None = None
    _adj: dict = field(init=False, repr=False, compare=False, hash=False, default=None)
    _dist_cache: dict = field(init=False, repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        if not self.vertices:
            raise InputError("graph needs at least one vertex")
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"loop at {u!r} not allowed")
            if e != canonical_edge(u, v):
                raise InputError(f"edge {e!r} not in canonical endpoint order")
            if u not in adj or v not in adj:
                raise InputError(f"edge {e!r} has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        if not self.frontier <= self.vertices:
            raise InputError("frontier must be a subset of the vertices")
        if self.center is not None and self.center not in self.vertices:
            raise InputError(f"center {self.center!r} is not a vertex")
        object.__setattr__(self, "_adj", {v: tuple(sorted(ns)) for v, ns in adj.items()})
        object.__setattr__(self, "_dist_cache", {})
        if len(self._component_of(next(iter(self.vertices)), self.vertices)) != len(self.vertices):
            raise InputError("graph must be connected")
        if self.center is not None and self.radius is not None:
            for f in self.frontier:
                if self.distance(self.center, f) != self.radius:
                    raise InputError(
                        f"frontier vertex {f!r} is not at distance {self.radius} from the center"
                    )

    @staticmethod
    def build(edges, frontier=(), center=None, radius=None, isolated=()):
        """Construct from an edge iterable; endpoints define the vertex set."""
        canon = frozenset(canonical_edge(u, v) for u, v in edges)
        verts = {u for e in canon for u in e} | set(isolated)
        return TruncatedGraph(frozenset(verts), canon, frozenset(frontier), center, radius)

    # -- basic accessors -------------------------------------------------

    def neighbors(self, v: str) -> tuple[str, ...]:
        if v not in self._adj:
            raise InputError(f"unknown vertex {v!r}")
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    @property
    def interior(self) -> frozenset[str]:
        """Vertices not on the frontier; the honest domain for per-vertex maps."""
        return self.vertices - self.frontier

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def has_edge(self, u: str, v: str) -> bool:
        return canonical_edge(u, v) in self.edges

    # -- metric ----------------------------------------------------------

    def distances_from(self, source: str, stop_when=None) -> dict[str, int]:
        """BFS distance map from `source`, cached per graph.

        `stop_when` may name a target set; the search halts early once all
        of it has been reached (the cache then holds a partial map, marked
        so a later full query redoes the walk).
        """
        if source not in self._adj:
            raise InputError(f"unknown vertex {source!r}")
        cached = self._dist_cache.get(source)
        if cached is not None:
            dist, complete = cached
            if complete or (stop_when is not None and all(t in dist for t in stop_when)):
                return dist
        dist = {source: 0}
        pending = set(stop_when) - {source} if stop_when is not None else None
        queue = deque([source])
        while queue:
            if pending is not None and not pending:
                break
            u = queue.popleft()
            du = dist[u]
            for w in self._adj[u]:
                if w not in dist:
                    dist[w] = du + 1
                    if pending is not None:
                        pending.discard(w)
                    queue.append(w)
        complete = len(dist) == len(self.vertices)
        self._dist_cache[source] = (dist, complete)
        return dist

    def distance(self, x: str, y: str) -> int:
        if y not in self._adj:
            raise InputError(f"unknown vertex {y!r}")
        return self.distances_from(x, stop_when=(y,))[y]

    def ball(self, center: str, r: int) -> frozenset[str]:
        dist = self.distances_from(center)
        return frozenset(v for v, d in dist.items() if d <= r)

    def _component_of(self, start, allowed):
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def is_connected_set(self, members) -> bool:
        members = set(members)
        if not members:
            return False
        return len(self._component_of(next(iter(members)), members)) == len(members)

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vertices": self.sorted_vertices(),
            "edges": sorted([list(e) for e in self.edges]),
            "frontier": sorted(self.frontier),
            "center": self.center,
            "radius": self.radius,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @staticmethod
    def from_json_dict(data: dict) -> "TruncatedGraph":
        return TruncatedGraph(
            vertices=frozenset(data["vertices"]),
            edges=frozenset(tuple(e) for e in data["edges"]),
            frontier=frozenset(data.get("frontier", ())),
            center=data.get("center"),
            radius=data.get("radius"),
        )


# -- module operations ----------------------------------------------------


def distance(g: TruncatedGraph, x: str, y: str) -> int:
    """Shortest-path distance in g; raises InputError for unknown vertices."""
    return g.distance(x, y)


def boundaries(g: TruncatedGraph, members) -> tuple[frozenset, frozenset, frozenset]:
    """Edge boundary, vertex boundary and inner vertex boundary of a side.

    Returns (delta, theta, inner_theta): the crossing edges, the complement
    vertices adjacent to the side, and the side vertices adjacent to the
    complement.  Empty and full sides have no boundary and are rejected.
    """
    side = frozenset(members)
    if not side:
        raise InputError("empty set has no boundary")
    if not side <= g.vertices:
        raise InputError("side contains unknown vertices")
    if side == g.vertices:
        raise InputError("full vertex set has no boundary")
    delta = set()
    theta = set()
    inner = set()
    for v in side:
        for w in g.neighbors(v):
            if w not in side:
                delta.add(canonical_edge(v, w))
                theta.add(w)
                inner.add(v)
    return frozenset(delta), frozenset(theta), frozenset(inner)


def components(g: TruncatedGraph, members) -> list[tuple[frozenset, bool]]:
    """Connected pieces of the induced subgraph on `members`.

    Each piece is flagged True when it meets the frontier.  Unflagged
    pieces are certifiedly bounded: they cannot continue past the
    truncation, which is the finite stand-in for finite-diameter
    complement components.
    """
    remaining = set(members)
    if not remaining <= g.vertices:
        raise InputError("set contains unknown vertices")
    out = []
    while remaining:
        start = min(remaining)
        piece = g._component_of(start, remaining)
        remaining -= piece
        out.append((frozenset(piece), bool(piece & g.frontier)))
    out.sort(key=lambda pair: min(pair[0]))
    return out


def set_diameter(g: TruncatedGraph, members):
    """Max pairwise distance of `members`, measured in the ambient graph.

    Paths may leave the set.  Singleton sets have diameter 0.
    """
    side = sorted(set(members))
    if not side:
        raise InputError("empty set has no diameter")
    if not set(side) <= g.vertices:
        raise InputError("set contains unknown vertices")
    targets = set(side)
    best = 0
    for v in side:
        dist = g.distances_from(v, stop_when=targets)
        for w in side:
            if w not in dist:
                return DISCONNECTED_INFINITE
            if dist[w] > best:
                best = dist[w]
    return best
