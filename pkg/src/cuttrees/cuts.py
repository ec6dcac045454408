"""Edge-cut recognition and bounded enumeration of tight cuts.

A cut is one side `e` of an edge-cut; its complement is implicit.  `e` is
tight when both `e` and its complement induce connected subgraphs.  The
enumeration of all tight cuts with a given edge in the boundary and
boundary size at most k is a terminating bounded search: connected sides
are grown one vertex at a time and branches whose permanent boundary
already exceeds k are pruned.  A node budget turns pathological inputs
into explicit errors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .autos import group_closure, set_orbit
from .errors import BudgetError, InputError
from .graphs import TruncatedGraph, boundaries, canonical_edge

TRIVIAL = "trivial"
NONTRIVIAL = "nontrivial"

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class Cut:
    """One side of an edge-cut with its cached diagnostics.

    `nontrivial_flag` is the truncation proxy for "both sides infinite":
    nontrivial iff both the side and its complement meet a nonempty
    frontier.  Graphs without a frontier are genuinely finite, so every
    cut of theirs is trivial.
    """

    side: frozenset[str]
    boundary_size: int
    tight: bool
    nontrivial_flag: str

    def sorted_side(self) -> list[str]:
        return sorted(self.side)


def classify_cut(g: TruncatedGraph, members) -> Cut:
    side = frozenset(members)
    if not side or side == g.vertices:
        raise InputError("a cut side must be a nonempty proper subset")
    delta, _, _ = boundaries(g, side)
    complement = g.vertices - side
    tight = g.is_connected_set(side) and g.is_connected_set(complement)
    if g.frontier and (side & g.frontier) and (complement & g.frontier):
        flag = NONTRIVIAL
    else:
        flag = TRIVIAL
    return Cut(side, len(delta), tight, flag)


def complement_cut(g: TruncatedGraph, cut: Cut) -> Cut:
    return classify_cut(g, g.vertices - cut.side)


def _boundary_count(g, side) -> int:
    n = 0
    for v in side:
        for w in g.neighbors(v):
            if w not in side:
                n += 1
    return n


def enumerate_tight_cuts(
    g: TruncatedGraph,
    p: tuple[str, str],
    k: int,
    budget: int = DEFAULT_NODE_BUDGET,
) -> list[Cut]:
    """All tight cuts e with p in the edge boundary and |boundary| <= k.

    Complementary pairs are reported once; the canonical representative is
    the side containing the lexicographically smaller endpoint of p.
    Complete up to boundary size k (checked against brute force on small
    graphs in the test suite).
    """
    edge = canonical_edge(*p)
    if edge not in g.edges:
        raise InputError(f"edge {p!r} not in the graph")
    if k < 1:
        raise InputError("boundary bound k must be at least 1")
    u, v = edge  # u is the lexicographically smaller endpoint
    nodes = 0
    results = []

    def permanent_boundary(side, rejected):
        # Edges from the side into rejected vertices can never be closed.
        n = 0
        for x in side:
            for w in g.neighbors(x):
                if w in rejected:
                    n += 1
        return n

    def visit(side, rejected):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetError(
                f"tight-cut enumeration exceeded the {budget}-node search budget",
                budget=budget,
            )
        if _boundary_count(g, side) <= k:
            cut = classify_cut(g, side)
            if cut.tight:
                results.append(cut)
        # Candidates in fixed order; each connected superset is produced
        # exactly once by rejecting earlier candidates in later branches.
        candidates = sorted(
            {w for x in side for w in g.neighbors(x)} - side - rejected
        )
        newly_rejected = set()
        for w in candidates:
            new_side = side | {w}
            new_rej = rejected | newly_rejected
            if permanent_boundary(new_side, new_rej | {v}) <= k:
                visit(new_side, new_rej)
            newly_rejected.add(w)

    visit(frozenset({u}), frozenset())
    dedup = {c.side: c for c in results}
    return [dedup[s] for s in sorted(dedup, key=lambda s: tuple(sorted(s)))]


def find_structure_cuts(
    g: TruncatedGraph,
    auts,
    k: int,
    closure_budget: int = 20000,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[tuple[Cut, int]]:
    """Nontrivial tight cuts (one per orbit) whose orbit closure is a tree set.

    The group is the closure of `auts`; a cut qualifies when the orbit of
    {e, e*} under that group satisfies the tree-set axioms.  Returns the
    canonical representative of each qualifying orbit with the orbit
    closure size.
    """
    from .treesets import check_tree_set  # local import, avoids a cycle

    group = group_closure(g, auts, budget=closure_budget)
    seen_sides = set()
    per_orbit = {}
    for edge in sorted(g.edges):
        for cut in enumerate_tight_cuts(g, edge, k, budget=node_budget):
            if cut.nontrivial_flag != NONTRIVIAL:
                continue
            if cut.side in seen_sides:
                continue
            orbit = set_orbit(group, cut.side)
            closure = sorted(
                {s for s in orbit} | {g.vertices - s for s in orbit},
                key=lambda s: tuple(sorted(s)),
            )
            seen_sides.update(closure)
            rep = closure[0]
            try:
                check_tree_set(g, closure)
            except ValueError:
                continue
            per_orbit[tuple(sorted(rep))] = (classify_cut(g, rep), len(closure))
    return [per_orbit[key] for key in sorted(per_orbit)]
