"""Automorphism machinery: verification, backtracking enumeration, closures.

Permutations are plain dicts vertex -> vertex.  Enumeration is exhaustive
backtracking with degree and frontier-flag pruning; it is meant for the
desk-scale instances this package analyzes, with an explicit budget so a
pathological input fails loudly instead of hanging.
"""

from __future__ import annotations

from .errors import BudgetError, InputError
from .graphs import TruncatedGraph, canonical_edge


def is_automorphism(g: TruncatedGraph, perm: dict) -> bool:
    """True iff perm is a graph automorphism mapping frontier onto frontier."""
    if set(perm) != set(g.vertices) or set(perm.values()) != set(g.vertices):
        return False
    if {perm[v] for v in g.frontier} != set(g.frontier):
        return False
    for u, v in g.edges:
        if canonical_edge(perm[u], perm[v]) not in g.edges:
            return False
    return True


def compose(p: dict, q: dict) -> dict:
    """p after q."""
    return {v: p[q[v]] for v in q}


def identity_perm(g: TruncatedGraph) -> dict:
    return {v: v for v in g.vertices}


def enumerate_automorphisms(g: TruncatedGraph, limit: int | None = None) -> list[dict]:
    """All frontier-respecting automorphisms of g, deterministically ordered.

    Raises BudgetError with the partial count when `limit` is exceeded.
    """
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    sig = {v: (g.degree(v), v in g.frontier) for v in g.vertices}
    by_sig: dict = {}
    for v in g.vertices:
        by_sig.setdefault(sig[v], []).append(v)
    for vs in by_sig.values():
        vs.sort()

    found: list[dict] = []

    def extend(i, mapping, used):
        if limit is not None and len(found) >= limit:
            raise BudgetError(
                f"automorphism enumeration exceeded {limit} results",
                budget=limit,
                partial=len(found),
            )
        if i == len(order):
            found.append(dict(mapping))
            return
        v = order[i]
        for w in by_sig[sig[v]]:
            if w in used:
                continue
            ok = True
            for u in g.neighbors(v):
                if pos[u] < i and not g.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                extend(i + 1, mapping, used)
                used.discard(w)
                del mapping[v]

    extend(0, {}, set())
    found.sort(key=lambda p: tuple(p[v] for v in order))
    return found


def group_closure(g: TruncatedGraph, generators, budget: int = 20000) -> list[dict]:
    """Group generated by the given automorphisms, as a deduplicated list."""
    for p in generators:
        if not is_automorphism(g, p):
            raise InputError("generator is not a frontier-respecting automorphism")
    keys = sorted(g.vertices)

    def key(p):
        return tuple(p[v] for v in keys)

    ident = identity_perm(g)
    seen = {key(ident): ident}
    frontier_elems = [ident]
    while frontier_elems:
        nxt = []
        for p in frontier_elems:
            for gen in generators:
                q = compose(gen, p)
                k = key(q)
                if k not in seen:
                    if len(seen) >= budget:
                        raise BudgetError(
                            f"group closure exceeded {budget} elements",
                            budget=budget,
                            partial=len(seen),
                        )
                    seen[k] = q
                    nxt.append(q)
        frontier_elems = nxt
    return [seen[k] for k in sorted(seen)]


def apply_to_set(perm: dict, members) -> frozenset:
    return frozenset(perm[v] for v in members)


def set_orbit(perms, members, budget: int = 100000) -> list[frozenset]:
    """Orbit of a vertex set under the group generated by `perms`.

    Iterates to a fixpoint, so a generator list (not necessarily closed)
    is fine.
    """
    start = frozenset(members)
    seen = {start}
    queue = [start]
    while queue:
        s = queue.pop()
        for p in perms:
            t = apply_to_set(p, s)
            if t not in seen:
                if len(seen) >= budget:
                    raise BudgetError(
                        f"set orbit exceeded {budget} elements", budget=budget, partial=len(seen)
                    )
                seen.add(t)
                queue.append(t)
    return sorted(seen, key=lambda s: tuple(sorted(s)))


def vertex_orbit(group, v) -> frozenset:
    return frozenset(p[v] for p in group)
