"""Tree sets of cuts: axiom checking, pointing relations, orbit closures.

A tree set is a complementation-closed family of cuts that pairwise nest
(S1), has finite nesting intervals (S2) and excludes the empty and full
sets (S3).  On top of the verified family this module computes the two
pointing relations:

* ``e >> f``  (e points to f): f is strictly contained in e with no third
  cut strictly between.  These are exactly the covering pairs of the
  strict-inclusion order on the family.
* ``e <-> f`` (point away): ``e* >> f`` and ``f* >> e``, or ``e == f``.

Coterminality (``e == f`` or ``e >> f*``) groups cuts that will share a
terminal vertex in the cut tree; it is verified to be an equivalence
relation rather than assumed.

Sides are stored internally as integer bitmasks over the sorted vertex
list, which keeps the quadratic axiom checks fast at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .autos import set_orbit
from .cuts import Cut, classify_cut
from .errors import InputError, TightnessViolation, TreeSetViolation
from .graphs import TruncatedGraph

REL_EQUAL = "equal"
REL_POINTS_TO = "e-points-to-f"
REL_POINTED_FROM = "f-points-to-e"
REL_POINT_AWAY = "point-away"
REL_COMPARABLE_DISTANT = "comparable-distant"
REL_INCOMPARABLE = "incomparable-via-complement"

_S1_WITNESSES = ("e<=f", "e<=f*", "e*<=f", "e*<=f*")


def _subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class TreeSet:
    """A verified tree set over a fixed carrier graph."""

    graph: TruncatedGraph
    cuts: tuple[Cut, ...]
    complement_index: tuple[int, ...]
    points_to: frozenset[tuple[int, int]]
    points_away: frozenset[tuple[int, int]]
    s1_witness: dict = field(repr=False, compare=False, hash=False)
    max_interval_size: int
    all_tight: bool
    _masks: tuple = field(repr=False, compare=False, hash=False)
    _order: dict = field(repr=False, compare=False, hash=False)
    _children: tuple = field(repr=False, compare=False, hash=False)

    def __len__(self):
        return len(self.cuts)

    def index_of(self, members) -> int:
        key = frozenset(members)
        try:
            return self._order[key]
        except KeyError:
            raise InputError("cut is not a member of this tree set") from None

    def side(self, i: int) -> frozenset:
        return self.cuts[i].side

    def mask(self, i: int) -> int:
        return self._masks[i]

    def children(self, i: int) -> tuple[int, ...]:
        """Cuts f with cut_i >> f."""
        return self._children[i]

    def contains_vertex(self, i: int, vertex_bit: int) -> bool:
        return self._masks[i] & vertex_bit != 0

    def is_strict_subset(self, i: int, j: int) -> bool:
        return self._masks[i] != self._masks[j] and _subset(self._masks[i], self._masks[j])

    def coterminal(self, i: int, j: int) -> bool:
        return i == j or (i, self.complement_index[j]) in self.points_to

    def to_json_dict(self) -> dict:
        return {
            "cuts": [c.sorted_side() for c in self.cuts],
            "complements": list(self.complement_index),
            "points_to": sorted([list(p) for p in self.points_to]),
            "all_tight": self.all_tight,
        }


def vertex_bits(g: TruncatedGraph) -> dict[str, int]:
    return {v: 1 << i for i, v in enumerate(g.sorted_vertices())}


def check_tree_set(g: TruncatedGraph, sides, require_tight: bool = False) -> TreeSet:
    """Verify S1-S4 for the given cut sides and build the relation tables.

    Tightness of every member is recorded on the result (`all_tight`); it is
    only enforced when `require_tight` is set, since tree sets of non-tight
    cuts are legitimate (the pendant-pair family is the standard example).
    Raises TreeSetViolation naming the first failed axiom and witnesses,
    or TightnessViolation when enforcement is on.
    """
    side_sets = []
    seen = set()
    for s in sides:
        fs = frozenset(s)
        if fs not in seen:
            seen.add(fs)
            side_sets.append(fs)
    if not side_sets:
        raise InputError("a tree set needs at least one cut")
    for fs in side_sets:
        if not fs:
            raise TreeSetViolation("S3", (fs,), "the empty set is listed")
        if fs == g.vertices:
            raise TreeSetViolation("S3", (fs,), "the full vertex set is listed")
        if not fs <= g.vertices:
            raise InputError("cut side contains unknown vertices")
    side_sets.sort(key=lambda s: tuple(sorted(s)))
    order = {s: i for i, s in enumerate(side_sets)}

    comp = []
    for i, s in enumerate(side_sets):
        c = g.vertices - s
        if c not in order:
            raise TreeSetViolation("S4", (s,), "complement of a listed cut is missing")
        comp.append(order[c])

    cuts = tuple(classify_cut(g, s) for s in side_sets)
    all_tight = all(c.tight for c in cuts)
    if require_tight and not all_tight:
        bad = next(c for c in cuts if not c.tight)
        raise TightnessViolation(
            bad.side, f"cut {bad.sorted_side()} is not tight (a side is disconnected)"
        )

    bits = vertex_bits(g)
    masks = tuple(sum(bits[v] for v in s) for s in side_sets)
    full = (1 << len(bits)) - 1
    n = len(masks)

    s1_witness = {}
    for i in range(n):
        mi, ci = masks[i], full ^ masks[i]
        for j in range(i, n):
            mj, cj = masks[j], full ^ masks[j]
            if _subset(mi, mj):
                w = 0
            elif _subset(mi, cj):
                w = 1
            elif _subset(ci, mj):
                w = 2
            elif _subset(ci, cj):
                w = 3
            else:
                raise TreeSetViolation(
                    "S1",
                    (side_sets[i], side_sets[j]),
                    "crossing pair: none of the four inclusions holds",
                )
            s1_witness[(i, j)] = _S1_WITNESSES[w]

    # Strict-subset lists drive both S2 counting and the covering relation.
    subs = [[] for _ in range(n)]  # subs[j]: cuts strictly above j
    max_interval = 0
    for i in range(n):
        for j in range(n):
            if i != j and masks[j] != masks[i] and _subset(masks[j], masks[i]):
                subs[j].append(i)
    for j in range(n):
        if len(subs[j]) > max_interval:
            max_interval = len(subs[j])

    points_to = set()
    children = [[] for _ in range(n)]
    for j in range(n):
        above = sorted(subs[j], key=lambda i: bin(masks[i]).count("1"))
        covers = []
        for i in above:
            if not any(_subset(masks[c], masks[i]) for c in covers):
                covers.append(i)
                points_to.add((i, j))
                children[i].append(j)
    for ch in children:
        ch.sort()

    points_away = set()
    for i in range(n):
        for j in range(i, n):
            if i == j or ((comp[i], j) in points_to and (comp[j], i) in points_to):
                points_away.add((i, j))

    return TreeSet(
        graph=g,
        cuts=cuts,
        complement_index=tuple(comp),
        points_to=frozenset(points_to),
        points_away=frozenset(points_away),
        s1_witness=s1_witness,
        max_interval_size=max_interval,
        all_tight=all_tight,
        _masks=masks,
        _order=order,
        _children=tuple(tuple(ch) for ch in children),
    )


def relation(ts: TreeSet, e, f) -> str:
    """Classify the ordered pair of member cuts e, f."""
    i = ts.index_of(e if not isinstance(e, Cut) else e.side)
    j = ts.index_of(f if not isinstance(f, Cut) else f.side)
    if i == j:
        return REL_EQUAL
    if (i, j) in ts.points_to:
        return REL_POINTS_TO
    if (j, i) in ts.points_to:
        return REL_POINTED_FROM
    if (min(i, j), max(i, j)) in ts.points_away:
        return REL_POINT_AWAY
    if ts.is_strict_subset(i, j) or ts.is_strict_subset(j, i):
        return REL_COMPARABLE_DISTANT
    return REL_INCOMPARABLE


def orbit_closure(g: TruncatedGraph, auts, cut, budget: int = 100000) -> list[Cut]:
    """Closure of {e, e*} under the group generated by `auts`, canonically ordered."""
    side = cut.side if isinstance(cut, Cut) else frozenset(cut)
    orbit = set_orbit(auts, side, budget=budget)
    sides = {s for s in orbit} | {g.vertices - s for s in orbit}
    return [classify_cut(g, s) for s in sorted(sides, key=lambda s: tuple(sorted(s)))]
