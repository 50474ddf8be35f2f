"""Exact solvers: dichromatic number of a digraph (branch and bound over
acyclic classes), max-over-orientations dichromatic number of a graph,
chromatic number (DSATUR branch and bound), and a desk-scale list-dichromatic
decision procedure."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .colorings import Coloring
from .digraph import (
    Digraph,
    FamilyGraph,
    is_acyclic,
    orientation_from_mask,
    subset_topo_order,
)


@dataclass
class SolveBudget:
    node_limit: int = 50_000_000
    time_limit: float = 600.0
    orientation_cap: int = 24
    sample_count: int = 200
    seed: int = 0

    def __post_init__(self):
        if min(self.node_limit, self.sample_count) <= 0 or self.time_limit <= 0:
            raise ValueError("budget fields must be positive")


@dataclass
class SolveResult:
    lower: int
    upper: int
    exact: bool
    coloring: Optional[Coloring] = None
    witness_orientation_mask: Optional[int] = None
    nodes: int = 0
    seconds: float = 0.0

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError("inexact result has no single value; use lower/upper")
        return self.upper

    def to_json(self, path, coloring_file: Optional[str] = None) -> None:
        data = {
            "value": self.upper if self.exact else None,
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
            "coloring_file": coloring_file,
            "witness_orientation_mask": self.witness_orientation_mask,
            "nodes": self.nodes,
            "seconds": self.seconds,
        }
        with open(path, "w", newline="\n") as fh:
            json.dump(data, fh, indent=2)
            fh.write("\n")


class _Exhausted(Exception):
    pass


def degeneracy_order(adj: list) -> list:
    """Vertex order by repeatedly removing a minimum-degree vertex (ties: id)."""
    n = len(adj)
    alive = (1 << n) - 1
    order = []
    for _ in range(n):
        v = min((x for x in range(n) if alive >> x & 1),
                key=lambda x: ((adj[x] & alive).bit_count(), x))
        order.append(v)
        alive ^= 1 << v
    return order


def _symmetrized_adj(D: Digraph) -> list:
    adj = [0] * D.n_vertices
    for u, v in D.arcs():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def dichromatic_number(D: Digraph, budget: Optional[SolveBudget] = None) -> SolveResult:
    """Minimum number of classes partitioning V(D) into acyclic subdigraphs.

    Branch and bound: vertices are assigned in descending degeneracy order of
    the symmetrized graph; a class accepts a vertex only if the induced
    subdigraph stays acyclic. New classes are opened at most once per level
    (classes are interchangeable). Returns an interval result when the budget
    runs out.
    """
    t0 = time.monotonic()
    budget = budget or SolveBudget()
    n = D.n_vertices
    if n > 64:
        raise ValueError(f"{n} vertices exceeds the 64-vertex exact-path cap")
    if n == 0:
        return SolveResult(1, 1, True, Coloring((), 1), nodes=0)

    cert = is_acyclic(D)
    if cert.acyclic:
        return SolveResult(1, 1, True, Coloring((1,) * n, 1), nodes=1,
                           seconds=time.monotonic() - t0)
    lb = 2  # a directed cycle exists

    out = D.out_masks
    order = degeneracy_order(_symmetrized_adj(D))[::-1]

    # greedy first-fit upper bound along the branching order
    classes: list[int] = []
    greedy_assign = [0] * n
    for v in order:
        for ci, cmask in enumerate(classes):
            if subset_topo_order(out, cmask | 1 << v) is not None:
                classes[ci] |= 1 << v
                greedy_assign[v] = ci + 1
                break
        else:
            classes.append(1 << v)
            greedy_assign[v] = len(classes)

    best = len(classes)
    best_assign = greedy_assign[:]
    nodes = 0

    def bnb(i: int, classes: list, assign: list) -> None:
        nonlocal best, best_assign, nodes
        nodes += 1
        if nodes > budget.node_limit or time.monotonic() - t0 > budget.time_limit:
            raise _Exhausted
        if best == lb:
            return
        if i == n:
            best = len(classes)
            best_assign = assign[:]
            return
        if len(classes) >= best:
            return
        v = order[i]
        bit = 1 << v
        for ci in range(len(classes)):
            if subset_topo_order(out, classes[ci] | bit) is not None:
                classes[ci] |= bit
                assign[v] = ci + 1
                bnb(i + 1, classes, assign)
                classes[ci] ^= bit
        if len(classes) + 1 < best:
            classes.append(bit)
            assign[v] = len(classes)
            bnb(i + 1, classes, assign)
            classes.pop()
        assign[v] = 0

    exact = True
    try:
        bnb(0, [], [0] * n)
    except _Exhausted:
        exact = best == lb
    coloring = Coloring(tuple(best_assign), best)
    return SolveResult(best if exact else lb, best, exact,
                       coloring, nodes=nodes, seconds=time.monotonic() - t0)


def greedy_chromatic_upper(G: FamilyGraph) -> Coloring:
    """DSATUR greedy coloring; classes are independent sets."""
    n = G.n_vertices
    colors = [0] * n
    if n == 0:
        return Coloring((), 1)
    sat = [0] * n  # bitmask of neighbor colors (bit c-1)
    for _ in range(n):
        v = max((x for x in range(n) if colors[x] == 0),
                key=lambda x: (sat[x].bit_count(), G.degree(x), -x))
        c = 1
        while sat[v] >> (c - 1) & 1:
            c += 1
        colors[v] = c
        m = G.adj[v]
        while m:
            low = m & -m
            sat[low.bit_length() - 1] |= 1 << (c - 1)
            m ^= low
    return Coloring(tuple(colors), max(colors))


def greedy_clique(G: FamilyGraph) -> list:
    """Greedy clique grown from high-degree vertices; a chromatic lower bound."""
    clique: list[int] = []
    cand = sorted(range(G.n_vertices), key=lambda v: (-G.degree(v), v))
    for v in cand:
        if all(G.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def chromatic_number(G: FamilyGraph, budget: Optional[SolveBudget] = None) -> SolveResult:
    """Exact chromatic number by DSATUR-style branch and bound."""
    t0 = time.monotonic()
    budget = budget or SolveBudget()
    n = G.n_vertices
    if n == 0:
        return SolveResult(1, 1, True, Coloring((), 1))

    lb = max(1, len(greedy_clique(G)))
    greedy = greedy_chromatic_upper(G)
    best = greedy.palette_size
    best_assign = list(greedy.colors)
    nodes = 0
    colors = [0] * n

    def bnb(num_colored: int, max_used: int) -> None:
        nonlocal best, best_assign, nodes
        nodes += 1
        if nodes > budget.node_limit or time.monotonic() - t0 > budget.time_limit:
            raise _Exhausted
        if best == lb:
            return
        if num_colored == n:
            best = max_used
            best_assign = colors[:]
            return
        # saturation-degree branching
        v = -1
        key = (-1, -1, 0)
        for x in range(n):
            if colors[x]:
                continue
            seen = 0
            m = G.adj[x]
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if colors[u]:
                    seen |= 1 << colors[u]
                m ^= low
            cand = (seen.bit_count(), G.degree(x), -x)
            if cand > key:
                key, v, vseen = cand, x, seen
        for c in range(1, min(max_used + 1, best - 1) + 1):
            if vseen >> c & 1:
                continue
            colors[v] = c
            bnb(num_colored + 1, max(max_used, c))
            colors[v] = 0

    exact = True
    try:
        bnb(0, 0)
    except _Exhausted:
        exact = best == lb
    coloring = Coloring(tuple(best_assign), max(best, 1))
    return SolveResult(best if exact else lb, best, exact,
                       coloring, nodes=nodes, seconds=time.monotonic() - t0)


def dichromatic_number_graph(G: FamilyGraph, mode: str = "exhaustive",
                             budget: Optional[SolveBudget] = None) -> SolveResult:
    """Max of dichromatic_number over orientations of G.

    exhaustive: iterates 2^(|E|-1) orientation masks (an orientation and its
    reversal have equal value) and returns the exact max with the lowest-index
    witness mask. sample: seeded random orientations; lower bound only, with
    the greedy chromatic palette as a sound upper bound (independent classes
    are acyclic under every orientation).
    """
    t0 = time.monotonic()
    budget = budget or SolveBudget()
    m = G.n_edges
    if m == 0:
        return SolveResult(1, 1, True, Coloring((1,) * G.n_vertices, 1),
                           witness_orientation_mask=0)

    ub = greedy_chromatic_upper(G).palette_size
    best_val = 0
    witness_mask = None
    witness_coloring = None
    nodes = 0

    if mode == "exhaustive":
        if m > budget.orientation_cap:
            raise ValueError(f"{m} edges exceeds orientation cap {budget.orientation_cap}")
        masks = range(1 << (m - 1))
    elif mode == "sample":
        rng = random.Random(budget.seed)
        masks = [rng.getrandbits(m) for _ in range(budget.sample_count)]
    else:
        raise ValueError(f"unknown mode {mode!r}")

    exhausted = False
    for mask in masks:
        if time.monotonic() - t0 > budget.time_limit or nodes > budget.node_limit:
            exhausted = True
            break
        D = orientation_from_mask(G, mask)
        res = dichromatic_number(D, budget)
        nodes += res.nodes
        if not res.exact:
            exhausted = True
            break
        if res.value > best_val:
            best_val = res.value
            witness_mask = mask
            witness_coloring = res.coloring
    exact = mode == "exhaustive" and not exhausted
    return SolveResult(best_val if best_val else 1,
                       best_val if exact else max(ub, best_val, 1),
                       exact, witness_coloring,
                       witness_orientation_mask=witness_mask,
                       nodes=nodes, seconds=time.monotonic() - t0)


# ---------------------------------------------------------------------------
# list dichromatic number, desk scale

LIST_VERTEX_CAP = 6
LIST_SIZE_CAP = 3


def _acceptable_coloring_exists(out, n: int, lists: list) -> bool:
    """Backtracking: pick a color from each vertex's list, classes stay acyclic."""
    palette = sorted({c for L in lists for c in L})
    class_mask = {c: 0 for c in palette}

    def rec(v: int) -> bool:
        if v == n:
            return True
        bit = 1 << v
        for c in lists[v]:
            if subset_topo_order(out, class_mask[c] | bit) is not None:
                class_mask[c] |= bit
                if rec(v + 1):
                    return True
                class_mask[c] ^= bit
        return False

    return rec(0)


def list_dichromatic_at_most(D: Digraph, t: int,
                             max_vertices: int = LIST_VERTEX_CAP,
                             max_t: int = LIST_SIZE_CAP):
    """Decide whether every t-list assignment admits an acceptable acyclic coloring.

    List assignments are enumerated up to global color renaming (colors named
    by first appearance; new colors enter consecutively), over a palette of at
    most |V| * t colors. Returns (True, None) or (False, violating_lists).
    """
    n = D.n_vertices
    if n > max_vertices:
        raise ValueError(f"{n} vertices exceeds list-solver cap {max_vertices}")
    if t > max_t:
        raise ValueError(f"list size {t} exceeds cap {max_t}")
    if t < 1:
        raise ValueError("list size must be >= 1")
    if n == 0:
        return True, None
    out = D.out_masks
    lists: list[tuple] = []

    def rec(i: int, max_used: int):
        if i == n:
            if not _acceptable_coloring_exists(out, n, lists):
                return [tuple(L) for L in lists]
            return None
        for j in range(t + 1):  # j = number of colors new to this assignment
            new_part = tuple(range(max_used + 1, max_used + 1 + j))
            for old_part in combinations(range(1, max_used + 1), t - j):
                lists.append(old_part + new_part)
                bad = rec(i + 1, max_used + j)
                lists.pop()
                if bad is not None:
                    return bad
        return None

    bad = rec(0, 0)
    return (bad is None), bad


def list_dichromatic_number(D: Digraph, max_t: int = LIST_SIZE_CAP) -> Optional[int]:
    """Least t with list_dichromatic_at_most(D, t), or None if above max_t."""
    for t in range(1, max_t + 1):
        ok, _ = list_dichromatic_at_most(D, t, max_t=max_t)
        if ok:
            return t
    return None
