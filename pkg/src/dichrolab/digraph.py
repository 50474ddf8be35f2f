"""Digraph substrate: acyclicity certificates, induced subdigraphs, products,
orientation enumeration, and the text exchange format.

Vertex sets are bitmask rows (python ints), so everything works unchanged for
graphs up to the configured caps.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .setfam import KSubset

DEFAULT_ORIENTATION_CAP = 24
DEFAULT_PRODUCT_CAP = 4096


class FamilyGraph:
    """Undirected loop-free graph, optionally with KSubset vertex labels."""

    def __init__(self, n_vertices: int, edges, labels: Optional[Sequence[KSubset]] = None):
        self.n_vertices = n_vertices
        canon = []
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ValueError(f"edge ({u},{v}) out of range")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            canon.append(e)
        self.edges = tuple(sorted(canon))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n_vertices:
                raise ValueError("label count != vertex count")
            if len({L.mask for L in labels}) != n_vertices:
                raise ValueError("duplicate labels")
        self.labels = labels
        self.adj = [0] * n_vertices
        for u, v in self.edges:
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


class Digraph:
    """Loop-free digraph with at most one arc per ordered pair."""

    def __init__(self, n_vertices: int, arcs, labels: Optional[Sequence[KSubset]] = None):
        self.n_vertices = n_vertices
        self.out_masks = [0] * n_vertices
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ValueError(f"arc ({u},{v}) out of range")
            self.out_masks[u] |= 1 << v
        self.labels = tuple(labels) if labels is not None else None

    def arcs(self):
        for u in range(self.n_vertices):
            m = self.out_masks[u]
            while m:
                low = m & -m
                yield (u, low.bit_length() - 1)
                m ^= low

    @property
    def n_arcs(self) -> int:
        return sum(m.bit_count() for m in self.out_masks)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)

    def underlying_graph(self) -> FamilyGraph:
        edges = {(min(u, v), max(u, v)) for u, v in self.arcs()}
        return FamilyGraph(self.n_vertices, sorted(edges), self.labels)


@dataclass
class AcyclicityCertificate:
    """Either a topological order (acyclic) or a directed cycle (not)."""

    topo_order: Optional[list] = None
    cycle: Optional[list] = None

    @property
    def acyclic(self) -> bool:
        return self.topo_order is not None

    def check(self, D: Digraph) -> bool:
        """Independent O(V+E) validation of the certificate against D."""
        if self.topo_order is not None:
            if sorted(self.topo_order) != list(range(D.n_vertices)):
                return False
            pos = {v: i for i, v in enumerate(self.topo_order)}
            return all(pos[u] < pos[v] for u, v in D.arcs())
        if not self.cycle or len(self.cycle) < 2:
            return False
        t = len(self.cycle)
        return all(D.has_arc(self.cycle[i], self.cycle[(i + 1) % t]) for i in range(t))


def subset_topo_order(out_masks, sub_mask: int) -> Optional[list]:
    """Kahn's algorithm on the subdigraph induced by sub_mask.

    Returns a topological order of the vertices in sub_mask (original ids), or
    None if the induced subdigraph has a cycle.
    """
    verts = []
    m = sub_mask
    while m:
        low = m & -m
        verts.append(low.bit_length() - 1)
        m ^= low
    indeg = {v: 0 for v in verts}
    for u in verts:
        t = out_masks[u] & sub_mask
        while t:
            low = t & -t
            indeg[low.bit_length() - 1] += 1
            t ^= low
    queue = [v for v in verts if indeg[v] == 0]
    order = []
    while queue:
        # pop the smallest id for a deterministic order
        v = min(queue)
        queue.remove(v)
        order.append(v)
        t = out_masks[v] & sub_mask
        while t:
            low = t & -t
            w = low.bit_length() - 1
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
            t ^= low
    return order if len(order) == len(verts) else None


def _find_cycle(out_masks, sub_mask: int) -> list:
    """Extract one directed cycle from an induced subdigraph known to be cyclic.

    Restrict to vertices of positive out-degree within the subset, then follow
    arcs until a vertex repeats.
    """
    # repeatedly strip sinks so every remaining vertex has an out-neighbor
    changed = True
    while changed:
        changed = False
        m = sub_mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if out_masks[v] & sub_mask == 0:
                sub_mask ^= low
                changed = True
    start = (sub_mask & -sub_mask).bit_length() - 1
    seen = {}
    path = []
    v = start
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        nxt = out_masks[v] & sub_mask
        v = (nxt & -nxt).bit_length() - 1
    return path[seen[v]:]


def is_acyclic(D: Digraph) -> AcyclicityCertificate:
    """Topological order if D is acyclic, otherwise a directed cycle."""
    full = (1 << D.n_vertices) - 1
    order = subset_topo_order(D.out_masks, full)
    if order is not None:
        return AcyclicityCertificate(topo_order=order)
    return AcyclicityCertificate(cycle=_find_cycle(D.out_masks, full))


def induced_subdigraph(D: Digraph, vertices) -> tuple[Digraph, dict]:
    """Subdigraph induced on the given vertex set, relabeled 0..|S|-1.

    Returns (subdigraph, old_to_new map). New ids follow ascending old id.
    """
    S = sorted(set(vertices))
    for v in S:
        if not 0 <= v < D.n_vertices:
            raise ValueError(f"vertex {v} out of range")
    old_to_new = {v: i for i, v in enumerate(S)}
    arcs = [(old_to_new[u], old_to_new[v]) for u, v in D.arcs()
            if u in old_to_new and v in old_to_new]
    labels = [D.labels[v] for v in S] if D.labels is not None else None
    return Digraph(len(S), arcs, labels), old_to_new


def categorical_product(D1: Digraph, D2: Digraph,
                        vertex_cap: int = DEFAULT_PRODUCT_CAP) -> Digraph:
    """Tensor product: arc ((u1,u2),(v1,v2)) iff u1->v1 and u2->v2.

    Vertex (i, j) gets row-major id i * |V2| + j.
    """
    n1, n2 = D1.n_vertices, D2.n_vertices
    if n1 * n2 > vertex_cap:
        raise ValueError(f"product has {n1 * n2} vertices, cap is {vertex_cap}")
    arcs = []
    for u1, v1 in D1.arcs():
        for u2, v2 in D2.arcs():
            arcs.append((u1 * n2 + u2, v1 * n2 + v2))
    return Digraph(n1 * n2, arcs)


def orientation_from_mask(G: FamilyGraph, mask: int) -> Digraph:
    """Orientation of G selected by an edge-direction bitmask.

    Bit j clear: edge j = (u,v) with u < v becomes u->v; set: v->u.
    """
    arcs = []
    for j, (u, v) in enumerate(G.edges):
        arcs.append((v, u) if mask >> j & 1 else (u, v))
    return Digraph(G.n_vertices, arcs, G.labels)


def orientations_iter(G: FamilyGraph, edge_cap: int = DEFAULT_ORIENTATION_CAP,
                      start: int = 0, stop: Optional[int] = None):
    """All 2^|E| orientations of G, in edge-bitmask order.

    start/stop bound the mask range so disjoint chunks can run in parallel.
    """
    m = G.n_edges
    if m > edge_cap:
        raise ValueError(f"{m} edges exceeds orientation cap {edge_cap}")
    if stop is None:
        stop = 1 << m
    for mask in range(start, stop):
        yield mask, orientation_from_mask(G, mask)


def random_orientation(G: FamilyGraph, seed: int) -> Digraph:
    """Seeded fair-coin orientation; same seed gives the same digraph."""
    rng = random.Random(seed)
    mask = 0
    for j in range(G.n_edges):
        mask |= rng.getrandbits(1) << j
    return orientation_from_mask(G, mask)


# ---------------------------------------------------------------------------
# exchange format: `p digraph <n> <m>` / `a <u> <v>` (graphs: `p graph` / `e`)

def write_digraph(D: Digraph, path) -> None:
    lines = [f"p digraph {D.n_vertices} {D.n_arcs}"]
    lines += [f"a {u} {v}" for u, v in D.arcs()]
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_graph(G: FamilyGraph, path) -> None:
    lines = [f"p graph {G.n_vertices} {G.n_edges}"]
    lines += [f"e {u} {v}" for u, v in G.edges]
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _read_lines(path):
    with open(path) as fh:
        return [ln.strip() for ln in fh if ln.strip()]


def read_digraph(path, labels=None) -> Digraph:
    lines = _read_lines(path)
    kind, n, m = lines[0].split()[1:4]
    if kind != "digraph":
        raise ValueError(f"expected digraph header, got {lines[0]!r}")
    arcs = []
    for ln in lines[1:]:
        tag, u, v = ln.split()
        if tag != "a":
            raise ValueError(f"bad arc line {ln!r}")
        arcs.append((int(u), int(v)))
    if len(arcs) != int(m):
        raise ValueError(f"header says {m} arcs, file has {len(arcs)}")
    return Digraph(int(n), arcs, labels)


def read_graph(path, labels=None) -> FamilyGraph:
    lines = _read_lines(path)
    kind, n, m = lines[0].split()[1:4]
    if kind != "graph":
        raise ValueError(f"expected graph header, got {lines[0]!r}")
    edges = []
    for ln in lines[1:]:
        tag, u, v = ln.split()
        if tag != "e":
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(u), int(v)))
    if len(edges) != int(m):
        raise ValueError(f"header says {m} edges, file has {len(edges)}")
    return FamilyGraph(int(n), edges, labels)


def write_labels(labels: Sequence[KSubset], path) -> None:
    with open(path, "w", newline="\n") as fh:
        json.dump([list(L.elements()) for L in labels], fh)
        fh.write("\n")


def read_labels(path, n: int) -> tuple[KSubset, ...]:
    with open(path) as fh:
        data = json.load(fh)
    return tuple(KSubset.from_elements(elems, n) for elems in data)
