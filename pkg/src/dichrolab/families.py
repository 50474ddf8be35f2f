"""Generalized Kneser and Johnson graph generators, the two explicit
orientation rules, and the fixed-core embedding."""

from __future__ import annotations

from math import comb
from typing import Optional

from .digraph import Digraph, FamilyGraph
from .setfam import KSubset, enumerate_ksubsets, intersection_size, min_diff_element

DEFAULT_VERTEX_CAP = 10000


def _check_vertex_cap(n: int, k: int, vertex_cap: int) -> None:
    if comb(n, k) > vertex_cap:
        raise ValueError(f"C({n},{k}) = {comb(n, k)} exceeds vertex cap {vertex_cap}")


def gen_generalized_kneser(n: int, k: int, s: int,
                           vertex_cap: int = DEFAULT_VERTEX_CAP) -> FamilyGraph:
    """KG(n,k,s): k-subsets of [n], adjacent iff the intersection has size <= s.

    s = 0 is the standard Kneser graph; s = k-1 is complete. A = B is never an
    edge (loop-free even when s = k).
    """
    if not 0 <= s <= k <= n:
        raise ValueError(f"need 0 <= s <= k <= n, got n={n}, k={k}, s={s}")
    _check_vertex_cap(n, k, vertex_cap)
    verts = list(enumerate_ksubsets(n, k))
    edges = [(i, j)
             for i in range(len(verts))
             for j in range(i + 1, len(verts))
             if intersection_size(verts[i], verts[j]) <= s]
    return FamilyGraph(len(verts), edges, verts)


def gen_johnson(n: int, k: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> FamilyGraph:
    """J(n,k): k-subsets of [n], adjacent iff the intersection has size k-1.

    k(n-k)-regular; J(n,1) is the complete graph K_n.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    _check_vertex_cap(n, k, vertex_cap)
    verts = list(enumerate_ksubsets(n, k))
    edges = [(i, j)
             for i in range(len(verts))
             for j in range(i + 1, len(verts))
             if intersection_size(verts[i], verts[j]) == k - 1]
    return FamilyGraph(len(verts), edges, verts)


def orient_min_rule(G: FamilyGraph) -> Digraph:
    """Orient each edge {A,B} as A->B iff min(A\\B) < min(B\\A).

    This is the lexicographic order on indicator vectors, hence globally
    acyclic on any labeled graph.
    """
    if G.labels is None:
        raise ValueError("min-rule orientation needs KSubset labels")
    arcs = []
    for i, j in G.edges:
        _, side = min_diff_element(G.labels[i], G.labels[j])
        arcs.append((i, j) if side == "A" else (j, i))
    return Digraph(G.n_vertices, arcs, G.labels)


def orient_sum_rule(G: FamilyGraph) -> Digraph:
    """Orient each edge from the smaller element-sum endpoint to the larger.

    Johnson edges always have distinct sums; an equal-sum edge (possible on
    other inputs) is a hard error rather than a silent tie-break.
    """
    if G.labels is None:
        raise ValueError("sum-rule orientation needs KSubset labels")
    sums = [sum(L.elements()) for L in G.labels]
    arcs = []
    for i, j in G.edges:
        if sums[i] == sums[j]:
            raise ValueError(
                f"edge {G.labels[i]}-{G.labels[j]} has equal element sums ({sums[i]})")
        arcs.append((i, j) if sums[i] < sums[j] else (j, i))
    return Digraph(G.n_vertices, arcs, G.labels)


def embed_fixed_core(n: int, k: int, s: int, S: Optional[KSubset] = None,
                     vertex_cap: int = DEFAULT_VERTEX_CAP):
    """Subgraph of KG(n,k,s) induced on the supersets of a fixed s-set S.

    Returns (H, phi) where phi maps each vertex id of H to the KSubset
    A \\ S relabeled onto the ground set [n-s]; phi is an isomorphism onto
    KG(n-s, k-s).
    """
    if S is None and s == 0:
        S_mask = 0
    elif S is None:
        S = KSubset.from_elements(range(1, s + 1), n)
        S_mask = S.mask
    else:
        if S.k != s:
            raise ValueError(f"core has {S.k} elements, expected s={s}")
        S_mask = S.mask
    if s >= k:
        raise ValueError(f"need s < k, got s={s}, k={k}")
    _check_vertex_cap(n, k, vertex_cap)

    verts = [A for A in enumerate_ksubsets(n, k) if A.mask & S_mask == S_mask]
    edges = [(i, j)
             for i in range(len(verts))
             for j in range(i + 1, len(verts))
             if intersection_size(verts[i], verts[j]) <= s]
    H = FamilyGraph(len(verts), edges, verts)

    # order-preserving relabeling of [n] \ S onto [n-s]
    rest = [e for e in range(1, n + 1) if not S_mask >> (e - 1) & 1]
    new_pos = {e: i + 1 for i, e in enumerate(rest)}
    phi = [KSubset.from_elements([new_pos[e] for e in A.elements()
                                  if not S_mask >> (e - 1) & 1], n - s)
           for A in verts]
    return H, phi
