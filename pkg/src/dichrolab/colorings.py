"""Explicit colorings of the Kneser/Johnson families and the verifier that
certifies (or refutes) properness in the acyclic sense."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .digraph import AcyclicityCertificate, Digraph, FamilyGraph, induced_subdigraph, is_acyclic
from .families import gen_generalized_kneser, gen_johnson
from .setfam import KSubset


@dataclass
class Coloring:
    """Total vertex coloring with colors in 1..palette_size."""

    colors: tuple
    palette_size: int

    def __post_init__(self):
        self.colors = tuple(self.colors)
        bad = [c for c in self.colors if not 1 <= c <= self.palette_size]
        if bad:
            raise ValueError(f"color {bad[0]} outside 1..{self.palette_size}")

    def class_vertices(self, i: int) -> list:
        return [v for v, c in enumerate(self.colors) if c == i]

    def colors_used(self) -> int:
        return len(set(self.colors))

    def to_json(self, path) -> None:
        with open(path, "w", newline="\n") as fh:
            json.dump({"palette": self.palette_size, "colors": list(self.colors)}, fh)
            fh.write("\n")

    @classmethod
    def from_json(cls, path) -> "Coloring":
        with open(path) as fh:
            data = json.load(fh)
        return cls(tuple(data["colors"]), data["palette"])


@dataclass
class VerifyReport:
    proper: bool
    per_class: list = field(default_factory=list)  # (color, AcyclicityCertificate)
    violating_class: Optional[int] = None
    violating_cycle: Optional[list] = None  # original vertex ids


def clamped_min_coloring(n: int, k: int, s: int) -> Coloring:
    """Color each k-set by its minimum element, clamped at t = n - 2k + s + 2.

    Vertices with min(A) > t all land in class t; any two of them intersect in
    more than s elements, so the merged class is independent.
    """
    t = n - 2 * k + s + 2
    if not (0 <= s < k and 2 * k <= n):
        raise ValueError(f"need 0 <= s < k <= n/2, got n={n}, k={k}, s={s}")
    if t < 1:
        raise ValueError(f"palette bound n - 2k + s + 2 = {t} < 1")
    G = gen_generalized_kneser(n, k, s)
    colors = [min(t, min(A.elements())) for A in G.labels]
    return Coloring(tuple(colors), t)


def block_coloring_johnson(n: int, k: int) -> Coloring:
    """Color each k-set A of J(n,k) by ceil(min(A)/k): its first size-k block."""
    G = gen_johnson(n, k)
    palette = -(-n // k)
    colors = [-(-min(A.elements()) // k) for A in G.labels]
    return Coloring(tuple(colors), palette)


def verify_acyclic_coloring(D: Digraph, c: Coloring) -> VerifyReport:
    """Check every color class induces an acyclic subdigraph of D.

    Each class is materialized as a standalone induced subdigraph so its
    certificate can be replayed independently. Cycle certificates are reported
    in original vertex ids.
    """
    if len(c.colors) != D.n_vertices:
        raise ValueError(f"coloring has {len(c.colors)} entries, digraph has {D.n_vertices}")
    report = VerifyReport(proper=True)
    for i in range(1, c.palette_size + 1):
        verts = c.class_vertices(i)
        sub, old_to_new = induced_subdigraph(D, verts)
        cert = is_acyclic(sub)
        report.per_class.append((i, cert))
        if not cert.acyclic and report.violating_class is None:
            new_to_old = {nv: ov for ov, nv in old_to_new.items()}
            report.proper = False
            report.violating_class = i
            report.violating_cycle = [new_to_old[v] for v in cert.cycle]
    return report


def verify_independent_class(G: FamilyGraph, c: Coloring, i: int):
    """(True, None) if no edge of G joins two class-i vertices, else (False, edge)."""
    if not 1 <= i <= c.palette_size:
        raise ValueError(f"color {i} outside palette 1..{c.palette_size}")
    verts = c.class_vertices(i)
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if G.has_edge(verts[a], verts[b]):
                return False, (verts[a], verts[b])
    return True, None
