"""k-subsets of [n] as single-word bitmasks: enumeration, colex ranking, set algebra.

Elements are 1-based (element i <-> bit i-1). The canonical vertex order used
everywhere downstream is colexicographic, which for bitmask encodings coincides
with numeric order of the masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

MAX_GROUND = 64


@dataclass(frozen=True)
class KSubset:
    """A k-element subset of {1, ..., n}, stored as a bitmask."""

    mask: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground-set size {self.n} outside 1..{MAX_GROUND}")
        if self.mask <= 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} has bits outside positions 1..{self.n}")

    @property
    def k(self) -> int:
        return self.mask.bit_count()

    def elements(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    @classmethod
    def from_elements(cls, elems, n: int) -> "KSubset":
        mask = 0
        for e in elems:
            if not 1 <= e <= n:
                raise ValueError(f"element {e} outside 1..{n}")
            mask |= 1 << (e - 1)
        return cls(mask, n)

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and bool(self.mask >> (element - 1) & 1)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements())) + "}"


def enumerate_ksubsets(n: int, k: int):
    """Yield all C(n,k) k-subsets of [n] in colex order (= ascending mask order).

    The index of a subset in this stream is its canonical vertex id.
    """
    if not 0 < k <= n <= MAX_GROUND:
        raise ValueError(f"need 0 < k <= n <= {MAX_GROUND}, got n={n}, k={k}")
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield KSubset(mask, n)
        # Gosper's hack: next mask with the same popcount.
        low = mask & -mask
        ripple = mask + low
        mask = ripple | ((mask ^ ripple) >> (low.bit_length() + 1))


def rank(A: KSubset) -> int:
    """Colex rank of A among the k-subsets of [n]."""
    return sum(comb(e - 1, j + 1) for j, e in enumerate(A.elements()))


def unrank(r: int, n: int, k: int) -> KSubset:
    """Inverse of rank: the k-subset of [n] at colex position r."""
    if not 0 <= r < comb(n, k):
        raise ValueError(f"rank {r} outside 0..{comb(n, k) - 1}")
    mask = 0
    kk = k
    for m in range(n - 1, -1, -1):
        if kk == 0:
            break
        c = comb(m, kk)
        if r >= c:
            r -= c
            mask |= 1 << m
            kk -= 1
    return KSubset(mask, n)


def intersection_size(A: KSubset, B: KSubset) -> int:
    if A.n != B.n:
        raise ValueError(f"mismatched ground sets: {A.n} != {B.n}")
    return (A.mask & B.mask).bit_count()


def min_diff_element(A: KSubset, B: KSubset) -> tuple[int, str]:
    """Smallest element of the symmetric difference and which side holds it.

    Returns (element, side) with side "A" or "B". Raises on A == B.
    """
    if A.n != B.n:
        raise ValueError(f"mismatched ground sets: {A.n} != {B.n}")
    diff = A.mask ^ B.mask
    if diff == 0:
        raise ValueError("sets are equal; symmetric difference is empty")
    low = diff & -diff
    element = low.bit_length()
    return element, ("A" if A.mask & low else "B")


def precedes(A: KSubset, B: KSubset) -> bool:
    """Strict total order: A before B iff the first differing position lies in A."""
    _, side = min_diff_element(A, B)
    return side == "A"
