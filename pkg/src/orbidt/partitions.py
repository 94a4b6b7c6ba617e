"""Plane partitions colored by mu_r acting with weights (1, r-1, 0).

A box ``(i1, i2, i3)`` has color ``(i1 - i2) mod r``.  The diagonal slices
``i1 - i2 = k`` are ordinary partitions which interlace as ``k`` moves away
from the central slice.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import DomainError, InvalidSlicing, OutOfBound, UsageError

Box = tuple[int, int, int]
Partition2D = tuple[int, ...]
ColorVector = tuple[int, ...]


def sign(x: int) -> int:
    """Sign used by the limit index; zero counts as positive."""
    return 1 if x >= 0 else -1


@dataclass(frozen=True, order=True)
class PlanePartition:
    boxes: tuple[Box, ...] = ()

    def __post_init__(self):
        boxes = tuple(sorted(set(tuple(int(x) for x in b) for b in self.boxes)))
        object.__setattr__(self, "boxes", boxes)
        present = set(boxes)
        for i, j, k in boxes:
            if min(i, j, k) < 0:
                raise DomainError(f"box {(i, j, k)} has a negative coordinate")
            for b in ((i - 1, j, k), (i, j - 1, k), (i, j, k - 1)):
                if min(b) >= 0 and b not in present:
                    raise DomainError(f"{(i, j, k)} present but {b} missing")

    def __len__(self):
        return len(self.boxes)

    def __iter__(self) -> Iterator[Box]:
        return iter(self.boxes)

    def color_vector(self, r: int) -> ColorVector:
        return color_vector(self, r)

    def index(self, r: int) -> int:
        return index(self, r)

    def slices(self) -> dict[int, Partition2D]:
        return slices(self)


def _addable(boxes: frozenset) -> set[Box]:
    if not boxes:
        return {(0, 0, 0)}
    cand = set()
    for i, j, k in boxes:
        for b in ((i + 1, j, k), (i, j + 1, k), (i, j, k + 1)):
            if b in boxes:
                continue
            x, y, z = b
            if (x == 0 or (x - 1, y, z) in boxes) and (y == 0 or (x, y - 1, z) in boxes) and (
                z == 0 or (x, y, z - 1) in boxes
            ):
                cand.add(b)
    return cand


@lru_cache(maxsize=None)
def _enumerate_sets(n: int) -> tuple[frozenset, ...]:
    if n == 0:
        return (frozenset(),)
    seen = set()
    for p in _enumerate_sets(n - 1):
        for b in _addable(p):
            seen.add(p | {b})
    return tuple(sorted(seen, key=lambda s: tuple(sorted(s))))


def enumerate_partitions(n: int) -> list[PlanePartition]:
    """All plane partitions with exactly ``n`` boxes, sorted by box list."""
    if n < 0:
        raise UsageError("box count must be nonnegative")
    return [PlanePartition(tuple(sorted(s))) for s in _enumerate_sets(n)]


def partitions_up_to(n_max: int) -> Iterator[PlanePartition]:
    for n in range(n_max + 1):
        yield from enumerate_partitions(n)


def color(box: Box, r: int) -> int:
    return (box[0] - box[1]) % r


def color_vector(pi: PlanePartition, r: int) -> ColorVector:
    if r < 1:
        raise UsageError("order r must be positive")
    out = [0] * r
    for b in pi.boxes:
        out[color(b, r)] += 1
    return tuple(out)


def index(pi: PlanePartition, r: int) -> int:
    """Sum of ``sign(i2 - i1)`` over the 0-colored boxes."""
    return sum(sign(j - i) for i, j, _ in pi.boxes if (i - j) % r == 0)


# -- slices -------------------------------------------------------------------

def interlaces(mu: Partition2D, lam: Partition2D) -> bool:
    """``mu`` covers ``lam`` as a horizontal strip: mu1 >= lam1 >= mu2 >= ..."""
    if len(mu) < len(lam) or len(mu) > len(lam) + 1:
        return False
    for i, m in enumerate(mu):
        if i < len(lam) and m < lam[i]:
            return False
        if i > 0 and m > lam[i - 1]:
            return False
    return True


def slices(pi: PlanePartition) -> dict[int, Partition2D]:
    heights: dict[tuple[int, int], int] = {}
    for i, j, _ in pi.boxes:
        heights[(i, j)] = heights.get((i, j), 0) + 1
    out: dict[int, list[int]] = {}
    for (i, j), h in heights.items():
        out.setdefault(i - j, []).append((min(i, j), h))
    result = {}
    for k, cols in out.items():
        cols.sort()
        if [a for a, _ in cols] != list(range(len(cols))):
            raise InvalidSlicing(f"slice {k} has a gap")
        lam = tuple(h for _, h in cols)
        if any(lam[a] < lam[a + 1] for a in range(len(lam) - 1)):
            raise InvalidSlicing(f"slice {k} is not a partition: {lam}")
        result[k] = lam
    for k, lam in result.items():
        outer = k + 1 if k >= 0 else k - 1
        if not interlaces(lam, result.get(outer, ())):
            raise InvalidSlicing(f"slices {k} and {outer} do not interlace")
    return dict(sorted(result.items()))


def from_slices(sl: dict[int, Partition2D]) -> PlanePartition:
    boxes = []
    for k, lam in sl.items():
        for a, h in enumerate(lam):
            i, j = a + max(k, 0), a + max(-k, 0)
            boxes.extend((i, j, z) for z in range(h))
    return PlanePartition(tuple(boxes))


# -- index semigroup ----------------------------------------------------------

@lru_cache(maxsize=None)
def _realized(r: int, bound: int) -> frozenset:
    return frozenset(color_vector(p, r) for p in partitions_up_to(bound) if len(p))


@dataclass(frozen=True)
class IndexSemigroup:
    """Color vectors of nonempty partitions with at most ``bound`` boxes."""

    r: int
    bound: int
    members: frozenset = field(repr=False)

    def __contains__(self, alpha) -> bool:
        return self.is_in_I(alpha)

    def is_in_I(self, alpha) -> bool:
        alpha = tuple(alpha)
        if len(alpha) != self.r:
            raise UsageError(f"color vector must have {self.r} entries")
        if sum(alpha) > self.bound:
            raise OutOfBound(f"|alpha| = {sum(alpha)} exceeds the bound {self.bound}")
        return alpha in self.members

    def delta_I_member(self, alpha) -> bool:
        return delta_I_member(alpha)

    def sorted_members(self) -> list[ColorVector]:
        return sorted(self.members, key=lambda a: (sum(a), a))


def index_semigroup(r: int, bound: int) -> IndexSemigroup:
    if r < 1 or bound < 0:
        raise UsageError("need r >= 1 and bound >= 0")
    return IndexSemigroup(r, bound, _realized(r, bound))


def delta_I_member(alpha) -> bool:
    alpha = tuple(alpha)
    return bool(alpha) and alpha[0] > 0 and all(a == alpha[0] for a in alpha)


def enumerate_I_partitions(alpha, I: IndexSemigroup) -> list[tuple[ColorVector, ...]]:
    """Multisets of members of ``I`` summing to ``alpha``, parts sorted descending."""
    alpha = tuple(alpha)
    if not I.is_in_I(alpha):
        raise DomainError(f"{alpha} is not in the index set")
    parts = sorted((m for m in I.members if all(x <= y for x, y in zip(m, alpha))), reverse=True)
    out: list[tuple[ColorVector, ...]] = []

    def rec(rest, start, acc):
        if not any(rest):
            out.append(tuple(acc))
            return
        for i in range(start, len(parts)):
            p = parts[i]
            if all(x <= y for x, y in zip(p, rest)):
                acc.append(p)
                rec(tuple(y - x for x, y in zip(p, rest)), i, acc)
                acc.pop()

    rec(alpha, 0, [])
    return out


def partition_record(pi: PlanePartition, r: int) -> dict:
    return {"boxes": [list(b) for b in pi.boxes], "alpha": list(color_vector(pi, r)), "index": index(pi, r)}
