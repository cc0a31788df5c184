"""Integer partitions and n-slot labeled partitions.

A partition is a finite non-increasing tuple of positive parts.  A labeled
partition assigns one partition to each of n slots; these index the creation
monomials of the rank-n free boson, so their counts give the graded
dimensions of its degree-zero-generated modules.  Enumeration is in a fixed
deterministic order (descending lexicographic on part lists, first slot
weight descending across slots) so serialized output is byte-reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import factorial


@dataclass(frozen=True)
class Partition:
    """Non-increasing tuple of positive integer parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must be non-increasing, got {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    def weight(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> multiplicity."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def symmetry_factor(self) -> int:
        """prod over part values l of l^m * m! where m is the multiplicity.

        Counts the full contractions of the associated creation monomial
        against its mirrored annihilation monomial, each weighted by the
        mode commutator value l.
        """
        out = 1
        for ell, m in self.multiplicities().items():
            out *= ell**m * factorial(m)
        return out

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return "{" + ",".join(str(p) for p in self.parts) + "}"


@dataclass(frozen=True)
class LabeledPartition:
    """One partition per slot; slot count is the rank."""

    slots: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.slots) < 1:
            raise ValueError("need at least one slot")

    @classmethod
    def of(cls, *slot_parts) -> "LabeledPartition":
        return cls(tuple(Partition.of(*s) for s in slot_parts))

    @property
    def rank(self) -> int:
        return len(self.slots)

    def weight(self) -> int:
        return sum(s.weight() for s in self.slots)

    def symmetry_factor(self) -> int:
        out = 1
        for s in self.slots:
            out *= s.symmetry_factor()
        return out

    def to_json(self) -> list[list[int]]:
        return [list(s.parts) for s in self.slots]

    @classmethod
    def from_json(cls, data) -> "LabeledPartition":
        return cls(tuple(Partition(tuple(int(p) for p in s)) for s in data))

    def __repr__(self) -> str:
        return "(" + "|".join(repr(s) for s in self.slots) + ")"


def symmetry_factor(lp: LabeledPartition) -> int:
    return lp.symmetry_factor()


def _part_tuples(m: int, cap: int):
    # descending lexicographic: largest first part first
    if m == 0:
        yield ()
        return
    for first in range(min(m, cap), 0, -1):
        for rest in _part_tuples(m - first, first):
            yield (first,) + rest


def enumerate_partitions(m: int) -> list[Partition]:
    """All partitions of m, descending lexicographic on part lists."""
    if m < 0:
        raise ValueError("weight must be nonnegative")
    return [Partition(t) for t in _part_tuples(m, m)]


@lru_cache(maxsize=None)
def _count_capped(m: int, cap: int) -> int:
    if m == 0:
        return 1
    return sum(_count_capped(m - first, first) for first in range(min(m, cap), 0, -1))


def partition_count(m: int) -> int:
    if m < 0:
        raise ValueError("weight must be nonnegative")
    return _count_capped(m, m)


@lru_cache(maxsize=None)
def labeled_partition_count(n: int, m: int) -> int:
    """Number of n-slot labeled partitions of total weight m."""
    if n < 1:
        raise ValueError("rank must be positive")
    if m < 0:
        raise ValueError("weight must be nonnegative")
    if n == 1:
        return partition_count(m)
    return sum(partition_count(w) * labeled_partition_count(n - 1, m - w) for w in range(m, -1, -1))


def enumerate_labeled_partitions(n: int, m: int) -> list[LabeledPartition]:
    """All n-slot labeled partitions of weight m, first slot weight descending."""
    if n < 1:
        raise ValueError("rank must be positive")
    if m < 0:
        raise ValueError("weight must be nonnegative")
    if n == 1:
        return [LabeledPartition((p,)) for p in enumerate_partitions(m)]
    out = []
    for w in range(m, -1, -1):
        tails = enumerate_labeled_partitions(n - 1, m - w)
        for head in enumerate_partitions(w):
            for tail in tails:
                out.append(LabeledPartition((head,) + tail.slots))
    return out


def labeled_partitions_to_json(items) -> str:
    return json.dumps([lp.to_json() for lp in items])
