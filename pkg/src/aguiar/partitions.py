"""Partitions and cycle types, the indexing combinatorics for everything else.

Partitions are stored dense (a tuple of parts); cycle types additionally
cache their part-multiplicity map, which is the hot path for centralizer
orders and multiset splittings. All enumeration is in reverse-lexicographic
order, e.g. ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``, and that order is
relied on for reproducible tables and CLI output.

All objects are immutable after construction and all functions are pure.
"""

from __future__ import annotations

import math
from functools import cache
from typing import Iterable, Iterator

from .errors import PartitionError


class Partition:
    """A weakly decreasing tuple of positive integers.

    The empty partition ``()`` is the unique partition of 0.

    >>> Partition([7, 3]).weight
    10
    >>> str(Partition([]))
    '[]'
    >>> Partition([3, 5])
    Traceback (most recent call last):
        ...
    aguiar.errors.PartitionError: parts not weakly decreasing: (3, 5)
    """

    __slots__ = ("parts", "weight")

    parts: tuple[int, ...]
    weight: int

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(parts)
        for p in ps:
            if not isinstance(p, int):
                raise PartitionError(f"non-integer part {p!r}")
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise PartitionError(f"parts not weakly decreasing: {ps}")
        if ps and ps[-1] < 1:
            raise PartitionError(f"parts must be positive: {ps}")
        self.parts = ps
        self.weight = sum(ps)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, j: int) -> int:
        """The j-th part, 1-indexed; rows past the last one read as 0."""
        if j < 1:
            raise IndexError(f"parts are 1-indexed, got {j}")
        return self.parts[j - 1] if j <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        """Young-diagram containment: every row of ``other`` fits in ours."""
        if other.length > self.length:
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def parse_partition(text: str) -> Partition:
    """Parse the canonical ``[a,b,c]`` syntax (brackets optional).

    The empty string and ``[]`` denote the empty partition. Input must
    already be weakly decreasing; this never silently sorts.
    """
    body = text.strip()
    if body.startswith("["):
        if not body.endswith("]"):
            raise PartitionError(f"unbalanced brackets in {text!r}")
        body = body[1:-1]
    elif body.endswith("]"):
        raise PartitionError(f"unbalanced brackets in {text!r}")
    body = body.strip()
    if not body:
        return Partition()
    parts = []
    for token in body.split(","):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise PartitionError(f"malformed part {token!r} in {text!r}") from None
        if value < 1:
            raise PartitionError(f"non-positive part {value} in {text!r}")
        parts.append(value)
    return Partition(parts)


def _descending_parts(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending_parts(n - first, first):
            yield (first,) + rest


@cache
def all_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse-lexicographic order.

    >>> [str(p) for p in all_partitions(4)]
    ['[4]', '[3,1]', '[2,2]', '[2,1,1]', '[1,1,1,1]']
    """
    if n < 0:
        raise PartitionError(f"cannot partition a negative integer: {n}")
    return tuple(Partition(parts) for parts in _descending_parts(n, n))


def add_scaled(base: Partition, direction: Partition, d: int) -> Partition:
    """Componentwise ``base + d * direction`` with zero-padding.

    Both inputs being weakly decreasing makes the sum one as well.
    """
    if d < 0:
        raise PartitionError(f"scale factor must be nonnegative, got {d}")
    width = max(base.length, direction.length)
    parts = [base.part(j) + d * direction.part(j) for j in range(1, width + 1)]
    return Partition([p for p in parts if p > 0])


class CycleType:
    """A partition of n read as a conjugacy class of the symmetric group.

    Caches the multiplicity map (part value -> count), which drives
    centralizer orders and multiset splittings.
    """

    __slots__ = ("partition", "multiplicities")

    partition: Partition
    multiplicities: dict[int, int]

    def __init__(self, parts: Partition | Iterable[int]):
        if isinstance(parts, Partition):
            self.partition = parts
        else:
            self.partition = Partition(sorted(parts, reverse=True))
        mult: dict[int, int] = {}
        for p in self.partition.parts:
            mult[p] = mult.get(p, 0) + 1
        self.multiplicities = mult

    @property
    def parts(self) -> tuple[int, ...]:
        return self.partition.parts

    @property
    def weight(self) -> int:
        return self.partition.weight

    def union(self, other: "CycleType") -> "CycleType":
        """Multiset union of the cycles of the two types."""
        return CycleType(self.parts + other.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycleType):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"CycleType({list(self.parts)})"

    def __str__(self) -> str:
        return str(self.partition)


@cache
def cycle_types(n: int) -> tuple[CycleType, ...]:
    """All cycle types of degree n, ordered like :func:`all_partitions`."""
    return tuple(CycleType(p) for p in all_partitions(n))


def centralizer_order(rho: CycleType) -> int:
    """Order of the centralizer of a permutation of this cycle type.

    >>> centralizer_order(CycleType([1, 1, 1]))
    6
    """
    z = 1
    for j, m in rho.multiplicities.items():
        z *= j**m * math.factorial(m)
    return z


def split3(rho: CycleType) -> list[tuple[CycleType, CycleType, CycleType]]:
    """Every ordered way to split the cycle multiset into three sub-multisets.

    Each triple appears exactly once; the total count is the product over
    distinct part values j of the number of ordered sums m_j = a + b + c.
    """
    by_value = sorted(rho.multiplicities.items())
    triples: list[tuple[CycleType, CycleType, CycleType]] = []

    def assign(idx: int, pa: list[int], pb: list[int], pc: list[int]) -> None:
        if idx == len(by_value):
            triples.append((CycleType(pa), CycleType(pb), CycleType(pc)))
            return
        j, m = by_value[idx]
        for a in range(m, -1, -1):
            for b in range(m - a, -1, -1):
                c = m - a - b
                assign(idx + 1, pa + [j] * a, pb + [j] * b, pc + [j] * c)

    assign(0, [], [], [])
    return triples
