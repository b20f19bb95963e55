"""Littlewood-Richardson coefficients by direct tableau enumeration.

A coefficient counts fillings of the skew diagram outer/inner with a given
content: rows weakly increase, columns strictly increase, and the reverse
reading word (rows read right to left, top to bottom) stays a ballot
sequence. Because rows weakly increase, the ballot condition is equivalent
to a per-row bound that can be checked the moment a cell is filled: after
placing a value v in row r, the number of v's in rows 1..r must not exceed
the number of (v-1)'s in rows 1..r-1. Cells are filled in row-major order
with that check as the pruning rule.
"""

from __future__ import annotations

from functools import cache
from typing import Iterator

from .partitions import Partition


def _count_fillings(inner: tuple[int, ...], outer: tuple[int, ...],
                    content: tuple[int, ...]) -> int:
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))
    cells = [(r, c) for r in range(rows) for c in range(inner[r], outer[r])]
    nvals = len(content)
    remaining = list(content)
    grid = [[0] * outer[0] for _ in range(rows)]
    count = 0

    def fill(pos: int, current_row: int,
             above: tuple[int, ...], in_row: tuple[int, ...]) -> None:
        nonlocal count
        if pos == len(cells):
            count += 1
            return
        r, c = cells[pos]
        if r != current_row:
            above = tuple(a + w for a, w in zip(above, in_row))
            in_row = (0,) * (nvals + 1)
        low = grid[r][c - 1] if c > inner[r] else 1
        if r > 0 and c >= inner[r - 1]:
            low = max(low, grid[r - 1][c] + 1)
        for v in range(low, nvals + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and above[v] + in_row[v] + 1 > above[v - 1]:
                continue
            grid[r][c] = v
            remaining[v - 1] -= 1
            fill(pos + 1, r, above,
                 in_row[:v] + (in_row[v] + 1,) + in_row[v + 1:])
            remaining[v - 1] += 1
            grid[r][c] = 0

    fill(0, 0, (0,) * (nvals + 1), (0,) * (nvals + 1))
    return count


@cache
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of the shape ``nu`` in the product of ``lam`` and ``mu``."""
    if nu.weight != lam.weight + mu.weight:
        return 0
    if not nu.contains(lam):
        return 0
    if not mu.parts:
        return 1  # only the empty filling; weights force nu == lam here
    return _count_fillings(lam.parts, nu.parts, mu.parts)


def _grown_by_strip(shape: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Shapes obtained by adding a horizontal strip of the given size."""
    rows = len(shape)
    if rows == 0:
        yield (size,) if size else ()
        return

    def extend(r: int, budget: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if r == rows:
            if budget == 0:
                yield acc
            elif budget <= shape[rows - 1]:
                yield acc + (budget,)
            return
        # strip condition: what row r gains may not pass under row r-1
        room = budget if r == 0 else min(budget, shape[r - 1] - shape[r])
        for extra in range(room + 1):
            yield from extend(r + 1, budget - extra, acc + (shape[r] + extra,))

    yield from extend(0, size, ())


@cache
def _expand_pair_entries(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    shapes = {lam.parts}
    for strip in mu.parts:
        shapes = {grown for s in shapes for grown in _grown_by_strip(s, strip)}
    entries = []
    for parts in sorted(shapes, reverse=True):
        nu = Partition(parts)
        coeff = lr_coefficient(lam, mu, nu)
        if coeff:
            entries.append((nu, coeff))
    return tuple(entries)


def lr_expand_pair(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """All shapes with a positive coefficient in the product, with values.

    Candidates come from chains of horizontal-strip additions, one strip per
    row of ``mu``: restricting any valid filling to its smallest j values
    walks exactly such a chain, so no shape in the support is missed. The
    coefficient is then counted per candidate and zero candidates dropped.
    Keys iterate in reverse-lexicographic order.
    """
    return dict(_expand_pair_entries(lam, mu))
