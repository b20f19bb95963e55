"""Exact irreducible characters of symmetric groups.

Values come from the border-strip (Murnaghan-Nakayama) recursion, driven by
first-column hook encodings: removing a size-r strip from a shape is
subtracting r from one of its shifted parts. The recursion always consumes
the largest cycle of the class first and is memoized globally, since
character lookups dominate the runtime of the Kronecker and induction paths.

Character tables can be persisted as plain text files with header line
``AGUIAR-CHARTAB v1`` and one ``n|shape|class|value`` entry per line.
"""

from __future__ import annotations

import math
from pathlib import Path

from .errors import (
    CacheError,
    DegreeLimitError,
    DegreeMismatchError,
    ExactnessError,
    PartitionError,
)
from .partitions import (
    CycleType,
    Partition,
    all_partitions,
    centralizer_order,
    cycle_types,
    parse_partition,
)

DEFAULT_DEGREE_LIMIT = 14

CACHE_HEADER = "AGUIAR-CHARTAB v1"

_degree_limit = DEFAULT_DEGREE_LIMIT
_cache_dir: Path | None = None

# (shape parts, class parts) -> character value; bounded by the degree limit
_char_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
_tables: dict[int, "CharacterTable"] = {}


def get_degree_limit() -> int:
    return _degree_limit


def set_degree_limit(n: int) -> None:
    """Cap the symmetric-group degree accepted by character computations."""
    global _degree_limit
    if n < 0:
        raise DegreeLimitError(f"degree limit must be nonnegative, got {n}")
    _degree_limit = n


def set_cache_dir(path: Path | str | None) -> None:
    """Directory for on-disk character tables; None disables persistence."""
    global _cache_dir
    _cache_dir = Path(path) if path is not None else None


def _strip_removals(parts: tuple[int, ...], r: int):
    """Yield (sign, smaller shape) for each border strip of size r."""
    rows = len(parts)
    shifted = [parts[t] + rows - 1 - t for t in range(rows)]
    occupied = set(shifted)
    for t in range(rows):
        source = shifted[t]
        target = source - r
        if target < 0 or target in occupied:
            continue
        # strip height - 1 = number of occupied values the move jumps over
        crossings = sum(1 for v in shifted if target < v < source)
        replaced = sorted((v for v in shifted if v != source), reverse=True)
        replaced.append(target)
        replaced.sort(reverse=True)
        smaller = [replaced[s] - (rows - 1 - s) for s in range(rows)]
        while smaller and smaller[-1] == 0:
            smaller.pop()
        yield (-1) ** crossings, tuple(smaller)


def _mn_value(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not shape else 0
    key = (shape, cycles)
    cached = _char_memo.get(key)
    if cached is not None:
        return cached
    total = 0
    rest = cycles[1:]
    for sign, smaller in _strip_removals(shape, cycles[0]):
        total += sign * _mn_value(smaller, rest)
    _char_memo[key] = total
    return total


def character_value(lam: Partition, rho: CycleType) -> int:
    """The irreducible character indexed by ``lam`` at the class ``rho``."""
    if lam.weight != rho.weight:
        raise DegreeMismatchError(
            f"shape weighs {lam.weight} but class weighs {rho.weight}"
        )
    if lam.weight > _degree_limit:
        raise DegreeLimitError(
            f"degree {lam.weight} exceeds configured limit {_degree_limit}"
        )
    return _mn_value(lam.parts, rho.parts)


def hook_length_dimension(lam: Partition) -> int:
    """Dimension of the irreducible module, by the hook length formula."""
    conj = lam.conjugate().parts
    hook_product = 1
    for i, row in enumerate(lam.parts):
        for j in range(row):
            hook_product *= (row - j) + (conj[j] - i) - 1
    dim, rem = divmod(math.factorial(lam.weight), hook_product)
    if rem:
        raise ExactnessError(f"hook product does not divide {lam.weight}!")
    return dim


class ClassFunction:
    """Exact integer-valued function on the cycle types of one degree."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: dict[CycleType, int]):
        self.n = n
        self.values = dict(values)

    def __call__(self, rho: CycleType) -> int:
        return self.values.get(rho, 0)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if not isinstance(other, ClassFunction):
            return NotImplemented
        if self.n != other.n:
            raise DegreeMismatchError(f"degrees differ: {self.n} vs {other.n}")
        merged = {rho: self(rho) + other(rho) for rho in cycle_types(self.n)}
        return ClassFunction(self.n, merged)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __repr__(self) -> str:
        return f"ClassFunction(n={self.n}, {len(self.values)} classes)"


def inner_product(f: ClassFunction, g: ClassFunction) -> int:
    """Scalar product of class functions, asserted to be an exact integer.

    Computes ``sum over classes of f*g*(class size)`` and divides by n!.
    Non-divisibility means one input was not a genuine virtual character.
    """
    if f.n != g.n:
        raise DegreeMismatchError(f"degrees differ: {f.n} vs {g.n}")
    n_fact = math.factorial(f.n)
    total = 0
    for rho in cycle_types(f.n):
        total += (n_fact // centralizer_order(rho)) * f(rho) * g(rho)
    quotient, rem = divmod(total, n_fact)
    if rem:
        raise ExactnessError(
            f"inner product sum {total} is not divisible by {f.n}!"
        )
    return quotient


class CharacterTable:
    """Full character table of one symmetric group.

    Rows are indexed by partitions in reverse-lexicographic order, columns
    by cycle types in the same order.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: dict[Partition, ClassFunction]):
        self.n = n
        self.rows = dict(rows)

    def row(self, lam: Partition) -> ClassFunction:
        return self.rows[lam]

    def value(self, lam: Partition, rho: CycleType) -> int:
        return self.rows[lam](rho)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __repr__(self) -> str:
        return f"CharacterTable(n={self.n}, {len(self.rows)} rows)"


def character_table(n: int) -> CharacterTable:
    """The complete table for degree n, from memory, disk, or recursion."""
    if n > _degree_limit:
        raise DegreeLimitError(
            f"degree {n} exceeds configured limit {_degree_limit}"
        )
    table = _tables.get(n)
    if table is not None:
        return table
    path = _cache_dir / f"chartab-{n}.txt" if _cache_dir is not None else None
    if path is not None and path.exists():
        table = load_cache(path)
        if table.n != n:
            raise CacheError(f"{path} holds degree {table.n}, expected {n}")
        for lam, row in table.rows.items():
            for rho, value in row.values.items():
                _char_memo[(lam.parts, rho.parts)] = value
    else:
        rows = {
            lam: ClassFunction(
                n, {rho: character_value(lam, rho) for rho in cycle_types(n)}
            )
            for lam in all_partitions(n)
        }
        table = CharacterTable(n, rows)
        if path is not None:
            save_cache(table, path)
    _tables[n] = table
    return table


def save_cache(table: CharacterTable, path: Path | str) -> None:
    """Write a table in the versioned line format; see the module docstring."""
    lines = [CACHE_HEADER]
    for lam in all_partitions(table.n):
        row = table.rows[lam]
        for rho in cycle_types(table.n):
            lines.append(f"{table.n}|{lam}|{rho.partition}|{row(rho)}")
    try:
        Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")
    except OSError as exc:
        raise CacheError(f"cannot write {path}: {exc}") from exc


def load_cache(path: Path | str) -> CharacterTable:
    """Read a table back, validating version, syntax, and completeness."""
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise CacheError(f"cannot read {path}: {exc}") from exc
    lines = text.splitlines()
    if not lines or lines[0] != CACHE_HEADER:
        found = lines[0] if lines else "<empty file>"
        raise CacheError(f"unsupported cache version: {found!r}")
    n: int | None = None
    entries: dict[tuple[Partition, CycleType], int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split("|")
        if len(fields) != 4:
            raise CacheError(f"line {lineno}: expected 4 fields, got {len(fields)}")
        try:
            degree = int(fields[0])
            lam = parse_partition(fields[1])
            rho = CycleType(parse_partition(fields[2]))
            value = int(fields[3])
        except (ValueError, PartitionError) as exc:
            raise CacheError(f"line {lineno}: {exc}") from exc
        if n is None:
            n = degree
        elif degree != n:
            raise CacheError(f"line {lineno}: degree {degree} differs from {n}")
        if lam.weight != n or rho.weight != n:
            raise CacheError(f"line {lineno}: weight does not match degree {n}")
        if (lam, rho) in entries:
            raise CacheError(f"line {lineno}: duplicate entry")
        entries[(lam, rho)] = value
    if n is None:
        raise CacheError(f"line {len(lines)}: no table entries found")
    expected = len(all_partitions(n)) * len(cycle_types(n))
    if len(entries) != expected:
        raise CacheError(
            f"line {len(lines)}: table incomplete "
            f"({len(entries)} of {expected} entries)"
        )
    rows = {
        lam: ClassFunction(
            n, {rho: entries[(lam, rho)] for rho in cycle_types(n)}
        )
        for lam in all_partitions(n)
    }
    return CharacterTable(n, rows)
