"""Symmetric non-negative integer matrices and the families T(n, k), W(n, k).

``T(n, k)`` holds the symmetric ``k x k`` matrices with entry sum ``n`` and no
all-zero row; ``W(n, k)`` is the subset with an all-zero main diagonal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .combinatorics import DEFAULT_BOUND, check_size
from .errors import (
    AsymmetricMatrixError,
    EmptyMatrixError,
    MatrixFormatError,
    NegativeEntryError,
    RaggedRowsError,
)
from .polynomial import checked


@dataclass(frozen=True)
class SymMatrix:
    """Dense symmetric matrix; equality is structural.

    Indexing with ``X[i, j]`` is 0-based for internal code; :meth:`x` takes the
    1-based indices used everywhere else.
    """

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        if not rows:
            raise EmptyMatrixError("matrix has no rows")
        k = len(rows)
        for row in rows:
            if len(row) != k:
                raise RaggedRowsError(f"expected {k} entries per row, got {len(row)}")
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v < 0:
                    raise NegativeEntryError(f"entry ({i + 1},{j + 1}) is negative: {v}")
                if v != rows[j][i]:
                    raise AsymmetricMatrixError(
                        f"entry ({i + 1},{j + 1})={v} differs from ({j + 1},{i + 1})={rows[j][i]}"
                    )
        object.__setattr__(self, "entries", rows)

    @classmethod
    def zeros(cls, k: int) -> SymMatrix:
        return cls([[0] * k for _ in range(k)])

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def x(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def total(self) -> int:
        return sum(sum(row) for row in self.entries)

    def has_zero_row(self) -> bool:
        return any(not any(row) for row in self.entries)

    def has_zero_diagonal(self) -> bool:
        return all(self.entries[i][i] == 0 for i in range(self.dim))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)


@dataclass(frozen=True)
class MatrixFamilyKey:
    n: int
    k: int
    zero_diagonal: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"entry sum n must be positive, got {self.n}")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"dimension k must satisfy 1 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def family(self) -> str:
        return "W" if self.zero_diagonal else "T"


def validate_membership(X: SymMatrix, key: MatrixFamilyKey) -> bool:
    if X.dim != key.k or X.total() != key.n or X.has_zero_row():
        return False
    return not key.zero_diagonal or X.has_zero_diagonal()


def is_member(X: SymMatrix) -> bool:
    """Whether ``X`` lies in ``T(n, dim X)`` for its own entry sum ``n``."""
    return X.total() >= 1 and not X.has_zero_row()


def _fills(n: int, k: int, zero_diagonal: bool) -> Iterator[list[list[int]]]:
    """Yield one shared, mutable grid per member of the family.

    Upper-triangle cells are filled row by row with values in increasing order,
    which makes the output lexicographic in that reading order. Callers must
    copy the grid before the next step.
    """
    grid = [[0] * k for _ in range(k)]
    nonzero = [0] * k
    cells = [(i, j) for i in range(k) for j in range(i, k)]
    last = len(cells)
    # rows without a non-zero entry yet; finished rows are always covered
    uncovered = k

    def touch(r: int, delta: int) -> None:
        nonlocal uncovered
        if delta > 0 and nonzero[r] == 0:
            uncovered -= 1
        nonzero[r] += delta
        if delta < 0 and nonzero[r] == 0:
            uncovered += 1

    def step(c: int, remaining: int) -> Iterator[list[list[int]]]:
        if c == last:
            if remaining == 0:
                yield grid
            return
        # every still-empty row needs at least one unit of the remaining sum
        if remaining < uncovered:
            return
        if remaining == 0:
            yield grid
            return
        i, j = cells[c]
        if i == j:
            top = 0 if zero_diagonal else remaining
            cost = 1
        else:
            top = remaining // 2
            cost = 2
        closes_row = j == k - 1
        for v in range(top + 1):
            if v == 1:
                touch(i, 1)
                if i != j:
                    touch(j, 1)
            if v:
                grid[i][j] = grid[j][i] = v
            elif closes_row and nonzero[i] == 0:
                continue
            yield from step(c + 1, remaining - cost * v)
        if top:
            grid[i][j] = grid[j][i] = 0
            touch(i, -1)
            if i != j:
                touch(j, -1)

    if k >= 1 and n >= 0:
        yield from step(0, n)


def enumerate_family(key: MatrixFamilyKey, bound: int = DEFAULT_BOUND) -> Iterator[SymMatrix]:
    """Members of ``T(n, k)`` (or ``W(n, k)``), lexicographic on the upper triangle.

    Raises :class:`~srimat.errors.BoundExceededError` immediately, before any
    matrix is produced.
    """
    check_size(key.n, bound)
    return (SymMatrix(g) for g in _fills(key.n, key.k, key.zero_diagonal))


def enumerate_all(n: int, zero_diagonal: bool = False, bound: int = DEFAULT_BOUND) -> Iterator[SymMatrix]:
    """The union over ``k = 1..n``, ordered by dimension then lexicographically."""
    check_size(n, bound)

    def gen() -> Iterator[SymMatrix]:
        for k in range(1, n + 1):
            yield from enumerate_family(MatrixFamilyKey(n, k, zero_diagonal), bound)

    return gen()


def count_family(key: MatrixFamilyKey, bound: int = DEFAULT_BOUND) -> int:
    """Count members by running the search without materialising matrices."""
    check_size(key.n, bound)
    count = 0
    for _ in _fills(key.n, key.k, key.zero_diagonal):
        count = checked(count + 1)
    return count


def count_table(n: int, zero_diagonal: bool = False, bound: int = DEFAULT_BOUND) -> list[int]:
    """Counts for ``k = 1..n``; entry ``k-1`` is ``T(n, k)`` or ``W(n, k)``."""
    check_size(n, bound)
    if zero_diagonal and n % 2:
        # off-diagonal entries come in equal pairs, so the sum would be even
        return [0] * n
    return [count_family(MatrixFamilyKey(n, k, zero_diagonal), bound) for k in range(1, n + 1)]


def _parse_plain(text: str) -> list[list[int]]:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise MatrixFormatError(f"non-integer entry in line {line!r}") from exc
    return rows


def _parse_json(text: str) -> list[list[int]]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "entries" not in obj:
        raise MatrixFormatError('JSON matrix must be an object with an "entries" array')
    entries = obj["entries"]
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise MatrixFormatError('"entries" must be an array of arrays')
    for row in entries:
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise MatrixFormatError(f"non-integer entry {v!r}")
    return entries


def parse_matrix(data: bytes | str, fmt: str = "auto") -> SymMatrix:
    """Read a matrix from plain text or JSON.

    Plain text is one row per line with whitespace-separated integers; blank
    lines and lines starting with ``#`` are skipped. ``fmt="auto"`` picks JSON
    when the first non-blank character is ``{``.

    >>> parse_matrix(b"0 1\\n1 0\\n").entries
    ((0, 1), (1, 0))
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "plain"
    if fmt == "json":
        rows = _parse_json(text)
    elif fmt == "plain":
        rows = _parse_plain(text)
    else:
        raise ValueError(f"unknown matrix format {fmt!r}")
    if not rows or all(not r for r in rows):
        raise EmptyMatrixError("no matrix rows found")
    return SymMatrix(rows)


def render_matrix(X: SymMatrix, fmt: str = "plain") -> bytes:
    if fmt == "plain":
        return (str(X) + "\n").encode()
    if fmt == "json":
        return (json.dumps({"entries": X.to_lists()}) + "\n").encode()
    raise ValueError(f"unknown matrix format {fmt!r}")
