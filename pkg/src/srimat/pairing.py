"""Sign-reversing involution on the signed set ``S = T(n, 1) u ... u T(n, n)``.

The sign of a matrix ``X`` is ``(-1)**dim(X)``. :func:`phi` pairs every
member of ``S`` with a member whose dimension differs by one, except for a
single fixed point ``F_n``, so the signed count of ``S`` is ``(-1)**n``.

Matrices are split by their *leading index* ``m``: the largest column with a
non-zero entry in the first row, whose entry is the *pivot* ``x``. Four cases
follow, each split into two halves (``Pi1`` and ``Pi2``) that the map swaps:

1. ``m > 1`` and column ``m`` is not a lone pivot at the last column.
   ``Pi1`` (pivot alone in its column) drops row/column ``m`` and keeps the
   pivot in column ``m`` of the smaller matrix.
2. ``m = dim`` and the pivot is alone in its column. ``Pi1`` (pivot alone in
   the first row too) removes the empty first row/column.
3. ``m = 1`` with either a ``[1]`` corner over a row that is zero past the
   diagonal (``Pi1``, merged into the corner) or a corner above 1 (``Pi2``).
4. A ``[1]`` corner over a row with an entry past the diagonal: strip the
   corner, apply case 1 or 2 to what is left, and put the corner back.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .combinatorics import DEFAULT_BOUND, check_size
from .errors import NotInFamilyError, PhiDefectError
from .matrices import SymMatrix, enumerate_all, is_member

Grid = list[list[int]]


class CaseLabel(str, enum.Enum):
    CASE1_PI1 = "Case1_Pi1"
    CASE1_PI2 = "Case1_Pi2"
    CASE2_PI1 = "Case2_Pi1"
    CASE2_PI2 = "Case2_Pi2"
    CASE2_FIXED = "Case2_Fixed"
    CASE3_PI1 = "Case3_Pi1"
    CASE3_PI2 = "Case3_Pi2"
    CASE4_RECURSE = "Case4_Recurse"
    CASE4_FIXED = "Case4_Fixed"
    CASE4_F1 = "Case4_F1"

    @property
    def case(self) -> int:
        return int(self.value[4])

    @property
    def is_fixed(self) -> bool:
        return self in _FIXED

    def dual(self) -> Optional[CaseLabel]:
        """The label φ sends this one to; ``None`` for fixed and Case 4 labels."""
        return _DUALS.get(self)

    def __str__(self) -> str:
        return self.value


_FIXED = frozenset({CaseLabel.CASE2_FIXED, CaseLabel.CASE4_FIXED, CaseLabel.CASE4_F1})
_DUALS = {
    CaseLabel.CASE1_PI1: CaseLabel.CASE1_PI2,
    CaseLabel.CASE1_PI2: CaseLabel.CASE1_PI1,
    CaseLabel.CASE2_PI1: CaseLabel.CASE2_PI2,
    CaseLabel.CASE2_PI2: CaseLabel.CASE2_PI1,
    CaseLabel.CASE3_PI1: CaseLabel.CASE3_PI2,
    CaseLabel.CASE3_PI2: CaseLabel.CASE3_PI1,
}


@dataclass(frozen=True)
class PhiResult:
    image: SymMatrix
    label: CaseLabel
    m: int
    x: int
    inner_label: Optional[CaseLabel] = None

    @property
    def fixed(self) -> bool:
        return self.label.is_fixed

    def to_dict(self) -> dict:
        return {
            "image": self.image.to_lists(),
            "label": self.label.value,
            "m": self.m,
            "x": self.x,
            "inner_label": self.inner_label.value if self.inner_label else None,
            "fixed": self.fixed,
        }


def _require_member(X: SymMatrix) -> None:
    if not is_member(X):
        raise NotInFamilyError(f"matrix has an all-zero row, not a member of any T(n,k):\n{X}")


def leading_index(X: SymMatrix) -> tuple[int, int]:
    """``(m, x)`` with ``x = x[1, m] != 0`` and ``x[1, j] = 0`` for ``j > m`` (1-based).

    >>> leading_index(SymMatrix([[0, 1], [1, 0]]))
    (2, 1)
    """
    first = X.entries[0]
    for j in range(X.dim - 1, -1, -1):
        if first[j]:
            return j + 1, first[j]
    raise NotInFamilyError("first row is all zero; the matrix is in no T(n,k)")


# Each predicate tests one case of the partition on its own; classify() checks
# that exactly one of them fires.


def _column_is_lone_pivot(X: SymMatrix, m: int) -> bool:
    return all(X.entries[i][m - 1] == 0 for i in range(1, X.dim))


def _second_row_empty_past_diagonal(X: SymMatrix) -> bool:
    return all(v == 0 for v in X.entries[1][2:])


def _is_case1(X: SymMatrix, n: int, m: int, x: int) -> bool:
    return n > 1 and m != 1 and (m < X.dim or not _column_is_lone_pivot(X, m))


def _is_case2(X: SymMatrix, n: int, m: int, x: int) -> bool:
    return n > 1 and m != 1 and m == X.dim and _column_is_lone_pivot(X, m)


def _is_case3(X: SymMatrix, n: int, m: int, x: int) -> bool:
    if n <= 1 or m != 1:
        return False
    return x > 1 or (x == 1 and _second_row_empty_past_diagonal(X))


def _is_case4(X: SymMatrix, n: int, m: int, x: int) -> bool:
    if n == 1:
        return True
    return m == 1 and x == 1 and X.dim > 1 and not _second_row_empty_past_diagonal(X)


CASE_PREDICATES: tuple[Callable[[SymMatrix, int, int, int], bool], ...] = (
    _is_case1,
    _is_case2,
    _is_case3,
    _is_case4,
)


def _strip_corner(X: SymMatrix) -> SymMatrix:
    return SymMatrix([row[1:] for row in X.entries[1:]])


def matching_cases(X: SymMatrix) -> list[int]:
    """Case numbers whose defining predicate holds for ``X``."""
    _require_member(X)
    n = X.total()
    m, x = leading_index(X)
    return [c for c, pred in enumerate(CASE_PREDICATES, start=1) if pred(X, n, m, x)]


def classify(X: SymMatrix) -> CaseLabel:
    """Case label of ``X``; ``n`` is taken to be the entry sum.

    >>> classify(SymMatrix([[0, 1], [1, 0]]))
    <CaseLabel.CASE2_FIXED: 'Case2_Fixed'>
    """
    cases = matching_cases(X)
    if len(cases) != 1:
        raise PhiDefectError(f"expected exactly one case, got {cases} for\n{X}")
    case = cases[0]
    n = X.total()
    m, x = leading_index(X)
    if case == 1:
        return CaseLabel.CASE1_PI1 if _column_is_lone_pivot(X, m) else CaseLabel.CASE1_PI2
    if case == 2:
        if all(v == 0 for v in X.entries[0][:-1]):
            return CaseLabel.CASE2_FIXED if X.dim == 2 else CaseLabel.CASE2_PI1
        return CaseLabel.CASE2_PI2
    if case == 3:
        return CaseLabel.CASE3_PI1 if x == 1 else CaseLabel.CASE3_PI2
    if n == 1:
        return CaseLabel.CASE4_F1
    inner = classify(_strip_corner(X))
    if inner.case not in (1, 2):
        raise PhiDefectError(f"stripped matrix landed in {inner}, expected case 1 or 2")
    return CaseLabel.CASE4_FIXED if inner is CaseLabel.CASE2_FIXED else CaseLabel.CASE4_RECURSE


def case1_clause(i: int, j: int, m: int) -> int:
    """Which branch of the case-1 removal formula defines ``y[i, j]`` (1-based).

    Branches are tried in order, so the first one (``i, j < m`` or a first
    row/column position) takes priority.
    """
    if (i < m and j < m) or 1 in (i, j):
        return 1
    if i >= m and 1 < j < m:
        return 2
    if j >= m and 1 < i < m:
        return 3
    if i >= m and j >= m:
        return 4
    raise PhiDefectError(f"no case-1 branch covers ({i},{j}) with m={m}")


_CASE1_SOURCE = {
    1: lambda i, j: (i, j),
    2: lambda i, j: (i + 1, j),
    3: lambda i, j: (i, j + 1),
    4: lambda i, j: (i + 1, j + 1),
}


def _case1_remove(X: SymMatrix, m: int) -> SymMatrix:
    k = X.dim - 1
    Y = [[0] * k for _ in range(k)]
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            si, sj = _CASE1_SOURCE[case1_clause(i, j, m)](i, j)
            Y[i - 1][j - 1] = X.x(si, sj)
    return SymMatrix(Y)


def _case1_insert(Y: SymMatrix, m: int, x: int) -> SymMatrix:
    # Move the pivot off column m, then open an empty row/column at m that
    # holds only the pivot.
    rows: Grid = Y.to_lists()
    rows[0][m - 1] = rows[m - 1][0] = 0
    for row in rows:
        row.insert(m - 1, 0)
    rows.insert(m - 1, [0] * (Y.dim + 1))
    rows[0][m - 1] = rows[m - 1][0] = x
    return SymMatrix(rows)


def _case2_remove(X: SymMatrix, x: int) -> SymMatrix:
    k = X.dim - 1
    Y = [[0] * k for _ in range(k)]
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i <= k - 1 and j <= k - 1:
                Y[i - 1][j - 1] = X.x(i + 1, j + 1)
            elif {i, j} == {1, k}:
                Y[i - 1][j - 1] = x
    return SymMatrix(Y)


def _case2_insert(Y: SymMatrix, x: int) -> SymMatrix:
    k = Y.dim + 1
    rows: Grid = [[0] * k for _ in range(k)]
    for i in range(1, k - 1):
        for j in range(1, k - 1):
            rows[i][j] = Y.x(i, j)
    rows[0][k - 1] = rows[k - 1][0] = x
    return SymMatrix(rows)


def _case3_merge(X: SymMatrix) -> SymMatrix:
    rows = [list(row[1:]) for row in X.entries[1:]]
    rows[0][0] = X.x(1, 1) + X.x(2, 2)
    return SymMatrix(rows)


def _case3_split(Y: SymMatrix) -> SymMatrix:
    k = Y.dim + 1
    rows: Grid = [[0] * k for _ in range(k)]
    rows[0][0] = 1
    for i in range(1, k):
        rows[i][1:] = Y.entries[i - 1]
    rows[1][1] -= 1
    return SymMatrix(rows)


def _attach_corner(A: SymMatrix) -> SymMatrix:
    k = A.dim + 1
    rows: Grid = [[0] * k for _ in range(k)]
    rows[0][0] = 1
    for i in range(1, k):
        rows[i][1:] = A.entries[i - 1]
    return SymMatrix(rows)


def _apply(X: SymMatrix, label: CaseLabel, m: int, x: int) -> tuple[SymMatrix, Optional[CaseLabel]]:
    if label.is_fixed:
        return X, None
    if label is CaseLabel.CASE1_PI1:
        return _case1_remove(X, m), None
    if label is CaseLabel.CASE1_PI2:
        return _case1_insert(X, m, x), None
    if label is CaseLabel.CASE2_PI1:
        return _case2_remove(X, x), None
    if label is CaseLabel.CASE2_PI2:
        return _case2_insert(X, x), None
    if label is CaseLabel.CASE3_PI1:
        return _case3_merge(X), None
    if label is CaseLabel.CASE3_PI2:
        return _case3_split(X), None
    # Case 4: one strip/apply/re-attach step; the stripped matrix always has
    # leading index above 1, so it never recurses further.
    A = _strip_corner(X)
    inner = classify(A)
    if inner.case not in (1, 2) or inner.is_fixed:
        raise PhiDefectError(f"case 4 inner label {inner} is not a movable case 1/2 label")
    am, ax = leading_index(A)
    A2, _ = _apply(A, inner, am, ax)
    return _attach_corner(A2), inner


def phi(X: SymMatrix) -> PhiResult:
    """Apply the sign-reversing involution to ``X``.

    >>> phi(SymMatrix([[2]])).image.entries
    ((1, 0), (0, 1))
    """
    label = classify(X)
    m, x = leading_index(X)
    image, inner = _apply(X, label, m, x)
    if label is CaseLabel.CASE4_FIXED:
        inner = CaseLabel.CASE2_FIXED
    if not label.is_fixed:
        if not is_member(image) or image.total() != X.total():
            raise PhiDefectError(f"image left the family:\n{X}\n->\n{image}")
        if abs(image.dim - X.dim) != 1:
            raise PhiDefectError(f"image dimension {image.dim} is not {X.dim} +/- 1")
    return PhiResult(image=image, label=label, m=m, x=x, inner_label=inner)


def fixed_point(n: int) -> SymMatrix:
    """The unique matrix of ``S`` that φ leaves in place.

    >>> fixed_point(4).entries
    ((0, 2), (2, 0))
    >>> fixed_point(5).entries
    ((1, 0, 0), (0, 0, 2), (0, 2, 0))
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return SymMatrix([[1]])
    if n % 2 == 0:
        h = n // 2
        return SymMatrix([[0, h], [h, 0]])
    h = (n - 1) // 2
    return SymMatrix([[1, 0, 0], [0, 0, h], [0, h, 0]])


def pair_all(
    n: int, zero_diagonal: bool = False, bound: int = DEFAULT_BOUND
) -> Iterator[tuple[SymMatrix, PhiResult]]:
    """Every member of ``S`` (or its zero-diagonal part) with its image under φ."""
    check_size(n, bound)
    return ((X, phi(X)) for X in enumerate_all(n, zero_diagonal, bound))
