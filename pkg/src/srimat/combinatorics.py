"""Involutions of the symmetric group and their descent statistics.

Permutations are stored in one-line notation with values ``1..n``; all
positions exposed to callers are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BoundExceededError
from .polynomial import IntPolynomial, checked

DEFAULT_BOUND = 12


def check_size(n: int, bound: int = DEFAULT_BOUND) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > bound:
        raise BoundExceededError(n, bound)


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __init__(self, images: Sequence[int]):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of the 1-based position ``i``."""
        return self.images[i - 1]

    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(1, len(self) + 1))


@dataclass(frozen=True)
class Involution:
    underlying: Permutation

    def __post_init__(self):
        if not self.underlying.is_involution():
            raise ValueError(f"{self.underlying.images} is not an involution")

    @classmethod
    def of(cls, images: Sequence[int]) -> Involution:
        return cls(Permutation(images))

    @property
    def images(self) -> tuple[int, ...]:
        return self.underlying.images

    def __len__(self) -> int:
        return len(self.underlying)


@dataclass(frozen=True)
class DescentSet:
    indices: tuple[int, ...]

    @property
    def des(self) -> int:
        return len(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def __len__(self) -> int:
        return len(self.indices)


def _images(p: Permutation | Involution | Sequence[int]) -> Sequence[int]:
    if isinstance(p, (Permutation, Involution)):
        return p.images
    return p


def descent_set(p: Permutation | Involution | Sequence[int]) -> DescentSet:
    """Positions ``i`` (1-based) with ``p(i) > p(i+1)``.

    >>> descent_set(Permutation([1, 3, 2])).indices
    (2,)
    >>> descent_set(Permutation([3, 2, 1])).des
    2
    """
    w = _images(p)
    return DescentSet(tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]))


def descent_number(p: Permutation | Involution | Sequence[int]) -> int:
    w = _images(p)
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def _involution_words(n: int) -> Iterator[tuple[int, ...]]:
    # The smallest unassigned position is either fixed or swapped with a larger
    # unassigned position; trying partners in increasing order yields
    # lexicographic one-line order.
    word = [0] * (n + 1)

    def fill(i: int) -> Iterator[tuple[int, ...]]:
        while i <= n and word[i]:
            i += 1
        if i > n:
            yield tuple(word[1:])
            return
        word[i] = i
        yield from fill(i + 1)
        for j in range(i + 1, n + 1):
            if word[j] == 0:
                word[i], word[j] = j, i
                yield from fill(i + 1)
                word[j] = 0
        word[i] = 0

    return fill(1)


def enumerate_involutions(n: int, bound: int = DEFAULT_BOUND) -> Iterator[Involution]:
    """Every involution of ``S_n`` once, in lexicographic one-line order.

    The size check happens on call, before the first element is produced.
    """
    check_size(n, bound)
    return (Involution.of(w) for w in _involution_words(n))


def involution_descent_table(n: int, bound: int = DEFAULT_BOUND) -> list[int]:
    """``I(n, k)`` for ``k = 0..n-1``."""
    check_size(n, bound)
    table = [0] * n
    for w in _involution_words(n):
        k = descent_number(w)
        table[k] = checked(table[k] + 1)
    return table


def involution_polynomial(n: int, bound: int = DEFAULT_BOUND) -> IntPolynomial:
    return IntPolynomial(involution_descent_table(n, bound))


def telephone_number(n: int) -> int:
    """Number of involutions of ``S_n`` via ``a(n) = a(n-1) + (n-1) a(n-2)``.

    >>> [telephone_number(n) for n in range(7)]
    [1, 1, 2, 4, 10, 26, 76]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    prev, cur = 1, 1
    for m in range(2, n + 1):
        prev, cur = cur, checked(cur + (m - 1) * prev)
    return cur


def is_symmetric(row: Sequence[int]) -> bool:
    return list(row) == list(reversed(row))


def is_unimodal(row: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(row) and row[i] <= row[i + 1]:
        i += 1
    while i + 1 < len(row) and row[i] >= row[i + 1]:
        i += 1
    return i + 1 >= len(row)


def is_log_concave(row: Sequence[int]) -> bool:
    return all(row[k] ** 2 >= row[k - 1] * row[k + 1] for k in range(1, len(row) - 1))
