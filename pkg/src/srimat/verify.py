"""Exact checks of the involution/matrix identities.

Every report recomputes its counts from enumeration unless counts are passed
in explicitly (the CLI does so only when its cache is enabled).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .combinatorics import (
    DEFAULT_BOUND,
    check_size,
    involution_descent_table,
    is_log_concave,
    is_symmetric,
    is_unimodal,
)
from .errors import OddCorollaryError
from .matrices import count_table
from .pairing import fixed_point, pair_all, phi
from .polynomial import IntPolynomial, checked, poly_binomial_power

Value = Union[int, IntPolynomial]

MAIN_FIRST = "main1"
MAIN_SECOND = "main2"
ALT_SUM = "alt-sum"
COROLLARY = "corollary"
ODD_W_OBSERVATION = "observation:w-alt-sum-odd"


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    n: int
    lhs: Value
    rhs: Value
    passed: bool
    detail: Optional[str] = None

    def to_dict(self) -> dict:
        def enc(v: Value):
            return v.to_list() if isinstance(v, IntPolynomial) else v

        return {
            "identity": self.identity,
            "n": self.n,
            "passed": self.passed,
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "detail": self.detail,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.identity} n={self.n}: lhs = {self.lhs}, rhs = {self.rhs}"
        return f"{line} ({self.detail})" if self.detail else line


def _report(identity: str, n: int, lhs: Value, rhs: Value, detail: Optional[str] = None) -> VerificationReport:
    passed = lhs == rhs
    if not passed and detail is None:
        detail = f"lhs {lhs} != rhs {rhs}"
    return VerificationReport(identity, n, lhs, rhs, passed, detail)


def _t_counts(n: int, t_counts: Optional[Sequence[int]], bound: int) -> list[int]:
    return list(t_counts) if t_counts is not None else count_table(n, bound=bound)


def _i_counts(n: int, i_counts: Optional[Sequence[int]], bound: int) -> list[int]:
    return list(i_counts) if i_counts is not None else involution_descent_table(n, bound)


def second_form_lhs(n: int, i_counts: Sequence[int]) -> IntPolynomial:
    """``sum_k I(n,k) t^(k+1) (1+t)^(n-k-1)`` over ``k = 0..n-1``."""
    total = IntPolynomial()
    for k, c in enumerate(i_counts):
        if c:
            total = total + IntPolynomial.monomial(k + 1) * poly_binomial_power(c, 1, n - k - 1)
    return total


def verify_main_theorem(
    n: int,
    form: str = "first",
    *,
    t_counts: Optional[Sequence[int]] = None,
    i_counts: Optional[Sequence[int]] = None,
    bound: int = DEFAULT_BOUND,
) -> VerificationReport:
    """Compare the descent polynomial of involutions with the matrix counts.

    ``form="first"``: ``I_n(t) = sum_k T(n,k) t^(k-1) (1-t)^(n-k)``.
    ``form="second"``: ``sum_k I(n,k) t^(k+1) (1+t)^(n-k-1) = sum_k T(n,k) t^k``.
    """
    check_size(n, bound)
    T = _t_counts(n, t_counts, bound)
    I = _i_counts(n, i_counts, bound)
    if form == "first":
        lhs = IntPolynomial(I)
        rhs = IntPolynomial()
        for k, c in enumerate(T, start=1):
            if c:
                rhs = rhs + IntPolynomial.monomial(k - 1) * poly_binomial_power(c, -1, n - k)
        return _report(MAIN_FIRST, n, lhs, rhs)
    if form == "second":
        lhs = second_form_lhs(n, I)
        rhs = IntPolynomial([0] + T)
        return _report(MAIN_SECOND, n, lhs, rhs)
    raise ValueError(f"form must be 'first' or 'second', got {form!r}")


def _alternating(counts: Sequence[int], start: int) -> int:
    total = 0
    for k, c in enumerate(counts, start=start):
        total = checked(total + (-1) ** k * c)
    return total


def verify_alternating_sum(
    n: int,
    mode: str = "by_counts",
    *,
    t_counts: Optional[Sequence[int]] = None,
    bound: int = DEFAULT_BOUND,
) -> VerificationReport:
    """Check ``sum_k (-1)^k T(n,k) = (-1)^n``.

    ``by_counts`` sums the count table. ``by_pairing`` runs φ over all of ``S``
    and sums the signs of its fixed points only; that reduction is valid only
    if every other element is paired with one of opposite sign, which is
    checked along the way and reported in ``detail`` if it fails.
    """
    check_size(n, bound)
    expected = (-1) ** n
    if mode == "by_counts":
        lhs = _alternating(_t_counts(n, t_counts, bound), 1)
        return _report(f"{ALT_SUM}:by_counts", n, lhs, expected)
    if mode != "by_pairing":
        raise ValueError(f"mode must be 'by_counts' or 'by_pairing', got {mode!r}")
    lhs = 0
    problems: list[str] = []
    for X, res in pair_all(n, bound=bound):
        if res.fixed:
            lhs += (-1) ** X.dim
            continue
        if phi(res.image).image != X:
            problems.append(f"phi(phi(X)) != X for {X.to_lists()}")
        elif (res.image.dim - X.dim) % 2 == 0:
            problems.append(f"same sign pair {X.to_lists()}")
    if problems:
        return VerificationReport(f"{ALT_SUM}:by_pairing", n, lhs, expected, False, "; ".join(problems[:3]))
    return _report(f"{ALT_SUM}:by_pairing", n, lhs, expected)


def verify_corollary(
    n: int,
    *,
    w_counts: Optional[Sequence[int]] = None,
    bound: int = DEFAULT_BOUND,
) -> VerificationReport:
    """``sum_{k>=2} (-1)^k W(n,k) = 1`` for even ``n``, plus the restricted pairing.

    The pairing over zero-diagonal matrices must stay inside the zero-diagonal
    set and fix exactly ``F_n``.
    """
    if n % 2:
        raise OddCorollaryError(f"the zero-diagonal identity is stated for even n only, got n={n}")
    check_size(n, bound)
    W = list(w_counts) if w_counts is not None else count_table(n, zero_diagonal=True, bound=bound)
    if W[0]:
        return _report(COROLLARY, n, W[0], 0, "W(n,1) must be 0")
    lhs = _alternating(W[1:], 2)
    problems: list[str] = []
    fixed = []
    for X, res in pair_all(n, zero_diagonal=True, bound=bound):
        if res.label.case not in (1, 2):
            problems.append(f"{res.label} on zero-diagonal {X.to_lists()}")
        if res.fixed:
            fixed.append(X)
        elif not res.image.has_zero_diagonal():
            problems.append(f"image of {X.to_lists()} has a non-zero diagonal")
    if fixed != [fixed_point(n)]:
        problems.append(f"fixed points {[F.to_lists() for F in fixed]}, expected only F_{n}")
    if problems:
        return VerificationReport(COROLLARY, n, lhs, 1, False, "; ".join(problems[:3]))
    return _report(COROLLARY, n, lhs, 1)


def observe_odd_zero_diagonal(n: int, bound: int = DEFAULT_BOUND) -> VerificationReport:
    """For odd ``n`` every ``W(n,k)`` vanishes, so the alternating sum is 0.

    Reported as an observation only; the identity proper is about even ``n``.
    """
    check_size(n, bound)
    lhs = _alternating(count_table(n, zero_diagonal=True, bound=bound)[1:], 2)
    return _report(ODD_W_OBSERVATION, n, lhs, 0, "observation for odd n, not a claimed identity")


def oracle_T_from_involutions(
    n: int, *, i_counts: Optional[Sequence[int]] = None, bound: int = DEFAULT_BOUND
) -> list[int]:
    """``T(n, 1..n)`` read off the expansion of the involution-side sum.

    Uses involution descent counts only; no matrix is enumerated.
    """
    check_size(n, bound)
    poly = second_form_lhs(n, _i_counts(n, i_counts, bound))
    return [poly.coefficient(k) for k in range(1, n + 1)]


@dataclass(frozen=True)
class ShapeRow:
    n: int
    row: tuple[int, ...]
    symmetric: bool
    unimodal: bool
    log_concave: bool


@dataclass(frozen=True)
class ShapeReport:
    rows: tuple[ShapeRow, ...]
    first_log_concave_failure: Optional[int] = None

    @property
    def all_symmetric(self) -> bool:
        return all(r.symmetric for r in self.rows)

    @property
    def all_unimodal(self) -> bool:
        return all(r.unimodal for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "rows": [
                {
                    "n": r.n,
                    "row": list(r.row),
                    "symmetric": r.symmetric,
                    "unimodal": r.unimodal,
                    "log_concave": r.log_concave,
                }
                for r in self.rows
            ],
            "first_log_concave_failure": self.first_log_concave_failure,
        }


def shape_checks(n_max: int, bound: int = DEFAULT_BOUND) -> ShapeReport:
    """Symmetry, unimodality and log-concavity of each row ``I(n, .)``, ``n <= n_max``.

    ``first_log_concave_failure`` is the smallest ``n`` found to fail, or
    ``None`` if the search found none.
    """
    check_size(n_max, bound)
    rows = []
    first_failure = None
    for n in range(1, n_max + 1):
        row = tuple(involution_descent_table(n, bound))
        lc = is_log_concave(row)
        if not lc and first_failure is None:
            first_failure = n
        rows.append(ShapeRow(n, row, is_symmetric(row), is_unimodal(row), lc))
    return ShapeReport(tuple(rows), first_failure)
