"""Minors, compound matrices and Cauchy-Binet sums.

Index sets are 0-based and always enumerated in lexicographic order, so the
row ``i`` of ``exterior_power(f, k)`` corresponds to ``subsets(f.rows, k)[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from .charpoly import Polynomial, spectral_count
from .errors import BudgetExceeded
from .exact import Matrix, _require_same_shape, _require_square, as_scalar, bareiss_det_int, integer_rows, vstack

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class MinorPattern:
    """Row set and column set of a square submatrix; both sorted, same size."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        if len(rows) != len(cols):
            raise ValueError(f"pattern needs |I| == |J|, got {len(rows)} and {len(cols)}")
        for s in (rows, cols):
            if any(a >= b for a, b in zip(s, s[1:])):
                raise ValueError(f"pattern indices must be strictly increasing: {s}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def order(self) -> int:
        return len(self.rows)


def subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of ``range(n)`` in lexicographic order ([] if k > n)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return list(combinations(range(n), k))


def pattern_count(n: int, m: int, k: int) -> int:
    return comb(n, k) * comb(m, k)


def _check_budget(what: str, needed: int, budget: int | None) -> None:
    if budget is not None and needed > budget:
        raise BudgetExceeded(what, needed, budget)


class _IntMinors:
    """Row-scaled integer copy of a matrix for fast repeated minors."""

    def __init__(self, a: Matrix):
        self.rows, self.denoms = integer_rows(a)

    def __call__(self, I: Sequence[int], J: Sequence[int]) -> Fraction:
        num = bareiss_det_int([[self.rows[i][j] for j in J] for i in I])
        if num == 0:
            return Fraction(0)
        den = 1
        for i in I:
            den *= self.denoms[i]
        return Fraction(num, den)


def minor_det(f: Matrix, p: MinorPattern) -> Fraction:
    """Determinant of the submatrix picked out by ``p`` (1 for the empty pattern)."""
    for i in p.rows:
        if not 0 <= i < f.rows:
            raise IndexError(f"row {i} outside 0..{f.rows - 1}")
    for j in p.cols:
        if not 0 <= j < f.cols:
            raise IndexError(f"column {j} outside 0..{f.cols - 1}")
    return _IntMinors(f)(p.rows, p.cols)


def exterior_power(f: Matrix, k: int, budget: int | None = DEFAULT_BUDGET) -> Matrix:
    """Compound matrix of k x k minors, C(n,k) x C(m,k)."""
    _check_budget("exterior_power patterns", pattern_count(f.rows, f.cols, k), budget)
    rs, cs = subsets(f.rows, k), subsets(f.cols, k)
    minor = _IntMinors(f)
    return Matrix([[minor(I, J) for J in cs] for I in rs], cols=len(cs))


def minor_pair_sum(f: Matrix, g: Matrix, k: int, budget: int | None = DEFAULT_BUDGET) -> Fraction:
    """Sum over all k x k patterns P of det(f_P) * det(g_P)."""
    _require_same_shape(f, g, "minor_pair_sum")
    n, m = f.shape
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Fraction(1)
    if k > min(n, m):
        return Fraction(0)
    _check_budget("minor_pair_sum patterns", pattern_count(n, m, k), budget)
    fi, gi = _IntMinors(f), _IntMinors(g)
    cs = subsets(m, k)
    total = Fraction(0)
    for I in combinations(range(n), k):
        fr = [fi.rows[i] for i in I]
        gr = [gi.rows[i] for i in I]
        acc = 0
        for J in cs:
            x = bareiss_det_int([[r[j] for j in J] for r in fr])
            if x:
                acc += x * bareiss_det_int([[r[j] for j in J] for r in gr])
        if acc:
            den = 1
            for i in I:
                den *= fi.denoms[i] * gi.denoms[i]
            total += Fraction(acc, den)
    return total


def cauchy_binet_coeffs(f: Matrix, g: Matrix, budget: int | None = DEFAULT_BUDGET) -> Polynomial:
    """Coefficients in z of ``det(1 + z f^T g)`` computed from minor sums.

    The result has ``f.cols + 1`` coefficients; coefficient ``k`` is
    ``minor_pair_sum(f, g, k)``.
    """
    _require_same_shape(f, g, "cauchy_binet_coeffs")
    return Polynomial(tuple(minor_pair_sum(f, g, k, budget) for k in range(f.cols + 1)))


def pseudo_det_via_minors(f: Matrix, g: Matrix, budget: int | None = DEFAULT_BUDGET) -> Fraction:
    """Pseudo-determinant of ``f^T g`` as a sum of products of minors.

    The minor order is the number of nonzero eigenvalues of ``f^T g``, which
    can be below its rank.
    """
    _require_same_shape(f, g, "pseudo_det_via_minors")
    k = spectral_count(f.T @ g)
    return minor_pair_sum(f, g, k, budget)


def pythagoras_sum(a: Matrix, k: int, budget: int | None = DEFAULT_BUDGET) -> Fraction:
    """Sum of squared k x k minors of a square matrix."""
    _require_square(a, "pythagoras_sum")
    return minor_pair_sum(a, a, k, budget)


def diag_minor_trace(a: Matrix, k: int) -> Fraction:
    """Sum of principal k x k minors, i.e. the trace of the k-th compound."""
    _require_square(a, "diag_minor_trace")
    if not 0 <= k <= a.rows:
        raise ValueError(f"k={k} outside 0..{a.rows}")
    minor = _IntMinors(a)
    return sum((minor(I, I) for I in combinations(range(a.rows), k)), Fraction(0))


def append_parallel_rows(fT: Matrix, gT: Matrix, source_row: int, lam, mu) -> tuple[Matrix, Matrix]:
    """Append ``lam`` times row ``source_row`` of ``fT`` to ``fT`` and ``mu``
    times the same row of ``gT`` to ``gT``.

    When ``fT @ gT.T`` is nonsingular the pseudo-determinant of the enlarged
    product is ``(1 + lam*mu)`` times the old one.
    """
    _require_same_shape(fT, gT, "append_parallel_rows")
    if not 0 <= source_row < fT.rows:
        raise IndexError(f"row {source_row} outside 0..{fT.rows - 1}")
    return append_combination(fT, gT, {source_row: lam}, {source_row: mu})


def append_combination(fT: Matrix, gT: Matrix, lams: dict, mus: dict) -> tuple[Matrix, Matrix]:
    """Append ``sum lams[j] * fT.row(j)`` to ``fT`` and ``sum mus[j] * gT.row(j)`` to ``gT``.

    For full-rank inputs the pseudo-determinant scales by
    ``1 + sum_j lams[j] * mus[j]``.
    """
    _require_same_shape(fT, gT, "append_combination")

    def combo(a: Matrix, coeffs: dict) -> Matrix:
        row = [Fraction(0)] * a.cols
        for j, c in coeffs.items():
            if not 0 <= j < a.rows:
                raise IndexError(f"row {j} outside 0..{a.rows - 1}")
            c = as_scalar(c)
            row = [x + c * y for x, y in zip(row, a.row(j))]
        return Matrix([row], cols=a.cols)

    return vstack(fT, combo(fT, lams)), vstack(gT, combo(gT, mus))
