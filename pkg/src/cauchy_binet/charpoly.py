"""Characteristic polynomials and pseudo-determinants.

The characteristic polynomial is taken as ``det(A - x)``, stored with
ascending coefficients. The pseudo-determinant is the product of the nonzero
eigenvalues, read off from the lowest nonzero coefficient, so it is exact
and needs no eigenvalues. Nilpotent matrices (including the zero matrix and
the 0x0 matrix) have pseudo-determinant 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .exact import Matrix, _require_square


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with exact coefficients; ``coeffs[j]`` multiplies ``x**j``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def lowest_nonzero(self) -> int | None:
        return next((j for j, c in enumerate(self.coeffs) if c != 0), None)

    def signed(self, k: int) -> Fraction:
        """The coefficient ``p_k`` in ``p(x) = sum_k p_k (-x)**(n-k)``.

        ``p_0`` is 1 for a characteristic polynomial, ``p_1`` the trace and
        ``p_n`` the determinant. Out-of-range ``k`` gives 0.
        """
        n = self.degree
        if not 0 <= k <= n:
            return Fraction(0)
        c = self.coeffs[n - k]
        return c if (n - k) % 2 == 0 else -c

    def signed_coefficients(self) -> list[Fraction]:
        return [self.signed(k) for k in range(self.degree + 1)]

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if mono and c == 1:
                t = mono
            elif mono and c == -1:
                t = "-" + mono
            else:
                t = f"{c}{'*' if mono else ''}{mono}"
            terms.append(t)
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def berkowitz(rows: list[list]) -> list:
    """Coefficients of ``det(x I - A)``, leading coefficient first.

    Division-free: integer input gives integer output. ``rows`` is a square
    list of lists over any commutative ring.
    """
    n = len(rows)
    vect = [1]
    for r in range(n):
        # leading (r+1)x(r+1) block is [[A_r, C], [R, a]]
        a = rows[r][r]
        R = rows[r][:r]
        C = [rows[i][r] for i in range(r)]
        col = [1, -a]
        v = C
        for _ in range(r):
            col.append(-sum(x * y for x, y in zip(R, v)))
            v = [sum(rows[i][j] * v[j] for j in range(r)) for i in range(r)]
        vect = [
            sum(col[i - j] * vect[j] for j in range(max(0, i - len(col) + 1), min(i, r) + 1))
            for i in range(r + 2)
        ]
    return vect


def char_poly(a: Matrix) -> Polynomial:
    """Ascending coefficients of ``det(a - x I)``."""
    _require_square(a, "char_poly")
    n = a.rows
    d = lcm(*(x.denominator for x in a.entries)) if n else 1
    scaled = [[int(x * d) for x in row] for row in a]
    desc = berkowitz(scaled)
    # det(B - d x) for B = d a; undo the scaling coefficient by coefficient
    sign = -1 if n % 2 else 1
    coeffs = []
    for j in range(n + 1):
        coeffs.append(Fraction(sign * desc[n - j] * d**j, d**n))
    return Polynomial(tuple(coeffs))


def _lowest(a: Matrix) -> tuple[Polynomial, int]:
    p = char_poly(a)
    j = p.lowest_nonzero()
    # the leading coefficient is (-1)^n, so j always exists
    return p, j


def pseudo_det(a: Matrix) -> Fraction:
    """Product of the nonzero eigenvalues; 1 when there are none."""
    p, j = _lowest(a)
    c = p.coeffs[j]
    return c if j % 2 == 0 else -c


def spectral_count(a: Matrix) -> int:
    """Number of nonzero eigenvalues with algebraic multiplicity.

    This is the order ``k`` of the minors that realise the pseudo-determinant
    and can be smaller than the rank.
    """
    p, j = _lowest(a)
    return a.rows - j


def is_nilpotent(a: Matrix) -> bool:
    return spectral_count(a) == 0
