"""Floating-point checks for spectral statements.

Everything here is a cross-check against the exact routines; no float ever
feeds back into an exact result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .charpoly import pseudo_det
from .errors import ShapeError
from .exact import Matrix, is_normal, rank
from .minors import minor_pair_sum

ZERO_TOL = 1e-9
PAIR_TOL = 1e-8
MAX_SWEEPS = 100


@dataclass(frozen=True)
class FloatSpectrum:
    eigenvalues: tuple[float, ...]
    dim: int

    def nonzero(self, scale: float) -> list[float]:
        return [x for x in self.eigenvalues if abs(x) > ZERO_TOL * scale]


def to_float(a: Matrix) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in a], dtype=float).reshape(a.rows, a.cols)


def jacobi_eigenvalues(s: np.ndarray, tol: float = 1e-13, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric array by cyclic Jacobi rotations, ascending."""
    a = np.array(s, dtype=float)
    n = a.shape[0]
    norm = np.linalg.norm(a)
    if n == 0 or norm == 0:
        return np.zeros(n)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off < tol * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                sn = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - sn * aq
                a[:, q] = sn * ap + c * aq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - sn * rq
                a[q, :] = sn * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    else:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    return np.sort(np.diag(a))


def symmetric_eigenvalues(a: Matrix) -> FloatSpectrum:
    if not a.is_symmetric():
        raise ShapeError("symmetric_eigenvalues needs a symmetric matrix")
    return FloatSpectrum(tuple(float(x) for x in jacobi_eigenvalues(to_float(a))), a.rows)


def frobenius(a: Matrix) -> float:
    return math.sqrt(sum(float(x) ** 2 for x in a.entries))


def numeric_spectral_count(a: Matrix) -> int:
    """Nonzero eigenvalue count of a symmetric matrix at the float threshold."""
    return len(symmetric_eigenvalues(a).nonzero(frobenius(a)))


def pseudo_pfaffian_abs(a: Matrix) -> float:
    """|Pf(a)| for real skew-symmetric ``a``: product of one singular value
    from each equal pair.

    Singular values come from the symmetric dilation ``[[0, a], [a^T, 0]]``,
    which keeps small ones accurate; each singular value of a skew matrix
    appears twice, and twice again in the dilation.
    """
    if not a.is_square or a.T != -a:
        raise ShapeError("pseudo_pfaffian_abs needs a skew-symmetric matrix")
    n = a.rows
    if n == 0 or a.is_zero():
        return 1.0
    x = to_float(a)
    dil = np.block([[np.zeros((n, n)), x], [x.T, np.zeros((n, n))]])
    ev = jacobi_eigenvalues(dil)
    cut = ZERO_TOL * np.linalg.norm(x)
    sv = sorted(float(v) for v in ev if v > cut)
    if len(sv) % 2:
        raise ArithmeticError(f"odd number of nonzero singular values: {sv}")
    prod = 1.0
    for s, t in zip(sv[::2], sv[1::2]):
        if abs(s - t) > PAIR_TOL * max(s, t):
            raise ArithmeticError(f"unpaired singular values {s} and {t}")
        prod *= math.sqrt(s * t)
    return prod


def volume_check(a: Matrix) -> tuple[float, float]:
    """(|Det a|, sqrt of the squared-minor sum at order rank(a)) for normal ``a``."""
    if not is_normal(a):
        raise ShapeError("volume_check needs a normal matrix")
    k = rank(a)
    return abs(float(pseudo_det(a))), math.sqrt(float(minor_pair_sum(a, a, k)))


def log_trace_check(a: Matrix) -> tuple[float, float]:
    """(sum of log|lambda| over nonzero eigenvalues, log|Det a|) for symmetric ``a``."""
    spec = symmetric_eigenvalues(a)
    lhs = sum(math.log(abs(x)) for x in spec.nonzero(frobenius(a)))
    d = abs(pseudo_det(a))
    return lhs, math.log(d.numerator) - math.log(d.denominator)
