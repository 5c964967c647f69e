from fractions import Fraction

import pytest

from cauchy_binet import generators as gen
from cauchy_binet.charpoly import Polynomial, berkowitz, char_poly, is_nilpotent, pseudo_det, spectral_count
from cauchy_binet.errors import ShapeError
from cauchy_binet.exact import Matrix, block_diag, det, inverse, pseudo_inverse, rank
from cauchy_binet.minors import diag_minor_trace
from oracles import interpolated_char_poly

EX4 = Matrix([[0, 4, 4], [4, 0, 3], [4, 3, 6]])
PITFALL_G = Matrix([[1, -1, -1], [1, -1, -1], [-2, 2, -1]])


def test_char_poly_examples():
    assert char_poly(EX4).coeffs == (0, 41, 6, -1)
    assert char_poly(Matrix.identity(3).T @ PITFALL_G).coeffs == (0, 0, -1, -1)
    assert char_poly(Matrix([])).coeffs == (1,)


def test_char_poly_rejects_rectangular():
    with pytest.raises(ShapeError, match="2x3"):
        char_poly(Matrix.zeros(2, 3))


def test_berkowitz_two_by_two():
    # det(x - A) = x^2 - (a+d) x + (ad - bc)
    assert berkowitz([[2, 3], [5, 7]]) == [1, -9, -1]


@pytest.mark.parametrize("n", range(0, 6))
def test_char_poly_matches_interpolation(rng, n):
    for _ in range(6):
        a = gen.square(rng, n)
        assert list(char_poly(a).coeffs) == interpolated_char_poly(a)


def test_char_poly_rational_entries():
    a = Matrix([["1/2", 3], [1, "1/3"]])
    assert list(char_poly(a).coeffs) == interpolated_char_poly(a)


def test_signed_coefficients():
    p = char_poly(EX4)
    # p_0 = 1, p_1 = trace, p_2 = sum of principal 2-minors, p_3 = det
    assert p.signed_coefficients() == [1, 6, -41, 0]
    assert p.signed(7) == 0


def test_polynomial_eval_and_str():
    p = Polynomial((0, 41, 6, -1))
    assert p(1) == 46
    assert str(p) == "41*x + 6*x^2 - x^3"


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[5, 6], [10, 12]], 17),
        ([[1, 2, 3, 4]] * 4, 10),
        ([[0, 1], [0, 0]], 1),
        ([[0, 4, 4], [4, 0, 3], [4, 3, 6]], -41),
        ([[1, 1], [1, 1]], 2),
        ([[1, 1], [0, 0]], 1),
    ],
)
def test_pseudo_det_examples(rows, expected):
    assert pseudo_det(Matrix(rows)) == expected


def test_pseudo_det_empty_is_one():
    assert pseudo_det(Matrix([])) == 1
    assert pseudo_det(Matrix.zeros(4, 4)) == 1


def test_pseudo_det_not_multiplicative():
    a, b = Matrix.diag([2, 0]), Matrix.diag([0, 2])
    assert pseudo_det(a @ b) == 1 != pseudo_det(a) * pseudo_det(b)


def test_spectral_count_below_rank():
    a = Matrix.identity(3).T @ PITFALL_G
    assert spectral_count(a) == 1
    assert rank(a) == 2
    assert pseudo_det(a) == -1


def test_spectral_count_extremes():
    assert spectral_count(Matrix([[2, 1], [1, 1]])) == 2
    assert spectral_count(Matrix([[0, 1], [0, 0]])) == 0


def test_nilpotent():
    assert is_nilpotent(Matrix([[0, 1], [0, 0]]))
    F = Matrix([[-1, -1], [1, 1]])
    ftg = F.T @ Matrix.identity(2)
    assert is_nilpotent(ftg) and pseudo_det(ftg) == 1
    assert not is_nilpotent(Matrix.identity(2))


def test_vandermonde_with_repeated_node():
    # columns 1 and 3 coincide, so Det is the sum of principal 2-minors:
    # (b - a) + 0 + ab(a - b) = (b - a)(1 - ab)
    for a, b in [(2, 3), (1, 5), (-2, 4)]:
        A = Matrix([[1, 1, 1], [a, b, a], [a * a, b * b, a * a]])
        assert pseudo_det(A) == (b - a) * (1 - a * b)
    a = 2
    A = Matrix([[1, 1, 1], [a, a, a], [a * a, a * a, a * a]])
    assert pseudo_det(A) == 1 + a + a * a


def test_discontinuity_example():
    # Det diag(a, 2) is 2a for a != 0 but 2 at a = 0
    assert pseudo_det(Matrix.diag([Fraction(1, 10**9), 2])) == Fraction(2, 10**9)
    assert pseudo_det(Matrix.diag([0, 2])) == 2


# -- properties --------------------------------------------------------------


def test_invertible_agrees_with_det(rng):
    for _ in range(40):
        a = gen.invertible(rng, rng.randint(1, 7))
        assert pseudo_det(a) == det(a)


def test_transpose_invariance(rng):
    for _ in range(40):
        a = gen.square(rng, rng.randint(1, 7))
        assert pseudo_det(a.T) == pseudo_det(a)


def test_powers(rng):
    for _ in range(40):
        a = gen.square(rng, rng.randint(1, 6))
        d = pseudo_det(a)
        for m in (1, 2, 3):
            assert pseudo_det(a**m) == d**m


def test_AtB_vs_ABt(rng):
    for _ in range(40):
        n = rng.randint(1, 6)
        a, b = gen.square(rng, n), gen.square(rng, n)
        assert pseudo_det(a.T @ b) == pseudo_det(a @ b.T)


def test_block_diagonal(rng):
    for _ in range(40):
        a, b = gen.square(rng, rng.randint(1, 4)), gen.square(rng, rng.randint(1, 4))
        assert pseudo_det(block_diag(a, b)) == pseudo_det(a) * pseudo_det(b)
    nil = Matrix([[0, 1], [0, 0]])
    assert pseudo_det(block_diag(nil, Matrix.diag([3]))) == 3


def test_similarity(rng):
    for _ in range(40):
        n = rng.randint(1, 6)
        a = gen.square(rng, n)
        s = gen.invertible(rng, n, -2, 2)
        assert pseudo_det(s @ a @ inverse(s)) == pseudo_det(a)


def test_never_zero(rng):
    for _ in range(60):
        assert pseudo_det(gen.square(rng, rng.randint(0, 7))) != 0


def test_pseudo_inverse_of_normal(rng):
    for _ in range(40):
        a = gen.normal(rng, rng.randint(1, 6))
        assert pseudo_det(pseudo_inverse(a)) == 1 / pseudo_det(a)


def test_pseudo_inverse_of_non_normal_counterexample():
    a = Matrix([[1, 1], [0, 0]])
    assert pseudo_det(pseudo_inverse(a)) == Fraction(1, 2)
    assert pseudo_det(a) == 1


def test_orthogonal_projection_has_det_one(rng):
    for _ in range(20):
        n = rng.randint(1, 6)
        b = gen.int_matrix(rng, n, rng.randint(1, n))
        if rank(b) < b.cols:
            continue
        proj = b @ inverse(b.T @ b) @ b.T
        assert pseudo_det(proj) == 1


def test_trace_of_compound_when_count_equals_rank(rng):
    for _ in range(30):
        n = rng.randint(1, 6)
        b = gen.int_matrix(rng, n, rng.randint(0, n), -3, 3)
        a = b @ b.T
        k = spectral_count(a)
        assert k == rank(a)
        assert diag_minor_trace(a, k) == pseudo_det(a)
