"""Groupoid compatibility identities, the unipotent solver, leaf diagnostics."""

import random
from fractions import Fraction

import pytest

from symgroupoid.groupoid import (
    InadmissibleMatrixError,
    RMatrix,
    antidiagonal_S,
    corner_minor_ratios,
    generic_transport_pair,
    groupoid_matrices,
    leaf_diagnostics,
    solve_unipotent_A,
)
from symgroupoid.laurent import GeneratorTable, RationalFn
from symgroupoid.matrices import MatrixRF, charpoly_is_palindromic

T0 = GeneratorTable([])


def wrap(x):
    return RationalFn.constant(T0, x)


def rational_matrix(rows):
    return MatrixRF([[wrap(Fraction(x)) for x in row] for row in rows])


def test_antidiagonal_matrix_values():
    s1 = antidiagonal_S(1)
    assert s1[0, 0] == wrap(-1)
    s2 = antidiagonal_S(2)
    assert [[int(s2[i, j].evaluate({})) for j in range(2)] for i in range(2)] == [[0, -1], [1, 0]]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_antidiagonal_square_and_orthogonality(n):
    s = antidiagonal_S(n)
    ident = MatrixRF.identity(n, wrap(1), wrap(0))
    assert s * s == ident.scale(wrap((-1) ** (n + 1)))
    assert s.transpose() * s == ident
    assert s.transpose() == s.scale(wrap((-1) ** (n + 1)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_r_matrix_structure(n):
    RMatrix(n)  # construction asserts r + r^T = P


@pytest.mark.parametrize("n", [2, 3])
def test_groupoid_identities_symbolic(n):
    mats = groupoid_matrices(generic_transport_pair(n))
    assert mats["A"].is_upper_triangular()
    assert mats["Atilde"].is_upper_triangular()
    assert mats["BABt"] == mats["Atilde"]


def test_groupoid_identities_numeric_n4():
    rng = random.Random(5)
    parts = generic_transport_pair(4, specialize=lambda _n: Fraction(rng.randint(1, 20), rng.randint(1, 5)))
    mats = groupoid_matrices(parts)
    assert mats["A"].is_upper_triangular()
    assert mats["Atilde"].is_upper_triangular()
    assert mats["BABt"] == mats["Atilde"]


def test_unique_unipotent_on_random_matrices():
    rng = random.Random(3)
    for n in (3, 4):
        done = 0
        while done < 6:
            b = rational_matrix(
                [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)] for _ in range(n)]
            )
            try:
                out = solve_unipotent_A(b)
            except (InadmissibleMatrixError, ZeroDivisionError):
                continue
            if out["ratio_formula_holds"] is None:
                continue
            done += 1
            assert out["A"].is_unipotent_upper()
            assert all(out["image"][i, j].is_zero() for i in range(n) for j in range(i))
            assert out["ratio_formula_holds"]


def test_identity_matrix_degenerate_but_solved():
    ident = MatrixRF.identity(3, wrap(1), wrap(0))
    out = solve_unipotent_A(ident)
    assert out["A"] == ident
    deltas, _ = corner_minor_ratios(ident)
    assert all(x.is_zero() for x in deltas[1:3])


def test_corner_minor_conventions():
    b = rational_matrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    deltas, tildes = corner_minor_ratios(b)
    det = b.det()
    assert deltas[0] == wrap(1) and tildes[3] == wrap(1)
    assert deltas[3] == det and tildes[0] == det
    # delta_1 is the bottom-left entry; delta~_1 the top-right complementary block
    assert deltas[1] == b[2, 0]
    assert tildes[2] == b[0, 2]


def test_matched_minor_stratum_gives_unipotent_image():
    rng = random.Random(11)
    built = 0
    while built < 3:
        b21, b22, b31, b32, b23, b33 = (Fraction(rng.randint(1, 6), rng.randint(1, 3)) for _ in range(6))
        b13 = b21 * b32 - b22 * b31
        if b23 == 0:
            continue
        b12 = (b31 + b13 * b22) / b23
        m11 = b22 * b33 - b23 * b32
        if m11 == 0:
            continue
        m12 = b21 * b33 - b23 * b31
        m13 = b21 * b32 - b22 * b31
        b11 = (1 + b12 * m12 - b13 * m13) / m11
        b = rational_matrix([[b11, b12, b13], [b21, b22, b23], [b31, b32, b33]])
        try:
            out = solve_unipotent_A(b)
        except (InadmissibleMatrixError, ZeroDivisionError):
            continue
        built += 1
        assert b.det() == wrap(1)
        assert out["image"].is_unipotent_upper()


def test_leaf_diagnostics_identity():
    ident = MatrixRF.identity(5, wrap(1), wrap(0))
    d = leaf_diagnostics(ident)
    assert d["rank_sym"] == 5
    assert d["palindromic"]
    # char poly of Id^-T Id is (x-1)^5: no root at -1
    assert d["minus_one_multiplicity"] == 0


def test_leaf_diagnostics_generic_palindromy():
    rng = random.Random(7)
    for n in (4, 5, 6):
        a = MatrixRF(
            [
                [wrap(1) if i == j else (wrap(Fraction(rng.randint(1, 9), rng.randint(1, 4))) if j > i else wrap(0)) for j in range(n)]
                for i in range(n)
            ]
        )
        d = leaf_diagnostics(a)
        assert d["palindromic"]
        assert charpoly_is_palindromic(d["charpoly"])


def test_leaf_diagnostics_requires_unipotent():
    b = rational_matrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        leaf_diagnostics(b)
