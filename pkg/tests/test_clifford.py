"""Clifford words against the matrix representation, and the golden fixtures."""

import itertools
from fractions import Fraction
from pathlib import Path

import pytest

from spinlrl import clifford as cl
from spinlrl.coeff import G_I, G_ONE, GaussianRational

GOLDEN = Path(__file__).resolve().parents[1] / "src" / "spinlrl" / "data" / "gamma_fixtures.txt"


def words_up_to(d, max_len):
    out = [()]
    for length in range(1, max_len + 1):
        out.extend(itertools.combinations(range(1, d + 1), length))
    return out


# -- word algebra ----------------------------------------------------------


def test_word_mul_examples():
    assert cl.word_mul((2,), (1,), 3) == ((1, 2), -1)
    assert cl.word_mul((1,), (1,), 3) == ((), 1)
    assert cl.word_mul((1, 2), (2, 3), 3) == ((1, 3), 1)


def test_word_mul_index_errors():
    with pytest.raises(cl.CliffordIndexError):
        cl.word_mul((4,), (), 3)
    with pytest.raises(cl.CliffordIndexError):
        cl.word_mul((2, 1), (), 3)


def test_word_adjoint_examples():
    assert cl.word_adjoint(()) == ((), 1)
    assert cl.word_adjoint((1, 2)) == ((1, 2), -1)
    assert cl.word_adjoint((1, 2, 3)) == ((1, 2, 3), -1)


def test_word_adjoint_matches_matrix_conjugate_transpose():
    for d in (2, 3, 4, 5):
        for word in words_up_to(d, 3):
            adj_word, sign = cl.word_adjoint(word)
            direct = cl.mat_conj_transpose(cl.word_matrix(d, word))
            expected = cl.mat_scale(GaussianRational(sign), cl.word_matrix(d, adj_word))
            assert direct == expected, (d, word)


def test_word_mul_matches_matrix_oracle():
    for d in (2, 3, 4, 5):
        for w1 in words_up_to(d, 3):
            for w2 in words_up_to(d, 3):
                word, sign = cl.word_mul(w1, w2, d)
                product = cl.mat_mul(cl.word_matrix(d, w1), cl.word_matrix(d, w2))
                expected = cl.mat_scale(GaussianRational(sign), cl.word_matrix(d, word))
                assert product == expected, (d, w1, w2)


# -- gamma matrices ---------------------------------------------------------


def test_low_dimension_matrices_are_pauli():
    assert cl.gamma_matrices(2).matrices == (cl.PAULI[0], cl.PAULI[1])
    assert cl.gamma_matrices(3).matrices == cl.PAULI


def test_d5_fifth_matrix_is_diag_identity():
    g5 = cl.gamma_matrices(5).matrices[4]
    eye = cl.mat_eye(2)
    assert g5 == cl._block(eye, cl.mat_zero(2), cl.mat_zero(2), cl.mat_scale(GaussianRational(-1), eye))


def test_dimension_cap():
    with pytest.raises(ValueError):
        cl.gamma_matrices(1)
    with pytest.raises(ValueError):
        cl.gamma_matrices(11)


@pytest.mark.parametrize("d", range(2, 9))
def test_clifford_relation_all_pairs(d):
    rep = cl.gamma_matrices(d)
    assert rep.size() == 2 ** (d // 2)
    n = rep.size()
    two_eye = cl.mat_scale(GaussianRational(2), cl.mat_eye(n))
    for i in range(d):
        for j in range(i, d):
            anti = cl.mat_add(
                cl.mat_mul(rep.matrices[i], rep.matrices[j]),
                cl.mat_mul(rep.matrices[j], rep.matrices[i]),
            )
            assert anti == (two_eye if i == j else cl.mat_zero(n)), (d, i, j)


def _commutator(a, b):
    return cl.mat_sub(cl.mat_mul(a, b), cl.mat_mul(b, a))


@pytest.mark.parametrize("d", range(2, 9))
def test_spin_matrices_satisfy_rotation_algebra(d):
    n = 2 ** (d // 2)
    spins = {(i, j): cl.spin_matrix(d, i, j).matrix for i in range(1, d + 1) for j in range(1, d + 1)}
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            for k in range(1, d + 1):
                for l in range(1, d + 1):
                    lhs = _commutator(spins[(i, j)], spins[(k, l)])
                    rhs = cl.mat_zero(n)
                    for delta, target in (
                        (int(i == k), spins[(j, l)]),
                        (int(i == l), spins[(k, j)]),
                        (int(j == k), spins[(l, i)]),
                        (int(j == l), spins[(i, k)]),
                    ):
                        if delta:
                            rhs = cl.mat_add(rhs, cl.mat_scale(G_I, target))
                    assert lhs == rhs, (d, i, j, k, l)


@pytest.mark.parametrize("d", range(2, 9))
def test_spin_contraction_constant(d):
    # sum_i {S_ij, S_ik} = (d-1)/2 delta_jk as matrices
    n = 2 ** (d // 2)
    for j in range(1, d + 1):
        for k in range(1, d + 1):
            acc = cl.mat_zero(n)
            for i in range(1, d + 1):
                sij = cl.spin_matrix(d, i, j).matrix
                sik = cl.spin_matrix(d, i, k).matrix
                acc = cl.mat_add(acc, cl.mat_add(cl.mat_mul(sij, sik), cl.mat_mul(sik, sij)))
            expected = cl.mat_scale(
                GaussianRational(Fraction((d - 1) * int(j == k), 2)), cl.mat_eye(n)
            )
            assert acc == expected, (d, j, k)


def test_spin_matrix_examples():
    half = Fraction(1, 2)
    s12 = cl.spin_matrix(2, 1, 2).matrix
    assert s12 == ((GaussianRational(half), GaussianRational(0)), (GaussianRational(0), GaussianRational(-half)))
    assert cl.spin_matrix(3, 1, 1).matrix == cl.mat_zero(2)
    s45 = cl.spin_matrix(5, 4, 5).matrix
    expected = cl._block(
        cl.mat_zero(2),
        cl.mat_scale(GaussianRational(0, half), cl.mat_eye(2)),
        cl.mat_scale(GaussianRational(0, -half), cl.mat_eye(2)),
        cl.mat_zero(2),
    )
    assert s45 == expected


def test_spin_antisymmetry_and_hermiticity():
    for d in (2, 3, 4, 5):
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                sij = cl.spin_matrix(d, i, j).matrix
                sji = cl.spin_matrix(d, j, i).matrix
                assert sij == cl.mat_scale(GaussianRational(-1), sji)
                assert sij == cl.mat_conj_transpose(sij)


# -- fixtures ----------------------------------------------------------------


def test_reference_fixture_byte_match():
    assert cl.render_reference_fixture() == GOLDEN.read_text()


def test_fixture_blocks_have_headers():
    text = cl.render_fixture(3)
    assert text.startswith("gamma 3 1\n")
    assert "spin 3 2 3" in text


# -- Pauli quotient -----------------------------------------------------------


def test_pauli_quotient_matches_matrices():
    for word in [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]:
        coeff, reduced = cl.pauli_reduce_word(word)
        assert cl.word_matrix(3, word) == cl.mat_scale(coeff, cl.word_matrix(3, reduced)), word
