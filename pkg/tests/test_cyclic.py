import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.cyclic.code import (
    class_code,
    class_generator_poly,
    code_from_gammas,
    code_from_generator_poly,
    code_from_roots,
    generator_polynomial,
    reed_solomon_code,
)
from src.cyclic.exceptions import (
    DuplicateRootError,
    InvalidRootError,
    LengthMismatchError,
    NotDivisorError,
    ZeroDimensionError,
    ZeroElementError,
)
from src.cyclic.matrices import (
    encode,
    g_poly,
    g_vector,
    generator_matrix,
    is_codeword,
    parity_check_matrix,
    subfield_code_generator,
)
from src.cyclic.weights import cyclic_shift, hamming_weight, reverse_word, weight_profile
from src.expansion.components import chi_poly, cofactor_poly
from src.galois_field.conjugacy import minimal_polynomial

messages11 = st.lists(st.integers(min_value=0, max_value=15), min_size=11, max_size=11)


@pytest.fixture(scope='module')
def rs15(gf16):
    return reed_solomon_code(gf16, 2, 1, 4)


class TestCodeSpec:

    def test_reed_solomon_shape(self, rs15):
        assert (rs15.N, rs15.K, rs15.R, rs15.m) == (15, 11, 4, 4)
        assert generator_matrix(rs15).shape == (11, 15)
        assert parity_check_matrix(rs15).shape == (4, 15)

    def test_orthogonality(self, rs15):
        assert not np.any(generator_matrix(rs15).entries @ parity_check_matrix(rs15).entries.T)

    def test_gamma_set(self, gf16):
        spec = code_from_roots(gf16, [1, 2, 3, 4], 2)
        assert spec.gamma_set == tuple(sorted((-e) % 15 for e in range(15) if e not in {1, 2, 3, 4}))

    def test_reed_solomon_wraps(self, gf16):
        assert reed_solomon_code(gf16, 2, -1, 3).roots == (0, 1, 14)

    def test_duplicate_roots(self, gf16):
        with pytest.raises(DuplicateRootError):
            code_from_roots(gf16, [1, 1], 2)

    def test_invalid_root(self, gf16):
        with pytest.raises(InvalidRootError):
            code_from_roots(gf16, [15], 2)

    def test_zero_dimension(self, gf16):
        with pytest.raises(ZeroDimensionError):
            code_from_roots(gf16, range(15), 2)
        with pytest.raises(ZeroDimensionError):
            code_from_gammas(gf16, [], 2)

    def test_code_from_gammas(self, gf16):
        spec = code_from_gammas(gf16, [1, 2], 2)
        assert spec.gamma_set == (1, 2)
        assert spec.K == 2
        assert 14 not in spec.roots and 13 not in spec.roots

    def test_code_from_generator_poly(self, gf16):
        spec = code_from_generator_poly(gf16, minimal_polynomial(gf16, gf16.alpha, 2), 2)
        assert spec.roots == (1, 2, 4, 8)

    def test_not_divisor(self, gf16):
        square = minimal_polynomial(gf16, gf16.alpha, 2) ** 2
        with pytest.raises(NotDivisorError):
            code_from_generator_poly(gf16, square, 2)

    def test_generator_polynomial_degree(self, rs15):
        assert generator_polynomial(rs15).degree == 4


class TestClassCode:

    @pytest.mark.parametrize('exponent', [1, 3, 5, 7, 14])
    def test_matches_generator_poly(self, gf16, exponent):
        gamma = gf16.element(exponent)
        assert generator_polynomial(class_code(gf16, 2, gamma)) == class_generator_poly(gf16, 2, gamma)

    def test_spectrum(self, gf16):
        spec = class_code(gf16, 2, gf16.element(5))
        assert spec.K == 2
        assert spec.gamma_set == (5, 10)

    def test_contains_inverse_powers(self, gf16):
        gamma = gf16.element(3)
        spec = class_code(gf16, 2, gamma)
        assert is_codeword(spec, g_vector(gf16, gamma ** -1))

    def test_with_one(self, gf16):
        gamma = gf16.alpha
        spec = class_code(gf16, 2, gamma, with_one=True)
        assert spec.K == 5
        assert generator_polynomial(spec) == class_generator_poly(gf16, 2, gamma, with_one=True)


class TestEncoding:

    @given(message=messages11)
    def test_encoded_words_are_codewords(self, gf16, rs15, message):
        word = encode(rs15, gf16.gf(message))
        assert is_codeword(rs15, word)
        assert is_codeword(rs15, cyclic_shift(word, 3))

    def test_message_length(self, gf16, rs15):
        with pytest.raises(LengthMismatchError):
            encode(rs15, gf16.gf([1, 2]))

    def test_word_length(self, gf16, rs15):
        with pytest.raises(LengthMismatchError):
            is_codeword(rs15, gf16.gf.Zeros(14))

    def test_subfield_generator_rows(self, gf16):
        generator = class_generator_poly(gf16, 2, gf16.alpha)
        rows = subfield_code_generator(generator, 4, 15)
        assert rows.shape == (4, 15)
        assert np.array_equal(rows[1], cyclic_shift(rows[0], 1))
        assert all(hamming_weight(row) == 8 for row in rows)


class TestGWords:

    def test_zero_gamma(self, gf16):
        with pytest.raises(ZeroElementError):
            g_vector(gf16, gf16.zero)

    def test_weight_profile(self, gf16):
        profile = weight_profile(g_vector(gf16, gf16.alpha))
        assert profile.weight == 15
        assert set(profile.counts.values()) == {1}
        assert len(profile.as_text(gf16)) == 15

    def test_reverse_is_inverse_word(self, gf16):
        gamma = gf16.element(2)
        reversed_word = reverse_word(g_vector(gf16, gamma))
        # (gamma^(N-1), ..., 1) = gamma^(-1) g(gamma^(-1))
        assert np.array_equal(reversed_word, gamma ** -1 * g_vector(gf16, gamma ** -1))

    @given(exponent=st.integers(min_value=1, max_value=14))
    def test_chi_factorization(self, gf16, exponent):
        gamma = gf16.element(exponent)
        assert g_poly(gf16, gamma) == chi_poly(gf16, gamma, 2) * cofactor_poly(gf16, gamma, 2)

    def test_chi_factorization_over_gf4(self, gf16):
        gamma = gf16.element(7)
        assert g_poly(gf16, gamma) == chi_poly(gf16, gamma, 4) * cofactor_poly(gf16, gamma, 4)
