import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.basis.basis import power_basis
from src.cli import golden
from src.cyclic.code import reed_solomon_code
from src.cyclic.matrices import encode, g_vector
from src.expansion.codebook import (
    ListingMatch,
    compare_listing,
    constant_weight_codebook,
    constant_weight_report,
    expected_constant_weight,
    expected_element_count,
    is_periodic,
)
from src.expansion.components import (
    component_poly,
    component_word,
    component_words,
    zero_component_pattern,
    zero_component_predicted,
)
from src.expansion.exceptions import BasisMismatchError, ComponentIndexError
from src.expansion.expanded import (
    ExpansionForm,
    collapse_word,
    expand_generator,
    expand_parity,
    expand_word,
    parity_density,
)
from src.galois_field.field import build_field

messages11 = st.lists(st.integers(min_value=0, max_value=15), min_size=11, max_size=11)


@pytest.fixture(scope='module')
def rs15(gf16):
    return reed_solomon_code(gf16, 2, 1, 4)


class TestExpandedMatrices:

    def test_full_shapes(self, rs15, power16):
        generator = expand_generator(rs15, power16)
        parity = expand_parity(rs15, power16)
        assert generator.shape == (44, 60)
        assert parity.shape == (16, 60)
        assert generator.rank() == 44
        assert not np.any(generator.entries @ parity.entries.T)

    def test_symbol_shapes(self, rs15, composite16):
        generator = expand_generator(rs15, composite16, ExpansionForm.SYMBOL)
        parity = expand_parity(rs15, composite16, ExpansionForm.SYMBOL)
        assert generator.shape == (44, 15)
        assert parity.shape == (4, 60)

    def test_orthogonal_in_composite_basis(self, rs15, composite16):
        generator = expand_generator(rs15, composite16)
        parity = expand_parity(rs15, composite16)
        assert not np.any(generator.entries @ parity.entries.T)

    def test_basis_mismatch(self, gf16, rs15):
        with pytest.raises(BasisMismatchError):
            expand_generator(rs15, power_basis(gf16, 4))

    def test_rows_text(self, rs15, power16):
        rows = expand_generator(rs15, power16).rows_text()
        assert len(rows) == 44
        assert all(len(row) == 60 and set(row) <= {'0', '1'} for row in rows)

    @given(message=messages11)
    def test_expanded_codewords(self, gf16, rs15, power16, message):
        word = encode(rs15, gf16.gf(message))
        expanded = expand_word(word, power16)
        assert expanded.shape == (60,)
        assert not np.any(expand_parity(rs15, power16).entries @ expanded)
        assert np.array_equal(collapse_word(expanded, power16), word)

    def test_symbol_major_positions(self, gf16, power16):
        expanded = expand_word(g_vector(gf16, gf16.alpha), power16)
        # символ t = a^t занимает позиции 4t..4t+3
        assert expanded[4 * 4:4 * 5].tolist() == [1, 1, 0, 0]
        assert expanded[:4].tolist() == [1, 0, 0, 0]

    @pytest.mark.slow
    def test_parity_density(self, gf256, power256):
        spec = reed_solomon_code(gf256, 2, 1, 2)
        parity = expand_parity(spec, power256)
        assert parity.shape == (16, 2040)
        assert parity_density(parity) == pytest.approx(128 / 255)


class TestConstantWeight:

    def test_expected_values(self):
        assert expected_constant_weight(2, 4, 4) == 8
        assert expected_constant_weight(2, 4, 2) == 10
        assert expected_constant_weight(2, 6, 3) == 36
        assert expected_element_count(3, 2, 2) == 3

    def test_gf16_codebook(self, gf16):
        entries = constant_weight_codebook(gf16, 2, gf16.element(-1))
        assert len(entries) == 16
        assert entries[0].weight == 0
        assert {entry.weight for entry in entries[1:]} == {8}
        assert entries[3].message == (1, 1, 0, 0)

    def test_gf16_report(self, gf16):
        report = constant_weight_report(gf16, 2, gf16.element(-1))
        assert report.weights == [8]
        assert report.constant and report.counts_match and report.periodic
        assert [item.d_min for item in report.plotkin] == [8, 7, 8]
        assert all(item.match for item in report.plotkin)

    def test_listing_exact(self):
        field = build_field(2, 4, golden.GF16_POLY)
        gamma = field.element(-1)
        report = constant_weight_report(field, 2, gamma, listing=golden.reference_listing(field, 14))
        assert report.listing_match == ListingMatch.EXACT.value

    def test_listing_reversed_under_default_poly(self, gf16):
        report = constant_weight_report(gf16, 2, gf16.element(-1), listing=golden.GF16_LISTING)
        assert report.listing_match == ListingMatch.REVERSED.value

    def test_listing_order(self):
        field = build_field(2, 4, golden.GF16_POLY)
        entries = constant_weight_codebook(field, 2, field.element(-1))
        assert compare_listing(field, 2, entries, golden.GF16_LISTING[::-1]) is ListingMatch.SET
        assert compare_listing(field, 2, entries, ['1' * 15] * 15) is ListingMatch.MISMATCH

    def test_gf64_periodic(self):
        field = build_field(2, 6, golden.GF64_POLY)
        gamma = field.element(-9)
        report = constant_weight_report(field, 2, gamma, listing=golden.reference_listing(field, 54))
        assert report.m_gamma == 3
        assert report.codewords == 8
        assert report.weights == [36]
        assert report.period == 7 and report.periodic
        assert report.listing_match in (ListingMatch.EXACT.value, ListingMatch.SET.value)
        assert [item.variant for item in report.plotkin] == ['class-code']
        assert report.plotkin[0].match

    def test_non_primitive_gamma(self, gf16):
        # a^3 вне подполей, но порядок 5 < 15: слова периодичны и вес не постоянен
        report = constant_weight_report(gf16, 2, gf16.element(3))
        assert report.weights == [6, 12]
        assert not report.constant

    def test_gf9(self, gf9):
        report = constant_weight_report(gf9, 3, gf9.alpha)
        assert report.weights == [6]
        assert report.counts_match
        assert [item.d_min for item in report.plotkin] == [6, 5, 6]

    def test_expanded_rows(self, gf16, power16):
        entries = constant_weight_codebook(gf16, 2, gf16.element(5), power16)
        assert len(entries) == 4
        assert all(entry.expanded_codeword.shape == (60,) for entry in entries)

    def test_is_periodic(self, gf16):
        word = gf16.gf([1, 0, 1, 1, 0, 1])
        assert is_periodic(word, 3)
        assert not is_periodic(word, 2)


class TestComponents:

    def test_zero_pattern_subfield_gamma(self, gf16, composite16):
        gamma = gf16.element(5)
        pattern = zero_component_pattern(gf16, gamma, composite16)
        assert np.array_equal(pattern, zero_component_predicted(gf16, gamma, composite16))
        assert int(pattern.sum()) == 8

    @pytest.mark.parametrize('fixture', ['power16', 'composite16'])
    def test_no_zero_components_outside_subfields(self, request, gf16, fixture):
        basis = request.getfixturevalue(fixture)
        pattern = zero_component_pattern(gf16, gf16.alpha, basis)
        assert not pattern.any()
        assert np.array_equal(pattern, zero_component_predicted(gf16, gf16.alpha, basis))

    def test_component_weights(self, gf16, power16):
        word = g_vector(gf16, gf16.element(7))
        for j in range(4):
            component = component_word(word, power16, j)
            assert component.weight == 8
            assert not component.is_zero()
        assert component_words(word, power16).shape == (4, 15)

    def test_component_poly(self, gf16, power16):
        word = g_vector(gf16, gf16.alpha)
        poly = component_poly(word, power16, 0)
        assert poly.degree <= 14
        assert int(poly.coeffs[-1]) == 1

    def test_component_index(self, gf16, power16):
        with pytest.raises(ComponentIndexError):
            component_word(g_vector(gf16, gf16.alpha), power16, 4)
