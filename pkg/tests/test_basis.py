import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.basis.basis import (
    complete_to_basis,
    composite_basis,
    decompose,
    decompose_poly,
    dual_basis,
    make_basis,
    make_subbasis,
    parse_basis,
    power_basis,
    reconstruct,
    support_indices,
)
from src.basis.exceptions import (
    EmptySubbasisError,
    LinearlyDependentError,
    NotSubfieldElementError,
    SubbasisIndexError,
    WrongCountError,
)
from src.basis.structure import coefficient_matrix, f_coeff, structure_constants
from src.cyclic.matrices import g_vector
from src.galois_field.conjugacy import minimal_polynomial, trace
from src.galois_field.exceptions import NoSuchSubfieldError

exponents16 = st.integers(min_value=0, max_value=14)


class TestMakeBasis:

    def test_power_basis(self, gf16, power16):
        assert power16.m == 4
        assert power16.exponents() == [0, 1, 2, 3]
        assert decompose(gf16.element(4), power16).tolist() == [1, 1, 0, 0]

    def test_basis_over_gf4(self, gf16):
        basis = power_basis(gf16, 4)
        assert basis.m == 2
        assert basis.a == 2
        assert gf16.exponents(basis.decompose(gf16.element(5))).tolist() == [5, -1]

    def test_dependent_elements(self, gf16):
        with pytest.raises(LinearlyDependentError):
            make_basis(gf16, gf16.elements([0, 1, 2, 4]), 2)

    def test_wrong_count(self, gf16):
        with pytest.raises(WrongCountError):
            make_basis(gf16, gf16.elements([0, 1, 2]), 2)

    def test_parse_basis(self, gf16, composite16):
        assert parse_basis(gf16, '1,a^5,a,a^6', 2) == composite16
        assert composite16.exponents() == [0, 5, 1, 6]

    @pytest.mark.parametrize('fixture', ['power16', 'composite16'])
    def test_change_matrix_is_invertible(self, request, fixture):
        basis = request.getfixturevalue(fixture)
        assert np.linalg.matrix_rank(basis.change_matrix) == 4


class TestDecompose:

    @given(exponent=exponents16)
    def test_reconstruct(self, gf16, power16, composite16, exponent):
        x = gf16.element(exponent)
        for basis in (power16, composite16, power_basis(gf16, 4)):
            assert reconstruct(decompose(x, basis), basis) == x

    @given(exponent=exponents16)
    def test_coordinates_in_base_field(self, gf16, exponent):
        basis = power_basis(gf16, 4)
        coordinates = basis.decompose(gf16.element(exponent))
        assert np.array_equal(coordinates ** 4, coordinates)

    def test_vector_shape(self, gf16, power16):
        word = g_vector(gf16, gf16.alpha)
        assert power16.decompose(word).shape == (15, 4)

    def test_decompose_poly(self, gf16, power16):
        poly = minimal_polynomial(gf16, gf16.alpha, 2)
        assert decompose_poly(poly, power16, 0) == poly


class TestDualAndComposite:

    @pytest.mark.parametrize('fixture', ['power16', 'composite16'])
    def test_dual_basis(self, request, gf16, fixture):
        basis = request.getfixturevalue(fixture)
        dual = dual_basis(basis)
        gram = trace(gf16, basis.elements[:, None] * dual.elements[None, :], 2)
        assert np.array_equal(gram, gf16.gf.Identity(4))

    def test_composite_order(self, gf16):
        basis = composite_basis(gf16, 2, 4, gf16.elements([0, 5]), gf16.elements([0, 1]))
        assert basis.exponents() == [0, 5, 1, 6]

    def test_inner_outside_subfield(self, gf16):
        with pytest.raises(NotSubfieldElementError):
            composite_basis(gf16, 2, 4, gf16.elements([0, 1]), gf16.elements([0, 1]))

    def test_missing_subfield(self, gf16):
        with pytest.raises(NoSuchSubfieldError):
            composite_basis(gf16, 2, 8, gf16.elements([0, 1, 2]), gf16.elements([0]))

    def test_inner_count(self, gf16):
        with pytest.raises(WrongCountError):
            composite_basis(gf16, 2, 4, gf16.elements([0]), gf16.elements([0, 1]))

    def test_complete_to_basis(self, gf16):
        basis, subbasis = complete_to_basis(gf16, gf16.elements([5]), 2)
        assert basis.exponents()[0] == 5
        assert basis.m == 4
        assert subbasis.indices == (0,)

    def test_complete_dependent(self, gf16):
        with pytest.raises(LinearlyDependentError):
            complete_to_basis(gf16, gf16.elements([1, 1]), 2)


class TestSubbasis:

    def test_properties(self, power16):
        subbasis = make_subbasis(power16, [2, 0])
        assert subbasis.indices == (0, 2)
        assert subbasis.excluded == (1, 3)
        assert subbasis.to_text() == '1,3'
        assert subbasis.represents({0})
        assert not subbasis.represents({0, 1})

    def test_empty(self, power16):
        with pytest.raises(EmptySubbasisError):
            make_subbasis(power16, [])

    def test_out_of_range(self, power16):
        with pytest.raises(SubbasisIndexError):
            make_subbasis(power16, [0, 4])

    def test_support(self, gf16, power16, composite16):
        # a^5 = a^2 + a
        assert support_indices(gf16.element(5), power16) == frozenset({1, 2})
        assert support_indices(gf16.element(5), composite16) == frozenset({1})
        assert support_indices(gf16.subfield_elements(4), composite16) == frozenset({0, 1})


class TestStructureConstants:

    @given(exponent=exponents16)
    def test_f_coeff(self, gf16, composite16, exponent):
        constants = structure_constants(composite16)
        gamma = gf16.element(exponent)
        mu = composite16.decompose(gamma)
        for i in range(4):
            expected = composite16.decompose(composite16.elements[i] * gamma)
            assert [f_coeff(i, l, mu, constants) for l in range(4)] == list(expected)

    @pytest.mark.parametrize('exponent', [1, 3, 5])
    def test_coefficient_matrix(self, gf16, power16, exponent):
        constants = structure_constants(power16)
        gamma = gf16.element(exponent)
        words = power16.elements[:, None] * g_vector(gf16, gamma)[None, :]
        for j in range(4):
            assert np.array_equal(coefficient_matrix(constants, gamma, j), power16.decompose(words)[..., j])

    def test_frobenius_matrix(self, power16):
        constants = structure_constants(power16, [1])
        assert np.array_equal(constants.frobenius_matrix(1), power16.decompose(power16.elements ** 2))
        assert np.array_equal(constants.frobenius_matrix(2), power16.decompose(power16.elements ** 4))
