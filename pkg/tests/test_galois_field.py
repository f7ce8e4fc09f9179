import galois
import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.galois_field.arithmetic import ArithOp, arith
from src.galois_field.conjugacy import (
    conjugacy_class,
    conjugacy_classes,
    conjugate_offset,
    exponent_class,
    frobenius,
    is_subfield_element,
    minimal_dimension,
    minimal_polynomial,
    subfield_lattice,
    trace,
)
from src.galois_field.exceptions import (
    DivideByZeroError,
    ElementFormatError,
    FieldMismatchError,
    InvalidFieldError,
    NoSuchSubfieldError,
    NotIrreducibleError,
    NotPrimitiveError,
    TooLargeError,
    ZeroElementError,
)
from src.galois_field.field import build_field
from src.galois_field.linalg import check_enumeration, left_null_space, matrix_rank, min_nonzero_weight
from src.galois_field.notation import format_element, format_poly, parse_element, parse_elements, parse_poly
from src.galois_field.poly import PolyOp, poly_ops, x_pow_minus_one

exponents16 = st.integers(min_value=0, max_value=14)


class TestBuildField:

    def test_default_polynomial(self, gf16):
        assert format_poly(gf16.defining_poly) == 'x^4+x+1'
        assert gf16.order == 16
        assert gf16.size == 15

    def test_element_codes_follow_power_basis(self, gf16):
        assert int(gf16.alpha) == 2
        # a^4 = a + 1
        assert int(gf16.element(4)) == 3
        assert gf16.digits(gf16.element(4)).tolist() == [1, 1, 0, 0]

    def test_custom_polynomial(self):
        field = build_field(2, 4, 'x^4+x^3+1')
        assert int(field.element(4)) == 0b1001

    def test_odd_characteristic(self, gf9):
        assert gf9.size == 8
        assert {int(gf9.element(k)) for k in range(8)} == set(range(1, 9))

    @pytest.mark.parametrize('p, n', [(4, 2), (2, 0), (1, 3)])
    def test_invalid_parameters(self, p, n):
        with pytest.raises(InvalidFieldError):
            build_field(p, n)

    def test_degree_mismatch(self):
        with pytest.raises(InvalidFieldError):
            build_field(2, 4, 'x^3+x+1')

    def test_reducible_polynomial(self):
        with pytest.raises(NotIrreducibleError):
            build_field(2, 4, 'x^4+x^2+1')

    def test_not_primitive_polynomial(self):
        with pytest.raises(NotPrimitiveError):
            build_field(2, 4, 'x^4+x^3+x^2+x+1')

    def test_table_cap(self):
        with pytest.raises(TooLargeError) as error:
            build_field(2, 21)
        assert error.value.exit_code == 4

    def test_cached(self):
        assert build_field(2, 4) is build_field(2, 4, 'x^4+x+1')


class TestElements:

    @given(exponent=st.integers(min_value=-100, max_value=100))
    def test_log_antilog(self, gf16, exponent):
        assert gf16.exponent(gf16.element(exponent)) == exponent % 15

    def test_zero_has_no_logarithm(self, gf16):
        with pytest.raises(ZeroElementError):
            gf16.exponent(gf16.zero)

    def test_foreign_element(self, gf16, gf9):
        with pytest.raises(FieldMismatchError):
            gf16.exponent(gf9.alpha)

    def test_subfield_degree(self, gf16):
        assert gf16.subfield_degree(4) == 2
        assert gf16.extension_degree(4) == 2
        with pytest.raises(NoSuchSubfieldError):
            gf16.subfield_degree(8)

    def test_subfield_elements(self, gf16):
        assert sorted(gf16.exponents(gf16.subfield_elements(4)).tolist()) == [-1, 0, 5, 10]


class TestConjugacy:

    def test_classes_over_gf2(self, gf16):
        assert conjugacy_classes(gf16, 2) == [(0,), (1, 2, 4, 8), (3, 6, 12, 9), (5, 10), (7, 14, 13, 11)]

    def test_classes_over_gf4(self, gf16):
        classes = conjugacy_classes(gf16, 4)
        assert len(classes) == 9
        assert (1, 4) in classes

    @pytest.mark.parametrize('exponent, text', [
        (1, 'x^4+x+1'),
        (3, 'x^4+x^3+x^2+x+1'),
        (5, 'x^2+x+1'),
        (7, 'x^4+x^3+1'),
    ])
    def test_minimal_polynomial(self, gf16, exponent, text):
        assert format_poly(minimal_polynomial(gf16, gf16.element(exponent), 2), gf16) == text

    def test_minimal_polynomial_of_zero(self, gf16):
        assert format_poly(minimal_polynomial(gf16, gf16.zero, 2)) == 'x'

    @given(exponent=exponents16)
    def test_minimal_polynomial_vanishes_on_class(self, gf16, exponent):
        gamma = gf16.element(exponent)
        poly = minimal_polynomial(gf16, gamma, 2)
        assert not np.any(poly(conjugacy_class(gf16, gamma, 2)))
        assert poly.degree == minimal_dimension(gf16, gamma, 2)

    def test_minimal_dimension(self, gf16):
        assert minimal_dimension(gf16, gf16.alpha, 2) == 4
        assert minimal_dimension(gf16, gf16.element(5), 2) == 2
        assert minimal_dimension(gf16, gf16.zero, 2) == 1

    def test_subfield_membership(self, gf16):
        assert is_subfield_element(gf16, gf16.element(5), 4)
        assert not is_subfield_element(gf16, gf16.alpha, 4)

    def test_conjugate_offset(self, gf16):
        assert conjugate_offset(gf16, gf16.alpha, gf16.element(4), 2) == 2
        assert conjugate_offset(gf16, gf16.alpha, gf16.element(3), 2) is None

    @given(exponent=exponents16)
    def test_frobenius_order(self, gf16, exponent):
        x = gf16.element(exponent)
        assert frobenius(gf16, x, 2, 4) == x
        assert frobenius(gf16, x, 4) == x ** 4

    def test_subfield_lattice(self, gf16, gf64):
        assert [item.order for item in subfield_lattice(gf16)] == [2, 4, 16]
        assert [item.order for item in subfield_lattice(gf64)] == [2, 4, 8, 64]

    def test_trace_is_balanced(self, gf16):
        values = trace(gf16, gf16.gf.elements, 2)
        assert set(gf16.codes(values).tolist()) == {0, 1}
        assert int(np.count_nonzero(values)) == 8

    def test_exponent_class_order(self):
        assert exponent_class(21, 2, 31) == (21, 11, 22, 13, 26)


class TestNotation:

    def test_parse_element(self, gf16):
        assert parse_element(gf16, 'a^-1') == gf16.element(14)
        assert parse_element(gf16, 'a') == gf16.alpha
        assert parse_element(gf16, ' 0 ') == gf16.zero

    @given(exponent=exponents16)
    def test_format_then_parse(self, gf16, exponent):
        x = gf16.element(exponent)
        assert parse_element(gf16, format_element(gf16, x)) == x

    @pytest.mark.parametrize('text', ['b^2', 'a^', '2a', ''])
    def test_bad_element(self, gf16, text):
        with pytest.raises(ElementFormatError):
            parse_element(gf16, text)

    def test_parse_elements(self, gf16):
        values = parse_elements(gf16, '1,a^5,a,a^6')
        assert gf16.exponents(values).tolist() == [0, 5, 1, 6]

    def test_parse_poly_over_extension(self, gf16):
        poly = parse_poly(gf16, 'a^5*x^2+x+1')
        assert poly.degree == 2
        assert format_poly(poly, gf16) == 'a^5*x^2+x+1'


class TestArithmetic:

    def test_add(self, gf16):
        assert arith(gf16.alpha, gf16.element(4), ArithOp.ADD) == gf16.one

    @given(a=exponents16, b=exponents16)
    def test_mul_div(self, gf16, a, b):
        x, y = gf16.element(a), gf16.element(b)
        product = arith(x, y, ArithOp.MUL)
        assert product == gf16.element(a + b)
        assert arith(product, y, ArithOp.DIV) == x

    def test_pow_and_inverse(self, gf16):
        assert arith(gf16.alpha, -1, ArithOp.POW) == gf16.element(14)
        assert arith(gf16.element(3), None, ArithOp.INV) == gf16.element(12)

    @pytest.mark.parametrize('op', [ArithOp.DIV, ArithOp.INV])
    def test_division_by_zero(self, gf16, op):
        with pytest.raises(DivideByZeroError):
            arith(gf16.one if op is ArithOp.DIV else gf16.zero, gf16.zero, op)

    def test_zero_negative_power(self, gf16):
        with pytest.raises(DivideByZeroError):
            arith(gf16.zero, -2, ArithOp.POW)

    def test_mismatched_fields(self, gf16, gf9):
        with pytest.raises(FieldMismatchError):
            arith(gf16.one, gf9.one, ArithOp.ADD)


class TestPolynomials:

    def test_minimal_polynomials_divide_x_n_minus_one(self, gf16):
        target = x_pow_minus_one(gf16.gf, 15)
        for orbit in conjugacy_classes(gf16, 2):
            poly = minimal_polynomial(gf16, gf16.element(orbit[0]), 2)
            assert poly_ops(poly, target, PolyOp.DIVIDES)

    def test_gcd_lcm(self, gf16):
        p1 = minimal_polynomial(gf16, gf16.alpha, 2)
        p3 = minimal_polynomial(gf16, gf16.element(3), 2)
        p5 = minimal_polynomial(gf16, gf16.element(5), 2)
        assert poly_ops(p1 * p3, p1 * p5, PolyOp.GCD) == p1
        assert poly_ops(p1 * p3, p1 * p5, PolyOp.LCM) == p1 * p3 * p5

    def test_divmod_and_eval(self, gf16):
        p1 = minimal_polynomial(gf16, gf16.alpha, 2)
        quotient, remainder = poly_ops(x_pow_minus_one(gf16.gf, 15), p1, PolyOp.DIVMOD)
        assert quotient.degree == 11
        assert remainder == galois.Poly.Zero(field=gf16.gf)
        assert poly_ops(p1, gf16.alpha, PolyOp.EVAL) == gf16.zero

    def test_divide_by_zero_poly(self, gf16):
        with pytest.raises(DivideByZeroError):
            poly_ops(galois.Poly.One(field=gf16.gf), galois.Poly.Zero(field=gf16.gf), PolyOp.DIVMOD)


class TestLinearAlgebra:

    def test_rank_and_null_space(self):
        gf2 = galois.GF(2)
        matrix = gf2([[1, 0, 1], [0, 1, 1], [1, 1, 0]])
        assert matrix_rank(matrix) == 2
        kernel = left_null_space(matrix)
        assert kernel.shape == (1, 3)
        assert not np.any(kernel @ matrix)

    def test_enumeration_cap(self):
        assert check_enumeration(2, 10, 'test', cap=1024) == 1024
        with pytest.raises(TooLargeError):
            check_enumeration(2, 11, 'test', cap=1024)

    def test_simplex_code_weight(self, gf16):
        # строки x^j (x^15 - 1)/p(x) порождают симплексный код
        simplex = np.array([1, 1, 1, 1, 0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 0])
        shifts = gf16.gf(np.stack([np.roll(simplex, shift) for shift in range(4)]))
        assert min_nonzero_weight(gf16, shifts, 2) == 8
