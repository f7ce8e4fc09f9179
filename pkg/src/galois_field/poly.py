from enum import Enum

import galois
import numpy as np

from .exceptions import DivideByZeroError, FieldMismatchError


class PolyOp(str, Enum):
    MUL = 'mul'
    DIVMOD = 'divmod'
    GCD = 'gcd'
    LCM = 'lcm'
    EVAL = 'eval'
    DIVIDES = 'divides'


def is_zero_poly(poly: galois.Poly) -> bool:
    return poly.degree == 0 and int(poly.coeffs[0]) == 0


def poly_ops(
        a: galois.Poly,
        b: galois.Poly | galois.FieldArray,
        op: PolyOp,
) -> galois.Poly | tuple[galois.Poly, galois.Poly] | galois.FieldArray | bool:
    """Операции над многочленами с коэффициентами из одного поля.

    ``EVAL`` вычисляет a(b) для элемента b; ``DIVIDES`` проверяет, что a делит b.

    Raises:
        DivideByZeroError: Деление на нулевой многочлен
        FieldMismatchError: Коэффициенты из разных полей
    """
    if op is PolyOp.EVAL:
        if type(b) is not a.field:
            raise FieldMismatchError('Точка вычисления не принадлежит полю коэффициентов')
        return a(b)

    if a.field is not b.field:
        raise FieldMismatchError('Многочлены над разными полями')

    match op:
        case PolyOp.MUL:
            return a * b
        case PolyOp.DIVMOD:
            if is_zero_poly(b):
                raise DivideByZeroError('Деление на нулевой многочлен')
            return divmod(a, b)
        case PolyOp.GCD:
            return galois.gcd(a, b)
        case PolyOp.LCM:
            return galois.lcm(a, b)
        case PolyOp.DIVIDES:
            if is_zero_poly(a):
                raise DivideByZeroError('Нулевой многочлен не является делителем')
            return is_zero_poly(b % a)


def x_pow_minus_one(gf: type[galois.FieldArray], length: int) -> galois.Poly:
    """Многочлен x^N - 1"""
    return galois.Poly.Degrees([length], field=gf) - galois.Poly.One(field=gf)


def poly_from_roots(roots: galois.FieldArray) -> galois.Poly:
    """Унитарный многочлен prod (x - r) по корням (1 для пустого набора)"""
    if roots.size == 0:
        return galois.Poly.One(field=type(roots))
    return galois.Poly.Roots(roots)


def ascending_coefficients(poly: galois.Poly, length: int | None = None) -> galois.FieldArray:
    """Коэффициенты от младшей степени к старшей, дополненные нулями до ``length``"""
    coeffs = poly.coeffs[::-1]
    if length is None or length <= coeffs.size:
        return coeffs.copy()
    result = poly.field.Zeros(length)
    result[:coeffs.size] = coeffs
    return result


def poly_from_ascending(values: galois.FieldArray) -> galois.Poly:
    return galois.Poly(values, order='asc')


def scale_poly(poly: galois.Poly, scalar: galois.FieldArray) -> galois.Poly:
    """Умножение многочлена на скаляр поля коэффициентов"""
    return poly * galois.Poly(np.atleast_1d(scalar), field=poly.field)
