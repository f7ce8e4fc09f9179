"""Текстовая запись элементов и многочленов.

Элемент записывается как ``0``, ``1`` или ``a^k`` (степень примитивного
элемента), многочлен как сумма мономов ``a^5*x^2+x+1`` по убыванию степени.
"""
import re
from typing import TYPE_CHECKING, Callable

import galois
import numpy as np

from .exceptions import ElementFormatError

if TYPE_CHECKING:
    from .field import Field

_ELEMENT = re.compile(r'a(?:\^(-?\d+))?')
_MONOMIAL = re.compile(r'(?P<coef>.*?)\*?x(?:\^(?P<deg>\d+))?')


def format_element(field: 'Field', x: galois.FieldArray | int) -> str:
    """Записывает элемент поля в нотации ``0`` / ``1`` / ``a^k``"""
    code = int(x)
    if code == 0:
        return '0'
    exponent = int(field.log_table[code])
    return '1' if exponent == 0 else f'a^{exponent}'


def parse_element(field: 'Field', text: str) -> galois.FieldArray:
    """Разбирает запись элемента: ``0``, ``1``, ``a``, ``a^k`` (k может быть отрицательным).

    Args:
        field: Поле, которому принадлежит элемент
        text: Текстовая запись

    Returns:
        Элемент поля

    Raises:
        ElementFormatError: Если запись не распознана
    """
    token = text.strip().replace(' ', '')
    if token == '0':
        return field.zero
    if token == '1':
        return field.one
    match = _ELEMENT.fullmatch(token)
    if match is None:
        raise ElementFormatError(f'Неверная запись элемента: {text!r}')
    exponent = int(match.group(1)) if match.group(1) is not None else 1
    return field.element(exponent)


def format_elements(field: 'Field', values: galois.FieldArray) -> str:
    return ','.join(format_element(field, value) for value in np.ravel(values))


def parse_elements(field: 'Field', text: str) -> galois.FieldArray:
    """Разбирает список элементов через запятую, например ``"1,a^5,a^1,a^6"``"""
    tokens = [token for token in text.split(',') if token.strip()]
    if not tokens:
        raise ElementFormatError(f'Пустой список элементов: {text!r}')
    codes = [int(parse_element(field, token)) for token in tokens]
    return field.gf(np.array(codes, dtype=np.int64))


def format_poly(poly: galois.Poly, field: 'Field | None' = None) -> str:
    """Записывает многочлен мономами по убыванию степени, например ``x^4+x+1``.

    Коэффициенты над расширением записываются в нотации ``a^k``,
    над простым полем целыми числами.
    """
    use_elements = field is not None and poly.field is field.gf and field.n > 1
    terms = []
    for index, coefficient in enumerate(poly.coeffs):
        code = int(coefficient)
        if code == 0:
            continue
        degree = poly.degree - index
        coefficient_text = format_element(field, code) if use_elements else str(code)
        if degree == 0:
            terms.append(coefficient_text)
            continue
        monomial = 'x' if degree == 1 else f'x^{degree}'
        terms.append(monomial if coefficient_text == '1' else f'{coefficient_text}*{monomial}')
    return '+'.join(terms) if terms else '0'


def _parse_terms(
        text: str,
        gf: type[galois.FieldArray],
        parse_coefficient: Callable[[str], galois.FieldArray],
) -> galois.Poly:
    cleaned = text.replace(' ', '')
    if not cleaned:
        raise ElementFormatError('Пустая запись многочлена')
    terms: dict[int, galois.FieldArray] = {}
    for raw in cleaned.split('+'):
        if not raw:
            raise ElementFormatError(f'Неверная запись многочлена: {text!r}')
        match = _MONOMIAL.fullmatch(raw)
        if match is not None:
            degree = int(match.group('deg') or 1)
            coefficient = parse_coefficient(match.group('coef') or '1')
        else:
            degree = 0
            coefficient = parse_coefficient(raw)
        terms[degree] = terms[degree] + coefficient if degree in terms else coefficient

    coeffs = gf.Zeros(max(terms) + 1)
    for degree, coefficient in terms.items():
        coeffs[degree] = coefficient
    return galois.Poly(coeffs, order='asc')


def parse_poly(field: 'Field', text: str) -> galois.Poly:
    """Разбирает многочлен с коэффициентами из поля ``field``"""
    return _parse_terms(text, field.gf, lambda token: parse_element(field, token))


def parse_prime_poly(text: str, prime_gf: type[galois.FieldArray]) -> galois.Poly:
    """Разбирает многочлен над простым полем с целыми коэффициентами (``x^4+x+1``, ``2x^2+1``)"""
    p = prime_gf.characteristic

    def parse_coefficient(token: str) -> galois.FieldArray:
        try:
            return prime_gf(int(token) % p)
        except ValueError:
            raise ElementFormatError(f'Неверный коэффициент {token!r} в записи {text!r}')

    return _parse_terms(text, prime_gf, parse_coefficient)
