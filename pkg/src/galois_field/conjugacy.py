import galois
import numpy as np
from loguru import logger

from .field import Field, FieldElement
from .poly import poly_from_roots
from .schemes import SubfieldDescriptor


def exponent_class(exponent: int, q: int, length: int) -> tuple[int, ...]:
    """Циклотомический класс показателя: (e, eq, eq^2, ...) по модулю N в порядке Фробениуса"""
    exponent %= length
    orbit = [exponent]
    current = exponent * q % length
    while current != exponent:
        orbit.append(current)
        current = current * q % length
    return tuple(orbit)


def frobenius(field: Field, values: galois.FieldArray, q: int, s: int = 1) -> galois.FieldArray:
    """Отображение Фробениуса x -> x^(q^s)"""
    field.subfield_degree(q)
    return field.check(values) ** (q ** s)


def is_subfield_element(field: Field, gamma: FieldElement, q: int) -> bool:
    """Проверяет принадлежность элемента подполю GF(q): gamma^q = gamma.

    Raises:
        NoSuchSubfieldError: Если GF(q) не является подполем
    """
    field.subfield_degree(q)
    gamma = field.check(gamma)
    return bool(gamma ** q == gamma)


def minimal_dimension(field: Field, gamma: FieldElement, q: int) -> int:
    """Минимальная размерность m_gamma: наименьшее s >= 1 с gamma^(q^s) = gamma"""
    field.subfield_degree(q)
    if int(field.check(gamma)) == 0:
        return 1
    return len(exponent_class(field.exponent(gamma), q, field.size))


def conjugacy_class(field: Field, gamma: FieldElement, q: int) -> galois.FieldArray:
    """Класс сопряженных элементов (gamma, gamma^q, ..., gamma^(q^(m_gamma - 1)))"""
    field.subfield_degree(q)
    if int(field.check(gamma)) == 0:
        return field.gf([0])
    return field.elements(exponent_class(field.exponent(gamma), q, field.size))


def conjugate_offset(field: Field, gamma: FieldElement, other: FieldElement, q: int) -> int | None:
    """Показатель s, для которого other = gamma^(q^s), или None, если элементы не сопряжены"""
    orbit = exponent_class(field.exponent(gamma), q, field.size)
    target = field.exponent(other)
    return orbit.index(target) if target in orbit else None


def minimal_polynomial(field: Field, gamma: FieldElement, q: int) -> galois.Poly:
    """Минимальный многочлен p_gamma(x) = prod (x - gamma^(q^s)) над GF(q).

    Коэффициенты хранятся как элементы объемлющего поля, все они лежат в GF(q).
    """
    if int(field.check(gamma)) == 0:
        return galois.Poly([1, 0], field=field.gf)
    return poly_from_roots(conjugacy_class(field, gamma, q))


def conjugacy_classes(field: Field, q: int) -> list[tuple[int, ...]]:
    """Все классы сопряженных элементов GF*(q^m), по возрастанию наименьшего показателя.

    Каждый класс начинается с наименьшего показателя и продолжается в порядке Фробениуса.
    """
    field.subfield_degree(q)
    seen = np.zeros(field.size, dtype=bool)
    classes = []
    for exponent in range(field.size):
        if seen[exponent]:
            continue
        orbit = exponent_class(exponent, q, field.size)
        seen[list(orbit)] = True
        classes.append(orbit)
    logger.debug(f'{field}: {len(classes)} классов сопряженных над GF({q})')
    return classes


def subfield_lattice(field: Field) -> list[SubfieldDescriptor]:
    """Подполя GF(p^s), s | n, по возрастанию s"""
    return [
        SubfieldDescriptor(
            s=s,
            order=field.p ** s,
            exponent_step=field.size // (field.p ** s - 1),
        )
        for s in range(1, field.n + 1)
        if field.n % s == 0
    ]


def trace(field: Field, values: galois.FieldArray, q: int) -> galois.FieldArray:
    """След из GF(q^m) в GF(q): Tr(x) = sum_{s<m} x^(q^s)"""
    m = field.extension_degree(q)
    values = field.check(values)
    result = values.copy()
    power = values
    for _ in range(1, m):
        power = power ** q
        result = result + power
    return result
