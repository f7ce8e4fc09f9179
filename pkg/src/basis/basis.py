from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import galois
import numpy as np
from loguru import logger

from ..galois_field.conjugacy import trace
from ..galois_field.field import Field, FieldElement
from ..galois_field.linalg import matrix_rank
from ..galois_field.notation import format_elements, format_element, parse_elements
from ..galois_field.exceptions import NoSuchSubfieldError
from .exceptions import (
    LinearlyDependentError,
    WrongCountError,
    NotSubfieldElementError,
    EmptySubbasisError,
    SubbasisIndexError,
)
from .schemes import BasisDescriptor


@dataclass(frozen=True, eq=False)
class Basis:
    """Базис {beta_0, ..., beta_(m-1)} поля GF(q^m) над GF(q).

    Разложение gamma = sum mu_i(gamma) beta_i вычисляется через обратную
    матрицу координат над GF(p): столбцы матрицы - координаты произведений
    beta_i * omega_j, где {omega_j} - базис GF(q) над GF(p).

    Attributes:
        field: Объемлющее поле GF(p^n) = GF(q^m)
        q: Порядок базового подполя
        elements: Элементы базиса
        omega: Базис GF(q) над GF(p): степени образующей подполя
        coordinate_inverse: Обратная матрица координат над GF(p), n x n
    """
    field: Field
    q: int
    elements: galois.FieldArray
    omega: galois.FieldArray
    coordinate_inverse: np.ndarray

    @property
    def m(self) -> int:
        return self.elements.size

    @property
    def a(self) -> int:
        """Степень GF(q) над GF(p)"""
        return self.omega.size

    def __len__(self) -> int:
        return self.m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Basis):
            return NotImplemented
        return (
            self.field is other.field
            and self.q == other.q
            and np.array_equal(self.field.codes(self.elements), other.field.codes(other.elements))
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.q, tuple(self.field.codes(self.elements).tolist())))

    def __repr__(self) -> str:
        return f'Basis({self.to_text()} над GF({self.q}))'

    def decompose(self, values: galois.FieldArray) -> galois.FieldArray:
        """Координаты mu(gamma) над GF(q) для всех элементов массива.

        Args:
            values: Элементы поля произвольной формы S

        Returns:
            Массив формы ``S + (m,)`` с элементами из GF(q)
        """
        values = self.field.as_array(values)
        digits = self.field.digits(values)
        coords = (digits @ self.coordinate_inverse.T) % self.field.p
        coords = coords.reshape(*values.shape, self.m, self.a)
        result = self.field.gf(coords[..., 0]) * self.omega[0]
        for j in range(1, self.a):
            result = result + self.field.gf(coords[..., j]) * self.omega[j]
        return result

    def reconstruct(self, coordinates: galois.FieldArray) -> galois.FieldArray:
        """Обратное отображение: sum_i coordinates[..., i] * beta_i"""
        coordinates = self.field.check(coordinates)
        result = coordinates[..., 0] * self.elements[0]
        for i in range(1, self.m):
            result = result + coordinates[..., i] * self.elements[i]
        return result

    @cached_property
    def change_matrix(self) -> galois.FieldArray:
        """Матрица перехода m x m: строка r - координаты a^r в этом базисе"""
        return self.decompose(self.field.elements(range(self.m)))

    def exponents(self) -> list[int]:
        return [int(exponent) for exponent in self.field.exponents(self.elements)]

    def to_text(self) -> str:
        return format_elements(self.field, self.elements)

    def descriptor(self) -> BasisDescriptor:
        return BasisDescriptor(
            q=self.q,
            elements=[format_element(self.field, element) for element in self.elements],
        )


@dataclass(frozen=True)
class Subbasis:
    """Подбазис - множество индексов родительского базиса.

    Attributes:
        parent: Родительский базис
        included: Индексы (с нуля) элементов подбазиса
    """
    parent: Basis
    included: frozenset[int]

    def __post_init__(self):
        if not self.included:
            raise EmptySubbasisError()
        if any(index < 0 or index >= self.parent.m for index in self.included):
            raise SubbasisIndexError(f'Индексы {sorted(self.included)} вне диапазона 0..{self.parent.m - 1}')

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.included))

    @property
    def excluded(self) -> tuple[int, ...]:
        return tuple(index for index in range(self.parent.m) if index not in self.included)

    @property
    def size(self) -> int:
        return len(self.included)

    @property
    def elements(self) -> galois.FieldArray:
        return self.parent.elements[list(self.indices)]

    def represents(self, support: Iterable[int]) -> bool:
        """Вектор с данным носителем представим подбазисом"""
        return set(support) <= self.included

    def to_text(self) -> str:
        return ','.join(str(index + 1) for index in self.indices)


def make_subbasis(basis: Basis, indices: Iterable[int]) -> Subbasis:
    return Subbasis(parent=basis, included=frozenset(int(index) for index in indices))


def _coordinate_matrix(field: Field, elements: galois.FieldArray, omega: galois.FieldArray) -> np.ndarray:
    products = (elements[:, None] * omega[None, :]).ravel()
    return field.digits(products).T


def make_basis(field: Field, elements: Iterable[FieldElement] | galois.FieldArray, q: int) -> Basis:
    """Проверяет элементы и строит базис GF(q^m) над GF(q).

    Args:
        field: Объемлющее поле
        elements: m элементов поля
        q: Порядок базового подполя

    Returns:
        Базис с предвычисленным отображением разложения

    Raises:
        NoSuchSubfieldError: GF(q) не является подполем
        WrongCountError: Число элементов не равно m
        LinearlyDependentError: Элементы зависимы над GF(q)
    """
    a = field.subfield_degree(q)
    m = field.n // a
    elements = field.as_array(elements).ravel()
    if elements.size != m:
        raise WrongCountError(f'Базис {field} над GF({q}) содержит {m} элементов, передано {elements.size}')

    omega = field.elements(np.arange(a) * (field.size // (q - 1)))
    coordinates = field.prime_gf(_coordinate_matrix(field, elements, omega))
    if matrix_rank(coordinates) < field.n:
        raise LinearlyDependentError(
            f'Элементы {format_elements(field, elements)} линейно зависимы над GF({q})'
        )
    inverse = np.asarray(np.linalg.inv(coordinates).view(np.ndarray), dtype=np.int64)

    logger.debug(f'Построен базис {format_elements(field, elements)} над GF({q})')
    return Basis(
        field=field,
        q=q,
        elements=elements,
        omega=omega,
        coordinate_inverse=inverse,
    )


def parse_basis(field: Field, text: str, q: int) -> Basis:
    """Разбирает базис из строки ``"1,a^5,a^1,a^6"``"""
    return make_basis(field, parse_elements(field, text), q)


def power_basis(field: Field, q: int) -> Basis:
    """Степенной базис {1, a, ..., a^(m-1)} над GF(q)"""
    return make_basis(field, field.elements(range(field.extension_degree(q))), q)


def decompose(gamma: FieldElement, basis: Basis) -> galois.FieldArray:
    return basis.decompose(gamma)


def decompose_vector(y: galois.FieldArray, basis: Basis, i: int) -> galois.FieldArray:
    """Покомпонентное применение mu_i к вектору"""
    return basis.decompose(y)[..., i]


def decompose_poly(poly: galois.Poly, basis: Basis, i: int) -> galois.Poly:
    """Применяет mu_i к коэффициентам многочлена"""
    return galois.Poly(decompose_vector(poly.coeffs, basis, i))


def reconstruct(coordinates: galois.FieldArray, basis: Basis) -> galois.FieldArray:
    return basis.reconstruct(coordinates)


def trace_gram(basis: Basis) -> galois.FieldArray:
    """Матрица следов Tr(beta_i beta_j) над GF(q)"""
    products = basis.elements[:, None] * basis.elements[None, :]
    return trace(basis.field, products, basis.q)


def dual_basis(basis: Basis) -> Basis:
    """Дуальный базис: Tr(beta_i beta'_j) = delta_ij.

    beta'_j = sum_k T^(-1)[k, j] beta_k, где T - матрица следов.
    """
    gram = trace_gram(basis)
    elements = np.linalg.inv(gram).T @ basis.elements
    return make_basis(basis.field, elements, basis.q)


def composite_basis(
        field: Field,
        q: int,
        sub_order: int,
        inner: Iterable[FieldElement] | galois.FieldArray,
        outer: Iterable[FieldElement] | galois.FieldArray,
) -> Basis:
    """Составной базис {outer_j * inner_i} в порядке outer-major.

    Args:
        field: Объемлющее поле GF(q^m)
        q: Порядок базового подполя
        sub_order: Порядок промежуточного подполя q^s, s | m
        inner: Базис GF(q^s) над GF(q)
        outer: Базис GF(q^m) над GF(q^s)

    Returns:
        Базис GF(q^m) над GF(q)

    Raises:
        NoSuchSubfieldError: GF(q^s) не содержит GF(q)
        NotSubfieldElementError: Элемент inner не лежит в GF(q^s)
        WrongCountError: Неверное число элементов inner или outer
        LinearlyDependentError: Результат не является базисом
    """
    a = field.subfield_degree(q)
    a_sub = field.subfield_degree(sub_order)
    if a_sub % a:
        raise NoSuchSubfieldError(f'GF({sub_order}) не содержит GF({q})')
    s = a_sub // a
    m = field.n // a

    inner = field.as_array(inner).ravel()
    outer = field.as_array(outer).ravel()
    if inner.size != s:
        raise WrongCountError(f'Внутренний базис GF({sub_order}) над GF({q}) содержит {s} элементов')
    if outer.size != m // s:
        raise WrongCountError(f'Внешний базис над GF({sub_order}) содержит {m // s} элементов')
    if np.any(inner ** sub_order != inner):
        raise NotSubfieldElementError(
            f'Элементы {format_elements(field, inner)} не лежат в GF({sub_order})'
        )

    elements = (outer[:, None] * inner[None, :]).ravel()
    return make_basis(field, elements, q)


def complete_to_basis(
        field: Field,
        elements: Iterable[FieldElement] | galois.FieldArray,
        q: int,
) -> tuple[Basis, Subbasis]:
    """Дополняет независимый набор до базиса элементами 1, a, a^2, ...

    Returns:
        Базис, в котором исходные элементы стоят первыми, и подбазис из них

    Raises:
        EmptySubbasisError: Пустой набор
        LinearlyDependentError: Исходные элементы зависимы
    """
    a = field.subfield_degree(q)
    m = field.n // a
    given = field.as_array(elements).ravel()
    if given.size == 0:
        raise EmptySubbasisError()
    omega = field.elements(np.arange(a) * (field.size // (q - 1)))

    def rank_of(codes: list[int]) -> int:
        matrix = _coordinate_matrix(field, field.gf(np.array(codes, dtype=np.int64)), omega)
        return matrix_rank(field.prime_gf(matrix)) // a

    chosen = [int(code) for code in field.codes(given)]
    if rank_of(chosen) < len(chosen):
        raise LinearlyDependentError(f'Элементы {format_elements(field, given)} линейно зависимы')

    for exponent in range(m):
        if len(chosen) == m:
            break
        candidate = int(field.antilog_table[exponent % field.size])
        if rank_of(chosen + [candidate]) == len(chosen) + 1:
            chosen.append(candidate)

    basis = make_basis(field, field.gf(np.array(chosen, dtype=np.int64)), q)
    return basis, make_subbasis(basis, range(given.size))


def support_indices(y: galois.FieldArray | FieldElement, basis: Basis) -> frozenset[int]:
    """Индексы i, для которых mu_i(y) не равна нулю хотя бы в одной позиции"""
    coordinates = basis.decompose(y)
    nonzero = np.any((coordinates != 0).reshape(-1, basis.m), axis=0)
    return frozenset(int(index) for index in np.flatnonzero(nonzero))
