from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import galois
import numpy as np

from ..galois_field.field import Field, FieldElement
from ..galois_field.notation import format_elements
from ..galois_field.poly import ascending_coefficients, poly_from_ascending
from .code import CyclicCodeSpec
from .exceptions import LengthMismatchError


class MatrixRole(str, Enum):
    GENERATOR = 'generator'
    PARITY = 'parity'


@dataclass(frozen=True, eq=False)
class SymbolMatrix:
    """Матрица над GF(q^m) с указанием роли.

    Attributes:
        entries: Элементы матрицы
        role: Порождающая или проверочная
        spec: Код, которому принадлежит матрица
    """
    entries: galois.FieldArray
    role: MatrixRole
    spec: CyclicCodeSpec

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def rows_text(self) -> list[str]:
        return [format_elements(self.spec.field, row) for row in self.entries]

    def to_text(self) -> str:
        return '\n'.join(self.rows_text()) + '\n'


def power_rows(field: Field, exponents: Iterable[int]) -> galois.FieldArray:
    """Матрица Вандермонда: строка r равна (1, b_r, b_r^2, ..., b_r^(N-1)), b_r = a^(e_r)"""
    exponents = np.asarray(list(exponents), dtype=np.int64)
    positions = np.arange(field.size, dtype=np.int64)
    return field.gf(field.antilog_table[(exponents[:, None] * positions[None, :]) % field.size])


def parity_check_matrix(spec: CyclicCodeSpec) -> SymbolMatrix:
    """H[r, t] = (a^(e_r))^t по корням кода"""
    return SymbolMatrix(entries=power_rows(spec.field, spec.roots), role=MatrixRole.PARITY, spec=spec)


def generator_matrix(spec: CyclicCodeSpec) -> SymbolMatrix:
    """Строки g(gamma) для всех gamma из gamma_set (порядок gamma_set)"""
    return SymbolMatrix(entries=power_rows(spec.field, spec.gamma_set), role=MatrixRole.GENERATOR, spec=spec)


def g_vector(field: Field, gamma: FieldElement) -> galois.FieldArray:
    """g(gamma) = (1, gamma, gamma^2, ..., gamma^(N-1)).

    Raises:
        ZeroElementError: Для gamma = 0
    """
    return power_rows(field, [field.exponent(gamma)])[0]


def g_poly(field: Field, gamma: FieldElement) -> galois.Poly:
    """Многочлен sum_t gamma^t x^t слова g(gamma)"""
    return poly_from_ascending(g_vector(field, gamma))


def encode(spec: CyclicCodeSpec, message: galois.FieldArray) -> galois.FieldArray:
    """Кодирует сообщение длины K порождающей матрицей g(gamma)-строк.

    Raises:
        LengthMismatchError: Длина сообщения не равна K
    """
    message = spec.field.as_array(message).ravel()
    if message.size != spec.K:
        raise LengthMismatchError(f'Сообщение длины {message.size}, ожидалось K={spec.K}')
    return message @ generator_matrix(spec).entries


def is_codeword(spec: CyclicCodeSpec, word: galois.FieldArray) -> bool:
    """Проверяет H c^T = 0.

    Raises:
        LengthMismatchError: Длина слова не равна N
    """
    word = spec.field.as_array(word).ravel()
    if word.size != spec.N:
        raise LengthMismatchError(f'Слово длины {word.size}, ожидалось N={spec.N}')
    return not np.any(parity_check_matrix(spec).entries @ word)


def subfield_code_generator(generator: galois.Poly, dimension: int, length: int) -> galois.FieldArray:
    """Порождающая матрица K x N со строками x^j G(x), j = 0..K-1.

    Для G(x) с коэффициентами из GF(q) строки порождают код над GF(q);
    сообщение u кодируется как u(x) G(x).
    """
    coeffs = ascending_coefficients(generator)
    rows = generator.field.Zeros((dimension, length))
    for j in range(dimension):
        rows[j, j:j + coeffs.size] = coeffs
    return rows
