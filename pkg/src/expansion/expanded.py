from dataclasses import dataclass
from enum import Enum

import galois
import numpy as np
from loguru import logger

from ..basis.basis import Basis
from ..cyclic.code import CyclicCodeSpec
from ..cyclic.matrices import MatrixRole, generator_matrix, parity_check_matrix
from ..galois_field.linalg import subfield_rank
from ..galois_field.notation import format_elements
from ..utils import digits_string
from .exceptions import BasisMismatchError


class ExpansionForm(str, Enum):
    SYMBOL = 'symbol'
    FULL = 'full'


@dataclass(frozen=True, eq=False)
class ExpandedMatrix:
    """Матрица разложенного кода.

    В форме SYMBOL строки генератора - символьные векторы beta_j g(gamma_i) (mK x N),
    строки проверочной матрицы - h_r beta_j по столбцам (t, j) (R x mN).
    В форме FULL все элементы лежат в GF(q): mK x mN и mR x mN.
    Позиции упорядочены по символам: символ t занимает позиции tm..tm+m-1.

    Attributes:
        entries: Элементы матрицы
        role: Порождающая или проверочная
        form: Символьная или полностью разложенная
        spec: Исходный код
        basis: Базис разложения
    """
    entries: galois.FieldArray
    role: MatrixRole
    form: ExpansionForm
    spec: CyclicCodeSpec
    basis: Basis

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def rank(self) -> int:
        """Ранг над GF(q) (только для формы FULL)"""
        return subfield_rank(self.spec.field, self.entries, self.spec.q)

    def rows_text(self) -> list[str]:
        """Строки цифрами для q = p и в нотации a^k иначе"""
        field = self.spec.field
        if self.form is ExpansionForm.FULL and self.spec.q == field.p:
            codes = field.codes(self.entries)
            return [digits_string(row, field.p) for row in codes]
        return [format_elements(field, row) for row in self.entries]

    def to_text(self) -> str:
        return '\n'.join(self.rows_text()) + '\n'


def _check_basis(spec: CyclicCodeSpec, basis: Basis) -> None:
    if basis.field is not spec.field or basis.q != spec.q:
        raise BasisMismatchError(f'Базис над GF({basis.q}) в {basis.field} не подходит для {spec}')


def expand_generator(spec: CyclicCodeSpec, basis: Basis, form: ExpansionForm = ExpansionForm.FULL) -> ExpandedMatrix:
    """Порождающая матрица разложенного кода.

    Строка i*m + j - разложение beta_j g(gamma_i).

    Raises:
        BasisMismatchError: Базис построен для другого поля или подполя
    """
    _check_basis(spec, basis)
    generator = generator_matrix(spec).entries
    m, k, length = basis.m, spec.K, spec.N
    symbol = (generator[:, None, :] * basis.elements[None, :, None]).reshape(k * m, length)
    if form is ExpansionForm.SYMBOL:
        entries = symbol
    else:
        entries = basis.decompose(symbol).reshape(k * m, length * m)
    logger.debug(f'G_e {spec} в форме {form.value}: {entries.shape}')
    return ExpandedMatrix(entries=entries, role=MatrixRole.GENERATOR, form=form, spec=spec, basis=basis)


def expand_parity(spec: CyclicCodeSpec, basis: Basis, form: ExpansionForm = ExpansionForm.FULL) -> ExpandedMatrix:
    """Проверочная матрица разложенного кода.

    Столбец (t, j) символьной формы равен h_(r,t) beta_j; строка r*m + l
    полной формы - mu_l от символьной строки r.

    Raises:
        BasisMismatchError: Базис построен для другого поля или подполя
    """
    _check_basis(spec, basis)
    parity = parity_check_matrix(spec).entries
    m, r, length = basis.m, spec.R, spec.N
    symbol = (parity[:, :, None] * basis.elements[None, None, :]).reshape(r, length * m)
    if form is ExpansionForm.SYMBOL:
        entries = symbol
    else:
        coordinates = basis.decompose(symbol)
        entries = np.transpose(coordinates, (0, 2, 1)).reshape(r * m, length * m)
    logger.debug(f'H_e {spec} в форме {form.value}: {entries.shape}')
    return ExpandedMatrix(entries=entries, role=MatrixRole.PARITY, form=form, spec=spec, basis=basis)


def expand_word(word: galois.FieldArray, basis: Basis) -> galois.FieldArray:
    """Разложение символьных слов: (..., N) -> (..., N*m) по символам"""
    coordinates = basis.decompose(word)
    return coordinates.reshape(*word.shape[:-1], word.shape[-1] * basis.m)


def collapse_word(expanded: galois.FieldArray, basis: Basis) -> galois.FieldArray:
    """Обратное к expand_word: (..., N*m) -> (..., N)"""
    basis.field.check(expanded)
    coordinates = expanded.reshape(*expanded.shape[:-1], expanded.shape[-1] // basis.m, basis.m)
    return basis.reconstruct(coordinates)


def parity_density(matrix: ExpandedMatrix) -> float:
    """Доля ненулевых элементов полностью разложенной матрицы"""
    entries = matrix.entries
    if entries.size == 0:
        return 0.0
    return float(np.count_nonzero(entries)) / entries.size
