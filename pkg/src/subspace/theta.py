from dataclasses import dataclass
from typing import Iterable, Sequence

import galois
import numpy as np

from ..basis.basis import Basis, make_basis
from ..basis.exceptions import EmptySubbasisError, SubbasisIndexError
from ..cyclic.exceptions import NotDivisorError
from ..galois_field.linalg import matrix_rank
from ..galois_field.poly import is_zero_poly, poly_from_ascending, x_pow_minus_one
from ..galois_field.conjugacy import minimal_polynomial
from .selection import ConjugacySelection


@dataclass(frozen=True, eq=False)
class ThetaMatrix:
    """Матрица Theta: строка a, столбец b - beta_(i_a)^(q^(m_gamma - z_b)).

    Ранг берется над GF(q^(m_gamma)): каждый элемент раскладывается в базисе
    GF(q^m) над GF(q^(m_gamma)), и ранг считается у развернутой матрицы.

    Attributes:
        entries: t x kappa над GF(q^m)
        expanded: t x (kappa * m/m_gamma) над GF(q^(m_gamma))
        selection: Набор сопряженных
        included: Индексы подбазиса
    """
    entries: galois.FieldArray
    expanded: galois.FieldArray
    selection: ConjugacySelection
    included: tuple[int, ...]

    def rank(self) -> int:
        return matrix_rank(self.expanded)


def theta_matrix(selection: ConjugacySelection, basis: Basis, included: Iterable[int]) -> ThetaMatrix:
    """Строит матрицу Theta для подбазиса.

    Raises:
        EmptySubbasisError: Пустой подбазис
        SubbasisIndexError: Индекс вне диапазона
    """
    field = basis.field
    included = tuple(sorted({int(index) for index in included}))
    if not included:
        raise EmptySubbasisError()
    if any(index < 0 or index >= basis.m for index in included):
        raise SubbasisIndexError(f'Индексы {list(included)} вне диапазона 0..{basis.m - 1}')

    q, m_gamma = basis.q, selection.m_gamma
    beta = basis.elements[list(included)]
    entries = field.gf.Zeros((len(included), selection.kappa))
    for column, z in enumerate(selection.z_set):
        entries[:, column] = beta ** (q ** (m_gamma - z))

    sub_order = q ** m_gamma
    degree = field.extension_degree(sub_order)
    over_subfield = make_basis(field, field.elements(range(degree)), sub_order)
    expanded = over_subfield.decompose(entries).reshape(len(included), selection.kappa * degree)
    return ThetaMatrix(entries=entries, expanded=expanded, selection=selection, included=included)


def _single_dim_via_theta(selection: ConjugacySelection, basis: Basis, included: Iterable[int]) -> int:
    theta = theta_matrix(selection, basis, included)
    return selection.m_gamma * (len(theta.included) - theta.rank())


def dim_via_theta(
        selection: ConjugacySelection | Sequence[ConjugacySelection],
        basis: Basis,
        included: Iterable[int],
) -> int:
    """Размерность подкода m_gamma (t - R(Theta)); для нескольких классов - сумма.

    Raises:
        EmptySubbasisError: Пустой подбазис
    """
    included = tuple(included)
    if isinstance(selection, ConjugacySelection):
        return _single_dim_via_theta(selection, basis, included)
    return sum(_single_dim_via_theta(item, basis, included) for item in selection)


def codeword_cofactor(word: galois.FieldArray, selection: ConjugacySelection) -> galois.Poly:
    """P(x) = c(x) / ((x^N - 1)/p_(gamma^-1)(x)) для слова кода набора.

    Корнями P(x) являются gamma^(-q^z) для всех z из z-множества.

    Raises:
        NotDivisorError: Слово не делится на (x^N - 1)/p_(gamma^-1)(x)
    """
    field = selection.field
    inverse = field.element(-selection.gamma_exponent)
    cofactor = x_pow_minus_one(field.gf, field.size) // minimal_polynomial(field, inverse, selection.q)
    quotient, remainder = divmod(poly_from_ascending(field.as_array(word)), cofactor)
    if not is_zero_poly(remainder):
        raise NotDivisorError('Слово не принадлежит коду класса gamma')
    return quotient


def cofactor_roots_vanish(word: galois.FieldArray, selection: ConjugacySelection) -> bool:
    """Проверяет P(gamma^(-q^z)) = 0 для всех z из z-множества"""
    field = selection.field
    quotient = codeword_cofactor(word, selection)
    points = field.elements(-selection.gamma_exponent * selection.q ** z for z in selection.z_set)
    if points.size == 0:
        return True
    return not np.any(quotient(points))
