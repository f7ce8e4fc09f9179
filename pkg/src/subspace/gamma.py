from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import galois
import numpy as np
from loguru import logger

from ..basis.basis import Basis
from ..basis.exceptions import SubbasisIndexError
from ..basis.structure import StructureConstants, structure_constants
from ..galois_field.linalg import left_null_space, over_subfield, subfield_rank
from .exceptions import EmptyExclusionError
from .selection import ConjugacySelection, minimal_subbasis, selection_gamma_matrix


class GammaVariant(str, Enum):
    FULL = 'full'
    RESTRICTED = 'restricted'
    FOLDED = 'folded'


@dataclass(frozen=True, eq=False)
class GammaMatrix:
    """Матрица Gamma над GF(q).

    Строка (l, rho) соответствует коэффициенту x_(l,rho) в theta_l = sum_rho x_(l,rho) beta_rho,
    столбец (i, r) - исключенному индексу i и координате r.
    Элемент равен mu_i(beta_rho beta_r^(q^(s_l))).

    Attributes:
        entries: Элементы матрицы, mk x (t * число столбцов на индекс)
        selection: Набор сопряженных
        basis: Базис
        excluded: Исключенные индексы по возрастанию
        variant: FULL для gamma вне подполей, RESTRICTED - столбцы только по минимальному
            подбазису подполя, FOLDED - свертка с координатами степеней gamma
    """
    entries: galois.FieldArray
    selection: ConjugacySelection
    basis: Basis
    excluded: tuple[int, ...]
    variant: GammaVariant

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    def rank(self) -> int:
        return subfield_rank(self.basis.field, self.entries, self.basis.q)


def _excluded_indices(basis: Basis, excluded: Iterable[int]) -> tuple[int, ...]:
    indices = tuple(sorted({int(index) for index in excluded}))
    if any(index < 0 or index >= basis.m for index in indices):
        raise SubbasisIndexError(f'Индексы {list(indices)} вне диапазона 0..{basis.m - 1}')
    return indices


def gamma_matrix(
        selection: ConjugacySelection,
        basis: Basis,
        excluded: Iterable[int],
        constants: StructureConstants | None = None,
) -> GammaMatrix:
    """Строит матрицу Gamma по структурным константам базиса.

    Алгоритм работы:
    1. P[(rho, i), k] = mu_i(beta_rho beta_k) для исключенных i
    2. Для каждого s из offsets блок P F_s^T, где F_s[r, k] = mu_k(beta_r^(q^s)),
       дает mu_i(beta_rho beta_r^(q^s))
    3. Блоки по s ставятся друг под другом
    4. Если gamma лежит в подполе GF(q^(m_gamma)), столбцы ограничиваются минимальным
       подбазисом подполя (если его размер равен m_gamma) или свертываются с
       координатами 1, gamma, ..., gamma^(m_gamma - 1)

    Raises:
        EmptyExclusionError: Нет исключенных индексов
        SubbasisIndexError: Индекс вне диапазона
    """
    excluded = _excluded_indices(basis, excluded)
    if not excluded:
        raise EmptyExclusionError()
    m, t, k = basis.m, len(excluded), selection.k
    constants = constants or structure_constants(basis, selection.offsets)

    products = constants.products[:, :, list(excluded)]
    stacked = np.transpose(products, (0, 2, 1)).reshape(m * t, m)
    blocks = [
        (stacked @ constants.frobenius_matrix(s).T).reshape(m, t * m)
        for s in selection.offsets
    ]
    entries = np.concatenate(blocks, axis=0)

    variant = GammaVariant.FULL
    if selection.is_subfield:
        field = basis.field
        support = minimal_subbasis(basis, basis.q ** selection.m_gamma)
        by_index = entries.reshape(m * k, t, m)
        if support.size == selection.m_gamma:
            variant = GammaVariant.RESTRICTED
            entries = by_index[:, :, list(support.indices)].reshape(m * k, t * support.size)
        else:
            variant = GammaVariant.FOLDED
            powers = field.elements(np.arange(selection.m_gamma) * selection.gamma_exponent)
            coordinates = basis.decompose(powers)
            entries = (by_index.reshape(m * k * t, m) @ coordinates.T).reshape(m * k, t * selection.m_gamma)
            logger.warning(
                f'{selection}: минимальный подбазис подполя содержит {support.size} > {selection.m_gamma} '
                f'элементов, используется свертка Gamma'
            )

    return GammaMatrix(entries=entries, selection=selection, basis=basis, excluded=excluded, variant=variant)


def _single_dim_via_gamma(selection: ConjugacySelection, basis: Basis, excluded: tuple[int, ...]) -> int:
    full = basis.m * selection.k
    if not excluded:
        return full
    return full - gamma_matrix(selection, basis, excluded).rank()


def dim_via_gamma(
        selection: ConjugacySelection | Sequence[ConjugacySelection],
        basis: Basis,
        excluded: Iterable[int],
) -> int:
    """Размерность подкода подпространства mk - R(Gamma).

    Для нескольких классов сопряженных размерности складываются: подкоды разных
    классов лежат в попарно независимых минимальных идеалах.
    Пустой набор исключенных индексов дает полную размерность mk.
    """
    excluded = _excluded_indices(basis, excluded)
    if isinstance(selection, ConjugacySelection):
        return _single_dim_via_gamma(selection, basis, excluded)
    return sum(_single_dim_via_gamma(item, basis, excluded) for item in selection)


def gamma_witnesses(selection: ConjugacySelection, basis: Basis, excluded: Iterable[int]) -> galois.FieldArray:
    """Базис символьных слов подкода по левому ядру Gamma.

    Вектор x ядра задает theta_l = sum_rho x_(l,rho) beta_rho и слово
    c = sum_l theta_l g(gamma^(q^(s_l))).

    Returns:
        Матрица (размерность подкода) x N над GF(q^m)
    """
    field = basis.field
    excluded = _excluded_indices(basis, excluded)
    m, k = basis.m, selection.k
    if excluded:
        kernel = left_null_space(over_subfield(field, gamma_matrix(selection, basis, excluded).entries, basis.q))
        kernel = field.gf(np.asarray(kernel.view(np.ndarray), dtype=np.int64))
    else:
        kernel = field.gf.Identity(m * k)
    if kernel.shape[0] == 0:
        return field.gf.Zeros((0, field.size))

    thetas = kernel.reshape(kernel.shape[0] * k, m) @ basis.elements
    thetas = thetas.reshape(kernel.shape[0], k)
    return thetas @ selection_gamma_matrix(selection)
