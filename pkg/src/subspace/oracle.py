"""Прямое вычисление подкода подпространства на развернутой порождающей матрице."""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import galois
import numpy as np
from loguru import logger

from ..basis.basis import Basis
from ..basis.exceptions import EmptySubbasisError, SubbasisIndexError
from ..config import config
from ..cyclic.code import CyclicCodeSpec, code_from_gammas
from ..expansion.expanded import ExpandedMatrix, expand_generator
from ..galois_field.linalg import (
    check_enumeration,
    left_null_space,
    over_subfield,
    span_chunks,
    subfield_rank,
)
from .exceptions import OracleTooLargeError
from .gamma import dim_via_gamma
from .selection import check_nonconjugate, selections_from_gammas


@dataclass(frozen=True, eq=False)
class Subcode:
    """Подкод подпространства, найденный прямым решением.

    Attributes:
        spec: Код G_e(gamma_1, ..., gamma_k)
        included: Индексы подбазиса
        messages: Базис сообщений над GF(q), строки длины mk
        codewords: Развернутые слова messages @ G_e
    """
    spec: CyclicCodeSpec
    included: tuple[int, ...]
    messages: galois.FieldArray
    codewords: galois.FieldArray

    @property
    def dimension(self) -> int:
        return self.messages.shape[0]


def _included_indices(basis: Basis, included: Iterable[int]) -> tuple[int, ...]:
    indices = tuple(sorted({int(index) for index in included}))
    if not indices:
        raise EmptySubbasisError()
    if any(index < 0 or index >= basis.m for index in indices):
        raise SubbasisIndexError(f'Индексы {list(indices)} вне диапазона 0..{basis.m - 1}')
    return indices


def expanded_generator_for(gamma_exponents: Iterable[int], basis: Basis) -> ExpandedMatrix:
    """G_e кода, порожденного g(gamma) для всех gamma из списка.

    Raises:
        OracleTooLargeError: mk больше ORACLE_MAX_DIM
    """
    spec = code_from_gammas(basis.field, gamma_exponents, basis.q)
    limit = config.compute_config.ORACLE_MAX_DIM
    if basis.m * spec.K > limit:
        logger.error(f'Прямое вычисление: mk = {basis.m * spec.K} больше {limit}')
        raise OracleTooLargeError(f'mk = {basis.m * spec.K} больше лимита {limit}')
    return expand_generator(spec, basis)


def _excluded_columns(basis: Basis, length: int, included: tuple[int, ...]) -> np.ndarray:
    excluded = np.array([index for index in range(basis.m) if index not in included], dtype=np.int64)
    return (np.arange(length, dtype=np.int64)[:, None] * basis.m + excluded[None, :]).ravel()


def subcode_basis(gamma_exponents: Iterable[int], basis: Basis, included: Iterable[int]) -> Subcode:
    """Базис подкода: левое ядро столбцов G_e с исключенными координатами.

    Raises:
        OracleTooLargeError: mk больше ORACLE_MAX_DIM
        EmptySubbasisError: Пустой подбазис
    """
    included = _included_indices(basis, included)
    generator = expanded_generator_for(gamma_exponents, basis)
    field, spec = basis.field, generator.spec
    restricted = generator.entries[:, _excluded_columns(basis, spec.N, included)]
    kernel = left_null_space(over_subfield(field, restricted, basis.q))
    messages = field.gf(np.asarray(kernel.view(np.ndarray), dtype=np.int64))
    return Subcode(spec=spec, included=included, messages=messages, codewords=messages @ generator.entries)


def dim_bruteforce(gamma_exponents: Iterable[int], basis: Basis, included: Iterable[int]) -> int:
    """mk - ранг столбцов G_e, соответствующих исключенным координатам.

    Raises:
        OracleTooLargeError: mk больше ORACLE_MAX_DIM
        EmptySubbasisError: Пустой подбазис
    """
    included = _included_indices(basis, included)
    generator = expanded_generator_for(gamma_exponents, basis)
    full = generator.entries.shape[0]
    if len(included) == basis.m:
        return full
    restricted = generator.entries[:, _excluded_columns(basis, generator.spec.N, included)]
    return full - subfield_rank(basis.field, restricted, basis.q)


def proper_support_codewords(gamma_exponents: Iterable[int], basis: Basis) -> int:
    """Число ненулевых слов G_e с носителем в собственном подбазисе (полный перебор).

    Raises:
        TooLargeError: q^(mk) больше лимита перебора
    """
    spec = code_from_gammas(basis.field, gamma_exponents, basis.q)
    field, m = basis.field, basis.m
    check_enumeration(basis.q, m * spec.K, 'Поиск слов с собственным подбазисом')
    generator = over_subfield(field, expand_generator(spec, basis).entries, basis.q)
    scalars = type(generator)(field.codes(field.subfield_elements(basis.q)))

    found = 0
    for messages, codewords in span_chunks(generator, scalars):
        support = np.any((codewords != 0).reshape(codewords.shape[0], spec.N, m), axis=1)
        nonzero = np.any(messages != 0, axis=1)
        found += int(np.count_nonzero(nonzero & ~np.all(support, axis=1)))
    return found


def nonconjugate_subbasis_check(gamma_exponents: Iterable[int], basis: Basis) -> bool:
    """Проверяет, что ни одно ненулевое слово не представимо собственным подбазисом.

    Для попарно не сопряженных gamma вне подполей результат всегда истинен.
    При q^(mk) не больше лимита выполняется полный перебор, иначе проверяется,
    что все подбазисы из m - 1 элемента дают нулевую размерность.

    Raises:
        PreconditionViolatedError: gamma в подполе или сопряженные gamma
    """
    gamma_exponents = list(gamma_exponents)
    selections = selections_from_gammas(basis.field, gamma_exponents, basis.q)
    check_nonconjugate(selections)

    total = basis.q ** (basis.m * len(gamma_exponents))
    if total <= config.compute_config.XCYCLIC_CAP:
        found = proper_support_codewords(gamma_exponents, basis)
        logger.info(f'Полный перебор {total} слов: {found} слов с собственным подбазисом')
        return found == 0

    return all(
        dim_via_gamma(selections, basis, excluded) == 0
        for excluded in combinations(range(basis.m), 1)
    )
