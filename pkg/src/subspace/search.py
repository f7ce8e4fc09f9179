from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import galois
import numpy as np
from loguru import logger

from ..basis.basis import Basis, Subbasis, composite_basis, make_subbasis, power_basis
from ..expansion.components import component_words
from ..galois_field.field import Field
from ..galois_field.linalg import message_chunks, subfield_rank
from ..galois_field.notation import format_elements
from .exceptions import InvalidSelectionError, NoSuchCodewordError, PreconditionViolatedError
from .gamma import dim_via_gamma, gamma_witnesses
from .selection import ConjugacySelection, selection_gamma_matrix, selections_from_gammas

WITNESS_CHUNK_SIZE = 256


@dataclass(frozen=True, eq=False)
class SearchResult:
    basis_index: int
    basis: Basis
    subbasis: Subbasis
    dimension: int


@dataclass(frozen=True, eq=False)
class WeightWitness:
    """Слово, минимальный подбазис которого имеет заданный размер.

    Attributes:
        weight: Вес разложенного слова над GF(q)
        expected_weight: i q^(m_gamma-1)(q-1)(q^m-1)/(q^(m_gamma)-1)
        codeword: Символьное слово
        subbasis: Носитель слова в базисе
    """
    weight: int
    expected_weight: int
    codeword: galois.FieldArray
    subbasis: Subbasis

    @property
    def match(self) -> bool:
        """Вес совпадает с вычисленным по формуле"""
        return self.weight == self.expected_weight


@dataclass(frozen=True)
class ComponentBound:
    """Нижняя граница числа линейно независимых компонентных слов.

    Attributes:
        sizes: Минимальный размер подбазиса l для каждого класса сопряженных
        bound: max l
        rank: Фактический ранг m компонент слова над GF(q)
    """
    sizes: tuple[int, ...]
    bound: int
    rank: int


def _complement(m: int, included: Iterable[int]) -> tuple[int, ...]:
    included = set(included)
    return tuple(index for index in range(m) if index not in included)


def as_selections(
        field: Field,
        gammas: Iterable[int] | ConjugacySelection | Sequence[ConjugacySelection],
        q: int,
) -> list[ConjugacySelection]:
    """Приводит список показателей gamma или наборов к списку наборов по классам"""
    if isinstance(gammas, ConjugacySelection):
        return [gammas]
    gammas = list(gammas)
    if gammas and isinstance(gammas[0], ConjugacySelection):
        return gammas
    return selections_from_gammas(field, gammas, q)


def tower_bases(field: Field, q: int) -> list[Basis]:
    """Степенной базис и составные базисы по всем цепочкам подполей.

    Для цепочки d_1 | d_2 | ... | m базис собирается по уровням: степени
    примитивного элемента GF(q^(d_1)), затем степени примитивного элемента
    GF(q^(d_2)) над GF(q^(d_1)) и так далее до a над GF(q^(d_last)).
    """
    m = field.extension_degree(q)

    def chains(current: int) -> list[list[int]]:
        result = [[current]]
        for degree in range(current + 1, m):
            if m % degree == 0 and degree % current == 0:
                result += [[current] + rest for rest in chains(degree)]
        return result

    def primitive_powers(degree: int, count: int) -> galois.FieldArray:
        return field.elements(np.arange(count) * (field.size // (q ** degree - 1)))

    bases = [power_basis(field, q)]
    for first in range(2, m):
        if m % first:
            continue
        for chain in chains(first):
            elements = primitive_powers(chain[0], chain[0])
            for lower, upper in zip(chain, chain[1:]):
                outer = primitive_powers(upper, upper // lower)
                elements = (outer[:, None] * elements[None, :]).ravel()
            last = chain[-1]
            bases.append(composite_basis(field, q, q ** last, elements, field.elements(range(m // last))))
    logger.debug(f'Кандидаты базисов {field} над GF({q}): {len(bases)}')
    return bases


def best_subbasis_search(
        gammas: Iterable[int] | Sequence[ConjugacySelection],
        bases: Sequence[Basis],
        size: int,
) -> SearchResult:
    """Максимизирует размерность подкода по подбазисам из size элементов.

    Перебор идет по базисам в порядке списка и по подбазисам в лексикографическом
    порядке индексов; лучший результат заменяется только строго большим.

    Raises:
        InvalidSelectionError: Пустой список базисов или size вне [1, m]
    """
    gammas = list(gammas)
    if not bases:
        raise InvalidSelectionError('Список базисов для поиска пуст')
    for basis in bases:
        if not 1 <= size <= basis.m:
            logger.error(f'Размер подбазиса {size} вне диапазона 1..{basis.m}')
            raise InvalidSelectionError(f'Размер подбазиса {size} вне диапазона 1..{basis.m}')
    best = None
    for index, basis in enumerate(bases):
        selections = as_selections(basis.field, gammas, basis.q)
        for included in combinations(range(basis.m), size):
            dimension = dim_via_gamma(selections, basis, _complement(basis.m, included))
            if best is None or dimension > best.dimension:
                best = SearchResult(
                    basis_index=index,
                    basis=basis,
                    subbasis=make_subbasis(basis, included),
                    dimension=dimension,
                )
        logger.info(f'Базис {index} ({basis.to_text()}): лучший результат {best.dimension}')
    return best


def minimal_representing_size(
        gammas: Iterable[int] | ConjugacySelection | Sequence[ConjugacySelection],
        basis: Basis,
) -> int:
    """Наименьший размер подбазиса, по которому есть ненулевое слово кода"""
    selections = as_selections(basis.field, gammas, basis.q)
    for size in range(1, basis.m + 1):
        for included in combinations(range(basis.m), size):
            if dim_via_gamma(selections, basis, _complement(basis.m, included)) > 0:
                return size
    return basis.m


def _exact_support_word(words: galois.FieldArray, basis: Basis, included: tuple[int, ...]) -> galois.FieldArray | None:
    field = basis.field
    target = np.zeros(basis.m, dtype=bool)
    target[list(included)] = True
    scalars = field.subfield_elements(basis.q)
    for messages in message_chunks(scalars, words.shape[0], WITNESS_CHUNK_SIZE):
        codewords = messages @ words
        support = np.any(basis.decompose(codewords) != 0, axis=1)
        matches = np.flatnonzero(np.all(support == target, axis=1))
        if matches.size:
            return codewords[matches[0]]
    return None


def min_subbasis_codeword_weight(selection: ConjugacySelection, basis: Basis, size: int) -> WeightWitness:
    """Вес слова, минимальный подбазис которого содержит size элементов.

    Алгоритм работы:
    1. Вычисляет вес по формуле i q^(m_gamma-1)(q-1)(q^m-1)/(q^(m_gamma)-1)
    2. Перебирает подбазисы размера i, для каждого строит базис подкода по ядру Gamma
    3. Ищет слово подкода с носителем, равным всему подбазису, и считает его вес
    4. Совпадение веса с формулой доступно через WeightWitness.match; формула
       верна для gamma, примитивного в GF(q^(m_gamma))

    Raises:
        NoSuchCodewordError: Ни один подбазис размера i не несет такого слова
    """
    q, m = basis.q, basis.m
    m_gamma = selection.m_gamma
    expected = size * q ** (m_gamma - 1) * (q - 1) * (q ** m - 1) // (q ** m_gamma - 1)
    for included in combinations(range(m), size):
        words = gamma_witnesses(selection, basis, _complement(m, included))
        if words.shape[0] == 0:
            continue
        codeword = _exact_support_word(words, basis, included)
        if codeword is None:
            continue
        weight = int(np.count_nonzero(basis.decompose(codeword)))
        if weight != expected:
            logger.warning(f'{selection}: вес {weight} не совпадает с ожидаемым {expected}')
        return WeightWitness(
            weight=weight,
            expected_weight=expected,
            codeword=codeword,
            subbasis=make_subbasis(basis, included),
        )
    raise NoSuchCodewordError(f'{selection}: нет слова с минимальным подбазисом из {size} элементов')


def independent_component_count_bound(
        gamma_exponents: Iterable[int],
        thetas: galois.FieldArray,
        basis: Basis,
) -> ComponentBound:
    """Граница max l_i числа независимых компонент слова sum theta_i g(gamma_i).

    l_i - наименьший размер подбазиса для класса gamma_i (в пересечении со списком).

    Raises:
        PreconditionViolatedError: Некоторое theta_i равно нулю или длины не совпадают
    """
    field = basis.field
    gamma_exponents = [int(e) % field.size for e in gamma_exponents]
    thetas = field.as_array(thetas).ravel()
    if thetas.size != len(gamma_exponents) or np.any(thetas == 0):
        raise PreconditionViolatedError(f'Коэффициенты {format_elements(field, thetas)} должны быть ненулевыми')

    selections = selections_from_gammas(field, gamma_exponents, basis.q)
    sizes = tuple(minimal_representing_size(selection, basis) for selection in selections)

    word = field.gf.Zeros(field.size)
    for selection in selections:
        rows = selection_gamma_matrix(selection)
        coefficients = field.gf.Zeros(selection.k)
        for position, exponent in enumerate(selection.exponents()):
            coefficients[position] = thetas[gamma_exponents.index(exponent)]
        word = word + coefficients @ rows
    rank = subfield_rank(field, component_words(word, basis), basis.q)
    return ComponentBound(sizes=sizes, bound=max(sizes), rank=rank)
