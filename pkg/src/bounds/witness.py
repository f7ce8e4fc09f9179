from fractions import Fraction
from itertools import combinations
from math import ceil

import numpy as np
from loguru import logger

from ..basis.basis import Basis, composite_basis, power_basis, support_indices
from ..cyclic.code import reed_solomon_code
from ..cyclic.matrices import g_vector, is_codeword
from ..galois_field.field import build_field
from ..galois_field.notation import format_element, format_elements
from ..subspace.exceptions import PreconditionViolatedError
from ..subspace.gamma import gamma_witnesses
from ..subspace.selection import make_selection
from .exceptions import NoWitnessFoundError
from .schemes import SubfieldWitnessReport, WitnessReport


def floor_log2(value: Fraction) -> int:
    """Наибольшее k с 2^k <= value (value >= 1)"""
    if value < 1:
        raise ValueError(f'Логарифм определен для значений >= 1: {value}')
    k = 0
    while 2 ** (k + 1) <= value:
        k += 1
    return k


def ceil_log2(value: int) -> int:
    """Наименьшее k с 2^k >= value"""
    k = 0
    while 2 ** k < value:
        k += 1
    return k


def _as_fraction(rate: Fraction | float | str) -> Fraction:
    if isinstance(rate, float):
        return Fraction(str(rate))
    return Fraction(rate)


def badness_witness(
        m: int,
        rate: Fraction | float | str,
        delta: int,
        basis: Basis | None = None,
) -> WitnessReport:
    """Слово малого веса в двоичном разложении кода Рида-Соломона.

    Алгоритм работы:
    1. Строит RS-код длины N = 2^m - 1 с корнями a^delta, ..., a^(delta + R - 1), R = ceil((1 - r) N)
    2. Выбирает сопряженные a^(2^s), для которых g(a^(2^s)) лежит в коде
    3. По ядру матрицы Gamma находит ненулевое слово на подбазисе из m - k' + 1 элементов,
       где k' - число выбранных сопряженных
    4. Сравнивает вес слова над GF(2) с оценкой (m - k) 2^(m-1); при delta < 0 оценка
       (m - k + k1) 2^(m-1), k1 = ceil(log2(1 - delta)) - число степеней 2^s <= -delta

    Args:
        m: Степень поля GF(2^m)
        rate: Скорость кода r
        delta: Показатель первого корня
        basis: Базис над GF(2) (по умолчанию степенной)

    Returns:
        Отчет о найденном слове

    Raises:
        PreconditionViolatedError: k < 1 или в коде нет слов g(a^(2^s))
        NoWitnessFoundError: Слово не найдено
    """
    rate = _as_fraction(rate)
    field = build_field(2, m)
    basis = basis or power_basis(field, 2)
    length = field.size
    redundancy = ceil((1 - rate) * length)
    spec = reed_solomon_code(field, 2, delta, redundancy)

    shifted = rate * length - delta
    if shifted < 2:
        raise PreconditionViolatedError(f'r N - delta = {shifted} < 2, оценка требует k >= 1')
    k = floor_log2(shifted)
    k1 = ceil_log2(1 - delta) if delta < 0 else None
    if k1 is None:
        weight_bound = (m - k) * 2 ** (m - 1)
        tight_bound = None
    else:
        weight_bound = (m - k + k1) * 2 ** (m - 1)
        tight_bound = (m - (k + k1)) * 2 ** (m - 1)

    gamma_set = set(spec.gamma_set)
    present = [s for s in range(m) if 2 ** s % length in gamma_set]
    if not present:
        raise PreconditionViolatedError(f'RS({length}, {spec.K}) не содержит слов g(a^(2^s))')
    selection = make_selection(field, 2 ** present[0], [s - present[0] for s in present], 2)
    target = m - len(present) + 1
    logger.info(f'RS({length}, {spec.K}), delta={delta}: {selection}, подбазис из {target} элементов')

    word = None
    for included in combinations(range(m), target):
        excluded = [index for index in range(m) if index not in included]
        words = gamma_witnesses(selection, basis, excluded)
        if words.shape[0]:
            word = words[0]
            break
    if word is None or not is_codeword(spec, word):
        raise NoWitnessFoundError(f'Для m={m}, r={rate}, delta={delta} слово не найдено')

    weight = int(np.count_nonzero(basis.decompose(word)))
    support = sorted(support_indices(word, basis))
    if weight > weight_bound:
        logger.error(f'Вес {weight} превышает оценку {weight_bound}')
    return WitnessReport(
        m=m,
        rate=str(rate),
        delta=delta,
        N=length,
        K=spec.K,
        k=k,
        k1=k1,
        support=[index + 1 for index in support],
        support_size=len(support),
        weight=weight,
        weight_bound=weight_bound,
        within_bound=weight <= weight_bound,
        tight_weight_bound=tight_bound,
        tight_satisfied=weight <= tight_bound if tight_bound is not None else None,
        ratio=weight / (m * length),
        codeword=format_elements(field, word),
    )


def subfield_weight_witness(m: int) -> SubfieldWitnessReport:
    """Вес g(a^(N/3)) в составном базисе {1, a^(N/3)} x {1, a, ..., a^(m/2 - 1)} равен 4N/3.

    Raises:
        PreconditionViolatedError: m нечетно
    """
    if m % 2:
        raise PreconditionViolatedError(f'GF(2^{m}) не содержит GF(4)')
    field = build_field(2, m)
    length = field.size
    gamma = field.element(length // 3)
    basis = composite_basis(field, 2, 4, field.elements([0, length // 3]), field.elements(range(m // 2)))
    weight = int(np.count_nonzero(basis.decompose(g_vector(field, gamma))))
    return SubfieldWitnessReport(
        m=m,
        basis=basis.descriptor(),
        gamma=format_element(field, gamma),
        weight=weight,
        expected_weight=4 * length // 3,
    )
