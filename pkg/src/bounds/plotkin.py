from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import floor

import galois
import numpy as np
from loguru import logger

from ..cyclic.code import class_generator_poly
from ..cyclic.matrices import subfield_code_generator
from ..galois_field.conjugacy import minimal_dimension
from ..galois_field.field import Field, FieldElement
from ..galois_field.linalg import check_enumeration, message_chunks, min_nonzero_weight
from ..galois_field.notation import format_element
from ..subspace.exceptions import PreconditionViolatedError
from .schemes import PlotkinReport


class PlotkinVariant(str, Enum):
    CLASS_CODE = 'class-code'
    WITH_X_MINUS_1 = 'with-x-minus-1'
    PUNCTURED_ZERO = 'punctured-zero'


@dataclass(frozen=True)
class PlotkinQuery:
    """Параметры кода для границы Плоткина.

    Attributes:
        N: Длина
        q: Размер алфавита
        A: Число слов, не меньше 2
        d_min: Проверяемое минимальное расстояние
    """
    N: int
    q: int
    A: int
    d_min: int | None = None

    def __post_init__(self):
        if self.A < 2 or self.N < 1:
            raise ValueError(f'Граница Плоткина требует A >= 2 и N >= 1: A={self.A}, N={self.N}')

    def bound(self) -> tuple[Fraction, int]:
        return plotkin_bound(self.N, self.q, self.A)


def plotkin_bound(N: int, q: int, A: int) -> tuple[Fraction, int]:
    """d_min <= N(q-1)/(q - q/A) = N(q-1)A/(q(A-1)).

    Returns:
        Точная дробь и ее целая часть
    """
    if A < 2 or N < 1:
        raise ValueError(f'Граница Плоткина требует A >= 2 и N >= 1: A={A}, N={N}')
    value = Fraction(N * (q - 1) * A, q * (A - 1))
    return value, floor(value)


def code_min_distance(words: galois.FieldArray) -> int:
    """Минимальное попарное расстояние Хэмминга между строками"""
    best = words.shape[1]
    for index in range(words.shape[0] - 1):
        distances = np.count_nonzero(words[index + 1:] != words[index], axis=1)
        best = min(best, int(distances.min()))
    return best


def _class_codewords(field: Field, q: int, gamma: FieldElement, with_one: bool) -> tuple[galois.FieldArray, int]:
    m_gamma = minimal_dimension(field, gamma, q)
    dimension = m_gamma + 1 if with_one else m_gamma
    generator = subfield_code_generator(class_generator_poly(field, q, gamma, with_one), dimension, field.size)
    return generator, dimension


def plotkin_comparison(field: Field, q: int, gamma: FieldElement, variant: PlotkinVariant) -> PlotkinReport:
    """Точное минимальное расстояние кода варианта и его сравнение с границей Плоткина.

    Варианты:
    - CLASS_CODE: G(x) = (x^N - 1)/p_gamma(x), A = q^(m_gamma)
    - WITH_X_MINUS_1: G(x) = (x^N - 1)/((x - 1) p_gamma(x)), A = q^(m+1)
    - PUNCTURED_ZERO: ненулевые слова кода CLASS_CODE, A = q^m - 1

    Raises:
        ZeroElementError: gamma = 0
        PreconditionViolatedError: Варианты WITH_X_MINUS_1 и PUNCTURED_ZERO при gamma из подполя
        TooLargeError: Перебор превышает лимит
    """
    field.exponent(gamma)
    m = field.extension_degree(q)
    m_gamma = minimal_dimension(field, gamma, q)
    if variant is not PlotkinVariant.CLASS_CODE and m_gamma < m:
        raise PreconditionViolatedError(
            f'Вариант {variant.value} требует gamma вне подполей, m_gamma = {m_gamma} < {m}'
        )

    generator, dimension = _class_codewords(field, q, gamma, variant is PlotkinVariant.WITH_X_MINUS_1)
    if variant is PlotkinVariant.PUNCTURED_ZERO:
        check_enumeration(q, dimension, 'Граница Плоткина')
        scalars = field.subfield_elements(q)
        words = np.concatenate([messages @ generator for messages in message_chunks(scalars, dimension)])
        words = words[np.any(words != 0, axis=1)]
        size = words.shape[0]
        d_min = code_min_distance(words)
    else:
        size = q ** dimension
        d_min = min_nonzero_weight(field, generator, q)

    value, value_floor = plotkin_bound(field.size, q, size)
    logger.info(
        f'Плоткин {variant.value}, gamma={format_element(field, gamma)}: d={d_min}, граница {value} ({value_floor})'
    )
    return PlotkinReport(
        variant=variant.value,
        N=field.size,
        A=size,
        d_min=d_min,
        bound=str(value),
        bound_floor=value_floor,
        match=d_min == value_floor,
    )


def plotkin_match_check(field: Field, q: int, gamma: FieldElement, variant: PlotkinVariant) -> bool:
    return plotkin_comparison(field, q, gamma, variant).match
