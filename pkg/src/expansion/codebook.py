from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import galois
import numpy as np
from loguru import logger

from ..basis.basis import Basis
from ..bounds.plotkin import PlotkinVariant, plotkin_comparison
from ..cyclic.code import class_generator_poly
from ..cyclic.matrices import subfield_code_generator
from ..galois_field.conjugacy import minimal_dimension
from ..galois_field.field import Field, FieldElement
from ..galois_field.linalg import check_enumeration, message_chunks
from ..galois_field.notation import format_element, format_elements
from ..utils import digits_string
from .expanded import expand_word
from .schemes import CodebookRow, ConstantWeightReport


class ListingMatch(str, Enum):
    EXACT = 'exact'
    SET = 'set'
    REVERSED = 'reversed'
    SHIFT_EQUIVALENT = 'shift-equivalent'
    MISMATCH = 'mismatch'


@dataclass(frozen=True, eq=False)
class CodebookEntry:
    """Слово кода постоянного веса.

    Attributes:
        message: Цифры сообщения u (младшая первая)
        symbol_codeword: Слово u(x) G(x) над GF(q) длины N
        expanded_codeword: Разложение слова по базису (если базис задан)
        weight: Вес Хэмминга над GF(q)
    """
    message: tuple[int, ...]
    symbol_codeword: galois.FieldArray
    expanded_codeword: galois.FieldArray | None
    weight: int


def expected_constant_weight(q: int, m: int, m_gamma: int) -> int:
    """q^(m_gamma-1) (q-1) (q^m-1)/(q^(m_gamma)-1)"""
    return q ** (m_gamma - 1) * (q - 1) * (q ** m - 1) // (q ** m_gamma - 1)


def expected_element_count(q: int, m: int, m_gamma: int) -> int:
    """Число вхождений каждого элемента GF*(q) в ненулевое слово"""
    return q ** (m_gamma - 1) * (q ** m - 1) // (q ** m_gamma - 1)


def constant_weight_codebook(
        field: Field,
        q: int,
        gamma: FieldElement,
        basis: Basis | None = None,
) -> list[CodebookEntry]:
    """Перечисляет q^(m_gamma) слов кода с G(x) = (x^N - 1)/p_gamma(x) над GF(q).

    Алгоритм работы:
    1. Строит G(x) и порождающую матрицу из сдвигов x^j G(x), j < m_gamma
    2. Перебирает сообщения в порядке номеров, слово равно u(x) G(x)
    3. При заданном базисе добавляет разложение каждого слова

    Raises:
        ZeroElementError: Для gamma = 0
        TooLargeError: q^(m_gamma) больше лимита перебора
    """
    field.exponent(gamma)
    m_gamma = minimal_dimension(field, gamma, q)
    check_enumeration(q, m_gamma, 'Кодовая книга')
    generator = subfield_code_generator(class_generator_poly(field, q, gamma), m_gamma, field.size)
    scalars = field.subfield_elements(q)
    scalar_index = {int(code): digit for digit, code in enumerate(field.codes(scalars))}

    entries = []
    for messages in message_chunks(scalars, m_gamma):
        codewords = messages @ generator
        for message, codeword in zip(messages, codewords):
            entries.append(CodebookEntry(
                message=tuple(scalar_index[int(code)] for code in field.codes(message)),
                symbol_codeword=codeword,
                expanded_codeword=expand_word(codeword, basis) if basis is not None else None,
                weight=int(np.count_nonzero(codeword)),
            ))
    logger.info(f'Кодовая книга gamma={format_element(field, gamma)}: {len(entries)} слов')
    return entries


def codeword_digits(field: Field, word: galois.FieldArray, q: int) -> str:
    """Слово над GF(q) цифрами при q = p, иначе в нотации a^k"""
    if q == field.p:
        return digits_string(field.codes(word), field.p)
    return format_elements(field, word)


def compare_listing(
        field: Field,
        q: int,
        entries: Sequence[CodebookEntry],
        listing: Sequence[str],
) -> ListingMatch:
    """Сравнивает ненулевые слова книги с эталонным списком строк цифр.

    Проверки идут от строгой к слабой: совпадение по порядку, совпадение
    множеств, совпадение с обращенными словами, совпадение с точностью до
    циклических сдвигов и обращения.
    """
    words = [codeword_digits(field, entry.symbol_codeword, q) for entry in entries if entry.weight]
    expected = list(listing)
    if words == expected:
        return ListingMatch.EXACT
    if set(words) == set(expected):
        return ListingMatch.SET
    if {word[::-1] for word in words} == set(expected):
        return ListingMatch.REVERSED

    def orbits(values: Sequence[str]) -> set[str]:
        result = set()
        for word in values:
            variants = [word[s:] + word[:s] for s in range(len(word))]
            variants += [variant[::-1] for variant in variants]
            result.add(min(variants))
        return result

    if orbits(words) == orbits(expected):
        return ListingMatch.SHIFT_EQUIVALENT
    return ListingMatch.MISMATCH


def is_periodic(word: galois.FieldArray, period: int) -> bool:
    if period >= word.size:
        return True
    return bool(np.array_equal(word[period:], word[:-period]))


def constant_weight_report(
        field: Field,
        q: int,
        gamma: FieldElement,
        entries: Sequence[CodebookEntry] | None = None,
        listing: Sequence[str] | None = None,
        with_rows: bool = True,
) -> ConstantWeightReport:
    """Сводка по кодовой книге: веса, вхождения элементов, период, граница Плоткина.

    Args:
        field: Поле GF(q^m)
        q: Порядок базового подполя
        gamma: Элемент, задающий код
        entries: Готовая кодовая книга (иначе строится заново)
        listing: Эталонный список ненулевых слов для сравнения
        with_rows: Включить слова в отчет

    Returns:
        Отчет о проверке кода постоянного веса
    """
    m = field.extension_degree(q)
    m_gamma = minimal_dimension(field, gamma, q)
    if entries is None:
        entries = constant_weight_codebook(field, q, gamma)

    nonzero = [entry for entry in entries if entry.weight]
    weights = sorted({entry.weight for entry in nonzero})
    expected_weight = expected_constant_weight(q, m, m_gamma)
    expected_count = expected_element_count(q, m, m_gamma)

    scalars = [code for code in field.codes(field.subfield_elements(q)) if code]
    element_counts = {
        format_element(field, code): sorted({
            int(np.count_nonzero(field.codes(entry.symbol_codeword) == code)) for entry in nonzero
        })
        for code in scalars
    }
    counts_match = all(counts == [expected_count] for counts in element_counts.values())
    period = q ** m_gamma - 1
    periodic = all(is_periodic(entry.symbol_codeword, period) for entry in entries)

    variants = [PlotkinVariant.CLASS_CODE]
    if m_gamma == m:
        variants += [PlotkinVariant.WITH_X_MINUS_1, PlotkinVariant.PUNCTURED_ZERO]
    plotkin = [plotkin_comparison(field, q, gamma, variant) for variant in variants]

    if weights != [expected_weight]:
        logger.warning(f'Веса {weights} не совпадают с ожидаемым {expected_weight}')

    return ConstantWeightReport(
        field=field.descriptor(),
        q=q,
        gamma=format_element(field, gamma),
        m_gamma=m_gamma,
        codewords=len(entries),
        weights=weights,
        expected_weight=expected_weight,
        constant=weights == [expected_weight],
        element_counts=element_counts,
        expected_count=expected_count,
        counts_match=counts_match,
        period=period,
        periodic=periodic,
        listing_match=compare_listing(field, q, entries, listing).value if listing is not None else None,
        plotkin=plotkin,
        rows=[
            CodebookRow(
                message=list(entry.message),
                symbol_codeword=codeword_digits(field, entry.symbol_codeword, q),
                expanded_codeword=(
                    codeword_digits(field, entry.expanded_codeword, q)
                    if entry.expanded_codeword is not None else None
                ),
                weight=entry.weight,
            )
            for entry in entries
        ] if with_rows else [],
    )
