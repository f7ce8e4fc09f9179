"""Линейная алгебра над подполями и полный перебор линейных оболочек."""
from typing import Iterator

import galois
import numpy as np
from loguru import logger

from ..config import config
from .exceptions import TooLargeError
from .field import Field


def matrix_rank(matrix: galois.FieldArray) -> int:
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def over_subfield(field: Field, matrix: galois.FieldArray, q: int) -> galois.FieldArray:
    """Переводит матрицу с элементами из GF(q) = GF(p) в массив простого поля.

    Для q != p матрица возвращается без изменений. Ранг и ядро при этом
    не меняются: ранг инвариантен относительно расширения поля.
    """
    if q != field.p or field.n == 1:
        return matrix
    return field.prime_gf(field.codes(matrix))


def subfield_rank(field: Field, matrix: galois.FieldArray, q: int) -> int:
    """Ранг матрицы с элементами из GF(q) над GF(q)"""
    return matrix_rank(over_subfield(field, matrix, q))


def left_null_space(matrix: galois.FieldArray) -> galois.FieldArray:
    """Базис левого ядра {x : x M = 0}, по одной строке на вектор"""
    rows, cols = matrix.shape
    gf = type(matrix)
    if rows == 0:
        return gf.Zeros((0, 0))
    if cols == 0:
        return gf.Identity(rows)
    return matrix.left_null_space()


def check_enumeration(q: int, k: int, what: str, cap: int | None = None) -> int:
    """Проверяет, что q^k слов укладываются в лимит перебора.

    Returns:
        Число слов q^k

    Raises:
        TooLargeError: Если q^k больше лимита
    """
    cap = cap or config.compute_config.XCYCLIC_CAP
    total = q ** k
    if total > cap:
        logger.error(f'{what}: {q}^{k} слов превышает лимит перебора {cap}')
        raise TooLargeError(f'{what}: {q}^{k} слов превышает лимит перебора {cap}')
    return total


def message_chunks(
        scalars: galois.FieldArray,
        k: int,
        chunk_size: int | None = None,
) -> Iterator[galois.FieldArray]:
    """Перебирает все сообщения из scalars^k блоками.

    Сообщение с номером u имеет q-ичные цифры u (младшая первая), цифра d
    заменяется элементом ``scalars[d]``.
    """
    chunk_size = chunk_size or config.compute_config.CHUNK_SIZE
    q = len(scalars)
    total = q ** k
    powers = q ** np.arange(k, dtype=np.int64)
    for start in range(0, total, chunk_size):
        index = np.arange(start, min(start + chunk_size, total), dtype=np.int64)
        digits = (index[:, None] // powers) % q
        yield scalars[digits]


def span_chunks(
        generator: galois.FieldArray,
        scalars: galois.FieldArray,
        chunk_size: int | None = None,
) -> Iterator[tuple[galois.FieldArray, galois.FieldArray]]:
    """Перебирает пары (сообщения, кодовые слова = сообщения @ generator) блоками"""
    for messages in message_chunks(scalars, generator.shape[0], chunk_size):
        yield messages, messages @ generator


def min_nonzero_weight(
        field: Field,
        generator: galois.FieldArray,
        q: int,
        cap: int | None = None,
) -> int | None:
    """Минимальный вес Хэмминга ненулевого слова оболочки строк над GF(q).

    Args:
        field: Объемлющее поле
        generator: Порождающая матрица с элементами из GF(q)
        q: Порядок поля скаляров
        cap: Лимит перебора (по умолчанию XCYCLIC_CAP)

    Returns:
        Минимальный вес или ``None`` для пустой матрицы

    Raises:
        TooLargeError: Если q^k больше лимита
    """
    k = generator.shape[0]
    if k == 0:
        return None
    check_enumeration(q, k, 'Поиск минимального веса', cap)
    generator = over_subfield(field, generator, q)
    scalars = type(generator)(field.codes(field.subfield_elements(q)))

    best = None
    for messages, codewords in span_chunks(generator, scalars):
        nonzero = np.any(messages != 0, axis=1)
        if not np.any(nonzero):
            continue
        weights = np.count_nonzero(codewords[nonzero].view(np.ndarray), axis=1)
        chunk_best = int(weights.min())
        best = chunk_best if best is None else min(best, chunk_best)
        logger.debug(f'Блок перебора: минимальный вес {chunk_best}')
    return best
