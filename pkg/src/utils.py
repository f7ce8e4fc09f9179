from pathlib import Path
from typing import Iterable

import numpy as np
from loguru import logger

from .schemes import Document


def parse_int_list(text: str) -> tuple[int, ...]:
    """Разбирает список целых чисел через запятую, например ``"21,22,-1"``.

    Args:
        text: Текстовое представление списка

    Returns:
        Кортеж чисел в исходном порядке

    Raises:
        ValueError: Если элемент не является целым числом
    """
    items = [item.strip() for item in text.split(',')]
    return tuple(int(item) for item in items if item)


def parse_index_list(text: str) -> tuple[int, ...]:
    """Разбирает 1-базовый список индексов ``"1,2,4"`` в 0-базовые индексы."""
    indices = parse_int_list(text)
    if any(index < 1 for index in indices):
        raise ValueError(f'Индексы нумеруются с единицы: {text}')
    return tuple(index - 1 for index in indices)


def format_index_list(indices: Iterable[int]) -> str:
    """Форматирует 0-базовые индексы как 1-базовый список через запятую"""
    return ','.join(str(index + 1) for index in sorted(indices))


def digits_string(row: np.ndarray, p: int) -> str:
    """Записывает вектор над GF(p) цифрами без разделителей (для p <= 9).

    Args:
        row: Вектор целых кодов элементов простого поля
        p: Характеристика поля

    Returns:
        Строка цифр, для p > 9 значения разделяются запятыми
    """
    values = np.asarray(row).astype(np.int64).ravel()
    if p <= 9:
        return ''.join(str(int(value)) for value in values)
    return ','.join(str(int(value)) for value in values)


def write_text(text: str, path: Path | None) -> None:
    """Записывает текст в файл или в стандартный вывод.

    Args:
        text: Содержимое
        path: Путь к файлу; ``None`` означает стандартный вывод
    """
    if path is None:
        print(text, end='' if text.endswith('\n') else '\n')
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding='utf-8')
    logger.info(f'Записан файл {path}')


def dump_document(document: Document) -> str:
    """Сериализует документ в JSON с полем ``"schema"``"""
    return document.model_dump_json(by_alias=True, indent=2) + '\n'
