from collections import Counter
from dataclasses import dataclass

import galois
import numpy as np

from ..galois_field.field import Field
from ..galois_field.notation import format_element


@dataclass(frozen=True)
class WeightProfile:
    """Вес слова и число вхождений каждого ненулевого элемента.

    Attributes:
        weight: Вес Хэмминга
        counts: Код элемента -> число позиций с этим элементом
    """
    weight: int
    counts: dict[int, int]

    def as_text(self, field: Field) -> dict[str, int]:
        return {format_element(field, code): count for code, count in sorted(self.counts.items())}


def hamming_weight(word: galois.FieldArray) -> int:
    return int(np.count_nonzero(word))


def weight_profile(word: galois.FieldArray) -> WeightProfile:
    codes = np.asarray(word.view(np.ndarray), dtype=np.int64).ravel()
    counts = Counter(int(code) for code in codes if code)
    return WeightProfile(weight=sum(counts.values()), counts=dict(counts))


def cyclic_shift(word: galois.FieldArray, shift: int = 1) -> galois.FieldArray:
    """Циклический сдвиг вправо: результат[t] = word[t - shift]"""
    length = word.shape[-1]
    return word[..., (np.arange(length) - shift) % length]


def reverse_word(word: galois.FieldArray) -> galois.FieldArray:
    """Обращение порядка позиций (слово взаимного кода)"""
    return word[..., ::-1].copy()
