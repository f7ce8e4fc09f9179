from enum import Enum

from pydantic import BaseModel

from ..schemes import Document
from ..basis.schemes import BasisDescriptor
from ..galois_field.schemes import FieldDescriptor


class DistanceMethod(str, Enum):
    EXACT = 'exact-brute-force'
    BCH = 'bch-lower-bound'


class PlotkinReport(BaseModel):
    """Сравнение минимального расстояния с границей Плоткина.

    Attributes:
        variant: Вариант кода (class-code, with-x-minus-1, punctured-zero)
        N: Длина
        A: Число слов
        d_min: Минимальное расстояние полным перебором
        bound: Граница N(q-1)A/(q(A-1)) в виде дроби
        bound_floor: Целая часть границы
        match: d_min равно целой части границы
    """
    variant: str
    N: int
    A: int
    d_min: int
    bound: str
    bound_floor: int
    match: bool


class LevelReport(BaseModel):
    """Уровень i каскадной конструкции.

    Attributes:
        level: Размер подбазиса i
        classes: Классы сопряженных с минимальным подбазисом не больше i
        nonzeros: Показатели ненулевых элементов спектра кода уровня
        dimension: K_i
        distance: d^(i)
        product: i d^(i)
        method: Точное значение или нижняя граница БЧХ
    """
    level: int
    classes: list[list[int]]
    nonzeros: list[int]
    dimension: int
    distance: int
    product: int
    method: DistanceMethod


class BoundReport(Document):
    """Нижняя граница минимального расстояния разложенного кода.

    Attributes:
        gammas: Показатели gamma
        class_sizes: Минимальный размер подбазиса по классам
        levels: Непустые уровни
        bound: min i d^(i)
        exact: Только точные значения d^(i)
        exact_dmin: Минимальный вес разложенного кода полным перебором
        reference: Значение известной ранее границы для сравнения
    """
    field: FieldDescriptor
    q: int
    basis: BasisDescriptor
    gammas: list[int]
    class_sizes: dict[str, int]
    levels: list[LevelReport]
    bound: int
    exact: bool
    exact_dmin: int | None = None
    reference: int | None = None


class WitnessReport(Document):
    """Слово малого веса двоичного разложения кода Рида-Соломона.

    Attributes:
        m: Степень поля
        rate: Скорость r
        delta: Смещение корней
        k: floor(log2(rN - delta)) (для delta < 0 - k_2)
        k1: ceil(log2(1 - delta)) для delta < 0
        support_size: Размер подбазиса, на котором лежит слово
        weight: Вес слова над GF(2)
        weight_bound: (m - k) 2^(m-1), для delta < 0 - (m - k_2 + k_1) 2^(m-1)
        within_bound: weight <= weight_bound
        tight_weight_bound: (m - (k_2 + k_1)) 2^(m-1) для delta < 0
        tight_satisfied: Слово удовлетворяет и более сильной оценке
        ratio: weight / (m N)
        codeword: Символьное слово в нотации a^k
    """
    m: int
    rate: str
    delta: int
    N: int
    K: int
    k: int
    k1: int | None = None
    support: list[int]
    support_size: int
    weight: int
    weight_bound: int
    within_bound: bool
    tight_weight_bound: int | None = None
    tight_satisfied: bool | None = None
    ratio: float
    codeword: str


class SubfieldWitnessReport(Document):
    m: int
    basis: BasisDescriptor
    gamma: str
    weight: int
    expected_weight: int
