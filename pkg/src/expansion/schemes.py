from pydantic import BaseModel

from ..schemes import Document
from ..basis.schemes import BasisDescriptor
from ..bounds.schemes import PlotkinReport
from ..cyclic.schemes import CodeSpecDescriptor
from ..galois_field.schemes import FieldDescriptor


class ExpandedReport(Document):
    """Развернутые матрицы кода над GF(q).

    Attributes:
        generator: Строки G_e цифрами (mK x mN)
        parity: Строки H_e цифрами (mR x mN)
        generator_rank: Ранг G_e над GF(q)
        parity_density: Доля ненулевых элементов H_e
        orthogonal: Результат проверки G_e H_e^T = 0 (если запрошена)
    """
    field: FieldDescriptor
    code: CodeSpecDescriptor
    basis: BasisDescriptor
    generator: list[str] | None = None
    parity: list[str] | None = None
    generator_rank: int | None = None
    parity_density: float | None = None
    orthogonal: bool | None = None


class CodebookRow(BaseModel):
    message: list[int]
    symbol_codeword: str
    expanded_codeword: str | None = None
    weight: int


class ConstantWeightReport(Document):
    """Проверка кода постоянного веса (x^N - 1)/p_gamma(x) над GF(q).

    Attributes:
        gamma: Элемент gamma в нотации a^k
        m_gamma: Минимальная размерность gamma
        codewords: Число слов q^(m_gamma)
        weights: Различные веса ненулевых слов
        expected_weight: Вес по формуле q^(m_gamma-1)(q-1)(q^m-1)/(q^(m_gamma)-1)
        element_counts: Число вхождений каждого элемента GF*(q) (одинаково для всех слов)
        expected_count: Ожидаемое число вхождений
        period: Период слов q^(m_gamma) - 1
        periodic: Все слова периодичны с этим периодом
        listing_match: Сравнение с эталонным списком слов, если он известен
        plotkin: Сравнение с границей Плоткина
        rows: Список слов
    """
    field: FieldDescriptor
    q: int
    gamma: str
    m_gamma: int
    codewords: int
    weights: list[int]
    expected_weight: int
    constant: bool
    element_counts: dict[str, list[int]]
    expected_count: int
    counts_match: bool
    period: int
    periodic: bool
    listing_match: str | None = None
    plotkin: list[PlotkinReport] = []
    rows: list[CodebookRow] = []
