from pydantic import BaseModel

from ..schemes import Document
from ..basis.schemes import BasisDescriptor
from ..galois_field.schemes import FieldDescriptor


class SelectionDescriptor(BaseModel):
    gamma: str
    offsets: list[int]
    m_gamma: int
    z_set: list[int]


class ClassDimension(BaseModel):
    """Размерность подкода для одного класса сопряженных.

    Attributes:
        selection: Выбранные сопряженные элементы
        dim_gamma: mk - R(Gamma)
        dim_theta: m_gamma (t - R(Theta))
        variant: Вид матрицы Gamma (full, restricted, folded)
    """
    selection: SelectionDescriptor
    dim_gamma: int
    dim_theta: int
    variant: str


class DimensionReport(Document):
    """Размерность подкода подпространства тремя способами.

    Attributes:
        gammas: Показатели gamma
        subbasis: Индексы подбазиса (с единицы)
        dim_gamma: Через ранг матрицы Gamma
        dim_theta: Через ранг матрицы Theta
        dim_oracle: Прямым решением системы на G_e (None, если mk больше лимита)
        agree: Все вычисленные значения совпадают
        classes: Разбиение по классам сопряженных
        witness_codeword: Ненулевое слово подкода в нотации a^k
    """
    field: FieldDescriptor
    q: int
    basis: BasisDescriptor
    gammas: list[int]
    subbasis: str
    dim_gamma: int
    dim_theta: int
    dim_oracle: int | None = None
    agree: bool
    classes: list[ClassDimension] = []
    witness_codeword: str | None = None


class SearchReport(Document):
    gammas: list[int]
    size: int
    candidates: list[BasisDescriptor]
    basis_index: int
    subbasis: str
    dimension: int
