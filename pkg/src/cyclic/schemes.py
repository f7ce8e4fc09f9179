from pydantic import BaseModel

from ..schemes import Document
from ..galois_field.schemes import FieldDescriptor


class CodeSpecDescriptor(BaseModel):
    p: int
    n: int
    q: int
    roots: list[int]


class CodeReport(Document):
    """Символьные матрицы кода.

    Attributes:
        code: Описание кода
        N: Длина
        K: Размерность
        generator_polynomial: Порождающий многочлен G(x)
        generator: Строки K x N в нотации a^k
        parity: Строки R x N в нотации a^k
        orthogonal: Результат проверки G H^T = 0 (если запрошена)
    """
    field: FieldDescriptor
    code: CodeSpecDescriptor
    N: int
    K: int
    generator_polynomial: str
    generator: list[str] | None = None
    parity: list[str] | None = None
    orthogonal: bool | None = None
