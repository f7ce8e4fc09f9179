from pydantic import BaseModel

from ..schemes import Document


class FieldDescriptor(BaseModel):
    p: int
    n: int
    defining_poly: str
    order: int


class SubfieldDescriptor(BaseModel):
    """Подполе GF(p^s) внутри GF(p^n).

    Attributes:
        s: Степень подполя над простым полем
        order: Число элементов p^s
        exponent_step: (p^n - 1)/(p^s - 1), ненулевые элементы подполя имеют вид a^(k*step)
    """
    s: int
    order: int
    exponent_step: int


class ConjugacyClassInfo(BaseModel):
    exponents: list[int]
    minimal_polynomial: str


class FieldReport(Document):
    field: FieldDescriptor
    q: int
    subfields: list[SubfieldDescriptor]
    classes: list[ConjugacyClassInfo]
