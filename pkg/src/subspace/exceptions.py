from ..basis.exceptions import EmptySubbasisError
from ..exceptions import XCyclicError
from ..galois_field.exceptions import TooLargeError

__all__ = [
    'SubspaceError',
    'PreconditionViolatedError',
    'InvalidSelectionError',
    'EmptyExclusionError',
    'EmptySubbasisError',
    'OracleTooLargeError',
    'NoSuchCodewordError',
]


class SubspaceError(XCyclicError):
    detail = 'Ошибка вычисления подкода подпространства'


class PreconditionViolatedError(SubspaceError):
    detail = 'Нарушено предусловие вычисления'
    exit_code = 2


class InvalidSelectionError(SubspaceError):
    detail = 'Недопустимый набор сопряженных элементов'
    exit_code = 2


class EmptyExclusionError(SubspaceError):
    detail = 'Матрица Gamma не определена для пустого набора исключенных индексов'
    exit_code = 2


class OracleTooLargeError(TooLargeError):
    detail = 'Размерность mk превышает лимит прямого вычисления'


class NoSuchCodewordError(SubspaceError):
    detail = 'Слово с заданным минимальным подбазисом не найдено'
