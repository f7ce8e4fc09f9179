from ..exceptions import XCyclicError
from ..galois_field.exceptions import ZeroElementError

__all__ = [
    'CyclicCodeError',
    'DuplicateRootError',
    'InvalidRootError',
    'NotDivisorError',
    'ZeroDimensionError',
    'ZeroElementError',
    'LengthMismatchError',
]


class CyclicCodeError(XCyclicError):
    detail = 'Ошибка построения циклического кода'
    exit_code = 2


class DuplicateRootError(CyclicCodeError):
    detail = 'Корни порождающего многочлена должны быть различны'


class InvalidRootError(CyclicCodeError):
    detail = 'Показатель корня вне диапазона [0, N)'


class NotDivisorError(CyclicCodeError):
    detail = 'Многочлен не делит x^N - 1'


class ZeroDimensionError(CyclicCodeError):
    detail = 'Код нулевой размерности не допускается'


class LengthMismatchError(CyclicCodeError):
    detail = 'Длина вектора не совпадает с параметрами кода'
