from ..exceptions import XCyclicError


class BasisError(XCyclicError):
    detail = 'Ошибка построения базиса'
    exit_code = 2


class LinearlyDependentError(BasisError):
    detail = 'Элементы базиса линейно зависимы над подполем'


class WrongCountError(BasisError):
    detail = 'Число элементов базиса не равно степени расширения'


class NotSubfieldElementError(BasisError):
    detail = 'Элемент не принадлежит подполю'


class EmptySubbasisError(BasisError):
    detail = 'Подбазис должен содержать хотя бы один элемент'


class SubbasisIndexError(BasisError):
    detail = 'Индекс подбазиса вне диапазона'
