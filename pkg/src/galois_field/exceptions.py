from ..exceptions import XCyclicError, CapExceededError


class FieldError(XCyclicError):
    detail = 'Ошибка арифметики конечного поля'


class InvalidFieldError(FieldError):
    """Недопустимые параметры поля (p не простое, n < 1, неверная степень многочлена)"""
    detail = 'Недопустимые параметры поля'
    exit_code = 2


class NotIrreducibleError(FieldError):
    detail = 'Задающий многочлен не является неприводимым'
    exit_code = 2


class NotPrimitiveError(FieldError):
    detail = 'Задающий многочлен не является примитивным'
    exit_code = 2


class TooLargeError(CapExceededError):
    detail = 'Порядок поля или объем перебора превышает лимит'


class DivideByZeroError(FieldError):
    detail = 'Деление на ноль'


class ZeroElementError(FieldError):
    detail = 'Операция не определена для нулевого элемента'


class FieldMismatchError(FieldError):
    detail = 'Элементы принадлежат разным полям'


class NoSuchSubfieldError(FieldError):
    detail = 'Поле не содержит подполя заданного порядка'
    exit_code = 2


class ElementFormatError(FieldError):
    detail = 'Неверная запись элемента или многочлена'
    exit_code = 2
