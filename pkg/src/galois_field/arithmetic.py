from enum import Enum

import galois

from .exceptions import DivideByZeroError, FieldMismatchError


class ArithOp(str, Enum):
    ADD = 'add'
    SUB = 'sub'
    MUL = 'mul'
    DIV = 'div'
    POW = 'pow'
    INV = 'inv'


def arith(a: galois.FieldArray, b: galois.FieldArray | int | None, op: ArithOp) -> galois.FieldArray:
    """Арифметика элементов одного поля.

    Для ``POW`` аргумент ``b`` - целый показатель (берется по модулю p^n - 1
    для ненулевого основания), для ``INV`` аргумент ``b`` не используется.

    Args:
        a: Первый операнд
        b: Второй операнд или показатель степени
        op: Операция

    Returns:
        Результат операции

    Raises:
        DivideByZeroError: Деление на ноль или обращение нуля
        FieldMismatchError: Операнды из разных полей
    """
    if op is ArithOp.INV:
        if int(a) == 0:
            raise DivideByZeroError('Обращение нулевого элемента')
        return a ** -1

    if op is ArithOp.POW:
        exponent = int(b)
        if int(a) == 0:
            if exponent < 0:
                raise DivideByZeroError('Отрицательная степень нулевого элемента')
            return a ** exponent
        return a ** (exponent % (type(a).order - 1))

    if type(a) is not type(b):
        raise FieldMismatchError(f'Операнды из разных полей: {type(a).__name__} и {type(b).__name__}')

    match op:
        case ArithOp.ADD:
            return a + b
        case ArithOp.SUB:
            return a - b
        case ArithOp.MUL:
            return a * b
        case ArithOp.DIV:
            if int(b) == 0:
                raise DivideByZeroError('Деление на нулевой элемент')
            return a / b
