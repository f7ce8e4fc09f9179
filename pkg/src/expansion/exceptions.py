from ..exceptions import XCyclicError


class ExpansionError(XCyclicError):
    detail = 'Ошибка разложения кода по базису'
    exit_code = 2


class BasisMismatchError(ExpansionError):
    detail = 'Базис построен для другого поля или подполя'


class ComponentIndexError(ExpansionError):
    detail = 'Индекс компоненты вне диапазона базиса'
