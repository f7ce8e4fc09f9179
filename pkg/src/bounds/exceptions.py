from ..exceptions import XCyclicError, CapExceededError


class BoundsError(XCyclicError):
    detail = 'Ошибка вычисления границы'


class LevelTooLargeError(CapExceededError):
    detail = 'Уровень каскадной конструкции слишком велик для перебора'


class NoWitnessFoundError(BoundsError):
    detail = 'Слово малого веса не найдено'
