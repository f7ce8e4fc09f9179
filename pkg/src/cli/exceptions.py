from ..exceptions import XCyclicError


class ConfigError(XCyclicError):
    detail = 'Неверные параметры запуска'
    exit_code = 2


class CrossCheckError(XCyclicError):
    detail = 'Независимые способы вычисления дали разные результаты'
    exit_code = 3
