class XCyclicError(Exception):
    """Базовое исключение библиотеки xcyclic.

    Аналог HTTP-исключения: несет человекочитаемое описание ``detail``
    и код завершения ``exit_code``, который возвращает CLI.

    Attributes:
        detail: Описание ошибки
        exit_code: Код завершения процесса
    """
    detail: str = 'Ошибка вычислений'
    exit_code: int = 1

    def __init__(self, detail: str | None = None, exit_code: int | None = None):
        if detail is not None:
            self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(self.detail)


class CapExceededError(XCyclicError):
    """Объем перебора превышает настроенный лимит"""
    detail = 'Превышен лимит полного перебора'
    exit_code = 4
