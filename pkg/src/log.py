import logging
import sys
from loguru import logger

from .config import config


class InterceptHandler(logging.Handler):
    """Обработчик для перехвата стандартных логов Python и перенаправления их в Loguru.

    Methods:
        emit: Перехватывает и обрабатывает каждое лог-сообщение.
    """
    def emit(self, record):
        """Перехватывает лог-запись и перенаправляет ее в Loguru.

        Args:
            record (logging.LogRecord): Запись лога из стандартной библиотеки logging
        """
        # Получаем соответствующий уровень логирования Loguru
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # Ищем место вызова для правильной глубины стека
        frame, depth = logging.currentframe(), 2
        while frame.f_back and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(
            level, record.getMessage()
        )


def setup_logger(level: str | None = None) -> None:
    """Настраивает систему логирования приложения.

    Алгоритм работы:
    1. Удаляет обработчики loguru и стандартного logging
    2. Перенаправляет стандартное логирование (numba, galois) в loguru
    3. Добавляет вывод в stderr с уровнем из аргумента или конфигурации
    4. При заданном LOG_FILE добавляет файловый вывод с ротацией

    Args:
        level: Уровень логирования, перекрывающий значение из конфигурации
    """
    logger_config = config.logger_config
    level = (level or logger_config.LEVEL).upper()

    logger.remove()
    for handler in logging.root.handlers[:]:
        logging.root.removeHandler(handler)

    # Перехватываем стандартное логирование
    logging.basicConfig(handlers=[InterceptHandler()], level=logging.WARNING)

    # Настраиваем логирование для внешних библиотек
    for logger_name in ("numba", "galois"):
        logging_logger = logging.getLogger(logger_name)
        logging_logger.handlers = []
        logging_logger.propagate = True

    logger.add(
        sys.stderr,
        level=level,
        backtrace=logger_config.BACKTRACE,
        diagnose=logger_config.DIAGNOSE,
        catch=logger_config.CATCH,
    )

    if logger_config.LOG_FILE:
        logger.add(
            logger_config.LOG_FILE,
            rotation=logger_config.ROTATION,
            level=level,
            backtrace=logger_config.BACKTRACE,
            diagnose=logger_config.DIAGNOSE,
            enqueue=logger_config.ENQUEUE,
            catch=logger_config.CATCH,
            compression=logger_config.COMPRESSION,
        )
