from pydantic_settings import BaseSettings, SettingsConfigDict
from pathlib import Path
from loguru import logger


class LoggerConfig(BaseSettings):
    """Класс конфигурации логирования.

    Загружает настройки из .env файла или переменных окружения.

    Attributes:
        LEVEL: Уровень логирования
        LOG_FILE: Путь к файлу логов (пустое значение отключает файловый вывод)
        ROTATION: При каком условии происходит ротация логов
        COMPRESSION: Формат сжатия логов
        BACKTRACE: Включает подробный трейсбек при ошибках
        DIAGNOSE: Добавляет информацию о переменных в стектрейс
        ENQUEUE: Асинхронная запись логов
        CATCH: Перехватывание исключения
    """
    LEVEL: str = 'WARNING'
    LOG_FILE: str | None = None
    ROTATION: str | None = '10 MB'
    COMPRESSION: str | None = None
    BACKTRACE: bool = False
    DIAGNOSE: bool = False
    ENQUEUE: bool = False
    CATCH: bool = True

    model_config = SettingsConfigDict(
        env_file=Path(__file__).parent.parent / ".env",
        env_file_encoding='utf-8',
        extra="ignore"
    )


class ComputeConfig(BaseSettings):
    """Класс конфигурации вычислительных лимитов.

    Attributes:
        TABLE_CAP: Максимальный порядок поля, для которого строятся таблицы log/antilog
        XCYCLIC_CAP: Максимальное число слов при полном переборе кода
        ORACLE_MAX_DIM: Максимальная размерность mk для оракула размерности
        CHUNK_SIZE: Число сообщений в одном блоке перебора
        SAMPLE_SIZE: Размер выборки для выборочных проверок
        SEED: Зерно генератора случайных чисел
    """
    TABLE_CAP: int = 2 ** 20
    XCYCLIC_CAP: int = 2 ** 24
    ORACLE_MAX_DIM: int = 24
    CHUNK_SIZE: int = 2 ** 15
    SAMPLE_SIZE: int = 10 ** 4
    SEED: int = 0

    model_config = SettingsConfigDict(
        env_file=Path(__file__).parent.parent / ".env",
        env_file_encoding='utf-8',
        extra="ignore"
    )


class Config(BaseSettings):
    """Основной класс конфигурации приложения.

    Загружает настройки из .env файла или переменных окружения.

    Attributes:
        TITLE: Имя проекта
        VERSION: Версия проекта
        DESCRIPTION: Описание проекта
    """
    logger_config: LoggerConfig = LoggerConfig()
    compute_config: ComputeConfig = ComputeConfig()

    TITLE: str = 'xcyclic'
    VERSION: str = '1.0.0'
    DESCRIPTION: str = 'Расширенные циклические коды над GF(q^m): веса, размерности подкодов, оценки расстояния'

    model_config = SettingsConfigDict(
        env_file=Path(__file__).parent.parent / ".env",
        env_file_encoding='utf-8',
        extra="ignore"
    )


try:
    config = Config()
except Exception as e:
    logger.error(f'Во время парсинга .env произошла ошибка: {e}')
    raise
