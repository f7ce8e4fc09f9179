from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, model_validator

from ..config import config
from ..schemes import Document


class OutputFormat(str, Enum):
    TEXT = 'text'
    JSON = 'json'
    CSV = 'csv'


class RunConfig(BaseModel):
    """Параметры одного запуска CLI.

    Общие флаги разбираются в поля модели, параметры подкоманды - в ``options``.
    Лимит перебора выше значения по умолчанию требует флага ``--allow-large``.
    """
    command: str = Field(description='Подкоманда')
    p: int = Field(default=2, ge=2, description='Характеристика поля')
    n: int = Field(default=4, ge=1, description='Степень поля над GF(p)')
    poly: str | None = Field(default=None, description='Задающий многочлен, например x^4+x+1')
    q: int | None = Field(default=None, description='Порядок базового подполя, по умолчанию p')
    basis: str | None = Field(default=None, description='Базис через запятую в нотации a^k')
    subbasis: str | None = Field(default=None, description='Индексы подбазиса с единицы')
    gammas: str | None = Field(default=None, description='Показатели gamma через запятую')
    output_format: OutputFormat = Field(default=OutputFormat.TEXT, description='Формат вывода')
    out: Path | None = Field(default=None, description='Файл или каталог вывода')
    cap: int = Field(default_factory=lambda: config.compute_config.XCYCLIC_CAP, ge=1)
    allow_large: bool = False
    verify: bool = False
    seed: int = Field(default_factory=lambda: config.compute_config.SEED)
    log_level: str | None = None
    options: dict[str, Any] = {}

    @model_validator(mode='after')
    def check_cap(self) -> 'RunConfig':
        default = config.compute_config.XCYCLIC_CAP
        if self.cap > default and not self.allow_large:
            raise ValueError(f'Лимит {self.cap} больше {default}, нужен флаг --allow-large')
        return self

    @property
    def base_order(self) -> int:
        return self.q or self.p


class ReproCheck(BaseModel):
    """Результат одной эталонной проверки.

    Attributes:
        name: Имя проверки
        expected: Ожидаемое значение
        actual: Полученное значение
        ok: Значения совпадают
    """
    name: str
    expected: Any
    actual: Any
    ok: bool


class ReproReport(Document):
    checks: list[ReproCheck]
    passed: int
    failed: int
    artifacts: list[str] = []
