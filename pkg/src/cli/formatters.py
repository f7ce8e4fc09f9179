import csv
import io
from dataclasses import dataclass, field
from pathlib import Path

from ..schemes import Document
from ..utils import dump_document, write_text
from .schemes import OutputFormat

SUFFIXES = {OutputFormat.TEXT: 'txt', OutputFormat.JSON: 'json', OutputFormat.CSV: 'csv'}


@dataclass
class CommandOutput:
    """Результат подкоманды до сериализации.

    Attributes:
        document: JSON-документ
        text: Текстовое представление
        rows: Строки таблицы для CSV, первая строка - заголовок
        artifacts: Дополнительные файлы (имя -> содержимое) для каталога вывода
        ok: Все перекрестные проверки пройдены
    """
    document: Document
    text: str
    rows: list[list] = field(default_factory=list)
    artifacts: dict[str, str] = field(default_factory=dict)
    ok: bool = True


def table(rows: list[list], header: list[str] | None = None) -> str:
    """Выравнивает строки таблицы по столбцам"""
    rows = [[str(cell) for cell in row] for row in ([header] if header else []) + rows]
    if not rows:
        return ''
    widths = [max(len(row[index]) for row in rows if index < len(row)) for index in range(max(map(len, rows)))]
    return '\n'.join(
        '  '.join(cell.ljust(widths[index]) for index, cell in enumerate(row)).rstrip()
        for row in rows
    )


def to_csv(rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerows(rows)
    return buffer.getvalue()


def render(output: CommandOutput, output_format: OutputFormat) -> str:
    if output_format is OutputFormat.JSON:
        return dump_document(output.document)
    if output_format is OutputFormat.CSV:
        return to_csv(output.rows)
    return output.text if output.text.endswith('\n') else output.text + '\n'


def emit(output: CommandOutput, output_format: OutputFormat, out: Path | None) -> None:
    """Записывает результат в файл или stdout; артефакты кладутся рядом с основным файлом.

    Для ``out``, указывающего на каталог (или без расширения), основной результат
    пишется в ``report.<формат>`` внутри него.
    """
    text = render(output, output_format)
    if out is None:
        write_text(text, None)
        return
    directory = out if out.is_dir() or not out.suffix else out.parent
    target = out if out.suffix else directory / f'report.{SUFFIXES[output_format]}'
    write_text(text, target)
    for name, content in output.artifacts.items():
        write_text(content, directory / name)
