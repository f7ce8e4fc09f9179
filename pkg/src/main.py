import sys
from pathlib import Path

from loguru import logger
from pydantic import ValidationError

from src.cli.commands import run_command
from src.cli.exceptions import ConfigError, CrossCheckError
from src.cli.formatters import emit
from src.cli.parser import build_parser, split_namespace
from src.cli.schemes import OutputFormat, RunConfig
from src.exceptions import XCyclicError
from src.log import setup_logger
from src.schemes import ErrorReport
from src.utils import dump_document, write_text


def parse_run_config(argv: list[str] | None = None) -> RunConfig:
    """Разбирает аргументы командной строки в параметры запуска.

    Raises:
        ConfigError: Параметры не прошли проверку
    """
    namespace = build_parser().parse_args(argv)
    data = split_namespace(namespace)
    if data.get('out') is not None:
        data['out'] = Path(data['out'])
    try:
        return RunConfig(**data)
    except ValidationError as e:
        raise ConfigError('; '.join(error['msg'] for error in e.errors()))


def main(argv: list[str] | None = None) -> int:
    """Точка входа CLI.

    Алгоритм работы:
    1. Разбирает аргументы в RunConfig и настраивает логгер
    2. Выполняет подкоманду и записывает результат в выбранном формате
    3. Возвращает 0, если все перекрестные проверки пройдены
    4. Ошибки библиотеки переводятся в их код завершения, прочие - в 1;
       в формате JSON ошибка дополнительно выводится документом ErrorReport

    Args:
        argv: Аргументы без имени программы (по умолчанию sys.argv[1:])

    Returns:
        Код завершения
    """
    setup_logger()
    run = None
    try:
        run = parse_run_config(argv)
        setup_logger(run.log_level)
        output = run_command(run)
        emit(output, run.output_format, run.out)
        if not output.ok:
            raise CrossCheckError()
    except XCyclicError as e:
        logger.error(f'{type(e).__name__}: {e.detail}')
        if run is not None and run.output_format is OutputFormat.JSON and not isinstance(e, CrossCheckError):
            write_text(dump_document(ErrorReport(detail=e.detail)), None)
        return e.exit_code
    except Exception as e:
        logger.exception(f'Во время выполнения команды произошла ошибка: {e}')
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
