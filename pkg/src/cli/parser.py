import argparse

from ..config import config
from .schemes import OutputFormat

GLOBAL_OPTIONS = (
    'p', 'n', 'poly', 'q', 'basis', 'subbasis', 'gammas', 'output_format',
    'out', 'cap', 'allow_large', 'verify', 'seed', 'log_level',
)


def _global_parser() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group('общие параметры')
    group.add_argument('-p', type=int, default=2, help='Характеристика поля')
    group.add_argument('-n', type=int, default=4, help='Степень поля над GF(p)')
    group.add_argument('-q', type=int, default=None, help='Порядок базового подполя (по умолчанию p)')
    group.add_argument('--poly', default=None, help='Задающий многочлен, например "x^4+x+1"')
    group.add_argument('--basis', default=None, help='Базис через запятую, например "1,a^5,a,a^6"')
    group.add_argument('--subbasis', default=None, help='Индексы подбазиса с единицы, например "1,2,4"')
    group.add_argument('--gammas', default=None, help='Показатели gamma через запятую, например "21,22"')
    group.add_argument(
        '--format',
        dest='output_format',
        choices=[item.value for item in OutputFormat],
        default=OutputFormat.TEXT.value,
        help='Формат вывода',
    )
    group.add_argument('--out', default=None, help='Файл (или каталог для repro) для результатов')
    group.add_argument(
        '--cap',
        type=int,
        default=config.compute_config.XCYCLIC_CAP,
        help='Лимит числа слов полного перебора',
    )
    group.add_argument('--allow-large', action='store_true', help='Разрешить лимит выше значения по умолчанию')
    group.add_argument('--verify', action='store_true', help='Выполнить перекрестные проверки')
    group.add_argument('--seed', type=int, default=config.compute_config.SEED, help='Зерно случайных проверок')
    group.add_argument('--log-level', default=None, help='Уровень логирования (DEBUG, INFO, WARNING)')
    return parent


def _add_code_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument('--roots', default=None, help='Показатели корней G(x) через запятую')
    source.add_argument(
        '--rs',
        nargs=2,
        type=int,
        metavar=('DELTA', 'R'),
        default=None,
        help='Код Рида-Соломона с корнями a^delta, ..., a^(delta+R-1)',
    )
    source.add_argument('--class-gamma', default=None, help='Код (x^N - 1)/p_gamma(x), gamma в нотации a^k')
    parser.add_argument('--with-one', action='store_true', help='Для --class-gamma: дополнительно разделить на x - 1')
    parser.add_argument(
        '--matrix',
        choices=['generator', 'parity', 'both'],
        default='both',
        help='Какие матрицы выводить',
    )


def build_parser() -> argparse.ArgumentParser:
    """Парсер командной строки с подкомандами.

    Общие флаги принимаются после имени подкоманды.
    """
    parent = _global_parser()
    parser = argparse.ArgumentParser(
        prog='xcyclic',
        description=f'{config.TITLE} {config.VERSION}: {config.DESCRIPTION}',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    sub.add_parser('field', parents=[parent], help='Поле, подполя, классы сопряженных и минимальные многочлены')

    p_code = sub.add_parser('code', parents=[parent], help='Символьные матрицы G и H циклического кода')
    _add_code_source(p_code)

    p_expand = sub.add_parser('expand', parents=[parent], help='Развернутые матрицы G_e и H_e над GF(q)')
    _add_code_source(p_expand)
    p_expand.add_argument('--symbol', action='store_true', help='Символьная форма вместо полного разложения')

    p_cw = sub.add_parser('cw', parents=[parent], help='Проверка кода постоянного веса (x^N - 1)/p_gamma(x)')
    p_cw.add_argument('--gamma', default='a^-1', help='Элемент gamma в нотации a^k')
    p_cw.add_argument('--expanded', action='store_true', help='Добавить разложение слов по базису')

    p_subdim = sub.add_parser('subdim', parents=[parent], help='Размерность подкода подпространства')
    p_subdim.add_argument(
        '--selection',
        default=None,
        help='Запись "gamma=a^17;offsets=0,1;basis=1,a^5,a,a^6;include=1,2"',
    )
    p_subdim.add_argument('--search', type=int, default=None, metavar='T', help='Поиск лучшего подбазиса из T элементов')

    p_dmin = sub.add_parser('dmin', parents=[parent], help='Нижняя граница минимального расстояния')
    p_dmin.add_argument('--exact', action='store_true', help='Точное d_min полным перебором')
    p_dmin.add_argument('--no-fallback', action='store_true', help='Запретить границу БЧХ для уровней')
    p_dmin.add_argument('--reference', type=int, default=None, help='Известное ранее значение границы')
    p_dmin.add_argument(
        '--witness',
        nargs=3,
        metavar=('M', 'R', 'DELTA'),
        default=None,
        help='Слово малого веса разложения RS-кода GF(2^M) скорости R',
    )
    p_dmin.add_argument('--subfield-witness', type=int, default=None, metavar='M', help='Вес g(a^(N/3)) в GF(2^M)')

    p_repro = sub.add_parser('repro', parents=[parent], help='Все эталонные примеры с отчетом')
    p_repro.add_argument('--skip-slow', action='store_true', help='Пропустить примеры в GF(2^8)')

    return parser


def split_namespace(namespace: argparse.Namespace) -> dict:
    """Разделяет разобранные аргументы на общие поля RunConfig и ``options`` подкоманды"""
    values = vars(namespace)
    data = {key: values[key] for key in GLOBAL_OPTIONS if key in values}
    data['command'] = values['command']
    data['options'] = {
        key: value for key, value in values.items()
        if key not in GLOBAL_OPTIONS and key != 'command'
    }
    return data
