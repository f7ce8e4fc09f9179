"""Нижняя граница минимального расстояния разложенного кода через каскадное разбиение по уровням."""
from typing import Iterable

from loguru import logger

from ..basis.basis import Basis
from ..config import config
from ..cyclic.code import code_from_gammas, generator_polynomial
from ..cyclic.exceptions import ZeroDimensionError
from ..cyclic.matrices import subfield_code_generator
from ..galois_field.conjugacy import exponent_class
from ..galois_field.exceptions import TooLargeError
from ..galois_field.linalg import min_nonzero_weight
from ..galois_field.notation import format_element
from ..subspace.search import minimal_representing_size
from ..subspace.selection import selections_from_gammas
from .distance import bch_bound, exact_dmin_expanded
from .exceptions import LevelTooLargeError
from .schemes import BoundReport, DistanceMethod, LevelReport

SAK_REFERENCE: dict[tuple[int, ...], int] = {
    (21, 22): 48,
    (21, 22, 23): 48,
    (18, 19, 20, 21, 22): 36,
}


def sak_reference_values() -> dict[tuple[int, ...], int]:
    """Известные ранее значения границы для кодов GF(2^5) с x^5+x^2+1"""
    return dict(SAK_REFERENCE)


def _level_distance(
        classes: list[tuple[int, ...]],
        basis: Basis,
        allow_fallback: bool,
        cap: int | None,
) -> tuple[list[int], int, int, DistanceMethod]:
    field, q = basis.field, basis.q
    members = [exponent for orbit in classes for exponent in orbit]
    spec = code_from_gammas(field, members, q)
    dimension = spec.K
    cap = cap or config.compute_config.XCYCLIC_CAP
    if q ** dimension <= cap:
        generator = subfield_code_generator(generator_polynomial(spec), dimension, spec.N)
        distance = min_nonzero_weight(field, generator, q, cap)
        return list(spec.gamma_set), dimension, distance, DistanceMethod.EXACT
    if not allow_fallback:
        raise LevelTooLargeError(f'Код уровня размерности {dimension}: {q}^{dimension} больше лимита {cap}')
    logger.warning(f'Код уровня размерности {dimension} слишком велик, используется граница БЧХ')
    return list(spec.gamma_set), dimension, bch_bound(spec.roots, spec.N), DistanceMethod.BCH


def gcc_dmin_bound(
        gamma_exponents: Iterable[int],
        basis: Basis,
        allow_fallback: bool = True,
        exact: bool = False,
        reference: int | None = None,
        cap: int | None = None,
) -> BoundReport:
    """Граница d_min >= min_i i d^(i) для разложения кода G_e(gamma_1, ..., gamma_k).

    Алгоритм работы:
    1. Разбивает gamma по классам сопряженных и для каждого класса находит
       наименьший размер подбазиса l, по которому есть ненулевое слово
    2. Уровень i содержит классы с l <= i; код уровня порожден
       (x^N - 1)/prod p_(gamma^-1)(x) по всем классам уровня
    3. d^(i) - точное минимальное расстояние кода уровня полным перебором над GF(q)
       или граница БЧХ, если перебор превышает лимит
    4. Граница равна минимуму i d^(i) по непустым уровням

    Args:
        gamma_exponents: Показатели gamma
        basis: Базис разложения
        allow_fallback: Разрешить границу БЧХ вместо точного значения
        exact: Дополнительно вычислить точное d_min разложенного кода
        reference: Значение известной ранее границы для отчета
        cap: Лимит перебора (по умолчанию XCYCLIC_CAP)

    Returns:
        Отчет по уровням

    Raises:
        ZeroDimensionError: Пустой список gamma
        LevelTooLargeError: Перебор уровня невозможен, а граница БЧХ запрещена
    """
    gamma_exponents = [int(e) % basis.field.size for e in gamma_exponents]
    if not gamma_exponents:
        raise ZeroDimensionError('Список gamma пуст')
    field, q = basis.field, basis.q
    selections = selections_from_gammas(field, gamma_exponents, q)
    sizes = [minimal_representing_size(selection, basis) for selection in selections]
    for selection, size in zip(selections, sizes):
        logger.info(f'{selection}: минимальный подбазис {size}')

    levels, cache = [], {}
    for level in range(1, basis.m + 1):
        classes = [
            exponent_class(selection.gamma_exponent, q, field.size)
            for selection, size in zip(selections, sizes)
            if size <= level
        ]
        if not classes:
            continue
        key = tuple(classes)
        if key not in cache:
            cache[key] = _level_distance(classes, basis, allow_fallback, cap)
        nonzeros, dimension, distance, method = cache[key]
        levels.append(LevelReport(
            level=level,
            classes=[list(orbit) for orbit in classes],
            nonzeros=nonzeros,
            dimension=dimension,
            distance=distance,
            product=level * distance,
            method=method,
        ))

    bound = min(level.product for level in levels)
    exact_dmin = None
    if exact:
        try:
            exact_dmin = exact_dmin_expanded(gamma_exponents, basis, cap)
        except TooLargeError as e:
            logger.warning(f'Точное d_min не вычислено: {e.detail}')

    return BoundReport(
        field=field.descriptor(),
        q=q,
        basis=basis.descriptor(),
        gammas=gamma_exponents,
        class_sizes={
            format_element(field, selection.gamma): size for selection, size in zip(selections, sizes)
        },
        levels=levels,
        bound=bound,
        exact=all(level.method is DistanceMethod.EXACT for level in levels),
        exact_dmin=exact_dmin,
        reference=reference,
    )
