from typing import Iterable

from loguru import logger

from ..basis.basis import Basis
from ..cyclic.code import code_from_gammas
from ..expansion.expanded import expand_generator
from ..galois_field.linalg import min_nonzero_weight


def bch_bound(roots: Iterable[int], length: int) -> int:
    """Граница БЧХ: длина самой длинной циклической серии подряд идущих показателей корней плюс 1"""
    root_set = {int(e) % length for e in roots}
    if not root_set:
        return 1
    if len(root_set) == length:
        return length + 1
    longest = 0
    for start in root_set:
        if (start - 1) % length in root_set:
            continue
        run = 0
        while (start + run) % length in root_set:
            run += 1
        longest = max(longest, run)
    return longest + 1


def exact_dmin_expanded(gamma_exponents: Iterable[int], basis: Basis, cap: int | None = None) -> int:
    """Минимальный вес ненулевого слова разложенного кода над GF(q) полным перебором.

    Raises:
        ZeroDimensionError: Пустой список gamma
        TooLargeError: q^(mk) больше лимита перебора
    """
    spec = code_from_gammas(basis.field, gamma_exponents, basis.q)
    generator = expand_generator(spec, basis)
    weight = min_nonzero_weight(basis.field, generator.entries, basis.q, cap)
    logger.info(f'Точное минимальное расстояние разложения {spec}: {weight}')
    return weight
