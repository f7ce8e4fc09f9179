"""Эталонные значения для команды repro и тестов."""
from dataclasses import dataclass

from ..galois_field.field import Field

GF16_POLY = 'x^4+x^3+1'
GF16_LISTING: tuple[str, ...] = (
    '111101011001000',
    '011110101100100',
    '100011110101100',
    '001111010110010',
    '110010001111010',
    '010001111010110',
    '101100100011110',
    '111010110010001',
    '000111101011001',
    '100100011110101',
    '011001000111101',
    '110101100100011',
    '001000111101011',
    '101011001000111',
    '010110010001111',
)

GF64_POLY = 'x^6+x^5+1'
GF64_PERIODS: tuple[str, ...] = (
    '1011100',
    '1110010',
    '0101110',
    '0111001',
    '1100101',
    '1001011',
    '0010111',
)
GF64_LISTING: tuple[str, ...] = tuple(period * 9 for period in GF64_PERIODS)

COMPOSITE_BASIS_GF256 = '1,a^17,a^85,a^102,a,a^18,a^86,a^103'
COMPOSITE_SUBBASIS_GF256 = '1,2,3,4,5,7'


@dataclass(frozen=True)
class DimensionCase:
    gammas: tuple[int, ...]
    basis: str | None
    subbasis: str
    expected: int


GF256_DIMENSIONS: tuple[DimensionCase, ...] = (
    DimensionCase((1, 4), COMPOSITE_BASIS_GF256, COMPOSITE_SUBBASIS_GF256, 8),
    DimensionCase((17,), COMPOSITE_BASIS_GF256, COMPOSITE_SUBBASIS_GF256, 4),
    DimensionCase((85,), COMPOSITE_BASIS_GF256, COMPOSITE_SUBBASIS_GF256, 6),
    DimensionCase((1, 4), None, COMPOSITE_SUBBASIS_GF256, 0),
)

GF32_BOUNDS: dict[tuple[int, ...], int] = {
    (21, 22): 64,
    (21, 22, 23): 60,
    (18, 19, 20, 21, 22): 40,
}

GF32_POLY = 'x^5+x^2+1'

_LISTINGS: dict[tuple[int, int, int], tuple[str, ...]] = {
    (2, 4, 14): GF16_LISTING,
    (2, 6, 54): GF64_LISTING,
}


def reference_listing(field: Field, gamma_exponent: int) -> tuple[str, ...] | None:
    """Эталонный список ненулевых слов кода (x^N - 1)/p_gamma(x), если он известен.

    Списки записаны для многочленов GF16_POLY и GF64_POLY; при других задающих
    многочленах совпадение проверяется с точностью до обращения слов.
    """
    return _LISTINGS.get((field.p, field.n, gamma_exponent % field.size))


@dataclass(frozen=True)
class AgreementCase:
    p: int
    n: int
    poly: str | None
    gamma_lists: tuple[tuple[int, ...], ...]
    sampled: bool = False


AGREEMENT_CASES: tuple[AgreementCase, ...] = (
    AgreementCase(2, 4, None, ((1,), (3,), (5,), (1, 2), (1, 3), (1, 4))),
    AgreementCase(2, 5, GF32_POLY, ((1,), (5,), (1, 3), (21, 22))),
    AgreementCase(2, 6, None, ((1,), (9,), (21,), (1, 3))),
    AgreementCase(3, 2, None, ((1,), (2,), (4,), (1, 3), (1, 5))),
    AgreementCase(2, 8, None, ((1,), (17,), (85,), (1, 4)), sampled=True),
)
AGREEMENT_SAMPLES = 16
