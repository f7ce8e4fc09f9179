from fractions import Fraction

import pytest

from src.bounds.distance import bch_bound, exact_dmin_expanded
from src.bounds.exceptions import LevelTooLargeError
from src.bounds.gcc import gcc_dmin_bound, sak_reference_values
from src.bounds.plotkin import (
    PlotkinQuery,
    PlotkinVariant,
    code_min_distance,
    plotkin_bound,
    plotkin_comparison,
    plotkin_match_check,
)
from src.bounds.schemes import DistanceMethod
from src.bounds.witness import badness_witness, ceil_log2, floor_log2, subfield_weight_witness
from src.cli import golden
from src.subspace.exceptions import PreconditionViolatedError


class TestPlotkin:

    @pytest.mark.parametrize(('N', 'q', 'A', 'expected'), [
        (15, 2, 16, 8),
        (63, 2, 8, 36),
        (3, 2, 2, 3),
        (8, 3, 9, 6),
    ])
    def test_bound(self, N, q, A, expected):
        value, value_floor = plotkin_bound(N, q, A)
        assert value_floor == expected
        assert value == Fraction(N * (q - 1) * A, q * (A - 1))

    def test_bound_requires_two_words(self):
        with pytest.raises(ValueError):
            plotkin_bound(15, 2, 1)
        with pytest.raises(ValueError):
            PlotkinQuery(N=15, q=2, A=1)

    def test_query(self):
        assert PlotkinQuery(N=15, q=2, A=16).bound() == (Fraction(8), 8)

    def test_code_min_distance(self, gf16):
        words = gf16.gf([[0, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 1]])
        assert code_min_distance(words) == 2

    @pytest.mark.parametrize(('variant', 'd_min', 'match'), [
        (PlotkinVariant.CLASS_CODE, 8, True),
        (PlotkinVariant.WITH_X_MINUS_1, 7, True),
        (PlotkinVariant.PUNCTURED_ZERO, 8, True),
    ])
    def test_gf16(self, gf16, variant, d_min, match):
        report = plotkin_comparison(gf16, 2, gf16.element(1), variant)
        assert report.d_min == d_min
        assert report.match is match

    @pytest.mark.parametrize(('variant', 'd_min'), [
        (PlotkinVariant.CLASS_CODE, 6),
        (PlotkinVariant.WITH_X_MINUS_1, 5),
        (PlotkinVariant.PUNCTURED_ZERO, 6),
    ])
    def test_gf9(self, gf9, variant, d_min):
        assert plotkin_comparison(gf9, 3, gf9.element(1), variant).d_min == d_min

    def test_subfield_gamma(self, gf16):
        report = plotkin_comparison(gf16, 2, gf16.element(5), PlotkinVariant.CLASS_CODE)
        assert report.A == 4
        assert report.d_min == 10
        assert plotkin_match_check(gf16, 2, gf16.element(5), PlotkinVariant.CLASS_CODE)
        with pytest.raises(PreconditionViolatedError):
            plotkin_comparison(gf16, 2, gf16.element(5), PlotkinVariant.PUNCTURED_ZERO)


class TestDistance:

    @pytest.mark.parametrize(('roots', 'expected'), [
        ([1, 2, 3, 4], 5),
        ([14, 0, 1], 4),
        ([1, 3, 5], 2),
        ([], 1),
        (range(15), 16),
    ])
    def test_bch_bound(self, roots, expected):
        assert bch_bound(roots, 15) == expected

    def test_exact_dmin(self, power16):
        # каждая из четырех компонент слова кода g(a) - слово кода максимальной длины веса 8
        assert exact_dmin_expanded([1], power16) == 32


class TestGccBound:

    @pytest.mark.parametrize('gammas', list(golden.GF32_BOUNDS))
    def test_gf32_bounds(self, power32, gammas):
        report = gcc_dmin_bound(gammas, power32, exact=True, reference=sak_reference_values()[gammas])
        assert report.bound == golden.GF32_BOUNDS[gammas]
        assert report.bound > report.reference
        assert report.exact
        if power32.m * len(gammas) <= 24:
            assert report.exact_dmin >= report.bound
        else:
            assert report.exact_dmin is None

    def test_levels(self, power32):
        report = gcc_dmin_bound([21, 22], power32)
        assert report.class_sizes == {'a^21': 4}
        assert [level.level for level in report.levels] == [4, 5]
        assert all(level.product == level.level * level.distance for level in report.levels)

    def test_level_too_large(self, power32):
        with pytest.raises(LevelTooLargeError):
            gcc_dmin_bound([21, 22], power32, allow_fallback=False, cap=2)

    def test_bch_fallback(self, power32):
        report = gcc_dmin_bound([21, 22], power32, cap=2)
        assert not report.exact
        assert all(level.method is DistanceMethod.BCH for level in report.levels)

    def test_reference_values(self):
        assert sak_reference_values() == {(21, 22): 48, (21, 22, 23): 48, (18, 19, 20, 21, 22): 36}


class TestWitness:

    @pytest.mark.parametrize(('value', 'expected'), [(Fraction(1), 0), (Fraction(15, 2), 2), (Fraction(8), 3)])
    def test_floor_log2(self, value, expected):
        assert floor_log2(value) == expected

    def test_floor_log2_below_one(self):
        with pytest.raises(ValueError):
            floor_log2(Fraction(1, 2))

    @pytest.mark.parametrize(('value', 'expected'), [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3)])
    def test_ceil_log2(self, value, expected):
        assert ceil_log2(value) == expected

    def test_positive_delta(self):
        report = badness_witness(5, '1/2', 1)
        assert report.k == 3
        assert report.k1 is None
        assert report.weight_bound == 32
        assert 0 < report.weight <= report.weight_bound
        assert report.within_bound

    @pytest.mark.parametrize(('delta', 'k1', 'bound'), [(-1, 1, 32), (-3, 2, 48)])
    def test_negative_delta(self, delta, k1, bound):
        report = badness_witness(5, '1/2', delta)
        assert report.k == 4
        assert report.k1 == k1
        assert report.weight_bound == bound
        assert 0 < report.weight <= report.weight_bound
        assert report.within_bound

    def test_negative_delta_weight(self):
        assert badness_witness(5, '1/2', -1).weight == 32

    @pytest.mark.slow
    def test_gf256(self):
        report = badness_witness(8, '1/2', 1)
        assert report.k == 6
        assert report.weight_bound == 256
        assert report.weight <= report.weight_bound
        assert report.within_bound

    def test_rate_too_small(self):
        with pytest.raises(PreconditionViolatedError):
            badness_witness(5, '1/31', 1)

    def test_subfield_witness(self):
        report = subfield_weight_witness(4)
        assert report.weight == report.expected_weight == 20

    def test_subfield_witness_odd_degree(self):
        with pytest.raises(PreconditionViolatedError):
            subfield_weight_witness(5)
