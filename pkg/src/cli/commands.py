"""Подкоманды CLI: построение данных, перекрестные проверки и подготовка вывода."""
from typing import Callable, Iterable, Sequence

import numpy as np
from loguru import logger

from ..basis.basis import Basis, make_subbasis, parse_basis, power_basis
from ..bounds.gcc import gcc_dmin_bound, sak_reference_values
from ..bounds.plotkin import PlotkinVariant, plotkin_comparison
from ..bounds.witness import badness_witness, subfield_weight_witness
from ..config import config
from ..cyclic.code import (
    CyclicCodeSpec,
    class_code,
    code_from_gammas,
    code_from_roots,
    generator_polynomial,
    reed_solomon_code,
)
from ..cyclic.matrices import generator_matrix, parity_check_matrix
from ..expansion.codebook import ListingMatch, constant_weight_codebook, constant_weight_report
from ..expansion.expanded import ExpansionForm, expand_generator, expand_parity, expand_word, parity_density
from ..expansion.schemes import ExpandedReport
from ..galois_field.conjugacy import conjugacy_classes, minimal_polynomial, subfield_lattice
from ..galois_field.exceptions import TooLargeError
from ..galois_field.field import Field, build_field
from ..galois_field.notation import format_elements, format_poly, parse_element
from ..galois_field.schemes import ConjugacyClassInfo, FieldReport
from ..cyclic.schemes import CodeReport
from ..subspace.gamma import dim_via_gamma, gamma_matrix, gamma_witnesses
from ..subspace.oracle import dim_bruteforce, proper_support_codewords
from ..subspace.schemes import ClassDimension, DimensionReport, SearchReport
from ..subspace.search import best_subbasis_search, tower_bases
from ..subspace.selection import parse_selection, selections_from_gammas
from ..subspace.theta import dim_via_theta
from ..utils import format_index_list, parse_index_list, parse_int_list
from . import golden
from .exceptions import ConfigError
from .formatters import CommandOutput, table
from .schemes import ReproCheck, ReproReport, RunConfig


def _field(run: RunConfig) -> Field:
    field = build_field(run.p, run.n, run.poly)
    field.subfield_degree(run.base_order)
    return field


def _basis(run: RunConfig, field: Field) -> Basis:
    if run.basis:
        return parse_basis(field, run.basis, run.base_order)
    return power_basis(field, run.base_order)


def _gammas(run: RunConfig) -> list[int]:
    if not run.gammas:
        raise ConfigError('Не задан список --gammas')
    try:
        return list(parse_int_list(run.gammas))
    except ValueError as e:
        raise ConfigError(f'Неверный список --gammas: {e}')


def _code_spec(run: RunConfig, field: Field) -> CyclicCodeSpec:
    """Код по одному из источников: --roots, --rs, --class-gamma или --gammas"""
    options, q = run.options, run.base_order
    if options.get('roots'):
        return code_from_roots(field, parse_int_list(options['roots']), q)
    if options.get('rs'):
        delta, redundancy = options['rs']
        return reed_solomon_code(field, q, delta, redundancy)
    if options.get('class_gamma'):
        return class_code(field, q, parse_element(field, options['class_gamma']), options.get('with_one', False))
    if run.gammas:
        return code_from_gammas(field, _gammas(run), q)
    raise ConfigError('Код не задан: нужен один из флагов --roots, --rs, --class-gamma, --gammas')


def _orthogonal(generator, parity) -> bool:
    return not np.any(generator @ parity.T)


def cmd_field(run: RunConfig) -> CommandOutput:
    """Поле, решетка подполей и классы сопряженных с минимальными многочленами"""
    field, q = _field(run), run.base_order
    classes = [
        ConjugacyClassInfo(
            exponents=list(orbit),
            minimal_polynomial=format_poly(minimal_polynomial(field, field.element(orbit[0]), q), field),
        )
        for orbit in conjugacy_classes(field, q)
    ]
    report = FieldReport(field=field.descriptor(), q=q, subfields=subfield_lattice(field), classes=classes)

    lines = [
        f'GF({field.p}^{field.n}), задающий многочлен {report.field.defining_poly}, базовое подполе GF({q})',
        'Подполя: ' + ' '.join(f'GF({item.order})' for item in report.subfields),
        f'Классы сопряженных над GF({q}): {len(classes)}',
        table([[','.join(map(str, item.exponents)), item.minimal_polynomial] for item in classes]),
        'Элемент 0: минимальный многочлен x',
    ]
    rows = [['exponents', 'minimal_polynomial']] + [
        [' '.join(map(str, item.exponents)), item.minimal_polynomial] for item in classes
    ]
    return CommandOutput(document=report, text='\n'.join(lines), rows=rows)


def cmd_code(run: RunConfig) -> CommandOutput:
    field = _field(run)
    spec = _code_spec(run, field)
    which = run.options.get('matrix', 'both')
    generator, parity = generator_matrix(spec), parity_check_matrix(spec)
    orthogonal = _orthogonal(generator.entries, parity.entries) if run.verify else None

    report = CodeReport(
        field=field.descriptor(),
        code=spec.descriptor(),
        N=spec.N,
        K=spec.K,
        generator_polynomial=format_poly(generator_polynomial(spec), field),
        generator=generator.rows_text() if which in ('generator', 'both') else None,
        parity=parity.rows_text() if which in ('parity', 'both') else None,
        orthogonal=orthogonal,
    )
    lines = [f'{spec}: G(x) = {report.generator_polynomial}', f'G: {generator.shape[0]}x{generator.shape[1]}, '
             f'H: {parity.shape[0]}x{parity.shape[1]}']
    artifacts, rows = {}, [['role', 'row', 'entries']]
    for name, matrix, rows_text in (('generator', generator, report.generator), ('parity', parity, report.parity)):
        if rows_text is None:
            continue
        lines += [f'{name}:'] + rows_text
        rows += [[name, index + 1, text] for index, text in enumerate(rows_text)]
        artifacts[f'{name}.txt'] = matrix.to_text()
    if orthogonal is not None:
        lines.append('orthogonality OK' if orthogonal else 'orthogonality FAILED')
    return CommandOutput(
        document=report,
        text='\n'.join(lines),
        rows=rows,
        artifacts=artifacts,
        ok=orthogonal is not False,
    )


def _verify_expansion(run: RunConfig, spec: CyclicCodeSpec, basis: Basis) -> bool:
    """G H^T = 0, G_e H_e^T = 0 и проверка SAMPLE_SIZE случайных слов с фиксированным зерном"""
    generator, parity = generator_matrix(spec).entries, parity_check_matrix(spec).entries
    generator_e = expand_generator(spec, basis).entries
    parity_e = expand_parity(spec, basis).entries
    checks = [_orthogonal(generator, parity), _orthogonal(generator_e, parity_e)]

    rng = np.random.default_rng(run.seed)
    field = spec.field
    samples = config.compute_config.SAMPLE_SIZE
    messages = field.gf(rng.integers(0, field.order, size=(samples, spec.K)))
    words = messages @ generator
    checks.append(not np.any(words @ parity.T))
    checks.append(not np.any(expand_word(words, basis) @ parity_e.T))
    logger.debug(f'Проверки разложения {spec}: {checks}')
    return all(checks)


def cmd_expand(run: RunConfig) -> CommandOutput:
    field = _field(run)
    spec = _code_spec(run, field)
    basis = _basis(run, field)
    which = run.options.get('matrix', 'both')
    form = ExpansionForm.SYMBOL if run.options.get('symbol') else ExpansionForm.FULL
    generator, parity = expand_generator(spec, basis, form), expand_parity(spec, basis, form)
    orthogonal = _verify_expansion(run, spec, basis) if run.verify else None

    report = ExpandedReport(
        field=field.descriptor(),
        code=spec.descriptor(),
        basis=basis.descriptor(),
        generator=generator.rows_text() if which in ('generator', 'both') else None,
        parity=parity.rows_text() if which in ('parity', 'both') else None,
        generator_rank=generator.rank() if form is ExpansionForm.FULL else None,
        parity_density=parity_density(parity) if form is ExpansionForm.FULL else None,
        orthogonal=orthogonal,
    )
    lines = [
        f'{spec}, базис {basis.to_text()}',
        f'G_e: {generator.shape[0]}x{generator.shape[1]}, H_e: {parity.shape[0]}x{parity.shape[1]} '
        f'({form.value})',
    ]
    if report.generator_rank is not None:
        lines.append(f'rank(G_e) = {report.generator_rank}, плотность H_e = {report.parity_density:.4f}')
    artifacts, rows = {}, [['role', 'row', 'entries']]
    for name, matrix, rows_text in (('generator', generator, report.generator), ('parity', parity, report.parity)):
        if rows_text is None:
            continue
        lines += [f'{name}_e:'] + rows_text
        rows += [[name, index + 1, text] for index, text in enumerate(rows_text)]
        artifacts[f'{name}_e.txt'] = matrix.to_text()
    if orthogonal is not None:
        lines.append('orthogonality OK' if orthogonal else 'orthogonality FAILED')
    return CommandOutput(
        document=report,
        text='\n'.join(lines),
        rows=rows,
        artifacts=artifacts,
        ok=orthogonal is not False,
    )


def cmd_cw(run: RunConfig) -> CommandOutput:
    """Кодовая книга (x^N - 1)/p_gamma(x): веса, вхождения элементов, период, Плоткин"""
    field, q = _field(run), run.base_order
    gamma = parse_element(field, run.options.get('gamma', 'a^-1'))
    basis = _basis(run, field) if run.options.get('expanded') else None
    entries = constant_weight_codebook(field, q, gamma, basis)
    listing = golden.reference_listing(field, field.exponent(gamma)) if q == field.p else None
    report = constant_weight_report(field, q, gamma, entries, listing)

    ok = (
        report.constant
        and report.counts_match
        and report.periodic
        and all(item.match for item in report.plotkin)
        and report.listing_match != ListingMatch.MISMATCH.value
    )
    lines = [
        f'{field}, gamma = {report.gamma}, m_gamma = {report.m_gamma}, слов: {report.codewords}',
        f'веса ненулевых слов: {report.weights} (ожидается {report.expected_weight})',
        f'вхождения элементов: {report.element_counts} (ожидается {report.expected_count})',
        f'период {report.period}: {"да" if report.periodic else "нет"}',
    ]
    if report.listing_match is not None:
        lines.append(f'сравнение с эталонным списком: {report.listing_match}')
    for item in report.plotkin:
        verdict = 'MATCH' if item.match else 'MISMATCH'
        lines.append(f'Плоткин {item.variant}: A={item.A}, d={item.d_min}, граница {item.bound} -> {verdict}')
    lines += [f'{row.message} {row.symbol_codeword} {row.weight}' for row in report.rows]

    rows = [['message', 'codeword', 'expanded', 'weight']] + [
        [''.join(map(str, row.message)), row.symbol_codeword, row.expanded_codeword or '', row.weight]
        for row in report.rows
    ]
    codebook = ''.join(f'{row.symbol_codeword}\n' for row in report.rows if row.weight)
    return CommandOutput(
        document=report,
        text='\n'.join(lines),
        rows=rows,
        artifacts={'codebook.txt': codebook},
        ok=ok,
    )


def _search(run: RunConfig, field: Field, size: int) -> CommandOutput:
    q = run.base_order
    bases = tower_bases(field, q)
    if run.basis:
        bases = [_basis(run, field)] + bases
    gammas = _gammas(run)
    result = best_subbasis_search(gammas, bases, size)
    report = SearchReport(
        gammas=gammas,
        size=size,
        candidates=[basis.descriptor() for basis in bases],
        basis_index=result.basis_index,
        subbasis=format_index_list(result.subbasis.indices),
        dimension=result.dimension,
    )
    text = '\n'.join([
        f'Лучший подбазис из {size} элементов для gamma {gammas}: размерность {result.dimension}',
        f'базис {result.basis_index + 1}: {result.basis.to_text()}',
        f'подбазис: {report.subbasis}',
    ])
    rows = [['basis', 'subbasis', 'dimension'], [result.basis.to_text(), report.subbasis, result.dimension]]
    return CommandOutput(document=report, text=text, rows=rows)


def cmd_subdim(run: RunConfig) -> CommandOutput:
    """Размерность подкода через Gamma, Theta и прямое решение; расхождение - ошибка"""
    field, q = _field(run), run.base_order
    if run.options.get('search') is not None:
        return _search(run, field, run.options['search'])

    if run.options.get('selection'):
        selection, basis, subbasis = parse_selection(field, run.options['selection'], q)
        selections = [selection]
        exponents = list(selection.exponents())
    else:
        if not run.subbasis:
            raise ConfigError('Не задан --subbasis')
        basis = _basis(run, field)
        exponents = _gammas(run)
        selections = selections_from_gammas(field, exponents, q)
        try:
            subbasis = make_subbasis(basis, parse_index_list(run.subbasis))
        except ValueError as e:
            raise ConfigError(f'Неверный --subbasis: {e}')

    included, excluded = subbasis.indices, subbasis.excluded
    dim_gamma = dim_via_gamma(selections, basis, excluded)
    dim_theta = dim_via_theta(selections, basis, included)
    try:
        dim_oracle = dim_bruteforce(exponents, basis, included)
    except TooLargeError as e:
        logger.warning(f'Прямое вычисление пропущено: {e.detail}')
        dim_oracle = None

    values = {dim_gamma, dim_theta} | ({dim_oracle} if dim_oracle is not None else set())
    classes = [
        ClassDimension(
            selection=item.descriptor(),
            dim_gamma=dim_via_gamma(item, basis, excluded),
            dim_theta=dim_via_theta(item, basis, included),
            variant=gamma_matrix(item, basis, excluded).variant.value if excluded else 'full',
        )
        for item in selections
    ]
    witness = None
    for item, info in zip(selections, classes):
        if info.dim_gamma:
            witness = format_elements(field, gamma_witnesses(item, basis, excluded)[0])
            break

    report = DimensionReport(
        field=field.descriptor(),
        q=q,
        basis=basis.descriptor(),
        gammas=exponents,
        subbasis=format_index_list(included),
        dim_gamma=dim_gamma,
        dim_theta=dim_theta,
        dim_oracle=dim_oracle,
        agree=len(values) == 1,
        classes=classes,
        witness_codeword=witness,
    )
    lines = [
        f'{field}, базис {basis.to_text()}, подбазис {report.subbasis}, gamma {exponents}',
        f'dim_gamma = {dim_gamma}, dim_theta = {dim_theta}, dim_oracle = {dim_oracle}',
        table([[c.selection.gamma, c.selection.offsets, c.dim_gamma, c.dim_theta, c.variant] for c in classes]),
        'согласовано' if report.agree else 'РАСХОЖДЕНИЕ',
    ]
    if witness:
        lines.append(f'слово подкода: {witness}')
    rows = [['gammas', 'subbasis', 'dim_gamma', 'dim_theta', 'dim_oracle'],
            [' '.join(map(str, exponents)), report.subbasis, dim_gamma, dim_theta, dim_oracle]]
    return CommandOutput(document=report, text='\n'.join(lines), rows=rows, ok=report.agree)


def _witness(run: RunConfig) -> CommandOutput:
    m, rate, delta = run.options['witness']
    report = badness_witness(int(m), rate, int(delta))
    lines = [
        f'RS({report.N}, {report.K}) над GF(2^{report.m}), r = {report.rate}, delta = {report.delta}, k = {report.k}',
        f'носитель: {report.support} ({report.support_size} элементов)',
        f'вес {report.weight} {"<=" if report.within_bound else ">"} {report.weight_bound}, отношение {report.ratio:.4f}',
    ]
    if report.tight_weight_bound is not None:
        lines.append(f'усиленная оценка {report.tight_weight_bound}: {"да" if report.tight_satisfied else "нет"}')
    rows = [['m', 'rate', 'delta', 'k', 'weight', 'bound', 'ratio'],
            [report.m, report.rate, report.delta, report.k, report.weight, report.weight_bound, report.ratio]]
    return CommandOutput(
        document=report,
        text='\n'.join(lines),
        rows=rows,
        ok=report.within_bound,
    )


def _subfield_witness(run: RunConfig) -> CommandOutput:
    report = subfield_weight_witness(run.options['subfield_witness'])
    text = (
        f'GF(2^{report.m}), базис {",".join(report.basis.elements)}: '
        f'w(g({report.gamma})) = {report.weight}, 4N/3 = {report.expected_weight}'
    )
    rows = [['m', 'gamma', 'weight', 'expected'], [report.m, report.gamma, report.weight, report.expected_weight]]
    return CommandOutput(document=report, text=text, rows=rows, ok=report.weight == report.expected_weight)


def cmd_dmin(run: RunConfig) -> CommandOutput:
    """Граница минимального расстояния по уровням, точное d_min и слова малого веса"""
    if run.options.get('witness'):
        return _witness(run)
    if run.options.get('subfield_witness') is not None:
        return _subfield_witness(run)

    field = _field(run)
    basis = _basis(run, field)
    gammas = _gammas(run)
    reference = run.options.get('reference')
    if reference is None and format_poly(field.defining_poly) == golden.GF32_POLY and run.base_order == 2:
        reference = sak_reference_values().get(tuple(sorted(gammas)))
    report = gcc_dmin_bound(
        gammas,
        basis,
        allow_fallback=not run.options.get('no_fallback', False),
        exact=run.options.get('exact', False),
        reference=reference,
        cap=run.cap,
    )
    header = ['i', 'classes', 'K_i', 'd_i', 'i*d_i', 'method']
    body = [
        [level.level, ' '.join(','.join(map(str, orbit)) for orbit in level.classes), level.dimension,
         level.distance, level.product, level.method.value]
        for level in report.levels
    ]
    lines = [
        f'{field}, базис {basis.to_text()}, gamma {gammas}',
        table(body, header),
        f'граница: {report.bound}',
    ]
    if report.reference is not None:
        lines.append(f'известная ранее граница: {report.reference}')
    if report.exact_dmin is not None:
        lines.append(f'точное d_min: {report.exact_dmin}')
    return CommandOutput(
        document=report,
        text='\n'.join(lines),
        rows=[header] + body,
        ok=report.exact_dmin is None or report.exact_dmin >= report.bound,
    )


def _check(checks: list[ReproCheck], name: str, expected, actual) -> None:
    ok = expected == actual
    if not ok:
        logger.error(f'{name}: ожидалось {expected}, получено {actual}')
    checks.append(ReproCheck(name=name, expected=expected, actual=actual, ok=ok))


def _repro_constant_weight(checks: list[ReproCheck], artifacts: dict[str, str]) -> None:
    for label, n, poly, gamma, weight in (
            ('gf16', 4, golden.GF16_POLY, -1, 8),
            ('gf16-default', 4, None, -1, 8),
            ('gf64', 6, golden.GF64_POLY, -9, 36),
            ('gf64-default', 6, None, -9, 36),
    ):
        field = build_field(2, n, poly)
        element = field.element(gamma)
        entries = constant_weight_codebook(field, 2, element)
        report = constant_weight_report(field, 2, element, entries, golden.reference_listing(field, gamma))
        _check(checks, f'{label}: веса', [weight], report.weights)
        _check(checks, f'{label}: период', True, report.periodic)
        _check(checks, f'{label}: Плоткин', True, all(item.match for item in report.plotkin))
        if not poly:
            _check(checks, f'{label}: список слов', ListingMatch.REVERSED.value, report.listing_match)
        elif n == 4:
            _check(checks, f'{label}: список слов', ListingMatch.EXACT.value, report.listing_match)
        else:
            # порядок строк эталона для GF(2^6) не задан, достаточно совпадения множеств
            _check(checks, f'{label}: список слов', True,
                   report.listing_match in (ListingMatch.EXACT.value, ListingMatch.SET.value))
        artifacts[f'codebook_{label}.txt'] = ''.join(f'{row.symbol_codeword}\n' for row in report.rows if row.weight)


def _repro_plotkin(checks: list[ReproCheck]) -> None:
    cases = [
        (2, 4, 1, PlotkinVariant.CLASS_CODE, 8),
        (2, 4, 1, PlotkinVariant.WITH_X_MINUS_1, 7),
        (2, 4, 1, PlotkinVariant.PUNCTURED_ZERO, 8),
        (2, 4, 5, PlotkinVariant.CLASS_CODE, 10),
        (3, 2, 1, PlotkinVariant.CLASS_CODE, 6),
        (3, 2, 1, PlotkinVariant.WITH_X_MINUS_1, 5),
        (3, 2, 1, PlotkinVariant.PUNCTURED_ZERO, 6),
    ]
    for p, n, exponent, variant, distance in cases:
        field = build_field(p, n)
        report = plotkin_comparison(field, p, field.element(exponent), variant)
        _check(checks, f'Плоткин GF({p}^{n}) a^{exponent} {variant.value}', (distance, True), (report.d_min, report.match))


def _three_way_agree(field: Field, q: int, gamma_lists: Sequence[tuple[int, ...]], masks: Iterable[int]) -> bool:
    """Совпадение размерностей по Gamma, по Theta и прямым решением на всех базисах башни"""
    agree = True
    bases = tower_bases(field, q)
    for gammas in gamma_lists:
        selections = selections_from_gammas(field, gammas, q)
        for basis in bases:
            for mask in masks:
                included = [index for index in range(basis.m) if mask >> index & 1]
                excluded = [index for index in range(basis.m) if not mask >> index & 1]
                values = {
                    dim_via_gamma(selections, basis, excluded),
                    dim_via_theta(selections, basis, included),
                    dim_bruteforce(gammas, basis, included),
                }
                if len(values) != 1:
                    logger.error(f'{field}, gamma {list(gammas)}, подбазис {format_index_list(included)}: {values}')
                    agree = False
    return agree


def _repro_dimensions(checks: list[ReproCheck], skip_slow: bool, seed: int) -> None:
    rng = np.random.default_rng(seed)
    for case in golden.AGREEMENT_CASES:
        if case.sampled and skip_slow:
            continue
        field = build_field(case.p, case.n, case.poly)
        q = case.p
        m = field.extension_degree(q)
        masks = range(1, 2 ** m)
        if case.sampled:
            masks = rng.choice(np.arange(1, 2 ** m), size=golden.AGREEMENT_SAMPLES, replace=False).tolist()
        _check(checks, f'GF({case.p}^{case.n}): согласование трех способов', True,
               _three_way_agree(field, q, case.gamma_lists, masks))

    if skip_slow:
        return
    field = build_field(2, 8)
    for case in golden.GF256_DIMENSIONS:
        basis = parse_basis(field, case.basis, 2) if case.basis else power_basis(field, 2)
        subbasis = make_subbasis(basis, parse_index_list(case.subbasis))
        selections = selections_from_gammas(field, case.gammas, 2)
        actual = dim_via_gamma(selections, basis, subbasis.excluded)
        label = 'составной' if case.basis else 'степенной'
        _check(checks, f'GF(2^8) {label} базис, gamma {list(case.gammas)}', case.expected, actual)


def _repro_bounds(checks: list[ReproCheck]) -> None:
    field = build_field(2, 5, golden.GF32_POLY)
    basis = power_basis(field, 2)
    references = sak_reference_values()
    for gammas, expected in golden.GF32_BOUNDS.items():
        report = gcc_dmin_bound(gammas, basis, exact=True)
        _check(checks, f'GF(2^5) граница {list(gammas)}', expected, report.bound)
        _check(checks, f'GF(2^5) {list(gammas)} выше известной', True, report.bound > references[gammas])
        if report.exact_dmin is not None:
            _check(checks, f'GF(2^5) {list(gammas)} d_min >= граница', True, report.exact_dmin >= report.bound)

    field = build_field(2, 4)
    basis = power_basis(field, 2)
    for gammas in ((1, 3), (1, 7)):
        _check(checks, f'GF(2^4) {list(gammas)}: слова на собственном подбазисе', 0,
               proper_support_codewords(gammas, basis))


def _repro_witness(checks: list[ReproCheck], skip_slow: bool) -> None:
    for m in (5,) if skip_slow else (5, 8):
        report = badness_witness(m, '1/2', 1)
        _check(checks, f'RS GF(2^{m}) r=1/2: вес <= (m-k)2^(m-1)', True, report.within_bound)
        _check(checks, f'RS GF(2^{m}) r=1/2: подбазис <= m-k', True, report.support_size <= m - report.k)
    report = subfield_weight_witness(4)
    _check(checks, 'GF(2^4): вес g(a^5)', report.expected_weight, report.weight)


def cmd_repro(run: RunConfig) -> CommandOutput:
    """Все эталонные примеры с отчетом и экспортом кодовых книг и матриц"""
    checks: list[ReproCheck] = []
    artifacts: dict[str, str] = {}
    skip_slow = run.options.get('skip_slow', False)

    _repro_constant_weight(checks, artifacts)
    _repro_plotkin(checks)
    _repro_dimensions(checks, skip_slow, run.seed)
    _repro_bounds(checks)
    _repro_witness(checks, skip_slow)

    field = build_field(2, 4)
    spec = reed_solomon_code(field, 2, 1, 4)
    basis = power_basis(field, 2)
    generator = expand_generator(spec, basis)
    _check(checks, 'RS(15,11): форма G_e', [44, 60], list(generator.shape))
    _check(checks, 'RS(15,11): ортогональность', True, _verify_expansion(run, spec, basis))
    artifacts['rs15_11_generator_e.txt'] = generator.to_text()
    artifacts['rs15_11_parity_e.txt'] = expand_parity(spec, basis).to_text()

    failed = sum(not check.ok for check in checks)
    report = ReproReport(
        checks=checks,
        passed=len(checks) - failed,
        failed=failed,
        artifacts=sorted(artifacts),
    )
    body = [[check.name, check.expected, check.actual, 'OK' if check.ok else 'FAIL'] for check in checks]
    text = table(body, ['check', 'expected', 'actual', 'status']) + f'\nпройдено {report.passed} из {len(checks)}'
    return CommandOutput(
        document=report,
        text=text,
        rows=[['check', 'expected', 'actual', 'status']] + body,
        artifacts=artifacts,
        ok=failed == 0,
    )


COMMANDS: dict[str, Callable[[RunConfig], CommandOutput]] = {
    'field': cmd_field,
    'code': cmd_code,
    'expand': cmd_expand,
    'cw': cmd_cw,
    'subdim': cmd_subdim,
    'dmin': cmd_dmin,
    'repro': cmd_repro,
}


def run_command(run: RunConfig) -> CommandOutput:
    """Выполняет подкоманду с лимитом перебора из параметров запуска"""
    default_cap = config.compute_config.XCYCLIC_CAP
    config.compute_config.XCYCLIC_CAP = run.cap
    logger.info(f'Команда {run.command}: GF({run.p}^{run.n}), q={run.base_order}')
    try:
        return COMMANDS[run.command](run)
    finally:
        config.compute_config.XCYCLIC_CAP = default_cap
