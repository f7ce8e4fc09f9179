from dataclasses import dataclass
from typing import Iterable

import galois
import numpy as np
from loguru import logger

from ..galois_field.conjugacy import exponent_class, minimal_polynomial
from ..galois_field.field import Field, FieldElement
from ..galois_field.notation import format_poly
from ..galois_field.poly import x_pow_minus_one, poly_from_roots, is_zero_poly
from .exceptions import (
    DuplicateRootError,
    InvalidRootError,
    NotDivisorError,
    ZeroDimensionError,
)
from .schemes import CodeSpecDescriptor


@dataclass(frozen=True, eq=False)
class CyclicCodeSpec:
    """Циклический код длины N = q^m - 1 над GF(q^m).

    Код задается множеством показателей корней: G(x) = prod_{e in roots} (x - a^e).
    Множество gamma_set = {-e mod N : e не корень} описывает элементы, для которых
    g(gamma) = (1, gamma, ..., gamma^(N-1)) лежит в коде.

    Attributes:
        field: Поле GF(q^m)
        q: Порядок базового подполя
        roots: Показатели корней по возрастанию
        gamma_set: Показатели элементов gamma по возрастанию
    """
    field: Field
    q: int
    roots: tuple[int, ...]
    gamma_set: tuple[int, ...]

    @property
    def N(self) -> int:
        return self.field.size

    @property
    def R(self) -> int:
        return len(self.roots)

    @property
    def K(self) -> int:
        return self.N - self.R

    @property
    def m(self) -> int:
        return self.field.extension_degree(self.q)

    def root_elements(self) -> galois.FieldArray:
        return self.field.elements(self.roots)

    def gammas(self) -> galois.FieldArray:
        return self.field.elements(self.gamma_set)

    def descriptor(self) -> CodeSpecDescriptor:
        return CodeSpecDescriptor(p=self.field.p, n=self.field.n, q=self.q, roots=list(self.roots))

    def __repr__(self) -> str:
        return f'CyclicCode(N={self.N}, K={self.K}, {self.field}/GF({self.q}))'


def _gamma_set(roots: Iterable[int], length: int) -> tuple[int, ...]:
    root_set = set(roots)
    return tuple(sorted((-e) % length for e in range(length) if e not in root_set))


def code_from_roots(field: Field, root_exponents: Iterable[int], q: int | None = None) -> CyclicCodeSpec:
    """Строит код по показателям корней порождающего многочлена.

    Args:
        field: Поле GF(q^m)
        root_exponents: Показатели e корней a^e, 0 <= e < N
        q: Порядок базового подполя (по умолчанию p)

    Returns:
        Описание кода

    Raises:
        DuplicateRootError: Повторяющиеся показатели
        InvalidRootError: Показатель вне [0, N)
        ZeroDimensionError: Все N элементов являются корнями
    """
    q = q or field.p
    field.subfield_degree(q)
    roots = [int(e) for e in root_exponents]
    if len(set(roots)) != len(roots):
        raise DuplicateRootError(f'Повторяющиеся корни: {roots}')
    invalid = [e for e in roots if e < 0 or e >= field.size]
    if invalid:
        raise InvalidRootError(f'Показатели {invalid} вне диапазона [0, {field.size})')
    if len(roots) == field.size:
        raise ZeroDimensionError(f'Все {field.size} ненулевых элементов являются корнями')

    roots = tuple(sorted(roots))
    spec = CyclicCodeSpec(field=field, q=q, roots=roots, gamma_set=_gamma_set(roots, field.size))
    logger.debug(f'Построен {spec}')
    return spec


def code_from_gammas(field: Field, gamma_exponents: Iterable[int], q: int | None = None) -> CyclicCodeSpec:
    """Строит код G_e(gamma_1, ..., gamma_k): наименьший код, содержащий все g(gamma_i).

    Корнями служат все a^e, для которых a^(-e) не входит в список.

    Raises:
        DuplicateRootError: Повторяющиеся gamma
        ZeroDimensionError: Пустой список gamma
    """
    length = field.size
    gammas = [int(e) % length for e in gamma_exponents]
    if len(set(gammas)) != len(gammas):
        raise DuplicateRootError(f'Повторяющиеся элементы gamma: {gammas}')
    if not gammas:
        raise ZeroDimensionError('Список gamma пуст')
    gamma_set = set(gammas)
    return code_from_roots(field, [e for e in range(length) if (-e) % length not in gamma_set], q)


def code_from_generator_poly(field: Field, generator: galois.Poly, q: int | None = None) -> CyclicCodeSpec:
    """Строит код по порождающему многочлену, который должен делить x^N - 1.

    Raises:
        NotDivisorError: G(x) не делит x^N - 1
        ZeroDimensionError: G(x) = x^N - 1
    """
    if generator.field is not field.gf:
        generator = galois.Poly(field.gf(np.asarray(generator.coeffs.view(np.ndarray), dtype=np.int64)))
    if not is_zero_poly(x_pow_minus_one(field.gf, field.size) % generator):
        raise NotDivisorError(f'{format_poly(generator, field)} не делит x^{field.size} - 1')
    if generator.degree == field.size:
        raise ZeroDimensionError(f'G(x) = x^{field.size} - 1')
    roots = [e for e in range(field.size) if generator(field.element(e)) == 0]
    return code_from_roots(field, roots, q)


def reed_solomon_code(field: Field, q: int, delta: int, redundancy: int) -> CyclicCodeSpec:
    """Код Рида-Соломона с корнями a^delta, ..., a^(delta + R - 1)"""
    length = field.size
    return code_from_roots(field, [(delta + i) % length for i in range(redundancy)], q)


def class_code(field: Field, q: int, gamma: FieldElement, with_one: bool = False) -> CyclicCodeSpec:
    """Код с порождающим многочленом (x^N - 1)/p_gamma(x) (и дополнительно /(x - 1)).

    Ненулевые элементы спектра - класс сопряженных gamma, то есть
    код содержит g(gamma^(-1)) и все его сопряженные.
    """
    length = field.size
    nonroots = set(exponent_class(field.exponent(gamma), q, length))
    if with_one:
        nonroots.add(0)
    return code_from_roots(field, [e for e in range(length) if e not in nonroots], q)


def class_generator_poly(field: Field, q: int, gamma: FieldElement, with_one: bool = False) -> galois.Poly:
    """(x^N - 1)/p_gamma(x), при with_one дополнительно деленный на (x - 1)"""
    quotient = x_pow_minus_one(field.gf, field.size) // minimal_polynomial(field, gamma, q)
    if with_one:
        quotient = quotient // galois.Poly([1, field.gf.characteristic - 1], field=field.gf)
    return quotient


def generator_polynomial(spec: CyclicCodeSpec) -> galois.Poly:
    """G(x) = prod_{e in roots} (x - a^e)"""
    return poly_from_roots(spec.root_elements())
