import functools
from dataclasses import dataclass
from typing import Iterable, TypeAlias

import galois
import numpy as np
from loguru import logger

from ..config import config
from .exceptions import (
    InvalidFieldError,
    NotIrreducibleError,
    NotPrimitiveError,
    TooLargeError,
    FieldMismatchError,
    NoSuchSubfieldError,
    ZeroElementError,
)
from .notation import format_poly, parse_prime_poly
from .schemes import FieldDescriptor

FieldElement: TypeAlias = galois.FieldArray

DEFAULT_POLYNOMIALS: dict[tuple[int, int], str] = {
    (2, 2): 'x^2+x+1',
    (2, 4): 'x^4+x+1',
    (2, 5): 'x^5+x^2+1',
    (2, 6): 'x^6+x+1',
    (2, 8): 'x^8+x^4+x^3+x^2+1',
    (2, 10): 'x^10+x^3+1',
}


@dataclass(frozen=True, eq=False)
class Field:
    """Конечное поле GF(p^n) с примитивным элементом a = x mod defining_poly.

    Элементы представлены скалярами и массивами ``galois.FieldArray`` класса ``gf``;
    код элемента равен сумме c_k p^k, где c_k - координата при a^k.
    Порядок базового подполя q передается в операции отдельно, поэтому одно
    поле обслуживает все представления GF(q^m) с q = p^a, a | n.

    Attributes:
        p: Характеристика
        n: Степень над простым полем
        defining_poly: Задающий примитивный многочлен над GF(p)
        gf: Класс массивов galois для элементов поля
        prime_gf: Класс массивов galois для простого поля GF(p)
        log_table: log_table[code] = k для code = a^k, -1 для нуля
        antilog_table: antilog_table[k] = код a^k, 0 <= k < p^n - 1
    """
    p: int
    n: int
    defining_poly: galois.Poly
    gf: type[galois.FieldArray]
    prime_gf: type[galois.FieldArray]
    log_table: np.ndarray
    antilog_table: np.ndarray

    def __repr__(self) -> str:
        return f'GF({self.p}^{self.n})'

    @property
    def order(self) -> int:
        return self.p ** self.n

    @property
    def size(self) -> int:
        """Длина примитивного кода N = p^n - 1"""
        return self.order - 1

    @property
    def zero(self) -> FieldElement:
        return self.gf(0)

    @property
    def one(self) -> FieldElement:
        return self.gf(1)

    @property
    def alpha(self) -> FieldElement:
        return self.element(1)

    def element(self, exponent: int | None) -> FieldElement:
        """Возвращает a^exponent; ``None`` обозначает нулевой элемент"""
        if exponent is None:
            return self.zero
        return self.gf(int(self.antilog_table[exponent % self.size]))

    def elements(self, exponents: Iterable[int] | np.ndarray) -> galois.FieldArray:
        """Векторная версия ``element`` для массива показателей"""
        exponents = np.asarray(list(exponents), dtype=np.int64)
        return self.gf(self.antilog_table[exponents % self.size])

    def exponent(self, x: FieldElement | int) -> int:
        """Дискретный логарифм ненулевого элемента по основанию a.

        Raises:
            ZeroElementError: Для нулевого элемента
        """
        code = int(self.check(x)) if isinstance(x, galois.FieldArray) else int(x)
        if code == 0:
            raise ZeroElementError('Логарифм нуля не определен')
        return int(self.log_table[code])

    def exponents(self, values: galois.FieldArray) -> np.ndarray:
        """Логарифмы элементов массива, -1 для нулевых элементов"""
        return self.log_table[self.codes(values)]

    def codes(self, values: galois.FieldArray) -> np.ndarray:
        return np.asarray(self.check(values).view(np.ndarray), dtype=np.int64)

    def check(self, values: galois.FieldArray) -> galois.FieldArray:
        """Проверяет, что массив принадлежит этому полю.

        Raises:
            FieldMismatchError: Если элементы из другого поля
        """
        if type(values) is not self.gf:
            raise FieldMismatchError(f'Ожидались элементы {self}, получено {type(values).__name__}')
        return values

    def as_array(self, values) -> galois.FieldArray:
        """Приводит элемент, код или последовательность к массиву элементов поля"""
        if isinstance(values, galois.FieldArray):
            return self.check(values)
        if isinstance(values, (int, np.integer)):
            return self.gf(int(values))
        codes = []
        for item in values:
            if isinstance(item, galois.FieldArray):
                self.check(item)
            codes.append(int(item))
        return self.gf(np.array(codes, dtype=np.int64))

    def digits(self, values: galois.FieldArray | np.ndarray) -> np.ndarray:
        """Координаты элементов над GF(p) в степенном базисе {1, a, ..., a^(n-1)}.

        Returns:
            Целочисленный массив формы ``values.shape + (n,)``
        """
        if isinstance(values, galois.FieldArray):
            values = self.codes(values)
        codes = np.asarray(values, dtype=np.int64)
        powers = self.p ** np.arange(self.n, dtype=np.int64)
        return (codes[..., None] // powers) % self.p

    def subfield_degree(self, q: int) -> int:
        """Возвращает a, для которого q = p^a и a | n.

        Raises:
            NoSuchSubfieldError: Если GF(q) не является подполем
        """
        a, power = 0, 1
        while power < q:
            power *= self.p
            a += 1
        if power != q or a == 0 or self.n % a:
            raise NoSuchSubfieldError(f'{self} не содержит подполя порядка {q}')
        return a

    def extension_degree(self, q: int) -> int:
        """Степень m поля над подполем GF(q)"""
        return self.n // self.subfield_degree(q)

    def subfield_generator(self, q: int) -> FieldElement:
        """Примитивный элемент подполя GF(q): a^((p^n - 1)/(q - 1))"""
        self.subfield_degree(q)
        return self.element(self.size // (q - 1))

    def subfield_elements(self, q: int) -> galois.FieldArray:
        """Все элементы подполя GF(q), упорядоченные по коду"""
        self.subfield_degree(q)
        step = self.size // (q - 1)
        codes = np.sort(np.concatenate([[0], self.antilog_table[np.arange(q - 1) * step]]))
        return self.gf(codes)

    def descriptor(self) -> FieldDescriptor:
        return FieldDescriptor(
            p=self.p,
            n=self.n,
            defining_poly=format_poly(self.defining_poly),
            order=self.order,
        )


def default_polynomial(p: int, n: int) -> galois.Poly:
    """Задающий многочлен по умолчанию.

    Для GF(2^n) берется из фиксированной таблицы, иначе - лексикографически
    наименьший примитивный многочлен; для n = 1 - многочлен x - g,
    где g - наименьший первообразный корень по модулю p.
    """
    prime_gf = galois.GF(p)
    if (p, n) in DEFAULT_POLYNOMIALS:
        return parse_prime_poly(DEFAULT_POLYNOMIALS[(p, n)], prime_gf)
    if n == 1:
        root = prime_gf(galois.primitive_root(p)) if p > 2 else prime_gf(1)
        return galois.Poly([1, int(-root)], field=prime_gf)
    return galois.primitive_poly(p, n)


def build_field(p: int, n: int, defining_poly: galois.Poly | str | None = None) -> Field:
    """Строит поле GF(p^n) с таблицами логарифмов.

    Алгоритм работы:
    1. Проверяет, что p простое, n >= 1 и порядок не превышает TABLE_CAP
    2. Выбирает многочлен по умолчанию или разбирает переданный
    3. Проверяет неприводимость и примитивность
    4. Строит (или берет из кэша) поле и таблицы log/antilog

    Args:
        p: Характеристика
        n: Степень расширения
        defining_poly: Задающий многочлен (``galois.Poly`` над GF(p) или строка ``x^4+x+1``)

    Returns:
        Поле GF(p^n)

    Raises:
        InvalidFieldError: Недопустимые p, n или степень многочлена
        TooLargeError: p^n больше TABLE_CAP
        NotIrreducibleError: Многочлен приводим
        NotPrimitiveError: Многочлен не примитивен
    """
    if n < 1 or not galois.is_prime(p):
        raise InvalidFieldError(f'Недопустимые параметры поля: p={p}, n={n}')
    cap = config.compute_config.TABLE_CAP
    if p ** n > cap:
        logger.error(f'Порядок поля {p}^{n} превышает лимит таблиц {cap}')
        raise TooLargeError(f'Порядок поля {p}^{n} превышает лимит таблиц {cap}')

    prime_gf = galois.GF(p)
    if defining_poly is None:
        poly = default_polynomial(p, n)
    elif isinstance(defining_poly, str):
        poly = parse_prime_poly(defining_poly, prime_gf)
    else:
        poly = galois.Poly(np.asarray(defining_poly.coeffs.view(np.ndarray), dtype=np.int64) % p,
                           field=prime_gf)
    return _construct_field(p, n, tuple(int(c) for c in poly.coeffs))


@functools.lru_cache(maxsize=None)
def _construct_field(p: int, n: int, coeffs: tuple[int, ...]) -> Field:
    prime_gf = galois.GF(p)
    poly = galois.Poly(list(coeffs), field=prime_gf)
    text = format_poly(poly)
    if poly.degree != n or coeffs[0] != 1:
        raise InvalidFieldError(f'Многочлен {text} должен быть унитарным степени {n}')

    if n == 1:
        root = int(-poly.coeffs[-1])
        if root == 0 or prime_gf(root).multiplicative_order() != p - 1:
            raise NotPrimitiveError(f'Корень многочлена {text} не порождает GF({p})*')
        gf = galois.GF(p, primitive_element=root)
    else:
        if not poly.is_irreducible():
            raise NotIrreducibleError(f'Многочлен {text} приводим над GF({p})')
        if not poly.is_primitive():
            raise NotPrimitiveError(f'Многочлен {text} не примитивен над GF({p})')
        # целое p кодирует многочлен x
        gf = galois.GF(p ** n, irreducible_poly=poly, primitive_element=p)

    order = p ** n
    codes = np.arange(1, order, dtype=np.int64)
    logs = np.asarray(gf(codes).log(), dtype=np.int64)
    log_table = np.full(order, -1, dtype=np.int64)
    log_table[codes] = logs
    antilog_table = np.empty(order - 1, dtype=np.int64)
    antilog_table[logs] = codes
    log_table.setflags(write=False)
    antilog_table.setflags(write=False)

    logger.info(f'Построено поле GF({p}^{n}) с многочленом {text}')
    return Field(
        p=p,
        n=n,
        defining_poly=poly,
        gf=gf,
        prime_gf=prime_gf,
        log_table=log_table,
        antilog_table=antilog_table,
    )
