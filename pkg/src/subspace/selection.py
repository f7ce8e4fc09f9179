from dataclasses import dataclass
from typing import Iterable, Sequence

import galois
from loguru import logger

from ..basis.basis import Basis, Subbasis, make_subbasis, parse_basis, power_basis, support_indices
from ..cyclic.matrices import power_rows
from ..galois_field.conjugacy import exponent_class
from ..galois_field.field import Field, FieldElement
from ..galois_field.notation import format_element, parse_element
from ..utils import parse_int_list, parse_index_list
from .exceptions import InvalidSelectionError, PreconditionViolatedError
from .schemes import SelectionDescriptor


@dataclass(frozen=True, eq=False)
class ConjugacySelection:
    """Набор сопряженных gamma^(q^s), s из offsets, одного класса.

    Attributes:
        field: Поле GF(q^m)
        q: Порядок базового подполя
        gamma_exponent: Показатель базового элемента gamma
        offsets: Показатели Фробениуса по возрастанию, всегда содержат 0
        m_gamma: Размер класса сопряженных
    """
    field: Field
    q: int
    gamma_exponent: int
    offsets: tuple[int, ...]
    m_gamma: int

    @property
    def k(self) -> int:
        return len(self.offsets)

    @property
    def gamma(self) -> FieldElement:
        return self.field.element(self.gamma_exponent)

    @property
    def z_set(self) -> tuple[int, ...]:
        """{1, ..., m_gamma - 1} без offsets"""
        return tuple(z for z in range(1, self.m_gamma) if z not in self.offsets)

    @property
    def kappa(self) -> int:
        return self.m_gamma - self.k

    @property
    def is_subfield(self) -> bool:
        return self.m_gamma < self.field.extension_degree(self.q)

    def exponents(self) -> tuple[int, ...]:
        """Показатели gamma^(q^s) в порядке offsets"""
        return tuple(self.gamma_exponent * self.q ** s % self.field.size for s in self.offsets)

    def elements(self) -> galois.FieldArray:
        return self.field.elements(self.exponents())

    def descriptor(self) -> SelectionDescriptor:
        return SelectionDescriptor(
            gamma=format_element(self.field, self.gamma),
            offsets=list(self.offsets),
            m_gamma=self.m_gamma,
            z_set=list(self.z_set),
        )

    def __repr__(self) -> str:
        return f'Selection(gamma={format_element(self.field, self.gamma)}, offsets={list(self.offsets)})'


def make_selection(field: Field, gamma: FieldElement | int, offsets: Iterable[int], q: int) -> ConjugacySelection:
    """Проверяет и строит набор сопряженных.

    Args:
        field: Поле GF(q^m)
        gamma: Базовый элемент или его показатель
        offsets: Показатели Фробениуса, должны содержать 0
        q: Порядок базового подполя

    Raises:
        ZeroElementError: gamma = 0
        InvalidSelectionError: Повторы, нет 0 или показатель вне [0, m_gamma)
    """
    exponent = field.exponent(gamma) if isinstance(gamma, galois.FieldArray) else int(gamma) % field.size
    m_gamma = len(exponent_class(exponent, q, field.size))
    offsets = [int(s) for s in offsets]
    if len(set(offsets)) != len(offsets):
        raise InvalidSelectionError(f'Повторяющиеся показатели {offsets}')
    if 0 not in offsets:
        raise InvalidSelectionError(f'Показатели {offsets} должны содержать 0')
    if any(s < 0 or s >= m_gamma for s in offsets):
        raise InvalidSelectionError(f'Показатели {offsets} вне диапазона [0, {m_gamma})')
    return ConjugacySelection(
        field=field,
        q=q,
        gamma_exponent=exponent,
        offsets=tuple(sorted(offsets)),
        m_gamma=m_gamma,
    )


def selections_from_gammas(field: Field, gamma_exponents: Iterable[int], q: int) -> list[ConjugacySelection]:
    """Разбивает список gamma по классам сопряженных.

    Базовым элементом класса становится входящий в список элемент с наименьшим
    показателем; классы упорядочены по этому показателю.

    Raises:
        InvalidSelectionError: Повторяющиеся gamma
    """
    length = field.size
    exponents = [int(e) % length for e in gamma_exponents]
    if len(set(exponents)) != len(exponents):
        raise InvalidSelectionError(f'Повторяющиеся элементы gamma: {exponents}')

    groups: dict[tuple[int, ...], list[int]] = {}
    for exponent in exponents:
        orbit = exponent_class(exponent, q, length)
        groups.setdefault(tuple(sorted(orbit)), []).append(exponent)

    selections = []
    for members in groups.values():
        base = min(members)
        orbit = exponent_class(base, q, length)
        selections.append(make_selection(field, base, [orbit.index(e) for e in members], q))
    selections.sort(key=lambda selection: selection.gamma_exponent)
    logger.debug(f'Разбиение gamma {exponents} по классам: {selections}')
    return selections


def check_nonconjugate(selections: Sequence[ConjugacySelection]) -> None:
    """Проверяет, что все gamma вне подполей и попарно не сопряжены.

    Raises:
        PreconditionViolatedError: Есть элемент подполя или сопряженная пара
    """
    for selection in selections:
        if selection.is_subfield:
            raise PreconditionViolatedError(f'{selection}: gamma лежит в подполе GF({selection.q}^{selection.m_gamma})')
        if selection.k > 1:
            raise PreconditionViolatedError(f'{selection}: список содержит сопряженные элементы')


def minimal_subbasis(basis: Basis, sub_order: int) -> Subbasis:
    """Наименьший подбазис, оболочка которого содержит GF(sub_order).

    Оболочка подмножества J содержит элемент x тогда и только тогда, когда
    носитель разложения x лежит в J, поэтому искомое J - объединение носителей
    элементов подполя, и оно единственно.
    """
    elements = basis.field.subfield_elements(sub_order)
    return make_subbasis(basis, support_indices(elements, basis))


def parse_selection(field: Field, text: str, q: int) -> tuple[ConjugacySelection, Basis, Subbasis]:
    """Разбирает запись ``gamma=a^17;offsets=0,1;basis=1,a^5,a,a^6;include=1,2``.

    Поле basis необязательно (по умолчанию степенной базис), include - индексы с единицы.

    Raises:
        InvalidSelectionError: Нет обязательных полей или неизвестное поле
    """
    parts = {}
    for item in text.split(';'):
        if not item.strip():
            continue
        key, _, value = item.partition('=')
        parts[key.strip()] = value.strip()
    unknown = set(parts) - {'gamma', 'offsets', 'basis', 'include'}
    if unknown or 'gamma' not in parts or 'include' not in parts:
        raise InvalidSelectionError(f'Неверная запись набора: {text}')

    basis = parse_basis(field, parts['basis'], q) if parts.get('basis') else power_basis(field, q)
    selection = make_selection(
        field,
        parse_element(field, parts['gamma']),
        parse_int_list(parts.get('offsets', '0')),
        q,
    )
    subbasis = make_subbasis(basis, parse_index_list(parts['include']))
    return selection, basis, subbasis


def selection_gamma_matrix(selection: ConjugacySelection) -> galois.FieldArray:
    """Строки g(gamma^(q^s)) для всех s из offsets"""
    return power_rows(selection.field, selection.exponents())
