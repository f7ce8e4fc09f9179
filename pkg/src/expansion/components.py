"""Компонентные слова mu_j(beta_i g(gamma)) и многочлен chi_gamma."""
from dataclasses import dataclass

import galois
import numpy as np

from ..basis.basis import Basis
from ..cyclic.matrices import g_vector
from ..galois_field.conjugacy import exponent_class, minimal_polynomial
from ..galois_field.field import Field, FieldElement
from ..galois_field.poly import poly_from_roots, poly_from_ascending, x_pow_minus_one, scale_poly
from .exceptions import ComponentIndexError


@dataclass(frozen=True, eq=False)
class ComponentWord:
    """j-я компонента символьного слова.

    Attributes:
        values: mu_j(c_t), t = 0..N-1, элементы GF(q)
        component: Индекс j
        multiplier: Индекс i, если слово имеет вид beta_i g(gamma)
        origin: Исходное символьное слово
    """
    values: galois.FieldArray
    component: int
    origin: galois.FieldArray
    multiplier: int | None = None

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.values))

    def is_zero(self) -> bool:
        return not np.any(self.values)


def _check_component(basis: Basis, j: int) -> None:
    if j < 0 or j >= basis.m:
        raise ComponentIndexError(f'Компонента {j} вне диапазона 0..{basis.m - 1}')


def component_word(word: galois.FieldArray, basis: Basis, j: int, multiplier: int | None = None) -> ComponentWord:
    _check_component(basis, j)
    word = basis.field.as_array(word)
    return ComponentWord(values=basis.decompose(word)[..., j], component=j, origin=word, multiplier=multiplier)


def component_words(word: galois.FieldArray, basis: Basis) -> galois.FieldArray:
    """Все m компонент слова: матрица m x N над GF(q)"""
    return basis.decompose(basis.field.as_array(word)).T


def component_poly(word: galois.FieldArray, basis: Basis, j: int) -> galois.Poly:
    """Многочлен sum_t mu_j(c_t) x^t"""
    return poly_from_ascending(component_word(word, basis, j).values)


def chi_poly(field: Field, gamma: FieldElement, q: int) -> galois.Poly:
    """chi_gamma(x) = gamma^(-1) prod_{s=1..m_gamma-1} (x - gamma^(-q^s)).

    Удовлетворяет g_gamma(x) = chi_gamma(x) (x^N - 1)/p_(gamma^-1)(x).

    Raises:
        ZeroElementError: Для gamma = 0
    """
    exponent = field.exponent(gamma)
    inverse_class = exponent_class(-exponent, q, field.size)
    roots = field.elements(inverse_class[1:])
    return scale_poly(poly_from_roots(roots), field.element(-exponent))


def cofactor_poly(field: Field, gamma: FieldElement, q: int) -> galois.Poly:
    """(x^N - 1)/p_(gamma^-1)(x)"""
    inverse = field.element(-field.exponent(gamma))
    return x_pow_minus_one(field.gf, field.size) // minimal_polynomial(field, inverse, q)


def zero_component_pattern(field: Field, gamma: FieldElement, basis: Basis) -> np.ndarray:
    """Матрица m x m: [i, j] истинно, если mu_j(beta_i g(gamma)) - нулевое слово"""
    words = basis.elements[:, None] * g_vector(field, gamma)[None, :]
    coordinates = basis.decompose(words)
    return ~np.any(coordinates != 0, axis=1)


def zero_component_predicted(field: Field, gamma: FieldElement, basis: Basis) -> np.ndarray:
    """Предсказание нулевых компонент без построения слов.

    mu_j(beta_i g(gamma)) = 0 тогда и только тогда, когда j != i и beta_i GF(q^(m_gamma))
    лежит в оболочке базисных элементов без beta_j. Степени 1, gamma, ..., gamma^(m_gamma-1)
    образуют базис GF(q^(m_gamma)) над GF(q).
    """
    exponent = field.exponent(gamma)
    m_gamma = len(exponent_class(exponent, basis.q, field.size))
    subfield_basis = field.elements(np.arange(m_gamma) * exponent)
    coordinates = basis.decompose(basis.elements[:, None] * subfield_basis[None, :])
    predicted = ~np.any(coordinates != 0, axis=1)
    np.fill_diagonal(predicted, False)
    return predicted
