from dataclasses import dataclass, field as dataclass_field
from typing import Iterable

import galois

from ..galois_field.field import FieldElement
from .basis import Basis


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """Структурные константы базиса.

    Attributes:
        basis: Базис
        products: products[i, k, j] = mu_j(beta_i beta_k)
        frobenius: frobenius[s][i, j] = mu_j(beta_i^(q^s))
    """
    basis: Basis
    products: galois.FieldArray
    frobenius: dict[int, galois.FieldArray] = dataclass_field(default_factory=dict)

    def frobenius_matrix(self, s: int) -> galois.FieldArray:
        if s not in self.frobenius:
            basis = self.basis
            return basis.decompose(basis.elements ** (basis.q ** s))
        return self.frobenius[s]


def structure_constants(basis: Basis, frobenius_exponents: Iterable[int] = ()) -> StructureConstants:
    """Вычисляет константы произведений и степеней Фробениуса через разложение в базисе"""
    beta = basis.elements
    products = basis.decompose(beta[:, None] * beta[None, :])
    frobenius = {
        s: basis.decompose(beta ** (basis.q ** s))
        for s in sorted(set(frobenius_exponents) | {0})
    }
    return StructureConstants(basis=basis, products=products, frobenius=frobenius)


def f_coeff(i: int, l: int, mu: galois.FieldArray, constants: StructureConstants) -> FieldElement:
    """Коэффициентная функция f_(i,l)(mu) = sum_j mu_l(beta_i beta_j) mu_j"""
    terms = constants.products[i, :, l] * mu
    return terms.sum()


def coefficient_matrix(constants: StructureConstants, gamma: FieldElement, j: int) -> galois.FieldArray:
    """Матрица m x N значений f_(i,j)(mu(gamma^t)), t = 0..N-1.

    Строка i - это mu_j(beta_i g(gamma)), j-я компонента слова beta_i g(gamma).
    """
    basis = constants.basis
    field = basis.field
    exponent = field.exponent(gamma)
    powers = field.elements(exponent * t for t in range(field.size))
    mus = basis.decompose(powers)
    return (mus @ constants.products[:, :, j].T).T
