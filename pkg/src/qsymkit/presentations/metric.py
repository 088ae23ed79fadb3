from typing import List
from qsymkit.algebra import GeneratorUniverse, NCPolynomial, Presentation
from qsymkit.config import metric_commutation_builder_name, qiso_quadratic_builder_name
from qsymkit.presentations.magic import magic_unitary_base
from qsymkit.spaces import FiniteMetricSpace


def metric_commutation_presentation(X: FiniteMetricSpace) -> Presentation:
    """Magic unitary commuting with the squared-distance matrix.

    Graph metrics commute with the finite part and with the infinity indicator separately.
    """
    n = X.n
    weights = X.weight_matrices()

    def commutation(universe: GeneratorUniverse, q: List[List[NCPolynomial]]):
        relations = []
        for D in weights:
            for k in range(n):
                for l in range(n):
                    relation = universe.zero()
                    for i in range(n):
                        if D[i][l]:
                            relation = relation + q[k][i] * D[i][l]
                        if D[k][i]:
                            relation = relation - q[i][l] * D[k][i]
                    relations.append(relation)
        return relations

    return magic_unitary_base(n, metric_commutation_builder_name, X.to_payload(), commutation)


def qiso_quadratic_presentation(X: FiniteMetricSpace) -> Presentation:
    """Magic unitary with sum_ij D_ij q_ki q_lj = D_kl for each weight matrix D."""
    n = X.n
    weights = X.weight_matrices()

    def quadratic(universe: GeneratorUniverse, q: List[List[NCPolynomial]]):
        relations = []
        for D in weights:
            for k in range(n):
                for l in range(n):
                    relation = universe.constant(-D[k][l])
                    for i in range(n):
                        for j in range(n):
                            if D[i][j]:
                                relation = relation + q[k][i] * q[l][j] * D[i][j]
                    relations.append(relation)
        return relations

    return magic_unitary_base(n, qiso_quadratic_builder_name, X.to_payload(), quadratic)
