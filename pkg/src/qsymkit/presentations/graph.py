from typing import List
from qsymkit.algebra import GeneratorUniverse, NCPolynomial, Presentation
from qsymkit.config import edge_orthogonality_builder_name
from qsymkit.presentations.magic import magic_unitary_base
from qsymkit.spaces import FiniteGraph


def edge_orthogonality_presentation(G: FiniteGraph) -> Presentation:
    """Magic unitary on the vertices with q_ai q_bj = 0 whenever exactly one of ab, ij is an edge."""
    if G.directed:
        raise ValueError("edge_orthogonality_presentation needs an undirected graph")

    n = G.n
    adjacency = G.adjacency()

    def orthogonality(universe: GeneratorUniverse, q: List[List[NCPolynomial]]):
        relations = []
        for a in range(n):
            for b in range(n):
                for i in range(n):
                    for j in range(n):
                        if adjacency[a][b] != adjacency[i][j]:
                            relations.append(q[a][i] * q[b][j])
        return relations

    return magic_unitary_base(n, edge_orthogonality_builder_name, G.to_payload(), orthogonality)
