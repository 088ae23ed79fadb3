from itertools import islice
from typing import Dict, List, Optional, Sequence, Tuple
import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher, GraphMatcher
from pydantic import BaseModel, ConfigDict, field_validator
from qsymkit.algebra import Presentation, abelianize, evaluate_scalar, zero_one_solutions
from qsymkit.config import FULL_CLOSURE_CHECK_LIMIT
from qsymkit.settings import settings
from qsymkit.spaces import FiniteGraph, FiniteMetricSpace
from qsymkit.utils.logging import logger


class PermutationSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    perm: Tuple[int, ...]
    source: str = ""

    @field_validator("perm")
    @classmethod
    def check_bijection(cls, perm: Tuple[int, ...]) -> Tuple[int, ...]:
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
        return perm

    def one_line(self) -> str:
        return " ".join(str(image) for image in self.perm)

    def __lt__(self, other: "PermutationSolution") -> bool:
        return self.perm < other.perm


class GroupSummary(BaseModel):
    order: int
    orbits: List[List[int]]


def _check_size(n: int, size_cap: Optional[int]):
    cap = settings.size_cap if size_cap is None else size_cap
    if n > cap:
        raise ValueError(f"{n} points exceed the size cap {cap}; raise it with --size-cap")


def _collect(matcher, n: int, source: str) -> List[PermutationSolution]:
    solutions = {
        tuple(mapping[i] for i in range(n)) for mapping in matcher.isomorphisms_iter()
    }
    return [PermutationSolution(perm=perm, source=source) for perm in sorted(solutions)]


def enumerate_metric_automorphisms(
    X: FiniteMetricSpace, size_cap: Optional[int] = None
) -> List[PermutationSolution]:
    """All sigma with sqdist[sigma(i)][sigma(j)] == sqdist[i][j], sorted in one-line notation."""
    _check_size(X.n, size_cap)

    graph = nx.complete_graph(X.n)
    for i in range(X.n):
        # distance multiset of a point is preserved by every isometry
        graph.nodes[i]["invariant"] = tuple(sorted(str(entry) for entry in X.sqdist[i]))
    for i, j in graph.edges:
        graph.edges[i, j]["sqdist"] = X.sqdist[i][j]

    matcher = GraphMatcher(
        graph,
        graph,
        node_match=lambda a, b: a["invariant"] == b["invariant"],
        edge_match=lambda a, b: a["sqdist"] == b["sqdist"],
    )
    solutions = _collect(matcher, X.n, "metric")
    logger.info(f"{len(solutions)} isometries of a {X.n}-point space")
    return solutions


def enumerate_graph_automorphisms(G: FiniteGraph, size_cap: Optional[int] = None) -> List[PermutationSolution]:
    _check_size(G.n, size_cap)

    graph = G.to_networkx()
    for vertex in graph.nodes:
        if G.directed:
            graph.nodes[vertex]["invariant"] = (graph.in_degree(vertex), graph.out_degree(vertex))
        else:
            graph.nodes[vertex]["invariant"] = graph.degree(vertex)

    matcher_class = DiGraphMatcher if G.directed else GraphMatcher
    matcher = matcher_class(graph, graph, node_match=lambda a, b: a["invariant"] == b["invariant"])
    solutions = _collect(matcher, G.n, "graph")
    logger.info(f"{len(solutions)} automorphisms of a {G.n}-vertex graph")
    return solutions


def _compose(first: Tuple[int, ...], second: Tuple[int, ...]) -> Tuple[int, ...]:
    # apply first, then second
    return tuple(second[image] for image in first)


def _inverse(perm: Tuple[int, ...]) -> Tuple[int, ...]:
    inverse = [0] * len(perm)
    for i, image in enumerate(perm):
        inverse[image] = i
    return tuple(inverse)


def group_order_and_orbits(sols: Sequence[PermutationSolution]) -> GroupSummary:
    """Order and vertex orbits of a permutation group given by all of its elements."""
    if not sols:
        raise ValueError("a permutation group has at least the identity")

    perms = [s.perm for s in sols]
    n = len(perms[0])
    if any(len(perm) != n for perm in perms):
        raise ValueError("permutations act on different point sets")

    elements = set(perms)
    if tuple(range(n)) not in elements:
        raise ValueError("solution set does not contain the identity")

    for perm in perms:
        if _inverse(perm) not in elements:
            raise ValueError(f"solution set is not closed under inverses: {perm}")

    # large groups are checked against a generating-size sample only
    partners = perms if len(perms) <= FULL_CLOSURE_CHECK_LIMIT else list(islice(perms, 32))
    for perm in perms:
        for other in partners:
            product = _compose(perm, other)
            if product not in elements:
                raise ValueError(f"solution set is not closed under composition: {perm} * {other}")

    orbits = nx.utils.UnionFind(range(n))
    for perm in perms:
        for i, image in enumerate(perm):
            orbits.union(i, image)

    groups = sorted(sorted(group) for group in orbits.to_sets())
    return GroupSummary(order=len(elements), orbits=groups)


def _block_permutation(P: Presentation, values: Dict[str, int]) -> Tuple[int, ...]:
    perm: List[int] = []
    for offset, block in zip(P.block_offsets(), P.blocks):
        for row in block.entries:
            hits = [j for j, entry in enumerate(row) if evaluate_scalar(entry, values) == 1]
            if len(hits) != 1:
                raise ValueError(f"block {block.label} does not evaluate to a permutation matrix")
            perm.append(offset + hits[0])
    return tuple(perm)


def classical_points(P: Presentation) -> List[Tuple[Dict[str, int], PermutationSolution]]:
    """{0,1} points of the abelianization together with the permutation read off the blocks."""
    if not P.blocks:
        raise ValueError(f"{P.name} declares no magic-unitary block")

    commutative = abelianize(P)
    names = P.universe.names
    points = []
    for assignment in zero_one_solutions(commutative):
        values = dict(zip(names, assignment))
        solution = PermutationSolution(perm=_block_permutation(P, values), source=P.name)
        points.append((values, solution))
    return points


def classical_solutions(P: Presentation) -> List[PermutationSolution]:
    perms = sorted({solution.perm for _, solution in classical_points(P)})
    return [PermutationSolution(perm=perm, source=P.name) for perm in perms]
