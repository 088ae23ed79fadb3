from typing import Callable, List, Optional, Sequence, Tuple, Union
import networkx as nx
from pydantic import BaseModel
from sympy import zeros
from qsymkit.algebra import Presentation, reduce
from qsymkit.classical import (
    PermutationSolution,
    classical_solutions,
    enumerate_graph_automorphisms,
    enumerate_metric_automorphisms,
    group_order_and_orbits,
)
from qsymkit.presentations import (
    edge_orthogonality_presentation,
    metric_commutation_presentation,
    qiso_quadratic_presentation,
    tree_diagram_presentation,
)
from qsymkit.settings import settings
from qsymkit.spaces import (
    FiniteGraph,
    FiniteMetricSpace,
    TreeDiagram,
    graph_to_metric,
    laplacian,
    truncate,
)
from qsymkit.utils.concurrency import run_in_workers
from qsymkit.utils.logging import logger

# scheme-to-scheme reduction is only attempted on spaces this small
SCHEME_REDUCTION_LIMIT = 3

CheckedObject = Union[FiniteMetricSpace, FiniteGraph, TreeDiagram]


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok" if self.passed else "FAILED"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _perms(solutions: Sequence[PermutationSolution]) -> List[Tuple[int, ...]]:
    return [s.perm for s in solutions]


def _compare(name: str, found: Sequence[PermutationSolution], expected: Sequence[PermutationSolution]) -> CheckResult:
    found, expected = _perms(found), _perms(expected)
    if found == expected:
        return CheckResult(name=name, passed=True, detail=f"{len(found)} solutions")
    return CheckResult(
        name=name,
        passed=False,
        detail=f"{len(found)} solutions against {len(expected)} expected",
    )


def _closure(name: str, solutions: Sequence[PermutationSolution]) -> CheckResult:
    try:
        summary = group_order_and_orbits(solutions)
    except ValueError as exc:
        return CheckResult(name=name, passed=False, detail=str(exc))
    return CheckResult(name=name, passed=True, detail=f"order={summary.order} orbits={len(summary.orbits)}")


def _scheme_follows(name: str, relations_of: Presentation, modulo: Presentation, degree_bound: int) -> CheckResult:
    for relation in relations_of.relations:
        result = reduce(relation, modulo.relations, max(degree_bound, relation.degree()), closure=True)
        if not result.is_zero:
            return CheckResult(name=name, passed=False, detail=f"{relation} reduces to {result.normal_form}")
    return CheckResult(name=name, passed=True)


def _metric_checks(X: FiniteMetricSpace, size_cap: Optional[int], degree_bound: int) -> List[Callable[[], CheckResult]]:
    oracle = enumerate_metric_automorphisms(X, size_cap)
    commutation = metric_commutation_presentation(X)
    qiso = qiso_quadratic_presentation(X)

    def laplacian_rows() -> CheckResult:
        if X.n < 2:
            return CheckResult(name="laplacian rows sum to zero", passed=True, detail="single point")
        L = laplacian(X)
        bad = [i for i in range(X.n) if sum(L.row(i)) != 0]
        return CheckResult(
            name="laplacian rows sum to zero",
            passed=not bad,
            detail=f"row {bad[0]}" if bad else "",
        )

    def laplacian_commutes() -> CheckResult:
        if X.n < 2:
            return CheckResult(name="laplacian commutes with isometries", passed=True, detail="single point")
        L = laplacian(X)
        for solution in oracle:
            P = zeros(X.n, X.n)
            for i, image in enumerate(solution.perm):
                P[image, i] = 1
            if P * L != L * P:
                return CheckResult(
                    name="laplacian commutes with isometries", passed=False, detail=solution.one_line()
                )
        return CheckResult(name="laplacian commutes with isometries", passed=True)

    checks = [
        laplacian_rows,
        laplacian_commutes,
        lambda: _closure("isometries form a group", oracle),
        lambda: _compare("commutation scheme matches isometries", classical_solutions(commutation), oracle),
        lambda: _compare("qiso scheme matches isometries", classical_solutions(qiso), oracle),
    ]
    if X.n <= SCHEME_REDUCTION_LIMIT:
        checks.append(
            lambda: _scheme_follows("commutation relations follow from qiso", commutation, qiso, degree_bound)
        )
        checks.append(
            lambda: _scheme_follows("qiso relations follow from commutation", qiso, commutation, degree_bound)
        )
    return checks


def _graph_checks(G: FiniteGraph, size_cap: Optional[int]) -> List[Callable[[], CheckResult]]:
    if G.directed:
        raise ValueError("check needs an undirected graph")

    oracle = enumerate_graph_automorphisms(G, size_cap)
    checks = [
        lambda: _closure("automorphisms form a group", oracle),
        lambda: _compare(
            "edge scheme matches automorphisms",
            classical_solutions(edge_orthogonality_presentation(G)),
            oracle,
        ),
    ]
    if G.n > 1 and nx.is_connected(G.to_networkx()):
        checks.append(
            lambda: _compare(
                "graph metric scheme matches automorphisms",
                classical_solutions(metric_commutation_presentation(graph_to_metric(G))),
                oracle,
            )
        )
    return checks


def level_preserving(solutions: Sequence[PermutationSolution]) -> List[PermutationSolution]:
    """Automorphisms of a truncated tree that fix the root, restricted to the levels below it."""
    restricted = sorted({tuple(v - 1 for v in s.perm[1:]) for s in solutions if s.perm[0] == 0})
    return [PermutationSolution(perm=perm, source="tree") for perm in restricted]


def _tree_checks(T: TreeDiagram, size_cap: Optional[int]) -> List[Callable[[], CheckResult]]:
    if T.depth < 1:
        raise ValueError("check needs a tree of depth at least 1")

    graph = truncate(T, T.depth)
    graph_oracle = enumerate_graph_automorphisms(graph, size_cap)
    oracle = level_preserving(graph_oracle)

    return [
        lambda: _closure("level-preserving automorphisms form a group", oracle),
        lambda: _compare(
            "tree scheme matches level-preserving automorphisms",
            classical_solutions(tree_diagram_presentation(T, T.depth)),
            oracle,
        ),
        lambda: _compare(
            "tree scheme matches edge scheme of the truncation",
            classical_solutions(tree_diagram_presentation(T, T.depth)),
            level_preserving(classical_solutions(edge_orthogonality_presentation(graph))),
        ),
    ]


def run_checks(
    obj: CheckedObject,
    size_cap: Optional[int] = None,
    degree_bound: Optional[int] = None,
) -> List[CheckResult]:
    """Invariant suite for a metric space, a graph or a tree; results in a fixed order."""
    degree_bound = degree_bound or settings.degree_bound

    if isinstance(obj, FiniteMetricSpace):
        checks = _metric_checks(obj, size_cap, degree_bound)
    elif isinstance(obj, FiniteGraph):
        checks = _graph_checks(obj, size_cap)
    elif isinstance(obj, TreeDiagram):
        checks = _tree_checks(obj, size_cap)
    else:
        raise ValueError(f"cannot check an object of type {type(obj).__name__}")

    results = run_in_workers(lambda check: check(), checks, description="checks")
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.warning(f"{len(failed)} checks failed: {', '.join(failed)}")
    return results
