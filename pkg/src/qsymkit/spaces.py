from enum import Enum
from fractions import Fraction
from typing import Any, Dict, FrozenSet, List, Sequence, Tuple
import networkx as nx
from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from sympy import Matrix, Rational, zeros
from qsymkit.utils import parse_rational
from qsymkit.utils.logging import logger


class DistanceToken(Enum):
    INFINITY = "inf"

    def __str__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, str):
            return self.value == other
        elif isinstance(other, DistanceToken):
            return self.value == other.value
        return False

    def __hash__(self):
        return hash(self.value)


INFINITY = DistanceToken.INFINITY


def _parse_entry(value: Any):
    if value == INFINITY or (isinstance(value, str) and value.strip() == "inf"):
        return INFINITY
    return parse_rational(value)


def _triangle_holds(a: Fraction, b: Fraction, c: Fraction) -> bool:
    """sqrt(a) <= sqrt(b) + sqrt(c), decided on squares: a - b - c <= 2 sqrt(bc)."""
    excess = a - b - c
    return excess <= 0 or excess * excess <= 4 * b * c


class FiniteMetricSpace(BaseModel):
    """Finite metric space stored by squared distances; entries may be INFINITY for graph metrics."""

    model_config = ConfigDict(frozen=True)

    n: int
    sqdist: Tuple[Tuple[Any, ...], ...]

    @field_validator("sqdist", mode="before")
    @classmethod
    def parse_entries(cls, value):
        return tuple(tuple(_parse_entry(entry) for entry in row) for row in value)

    @model_validator(mode="after")
    def check_metric(self):
        n = self.n
        if n < 1:
            raise ValueError("a metric space needs at least one point")
        if len(self.sqdist) != n or any(len(row) != n for row in self.sqdist):
            raise ValueError(f"sqdist must be a {n}x{n} matrix")

        for i in range(n):
            if self.sqdist[i][i] != 0:
                raise ValueError(f"sqdist[{i}][{i}] must be 0")
            for j in range(n):
                if self.sqdist[i][j] != self.sqdist[j][i]:
                    raise ValueError(f"sqdist is not symmetric at ({i}, {j})")
                if i != j and self.sqdist[i][j] != INFINITY and self.sqdist[i][j] <= 0:
                    raise ValueError(f"sqdist[{i}][{j}] must be strictly positive")

        for i in range(n):
            for j in range(n):
                for k in range(n):
                    entries = (self.sqdist[i][k], self.sqdist[i][j], self.sqdist[j][k])
                    if INFINITY in entries or len({i, j, k}) < 3:
                        continue
                    if not _triangle_holds(*entries):
                        logger.warning(f"triangle inequality fails for points {i}, {j}, {k}")
                        return self
        return self

    def has_infinities(self) -> bool:
        return any(entry == INFINITY for row in self.sqdist for entry in row)

    def finite_part(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """Squared distances with INFINITY replaced by 0."""
        return tuple(
            tuple(Fraction(0) if entry == INFINITY else entry for entry in row)
            for row in self.sqdist
        )

    def infinity_indicator(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(
            tuple(Fraction(1) if entry == INFINITY else Fraction(0) for entry in row)
            for row in self.sqdist
        )

    def weight_matrices(self) -> List[Tuple[Tuple[Fraction, ...], ...]]:
        """Matrices a magic unitary must commute with: sqdist, or its finite/infinite split."""
        if not self.has_infinities():
            return [self.finite_part()]
        return [self.finite_part(), self.infinity_indicator()]

    def to_payload(self) -> Dict[str, Any]:
        return {"n": self.n, "sqdist": [[str(entry) for entry in row] for row in self.sqdist]}


def from_points(points: Sequence[Sequence[Any]]) -> FiniteMetricSpace:
    """Metric space of rational points under squared Euclidean distance."""
    coordinates = [tuple(parse_rational(x) for x in point) for point in points]
    sqdist = [
        [sum((a - b) ** 2 for a, b in zip(p, q)) for q in coordinates] for p in coordinates
    ]
    return FiniteMetricSpace(n=len(coordinates), sqdist=sqdist)


class FiniteGraph(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...]
    edges: FrozenSet[Tuple[str, str]]
    directed: bool = False

    @model_validator(mode="before")
    @classmethod
    def normalize_edges(cls, data):
        if isinstance(data, dict) and not data.get("directed", False):
            edges = set()
            for a, b in data.get("edges", ()):
                edges.add((a, b))
                edges.add((b, a))
            data = {**data, "edges": frozenset(edges)}
        return data

    @model_validator(mode="after")
    def check_graph(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        known = set(self.vertices)
        for a, b in self.edges:
            if a not in known or b not in known:
                raise ValueError(f"edge ({a}, {b}) references an unknown vertex")
            if a == b:
                raise ValueError(f"self-loop at {a}")
        return self

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index_of(self) -> Dict[str, int]:
        return {vertex: index for index, vertex in enumerate(self.vertices)}

    def adjacency(self) -> Tuple[Tuple[bool, ...], ...]:
        index = self.index_of()
        matrix = [[False] * self.n for _ in range(self.n)]
        for a, b in self.edges:
            matrix[index[a]][index[b]] = True
        return tuple(tuple(row) for row in matrix)

    def to_networkx(self) -> nx.Graph:
        graph = nx.DiGraph() if self.directed else nx.Graph()
        graph.add_nodes_from(range(self.n))
        index = self.index_of()
        graph.add_edges_from((index[a], index[b]) for a, b in self.edges)
        return graph

    def to_payload(self) -> Dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "edges": sorted([list(edge) for edge in self.edges]),
            "directed": self.directed,
        }


class TreeDiagram(BaseModel):
    """Leveled tree: levels[j] vertices at level j, parents[j-1][v] the parent of level-j vertex v."""

    model_config = ConfigDict(frozen=True)

    levels: Tuple[int, ...]
    parents: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_tree(self):
        if not self.levels or self.levels[0] != 1:
            raise ValueError("level 0 must have exactly one vertex")
        if len(self.parents) != len(self.levels) - 1:
            raise ValueError("one parent map is needed per level below the root")

        for j, parent_map in enumerate(self.parents, start=1):
            if len(parent_map) != self.levels[j]:
                raise ValueError(f"parent map of level {j} must have {self.levels[j]} entries")
            if any(p < 0 or p >= self.levels[j - 1] for p in parent_map):
                raise ValueError(f"parent map of level {j} points outside level {j - 1}")
            if set(parent_map) != set(range(self.levels[j - 1])):
                raise ValueError(f"parent map of level {j} is not surjective")
        return self

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def children(self, level: int, index: int) -> List[int]:
        """Indices at level + 1 whose parent is (level, index)."""
        return [v for v, parent in enumerate(self.parents[level]) if parent == index]

    def to_payload(self) -> Dict[str, Any]:
        return {"levels": list(self.levels), "parents": [list(p) for p in self.parents]}


def uniform_tree(branching: int, depth: int) -> TreeDiagram:
    if branching < 1 or depth < 0:
        raise ValueError("branching must be positive and depth non-negative")
    levels = [branching**j for j in range(depth + 1)]
    parents = [[v // branching for v in range(levels[j])] for j in range(1, depth + 1)]
    return TreeDiagram(levels=levels, parents=parents)


def binary_tree(depth: int) -> TreeDiagram:
    return uniform_tree(2, depth)


def chain_diagram(depth: int) -> TreeDiagram:
    return uniform_tree(1, depth)


def laplacian(X: FiniteMetricSpace) -> Matrix:
    """L(f)(i) = 4/(2n-1) * sum_{j != i} (f(j) - f(i)) / d^2(i, j); infinite distances weigh 0."""
    n = X.n
    if n < 2:
        raise ValueError("the Laplacian needs at least two points")

    scale = Rational(4, 2 * n - 1)
    L = zeros(n, n)
    for i in range(n):
        for j in range(n):
            entry = X.sqdist[i][j]
            if i == j or entry == INFINITY:
                continue
            weight = scale / Rational(entry.numerator, entry.denominator)
            L[i, j] = weight
            L[i, i] -= weight
    return L


def graph_to_metric(G: FiniteGraph) -> FiniteMetricSpace:
    if G.directed:
        raise ValueError("graph_to_metric needs an undirected graph")

    adjacency = G.adjacency()
    sqdist = [
        [0 if i == j else (1 if adjacency[i][j] else INFINITY) for j in range(G.n)]
        for i in range(G.n)
    ]
    return FiniteMetricSpace(n=G.n, sqdist=sqdist)


def vertex_label(level: int, index: int) -> str:
    return f"{level}.{index}"


def truncate(T: TreeDiagram, n: int) -> FiniteGraph:
    if n < 0 or n > T.depth:
        raise ValueError(f"level {n} exceeds the depth {T.depth} of the diagram")

    vertices = [vertex_label(level, index) for level in range(n + 1) for index in range(T.levels[level])]
    edges = [
        (vertex_label(level, index), vertex_label(level - 1, parent))
        for level in range(1, n + 1)
        for index, parent in enumerate(T.parents[level - 1])
    ]
    return FiniteGraph(vertices=vertices, edges=edges, directed=False)
