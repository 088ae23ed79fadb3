import json
from typing import Any, Callable, Dict, Type, TypeVar
from pydantic import BaseModel, ValidationError
from qsymkit.algebra import Presentation
from qsymkit.matrix_models import MatrixModel
from qsymkit.models import (
    CantorForm,
    GraphInput,
    MatrixModelInput,
    MetricSpaceInput,
    OutputFormat,
    PresentationScheme,
    RunConfig,
    TreeInput,
)
from qsymkit.presentations import (
    cantor_level_presentation,
    edge_orthogonality_presentation,
    magic_unitary_presentation,
    metric_commutation_presentation,
    qiso_quadratic_presentation,
    tree_diagram_presentation,
)
from qsymkit.settings import settings
from qsymkit.spaces import FiniteGraph, FiniteMetricSpace, TreeDiagram, graph_to_metric

Schema = TypeVar("Schema", bound=BaseModel)


class InputError(Exception):
    """An input file is missing, is not JSON, or does not match its schema."""


class CommandResult(BaseModel):
    text: str
    data: Dict[str, Any]
    exit_code: int = 0

    def render(self, output_format: OutputFormat) -> str:
        if output_format == OutputFormat.JSON:
            return json.dumps(self.data, indent=2, sort_keys=True) + "\n"
        return self.text


def add_common_arguments(parser):
    parser.add_argument(
        "--degree-bound",
        type=int,
        default=settings.degree_bound,
        help=f"degree bound for reduction (default: {settings.degree_bound})",
    )
    parser.add_argument(
        "--size-cap",
        type=int,
        default=settings.size_cap,
        help=f"largest object handed to brute-force search (default: {settings.size_cap})",
    )
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=[str(f) for f in OutputFormat],
        default=str(OutputFormat.TEXT),
        help="output format (default: text)",
    )


def add_space_arguments(parser, graphs: bool = True):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--metric", help="metric space JSON file")
    if graphs:
        group.add_argument("--graph", help="graph JSON file")
    return group


def add_selector_arguments(parser):
    """Arguments choosing the presentation a command works on."""
    group = add_space_arguments(parser)
    group.add_argument("--magic", type=int, help="magic unitary of size N")
    group.add_argument("--tree", help="tree diagram JSON file")
    group.add_argument("--cantor", type=int, help="Cantor tower at level N")
    parser.add_argument(
        "--scheme",
        choices=[str(s) for s in PresentationScheme],
        help="relation scheme for metric spaces and graphs",
    )
    parser.add_argument("--level", type=int, help="tree level (default: the depth)")
    parser.add_argument(
        "--form",
        choices=[str(f) for f in CantorForm],
        default=str(CantorForm.RAW),
        help="Cantor tower form (default: raw)",
    )


def load_input(path: str, schema: Type[Schema]) -> Schema:
    try:
        with open(path) as f:
            data = json.load(f)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}")

    try:
        return schema.model_validate(data)
    except ValidationError as exc:
        raise InputError(f"{path}: {exc}")


def _build(path: str, builder: Callable[[], Any]):
    # objects that violate their own invariants count as malformed input
    try:
        return builder()
    except ValidationError as exc:
        raise InputError(f"{path}: {exc}")


def load_metric(path: str) -> FiniteMetricSpace:
    data = load_input(path, MetricSpaceInput)
    return _build(path, lambda: FiniteMetricSpace(n=data.n, sqdist=data.sqdist))


def load_graph(path: str) -> FiniteGraph:
    data = load_input(path, GraphInput)
    return _build(path, lambda: FiniteGraph(vertices=data.vertices, edges=data.edges, directed=data.directed))


def load_tree(path: str) -> TreeDiagram:
    data = load_input(path, TreeInput)
    return _build(path, lambda: TreeDiagram(levels=data.levels, parents=data.parents))


def load_model(path: str) -> MatrixModel:
    # shape errors are domain errors of the model, not parse errors
    return MatrixModel.from_input(load_input(path, MatrixModelInput))


def _metric_presentation(X: FiniteMetricSpace, scheme: PresentationScheme) -> Presentation:
    if scheme == PresentationScheme.QISO:
        return qiso_quadratic_presentation(X)
    if scheme == PresentationScheme.EDGES:
        raise ValueError("the edges scheme needs a graph")
    return metric_commutation_presentation(X)


def select_presentation(config: RunConfig) -> Presentation:
    if config.magic is not None:
        return magic_unitary_presentation(config.magic)

    if config.metric is not None:
        return _metric_presentation(load_metric(config.metric), config.scheme or PresentationScheme.COMMUTATION)

    if config.graph is not None:
        G = load_graph(config.graph)
        if config.scheme in (None, PresentationScheme.EDGES):
            return edge_orthogonality_presentation(G)
        return _metric_presentation(graph_to_metric(G), config.scheme)

    if config.tree is not None:
        T = load_tree(config.tree)
        return tree_diagram_presentation(T, config.level if config.level is not None else T.depth)

    if config.cantor is not None:
        return cantor_level_presentation(config.cantor, config.form)

    raise InputError("one of --magic, --metric, --graph, --tree or --cantor is required")
