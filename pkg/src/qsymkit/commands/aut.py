from qsymkit.classical import (
    enumerate_graph_automorphisms,
    enumerate_metric_automorphisms,
    group_order_and_orbits,
)
from qsymkit.commands.common import (
    CommandResult,
    add_common_arguments,
    add_space_arguments,
    load_graph,
    load_metric,
)
from qsymkit.models import RunConfig

name = "aut"


def register(subparsers):
    parser = subparsers.add_parser(name, help="classical isometries or graph automorphisms")
    add_space_arguments(parser)
    add_common_arguments(parser)


def execute(config: RunConfig) -> CommandResult:
    if config.metric is not None:
        solutions = enumerate_metric_automorphisms(load_metric(config.metric), config.size_cap)
    else:
        solutions = enumerate_graph_automorphisms(load_graph(config.graph), config.size_cap)

    summary = group_order_and_orbits(solutions)
    lines = [solution.one_line() for solution in solutions] + [f"order={summary.order}"]
    return CommandResult(
        text="\n".join(lines) + "\n",
        data={
            "permutations": [list(solution.perm) for solution in solutions],
            "order": summary.order,
            "orbits": summary.orbits,
        },
    )
