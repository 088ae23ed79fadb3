from qsymkit.checks import run_checks
from qsymkit.commands.common import (
    CommandResult,
    add_common_arguments,
    add_space_arguments,
    load_graph,
    load_metric,
    load_tree,
)
from qsymkit.models import RunConfig

name = "check"


def register(subparsers):
    parser = subparsers.add_parser(name, help="run the invariant suite on an input object")
    group = add_space_arguments(parser)
    group.add_argument("--tree", help="tree diagram JSON file")
    add_common_arguments(parser)


def execute(config: RunConfig) -> CommandResult:
    if config.metric is not None:
        obj = load_metric(config.metric)
    elif config.graph is not None:
        obj = load_graph(config.graph)
    else:
        obj = load_tree(config.tree)

    results = run_checks(obj, size_cap=config.size_cap, degree_bound=config.degree_bound)
    passed = all(result.passed for result in results)

    lines = [result.line() for result in results]
    lines.append(f"passed={'yes' if passed else 'no'}")
    return CommandResult(
        text="\n".join(lines) + "\n",
        data={"checks": [result.model_dump() for result in results], "passed": passed},
        exit_code=0 if passed else 1,
    )
