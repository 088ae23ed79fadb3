from qsymkit.commands.common import CommandResult, add_common_arguments, add_space_arguments, load_metric
from qsymkit.models import RunConfig
from qsymkit.spaces import laplacian
from qsymkit.utils import format_matrix

name = "laplacian"


def register(subparsers):
    parser = subparsers.add_parser(name, help="exact Laplacian of a finite metric space")
    add_space_arguments(parser, graphs=False)
    add_common_arguments(parser)


def execute(config: RunConfig) -> CommandResult:
    L = laplacian(load_metric(config.metric))
    return CommandResult(
        text=format_matrix(L) + "\n",
        data={"laplacian": [[str(L[i, j]) for j in range(L.cols)] for i in range(L.rows)]},
    )
