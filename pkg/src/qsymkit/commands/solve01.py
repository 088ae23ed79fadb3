from qsymkit.algebra import abelianize, zero_one_solutions
from qsymkit.commands.common import CommandResult, add_common_arguments, add_selector_arguments, select_presentation
from qsymkit.models import RunConfig

name = "solve01"


def register(subparsers):
    parser = subparsers.add_parser(name, help="{0,1} points of the abelianization")
    add_selector_arguments(parser)
    add_common_arguments(parser)


def execute(config: RunConfig) -> CommandResult:
    commutative = abelianize(select_presentation(config))
    solutions = zero_one_solutions(commutative)

    lines = [" ".join(str(value) for value in solution) for solution in solutions]
    lines.append(f"count={len(solutions)}")
    return CommandResult(
        text="\n".join(lines) + "\n",
        data={
            "variables": list(commutative.variable_names),
            "solutions": [list(solution) for solution in solutions],
            "count": len(solutions),
        },
    )
