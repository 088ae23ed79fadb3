from qsymkit.algebra import abelianize
from qsymkit.commands.common import CommandResult, add_common_arguments, add_selector_arguments, select_presentation
from qsymkit.models import RunConfig

name = "abelianize"


def register(subparsers):
    parser = subparsers.add_parser(name, help="maximal commutative quotient of a presentation")
    add_selector_arguments(parser)
    add_common_arguments(parser)


def execute(config: RunConfig) -> CommandResult:
    commutative = abelianize(select_presentation(config))
    return CommandResult(
        text=commutative.to_text(),
        data={
            "source": commutative.source,
            "variables": list(commutative.variable_names),
            "idempotent": [
                name for name, flag in zip(commutative.variable_names, commutative.idempotent) if flag
            ],
            "relations": [commutative.format_relation(r) for r in commutative.relations],
        },
    )
