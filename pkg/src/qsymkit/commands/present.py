from qsymkit.commands.common import CommandResult, add_common_arguments, add_selector_arguments, select_presentation
from qsymkit.models import RunConfig

name = "present"


def register(subparsers):
    parser = subparsers.add_parser(name, help="print a presentation in canonical form")
    add_selector_arguments(parser)
    add_common_arguments(parser)


def execute(config: RunConfig) -> CommandResult:
    presentation = select_presentation(config)
    return CommandResult(text=presentation.to_text(), data=presentation.to_payload())
