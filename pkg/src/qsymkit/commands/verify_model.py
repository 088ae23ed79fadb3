from qsymkit.commands.common import (
    CommandResult,
    add_common_arguments,
    add_selector_arguments,
    load_model,
    select_presentation,
)
from qsymkit.matrix_models import verify_model
from qsymkit.models import RunConfig

name = "verify-model"


def register(subparsers):
    parser = subparsers.add_parser(name, help="check a matrix model against a presentation")
    parser.add_argument("--model", required=True, help="matrix model JSON file")
    add_selector_arguments(parser)
    add_common_arguments(parser)


def execute(config: RunConfig) -> CommandResult:
    model = load_model(config.model)
    report = verify_model(model, select_presentation(config))
    return CommandResult(
        text=report.to_text(),
        data=report.model_dump(),
        exit_code=0 if report.passed else 1,
    )
