from qsymkit.commands.common import CommandResult, add_common_arguments
from qsymkit.commands.witness import add_family_arguments, family_from_config, witness_lines
from qsymkit.matrix_models import (
    Witness,
    noncommutativity_witness,
    noncommuting_pair,
    transport_model,
    verify_model,
)
from qsymkit.models import CantorForm, RunConfig
from qsymkit.presentations import (
    cantor_inductive_system,
    cantor_level_presentation,
    cantor_limit_presentation,
    cantor_reconstruction,
    inductive_limit_assemble,
)

name = "cantor"


def register(subparsers):
    parser = subparsers.add_parser(name, help="Cantor tower presentations and witness pipeline")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--level", type=int, help="presentation of level N")
    group.add_argument("--limit", type=int, help="projection presentation of the limit, truncated at depth D")
    parser.add_argument(
        "--form",
        choices=[str(f) for f in CantorForm],
        default=str(CantorForm.RAW),
        help="level presentation form (default: raw)",
    )
    parser.add_argument("--assemble", action="store_true", help="assemble levels 1..N as an inductive limit")
    parser.add_argument("--witness", action="store_true", help="search and verify a noncommutativity witness")
    add_family_arguments(parser)
    add_common_arguments(parser)


def _level_presentation(config: RunConfig):
    if config.assemble:
        levels, maps = cantor_inductive_system(config.level)
        return inductive_limit_assemble(levels, maps)
    return cantor_level_presentation(config.level, config.form)


def _witness_for(presentation, config: RunConfig):
    """Search the reduced form, then carry the model over to the raw generators if needed."""
    family = family_from_config(config)
    reduced, images = cantor_reconstruction(config.level)
    witness = noncommutativity_witness(reduced, family)

    if witness is not None and presentation.universe != reduced.universe:
        model = transport_model(witness.model, images, presentation.universe)
        witness = Witness(pair=noncommuting_pair(model), model=model)

    lines = witness_lines(witness, family)
    data = {"family": str(family.kind), "witness": None}
    if witness is not None:
        report = verify_model(witness.model, presentation)
        lines.append(f"verified={'yes' if report.passed else 'no'}")
        data["witness"] = {
            "pair": list(witness.pair),
            "model": witness.model.to_payload(),
            "verified": report.passed,
        }
    return ["# " + line for line in lines], data


def execute(config: RunConfig) -> CommandResult:
    if config.limit is not None:
        if config.witness or config.assemble:
            raise ValueError("--witness and --assemble need --level")
        presentation = cantor_limit_presentation(config.limit)
        return CommandResult(text=presentation.to_text(), data=presentation.to_payload())

    presentation = _level_presentation(config)
    text = presentation.to_text()
    data = presentation.to_payload()

    if config.witness:
        lines, data["witness_search"] = _witness_for(presentation, config)
        text += "\n".join(lines) + "\n"

    return CommandResult(text=text, data=data)
