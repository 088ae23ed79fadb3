from fractions import Fraction
from typing import Optional
from qsymkit.commands.common import CommandResult, add_common_arguments, add_selector_arguments, select_presentation
from qsymkit.matrix_models import Witness, WitnessFamily, noncommutativity_witness
from qsymkit.models import RunConfig, WitnessFamilyKind
from qsymkit.utils import format_matrix, parse_rational

name = "witness"


def register(subparsers):
    parser = subparsers.add_parser(name, help="search a model family for non-commuting generators")
    add_selector_arguments(parser)
    add_family_arguments(parser)
    add_common_arguments(parser)


def add_family_arguments(parser):
    parser.add_argument(
        "--family",
        choices=[str(kind) for kind in WitnessFamilyKind],
        default=str(WitnessFamilyKind.TWO_PROJECTION_BLOCKS),
        help="model family to search (default: two-projection-blocks)",
    )
    parser.add_argument(
        "--params",
        nargs="+",
        default=["0", "1"],
        help="rational slopes of the line projections (default: 0 1)",
    )


def family_from_config(config: RunConfig) -> WitnessFamily:
    return WitnessFamily(
        kind=config.family,
        parameters=tuple(Fraction(parse_rational(t)) for t in config.params),
    )


def witness_lines(witness: Optional[Witness], family: WitnessFamily):
    if witness is None:
        return [f"no witness found in family {family.kind}"]

    lines = [f"witness {witness.pair[0]} {witness.pair[1]} dim={witness.model.dim}"]
    for generator, matrix in witness.model.named().items():
        lines.append(f"{generator} = {format_matrix(matrix)}")
    return lines


def execute(config: RunConfig) -> CommandResult:
    family = family_from_config(config)
    witness = noncommutativity_witness(select_presentation(config), family)

    data = {"family": str(family.kind), "witness": None}
    if witness is not None:
        data["witness"] = {"pair": list(witness.pair), "model": witness.model.to_payload()}
    return CommandResult(text="\n".join(witness_lines(witness, family)) + "\n", data=data)
