from qsymkit.commands.common import CommandResult, add_common_arguments
from qsymkit.continuum import GeneratingSeries, derive_conclusions, expand_isometry_relations
from qsymkit.models import RunConfig, SeriesKind

name = "continuum"


def register(subparsers):
    parser = subparsers.add_parser(name, help="isometry relations of the interval or the circle")
    parser.add_argument("--space", required=True, choices=[str(kind) for kind in SeriesKind])
    parser.add_argument("--degree", required=True, type=int, help="series bound N (at least 2)")
    add_common_arguments(parser)


def execute(config: RunConfig) -> CommandResult:
    series = GeneratingSeries(kind=config.space, bound=config.degree)
    relations = expand_isometry_relations(series)
    conclusions = derive_conclusions(relations, series.kind)

    lines = [f"# continuum space={series.kind} degree={series.bound}", "# relations"]
    lines.extend(relations.lines())
    lines.append("# conclusions")
    lines.extend(conclusions.lines())
    return CommandResult(
        text="\n".join(lines) + "\n",
        data={
            "space": str(series.kind),
            "degree": series.bound,
            "relations": list(relations.lines()),
            "conclusions": list(conclusions.lines()),
        },
    )
