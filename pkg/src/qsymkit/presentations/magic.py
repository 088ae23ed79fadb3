from typing import Callable, List, Sequence
from qsymkit.algebra import GeneratorUniverse, MagicBlock, NCPolynomial, Presentation
from qsymkit.config import magic_unitary_builder_name
from qsymkit.utils import input_hash


def magic_generator_name(prefix: str, n: int, i: int, j: int) -> str:
    # 1-based indices; separated once they can have two digits
    if n < 10:
        return f"{prefix}{i + 1}{j + 1}"
    return f"{prefix}{i + 1}_{j + 1}"


def magic_names(n: int, prefix: str = "q") -> List[List[str]]:
    return [[magic_generator_name(prefix, n, i, j) for j in range(n)] for i in range(n)]


def magic_block(universe: GeneratorUniverse, names: Sequence[Sequence[str]], label: str = "") -> MagicBlock:
    return MagicBlock([[universe.gen(name) for name in row] for row in names], label=label)


def magic_grid(presentation: Presentation) -> List[List[NCPolynomial]]:
    """Entries of the single block of a magic-unitary based presentation."""
    return [list(row) for row in presentation.blocks[0].entries]


def magic_unitary_base(
    n: int,
    builder: str,
    payload,
    extra: Callable[[GeneratorUniverse, List[List[NCPolynomial]]], List[NCPolynomial]] = None,
    prefix: str = "q",
) -> Presentation:
    if n < 1:
        raise ValueError("a magic unitary needs n >= 1")

    names = magic_names(n, prefix)
    universe = GeneratorUniverse.from_names([name for row in names for name in row])
    block = magic_block(universe, names, label="magic")
    grid = [list(row) for row in block.entries]
    relations = extra(universe, grid) if extra else []

    return Presentation.build(
        universe,
        relations,
        blocks=[block],
        builder=builder,
        input_hash=input_hash(payload),
    )


def magic_unitary_presentation(n: int) -> Presentation:
    return magic_unitary_base(n, magic_unitary_builder_name, {"n": n})
