from itertools import product
from typing import Callable, Dict, List, Tuple
from qsymkit.algebra import GeneratorUniverse, MagicBlock, NCPolynomial, Presentation
from qsymkit.config import (
    cantor_level_builder_name,
    cantor_limit_builder_name,
    tree_diagram_builder_name,
)
from qsymkit.models import CantorForm
from qsymkit.spaces import TreeDiagram, binary_tree
from qsymkit.utils import input_hash

# (level, index) -> generator name of the level-m entry for rows i, columns j
Namer = Callable[[int, int, int], str]


def default_namer(level: int, i: int, j: int) -> str:
    return f"a{level}[{i + 1},{j + 1}]"


def multi_index(level: int, index: int) -> str:
    """Binary-tree vertex as a word over {1, 2}: children of I are I1 and I2."""
    digits = []
    for _ in range(level):
        digits.append("12"[index % 2])
        index //= 2
    return "".join(reversed(digits))


def cantor_namer(level: int, i: int, j: int) -> str:
    return f"a[{multi_index(level, i)},{multi_index(level, j)}]"


def tree_level_names(T: TreeDiagram, level: int, namer: Namer) -> List[List[str]]:
    size = T.levels[level]
    return [[namer(level, i, j) for j in range(size)] for i in range(size)]


def interleaving_relations(
    T: TreeDiagram,
    level: int,
    universe: GeneratorUniverse,
    namer: Namer,
) -> List[NCPolynomial]:
    """a^(m)_{i,j} = sum over children r of i of a^(m+1)_{r,s}, for every child s of j."""
    relations = []
    size = T.levels[level]

    for i in range(size):
        for j in range(size):
            upper = universe.gen(namer(level, i, j))
            for s in T.children(level, j):
                lower = universe.zero()
                for r in T.children(level, i):
                    lower = lower + universe.gen(namer(level + 1, r, s))
                relations.append(upper - lower)
    return relations


def _tree_presentation(T: TreeDiagram, n: int, namer: Namer, builder: str, payload) -> Presentation:
    if n < 1 or n > T.depth:
        raise ValueError(f"level {n} is out of range 1..{T.depth}")

    grids = [tree_level_names(T, level, namer) for level in range(1, n + 1)]
    universe = GeneratorUniverse.from_names(
        [name for grid in grids for row in grid for name in row]
    )
    blocks = [
        MagicBlock([[universe.gen(name) for name in row] for row in grid], label=f"level {level}")
        for level, grid in enumerate(grids, start=1)
    ]

    relations = []
    for level in range(1, n):
        relations.extend(interleaving_relations(T, level, universe, namer))

    return Presentation.build(
        universe,
        relations,
        blocks=blocks,
        builder=builder,
        input_hash=input_hash(payload),
        metadata={"levels": str(n)},
    )


def tree_diagram_presentation(T: TreeDiagram, n: int) -> Presentation:
    return _tree_presentation(
        T, n, default_namer, tree_diagram_builder_name, {"tree": T.to_payload(), "level": n}
    )


def reduced_generator_name(level: int, I: str, J: str) -> str:
    # level-2 subprojections keep their short names q1..q4
    if level == 2:
        return f"q{2 * (int(I) - 1) + int(J)}"
    return f"q[{I},{J}]"


def _reduced_entries(n: int) -> Tuple[GeneratorUniverse, List[Dict[Tuple[str, str], NCPolynomial]], List[Tuple[str, NCPolynomial]]]:
    """Affine entries a_{I,J} per level from p and one chosen subprojection per (I, J)."""
    names = ["p"]
    for level in range(2, n + 1):
        parents = ["".join(word) for word in product("12", repeat=level - 1)]
        names.extend(reduced_generator_name(level, I, J) for I in parents for J in parents)
    universe = GeneratorUniverse.from_names(names)

    p = universe.gen("p")
    levels = [{("1", "1"): p, ("1", "2"): 1 - p, ("2", "1"): 1 - p, ("2", "2"): p}]
    chosen = []

    for level in range(2, n + 1):
        previous = levels[-1]
        current = {}
        for (I, J), entry in sorted(previous.items()):
            q = universe.gen(reduced_generator_name(level, I, J))
            chosen.append((reduced_generator_name(level, I, J), entry))
            current[(I + "1", J + "1")] = q
            current[(I + "2", J + "2")] = q
            current[(I + "1", J + "2")] = entry - q
            current[(I + "2", J + "1")] = entry - q
        levels.append(current)

    return universe, levels, chosen


def _level_block(entries: Dict[Tuple[str, str], NCPolynomial], level: int) -> MagicBlock:
    indices = sorted({I for I, _ in entries})
    return MagicBlock([[entries[(I, J)] for J in indices] for I in indices], label=f"level {level}")


def cantor_reconstruction(n: int) -> Tuple[Presentation, Dict[str, NCPolynomial]]:
    """Reduced level-n presentation and the affine expression of every raw generator a[I,J]."""
    reduced = cantor_level_presentation(n, CantorForm.REDUCED)
    _, levels, _ = _reduced_entries(n)

    images = {}
    for entries in levels:
        for (I, J), entry in entries.items():
            images[f"a[{I},{J}]"] = entry
    return reduced, images


def cantor_level_presentation(n: int, form: CantorForm = CantorForm.RAW) -> Presentation:
    if n < 1:
        raise ValueError("the Cantor tower starts at level 1")

    payload = {"level": n, "form": str(form)}
    if form == CantorForm.RAW:
        presentation = _tree_presentation(binary_tree(n), n, cantor_namer, cantor_level_builder_name, payload)
        presentation.metadata["form"] = str(form)
        return presentation

    universe, levels, chosen = _reduced_entries(n)
    relations = []
    for name, entry in chosen:
        q = universe.gen(name)
        # q <= entry
        relations.append(q * entry - q)
        relations.append(entry * q - q)

    return Presentation.build(
        universe,
        relations,
        blocks=[_level_block(entries, level) for level, entries in enumerate(levels, start=1)],
        builder=cantor_level_builder_name,
        input_hash=input_hash(payload),
        metadata={"levels": str(n), "form": str(form)},
    )


def cantor_limit_presentation(depth: int) -> Presentation:
    """p and p_M (M a word over 1..4): p_M1, p_M2 <= p_M and p_M3, p_M4 <= 1 - p_M."""
    if depth < 1:
        raise ValueError("depth must be at least 1")

    words = [""]
    for k in range(1, depth + 1):
        words.extend("".join(w) for w in product("1234", repeat=k))
    universe = GeneratorUniverse.from_names([f"p{word}" for word in words])

    relations = []
    for word in words:
        x = universe.gen(f"p{word}")
        relations.append(x * x - x)
        if not word:
            continue
        parent = universe.gen(f"p{word[:-1]}")
        bound = parent if word[-1] in "12" else 1 - parent
        relations.append(x * bound - x)
        relations.append(bound * x - x)

    return Presentation.build(
        universe,
        relations,
        builder=cantor_limit_builder_name,
        input_hash=input_hash({"depth": depth}),
        metadata={"depth": str(depth)},
    )
