from typing import Dict, List, Optional, Sequence, Tuple
from pydantic import BaseModel, ConfigDict, model_validator
from qsymkit.algebra import (
    GeneratorUniverse,
    MagicBlock,
    NCPolynomial,
    Presentation,
    abelianize,
    evaluate_scalar,
    reduce,
    rewrite,
    substitute,
    zero_one_solutions,
)
from qsymkit.config import (
    ASSEMBLY_DEGREE_BOUND,
    ASSEMBLY_FULL_REDUCTION_CAP,
    CLASSICAL_REFUTATION_CAP,
    inductive_limit_builder_name,
    magic_unitary_builder_name,
)
from qsymkit.presentations.magic import magic_block
from qsymkit.presentations.tree import Namer, cantor_namer, default_namer, tree_level_names
from qsymkit.spaces import TreeDiagram, binary_tree
from qsymkit.utils import input_hash
from qsymkit.utils.logging import logger


class ConnectingMap(BaseModel):
    """Generator images from one level into the next, plus images that must coincide with them."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    source: Presentation
    target: Presentation
    generator_images: Dict[str, NCPolynomial]
    coimages: Dict[str, Tuple[NCPolynomial, ...]] = {}

    @model_validator(mode="after")
    def check_images(self):
        for generator in self.source.generators:
            if generator.name not in self.generator_images:
                raise ValueError(f"generator {generator.name} has no image")

        for name, image in self.generator_images.items():
            if not self.source.universe.has(name):
                raise ValueError(f"{name} is not a generator of the source presentation")
            for expression in (image, *self.coimages.get(name, ())):
                _check_image(name, expression, self.target.universe)

        for name in self.coimages:
            if name not in self.generator_images:
                raise ValueError(f"coimage given for unmapped generator {name}")
        return self

    def identifications(self) -> List[NCPolynomial]:
        return [
            coimage - self.generator_images[name]
            for name, coimages in self.coimages.items()
            for coimage in coimages
        ]

    def image_of(self, polynomial: NCPolynomial) -> NCPolynomial:
        return substitute(polynomial, self.generator_images, self.target.universe)


def _check_image(name: str, image: NCPolynomial, target: GeneratorUniverse):
    if image.universe != target:
        raise ValueError(f"image of {name} is not over the target generators")
    for word, coefficient in image.terms.items():
        if not word:
            continue
        # a sum of target generators, repetitions allowed
        if len(word) != 1 or word[0][1] or coefficient < 1 or coefficient.denominator != 1:
            raise ValueError(f"image of {name} is not a sum of target generators: {image}")


class _ClassicalPoints:
    """Lazily enumerated {0,1} points of a target presentation, for refuting images."""

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        self._points: Optional[List[Dict[str, int]]] = None

    def points(self) -> Optional[List[Dict[str, int]]]:
        if self._points is None:
            universe = self.presentation.universe
            if len(universe) > CLASSICAL_REFUTATION_CAP:
                return None
            commutative = abelianize(self.presentation)
            if not all(commutative.idempotent):
                return None
            names = universe.names
            self._points = [
                dict(zip(names, assignment)) for assignment in zero_one_solutions(commutative)
            ]
        return self._points


def _validate_map(position: int, connecting_map: ConnectingMap) -> List[str]:
    """Reject images that break a source relation; returns the relations left unconfirmed."""
    target = connecting_map.target.with_relations(connecting_map.identifications())
    classical = _ClassicalPoints(target)
    full = len(target.universe) <= ASSEMBLY_FULL_REDUCTION_CAP
    unconfirmed = []

    for relation in connecting_map.source.relations:
        image = connecting_map.image_of(relation)
        bound = max(ASSEMBLY_DEGREE_BOUND, image.degree())
        if full:
            remainder = reduce(image, target.relations, bound).normal_form
        else:
            remainder = rewrite(image, target.relations, bound)
        if remainder.is_zero():
            continue

        points = classical.points()
        if points is not None:
            for point in points:
                if evaluate_scalar(image, point) != 0:
                    raise ValueError(
                        f"connecting map {position} violates source relation {relation}: "
                        f"image reduces to {remainder}"
                    )

        logger.warning(
            f"connecting map {position}: relation {relation} not confirmed within degree {bound}"
        )
        unconfirmed.append(str(relation))

    return unconfirmed


def inductive_limit_assemble(levels: Sequence[Presentation], maps: Sequence[ConnectingMap]) -> Presentation:
    """Colimit of the presentations: every generator is replaced by its image in the last level."""
    if not levels:
        raise ValueError("at least one level is needed")
    if len(maps) != len(levels) - 1:
        raise ValueError("exactly one connecting map is needed between consecutive levels")

    for position, connecting_map in enumerate(maps):
        if connecting_map.source.universe != levels[position].universe:
            raise ValueError(f"connecting map {position} does not start at level {position}")
        if connecting_map.target.universe != levels[position + 1].universe:
            raise ValueError(f"connecting map {position} does not end at level {position + 1}")

    unconfirmed = 0
    for position, connecting_map in enumerate(maps):
        unconfirmed += len(_validate_map(position, connecting_map))

    final = levels[-1]
    universe = final.universe

    # images of every level's generators in the final level
    composed: List[Dict[str, NCPolynomial]] = [dict() for _ in levels]
    composed[-1] = {name: universe.gen(name) for name in universe.names}
    for position in range(len(maps) - 1, -1, -1):
        following = composed[position + 1]
        composed[position] = {
            name: substitute(image, following, universe)
            for name, image in maps[position].generator_images.items()
        }

    relations = list(final.relations)
    blocks: List[MagicBlock] = []
    for position, level in enumerate(levels):
        images = composed[position]
        if position < len(maps):
            relations.extend(substitute(r, images, universe) for r in level.relations)
            following = composed[position + 1]
            relations.extend(
                substitute(r, following, universe) for r in maps[position].identifications()
            )
        for block in level.blocks:
            entries = [[substitute(entry, images, universe) for entry in row] for row in block.entries]
            blocks.append(MagicBlock(entries, label=block.label or f"level {position + 1}"))

    payload = [level.input_hash for level in levels]
    return Presentation.build(
        universe,
        relations,
        blocks=blocks,
        builder=inductive_limit_builder_name,
        input_hash=input_hash(payload),
        metadata={"levels": str(len(levels)), "unconfirmed": str(unconfirmed)},
    )


def tree_inductive_system(
    T: TreeDiagram, n: int, namer: Namer = default_namer
) -> Tuple[List[Presentation], List[ConnectingMap]]:
    """Per-level magic presentations of a tree and the maps a_{i,j} -> sum_r a_{(i,r),(j,s)}.

    The primary image uses the first child s of j; the other children give coimages.
    """
    if n < 1 or n > T.depth:
        raise ValueError(f"level {n} is out of range 1..{T.depth}")

    levels = []
    for level in range(1, n + 1):
        names = tree_level_names(T, level, namer)
        universe = GeneratorUniverse.from_names([name for row in names for name in row])
        levels.append(
            Presentation.build(
                universe,
                blocks=[magic_block(universe, names, label=f"level {level}")],
                builder=magic_unitary_builder_name,
                input_hash=input_hash({"tree": T.to_payload(), "level": level}),
            )
        )

    maps = []
    for level in range(1, n):
        source, target = levels[level - 1], levels[level]
        size = T.levels[level]
        images, coimages = {}, {}
        for i in range(size):
            for j in range(size):
                sums = []
                for s in T.children(level, j):
                    total = target.universe.zero()
                    for r in T.children(level, i):
                        total = total + target.universe.gen(namer(level + 1, r, s))
                    sums.append(total)
                name = namer(level, i, j)
                images[name] = sums[0]
                if len(sums) > 1:
                    coimages[name] = tuple(sums[1:])
        maps.append(
            ConnectingMap(source=source, target=target, generator_images=images, coimages=coimages)
        )

    return levels, maps


def cantor_inductive_system(n: int) -> Tuple[List[Presentation], List[ConnectingMap]]:
    return tree_inductive_system(binary_tree(n), n, cantor_namer)
