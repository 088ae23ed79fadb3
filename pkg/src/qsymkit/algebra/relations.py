from typing import FrozenSet, Iterable, Iterator, Tuple
from qsymkit.algebra.polynomial import NCPolynomial
from qsymkit.algebra.words import GeneratorUniverse, word_key

DEGLEX = "deglex"


def relation_sort_key(relation: NCPolynomial):
    return (word_key(relation.leading_word()), str(relation))


def canonical_relation(relation: NCPolynomial) -> NCPolynomial:
    return relation.monic()


class RelationSet:
    """Canonical, duplicate-free set of relations, each read as "= 0"."""

    __slots__ = ("universe", "relations", "orientation", "_members", "_hash")

    def __init__(self, universe: GeneratorUniverse, relations: Iterable[NCPolynomial] = ()):
        members = set()

        for relation in relations:
            if relation.universe != universe:
                raise ValueError(
                    f"relation {relation} references generators outside the presentation"
                )
            if relation.is_zero():
                continue
            members.add(canonical_relation(relation))

        self.universe = universe
        self.orientation = DEGLEX
        self.relations: Tuple[NCPolynomial, ...] = tuple(
            sorted(members, key=relation_sort_key)
        )
        self._members: FrozenSet[NCPolynomial] = frozenset(members)
        self._hash = hash((universe, self._members))

    def __iter__(self) -> Iterator[NCPolynomial]:
        return iter(self.relations)

    def __len__(self) -> int:
        return len(self.relations)

    def __contains__(self, relation: NCPolynomial) -> bool:
        if relation.is_zero():
            return True
        return canonical_relation(relation) in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, RelationSet):
            return NotImplemented
        return self.universe == other.universe and self._members == other._members

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return "\n".join(str(relation) for relation in self.relations)

    def __repr__(self) -> str:
        return f"RelationSet({len(self.relations)} relations)"

    def union(self, relations: Iterable[NCPolynomial]) -> "RelationSet":
        return RelationSet(self.universe, list(self.relations) + list(relations))

    def max_degree(self) -> int:
        return max((relation.degree() for relation in self.relations), default=0)

    def linear(self) -> Tuple[NCPolynomial, ...]:
        return tuple(relation for relation in self.relations if relation.degree() <= 1)

    def nonlinear(self) -> Tuple[NCPolynomial, ...]:
        return tuple(relation for relation in self.relations if relation.degree() > 1)

    def lines(self) -> Tuple[str, ...]:
        return tuple(str(relation) for relation in self.relations)
