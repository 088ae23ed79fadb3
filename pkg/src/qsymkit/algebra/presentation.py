from typing import Dict, Iterable, List, Optional, Sequence, Tuple
from qsymkit.algebra.polynomial import NCPolynomial
from qsymkit.algebra.relations import RelationSet
from qsymkit.algebra.words import GeneratorSymbol, GeneratorUniverse


class MagicBlock:
    """Square grid of affine entries that must form a magic unitary."""

    __slots__ = ("entries", "label")

    def __init__(self, entries: Sequence[Sequence[NCPolynomial]], label: str = ""):
        entries = tuple(tuple(row) for row in entries)
        size = len(entries)

        if size == 0 or any(len(row) != size for row in entries):
            raise ValueError("magic-unitary block must be a non-empty square grid")

        for row in entries:
            for entry in row:
                if entry.degree() > 1:
                    raise ValueError(f"block entry {entry} is not affine")

        self.entries: Tuple[Tuple[NCPolynomial, ...], ...] = entries
        self.label = label

    @property
    def size(self) -> int:
        return len(self.entries)

    def relations(self) -> List[NCPolynomial]:
        """Projection, row/column sum and explicit row/column orthogonality relations."""
        size = self.size
        entries = self.entries
        relations = []

        for i in range(size):
            for j in range(size):
                entry = entries[i][j]
                relations.append(entry * entry - entry)

        for i in range(size):
            relations.append(sum(entries[i][1:], entries[i][0]) - 1)
            column = [entries[k][i] for k in range(size)]
            relations.append(sum(column[1:], column[0]) - 1)

        for i in range(size):
            for j in range(size):
                for k in range(size):
                    if j == k:
                        continue
                    relations.append(entries[i][j] * entries[i][k])
                    relations.append(entries[j][i] * entries[k][i])

        return relations

    def __str__(self) -> str:
        rows = [", ".join(str(entry) for entry in row) for row in self.entries]
        return "(" + " / ".join(rows) + ")"


class Presentation:
    """Generators, relations and magic-unitary block metadata of a presented *-algebra."""

    __slots__ = ("universe", "relations", "blocks", "builder", "input_hash", "metadata")

    def __init__(
        self,
        universe: GeneratorUniverse,
        relations: RelationSet,
        blocks: Sequence[MagicBlock] = (),
        builder: str = "",
        input_hash: str = "",
        metadata: Optional[Dict[str, str]] = None,
    ):
        if relations.universe != universe:
            raise ValueError("relation set is over a different generator universe")

        for block in blocks:
            for row in block.entries:
                for entry in row:
                    if entry.universe != universe:
                        raise ValueError("block entry is over a different generator universe")
            missing = [r for r in block.relations() if r not in relations]
            if missing:
                raise ValueError(f"block {block.label} is missing relation {missing[0]}")

        self.universe = universe
        self.relations = relations
        self.blocks: Tuple[MagicBlock, ...] = tuple(blocks)
        self.builder = builder
        self.input_hash = input_hash
        self.metadata: Dict[str, str] = dict(metadata or {})

    @classmethod
    def build(
        cls,
        universe: GeneratorUniverse,
        relations: Iterable[NCPolynomial] = (),
        blocks: Sequence[MagicBlock] = (),
        builder: str = "",
        input_hash: str = "",
        metadata: Optional[Dict[str, str]] = None,
    ) -> "Presentation":
        """Presentation whose relation set also carries every block relation."""
        relations = list(relations)
        for block in blocks:
            relations.extend(block.relations())
        return cls(
            universe,
            RelationSet(universe, relations),
            blocks=blocks,
            builder=builder,
            input_hash=input_hash,
            metadata=metadata,
        )

    @property
    def generators(self) -> Tuple[GeneratorSymbol, ...]:
        return self.universe.generators

    @property
    def name(self) -> str:
        return self.builder or "presentation"

    def block_offsets(self) -> List[int]:
        offsets, total = [], 0
        for block in self.blocks:
            offsets.append(total)
            total += block.size
        return offsets

    def with_relations(self, relations: Iterable[NCPolynomial]) -> "Presentation":
        return Presentation(
            self.universe,
            self.relations.union(relations),
            blocks=self.blocks,
            builder=self.builder,
            input_hash=self.input_hash,
            metadata=self.metadata,
        )

    def to_payload(self) -> Dict:
        return {
            "builder": self.name,
            "input": self.input_hash,
            "metadata": dict(self.metadata),
            "generators": list(self.universe.names),
            "non_selfadjoint": [g.name for g in self.universe if not g.selfadjoint],
            "blocks": [str(block) for block in self.blocks],
            "relations": list(self.relations.lines()),
        }

    def header_lines(self) -> List[str]:
        lines = [f"# builder={self.name} input={self.input_hash or '-'}"]
        for key in sorted(self.metadata):
            lines.append(f"# {key}={self.metadata[key]}")
        lines.append("# generators: " + " ".join(self.universe.names))

        non_selfadjoint = [g.name for g in self.universe if not g.selfadjoint]
        if non_selfadjoint:
            lines.append("# non-selfadjoint: " + " ".join(non_selfadjoint))

        for index, block in enumerate(self.blocks, start=1):
            lines.append(f"# block {index}: {block}")
        return lines

    def to_text(self) -> str:
        return "\n".join(self.header_lines() + list(self.relations.lines())) + "\n"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Presentation({self.name}, {len(self.universe)} generators, {len(self.relations)} relations)"
