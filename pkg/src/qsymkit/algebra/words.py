from typing import Dict, Iterable, Sequence, Tuple
from pydantic import BaseModel, ConfigDict

# a letter is (generator id, star flag); a word is a tuple of letters
Letter = Tuple[int, bool]
Word = Tuple[Letter, ...]

EMPTY_WORD: Word = ()


class GeneratorSymbol(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int
    name: str
    selfadjoint: bool = True


def word_key(word: Word):
    """Degree-lexicographic sort key: length first, then letters by id with star breaking ties."""
    return (len(word), word)


def star_letter(letter: Letter, selfadjoint: bool) -> Letter:
    if selfadjoint:
        return letter
    return (letter[0], not letter[1])


class GeneratorUniverse:
    """Ordered generator list shared by all polynomials of one presentation."""

    __slots__ = ("generators", "_by_name", "_hash")

    def __init__(self, generators: Iterable[GeneratorSymbol]):
        generators = tuple(generators)

        for position, generator in enumerate(generators):
            if generator.id != position:
                raise ValueError(
                    f"generator ids must be dense: {generator.name} has id {generator.id}, expected {position}"
                )

        by_name = {}
        for generator in generators:
            if generator.name in by_name:
                raise ValueError(f"duplicate generator name: {generator.name}")
            by_name[generator.name] = generator

        self.generators: Tuple[GeneratorSymbol, ...] = generators
        self._by_name: Dict[str, GeneratorSymbol] = by_name
        self._hash = hash(generators)

    @classmethod
    def from_names(
        cls, names: Sequence[str], non_selfadjoint: Iterable[str] = ()
    ) -> "GeneratorUniverse":
        non_selfadjoint = set(non_selfadjoint)
        return cls(
            GeneratorSymbol(id=index, name=name, selfadjoint=name not in non_selfadjoint)
            for index, name in enumerate(names)
        )

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, index: int) -> GeneratorSymbol:
        return self.generators[index]

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, GeneratorUniverse):
            return False
        return self._hash == other._hash and self.generators == other.generators

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"GeneratorUniverse({' '.join(self.names)})"

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(generator.name for generator in self.generators)

    def has(self, name: str) -> bool:
        return name in self._by_name

    def symbol(self, name: str) -> GeneratorSymbol:
        if name not in self._by_name:
            raise ValueError(f"unknown generator: {name}")
        return self._by_name[name]

    def letter(self, name: str, star: bool = False) -> Letter:
        generator = self.symbol(name)
        return (generator.id, star and not generator.selfadjoint)

    def star_word(self, word: Word) -> Word:
        return tuple(
            star_letter(letter, self.generators[letter[0]].selfadjoint)
            for letter in reversed(word)
        )

    def letters(self) -> Tuple[Letter, ...]:
        """Every letter of the universe in canonical order."""
        out = []
        for generator in self.generators:
            out.append((generator.id, False))
            if not generator.selfadjoint:
                out.append((generator.id, True))
        return tuple(out)

    def format_letter(self, letter: Letter) -> str:
        name = self.generators[letter[0]].name
        return f"{name}*" if letter[1] else name

    def format_word(self, word: Word) -> str:
        return " ".join(self.format_letter(letter) for letter in word)

    # polynomial constructors live here so callers only need the universe

    def gen(self, name: str, star: bool = False):
        from qsymkit.algebra.polynomial import NCPolynomial

        return NCPolynomial(self, {(self.letter(name, star),): 1})

    def word(self, *letters: str):
        """Monomial from names; a trailing "*" marks the adjoint letter."""
        from qsymkit.algebra.polynomial import NCPolynomial

        parsed = []
        for token in letters:
            star = token.endswith("*") and not self.has(token)
            parsed.append(self.letter(token[:-1] if star else token, star))
        return NCPolynomial(self, {tuple(parsed): 1})

    def constant(self, value):
        from qsymkit.algebra.polynomial import NCPolynomial

        return NCPolynomial(self, {EMPTY_WORD: value})

    def one(self):
        return self.constant(1)

    def zero(self):
        from qsymkit.algebra.polynomial import NCPolynomial

        return NCPolynomial(self)
