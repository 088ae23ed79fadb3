from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple
from qsymkit.algebra.words import EMPTY_WORD, GeneratorUniverse, Letter, Word, word_key

Terms = Dict[Word, Fraction]


def add_scaled(target: Terms, factor: Fraction, source: Mapping[Word, Fraction]):
    """In-place target += factor * source, dropping cancelled words."""
    for word, coefficient in source.items():
        value = target.get(word, 0) + factor * coefficient
        if value:
            target[word] = value
        else:
            target.pop(word, None)


def multiply_terms(left: Mapping[Word, Fraction], right: Mapping[Word, Fraction]) -> Terms:
    product: Terms = {}
    for left_word, left_coefficient in left.items():
        for right_word, right_coefficient in right.items():
            word = left_word + right_word
            value = product.get(word, 0) + left_coefficient * right_coefficient
            if value:
                product[word] = value
            else:
                product.pop(word, None)
    return product


def leading_word(terms: Mapping[Word, Fraction]) -> Word:
    return max(terms, key=word_key)


class NCPolynomial:
    """Exact rational combination of words over a generator universe.

    Instances are treated as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("universe", "terms", "_hash")

    def __init__(
        self,
        universe: GeneratorUniverse,
        terms: Optional[Mapping[Word, Fraction | int]] = None,
    ):
        self.universe = universe
        self.terms: Terms = {}
        self._hash = None

        for word, coefficient in (terms or {}).items():
            coefficient = Fraction(coefficient)
            if coefficient:
                self.terms[tuple(word)] = coefficient

    # construction helpers

    def _coerce(self, other) -> "NCPolynomial":
        if isinstance(other, NCPolynomial):
            if other.universe != self.universe:
                raise ValueError("polynomials belong to different generator universes")
            return other

        if isinstance(other, (int, Fraction)):
            return NCPolynomial(self.universe, {EMPTY_WORD: other})

        raise TypeError(f"cannot combine NCPolynomial with {type(other).__name__}")

    # arithmetic

    def __add__(self, other) -> "NCPolynomial":
        other = self._coerce(other)
        terms = dict(self.terms)
        add_scaled(terms, Fraction(1), other.terms)
        return NCPolynomial(self.universe, terms)

    __radd__ = __add__

    def __neg__(self) -> "NCPolynomial":
        return NCPolynomial(self.universe, {word: -c for word, c in self.terms.items()})

    def __sub__(self, other) -> "NCPolynomial":
        other = self._coerce(other)
        terms = dict(self.terms)
        add_scaled(terms, Fraction(-1), other.terms)
        return NCPolynomial(self.universe, terms)

    def __rsub__(self, other) -> "NCPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "NCPolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return nc_multiply(self, other)

    def __rmul__(self, other) -> "NCPolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return nc_multiply(self._coerce(other), self)

    def __pow__(self, exponent: int) -> "NCPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are undefined")
        result = self.universe.one()
        for _ in range(exponent):
            result = nc_multiply(result, self)
        return result

    def scale(self, factor) -> "NCPolynomial":
        factor = Fraction(factor)
        return NCPolynomial(
            self.universe, {word: factor * c for word, c in self.terms.items()}
        )

    # comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NCPolynomial(self.universe, {EMPTY_WORD: other})
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self.universe == other.universe and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.universe, frozenset(self.terms.items())))
        return self._hash

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not word for word in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(EMPTY_WORD, Fraction(0))

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(len(word) for word in self.terms)

    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading word")
        return leading_word(self.terms)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_word()]

    def monic(self) -> "NCPolynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    def letters(self) -> FrozenSet[Letter]:
        return frozenset(letter for word in self.terms for letter in word)

    def generator_ids(self) -> FrozenSet[int]:
        return frozenset(letter[0] for word in self.terms for letter in word)

    def sorted_terms(self) -> List[Tuple[Word, Fraction]]:
        """Terms from the largest word down, the canonical serialization order."""
        return sorted(self.terms.items(), key=lambda item: word_key(item[0]), reverse=True)

    def star(self) -> "NCPolynomial":
        return nc_star(self)

    def __str__(self) -> str:
        if not self.terms:
            return "0"

        parts = []
        for position, (word, coefficient) in enumerate(self.sorted_terms()):
            magnitude = abs(coefficient)
            if not word:
                body = str(magnitude)
            elif magnitude == 1:
                body = self.universe.format_word(word)
            else:
                body = f"{magnitude} {self.universe.format_word(word)}"

            if position == 0:
                parts.append(body if coefficient > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coefficient > 0 else '-'} {body}")

        return " ".join(parts)

    def __repr__(self) -> str:
        return f"NCPolynomial({self})"


def nc_multiply(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    if p.universe != q.universe:
        raise ValueError("polynomials belong to different generator universes")
    return NCPolynomial(p.universe, multiply_terms(p.terms, q.terms))


def nc_star(p: NCPolynomial) -> NCPolynomial:
    # coefficients are rational, so conjugation fixes them
    return NCPolynomial(
        p.universe, {p.universe.star_word(word): c for word, c in p.terms.items()}
    )


def nc_sum(universe: GeneratorUniverse, polynomials: Iterable[NCPolynomial]) -> NCPolynomial:
    terms: Terms = {}
    for polynomial in polynomials:
        if polynomial.universe != universe:
            raise ValueError("polynomials belong to different generator universes")
        add_scaled(terms, Fraction(1), polynomial.terms)
    return NCPolynomial(universe, terms)


def substitute(
    p: NCPolynomial,
    images: Mapping[str, NCPolynomial],
    target: GeneratorUniverse,
) -> NCPolynomial:
    """Apply the *-homomorphism sending each named generator to its image.

    Generators without an image must exist by name in the target universe.
    """
    letter_images: Dict[Letter, Terms] = {}

    for letter in p.letters():
        generator = p.universe[letter[0]]
        if generator.name in images:
            image = images[generator.name]
            if image.universe != target:
                raise ValueError(f"image of {generator.name} is not over the target universe")
            letter_images[letter] = nc_star(image).terms if letter[1] else image.terms
        else:
            letter_images[letter] = {(target.letter(generator.name, letter[1]),): Fraction(1)}

    result: Terms = {}
    for word, coefficient in p.terms.items():
        partial: Terms = {EMPTY_WORD: coefficient}
        for letter in word:
            partial = multiply_terms(partial, letter_images[letter])
        add_scaled(result, Fraction(1), partial)

    return NCPolynomial(target, result)


def evaluate_scalar(p: NCPolynomial, values: Mapping[str, Fraction]) -> Fraction:
    """Evaluate at a real commutative point; adjoint letters take the same value."""
    total = Fraction(0)
    for word, coefficient in p.terms.items():
        value = coefficient
        for letter in word:
            name = p.universe[letter[0]].name
            if name not in values:
                raise ValueError(f"no value for generator {name}")
            value *= Fraction(values[name])
        total += value
    return total
