"""Degree-bounded reduction of noncommutative polynomials.

Every relation is oriented by its largest word under the degree-lexicographic order and
used as a rule lead -> -(rest). Rules are applied leftmost-innermost to the largest
reducible word first. Each step replaces a word by smaller ones, so rewriting terminates
and never raises the degree. No critical pairs are formed.

Reduction runs in up to three stages:

1. The relations as given, and their adjoints, are used as rules.
2. If something is left, the linear relations are solved for their largest letter and
   substituted everywhere, and the substituted nonlinear relations become the rules.
3. Only when asked for (``closure=True``), every product u r v of degree at most the
   bound is put in echelon form with pivots on the largest word, and the remainder is
   the unique pivot-free representative of the polynomial modulo that slice.

This is a semi-decision procedure: a zero normal form proves membership in the ideal,
a nonzero one proves nothing.
"""

from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple
from pydantic import BaseModel, ConfigDict
from qsymkit.algebra.polynomial import NCPolynomial, Terms, add_scaled, multiply_terms
from qsymkit.algebra.presentation import Presentation
from qsymkit.algebra.relations import RelationSet
from qsymkit.algebra.words import EMPTY_WORD, Letter, Word, word_key
from qsymkit.config import FULL_SUPPORT_LETTER_CAP, SUPPORT_EXPANSION_ROUNDS
from qsymkit.models import CommutatorVerdict
from qsymkit.utils.logging import logger

Pivots = Dict[Word, Terms]
# lead word -> replacement
Rules = Dict[Word, Terms]


class ReductionResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    normal_form: NCPolynomial
    is_zero: bool
    saturated: bool


def echelonize(rows: Iterable[Mapping[Word, Fraction]], pivots: Pivots | None = None) -> Pivots:
    """Sparse exact Gaussian elimination; each pivot row is monic in its largest word."""
    pivots = {} if pivots is None else pivots

    for source in rows:
        row = dict(source)
        while row:
            lead = max(row, key=word_key)
            pivot = pivots.get(lead)
            if pivot is None:
                scale = 1 / row[lead]
                pivots[lead] = {word: scale * value for word, value in row.items()}
                break
            add_scaled(row, -row[lead], pivot)

    return pivots


def reduce_terms(terms: Mapping[Word, Fraction], pivots: Pivots) -> Terms:
    """Eliminate every pivot word, largest first."""
    pending = dict(terms)
    remainder: Terms = {}

    while pending:
        lead = max(pending, key=word_key)
        pivot = pivots.get(lead)
        if pivot is None:
            remainder[lead] = pending.pop(lead)
            continue
        add_scaled(pending, -pending[lead], pivot)

    return remainder


def orient(rules: Rules, terms: Mapping[Word, Fraction]):
    """Add terms as a rule unless its lead is already taken; constants never become rules."""
    if not terms:
        return
    lead = max(terms, key=word_key)
    if not lead or lead in rules:
        return
    scale = -1 / terms[lead]
    rules[lead] = {word: scale * value for word, value in terms.items() if word != lead}


def find_redex(word: Word, rules: Rules, degree_bound: int) -> Optional[Tuple[int, int]]:
    """Leftmost-innermost rule occurrence: the earliest end, then the shortest factor."""
    for end in range(1, len(word) + 1):
        for start in range(end - 1, -1, -1):
            if end - start > degree_bound:
                break
            if word[start:end] in rules:
                return start, end
    return None


def rewrite_terms(terms: Mapping[Word, Fraction], rules: Rules, degree_bound: int) -> Terms:
    pending = dict(terms)
    normal: Terms = {}

    while pending:
        word = max(pending, key=word_key)
        coefficient = pending.pop(word)
        redex = find_redex(word, rules, degree_bound)
        if redex is None:
            normal[word] = coefficient
            continue
        start, end = redex
        left, right = word[:start], word[end:]
        replacement = {left + w + right: c for w, c in rules[word[start:end]].items()}
        add_scaled(pending, coefficient, replacement)

    return normal


def _letters_of(terms: Mapping[Word, Fraction]) -> FrozenSet[Letter]:
    return frozenset(letter for word in terms for letter in word)


class _ReductionEngine:
    """Rules, solved linear relations and lazily built ideal slices for one relation set."""

    def __init__(self, relations: RelationSet):
        self.relations = relations
        self.universe = relations.universe
        self.max_degree = relations.max_degree()

        linear_rows = []
        for relation in relations.linear():
            linear_rows.append(relation.terms)
            linear_rows.append(relation.star().terms)

        self.linear_pivots = echelonize(linear_rows)
        self.inconsistent = EMPTY_WORD in self.linear_pivots
        self._slices: Dict[Tuple[FrozenSet[Letter], int], Pivots] = {}

    @cached_property
    def rules(self) -> Rules:
        rules: Rules = {}
        for relation in self.relations:
            orient(rules, relation.terms)
        for relation in self.relations:
            orient(rules, relation.star().terms)
        return rules

    @cached_property
    def images(self) -> Dict[Letter, Terms]:
        """Each eliminated letter and its affine image in the free letters."""
        images = {}
        for lead in sorted(self.linear_pivots, key=word_key):
            if not lead:
                continue
            tail = {w: c for w, c in self.linear_pivots[lead].items() if w != lead}
            image = reduce_terms(tail, self.linear_pivots)
            images[lead[0]] = {w: -c for w, c in image.items()}
        return images

    @cached_property
    def free_letters(self) -> Tuple[Letter, ...]:
        return tuple(letter for letter in self.universe.letters() if letter not in self.images)

    @cached_property
    def nonlinear(self) -> List[Terms]:
        """Nonlinear relations and their adjoints after substitution, monic and sorted."""
        substituted = set()
        for relation in self.relations.nonlinear():
            for polynomial in (relation, relation.star()):
                terms = self.linear_normal_form(polynomial.terms)
                if terms:
                    scale = 1 / terms[max(terms, key=word_key)]
                    substituted.add(frozenset((w, scale * c) for w, c in terms.items()))

        return sorted(
            (dict(items) for items in substituted),
            key=lambda terms: sorted((word_key(w), c) for w, c in terms.items()),
        )

    @cached_property
    def substituted_rules(self) -> Rules:
        rules: Rules = {}
        for terms in self.nonlinear:
            orient(rules, terms)
        return rules

    def linear_normal_form(self, terms: Mapping[Word, Fraction]) -> Terms:
        images = self.images
        result: Terms = {}
        for word, coefficient in terms.items():
            partial: Terms = {EMPTY_WORD: coefficient}
            for letter in word:
                image = images.get(letter)
                if image is None:
                    partial = {w + (letter,): c for w, c in partial.items()}
                else:
                    partial = multiply_terms(partial, image)
            add_scaled(result, Fraction(1), partial)
        return result

    def slice(self, support: FrozenSet[Letter], degree_bound: int) -> Pivots:
        """Echelon basis of the span of u r v with degree at most the bound.

        Built one degree at a time: the rows of degree D are the relations of degree D
        plus every pivot found at degree D - 1 multiplied by a letter on either side.
        """
        key = (support, degree_bound)
        if key in self._slices:
            return self._slices[key]

        letters = sorted(support)
        full = len(support) == len(self.free_letters)

        by_degree: Dict[int, List[Terms]] = {}
        for terms in self.nonlinear:
            degree = max(len(word) for word in terms)
            if degree > degree_bound:
                continue
            if not full and not (_letters_of(terms) & support):
                continue
            by_degree.setdefault(degree, []).append(terms)

        pivots: Pivots = {}
        previous: List[Word] = []
        count = 0
        for degree in range(degree_bound + 1):
            rows = list(by_degree.get(degree, []))
            for lead in previous:
                row = pivots[lead]
                for letter in letters:
                    rows.append({(letter,) + w: c for w, c in row.items()})
                    rows.append({w + (letter,): c for w, c in row.items()})
            known = set(pivots)
            echelonize(rows, pivots)
            count += len(rows)
            previous = [lead for lead in pivots if lead not in known]

        logger.info(
            f"reduction slice: {count} rows, rank {len(pivots)}, "
            f"{len(letters)} letters, degree bound {degree_bound}"
        )
        self._slices[key] = pivots
        return pivots

    def close(self, target: Terms, degree_bound: int) -> Tuple[Terms, bool]:
        """Remainder modulo the slice, and whether the slice used every free letter."""
        full_support = len(self.free_letters) <= FULL_SUPPORT_LETTER_CAP
        support = frozenset(self.free_letters) if full_support else _letters_of(target)

        remainder = target
        for _ in range(SUPPORT_EXPANSION_ROUNDS):
            remainder = reduce_terms(target, self.slice(support, degree_bound))
            if full_support or not remainder:
                break
            grown = support | _letters_of(remainder)
            if grown == support:
                break
            support = grown

        return remainder, full_support


@lru_cache(maxsize=64)
def _engine_for(relations: RelationSet) -> _ReductionEngine:
    return _ReductionEngine(relations)


def reduce(p: NCPolynomial, R: RelationSet, degree_bound: int, closure: bool = False) -> ReductionResult:
    if p.universe != R.universe:
        raise ValueError("polynomial and relation set use different generator universes")
    if degree_bound < p.degree():
        raise ValueError(f"degree bound {degree_bound} is below the degree of {p}")

    engine = _engine_for(R)
    universe = R.universe
    zero = ReductionResult(normal_form=universe.zero(), is_zero=True, saturated=True)

    if engine.inconsistent:
        return zero

    remainder = rewrite_terms(p.terms, engine.rules, degree_bound)
    if not remainder:
        return zero

    remainder = engine.linear_normal_form(remainder)
    if remainder:
        remainder = rewrite_terms(remainder, engine.substituted_rules, degree_bound)

    complete = True
    if remainder and closure:
        remainder, complete = engine.close(remainder, degree_bound)

    saturated = engine.max_degree <= degree_bound and complete
    if not saturated:
        logger.info(f"reduction of {p} is not saturated at degree bound {degree_bound}")

    return ReductionResult(
        normal_form=NCPolynomial(universe, remainder),
        is_zero=not remainder,
        saturated=saturated,
    )


def rewrite(p: NCPolynomial, R: RelationSet, degree_bound: int) -> NCPolynomial:
    """The relations of R as given, applied as rules, then the solved linear relations.

    The substituted nonlinear relations are not used.
    """
    if p.universe != R.universe:
        raise ValueError("polynomial and relation set use different generator universes")

    engine = _engine_for(R)
    if engine.inconsistent:
        return R.universe.zero()
    remainder = rewrite_terms(p.terms, engine.rules, degree_bound)
    if remainder:
        remainder = engine.linear_normal_form(remainder)
    return NCPolynomial(R.universe, remainder)


def proves_commutator_zero(
    a: str, b: str, P: Presentation, degree_bound: int, closure: bool = False
) -> CommutatorVerdict:
    if not P.universe.has(a) or not P.universe.has(b):
        raise ValueError(f"generators {a}, {b} must both belong to the presentation")

    x, y = P.universe.gen(a), P.universe.gen(b)
    result = reduce(x * y - y * x, P.relations, degree_bound, closure=closure)

    if result.is_zero:
        return CommutatorVerdict.YES
    return CommutatorVerdict.UNKNOWN


def linear_rules(R: RelationSet) -> Dict[Letter, NCPolynomial]:
    """The solved linear relations of R: each eliminated letter and its affine image."""
    engine = _engine_for(R)
    return {letter: NCPolynomial(R.universe, image) for letter, image in engine.images.items()}


def is_inconsistent(R: RelationSet) -> bool:
    return _engine_for(R).inconsistent
