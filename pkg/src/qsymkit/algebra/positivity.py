from typing import List, Optional
from qsymkit.algebra.polynomial import NCPolynomial
from qsymkit.algebra.relations import RelationSet
from qsymkit.algebra.rewriting import is_inconsistent, linear_rules, reduce
from qsymkit.algebra.words import GeneratorUniverse, Word, word_key


def _square_root(word: Word, universe: GeneratorUniverse) -> Optional[Word]:
    """u with word == u·u*, if any."""
    if not word or len(word) % 2:
        return None
    half = len(word) // 2
    root = word[:half]
    if word[half:] != universe.star_word(root):
        return None
    return root


def _positive_roots(relation: NCPolynomial) -> Optional[List[Word]]:
    universe = relation.universe
    roots = []
    for word, coefficient in relation.terms.items():
        if coefficient <= 0:
            return None
        root = _square_root(word, universe)
        if root is None:
            return None
        roots.append(root)
    return roots


def _star_normalized(root: Word, universe: GeneratorUniverse) -> NCPolynomial:
    adjoint = universe.star_word(root)
    chosen = min(root, adjoint, key=word_key)
    return NCPolynomial(universe, {chosen: 1})


def positivity_simplify(R: RelationSet) -> RelationSet:
    """Replace every relation sum_k w_k w_k* = 0 (positive coefficients) by the relations w_k = 0.

    In a C*-algebra a sum of positive elements vanishes only if each summand does,
    and w w* = 0 forces w = 0; selfadjoint x with x^2 = 0 is the one-letter case.
    """
    current = R
    while True:
        changed = False
        relations = []
        for relation in current:
            roots = _positive_roots(relation)
            if roots is None:
                relations.append(relation)
                continue
            changed = True
            relations.extend(_star_normalized(root, R.universe) for root in roots)

        if not changed:
            return current
        current = RelationSet(R.universe, relations)


def interreduce(R: RelationSet) -> RelationSet:
    """Solve the linear relations and reduce every other relation modulo them."""
    universe = R.universe
    if is_inconsistent(R):
        return RelationSet(universe, [universe.one()])

    rules = linear_rules(R)
    linear = RelationSet(universe, R.linear())

    relations = []
    for letter, image in rules.items():
        generator = universe[letter[0]]
        if letter[1]:
            # the adjoint rule is implied by the unstarred one
            if (letter[0], False) in rules:
                continue
        relations.append(universe.gen(generator.name, letter[1]) - image)

    for relation in R.nonlinear():
        relations.append(reduce(relation, linear, max(relation.degree(), 1)).normal_form)

    return RelationSet(universe, relations)
