from qsymkit.algebra.words import (
    EMPTY_WORD,
    GeneratorSymbol,
    GeneratorUniverse,
    Letter,
    Word,
    word_key,
)
from qsymkit.algebra.polynomial import (
    NCPolynomial,
    evaluate_scalar,
    nc_multiply,
    nc_star,
    nc_sum,
    substitute,
)
from qsymkit.algebra.relations import RelationSet
from qsymkit.algebra.presentation import MagicBlock, Presentation
from qsymkit.algebra.rewriting import (
    ReductionResult,
    linear_rules,
    proves_commutator_zero,
    reduce,
    rewrite,
)
from qsymkit.algebra.abelian import (
    CommutativePresentation,
    abelianize,
    zero_one_solutions,
)
from qsymkit.algebra.positivity import interreduce, positivity_simplify
