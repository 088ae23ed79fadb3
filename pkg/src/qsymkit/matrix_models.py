from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple
from pydantic import BaseModel, ConfigDict, model_validator
from sympy import ImmutableMatrix, Matrix, Rational, diag, eye, zeros
from qsymkit.algebra import GeneratorUniverse, NCPolynomial, Presentation
from qsymkit.classical import PermutationSolution, classical_points
from qsymkit.config import DEFAULT_WITNESS_BLOCKS, DEFAULT_WITNESS_PARAMETERS
from qsymkit.models import CantorForm, MatrixModelInput, WitnessFamilyKind
from qsymkit.presentations import cantor_level_presentation
from qsymkit.utils import format_matrix, parse_rational
from qsymkit.utils.concurrency import run_in_workers
from qsymkit.utils.logging import logger


def to_rational(value) -> Rational:
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


class MatrixModel(BaseModel):
    """Exact rational matrices for the generators of a presentation, one per generator id."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    dim: int
    universe: GeneratorUniverse
    assignment: Dict[int, ImmutableMatrix]

    @model_validator(mode="after")
    def check_shapes(self):
        if self.dim < 1:
            raise ValueError("model dimension must be at least 1")
        for generator_id, matrix in self.assignment.items():
            if generator_id < 0 or generator_id >= len(self.universe):
                raise ValueError(f"no generator with id {generator_id}")
            if matrix.shape != (self.dim, self.dim):
                raise ValueError(
                    f"dimension mismatch: {self.universe[generator_id].name} is "
                    f"{matrix.rows}x{matrix.cols}, expected {self.dim}x{self.dim}"
                )
        return self

    @classmethod
    def from_names(cls, dim: int, universe: GeneratorUniverse, matrices: Mapping[str, Matrix]) -> "MatrixModel":
        return cls(
            dim=dim,
            universe=universe,
            assignment={
                universe.symbol(name).id: ImmutableMatrix(matrix) for name, matrix in matrices.items()
            },
        )

    @classmethod
    def from_input(cls, data: MatrixModelInput) -> "MatrixModel":
        universe = GeneratorUniverse.from_names(list(data.assignment))
        matrices = {
            name: Matrix([[to_rational(parse_rational(entry)) for entry in row] for row in rows])
            for name, rows in data.assignment.items()
        }
        return cls.from_names(data.dim, universe, matrices)

    def matrix(self, name: str) -> ImmutableMatrix:
        generator = self.universe.symbol(name)
        if generator.id not in self.assignment:
            raise ValueError(f"model assigns no matrix to {name}")
        return self.assignment[generator.id]

    def named(self) -> Dict[str, ImmutableMatrix]:
        return {self.universe[i].name: matrix for i, matrix in sorted(self.assignment.items())}

    def evaluate(self, p: NCPolynomial) -> Matrix:
        """p evaluated with generators named as in this model; adjoints become transposes."""
        matrices = {}
        for letter in p.letters():
            name = p.universe[letter[0]].name
            if not self.universe.has(name):
                raise ValueError(f"model has no generator {name}")
            matrix = self.matrix(name)
            matrices[letter] = matrix.T if letter[1] else matrix
        return _evaluate(p, matrices, self.dim)

    def to_payload(self) -> Dict:
        return {
            "dim": self.dim,
            "assignment": {
                name: [[str(matrix[i, j]) for j in range(self.dim)] for i in range(self.dim)]
                for name, matrix in self.named().items()
            },
        }


def _evaluate(p: NCPolynomial, matrices: Mapping, dim: int) -> Matrix:
    total = zeros(dim, dim)
    for word, coefficient in p.terms.items():
        term = eye(dim) * to_rational(coefficient)
        for letter in word:
            term = term * matrices[letter]
        total += term
    return total


class RelationResidual(BaseModel):
    relation: str
    residual: str
    zero: bool


class ModelReport(BaseModel):
    passed: bool
    residuals: List[RelationResidual]

    def failures(self) -> List[RelationResidual]:
        return [r for r in self.residuals if not r.zero]

    def to_text(self) -> str:
        lines = []
        for residual in self.residuals:
            if residual.zero:
                lines.append(f"zero {residual.relation}")
            else:
                lines.append(f"nonzero {residual.relation} residual={residual.residual}")
        lines.append(f"passed={'yes' if self.passed else 'no'}")
        return "\n".join(lines) + "\n"


def verify_model(M: MatrixModel, P: Presentation) -> ModelReport:
    missing = [name for name in P.universe.names if not M.universe.has(name)]
    if missing:
        raise ValueError(f"model assigns no matrix to {missing[0]}")

    residuals = []
    # self-adjoint generators need symmetric matrices
    for generator in P.universe:
        if not generator.selfadjoint:
            continue
        matrix = M.matrix(generator.name)
        if matrix != matrix.T:
            residuals.append(
                RelationResidual(
                    relation=f"{generator.name}* - {generator.name}",
                    residual=format_matrix(matrix.T - matrix),
                    zero=False,
                )
            )

    for relation in P.relations:
        value = M.evaluate(relation)
        residuals.append(
            RelationResidual(
                relation=str(relation),
                residual=format_matrix(value),
                zero=bool(value.is_zero_matrix),
            )
        )

    report = ModelReport(passed=all(r.zero for r in residuals), residuals=residuals)
    if not report.passed:
        logger.info(f"model fails {len(report.failures())} relations of {P.name}")
    return report


def scalar_model(universe: GeneratorUniverse, values: Mapping[str, int]) -> MatrixModel:
    return MatrixModel.from_names(1, universe, {name: Matrix([[values[name]]]) for name in universe.names})


def permutation_model(P: Presentation, s: PermutationSolution) -> MatrixModel:
    """The dimension-1 model of P whose blocks read as the permutation s."""
    for values, solution in classical_points(P):
        if solution.perm == s.perm:
            return scalar_model(P.universe, values)
    raise ValueError(f"permutation {s.one_line()} is not a classical solution of {P.name}")


def permutation_models(P: Presentation) -> List[MatrixModel]:
    return [scalar_model(P.universe, values) for values, _ in classical_points(P)]


def direct_sum(first: MatrixModel, second: MatrixModel) -> MatrixModel:
    if first.universe != second.universe:
        raise ValueError("direct sums need models of the same generators")

    assignment = {}
    for generator_id in sorted(set(first.assignment) | set(second.assignment)):
        if generator_id not in first.assignment or generator_id not in second.assignment:
            name = first.universe[generator_id].name
            raise ValueError(f"generator {name} is assigned in only one summand")
        assignment[generator_id] = ImmutableMatrix(
            diag(first.assignment[generator_id], second.assignment[generator_id])
        )
    return MatrixModel(dim=first.dim + second.dim, universe=first.universe, assignment=assignment)


def commutator(M: MatrixModel, a: str, b: str) -> Matrix:
    x, y = M.matrix(a), M.matrix(b)
    return x * y - y * x


def transport_model(M: MatrixModel, images: Mapping[str, NCPolynomial], target_universe: GeneratorUniverse) -> MatrixModel:
    """Model of target_universe sending each generator to its image evaluated in M."""
    matrices = {}
    for name in target_universe.names:
        if name not in images:
            raise ValueError(f"no image for generator {name}")
        matrices[name] = M.evaluate(images[name])
    return MatrixModel.from_names(M.dim, target_universe, matrices)


# canonical pair of non-commuting rational projections
PROJECTION_A = ImmutableMatrix([[1, 0], [0, 0]])
PROJECTION_B = ImmutableMatrix([[Rational(1, 2), Rational(1, 2)], [Rational(1, 2), Rational(1, 2)]])


def cantor_witness_model() -> MatrixModel:
    """Two copies of (A, B) on C^2 + C^2, placed under p and under 1 - p."""
    universe = cantor_level_presentation(2, CantorForm.REDUCED).universe
    zero = zeros(2, 2)
    matrices = {
        "p": diag(eye(2), zero),
        "q1": diag(PROJECTION_A, zero),
        "q4": diag(PROJECTION_B, zero),
        "q3": diag(zero, PROJECTION_A),
        "q2": diag(zero, PROJECTION_B),
    }
    return MatrixModel.from_names(4, universe, matrices)


def line_projection(t: Fraction) -> ImmutableMatrix:
    """Projection onto the line through (1, t)."""
    t = to_rational(t)
    return ImmutableMatrix([[1, t], [t, t * t]]) / (1 + t * t)


class WitnessFamily(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: WitnessFamilyKind = WitnessFamilyKind.TWO_PROJECTION_BLOCKS
    parameters: Tuple[Fraction, ...] = tuple(Fraction(t) for t in DEFAULT_WITNESS_PARAMETERS)
    max_blocks: int = DEFAULT_WITNESS_BLOCKS

    def candidates(self) -> List[ImmutableMatrix]:
        """2x2 projections in search order: identity, the line projections, zero."""
        seen, ordered = set(), []
        for matrix in [ImmutableMatrix(eye(2))] + [line_projection(t) for t in self.parameters] + [
            ImmutableMatrix(zeros(2, 2))
        ]:
            if matrix not in seen:
                seen.add(matrix)
                ordered.append(matrix)
        return ordered


class Witness(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    pair: Tuple[str, str]
    model: MatrixModel


def noncommuting_pair(M: MatrixModel) -> Optional[Tuple[str, str]]:
    names = M.universe.names
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            if not commutator(M, names[i], names[j]).is_zero_matrix:
                return names[i], names[j]
    return None


class _BlockSearch:
    """Depth-first search over 2x2 projection assignments, generators in id order."""

    def __init__(self, P: Presentation, candidates: Sequence[ImmutableMatrix]):
        self.presentation = P
        self.candidates = list(candidates)
        self.count = len(P.universe)
        self.inconsistent = any(relation.is_constant() for relation in P.relations)
        # each relation is checked once its largest generator is assigned
        self.checks: List[List[NCPolynomial]] = [[] for _ in range(self.count)]
        for relation in P.relations:
            ids = relation.generator_ids()
            if ids:
                self.checks[max(ids)].append(relation)

    def _consistent(self, assignment: List[ImmutableMatrix]) -> bool:
        position = len(assignment) - 1
        matrices = {}
        for relation in self.checks[position]:
            for letter in relation.letters():
                matrix = assignment[letter[0]]
                matrices[letter] = matrix.T if letter[1] else matrix
            if not _evaluate(relation, matrices, 2).is_zero_matrix:
                return False
        return True

    def _model(self, assignment: List[ImmutableMatrix]) -> MatrixModel:
        return MatrixModel(dim=2, universe=self.presentation.universe, assignment=dict(enumerate(assignment)))

    def members(self, first: ImmutableMatrix) -> Iterator[MatrixModel]:
        """Every passing assignment that starts with first, in search order."""
        if not self.count or self.inconsistent:
            return
        stack = [[first]]
        while stack:
            assignment = stack.pop()
            if not self._consistent(assignment):
                continue
            if len(assignment) == self.count:
                yield self._model(assignment)
                continue
            # reversed so the first candidate is explored first
            for candidate in reversed(self.candidates):
                stack.append(assignment + [candidate])

    def search(self, first: ImmutableMatrix) -> Optional[Witness]:
        for model in self.members(first):
            pair = noncommuting_pair(model)
            if pair is not None:
                return Witness(pair=pair, model=model)
        return None


def family_models(P: Presentation, family: Optional[WitnessFamily] = None) -> Iterator[MatrixModel]:
    """Members of the family satisfying P, by dimension: single blocks, then their direct sums."""
    family = family or WitnessFamily()

    if family.kind == WitnessFamilyKind.PERMUTATION_DIAGONAL_SUMS:
        singles = permutation_models(P)
    else:
        search = _BlockSearch(P, family.candidates())
        singles = [model for first in search.candidates for model in search.members(first)]

    yield from singles
    for blocks in range(2, family.max_blocks + 1):
        for summands in combinations_with_replacement(singles, blocks):
            model = summands[0]
            for summand in summands[1:]:
                model = direct_sum(model, summand)
            yield model


def noncommutativity_witness(P: Presentation, family: Optional[WitnessFamily] = None) -> Optional[Witness]:
    """First model in the family satisfying P with two non-commuting generators, or None.

    Direct sums of commuting models commute, so only single blocks are searched.
    """
    family = family or WitnessFamily()

    if family.kind == WitnessFamilyKind.PERMUTATION_DIAGONAL_SUMS:
        for model in permutation_models(P):
            pair = noncommuting_pair(model)
            if pair is not None:
                return Witness(pair=pair, model=model)
        logger.info(f"no witness for {P.name} among permutation models")
        return None

    search = _BlockSearch(P, family.candidates())
    if search.inconsistent or not search.count:
        return None

    results = run_in_workers(search.search, search.candidates, description="witness search")
    for witness in results:
        if witness is not None:
            logger.info(f"witness for {P.name}: {witness.pair[0]}, {witness.pair[1]}")
            return witness

    logger.info(f"no witness for {P.name} in family {family.kind}")
    return None
