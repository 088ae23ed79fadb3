from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple
from qsymkit.algebra.presentation import Presentation
from qsymkit.algebra.words import GeneratorUniverse, Letter
from qsymkit.utils.concurrency import run_in_workers

# a commutative monomial is a sorted tuple of (variable index, exponent)
Monomial = Tuple[Tuple[int, int], ...]
CommutativeRelation = Dict[Monomial, Fraction]
Assignment = Tuple[int, ...]


def _monomial_key(monomial: Monomial):
    return (sum(exponent for _, exponent in monomial), monomial)


class CommutativePresentation:
    """Maximal commutative quotient of a presentation."""

    __slots__ = ("universe", "variables", "idempotent", "relations", "source")

    def __init__(
        self,
        universe: GeneratorUniverse,
        variables: Sequence[Letter],
        idempotent: Sequence[bool],
        relations: Sequence[CommutativeRelation],
        source: str = "",
    ):
        self.universe = universe
        self.variables: Tuple[Letter, ...] = tuple(variables)
        self.idempotent: Tuple[bool, ...] = tuple(idempotent)
        self.relations: Tuple[CommutativeRelation, ...] = tuple(relations)
        self.source = source

    @property
    def variable_names(self) -> Tuple[str, ...]:
        return tuple(self.universe.format_letter(letter) for letter in self.variables)

    def format_relation(self, relation: CommutativeRelation) -> str:
        names = self.variable_names
        parts = []
        ordered = sorted(relation.items(), key=lambda item: _monomial_key(item[0]), reverse=True)

        for position, (monomial, coefficient) in enumerate(ordered):
            factors = " ".join(
                names[index] if exponent == 1 else f"{names[index]}^{exponent}"
                for index, exponent in monomial
            )
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = factors
            else:
                body = f"{magnitude} {factors}"

            if position == 0:
                parts.append(body if coefficient > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coefficient > 0 else '-'} {body}")
        return " ".join(parts)

    def to_text(self) -> str:
        lines = [f"# abelianization of {self.source or 'presentation'}"]
        lines.append("# variables: " + " ".join(self.variable_names))
        idempotent = [n for n, flag in zip(self.variable_names, self.idempotent) if flag]
        if idempotent:
            lines.append("# idempotent: " + " ".join(idempotent))
        lines.extend(self.format_relation(relation) for relation in self.relations)
        return "\n".join(lines) + "\n"


def _is_idempotent(presentation: Presentation, name: str) -> bool:
    generator = presentation.universe.gen(name)
    return (generator * generator - generator) in presentation.relations


def abelianize(P: Presentation) -> CommutativePresentation:
    universe = P.universe
    variables = list(universe.letters())
    index_of = {letter: index for index, letter in enumerate(variables)}
    idempotent = [
        universe[letter[0]].selfadjoint and _is_idempotent(P, universe[letter[0]].name)
        for letter in variables
    ]

    relations = {}
    for relation in P.relations:
        collected: CommutativeRelation = {}
        for word, coefficient in relation.terms.items():
            exponents: Dict[int, int] = {}
            for letter in word:
                index = index_of[letter]
                exponents[index] = exponents.get(index, 0) + 1
            monomial = tuple(
                sorted((i, 1 if idempotent[i] else e) for i, e in exponents.items())
            )
            value = collected.get(monomial, 0) + coefficient
            if value:
                collected[monomial] = value
            else:
                collected.pop(monomial, None)

        if not collected:
            continue

        lead = max(collected, key=_monomial_key)
        scale = 1 / collected[lead]
        normalized = frozenset((m, scale * c) for m, c in collected.items())
        relations[normalized] = None

    ordered = sorted(
        (dict(items) for items in relations),
        key=lambda r: sorted(((_monomial_key(m), c) for m, c in r.items()), reverse=True),
    )
    return CommutativePresentation(universe, variables, idempotent, ordered, source=P.name)


class _ZeroOneSearch:
    """Backtracking over {0,1} assignments with bound-based propagation."""

    def __init__(self, C: CommutativePresentation):
        self.count = len(C.variables)
        self.constraints: List[List[Tuple[Fraction, Tuple[int, ...]]]] = []
        self.watch: List[List[int]] = [[] for _ in range(self.count)]
        self.trivially_false = False

        for relation in C.relations:
            terms = [(c, tuple(i for i, _ in m)) for m, c in relation.items()]
            variables = sorted({i for _, m in terms for i in m})
            if not variables:
                self.trivially_false = True
                continue
            position = len(self.constraints)
            self.constraints.append(terms)
            for variable in variables:
                self.watch[variable].append(position)

    @staticmethod
    def _feasible(terms, assignment) -> bool:
        low = high = Fraction(0)
        for coefficient, monomial in terms:
            known = True
            vanished = False
            for variable in monomial:
                value = assignment[variable]
                if value == 0:
                    vanished = True
                    break
                if value is None:
                    known = False
            if vanished:
                continue
            if known:
                low += coefficient
                high += coefficient
            elif coefficient > 0:
                high += coefficient
            else:
                low += coefficient
        return low <= 0 <= high

    def _propagate(self, assignment: List[Optional[int]], queue: List[int]) -> bool:
        while queue:
            variable = queue.pop()
            for position in self.watch[variable]:
                terms = self.constraints[position]
                if not self._feasible(terms, assignment):
                    return False
                unassigned = sorted(
                    {i for _, m in terms for i in m if assignment[i] is None}
                )
                for candidate in unassigned:
                    if assignment[candidate] is not None:
                        continue
                    allowed = []
                    for value in (0, 1):
                        assignment[candidate] = value
                        if self._feasible(terms, assignment):
                            allowed.append(value)
                    assignment[candidate] = None
                    if not allowed:
                        return False
                    if len(allowed) == 1:
                        assignment[candidate] = allowed[0]
                        queue.append(candidate)
        return True

    def initial(self) -> Optional[List[Optional[int]]]:
        if self.trivially_false:
            return None
        assignment: List[Optional[int]] = [None] * self.count
        if not self._propagate(assignment, list(range(self.count))):
            return None
        return assignment

    def branch(self, assignment: List[Optional[int]], variable: int, value: int):
        assignment = list(assignment)
        assignment[variable] = value
        if not self._propagate(assignment, [variable]):
            return None
        return assignment

    def solve(self, assignment: Optional[List[Optional[int]]]) -> List[Assignment]:
        if assignment is None:
            return []

        solutions = []
        stack = [assignment]
        while stack:
            current = stack.pop()
            try:
                variable = current.index(None)
            except ValueError:
                solutions.append(tuple(current))
                continue
            for value in (1, 0):
                child = self.branch(current, variable, value)
                if child is not None:
                    stack.append(child)
        return solutions


def zero_one_solutions(C: CommutativePresentation) -> List[Assignment]:
    """All {0,1} points of C, sorted lexicographically."""
    if not all(C.idempotent):
        names = [n for n, flag in zip(C.variable_names, C.idempotent) if not flag]
        raise ValueError(f"zero_one_solutions needs idempotent generators; not idempotent: {' '.join(names)}")

    search = _ZeroOneSearch(C)
    root = search.initial()
    if root is None:
        return []

    try:
        variable = root.index(None)
    except ValueError:
        return [tuple(root)]

    branches = [search.branch(root, variable, value) for value in (0, 1)]
    results = run_in_workers(search.solve, branches, description="zero-one branches")
    return sorted(solution for branch in results for solution in branch)
