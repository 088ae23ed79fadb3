"""Coefficient comparison for isometric coactions on the interval and the circle.

A coaction is written as a generating series in the coordinate function: alpha(T) =
sum_n T^n (x) q_n on [0, 1], and alpha(Z) = sum_n Z^n (x) q_n + sum_n Z*^n (x) q'_n on
the circle, where Z* = Z^-1. Preserving the squared distance d^2 means that
alpha2(d^2) = d^2 (x) 1, and comparing the coefficients of T^m (x) T^n (or Z^m (x) Z^n)
gives one relation among the q's per monomial pair.
"""

from fractions import Fraction
from typing import Dict, List, Tuple
from pydantic import BaseModel, ConfigDict, field_validator
from qsymkit.algebra import (
    GeneratorUniverse,
    NCPolynomial,
    RelationSet,
    evaluate_scalar,
    interreduce,
    positivity_simplify,
)
from qsymkit.models import SeriesKind
from qsymkit.utils.logging import logger

Series = Dict[int, NCPolynomial]
MonomialPair = Tuple[int, int]

# d^2 as (coefficient, power of alpha in the first leg, power in the second leg);
# power -1 stands for the adjoint coordinate Z*
SQUARED_DISTANCE_TERMS = {
    SeriesKind.INTERVAL: [(1, 2, 0), (-2, 1, 1), (1, 0, 2)],
    SeriesKind.CIRCLE: [(2, 0, 0), (-1, 1, -1), (-1, -1, 1)],
}


def primed(n: int) -> str:
    return f"q'{n}"


class GeneratingSeries(BaseModel):
    """Truncated series with coefficients q_0..q_N (and q'_1..q'_N on the circle)."""

    model_config = ConfigDict(frozen=True)

    kind: SeriesKind
    bound: int

    @field_validator("bound")
    @classmethod
    def check_bound(cls, bound: int) -> int:
        if bound < 2:
            raise ValueError("the series bound N must be at least 2")
        return bound

    @property
    def universe(self) -> GeneratorUniverse:
        names = [f"q{n}" for n in range(self.bound + 1)]
        if self.kind == SeriesKind.INTERVAL:
            return GeneratorUniverse.from_names(names)

        names += [primed(n) for n in range(1, self.bound + 1)]
        return GeneratorUniverse.from_names(names, non_selfadjoint=names)

    def coordinate_image(self, universe: GeneratorUniverse) -> Series:
        """alpha(T), or alpha(Z) with negative exponents for powers of Z*."""
        series = {n: universe.gen(f"q{n}") for n in range(self.bound + 1)}
        if self.kind == SeriesKind.CIRCLE:
            for n in range(1, self.bound + 1):
                series[-n] = universe.gen(primed(n))
        return series


def _adjoint_series(series: Series) -> Series:
    # (Z^n (x) x)* = Z^-n (x) x*
    return {-exponent: coefficient.star() for exponent, coefficient in series.items()}


def _multiply_series(left: Series, right: Series, bound: int) -> Series:
    product: Series = {}
    for a, x in left.items():
        for b, y in right.items():
            exponent = a + b
            if abs(exponent) > bound:
                continue
            term = x * y
            product[exponent] = product[exponent] + term if exponent in product else term
    return product


def _series_power(s: GeneratingSeries, universe: GeneratorUniverse, power: int) -> Series:
    if power == 0:
        return {0: universe.one()}

    base = s.coordinate_image(universe)
    if power < 0:
        base = _adjoint_series(base)

    result = base
    for _ in range(abs(power) - 1):
        result = _multiply_series(result, base, s.bound)
    return result


def monomial_pairs(s: GeneratingSeries) -> List[MonomialPair]:
    """Pairs (m, n) whose coefficient is unaffected by cutting the series at N."""
    top = s.bound - 1
    low = 0 if s.kind == SeriesKind.INTERVAL else -top
    return [(m, n) for m in range(low, top + 1) for n in range(low, top + 1)]


def coefficient_relations(s: GeneratingSeries) -> Dict[MonomialPair, NCPolynomial]:
    """Coefficient of each monomial pair in alpha2(d^2) - d^2 (x) 1, as computed."""
    universe = s.universe
    terms = SQUARED_DISTANCE_TERMS[s.kind]
    powers = {power: _series_power(s, universe, power) for _, a, b in terms for power in (a, b)}

    relations = {}
    for m, n in monomial_pairs(s):
        relation = universe.zero()
        for coefficient, a, b in terms:
            left, right = powers[a].get(m), powers[b].get(n)
            if left is not None and right is not None:
                relation = relation + coefficient * (left * right)
            # d^2 (x) 1; the term of d^2 with powers (a, b) sits at the monomial (a, b)
            if (m, n) == (a, b):
                relation = relation - coefficient
        relations[(m, n)] = relation
    return relations


def expand_isometry_relations(s: GeneratingSeries) -> RelationSet:
    relations = coefficient_relations(s)
    result = RelationSet(s.universe, relations.values())
    logger.info(f"{s.kind} series with N={s.bound}: {len(result)} relations")
    return result


def derive_conclusions(R: RelationSet, kind: SeriesKind) -> RelationSet:
    """Alternate positivity simplification and linear interreduction until nothing changes."""
    current = R
    rounds = 0
    while True:
        rounds += 1
        simplified = interreduce(positivity_simplify(current))
        if simplified == current:
            logger.info(f"{kind} conclusions stable after {rounds} rounds")
            return simplified
        current = simplified


def classical_isometry_points(s: GeneratingSeries) -> List[Dict[str, Fraction]]:
    """Scalar coefficient values of the classical isometries of the space."""
    values = {name: Fraction(0) for name in s.universe.names}
    if s.kind == SeriesKind.INTERVAL:
        # t -> 1 - t and the identity
        return [{**values, "q0": Fraction(1), "q1": Fraction(-1)}, {**values, "q1": Fraction(1)}]

    # rotation fixing the coordinate, and the reflection Z -> Z*
    return [{**values, "q1": Fraction(1)}, {**values, primed(1): Fraction(1)}]


def violated_relations(R: RelationSet, point: Dict[str, Fraction]) -> List[NCPolynomial]:
    return [relation for relation in R if evaluate_scalar(relation, point) != 0]
