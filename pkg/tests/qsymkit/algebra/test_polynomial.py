from fractions import Fraction
from itertools import product
import pytest
from qsymkit.algebra import (
    GeneratorUniverse,
    evaluate_scalar,
    nc_multiply,
    nc_star,
    nc_sum,
    substitute,
)


@pytest.fixture
def universe():
    return GeneratorUniverse.from_names(["q0", "q1"])


class TestArithmetic:
    def test_zero_coefficients_are_dropped(self, universe):
        """x - x is the zero polynomial."""
        x = universe.gen("q0")

        assert (x - x).is_zero()
        assert str(x - x) == "0"

    def test_multiplication_is_noncommutative(self, universe):
        """q0 q1 and q1 q0 are different words."""
        x, y = universe.gen("q0"), universe.gen("q1")

        assert x * y != y * x
        assert str(y * x - x * y) == "q1 q0 - q0 q1"

    def test_scalars_mix_with_polynomials(self, universe):
        """Integers and fractions act as constants on both sides."""
        x = universe.gen("q0")

        assert str(1 - x) == "-q0 + 1"
        assert str(Fraction(1, 2) * x + 2) == "1/2 q0 + 2"
        assert x * 3 == 3 * x

    def test_power(self, universe):
        """x^2 is x x and x^0 is 1."""
        x = universe.gen("q0")

        assert x**2 == x * x
        assert x**0 == 1

    def test_degree_and_leading_word(self, universe):
        """Leading word is the deglex-largest word."""
        x, y = universe.gen("q0"), universe.gen("q1")
        p = x * y + y * x + x

        assert p.degree() == 2
        assert universe.format_word(p.leading_word()) == "q1 q0"

    def test_monic(self, universe):
        """monic divides by the leading coefficient."""
        x = universe.gen("q0")

        assert str((2 * x * x - 4).monic()) == "q0 q0 - 2"

    def test_mismatched_universes(self, universe):
        """Polynomials over different universes do not combine."""
        other = GeneratorUniverse.from_names(["p"])

        with pytest.raises(ValueError):
            universe.gen("q0") + other.gen("p")
        with pytest.raises(ValueError):
            nc_multiply(universe.gen("q0"), other.gen("p"))


class TestStar:
    def test_star_of_selfadjoint_product(self, universe):
        """(q0 q1)* = q1 q0 for selfadjoint generators."""
        x, y = universe.gen("q0"), universe.gen("q1")

        assert nc_star(x * y) == y * x

    def test_star_of_non_selfadjoint(self):
        """(2 z)* = 2 z* and z** = z."""
        universe = GeneratorUniverse.from_names(["z"], non_selfadjoint=["z"])
        z = universe.gen("z")

        assert str((2 * z).star()) == "2 z*"
        assert z.star().star() == z


class TestSubstitute:
    def test_images_replace_generators(self, universe):
        """Substitution is multiplicative."""
        target = GeneratorUniverse.from_names(["a", "b"])
        images = {"q0": target.gen("a") + target.gen("b"), "q1": target.one()}
        p = universe.gen("q0") * universe.gen("q1")

        assert substitute(p, images, target) == target.gen("a") + target.gen("b")

    def test_unmapped_generators_keep_their_name(self, universe):
        """Generators without an image map to the same name in the target."""
        target = GeneratorUniverse.from_names(["q1", "q0"])
        p = universe.gen("q0") * universe.gen("q1")

        assert str(substitute(p, {}, target)) == "q0 q1"

    def test_starred_letters_use_the_adjoint_image(self):
        """z* is sent to the adjoint of the image of z."""
        source = GeneratorUniverse.from_names(["z"], non_selfadjoint=["z"])
        target = GeneratorUniverse.from_names(["u", "v"], non_selfadjoint=["u", "v"])
        image = target.gen("u") * target.gen("v")

        result = substitute(source.gen("z", star=True), {"z": image}, target)
        assert str(result) == "v* u*"


class TestEvaluateScalar:
    def test_evaluation(self, universe):
        """Scalar evaluation multiplies values along each word."""
        x, y = universe.gen("q0"), universe.gen("q1")

        assert evaluate_scalar(x * y - 2 * y + 1, {"q0": 3, "q1": Fraction(1, 2)}) == Fraction(3, 2)

    def test_missing_value(self, universe):
        """Every generator in the polynomial needs a value."""
        with pytest.raises(ValueError, match="q1"):
            evaluate_scalar(universe.gen("q1"), {"q0": 1})

    def test_nc_sum(self, universe):
        """nc_sum adds a sequence of polynomials."""
        x = universe.gen("q0")

        assert nc_sum(universe, [x, x, universe.one()]) == 2 * x + 1


@pytest.fixture
def mixed():
    universe = GeneratorUniverse.from_names(["x", "y", "z"], non_selfadjoint=["z"])
    x, y, z = universe.gen("x"), universe.gen("y"), universe.gen("z")
    return [x + 2 * y, z * x - Fraction(1, 3), y * z.star() + x * x + 1]


class TestAlgebraLaws:
    def test_multiplication_is_associative(self, mixed):
        """(ab)c = a(bc)."""
        for a, b, c in product(mixed, repeat=3):
            assert nc_multiply(nc_multiply(a, b), c) == nc_multiply(a, nc_multiply(b, c))

    def test_multiplication_distributes(self, mixed):
        """Products distribute over sums on both sides."""
        for a, b, c in product(mixed, repeat=3):
            assert nc_multiply(a, b + c) == nc_multiply(a, b) + nc_multiply(a, c)
            assert nc_multiply(a + b, c) == nc_multiply(a, c) + nc_multiply(b, c)

    def test_adjoint_reverses_products(self, mixed):
        """(ab)* = b* a*, and the adjoint is an involution."""
        for a, b in product(mixed, repeat=2):
            assert nc_star(nc_multiply(a, b)) == nc_multiply(nc_star(b), nc_star(a))
        for a in mixed:
            assert nc_star(nc_star(a)) == a
