from qsymkit.algebra import GeneratorUniverse, RelationSet, interreduce, positivity_simplify


class TestPositivitySimplify:
    def test_square_of_selfadjoint(self):
        """x^2 = 0 forces x = 0."""
        universe = GeneratorUniverse.from_names(["x"])
        x = universe.gen("x")

        assert positivity_simplify(RelationSet(universe, [x * x])).lines() == ("x",)

    def test_sum_of_squares(self):
        """Each summand of a vanishing positive sum vanishes."""
        universe = GeneratorUniverse.from_names(["x", "y"])
        x, y = universe.gen("x"), universe.gen("y")

        R = positivity_simplify(RelationSet(universe, [x * x + 2 * y * y]))
        assert R.lines() == ("x", "y")

    def test_non_selfadjoint(self):
        """z z* = 0 forces z = 0."""
        universe = GeneratorUniverse.from_names(["z"], non_selfadjoint=["z"])
        z = universe.gen("z")

        assert positivity_simplify(RelationSet(universe, [z * z.star()])).lines() == ("z",)

    def test_mixed_signs_are_left_alone(self):
        """x^2 - x is not a positive sum."""
        universe = GeneratorUniverse.from_names(["x"])
        x = universe.gen("x")
        R = RelationSet(universe, [x * x - x])

        assert positivity_simplify(R) == R

    def test_products_of_different_letters_are_not_squares(self):
        """x y is not of the form w w*."""
        universe = GeneratorUniverse.from_names(["x", "y"])
        x, y = universe.gen("x"), universe.gen("y")
        R = RelationSet(universe, [x * y])

        assert positivity_simplify(R) == R


class TestInterreduce:
    def test_linear_rules_are_substituted(self):
        """y = x turns x y - 1 into x x - 1."""
        universe = GeneratorUniverse.from_names(["x", "y"])
        x, y = universe.gen("x"), universe.gen("y")

        R = interreduce(RelationSet(universe, [x - y, x * y - 1]))
        assert R.lines() == ("y - x", "x x - 1")

    def test_inconsistency_collapses_to_one(self):
        """x = 0 and x = 1 reduce to 1 = 0."""
        universe = GeneratorUniverse.from_names(["x"])
        x = universe.gen("x")

        assert interreduce(RelationSet(universe, [x, x - 1])).lines() == ("1",)

    def test_idempotent(self):
        """A second pass changes nothing."""
        universe = GeneratorUniverse.from_names(["x", "y"])
        x, y = universe.gen("x"), universe.gen("y")
        R = interreduce(RelationSet(universe, [2 * x - y, y * y - x]))

        assert interreduce(R) == R
