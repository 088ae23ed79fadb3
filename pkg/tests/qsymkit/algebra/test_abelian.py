import pytest
from qsymkit.algebra import GeneratorUniverse, Presentation, abelianize, zero_one_solutions
from qsymkit.presentations import magic_unitary_presentation


class TestAbelianize:
    def test_magic_unitary_of_size_one(self):
        """Idempotent variables collapse x^2 - x to nothing."""
        C = abelianize(magic_unitary_presentation(1))

        assert C.to_text() == (
            "# abelianization of magic_unitary_presentation\n"
            "# variables: q11\n"
            "# idempotent: q11\n"
            "q11 - 1\n"
        )

    def test_commutators_vanish(self):
        """xy - yx has no commutative image."""
        universe = GeneratorUniverse.from_names(["x", "y"])
        x, y = universe.gen("x"), universe.gen("y")
        C = abelianize(Presentation.build(universe, [x * y - y * x, x * y - 1]))

        assert [C.format_relation(r) for r in C.relations] == ["x y - 1"]
        assert C.idempotent == (False, False)

    def test_exponents_are_kept_for_non_idempotents(self):
        """Without x^2 = x, powers stay."""
        universe = GeneratorUniverse.from_names(["x"])
        x = universe.gen("x")
        C = abelianize(Presentation.build(universe, [x * x * x - 2]))

        assert [C.format_relation(r) for r in C.relations] == ["x^3 - 2"]

    def test_adjoint_letters_become_variables(self):
        """Non-selfadjoint generators contribute z and z* variables."""
        universe = GeneratorUniverse.from_names(["z"], non_selfadjoint=["z"])
        z = universe.gen("z")
        C = abelianize(Presentation.build(universe, [z * z.star() - 1]))

        assert C.variable_names == ("z", "z*")


class TestZeroOneSolutions:
    def test_two_by_two_magic_unitary(self):
        """Exactly the two permutation matrices."""
        C = abelianize(magic_unitary_presentation(2))

        assert zero_one_solutions(C) == [(0, 1, 1, 0), (1, 0, 0, 1)]

    def test_three_by_three_magic_unitary(self):
        """Six permutation matrices of size three."""
        solutions = zero_one_solutions(abelianize(magic_unitary_presentation(3)))

        assert len(solutions) == 6
        assert all(sum(s) == 3 for s in solutions)

    def test_requires_idempotents(self):
        """The search is over {0,1} points of projections only."""
        universe = GeneratorUniverse.from_names(["x"])
        C = abelianize(Presentation.build(universe, [universe.gen("x") - 1]))

        with pytest.raises(ValueError, match="not idempotent: x"):
            zero_one_solutions(C)

    def test_infeasible(self):
        """p = 1 and p = 0 leave nothing."""
        universe = GeneratorUniverse.from_names(["p"])
        p = universe.gen("p")
        C = abelianize(Presentation.build(universe, [p * p - p, p, p - 1]))

        assert zero_one_solutions(C) == []
