import pytest
from pydantic import ValidationError
from qsymkit.models import (
    CantorForm,
    GraphInput,
    MetricSpaceInput,
    OutputFormat,
    PresentationScheme,
    RunConfig,
    SeriesKind,
    WitnessFamilyKind,
)


class TestEnums:
    def test_string_comparison(self):
        """Test that enum members compare equal to their values."""
        assert OutputFormat.JSON == "json"
        assert PresentationScheme.QISO == "qiso"
        assert CantorForm.REDUCED != "raw"
        assert str(SeriesKind.CIRCLE) == "circle"
        assert str(WitnessFamilyKind.TWO_PROJECTION_BLOCKS) == "two-projection-blocks"

    def test_hashable(self):
        """Test that enum members can key dictionaries."""
        assert {SeriesKind.INTERVAL: 1}[SeriesKind.INTERVAL] == 1


class TestInputSchemas:
    def test_metric_space_input(self):
        """Test that entries may be strings or ints."""
        data = MetricSpaceInput.model_validate({"n": 2, "sqdist": [[0, "1/2"], ["1/2", 0]]})

        assert data.sqdist[0][1] == "1/2"

    def test_unknown_fields(self):
        """Test that unexpected keys are rejected."""
        with pytest.raises(ValidationError):
            GraphInput.model_validate({"vertices": [], "edges": [], "weights": []})


class TestRunConfig:
    def test_defaults(self):
        """Test the defaults of a bare run configuration."""
        config = RunConfig(subcommand="present")

        assert config.form == CantorForm.RAW
        assert config.output_format == OutputFormat.TEXT
        assert config.family == WitnessFamilyKind.TWO_PROJECTION_BLOCKS
        assert config.params == ["0", "1"]

    def test_strings_become_enums(self):
        """Test that command-line strings are parsed into enums."""
        config = RunConfig(subcommand="continuum", space="circle", output_format="json", scheme="edges")

        assert config.space == SeriesKind.CIRCLE
        assert config.output_format == OutputFormat.JSON
        assert config.scheme == PresentationScheme.EDGES

    @pytest.mark.parametrize("field", ["degree_bound", "size_cap"])
    def test_positive_limits(self, field):
        """Test that limits must be positive."""
        with pytest.raises(ValidationError, match="at least 1"):
            RunConfig(subcommand="aut", **{field: 0})

    def test_unknown_option(self):
        """Test that unknown options are rejected."""
        with pytest.raises(ValidationError):
            RunConfig(subcommand="aut", colour="blue")
