from enum import Enum
from pydantic import BaseModel, ConfigDict, field_validator
from typing import List, Tuple, Optional, Dict


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"

    def __str__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, str):
            return self.value == other
        elif isinstance(other, OutputFormat):
            return self.value == other.value
        return False

    def __hash__(self):
        return hash(self.value)


class PresentationScheme(Enum):
    COMMUTATION = "commutation"
    QISO = "qiso"
    EDGES = "edges"

    def __str__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, str):
            return self.value == other
        elif isinstance(other, PresentationScheme):
            return self.value == other.value
        return False

    def __hash__(self):
        return hash(self.value)


class CantorForm(Enum):
    RAW = "raw"
    REDUCED = "reduced"

    def __str__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, str):
            return self.value == other
        elif isinstance(other, CantorForm):
            return self.value == other.value
        return False

    def __hash__(self):
        return hash(self.value)


class SeriesKind(Enum):
    INTERVAL = "interval"
    CIRCLE = "circle"

    def __str__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, str):
            return self.value == other
        elif isinstance(other, SeriesKind):
            return self.value == other.value
        return False

    def __hash__(self):
        return hash(self.value)


class WitnessFamilyKind(Enum):
    PERMUTATION_DIAGONAL_SUMS = "permutation-diagonal-sums"
    TWO_PROJECTION_BLOCKS = "two-projection-blocks"

    def __str__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, str):
            return self.value == other
        elif isinstance(other, WitnessFamilyKind):
            return self.value == other.value
        return False

    def __hash__(self):
        return hash(self.value)


class CommutatorVerdict(Enum):
    YES = "yes"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, str):
            return self.value == other
        elif isinstance(other, CommutatorVerdict):
            return self.value == other.value
        return False

    def __hash__(self):
        return hash(self.value)


# input file schemas; rationals travel as strings "a/b" (ints are accepted too)


class MetricSpaceInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    sqdist: List[List[str | int]]


class GraphInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    vertices: List[str]
    edges: List[Tuple[str, str]]
    directed: bool = False


class TreeInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    levels: List[int]
    parents: List[List[int]]


class MatrixModelInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dim: int
    assignment: Dict[str, List[List[str | int]]]


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    subcommand: str
    metric: Optional[str] = None
    graph: Optional[str] = None
    tree: Optional[str] = None
    model: Optional[str] = None
    magic: Optional[int] = None
    scheme: Optional[PresentationScheme] = None
    level: Optional[int] = None
    form: CantorForm = CantorForm.RAW
    cantor: Optional[int] = None
    limit: Optional[int] = None
    assemble: bool = False
    witness: bool = False
    family: WitnessFamilyKind = WitnessFamilyKind.TWO_PROJECTION_BLOCKS
    params: List[str] = ["0", "1"]
    space: Optional[SeriesKind] = None
    degree: Optional[int] = None
    degree_bound: int = 4
    size_cap: int = 12
    output_format: OutputFormat = OutputFormat.TEXT

    @field_validator("degree_bound", "size_cap")
    @classmethod
    def positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be at least 1")
        return value
