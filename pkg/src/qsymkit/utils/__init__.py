import hashlib
import json
import re
from fractions import Fraction
from typing import Any


RATIONAL_PATTERN = re.compile(r"[+-]?\d+(/\d+)?")


def parse_rational(value: Any) -> Fraction:
    """Accepts ints, Fractions and strings of the form "a" or "a/b"."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")

    if isinstance(value, (int, Fraction)):
        return Fraction(value)

    if isinstance(value, str) and RATIONAL_PATTERN.fullmatch(value.strip()):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc

    raise ValueError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def input_hash(payload: Any) -> str:
    """Short content hash of a JSON-able payload, used in presentation headers."""
    encoded = json.dumps(payload, sort_keys=True, default=str).encode("utf-8")
    return hashlib.sha256(encoded).hexdigest()[:12]


def format_matrix(matrix) -> str:
    """Row-major text form "(a b / c d)" of a sympy matrix with rational entries."""
    rows = [" ".join(str(matrix[i, j]) for j in range(matrix.cols)) for i in range(matrix.rows)]
    return "(" + " / ".join(rows) + ")"
