"""
Job description and input parsing for the command-line front end.

Coefficients are given a_0 first in ascending powers; the leading 1 of
the monic polynomial is implied. Complex literals use the form "a+bi"
without spaces, pure reals are allowed.
"""

import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from config.settings import Method
from core.poly import MonicPolynomial
from solvers.initial import default_initial_guess


class UsageError(ValueError):
    """Malformed command-line input; maps to exit code 2."""
    pass


METHOD_CHOICES = ("wdk", "chebyshev", "both")
FORMAT_CHOICES = ("text", "jsonl")

_COMPLEX_RE = re.compile(
    r"^(?:[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
    r"(?:[+-]?(?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?[ij])?$"
)


def parse_complex(token: str) -> complex:
    """
    Parse "a+bi", "a-bi", "bi", "i" or a plain real.

    Raises:
        UsageError: If the literal is malformed or not finite
    """
    text = token.strip().replace("−", "-")
    if not text or not _COMPLEX_RE.match(text):
        raise UsageError(f"Malformed complex literal: {token!r}")
    try:
        value = complex(text.replace("i", "j"))
    except ValueError as exc:
        raise UsageError(f"Malformed complex literal: {token!r}") from exc
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise UsageError(f"Non-finite value: {token!r}")
    return value


def parse_complex_list(text: str) -> List[complex]:
    """Split on whitespace and commas and parse every token."""
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not tokens:
        raise UsageError("Empty list")
    return [parse_complex(t) for t in tokens]


def read_coefficients_file(path: str) -> List[complex]:
    """
    One complex per line, a_0 first. '#' starts a comment, blank lines are skipped.
    """
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"Cannot read coefficients file {path}: {exc}") from exc

    values = []
    for number, line in enumerate(lines, start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        try:
            values.append(parse_complex(content))
        except UsageError as exc:
            raise UsageError(f"{path}:{number}: {exc}") from exc
    if not values:
        raise UsageError(f"No coefficients in {path}")
    return values


@dataclass
class JobSpec:
    """One solve/compare job as given on the command line."""
    coefficients: List[complex]
    initial: str = "circle"  # circle | explicit
    circle_seed: int = 0
    start: Optional[List[complex]] = None

    method: str = "wdk"  # wdk | chebyshev | both
    tol: float = 1e-15
    max_iter: int = 1000
    trace: bool = False
    output_format: str = "text"

    # Extras beyond the core job
    export: Optional[str] = None
    collision_eps: float = 1e-12
    jitter: bool = False

    def __post_init__(self):
        self.validate()

    def validate(self):
        """
        Raises:
            UsageError: On any inconsistent field
        """
        if not self.coefficients:
            raise UsageError("At least one coefficient is required (degree >= 1)")
        if self.method not in METHOD_CHOICES:
            raise UsageError(f"Unknown method {self.method!r}; choose from {', '.join(METHOD_CHOICES)}")
        if self.output_format not in FORMAT_CHOICES:
            raise UsageError(f"Unknown format {self.output_format!r}")
        if not self.tol > 0:
            raise UsageError(f"--tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise UsageError(f"--max-iter must be >= 1, got {self.max_iter}")
        if self.collision_eps < 0:
            raise UsageError(f"--collision-eps must be >= 0, got {self.collision_eps}")

        if self.initial == "explicit":
            if self.start is None:
                raise UsageError("Explicit start requested without values")
            if len(self.coefficients) == len(self.start) + 1 and self.coefficients[-1] == 1:
                raise UsageError(
                    "Leading coefficient supplied; give a_0 ... a_{n-1} only (the leading 1 is implied)"
                )
            if len(self.start) != len(self.coefficients):
                raise UsageError(
                    f"Start has {len(self.start)} entries, polynomial degree is {len(self.coefficients)}"
                )
        elif self.initial != "circle":
            raise UsageError(f"Unknown initial kind {self.initial!r}")

    @property
    def methods(self) -> List[Method]:
        if self.method == "both":
            return [Method.WEIERSTRASS_KERNER, Method.CHEBYSHEV]
        return [Method.parse(self.method)]

    def polynomial(self) -> MonicPolynomial:
        return MonicPolynomial.from_sequence(self.coefficients)

    def start_vector(self) -> np.ndarray:
        """Explicit start or the seeded circle start."""
        if self.initial == "explicit":
            return np.asarray(self.start, dtype=np.complex128)
        return default_initial_guess(self.polynomial(), seed=self.circle_seed)


def coefficients_from_args(coeffs: Optional[Sequence[str]], coeffs_file: Optional[str]) -> List[complex]:
    """Exactly one of --coeffs / --coeffs-file must be given."""
    if bool(coeffs) == bool(coeffs_file):
        raise UsageError("Give exactly one of --coeffs or --coeffs-file")
    if coeffs_file:
        return read_coefficients_file(coeffs_file)
    return parse_complex_list(" ".join(coeffs))
