"""Exact rational scalars and their canonical text form.

All distances, weights, and interval bounds in this package are
`fractions.Fraction` values. Text form is "N" or "N/D" in lowest terms
with a positive denominator; float literals are rejected outright so no
inexact value can enter through a file or a command line.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InvalidInput

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "N" or "N/D" into a Fraction, rejecting anything else."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise InvalidInput(f"not an integer or N/D rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise InvalidInput(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    """Canonical text for a Fraction: lowest terms, "N" or "N/D"."""
    return str(Fraction(value))


def coerce_rational(value) -> Fraction:
    """Accept int or Fraction, refuse float and anything inexact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise InvalidInput(f"expected an exact rational, got {type(value).__name__}")
