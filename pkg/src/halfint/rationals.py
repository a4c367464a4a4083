"""Exact rational scalars and coordinate tuples.

Every quantity in this package is an exact rational.  Scalars are
``fractions.Fraction`` values (always in lowest terms with a positive
denominator), points and vectors are tuples of them.  The canonical
serialized form of a scalar is the string ``"p/q"``, or just ``"p"``
when the denominator is 1, which is exactly what ``str(Fraction)``
produces.

gmpy2's ``mpq`` type is used as a drop-in rational inside numerical hot
loops when available; it hashes and compares equal to ``Fraction``, so
values of the two types may be mixed freely.  No floating point enters
any computation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as fastq
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    fastq = Fraction

Point = "tuple[Fraction, ...]"

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?\Z")


def rational_from_str(text: str) -> Fraction:
    """Parse a canonical rational string ("p/q" or "p").

    Decimal notation is rejected on purpose: every number in this
    package is an exact rational, and accepting "0.1" would invite
    silently inexact inputs.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError("not a canonical rational string: %r" % text)
    return Fraction(text)


def rational_to_str(value) -> str:
    return str(Fraction(value))


def point_from_strs(coords: Iterable[str]) -> tuple[Fraction, ...]:
    return tuple(rational_from_str(c) for c in coords)


def point_to_strs(point: Sequence) -> list[str]:
    return [rational_to_str(c) for c in point]


def point_label(point: Sequence) -> str:
    """Single-string form of a point, e.g. "0,1/2,1"."""
    return ",".join(rational_to_str(c) for c in point)


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Sequence) -> tuple:
    return tuple(c * x for x in u)


def vdot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def midpoint(u: Sequence, v: Sequence) -> tuple:
    return tuple((a + b) / 2 for a, b in zip(u, v))


def is_zero_vector(u: Sequence) -> bool:
    return all(x == 0 for x in u)
