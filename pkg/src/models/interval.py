# src/models/interval.py
"""
Interval arithmetic with explicit endpoint openness.

Optimal thresholds and non-unique design parameters are sets rather
than points; these types carry them without losing boundary semantics.
"""

# imports built-in modules
import math
from dataclasses import dataclass
from typing import Iterator

# imports third-party modules
import numpy as np

# imports local modules
from src.exceptions import InvalidParameterError


def _fmt(value: float) -> str:
    return repr(float(value))


@dataclass(frozen=True)
class Interval:
    """A real interval; ``lo == hi`` with both ends closed is a point."""

    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self) -> None:
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise InvalidParameterError("interval bounds", "NaN endpoint")
        if self.lo > self.hi:
            raise InvalidParameterError("interval lo<=hi", f"lo={self.lo}, hi={self.hi}")
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise InvalidParameterError("interval non-empty", f"degenerate open interval at {self.lo}")

    @classmethod
    def point(cls, value: float) -> "Interval":
        return cls(value, value)

    @classmethod
    def closed(cls, lo: float, hi: float) -> "Interval":
        return cls(lo, hi)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, value: float) -> bool:
        above = value > self.lo if self.lo_open else value >= self.lo
        below = value < self.hi if self.hi_open else value <= self.hi
        return above and below

    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def representative(self) -> float:
        """Canonical member: the lower end when closed, else the upper end, else the midpoint."""
        if not self.lo_open:
            return self.lo
        if not self.hi_open:
            return self.hi
        return self.midpoint()

    def sample(self, count: int) -> list[float]:
        """Return ``count`` members spread over the interval, closed endpoints included."""
        if self.is_point or count <= 1:
            return [self.representative()]
        grid = np.linspace(self.lo, self.hi, count)
        if self.lo_open:
            grid[0] = self.lo + 0.5 * (grid[1] - grid[0])
        if self.hi_open:
            grid[-1] = self.hi - 0.5 * (grid[-1] - grid[-2])
        return [float(x) for x in grid if self.contains(float(x))]

    def shifted(self, offset: float) -> "Interval":
        return Interval(self.lo + offset, self.hi + offset, self.lo_open, self.hi_open)

    def touches(self, other: "Interval") -> bool:
        """True when the union of the two intervals is itself an interval."""
        first, second = sorted((self, other), key=lambda iv: (iv.lo, iv.lo_open))
        if second.lo < first.hi:
            return True
        return second.lo == first.hi and not (first.hi_open and second.lo_open)

    def hull(self, other: "Interval") -> "Interval":
        left = min(self, other, key=lambda iv: iv.lo)
        right = max(self, other, key=lambda iv: iv.hi)
        lo_open = left.lo_open if self.lo != other.lo else self.lo_open and other.lo_open
        hi_open = right.hi_open if self.hi != other.hi else self.hi_open and other.hi_open
        return Interval(left.lo, right.hi, lo_open, hi_open)

    def __str__(self) -> str:
        if self.is_point:
            return f"{{{_fmt(self.lo)}}}"
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{_fmt(self.lo)}, {_fmt(self.hi)}{right}"


@dataclass(frozen=True)
class IntervalSet:
    """Ordered union of pairwise disjoint, non-touching intervals."""

    pieces: tuple[Interval, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise InvalidParameterError("interval set non-empty")
        for left, right in zip(self.pieces, self.pieces[1:]):
            if left.lo > right.lo or left.touches(right):
                raise InvalidParameterError("interval set disjoint", f"{left} and {right}")

    @classmethod
    def of(cls, *intervals: Interval) -> "IntervalSet":
        """Union of the given intervals, merging any that overlap or touch."""
        ordered = sorted(intervals, key=lambda iv: (iv.lo, iv.lo_open))
        merged: list[Interval] = []
        for interval in ordered:
            if merged and merged[-1].touches(interval):
                merged[-1] = merged[-1].hull(interval)
            else:
                merged.append(interval)
        return cls(tuple(merged))

    @property
    def lo(self) -> float:
        return self.pieces[0].lo

    @property
    def hi(self) -> float:
        return self.pieces[-1].hi

    @property
    def is_single(self) -> bool:
        return len(self.pieces) == 1

    def contains(self, value: float) -> bool:
        return any(piece.contains(value) for piece in self.pieces)

    def representative(self) -> float:
        return self.pieces[0].representative()

    def sample(self, count: int) -> list[float]:
        """Members from every piece, about ``count`` in total."""
        per_piece = max(1, math.ceil(count / len(self.pieces)))
        return [x for piece in self.pieces for x in piece.sample(per_piece)]

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def __str__(self) -> str:
        return " U ".join(str(piece) for piece in self.pieces)
