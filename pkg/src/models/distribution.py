# src/models/distribution.py
"""
Mixed discrete/continuous law of Willie's per-slot received power.

With probability ``1 - p_j`` the jammer is silent and the power sits at
an atom; otherwise it is uniform over an open segment.
"""

# imports built-in modules
from dataclasses import dataclass

# imports third-party modules
import numpy as np
from numpy.typing import ArrayLike

# imports local modules
from src.exceptions import InvalidParameterError


@dataclass(frozen=True)
class MixedDistribution:
    """Atom at ``atom_location`` with mass ``atom_mass`` plus a uniform segment.

    The segment ``(segment_lo, segment_hi)`` carries ``1 - atom_mass``.
    """

    atom_location: float
    atom_mass: float
    segment_lo: float
    segment_hi: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.atom_mass <= 1.0:
            raise InvalidParameterError("atom mass in [0,1]", f"atom_mass={self.atom_mass}")
        if not self.segment_hi > self.segment_lo:
            raise InvalidParameterError(
                "segment non-degenerate", f"({self.segment_lo}, {self.segment_hi})"
            )

    @classmethod
    def from_jammer(
        cls, offset: float, p_j: float, p_min: float, p_max: float
    ) -> "MixedDistribution":
        """Law of ``offset + s_j * P_j`` for ``s_j ~ Bernoulli(p_j)``, ``P_j ~ U(p_min, p_max)``."""
        return cls(offset, 1.0 - p_j, offset + p_min, offset + p_max)

    @property
    def segment_mass(self) -> float:
        return 1.0 - self.atom_mass

    @property
    def density(self) -> float:
        """Density of the continuous part on its support."""
        return self.segment_mass / (self.segment_hi - self.segment_lo)

    def shifted(self, offset: float) -> "MixedDistribution":
        return MixedDistribution(
            self.atom_location + offset,
            self.atom_mass,
            self.segment_lo + offset,
            self.segment_hi + offset,
        )

    def mass_in(self, lo: ArrayLike, hi: ArrayLike):
        """Probability of the half-open window ``[lo, hi)``.

        Broadcasts over array arguments; empty windows (``hi <= lo``) have
        zero mass.
        """
        lo_arr = np.asarray(lo, dtype=float)
        hi_arr = np.asarray(hi, dtype=float)
        atom_in = (lo_arr <= self.atom_location) & (self.atom_location < hi_arr)
        overlap = np.minimum(hi_arr, self.segment_hi) - np.maximum(lo_arr, self.segment_lo)
        mass = self.atom_mass * atom_in + self.density * np.clip(overlap, 0.0, None)
        return float(mass) if mass.ndim == 0 else mass

    def trailing_window_mass(self, upper: ArrayLike, width: float):
        """Probability of ``[upper - width, upper)``.

        Same as ``mass_in(upper - width, upper)``, but the atom test is
        written as ``atom < upper <= atom + width`` so thresholds built as
        ``atom + width`` land on the closed edge exactly.
        """
        upper_arr = np.asarray(upper, dtype=float)
        atom_in = (self.atom_location < upper_arr) & (upper_arr <= self.atom_location + width)
        overlap = np.minimum(upper_arr, self.segment_hi) - np.maximum(
            upper_arr - width, self.segment_lo
        )
        mass = self.atom_mass * atom_in + self.density * np.clip(overlap, 0.0, None)
        return float(mass) if mass.ndim == 0 else mass

    def mass_below(self, x: ArrayLike):
        """``Pr(X < x)``."""
        return self.mass_in(-np.inf, x)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        active = rng.random(size) < self.segment_mass
        spread = rng.uniform(self.segment_lo, self.segment_hi, size)
        return np.where(active, spread, self.atom_location)
