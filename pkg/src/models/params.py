# src/models/params.py
"""
System parameter tuple and its validation.

All powers are linear (watts); conversion from dB happens at the CLI
boundary only.
"""

# imports built-in modules
import dataclasses
import math
from dataclasses import dataclass

# imports local modules
from src.exceptions import InvalidParameterError


@dataclass(frozen=True)
class SystemParams:
    """Full parameter tuple of the Alice / Bob / Willie / jammer scenario.

    Fields that a given operation does not read (for instance ``rate`` in
    detection) keep their defaults.

    Attributes
    ----------
    p_a : float
        Alice's transmit power (> 0).
    p_min, p_max : float
        Support of the uniform jamming power, ``p_max > p_min >= 0``.
    p_j : float
        Jammer transmission probability in [0, 1].
    sigma_w2, sigma_b2 : float
        Noise variances at Willie and Bob (> 0).
    epsilon : float
        Covertness level, strictly inside (0, 1/2) for covertness work.
    p_m : float
        Maximum average jamming power (> 0).
    rate : float
        Alice's transmission rate R in bits per channel use (>= 0).
    """

    p_a: float
    p_min: float
    p_max: float
    p_j: float
    sigma_w2: float = 1.0
    sigma_b2: float = 1.0
    epsilon: float = 0.1
    p_m: float = 1.0
    rate: float = 0.0

    @property
    def p_l(self) -> float:
        """Width of the jamming power support, P_max - P_min."""
        return self.p_max - self.p_min

    @property
    def q_j(self) -> float:
        """Probability that the jammer stays silent."""
        return 1.0 - self.p_j

    def replace(self, **changes: float) -> "SystemParams":
        return dataclasses.replace(self, **changes)


def validate(params: SystemParams, *, check_epsilon: bool = True) -> SystemParams:
    """Check every SystemParams invariant.

    Parameters
    ----------
    params : SystemParams
        Parameters to check.
    check_epsilon : bool
        Whether to require ``epsilon`` in (0, 1/2). Detection formulas do
        not involve epsilon and pass False.

    Returns
    -------
    SystemParams
        ``params`` unchanged.

    Raises
    ------
    InvalidParameterError
        Naming the first violated invariant.
    """
    for field in dataclasses.fields(params):
        value = getattr(params, field.name)
        if not math.isfinite(value):
            raise InvalidParameterError("finite", f"{field.name}={value!r}")

    checks = (
        (params.p_a > 0, "p_a>0", f"p_a={params.p_a}"),
        (params.p_min >= 0, "p_min>=0", f"p_min={params.p_min}"),
        (
            params.p_max > params.p_min,
            "p_max>p_min",
            f"p_min={params.p_min}, p_max={params.p_max}",
        ),
        (0.0 <= params.p_j <= 1.0, "p_j in [0,1]", f"p_j={params.p_j}"),
        (params.sigma_w2 > 0, "sigma_w2>0", f"sigma_w2={params.sigma_w2}"),
        (params.sigma_b2 > 0, "sigma_b2>0", f"sigma_b2={params.sigma_b2}"),
        (params.p_m > 0, "p_m>0", f"p_m={params.p_m}"),
        (params.rate >= 0, "rate>=0", f"rate={params.rate}"),
    )
    for holds, invariant, details in checks:
        if not holds:
            raise InvalidParameterError(invariant, details)

    if check_epsilon:
        validate_epsilon(params.epsilon)

    return params


def validate_epsilon(epsilon: float) -> float:
    """Require a covertness level strictly inside (0, 1/2)."""
    if not (math.isfinite(epsilon) and 0.0 < epsilon < 0.5):
        raise InvalidParameterError("epsilon range", f"epsilon={epsilon!r} not in (0, 1/2)")
    return epsilon
