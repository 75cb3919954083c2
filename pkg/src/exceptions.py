# src/exceptions.py
"""
Custom exception classes for the application.

Provides structured error handling with specific exception types
for parameter validation, run configuration, infeasible designs
and oracle failures.
"""


class CovertJamError(Exception):
    """Base exception for all application errors."""

    def __init__(self, message: str, details: str | None = None):
        self.message = message
        self.details = details
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.details:
            return f"{self.message}: {self.details}"
        return self.message


# Domain Exceptions
class InvalidParameterError(CovertJamError):
    """A parameter invariant does not hold."""

    def __init__(self, invariant: str, details: str | None = None):
        self.invariant = invariant
        super().__init__(f"InvalidParameter({invariant})", details)


# Run Configuration Exceptions
class ConfigError(CovertJamError):
    """Base exception for run configuration errors."""

    pass


class MissingKeyError(ConfigError):
    """A required configuration key is absent."""

    def __init__(self, key: str):
        self.key = key
        super().__init__(f"Missing required key: {key}")


class MalformedValueError(ConfigError):
    """A configuration value cannot be parsed."""

    def __init__(self, key: str, value: str, details: str | None = None):
        self.key = key
        self.value = value
        super().__init__(f"Malformed value for '{key}': {value!r}", details)


# Design Exceptions
class InfeasibleDesignError(CovertJamError):
    """An optimization view has no feasible design."""

    def __init__(self, conditions: tuple[str, ...], details: str | None = None):
        self.conditions = conditions
        super().__init__(f"Infeasible({', '.join(conditions)})", details)


# Oracle Exceptions
class OracleError(CovertJamError):
    """A brute-force oracle found no feasible grid point."""

    pass
