"""Exception types shared across the library."""


class RodbellError(Exception):
    """Base class for all library errors."""


class EmptyRegionList(RodbellError):
    """overlap_volume was called with no regions."""


class MissingMonteCarloParams(RodbellError):
    """A non-analytic overlap needs Monte Carlo parameters (samples, seed)."""


class DeltaKernelHasNoDensity(RodbellError):
    """The delta-limit kernel has no pointwise density."""


class ClosedFormUnavailable(RodbellError):
    """A deterministic evaluation path was requested for unsupported geometry."""


class NonPositiveEffort(RodbellError):
    """Sample or node counts must be positive."""


class InternalInconsistency(RodbellError):
    """Two algebraically equivalent evaluation routes disagreed beyond tolerance."""


class ConfigError(RodbellError):
    """A run configuration failed to parse or validate."""
