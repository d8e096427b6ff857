"""Exception hierarchy.

Every failure surfaced through the CLI carries a machine-readable category
code in {"config", "domain", "truncation", "io"}.
"""


class QillumError(Exception):
    """Base class; `code` is the machine-readable error category."""

    code = "domain"


class DomainError(QillumError):
    """Parameter outside its physical or mathematical domain."""

    code = "domain"


class PhysicalityError(QillumError):
    """A state or transform violates bosonic physicality constraints."""

    code = "domain"


class TruncationError(QillumError):
    """Fock-space truncation too small for the requested tolerance."""

    code = "truncation"


class NumericalHealthError(QillumError):
    """Spectrum or normalization degraded beyond numerical tolerances."""

    code = "truncation"


class ConfigError(QillumError):
    """Malformed run configuration."""

    code = "config"
