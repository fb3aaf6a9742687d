"""
Error types for drgq.

Every error carries a stable ``code`` that the CLI prints as
``error[<code>]: <message>`` and an ``exit_code`` (1 domain failure, 2 usage).
"""

from typing import Optional


class DrgqError(Exception):
    """Base class for all drgq errors."""

    code = "drgq_error"
    exit_code = 1

    def __init__(self, message: str, code: Optional[str] = None):
        super().__init__(message)
        if code is not None:
            self.code = code

    def __str__(self) -> str:
        return self.args[0] if self.args else self.code


# Usage errors (exit 2)

class UsageError(DrgqError):
    code = "usage"
    exit_code = 2


class ConfigError(UsageError):
    code = "config"


class RationalParseError(UsageError, ValueError):
    code = "rational_parse"


# Domain errors (exit 1)

class InvalidIntersectionArray(DrgqError, ValueError):
    code = "invalid_intersection_array"


class InvalidClassicalParameters(DrgqError, ValueError):
    code = "invalid_classical_parameters"


class NonIntegralCount(InvalidIntersectionArray):
    code = "non_integral_count"


class NonIntegralMultiplicity(InvalidIntersectionArray):
    code = "non_integral_multiplicity"


class ZeroQ(DrgqError, ValueError):
    code = "zero_q"


class ThetaEqualsValency(DrgqError, ValueError):
    code = "theta_equals_valency"


class CertificateFailure(DrgqError):
    code = "certificate_failure"

    def __init__(self, clause: str, message: Optional[str] = None):
        super().__init__(message or f"certificate clause failed: {clause}")
        self.clause = clause


class InvalidFamilyParameters(DrgqError, ValueError):
    code = "invalid_family_parameters"


class Disconnected(DrgqError, ValueError):
    code = "disconnected"


class OrderLimitExceeded(DrgqError):
    code = "order_limit_exceeded"


class SizeLimitExceeded(DrgqError):
    code = "size_limit_exceeded"


class NotConstantRowSum(DrgqError, ValueError):
    code = "not_constant_row_sum"


class NotOnePositive(DrgqError, ValueError):
    code = "not_one_positive"


class PreconditionNotMet(DrgqError, ValueError):
    code = "precondition_not_met"


class WitnessFailure(CertificateFailure):
    code = "witness_failure"
