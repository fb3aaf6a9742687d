"""
Verification stages for drgq.
"""

from .base import BaseVerifier, VerificationTarget, check
from .regularity import RegularityVerifier
from .oracle_agreement import OracleAgreementVerifier
from .metric import MetricVerifier
from .classical_type import ClassicalTypeVerifier
from .rowsum import RowsumVerifier
from .local_bound import LocalBoundVerifier
from .krr import KrrVerifier

# stage name -> verifier class, in default run order
STAGES = {
    "regularity": RegularityVerifier,
    "oracle_agreement": OracleAgreementVerifier,
    "metric": MetricVerifier,
    "classical_type": ClassicalTypeVerifier,
    "rowsum": RowsumVerifier,
    "local_bound": LocalBoundVerifier,
    "krr": KrrVerifier,
}

__all__ = [
    'BaseVerifier',
    'VerificationTarget',
    'check',
    'RegularityVerifier',
    'OracleAgreementVerifier',
    'MetricVerifier',
    'ClassicalTypeVerifier',
    'RowsumVerifier',
    'LocalBoundVerifier',
    'KrrVerifier',
    'STAGES',
]
