"""Optimal three-weight cyclic codes over finite fields.

Exact construction of the codes with parity-check polynomial
h_{Delta*e1}(x) * h_{e2}(x) of length q^k - 1, evaluation of the
associated character sums as cyclotomic-integer count vectors,
two-sided verification of the gcd characterization of their weight
distribution, and enumeration of all qualifying codes for a given
(q, k).
"""

from .errors import (
    ConditionFailedError,
    ConsistencyError,
    CyclocharError,
    InvalidArgumentError,
    ResourceLimitError,
    TheoremViolationError,
)

__version__ = "0.1.0"

__all__ = [
    "CyclocharError",
    "InvalidArgumentError",
    "ConditionFailedError",
    "ResourceLimitError",
    "ConsistencyError",
    "TheoremViolationError",
    "__version__",
]
