"""g2kit: exact construction and verification toolkit for the 7x7
representations of so(7) and its exceptional subalgebra, the invariant
tensors of their product laws, and the associated Casimir machinery.

Everything is computed over the exact field Q(sqrt2, sqrt3, sqrt7); every
verification is a zero-tolerance equality.
"""

from .errors import FormatError, G2KitError, InternalConsistencyError

__all__ = [
    "FormatError",
    "G2KitError",
    "InternalConsistencyError",
    "__version__",
]

__version__ = "0.1.0"
