"""Exceptions shared across the package."""


class G2KitError(Exception):
    """Base class for package errors."""


class InternalConsistencyError(G2KitError):
    """A construction produced data that violates its own postconditions.

    Raised e.g. when a tensor extraction leaves a nonzero imaginary residue,
    or when neither sign choice satisfies a required bracket relation.
    """


class FormatError(G2KitError):
    """A serialized matrix or tensor file is malformed."""

    def __init__(self, message, line=None, field=None):
        parts = [message]
        if line is not None:
            parts.append("line %d" % line)
        if field is not None:
            parts.append("field %r" % (field,))
        super().__init__(": ".join(parts))
        self.line = line
        self.field = field
