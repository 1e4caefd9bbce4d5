"""Exception hierarchy and enumeration budgets."""

import os


class NCError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(NCError, ValueError):
    """Bad input: mismatched groups, out-of-range indices, invalid words."""


class ResourceError(NCError, RuntimeError):
    """An enumeration would exceed its configured budget."""


class IntegrityError(NCError, RuntimeError):
    """A structural property that must hold did not; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def budget(default):
    """Return the enumeration cap, honouring the ``NC_BUDGET`` override."""
    env = os.environ.get("NC_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"NC_BUDGET must be an integer, got {env!r}") from None
    return default
