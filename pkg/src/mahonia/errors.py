"""Exceptions and enumeration guards."""

import os


class DomainError(ValueError):
    """Arguments outside the range where an operation is defined."""


class ResourceGuardError(RuntimeError):
    """An enumeration would exceed its size budget."""


GUARD_ENV = "MAHONIA_MAX_BRUTE"


def check_budget(what, size, default_limit):
    """Raise ResourceGuardError if ``size`` objects exceed the budget.

    ``MAHONIA_MAX_BRUTE`` (test-only) replaces every default limit with a
    single object-count budget.
    """
    override = os.environ.get(GUARD_ENV)
    limit = int(override) if override else default_limit
    if size > limit:
        raise ResourceGuardError(
            f"{what}: enumeration of {size} objects exceeds limit {limit}"
            f" (set {GUARD_ENV} to override)"
        )
