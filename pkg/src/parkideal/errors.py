"""Exception types and resource guards."""

import os

GUARD_ENV = "PARKIDEAL_MAX_CELLS"


class InputError(ValueError):
    """Malformed or out-of-range input."""


class DomainError(ValueError):
    """Input is well formed but outside the domain where the operation is defined."""


class ResourceError(RuntimeError):
    """A combinatorial size guard was exceeded."""


def guard_limit(default):
    value = os.environ.get(GUARD_ENV)
    if value:
        try:
            return int(value)
        except ValueError:
            raise InputError(f"{GUARD_ENV} must be an integer, got {value!r}") from None
    return default


def check_guard(what, size, default):
    limit = guard_limit(default)
    if size > limit:
        raise ResourceError(
            f"{what}: work size {size} exceeds limit {limit} (override with {GUARD_ENV})"
        )
