"""Exception hierarchy shared by every module."""

import os

DEFAULT_RESOURCE_CAP = 10**6


class SemigrassError(Exception):
    pass


class CoordinateError(SemigrassError, ValueError):
    """A cell or variable lies outside the poset / variable range."""


class PartitionError(SemigrassError, ValueError):
    pass


class MembershipError(SemigrassError, ValueError):
    """A lattice point is not an integer point of the requested dilation."""


class InvariantViolation(SemigrassError, AssertionError):
    """A property guaranteed by theory failed. Must never fire."""


class DomainError(SemigrassError, ValueError):
    pass


class ResourceCapError(SemigrassError, RuntimeError):
    pass


def resource_cap():
    """Current enumeration cap, overridable via ``SEMIGRASS_RESOURCE_CAP``."""
    raw = os.environ.get("SEMIGRASS_RESOURCE_CAP")
    if raw is None:
        return DEFAULT_RESOURCE_CAP
    return int(raw)


def check_cap(count, what="items"):
    cap = resource_cap()
    if count > cap:
        raise ResourceCapError(f"{what}: {count} exceeds resource cap {cap}")
