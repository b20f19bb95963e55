"""Exception hierarchy shared by all modules.

Everything user-facing derives from :class:`AguiarError`, so the CLI can map
any domain failure to a single exit code. ``ExactnessError`` is special: it
means an exact-arithmetic consistency assertion failed, which signals a bug
or corrupted data, never a legitimate input.
"""


class AguiarError(Exception):
    """Base class for domain errors raised by this package."""


class PartitionError(AguiarError):
    """Malformed or non-canonical partition input."""


class DegreeMismatchError(AguiarError):
    """Two objects that must live over the same symmetric group do not."""


class DegreeLimitError(AguiarError):
    """A character computation exceeds the configured degree limit."""


class ExactnessError(AguiarError):
    """An exact divisibility or bookkeeping identity failed to hold."""


class CacheError(AguiarError):
    """Character-table cache file is unreadable, truncated, or wrong version."""


class ContextError(AguiarError):
    """Bound evaluation requested at an inadmissible ambient-dimension pair."""
