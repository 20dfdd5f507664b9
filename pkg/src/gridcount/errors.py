"""Error types shared across the package.

Invalid arguments raise the builtin ValueError.  Requests that are
well-formed but would blow past a size or budget cap raise
ResourceLimitError so callers can tell the two apart.
"""


class ResourceLimitError(RuntimeError):
    """A computation was refused because it exceeds a configured size cap."""
