class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size cap."""


class PartitionSyntaxError(ValueError):
    """Malformed partition text; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
