class WidthlabError(Exception):
    """Base class for all package errors."""


class ParameterError(WidthlabError):
    """Invalid input: bad family parameters, malformed files, broken certificates."""


class CapacityError(WidthlabError):
    """Instance exceeds the declared exact-solver capacity."""
