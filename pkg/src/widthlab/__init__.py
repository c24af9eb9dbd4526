"""widthlab: exact solvers, constructions and audits for graph layout and
decomposition width invariants on finite graphs."""

__version__ = "0.1.0"

from .errors import CapacityError, ParameterError, WidthlabError
from .graphs import Graph
from .orders import LayoutValue, LinearOrdering, PNorm

__all__ = [
    "CapacityError", "Graph", "LayoutValue", "LinearOrdering", "PNorm",
    "ParameterError", "WidthlabError", "__version__",
]
