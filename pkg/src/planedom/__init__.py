"""Split a plane multigraph into two dominating, face-hitting vertex sets.

>>> from planedom import partition, generators
>>> p = partition(generators.complete4())
>>> sorted(map(len, (p.v1, p.v2)))
[2, 2]
"""

from . import generators
from .cover import BipartiteCover, VertexPartition, cover, partition
from .errors import PlaneDomError, PreconditionError
from .formats import GraphDocument, PartitionDocument
from .oracle import verify_cover, verify_partition
from .planegraph import PlaneGraph

__version__ = "0.1.0"

__all__ = [
    "BipartiteCover",
    "GraphDocument",
    "PartitionDocument",
    "PlaneDomError",
    "PlaneGraph",
    "PreconditionError",
    "VertexPartition",
    "cover",
    "generators",
    "partition",
    "verify_cover",
    "verify_partition",
]
