"""Wall-crossing bookkeeping for framed sheaves on the blown-up projective plane.

Submodules: ``lattice`` (Chern classes and dimension vectors), ``walls``
(stability chambers), ``strata`` (Brill-Noether strata and the contraction
ledger), ``grassflip`` (local Grassmannian flips), ``bott`` (Borel-Weil-Bott on
Grassmannians), ``adhm`` (exact quiver linear algebra) and ``cli``.
"""

from .lattice import ChernCharacter, DimensionVector, NotRepresentableError
from .strata import ContractionKind, ContractionReport, Side, StratumReport
from .walls import StabilityParam, WallPosition

__all__ = [
    "ChernCharacter",
    "ContractionKind",
    "ContractionReport",
    "DimensionVector",
    "NotRepresentableError",
    "Side",
    "StabilityParam",
    "StratumReport",
    "WallPosition",
]
__version__ = "0.1.0"
