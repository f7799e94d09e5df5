"""Exact equivariant syzygies of the quadratic Veronese embedding.

Closed-form Betti tables of the modules ⊕_m Sym^{2m+a}V* over Sym(Sym²V*),
with every number independently checkable against explicit Koszul-complex
ranks over exact arithmetic.
"""

__version__ = "0.1.0"

from .betti import (
    BettiEntry,
    BettiTable,
    betti_table,
    cube_multiplicity,
    hilbert_check,
    np_index,
    sheaf_resolution_report,
    syzygy_component,
    wps_betti,
)
from .characters import (
    Character,
    SchurDecomposition,
    decompose_character,
    ext_sym2_decomposition,
    exterior_power_character,
    kostka,
    multiplicity_free,
    pieri_row,
    schur_character,
    schur_dimension,
    tensor_decompose,
)
from .partitions import (
    c_set,
    conjugate,
    diagonal_length,
    enumerate_nested_hooks,
    enumerate_partitions,
    enumerate_symmetric,
    frobenius_hooks,
    from_hooks,
    is_symmetric,
)

__all__ = [
    "__version__",
    "BettiEntry", "BettiTable", "betti_table", "cube_multiplicity",
    "hilbert_check", "np_index", "sheaf_resolution_report",
    "syzygy_component", "wps_betti",
    "Character", "SchurDecomposition", "decompose_character",
    "ext_sym2_decomposition", "exterior_power_character", "kostka",
    "multiplicity_free", "pieri_row", "schur_character", "schur_dimension",
    "tensor_decompose",
    "c_set", "conjugate", "diagonal_length", "enumerate_nested_hooks",
    "enumerate_partitions", "enumerate_symmetric", "frobenius_hooks",
    "from_hooks", "is_symmetric",
]
