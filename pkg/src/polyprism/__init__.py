"""Strong prisms of linear polyomino chains: construction, spectral and
resistance invariants, and exact verification of their closed forms."""

from .errors import (
    ConsistencyError,
    DisconnectedGraphError,
    InvalidParameterError,
    NumericFailureError,
    PatternRegimeWarning,
    RankAnomalyError,
    StructureError,
)
from .exact import (
    QuadSurd,
    Rational,
    RationalMatrix,
    bareiss_det,
    even_coeffs,
    even_minors,
    fraction_to_decimal,
    odd_coeff,
    odd_det,
    odd_minors,
)
from .formulas import (
    degree_kirchhoff_assembled,
    degree_kirchhoff_closed,
    gutman_closed,
    pattern_regime,
    ratio_series,
    spanning_trees_closed,
    sum_inv_even,
    sum_inv_odd,
)
from .graphs import (
    Graph,
    linear_polyomino,
    standard_graph,
    strong_prism,
    strong_prism_polyomino,
    strong_product,
    to_dot,
    to_json,
    twin_pairing,
)
from .invariants import (
    DistanceMatrix,
    InvariantReport,
    ResistanceMatrix,
    degree_kirchhoff_index,
    distance_matrix,
    gutman,
    invariant_report,
    kirchhoff_index,
    resistance_matrix,
    spanning_trees,
    wiener,
)
from .spectral import (
    Spectrum,
    SymMatrix,
    fold_blocks,
    laplacian,
    normalized_laplacian,
    pseudoinverse_psd,
    split_blocks,
    sym_eigenvalues,
)

__version__ = "0.1.0"
