"""Rich-club ordering and dyadic-effect analysis for undirected simple graphs."""

from .dyadic import (
    DyadBounds,
    DyadExpectation,
    dyad_bounds,
    dyadicity,
    expected_dyads,
    heterophilicity,
    ub_m10,
    ub_m10_basic,
    ub_m11,
    ub_m11_basic,
)
from .ensemble import (
    EnsembleConfig,
    EnsembleTables,
    NormalizedPoint,
    Rewirer,
    double_edge_swap,
    generate_ensemble,
    normalized_profile,
    randomize,
    rho,
    rho_bar,
)
from .errors import RichClubError
from .graph import (
    Characteristic,
    DegreeSequence,
    DyadCounts,
    Graph,
    characteristic_from_threshold,
    characteristic_top_n,
    count_dyads,
    degree_sequence,
    density,
    is_graphic,
    load_edge_list,
    read_edge_list,
)
from .metrics import (
    RichClubPoint,
    RichClubProfile,
    default_k_grid,
    delta_k,
    phi,
    phi_bar,
    phi_new,
    profile,
)

__version__ = "0.1.0"

__all__ = [
    "Characteristic",
    "DegreeSequence",
    "DyadBounds",
    "DyadCounts",
    "DyadExpectation",
    "EnsembleConfig",
    "EnsembleTables",
    "Graph",
    "NormalizedPoint",
    "Rewirer",
    "RichClubError",
    "RichClubPoint",
    "RichClubProfile",
    "characteristic_from_threshold",
    "characteristic_top_n",
    "count_dyads",
    "default_k_grid",
    "degree_sequence",
    "delta_k",
    "density",
    "double_edge_swap",
    "dyad_bounds",
    "dyadicity",
    "expected_dyads",
    "generate_ensemble",
    "heterophilicity",
    "is_graphic",
    "load_edge_list",
    "normalized_profile",
    "phi",
    "phi_bar",
    "phi_new",
    "profile",
    "randomize",
    "read_edge_list",
    "rho",
    "rho_bar",
    "ub_m10",
    "ub_m10_basic",
    "ub_m11",
    "ub_m11_basic",
    "__version__",
]
