"""Signed graph operators, switching, and spectra."""

from .balance import (
    FrustrationResult,
    balance_certificate,
    frustration_index,
    frustration_number,
    is_antibalanced,
    is_balanced,
    line_clique_bound,
)
from .core import (
    Edge,
    GraphError,
    SignedGraph,
    TriangleCensus,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    negate,
    new_graph,
    path_graph,
    random_graph,
    regular_degree,
    star_graph,
    triangle_census,
    underlying,
    vertex_cover_number,
)
from .kernels import BACKEND
from .operators import (
    line_graph_combinatorial,
    line_graph_matrix,
    line_orientation,
    total_graph,
    total_graph_combinatorial,
)
from .orientation import (
    BindingError,
    Orientation,
    adjacency_matrix,
    eulerian_orientation,
    incidence_matrix,
    is_eulerian,
    laplacian_matrix,
    orient,
    reorient,
)
from .product import (
    cartesian_product,
    iterated_params,
    polynomial_compose,
    polynomial_spectrum,
    total_power,
)
from .spectral import (
    MainSpectrum,
    Spectrum,
    eigensystem,
    eigenvalues,
    lambda_max_bound,
    main_eigenvalues,
    spectrum,
    spectrum_interval,
    total_spectrum_formula,
)
from .switching import switch, switching_equivalent

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BindingError",
    "Edge",
    "FrustrationResult",
    "GraphError",
    "MainSpectrum",
    "Orientation",
    "SignedGraph",
    "Spectrum",
    "TriangleCensus",
    "adjacency_matrix",
    "balance_certificate",
    "cartesian_product",
    "complete_graph",
    "components",
    "cycle_graph",
    "disjoint_union",
    "eigensystem",
    "eigenvalues",
    "eulerian_orientation",
    "frustration_index",
    "frustration_number",
    "incidence_matrix",
    "is_antibalanced",
    "is_balanced",
    "is_eulerian",
    "iterated_params",
    "lambda_max_bound",
    "laplacian_matrix",
    "line_clique_bound",
    "line_graph_combinatorial",
    "line_graph_matrix",
    "line_orientation",
    "main_eigenvalues",
    "negate",
    "new_graph",
    "orient",
    "path_graph",
    "polynomial_compose",
    "polynomial_spectrum",
    "random_graph",
    "regular_degree",
    "reorient",
    "spectrum",
    "spectrum_interval",
    "star_graph",
    "switch",
    "switching_equivalent",
    "total_graph",
    "total_graph_combinatorial",
    "total_power",
    "total_spectrum_formula",
    "triangle_census",
    "underlying",
    "vertex_cover_number",
]
