"""Trace-form sub-pseudo-Riemannian structures on SL(n, R).

Constructs the ordered basis of sl(n, R) and the Gram matrix of the
trace form, diagonalizes it into the X/Y/Z/H eigenfamilies, builds the
induced bracket-generating distributions with their indefinite metrics,
evaluates the associated quadratic Hamiltonians and their analytic
gradients, integrates the geodesic flow with invariant monitoring, and
carries the complete closed-form n = 2 theory as an exact oracle.
"""

from .algebra import (
    BasisLabel,
    OrderedBasis,
    SpanBuilder,
    basis_coordinates,
    bracket,
    build_basis,
    elimination_rank,
    gram_matrix,
    index_pair,
    p_matrix,
    p_matrix_inverse,
    pair_index,
    trace_form,
    unit_matrix,
)
from .distribution import (
    ConsistencyError,
    DistributionSpec,
    GeneratingSet,
    GenerationCertificate,
    RestrictedMetric,
    bracket_generation_certificate,
    generating_set,
    restricted_metric,
)
from .flow import (
    DriftReport,
    IntegratorConfig,
    Trajectory,
    integrate,
    monitor_invariants,
    trajectory_to_csv,
)
from .hamiltonian import (
    CotangentPoint,
    PhaseGradient,
    hamiltonian_from_momenta,
    hamiltonian_gradient,
    hamiltonian_value,
    momentum_x,
    momentum_y,
    momentum_z,
    poisson_bracket,
    z_hamiltonian_gradient,
    z_hamiltonian_value,
)
from .sampling import cotangent_point, group_point, point_rngs
from .sl2 import (
    FAMILIES,
    Sl2Constants,
    closed_form,
    conserved_constants,
    decoupled_rhs,
    initial_covector,
    mn_values,
    reconstruct_momenta,
)
from .spectral import EigenFamily, SpectrumReport, eigen_family, verify_spectrum

__version__ = "0.1.0"

__all__ = [
    "BasisLabel",
    "OrderedBasis",
    "SpanBuilder",
    "basis_coordinates",
    "bracket",
    "build_basis",
    "elimination_rank",
    "gram_matrix",
    "index_pair",
    "p_matrix",
    "p_matrix_inverse",
    "pair_index",
    "trace_form",
    "unit_matrix",
    "ConsistencyError",
    "DistributionSpec",
    "GeneratingSet",
    "GenerationCertificate",
    "RestrictedMetric",
    "bracket_generation_certificate",
    "generating_set",
    "restricted_metric",
    "DriftReport",
    "IntegratorConfig",
    "Trajectory",
    "integrate",
    "monitor_invariants",
    "trajectory_to_csv",
    "CotangentPoint",
    "PhaseGradient",
    "hamiltonian_from_momenta",
    "hamiltonian_gradient",
    "hamiltonian_value",
    "momentum_x",
    "momentum_y",
    "momentum_z",
    "poisson_bracket",
    "z_hamiltonian_gradient",
    "z_hamiltonian_value",
    "cotangent_point",
    "group_point",
    "point_rngs",
    "FAMILIES",
    "Sl2Constants",
    "closed_form",
    "conserved_constants",
    "decoupled_rhs",
    "initial_covector",
    "mn_values",
    "reconstruct_momenta",
    "EigenFamily",
    "SpectrumReport",
    "eigen_family",
    "verify_spectrum",
]
