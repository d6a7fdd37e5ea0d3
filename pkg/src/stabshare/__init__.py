"""Ramp secret sharing of classical secrets via quantum stabilizer codes.

Build schemes from symplectic self-orthogonal spaces (directly or through
the CSS, hermitian, and Reed-Solomon constructions), compute their exact
access structures, distance and threshold profiles, and existence bounds,
and verify every classification against a small-dimension density-matrix
oracle.
"""

from ._version import __version__
from .errors import StabshareError
from .fields import FieldSpec, descend_vector, lift_vector
from .linalg import Subspace, euclidean_dual, intersect, quotient_dim, space_sum
from .scheme import (
    Classification,
    QuantumStatus,
    Scheme,
    Status,
    build_scheme,
    classify,
    classify_quantum,
    count_density_classes,
    descend_scheme,
    exact_thresholds,
    info_bits,
    leaked_dim,
)
from .symplectic import (
    complete_to_lagrangian,
    descend_space,
    restrict_support,
    swt,
    symp_dual,
    symp_inner,
)
from .weights import DistanceProfile, coset_distance, distance_profile, hamming_rghw, rgsw

__all__ = [
    "__version__",
    "StabshareError",
    "FieldSpec",
    "Subspace",
    "Scheme",
    "Status",
    "QuantumStatus",
    "Classification",
    "DistanceProfile",
    "build_scheme",
    "classify",
    "classify_quantum",
    "count_density_classes",
    "descend_scheme",
    "descend_space",
    "descend_vector",
    "lift_vector",
    "exact_thresholds",
    "info_bits",
    "leaked_dim",
    "complete_to_lagrangian",
    "restrict_support",
    "swt",
    "symp_dual",
    "symp_inner",
    "euclidean_dual",
    "intersect",
    "quotient_dim",
    "space_sum",
    "coset_distance",
    "distance_profile",
    "rgsw",
    "hamming_rghw",
]
