"""Coset distances, relative weight hierarchies, and the bound checks they feed.

Two independent algorithms are kept for the symplectic coset distance and
cross-checked in the test suite: vector enumeration is trivially correct,
support search scales to larger dimensions.  Beyond their caps both fail
loudly instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import EqualSpaces, NotASubspace, OutOfRange, TooLarge
from .linalg import Subspace, restrict_to_zero_columns
from .scheme import Scheme, Status, classify, exact_thresholds
from .symplectic import all_subsets, restrict_support, swt

VECTOR_CAP = 1 << 20
SUBSET_CAP = 1 << 24


@dataclass(frozen=True)
class DistanceProfile:
    """Distance data of a scheme; index i-1 holds the i-th relative weight."""

    privacy_distance: int
    reconstruction_distance: int
    privacy_weights: tuple[int, ...]
    reconstruction_weights: tuple[int, ...]


def _check_nested_proper(v1: Subspace, v2: Subspace) -> None:
    if not v2.is_subspace_of(v1):
        raise NotASubspace("second space must be contained in the first")
    if v1.dim == v2.dim:
        raise EqualSpaces("spaces are equal; the coset distance is undefined")


def coset_distance_by_enumeration(
    v1: Subspace, v2: Subspace, cap: int = VECTOR_CAP
) -> int:
    """Minimum symplectic weight over v1 minus v2, by enumerating v1."""
    _check_nested_proper(v1, v2)
    best = None
    for v in v1.vectors(cap):
        if v2.contains(v):
            continue
        w = swt(v)
        if best is None or w < best:
            best = w
            if best == 1:
                break
    return best


def coset_distance_by_support(v1: Subspace, v2: Subspace, cap: int = SUBSET_CAP) -> int:
    """Smallest support size on which v1 exceeds v2; equals the coset distance."""
    _check_nested_proper(v1, v2)
    return rgsw(v1, v2, 1, cap)


def coset_distance(v1: Subspace, v2: Subspace, method: str = "auto") -> int:
    if method == "enumeration":
        return coset_distance_by_enumeration(v1, v2)
    if method == "support":
        return coset_distance_by_support(v1, v2)
    if v1.num_vectors() <= VECTOR_CAP:
        return coset_distance_by_enumeration(v1, v2)
    return coset_distance_by_support(v1, v2)


def rgsw(v1: Subspace, v2: Subspace, i: int, cap: int = SUBSET_CAP) -> int:
    """i-th relative generalized symplectic weight of the pair.

    Smallest share-subset size on which the support-restricted dimension gap
    reaches i.  Subsets are scanned in (cardinality, lexicographic) order so
    the first hit is minimal.
    """
    if not v2.is_subspace_of(v1):
        raise NotASubspace("second space must be contained in the first")
    if not 1 <= i <= v1.dim - v2.dim:
        raise OutOfRange(f"index i = {i} outside 1..{v1.dim - v2.dim}")
    n = v1.ambient_dim // 2
    for subset in all_subsets(n, cap):
        if not subset:
            continue
        gap = restrict_support(v1, subset).dim - restrict_support(v2, subset).dim
        if gap >= i:
            return len(subset)
    raise AssertionError("full support must reach the dimension gap")


# ---------------------------------------------------------------------------
# Hamming-side weights (single-coordinate supports in F_q^n)
# ---------------------------------------------------------------------------


def coordinate_restrict(s: Subspace, subset) -> Subspace:
    """s intersected with the vectors supported on the given 1-based coordinates."""
    keep = set(subset)
    zero_cols = [c for c in range(s.ambient_dim) if c + 1 not in keep]
    return restrict_to_zero_columns(s, zero_cols)


def hamming_rghw(
    v1: Subspace, v2: Subspace | None = None, j: int = 1, cap: int = SUBSET_CAP
) -> int:
    """j-th (relative) generalized Hamming weight; v2 = None means the zero space."""
    if v2 is None:
        v2 = Subspace.zero(v1.field, v1.ambient_dim)
    if not v2.is_subspace_of(v1):
        raise NotASubspace("second space must be contained in the first")
    if not 1 <= j <= v1.dim - v2.dim:
        raise OutOfRange(f"index j = {j} outside 1..{v1.dim - v2.dim}")
    n = v1.ambient_dim
    if 1 << n > cap:
        raise TooLarge(f"2^{n} coordinate subsets exceed cap {cap}")
    for size in range(1, n + 1):
        for subset in combinations(range(1, n + 1), size):
            gap = coordinate_restrict(v1, subset).dim - coordinate_restrict(v2, subset).dim
            if gap >= j:
                return size
    raise AssertionError("full support must reach the dimension gap")


def hamming_coset_distance(v1: Subspace, v2: Subspace) -> int:
    _check_nested_proper(v1, v2)
    return hamming_rghw(v1, v2, 1)


# ---------------------------------------------------------------------------
# Scheme-level profiles and theorem checks
# ---------------------------------------------------------------------------


def distance_profile(s: Scheme, max_i: int | None = None) -> DistanceProfile:
    """Coset distances and relative weights of both nested pairs of a scheme."""
    if s.degenerate:
        raise EqualSpaces("degenerate scheme (k = 0) has no distance profile")
    upto = s.k if max_i is None else max(1, min(max_i, s.k))
    privacy = [rgsw(s.lagrangian, s.stabilizer, i) for i in range(1, upto + 1)]
    recon = [rgsw(s.normalizer, s.lagrangian, i) for i in range(1, upto + 1)]
    return DistanceProfile(
        privacy_distance=privacy[0],
        reconstruction_distance=recon[0],
        privacy_weights=tuple(privacy),
        reconstruction_weights=tuple(recon),
    )


def check_distance_classification_bounds(s: Scheme, cap: int = SUBSET_CAP) -> dict:
    """Sufficient conditions from the coset distances.

    Every subset of size at most privacy_distance - 1 must be forbidden and
    every subset of size at least n - reconstruction_distance + 1 must be
    qualified.  A counterexample signals an implementation bug.
    """
    dt = coset_distance(s.lagrangian, s.stabilizer)
    dr = coset_distance(s.normalizer, s.lagrangian)
    forbidden_up_to = dt - 1
    qualified_from = s.n - dr + 1
    counterexample = None
    for subset in all_subsets(s.n, cap):
        status = classify(s, subset).status
        if len(subset) <= forbidden_up_to and status is not Status.FORBIDDEN:
            counterexample = {"subset": list(subset), "status": status.value}
            break
        if len(subset) >= qualified_from and status is not Status.QUALIFIED:
            counterexample = {"subset": list(subset), "status": status.value}
            break
    return {
        "holds": counterexample is None,
        "forbidden_up_to": forbidden_up_to,
        "qualified_from": qualified_from,
        "counterexample": counterexample,
    }


def check_threshold_weight_bounds(s: Scheme, cap: int = SUBSET_CAP) -> dict:
    """Weight-hierarchy bounds on the exact thresholds, with margins.

    t_i >= privacy_weights[i] - 1 and r_(k+1-i) <= n - reconstruction_weights[i] + 1.
    """
    t, r = exact_thresholds(s, cap)
    profile = distance_profile(s)
    privacy = []
    recon = []
    holds = True
    for i in range(1, s.k + 1):
        bound = profile.privacy_weights[i - 1] - 1
        margin = t[i - 1] - bound
        holds = holds and margin >= 0
        privacy.append({"i": i, "t": t[i - 1], "lower_bound": bound, "margin": margin})
    for i in range(1, s.k + 1):
        bound = s.n - profile.reconstruction_weights[i - 1] + 1
        actual = r[s.k - i]
        margin = bound - actual
        holds = holds and margin >= 0
        recon.append(
            {"i": i, "r_index": s.k + 1 - i, "r": actual, "upper_bound": bound, "margin": margin}
        )
    return {"holds": holds, "privacy": privacy, "reconstruction": recon}
