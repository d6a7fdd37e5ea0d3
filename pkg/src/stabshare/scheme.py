"""Secret-sharing schemes built from symplectic self-orthogonal spaces.

A scheme is the nested triple

    stabilizer  <=  lagrangian  <=  normalizer (= symplectic dual of stabilizer)

of dimensions n-k, n, n+k inside F_q^(2n), together with k coset
representatives whose classes modulo the lagrangian index the secrets.
Classification of a share subset A reduces to two rank computations on
support-restricted bases; no quotient spaces are ever materialized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import BadLagrangian, BadReps, NotSelfOrthogonal, TooLarge
from .fields import FieldSpec, descend_vector
from .linalg import Subspace, space_sum
from .symplectic import (
    all_subsets,
    complement,
    complete_to_lagrangian,
    descend_space,
    is_self_orthogonal,
    normalize_subset,
    restrict_support,
    symp_dual,
)

SUBSET_CAP = 1 << 24
TABLE_CAP = 1 << 16
REPS_CAP = 1 << 20


class Status(str, Enum):
    QUALIFIED = "qualified"
    FORBIDDEN = "forbidden"
    INTERMEDIATE = "intermediate"


class QuantumStatus(str, Enum):
    QUALIFIED = "q_qualified"
    FORBIDDEN = "q_forbidden"
    INTERMEDIATE = "q_intermediate"


@dataclass(frozen=True)
class Classification:
    status: Status
    leaked_dim: int
    leaked_bits: float


@dataclass(frozen=True)
class Scheme:
    field: FieldSpec
    n: int
    k: int
    stabilizer: Subspace
    lagrangian: Subspace
    normalizer: Subspace
    coset_reps: tuple[tuple[int, ...], ...]
    lagrangian_source: str = "supplied"

    @property
    def degenerate(self) -> bool:
        return self.k == 0


def default_coset_reps(
    lagrangian: Subspace, normalizer: Subspace, cap: int = REPS_CAP
) -> tuple[tuple[int, ...], ...]:
    """Lexicographically-least vectors of the normalizer completing the lagrangian."""
    k = normalizer.dim - lagrangian.dim
    reps: list[tuple[int, ...]] = []
    if k == 0:
        return ()
    spanned = lagrangian
    for v in normalizer.sorted_vectors(cap):
        if not spanned.contains(v):
            reps.append(v)
            spanned = Subspace(spanned.field, spanned.ambient_dim, spanned.rows + (v,))
            if len(reps) == k:
                break
    return tuple(reps)


def build_scheme(
    stabilizer: Subspace,
    lagrangian: Subspace | None = None,
    coset_reps=None,
    *,
    cap: int = REPS_CAP,
) -> Scheme:
    """Assemble and validate a scheme from its stabilizer space.

    The lagrangian defaults to the deterministic greedy completion; note the
    completion is not unique and different choices give different access
    structures, so reports record which one was used.  Coset representatives
    default to the lexicographically-least completion of the lagrangian
    inside the normalizer.
    """
    if stabilizer.ambient_dim % 2 != 0:
        raise NotSelfOrthogonal("stabilizer must live in an even-dimensional space")
    n = stabilizer.ambient_dim // 2
    if not is_self_orthogonal(stabilizer):
        bad = _first_non_orthogonal_pair(stabilizer)
        raise NotSelfOrthogonal(
            f"stabilizer rows {bad[0] + 1} and {bad[1] + 1} have nonzero symplectic inner product"
        )
    normalizer = symp_dual(stabilizer)
    source = "supplied"
    if lagrangian is None:
        lagrangian = complete_to_lagrangian(stabilizer, cap)
        source = "greedy-completion"
    if lagrangian.dim != n or symp_dual(lagrangian) != lagrangian:
        raise BadLagrangian("lagrangian must be self-dual of dimension n")
    if not stabilizer.is_subspace_of(lagrangian):
        raise BadLagrangian("stabilizer is not contained in the lagrangian")
    k = normalizer.dim - lagrangian.dim
    if coset_reps is None:
        coset_reps = default_coset_reps(lagrangian, normalizer, cap)
    coset_reps = tuple(tuple(v) for v in coset_reps)
    if len(coset_reps) != k:
        raise BadReps(f"need exactly {k} coset representatives, got {len(coset_reps)}")
    if k:
        if not all(normalizer.contains(v) for v in coset_reps):
            raise BadReps("every representative must lie in the normalizer")
        reps_space = Subspace(stabilizer.field, stabilizer.ambient_dim, coset_reps)
        if space_sum(lagrangian, reps_space).dim != n + k:
            raise BadReps("representatives are dependent modulo the lagrangian")
    return Scheme(
        field=stabilizer.field,
        n=n,
        k=k,
        stabilizer=stabilizer,
        lagrangian=lagrangian,
        normalizer=normalizer,
        coset_reps=coset_reps,
        lagrangian_source=source,
    )


def _first_non_orthogonal_pair(s: Subspace) -> tuple[int, int]:
    from .symplectic import symp_inner

    for i in range(s.dim):
        for j in range(i + 1, s.dim):
            if symp_inner(s.field, s.rows[i], s.rows[j]) != 0:
                return i, j
    raise AssertionError("space is self-orthogonal")


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


def leaked_dim(s: Scheme, subset) -> int:
    """dim of (lagrangian cap F^A) / (stabilizer cap F^A); the number of leaked symbols."""
    subset = normalize_subset(s.n, subset)
    return (
        restrict_support(s.lagrangian, subset).dim
        - restrict_support(s.stabilizer, subset).dim
    )


def classify(s: Scheme, subset) -> Classification:
    """Qualified / forbidden / intermediate status of a share subset.

    A degenerate scheme (k = 0) shares a zero-length secret; both defining
    conditions coincide there and every subset is reported forbidden.
    """
    ell = leaked_dim(s, subset)
    if s.degenerate:
        status = Status.FORBIDDEN
    elif ell == s.k:
        status = Status.QUALIFIED
    elif ell == 0:
        status = Status.FORBIDDEN
    else:
        status = Status.INTERMEDIATE
    return Classification(status, ell, ell * math.log2(s.field.q))


def classify_quantum(s: Scheme, subset) -> QuantumStatus:
    """Access status if the same stabilizer shared a quantum secret.

    Qualified needs the normalizer and stabilizer restrictions to agree on
    the complement; forbidden needs them to agree on the subset itself.
    """
    subset = normalize_subset(s.n, subset)
    if s.degenerate:
        return QuantumStatus.FORBIDDEN
    comp = complement(s.n, subset)
    if (
        restrict_support(s.normalizer, comp).dim
        == restrict_support(s.stabilizer, comp).dim
    ):
        return QuantumStatus.QUALIFIED
    if (
        restrict_support(s.normalizer, subset).dim
        == restrict_support(s.stabilizer, subset).dim
    ):
        return QuantumStatus.FORBIDDEN
    return QuantumStatus.INTERMEDIATE


def info_bits(s: Scheme, subset) -> float:
    """Bits of secret information available to the subset: log2(q) per leaked symbol."""
    return leaked_dim(s, subset) * math.log2(s.field.q)


def count_density_classes(s: Scheme, subset) -> tuple[int, int]:
    """(number of distinct share states, secrets per state) = (q^l, q^(k-l))."""
    ell = leaked_dim(s, subset)
    return s.field.q**ell, s.field.q ** (s.k - ell)


def projection_leaked_dim(s: Scheme, subset) -> int:
    """The same leak computed from the projection side: dim P_A(normalizer) - dim P_A(lagrangian)."""
    from .symplectic import project_space

    subset = normalize_subset(s.n, subset)
    return (
        project_space(s.normalizer, subset).dim
        - project_space(s.lagrangian, subset).dim
    )


# ---------------------------------------------------------------------------
# Exhaustive profiles
# ---------------------------------------------------------------------------


def leak_by_size(s: Scheme, cap: int = SUBSET_CAP):
    """Streaming (min, max) of the leaked dimension per subset cardinality."""
    lo = [s.k] * (s.n + 1)
    hi = [0] * (s.n + 1)
    for subset in all_subsets(s.n, cap):
        ell = leaked_dim(s, subset)
        size = len(subset)
        lo[size] = min(lo[size], ell)
        hi[size] = max(hi[size], ell)
    return lo, hi


def exact_thresholds(s: Scheme, cap: int = SUBSET_CAP):
    """Exact privacy numbers t_i and reconstruction numbers r_i, i = 1..k.

    t_i is the largest t such that every subset of at most t shares learns
    fewer than i symbols; r_i is the smallest r such that every subset of at
    least r shares learns at least i symbols.  Computed by exhaustive subset
    enumeration.
    """
    if s.degenerate:
        return [], []
    lo, hi = leak_by_size(s, cap)
    prefix_max = [0] * (s.n + 1)
    suffix_min = [0] * (s.n + 1)
    running = 0
    for size in range(s.n + 1):
        running = max(running, hi[size])
        prefix_max[size] = running
    running = s.k
    for size in range(s.n, -1, -1):
        running = min(running, lo[size])
        suffix_min[size] = running
    t = []
    r = []
    for i in range(1, s.k + 1):
        t.append(max(sz for sz in range(s.n + 1) if prefix_max[sz] < i))
        r.append(min(sz for sz in range(s.n + 1) if suffix_min[sz] >= i))
    return t, r


def access_table(s: Scheme, cap: int = TABLE_CAP):
    """(subset, Classification, QuantumStatus) for every subset, ordered by (size, lex)."""
    return [
        (subset, classify(s, subset), classify_quantum(s, subset))
        for subset in all_subsets(s.n, cap)
    ]


# ---------------------------------------------------------------------------
# Field descent
# ---------------------------------------------------------------------------


def descend_scheme(s: Scheme) -> Scheme:
    """The equivalent prime-field scheme with mu shares per original share.

    Secrets map by base-p digit expansion: symbol i of the original secret
    becomes digits (i*mu .. i*mu + mu - 1) of the descended one, matching the
    ordering of the descended coset representatives.
    """
    spec = s.field
    if spec.mu == 1:
        return s
    reps = []
    for v in s.coset_reps:
        for g in spec.basis_elements():
            reps.append(descend_vector(spec, [spec.mul(g, x) for x in v]))
    return build_scheme(
        descend_space(s.stabilizer),
        descend_space(s.lagrangian),
        tuple(reps),
    )


def secret_to_prime_digits(spec: FieldSpec, secret) -> tuple[int, ...]:
    """Expand an F_q secret vector into the descended scheme's F_p secret vector."""
    out: list[int] = []
    for symbol in secret:
        out.extend(spec.digits(spec.check_element(symbol)))
    return tuple(out)
