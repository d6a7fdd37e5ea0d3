"""Vectors and subspaces of F_q^(2n) under the standard symplectic form.

A length-2n vector v is laid out as (a | b) with a = v[:n], b = v[n:];
coordinate pair i of a share vector is (a_i, b_i).  Participants are
1-based in every public API and 0-based internally.

All operations are pure functions of immutable values and safe to call
concurrently.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, NotSelfOrthogonal, TooLarge, ValidationError
from .fields import FieldSpec, descend_vector
from .linalg import Subspace, nullspace

COMPLETION_CAP = 1 << 20


def split(v: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if len(v) % 2 != 0:
        raise DimensionMismatch(f"symplectic vector length {len(v)} is odd")
    n = len(v) // 2
    return tuple(v[:n]), tuple(v[n:])


def swt(v: Sequence[int]) -> int:
    """Symplectic weight: number of coordinate pairs (a_i, b_i) != (0, 0)."""
    a, b = split(v)
    return sum(1 for x, y in zip(a, b) if x or y)


def symp_inner(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    """<(a|b), (a'|b')> = <a, b'> - <a', b> with Euclidean inner products."""
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths differ: {len(u)} != {len(v)}")
    ua, ub = split(u)
    va, vb = split(v)
    acc = 0
    for x, y in zip(ua, vb):
        acc = field.add(acc, field.mul(x, y))
    for x, y in zip(va, ub):
        acc = field.sub(acc, field.mul(x, y))
    return acc


def symp_dual(s: Subspace) -> Subspace:
    """Orthogonal space under the symplectic form."""
    if s.ambient_dim % 2 != 0:
        raise DimensionMismatch("symplectic dual needs an even ambient dimension")
    n = s.ambient_dim // 2
    f = s.field
    # <v, (a|b)> = (b | -a) . v, so the dual is a Euclidean kernel.
    constraints = [list(r[n:]) + [f.neg(x) for x in r[:n]] for r in s.rows]
    return nullspace(f, constraints, s.ambient_dim)


def is_self_orthogonal(s: Subspace) -> bool:
    rows = s.rows
    return all(
        symp_inner(s.field, rows[i], rows[j]) == 0
        for i in range(len(rows))
        for j in range(i + 1, len(rows))
    )


# ---------------------------------------------------------------------------
# Share subsets
# ---------------------------------------------------------------------------


def normalize_subset(n: int, members: Iterable[int]) -> tuple[int, ...]:
    """Validate and sort a 1-based participant subset."""
    out = sorted(set(int(i) for i in members))
    if out and (out[0] < 1 or out[-1] > n):
        raise ValidationError(f"subset members must lie in 1..{n}: {out}")
    return tuple(out)


def complement(n: int, subset: Sequence[int]) -> tuple[int, ...]:
    inside = set(subset)
    return tuple(i for i in range(1, n + 1) if i not in inside)


def all_subsets(n: int, cap: int = 1 << 24) -> Iterator[tuple[int, ...]]:
    """Every subset of {1..n} in (cardinality, lexicographic) order."""
    if 1 << n > cap:
        raise TooLarge(f"2^{n} subsets exceed cap {cap}")
    for size in range(n + 1):
        yield from combinations(range(1, n + 1), size)


def restrict_support(s: Subspace, subset: Sequence[int]) -> Subspace:
    """s intersected with the coordinate subspace supported on the share subset."""
    n = s.ambient_dim // 2
    keep = set(subset)
    zero_cols = [i - 1 for i in range(1, n + 1) if i not in keep]
    zero_cols += [n + i - 1 for i in range(1, n + 1) if i not in keep]
    from .linalg import restrict_to_zero_columns

    return restrict_to_zero_columns(s, zero_cols)


def project_vector(v: Sequence[int], subset: Sequence[int]) -> tuple[int, ...]:
    """(a_i | b_i) for i in the subset, as a length-2|A| vector."""
    a, b = split(v)
    return tuple(a[i - 1] for i in subset) + tuple(b[i - 1] for i in subset)


def project_space(s: Subspace, subset: Sequence[int]) -> Subspace:
    n = s.ambient_dim // 2
    cols = [i - 1 for i in subset] + [n + i - 1 for i in subset]
    from .linalg import project_columns

    return project_columns(s, cols)


# ---------------------------------------------------------------------------
# Lagrangian completion
# ---------------------------------------------------------------------------


def complete_to_lagrangian(c: Subspace, cap: int = COMPLETION_CAP) -> Subspace:
    """Extend a self-orthogonal space to a maximal self-dual one.

    Deterministic greedy: at each step, adjoin the smallest vector (in
    coordinate-tuple order) of the current dual that is not already in the
    space.  Every vector is symplectically self-orthogonal, so any such
    choice preserves self-orthogonality.
    """
    if not is_self_orthogonal(c):
        raise NotSelfOrthogonal("space is not symplectically self-orthogonal")
    n = c.ambient_dim // 2
    current = c
    while current.dim < n:
        dual = symp_dual(current)
        candidate = min(
            v for v in dual.sorted_vectors(cap) if not current.contains(v)
        )
        current = Subspace(c.field, c.ambient_dim, current.rows + (candidate,))
    return current


def descend_space(s: Subspace) -> Subspace:
    """Image of an F_q subspace of F_q^(2n) in F_p^(2*mu*n) under field descent.

    Each F_q basis vector scaled by each polynomial-basis element descends to
    one F_p basis vector; the result has F_p dimension mu * dim.
    """
    spec = s.field
    if spec.mu == 1:
        return s
    prime = spec.prime_subfield()
    n = s.ambient_dim // 2
    rows = []
    for r in s.rows:
        for g in spec.basis_elements():
            scaled = [spec.mul(g, x) for x in r]
            rows.append(descend_vector(spec, scaled))
    return Subspace(prime, 2 * spec.mu * n, rows)


def descended_subset(mu: int, subset: Sequence[int]) -> tuple[int, ...]:
    """Map original share indices to the mu-qudit block indices after descent."""
    out = []
    for i in subset:
        out.extend(range((i - 1) * mu + 1, i * mu + 1))
    return tuple(out)
