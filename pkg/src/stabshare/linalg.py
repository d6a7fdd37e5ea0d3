"""Exact subspace algebra over a FieldSpec.

A Subspace is stored as its reduced row-echelon basis, so subspace equality
is plain tuple equality and every derived object is canonical.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator

from .errors import DimensionMismatch, NotASubspace, TooLarge
from .fields import FieldSpec


def rref(field: FieldSpec, rows: Iterable[Iterable[int]], ambient_dim: int):
    """Reduced row echelon form; returns (rows, pivots), zero rows dropped."""
    work = [list(r) for r in rows]
    for r in work:
        if len(r) != ambient_dim:
            raise DimensionMismatch(
                f"row length {len(r)} != ambient dimension {ambient_dim}"
            )
        for x in r:
            field.check_element(x)
    pivots: list[int] = []
    row = 0
    for col in range(ambient_dim):
        piv = next((r for r in range(row, len(work)) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        inv_lead = field.inv(work[row][col])
        work[row] = [field.mul(inv_lead, x) for x in work[row]]
        for r in range(len(work)):
            if r != row and work[r][col] != 0:
                f = work[r][col]
                work[r] = [
                    field.sub(a, field.mul(f, b)) for a, b in zip(work[r], work[row])
                ]
        pivots.append(col)
        row += 1
        if row == len(work):
            break
    return tuple(tuple(r) for r in work[:row]), tuple(pivots)


class Subspace:
    """A linear subspace of F_q^m held as a canonical RREF basis."""

    __slots__ = ("field", "ambient_dim", "rows", "pivots")

    def __init__(self, field: FieldSpec, ambient_dim: int, rows: Iterable[Iterable[int]] = ()):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows, self.pivots = rref(field, rows, ambient_dim)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim)

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        rows = [
            [int(i == j) for j in range(ambient_dim)] for i in range(ambient_dim)
        ]
        return cls(field, ambient_dim, rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, q={self.field.q})"

    # -- membership ---------------------------------------------------------

    def reduce(self, v: Iterable[int]) -> tuple[int, ...]:
        """Residue of v after elimination against the basis; zero iff v is a member."""
        v = list(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector length {len(v)} != ambient dimension {self.ambient_dim}"
            )
        f = self.field
        for row, piv in zip(self.rows, self.pivots):
            if v[piv] != 0:
                c = v[piv]
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, v: Iterable[int]) -> bool:
        return not any(self.reduce(v))

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    # -- enumeration ----------------------------------------------------------

    def num_vectors(self) -> int:
        return self.field.q**self.dim

    def vectors(self, cap: int = 1 << 20) -> Iterator[tuple[int, ...]]:
        """All member vectors; raises TooLarge above cap."""
        if self.num_vectors() > cap:
            raise TooLarge(
                f"enumerating q^dim = {self.num_vectors()} vectors exceeds cap {cap}"
            )
        f = self.field
        for coeffs in product(f.elements(), repeat=self.dim):
            v = [0] * self.ambient_dim
            for c, row in zip(coeffs, self.rows):
                if c:
                    v = [f.add(a, f.mul(c, b)) for a, b in zip(v, row)]
            yield tuple(v)

    def sorted_vectors(self, cap: int = 1 << 20) -> list[tuple[int, ...]]:
        return sorted(self.vectors(cap))


def space_sum(s: Subspace, t: Subspace) -> Subspace:
    _check_compatible(s, t)
    return Subspace(s.field, s.ambient_dim, s.rows + t.rows)


def nullspace(field: FieldSpec, rows: Iterable[Iterable[int]], ambient_dim: int) -> Subspace:
    """Right kernel {x : R x = 0} of the row list, as a canonical Subspace."""
    reduced, pivots = rref(field, rows, ambient_dim)
    free = [c for c in range(ambient_dim) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ambient_dim
        v[fc] = 1
        for row, piv in zip(reduced, pivots):
            v[piv] = field.neg(row[fc])
        basis.append(v)
    return Subspace(field, ambient_dim, basis)


def euclidean_dual(s: Subspace) -> Subspace:
    """Orthogonal space under the standard Euclidean inner product."""
    return nullspace(s.field, s.rows, s.ambient_dim)


def intersect(s: Subspace, t: Subspace) -> Subspace:
    _check_compatible(s, t)
    constraints = euclidean_dual(s).rows + euclidean_dual(t).rows
    return nullspace(s.field, constraints, s.ambient_dim)


def quotient_dim(s: Subspace, t: Subspace) -> int:
    """dim(s / t); requires t to be contained in s."""
    _check_compatible(s, t)
    if not t.is_subspace_of(s):
        raise NotASubspace("quotient requires the second space inside the first")
    return s.dim - t.dim


def restrict_to_zero_columns(s: Subspace, zero_cols: Iterable[int]) -> Subspace:
    """Members of s whose listed coordinates all vanish."""
    zero_cols = sorted(set(zero_cols))
    if not zero_cols:
        return s
    f = s.field
    # Coefficient vectors c with (c . basis) zero on the columns: the left
    # kernel of the basis restricted to those columns.
    cols_matrix = [[row[c] for row in s.rows] for c in zero_cols]
    coeff_space = nullspace(f, cols_matrix, s.dim)
    new_rows = []
    for coeffs in coeff_space.rows:
        v = [0] * s.ambient_dim
        for c, row in zip(coeffs, s.rows):
            if c:
                v = [f.add(a, f.mul(c, b)) for a, b in zip(v, row)]
        new_rows.append(v)
    return Subspace(f, s.ambient_dim, new_rows)


def project_columns(s: Subspace, keep_cols: list[int]) -> Subspace:
    """Image of s under the coordinate projection onto keep_cols (in order)."""
    rows = [[row[c] for c in keep_cols] for row in s.rows]
    return Subspace(s.field, len(keep_cols), rows)


def _check_compatible(s: Subspace, t: Subspace) -> None:
    if s.field != t.field:
        raise DimensionMismatch("subspaces live over different fields")
    if s.ambient_dim != t.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {s.ambient_dim} != {t.ambient_dim}"
        )
