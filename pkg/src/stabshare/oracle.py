"""Brute-force quantum verifier at small dimension.

Builds the generalized Pauli operators, the joint +1 eigenvector of a
lagrangian's stabilizer group, the encoded states of every secret, and the
reduced density matrix held by each share subset; classifies subsets
directly from the density matrices as ground truth for the algebraic
classifiers.

Conventions are pinned operationally, not by transcription: the shift part
acts as |u> -> |u + a>, the phase part as |u> -> w^(-<b, u>) |u> with
w = exp(2 pi i / p), which is exactly the sign making

    op(u) op(v) = w^(<u, v>_s) op(v) op(u)

hold for the symplectic form used everywhere else.  For p = 2 a generator
with odd <a, b> squares to -I; scaling it by i^<a, b> restores order 2 and,
because the scaled generators still commute and multiply into nonidentity
Paulis, the joint +1 eigenspace has dimension exactly 1.  The adjustment is
recorded per generator and does not affect any access-structure decision.

Schemes over extension fields must be descended to the prime field first;
partial traces over whole F_q shares equal partial traces over the
corresponding mu-qudit blocks, so classifications transfer verbatim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import EmptyEigenspace, NotPrimeField, TooLarge
from .linalg import Subspace
from .scheme import Scheme, Status, descend_scheme
from .symplectic import descended_subset, normalize_subset, split

DIM_CAP = 4096
EQUALITY_TOL = 1e-9
ORTHOGONALITY_TOL = 1e-9


class PauliOperator:
    """Generalized Pauli X(a)Z(b) on n p-level systems.

    Stored as a phased permutation (one nonzero entry per column), which
    keeps application linear in the dimension; ``matrix`` materializes the
    dense unitary on demand.
    """

    __slots__ = ("p", "n", "perm", "phases")

    def __init__(self, p: int, n: int, perm: np.ndarray, phases: np.ndarray):
        self.p = p
        self.n = n
        self.perm = perm
        self.phases = phases

    @property
    def dim(self) -> int:
        return self.p**self.n

    def apply(self, vec: np.ndarray) -> np.ndarray:
        out = np.empty_like(vec)
        out[self.perm] = self.phases * vec
        return out

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.dim, self.dim), dtype=complex)
        m[self.perm, np.arange(self.dim)] = self.phases
        return m

    def scaled(self, factor: complex) -> "PauliOperator":
        return PauliOperator(self.p, self.n, self.perm, self.phases * factor)


def pauli_op(p: int, v, dim_cap: int = DIM_CAP) -> PauliOperator:
    """Operator for the symplectic vector v = (a|b) over the prime field F_p."""
    a, b = split(tuple(v))
    n = len(a)
    if p**n > dim_cap:
        raise TooLarge(f"p^n = {p ** n} exceeds the dimension cap {dim_cap}")
    dim = p**n
    digits = np.array(
        np.unravel_index(np.arange(dim), (p,) * n), dtype=np.int64
    )  # shape (n, dim); axis i is qudit i
    shifted = (digits + np.array(a, dtype=np.int64)[:, None]) % p
    perm = np.ravel_multi_index(tuple(shifted), (p,) * n)
    exponents = (-(np.array(b, dtype=np.int64) @ digits)) % p
    omega = np.exp(2j * np.pi / p)
    phases = omega**exponents
    return PauliOperator(p, n, perm, phases.astype(complex))


@dataclass(frozen=True)
class StabilizerState:
    vector: np.ndarray
    adjusted_generators: tuple[int, ...]  # row indices that got the i^<a,b> fix


def stabilizer_state(lagrangian: Subspace, dim_cap: int = DIM_CAP) -> StabilizerState:
    """Joint +1 eigenvector of the lagrangian's generators, global phase fixed.

    The state is extracted by running the averaging projector of every
    generator over a standard basis vector; the first nonzero amplitude is
    made real positive.
    """
    field = lagrangian.field
    if field.mu != 1:
        raise NotPrimeField("descend the space to the prime field first")
    p = field.p
    n = lagrangian.ambient_dim // 2
    if p**n > dim_cap:
        raise TooLarge(f"p^n = {p ** n} exceeds the dimension cap {dim_cap}")
    gens = []
    adjusted = []
    for idx, row in enumerate(lagrangian.rows):
        op = pauli_op(p, row, dim_cap)
        a, b = split(row)
        if p == 2 and sum(x * y for x, y in zip(a, b)) % 2 == 1:
            op = op.scaled(1j)
            adjusted.append(idx)
        gens.append(op)
    dim = p**n
    for start in range(dim):
        psi = np.zeros(dim, dtype=complex)
        psi[start] = 1.0
        for op in gens:
            acc = psi.copy()
            cur = psi
            for _ in range(p - 1):
                cur = op.apply(cur)
                acc += cur
            psi = acc / p
        norm = np.linalg.norm(psi)
        if norm > 1e-8:
            psi /= norm
            first = np.argmax(np.abs(psi) > 1e-9)
            psi *= np.conj(psi[first]) / abs(psi[first])
            return StabilizerState(psi, tuple(adjusted))
    raise EmptyEigenspace("no joint +1 eigenvector found")


def encode(s: Scheme, secret, phi: np.ndarray) -> np.ndarray:
    """Codeword of a classical secret: the secret's coset operator applied to phi."""
    field = s.field
    if field.mu != 1:
        raise NotPrimeField("descend the scheme to the prime field first")
    rep = [0] * (2 * s.n)
    for m_i, v in zip(secret, s.coset_reps):
        field.check_element(m_i)
        if m_i:
            rep = [field.add(x, field.mul(m_i, y)) for x, y in zip(rep, v)]
    psi = pauli_op(field.p, rep).apply(phi)
    return psi / np.linalg.norm(psi)


def reduced_density(psi: np.ndarray, subset, p: int, n: int) -> np.ndarray:
    """Partial trace of |psi><psi| keeping only the listed 1-based qudits."""
    subset = normalize_subset(n, subset)
    tensor = np.asarray(psi).reshape((p,) * n)
    others = [i for i in range(n) if i + 1 not in set(subset)]
    rho = np.tensordot(tensor, tensor.conj(), axes=(others, others))
    d = p ** len(subset)
    return rho.reshape(d, d)


@dataclass(frozen=True)
class DensityClassification:
    status: Status
    num_classes: int
    fiber_sizes: tuple[int, ...]
    leaked_dim: int
    holevo_bits: float
    cross_orthogonal: bool


class DensityOracle:
    """Per-scheme cache of the stabilizer state and all encoded secrets.

    Subsets are given in the original share indexing; extension-field schemes
    are descended internally and subsets mapped to their qudit blocks.
    """

    def __init__(self, s: Scheme, dim_cap: int = DIM_CAP):
        self.original = s
        self.mu = s.field.mu
        self.prime_scheme = descend_scheme(s)
        self.p = self.prime_scheme.field.p
        self.n = self.prime_scheme.n
        self.k = self.prime_scheme.k
        if self.p**self.n > dim_cap:
            raise TooLarge(
                f"p^n = {self.p ** self.n} exceeds the dimension cap {dim_cap}"
            )
        self.state = stabilizer_state(self.prime_scheme.lagrangian, dim_cap)
        self.secrets = list(product(range(self.p), repeat=self.k))
        self.states = np.stack(
            [encode(self.prime_scheme, m, self.state.vector) for m in self.secrets]
        )

    def _blocks(self, subset) -> tuple[int, ...]:
        subset = normalize_subset(self.original.n, subset)
        return descended_subset(self.mu, subset)

    def reduced_matrices(self, subset) -> np.ndarray:
        blocks = self._blocks(subset)
        return np.stack(
            [reduced_density(psi, blocks, self.p, self.n) for psi in self.states]
        )

    def classify(self, subset) -> DensityClassification:
        """Classification straight from the density matrices.

        Qualified means all pairs have orthogonal column spaces (vanishing
        trace product), forbidden means all pairs are equal in Frobenius
        distance; otherwise intermediate, with the leak read off as
        log_p of the number of distinct matrices.
        """
        rhos = self.reduced_matrices(subset)
        count = len(rhos)
        flat = rhos.reshape(count, -1)
        # gram[i, j] = tr(rho_i rho_j): Frobenius inner product of hermitians.
        gram = flat @ flat.conj().T
        norms = np.real(np.diag(gram))
        labels = [-1] * count
        rep_of: list[int] = []
        for i in range(count):
            for cls, rep in enumerate(rep_of):
                gap2 = norms[i] + norms[rep] - 2.0 * np.real(gram[i, rep])
                if gap2 < 1e-8 and (
                    np.linalg.norm(rhos[i] - rhos[rep]) < EQUALITY_TOL
                ):
                    labels[i] = cls
                    break
            if labels[i] < 0:
                labels[i] = len(rep_of)
                rep_of.append(i)
        num_classes = len(rep_of)
        off = np.abs(gram - np.diag(np.diag(gram)))
        all_orthogonal = num_classes == count and float(np.max(off, initial=0.0)) < ORTHOGONALITY_TOL
        cross = all(
            abs(gram[rep_of[i], rep_of[j]]) < ORTHOGONALITY_TOL
            for i in range(num_classes)
            for j in range(i + 1, num_classes)
        )
        if num_classes == 1:
            status = Status.FORBIDDEN
        elif all_orthogonal:
            status = Status.QUALIFIED
        else:
            status = Status.INTERMEDIATE
        leaked = round(math.log(num_classes, self.p))
        if self.p**leaked != num_classes:
            raise AssertionError(
                f"distinct density matrix count {num_classes} is not a power of {self.p}"
            )
        sizes = tuple(labels.count(c) for c in range(num_classes))
        return DensityClassification(
            status=status,
            num_classes=num_classes,
            fiber_sizes=sizes,
            leaked_dim=leaked,
            holevo_bits=math.log2(num_classes),
            cross_orthogonal=cross,
        )

    def holevo_bits(self, subset) -> float:
        return self.classify(subset).holevo_bits
