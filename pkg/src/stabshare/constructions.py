"""Scheme builders from classical codes: CSS pairs, hermitian pairs, Reed-Solomon.

The Euclidean route pairs a self-orthogonal code with a self-dual extension;
the hermitian route does the same over the quadratic extension and lands in
the symplectic picture by coefficient splitting; the Reed-Solomon family
instantiates the Euclidean route with evaluation codes at n = q.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (
    BadPair,
    BadParams,
    DuplicatePoints,
    NotNested,
    NotSupported,
    StabshareError,
)
from .fields import FieldSpec
from .linalg import Subspace, euclidean_dual, nullspace
from .scheme import Scheme, build_scheme
from .symplectic import symp_dual


def hermitian_dual(s: Subspace) -> Subspace:
    """Orthogonal space under <x, y> = <x^sqrt(q), y>; needs an even extension degree."""
    f = s.field
    constraints = [[f.hermitian_conj(x) for x in row] for row in s.rows]
    return nullspace(f, constraints, s.ambient_dim)


def product_space(a_part: Subspace, b_part: Subspace) -> Subspace:
    """{(a|b) : a in a_part, b in b_part} inside F_q^(2n)."""
    if a_part.field != b_part.field or a_part.ambient_dim != b_part.ambient_dim:
        raise BadPair("product parts must share field and length")
    n = a_part.ambient_dim
    zero = (0,) * n
    rows = [tuple(r) + zero for r in a_part.rows]
    rows += [zero + tuple(r) for r in b_part.rows]
    return Subspace(a_part.field, 2 * n, rows)


# ---------------------------------------------------------------------------
# CSS route
# ---------------------------------------------------------------------------


def css_pair_to_symplectic(c1: Subspace, c2: Subspace) -> tuple[Subspace, Subspace]:
    """Stabilizer {(a|b) : a in c2, b in c1-dual} and its symplectic dual.

    The dual has the closed form {(a|b) : a in c1, b in c2-dual}; it is also
    recomputed independently and compared, so a mismatch cannot go unnoticed.
    """
    if not c2.is_subspace_of(c1):
        raise NotNested("the second code must be contained in the first")
    stabilizer = product_space(c2, euclidean_dual(c1))
    closed_form = product_space(c1, euclidean_dual(c2))
    if symp_dual(stabilizer) != closed_form:
        raise StabshareError("symplectic dual disagrees with the CSS closed form")
    return stabilizer, closed_form


def css_standard_lagrangian(c2: Subspace) -> Subspace:
    """{(a|b) : a in c2, b in c2-dual}: the choice giving the standard CSS encoding."""
    return product_space(c2, euclidean_dual(c2))


def css_scheme(c1: Subspace, c2: Subspace, lagrangian: str = "standard") -> Scheme:
    """Scheme from nested classical codes c2 <= c1.

    lagrangian = "standard" uses the standard CSS encoding choice (whose
    access structure matches purely classical sharing from the same pair);
    "greedy" uses the deterministic completion instead.
    """
    stabilizer, _ = css_pair_to_symplectic(c1, c2)
    if lagrangian == "standard":
        return build_scheme(stabilizer, css_standard_lagrangian(c2))
    if lagrangian == "greedy":
        return build_scheme(stabilizer)
    raise BadParams(f"unknown lagrangian choice {lagrangian!r}")


def classical_leaked_dim(c1: Subspace, c2: Subspace, subset) -> int:
    """dim P_A(c1) - dim P_A(c2): the leak of classical sharing from the pair."""
    from .linalg import project_columns

    cols = [i - 1 for i in subset]
    return project_columns(c1, cols).dim - project_columns(c2, cols).dim


# ---------------------------------------------------------------------------
# Euclidean route
# ---------------------------------------------------------------------------


def euclidean_scheme(e: Subspace, e_max: Subspace) -> Scheme:
    """Scheme from e <= e_max with e_max Euclidean self-dual.

    The stabilizer is {(a|b) : a, b in e} and the lagrangian {(a|b) : a, b in
    e_max}; the secret length is n - 2*dim(e) symbols.
    """
    if e.field != e_max.field or e.ambient_dim != e_max.ambient_dim:
        raise BadPair("codes must share field and length")
    if not e.is_subspace_of(e_max):
        raise BadPair("e must be contained in e_max")
    if euclidean_dual(e_max) != e_max:
        raise BadPair("e_max must be Euclidean self-dual")
    return build_scheme(product_space(e, e), product_space(e_max, e_max))


# ---------------------------------------------------------------------------
# Hermitian route
# ---------------------------------------------------------------------------


def expand_quadratic(s: Subspace) -> Subspace:
    """F_p image of an F_{p^2} code: split each symbol into (a|b) digit pairs.

    The splitting sends x = a + g*b to coordinate pair (a, b); hermitian
    orthogonality over F_{p^2} becomes symplectic orthogonality over F_p and
    supports are preserved share by share.
    """
    f = s.field
    if f.mu != 2:
        raise NotSupported("quadratic expansion requires a degree-2 extension field")
    prime = f.prime_subfield()
    n = s.ambient_dim
    rows = []
    for r in s.rows:
        for g in f.basis_elements():
            scaled = [f.mul(g, x) for x in r]
            a = [f.digits(x)[0] for x in scaled]
            b = [f.digits(x)[1] for x in scaled]
            rows.append(tuple(a) + tuple(b))
    return Subspace(prime, 2 * n, rows)


def hermitian_scheme(d: Subspace, d_max: Subspace) -> Scheme:
    """Scheme from d <= d_max with d_max hermitian self-dual over F_{p^2}.

    Only prime base fields are supported: the shares end up as F_p qudits and
    the secret has n - 2*dim(d) symbols over F_p.
    """
    if d.field != d_max.field or d.ambient_dim != d_max.ambient_dim:
        raise BadPair("codes must share field and length")
    if d.field.mu != 2:
        raise NotSupported("hermitian construction requires a degree-2 extension field")
    if not d.is_subspace_of(d_max):
        raise BadPair("d must be contained in d_max")
    if hermitian_dual(d_max) != d_max:
        raise BadPair("d_max must be hermitian self-dual")
    return build_scheme(expand_quadratic(d), expand_quadratic(d_max))


def hermitian_leaked_dim(d: Subspace, d_max: Subspace, subset) -> int:
    """Leak computed directly over F_{q^2}, for cross-checking the expansion."""
    from .weights import coordinate_restrict

    return coordinate_restrict(d_max, subset).dim - coordinate_restrict(d, subset).dim


# ---------------------------------------------------------------------------
# Reed-Solomon route
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RSParams:
    """Parameters of the Reed-Solomon family: n = q with all points evaluated."""

    field: FieldSpec
    k: int
    alphas: tuple[int, ...] = dc_field(default=())

    def __post_init__(self):
        alphas = self.alphas or tuple(self.field.elements())
        object.__setattr__(self, "alphas", tuple(alphas))
        n = len(self.alphas)
        if n != self.field.q or set(self.alphas) != set(self.field.elements()):
            raise BadParams("evaluation points must be all of F_q exactly once")
        if n % 2 != 0 or self.k % 2 != 0:
            raise BadParams("n = q and k must both be even")
        if not 2 <= self.k <= n:
            raise BadParams(f"k = {self.k} outside 2..{n}")

    @property
    def n(self) -> int:
        return len(self.alphas)


def rs_generator(field: FieldSpec, k: int, alphas) -> Subspace:
    """Evaluation code of polynomials of degree < k at the given points."""
    alphas = tuple(alphas)
    if len(set(alphas)) != len(alphas):
        raise DuplicatePoints("evaluation points must be distinct")
    for a in alphas:
        field.check_element(a)
    rows = [[field.pow(a, j) for a in alphas] for j in range(k)]
    return Subspace(field, len(alphas), rows)


def rs_scheme(params: RSParams) -> Scheme:
    """Scheme from the Reed-Solomon pair E = RS(n, (n-k)/2), E_max = RS(n, n/2).

    At n = q the code RS(n, n/2) is Euclidean self-dual, so the Euclidean
    route applies; the result shares k symbols of F_q among n participants.
    """
    n, k = params.n, params.k
    e = rs_generator(params.field, (n - k) // 2, params.alphas)
    e_max = rs_generator(params.field, n // 2, params.alphas)
    return euclidean_scheme(e, e_max)
