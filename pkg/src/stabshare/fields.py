"""Arithmetic in F_p and F_{p^mu}, the trace map, and field descent.

Elements of F_{p^mu} are encoded as integers in [0, q), q = p^mu, whose
base-p digits (little-endian) are the coefficients of the element in the
polynomial basis {1, g, ..., g^(mu-1)}, where g is the residue class of x
modulo the defining polynomial.  The encoding is compact, ordering-stable
and makes row reduction deterministic.

Default defining polynomials (coefficient lists, constant term first):

    q = 4  : x^2 + x + 1
    q = 8  : x^3 + x + 1
    q = 9  : x^2 + 1
    q = 16 : x^4 + x + 1
    q = 25 : x^2 + x + 1
    q = 27 : x^3 + 2x + 1

Any monic irreducible polynomial of the right degree may be supplied
instead; irreducibility is verified at construction.
"""

from __future__ import annotations

from .errors import DimensionMismatch, DomainError, NotSupported, ValidationError

MAX_EXTENSION_DEGREE = 8

# Keyed by (p, mu); constant term first.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (1, 1, 1),
}

# Full add/mul tables are built only below this field size.
_TABLE_LIMIT = 512


def is_prime(n: int) -> bool:
    """Primality by trial division; adequate for the characteristic sizes used here."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Polynomial helpers over F_p.  Polynomials are lists of ints, constant first.
# ---------------------------------------------------------------------------


def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(f: list[int], g: list[int], p: int) -> list[int]:
    """Remainder of f modulo monic-normalizable g, coefficients mod p."""
    f = [c % p for c in f]
    g = _poly_trim([c % p for c in g])
    inv_lead = pow(g[-1], p - 2, p)
    while len(_poly_trim(f)) >= len(g):
        shift = len(f) - len(g)
        factor = (f[-1] * inv_lead) % p
        for i, c in enumerate(g):
            f[shift + i] = (f[shift + i] - factor * c) % p
        _poly_trim(f)
    return f


def _poly_mul(f: list[int], g: list[int], p: int) -> list[int]:
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return _poly_trim(out)


def _poly_powmod(f: list[int], e: int, g: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(f), g, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), g, p)
        base = _poly_mod(_poly_mul(base, base, p), g, p)
        e >>= 1
    return result


def _poly_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    f = _poly_trim([c % p for c in f])
    g = _poly_trim([c % p for c in g])
    while g:
        f, g = g, _poly_mod(f, g, p)
    return f


def _poly_sub(f: list[int], g: list[int], p: int) -> list[int]:
    out = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] = c % p
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return _poly_trim(out)


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Rabin test: x^(p^mu) = x mod f, and gcd(x^(p^(mu/t)) - x, f) = 1 for prime t | mu."""
    f = list(modulus)
    mu = len(f) - 1
    if mu <= 3:
        # Degree <= 3 is irreducible iff it has no roots in F_p.
        return all(
            sum(c * pow(a, i, p) for i, c in enumerate(f)) % p != 0 for a in range(p)
        )
    x = [0, 1]
    if _poly_sub(_poly_powmod(x, p**mu, f, p), x, p):
        return False
    for t in {d for d in range(2, mu + 1) if mu % d == 0 and is_prime(d)}:
        diff = _poly_sub(_poly_powmod(x, p ** (mu // t), f, p), x, p)
        if len(_poly_gcd(diff, f, p)) != 1:
            return False
    return True


class FieldSpec:
    """The field F_q, q = p^mu, with integer-encoded elements.

    Instances are immutable and hashable; two specs compare equal iff they
    share (p, mu, modulus), so subspaces over equal specs interoperate.
    """

    __slots__ = (
        "p",
        "mu",
        "modulus",
        "q",
        "_add_table",
        "_mul_table",
        "_inv_table",
        "_gram",
        "_gram_inv",
    )

    def __init__(self, p: int, mu: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValidationError(f"p = {p} is not prime")
        if mu < 1:
            raise ValidationError(f"extension degree mu = {mu} must be >= 1")
        if mu > MAX_EXTENSION_DEGREE:
            raise NotSupported(f"extension degrees above {MAX_EXTENSION_DEGREE} are not supported")
        self.p = p
        self.mu = mu
        self.q = p**mu
        if mu == 1:
            self.modulus = ()
        else:
            if modulus is None:
                modulus = DEFAULT_MODULI.get((p, mu))
                if modulus is None:
                    raise ValidationError(
                        f"no default defining polynomial for q = {p}^{mu}; supply one"
                    )
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != mu + 1:
                raise ValidationError(
                    f"defining polynomial must have degree {mu} (got {len(modulus) - 1})"
                )
            if modulus[-1] != 1:
                raise ValidationError("defining polynomial must be monic")
            if not _is_irreducible(modulus, p):
                raise ValidationError(f"defining polynomial {list(modulus)} is reducible over F_{p}")
            self.modulus = modulus
        self._add_table = None
        self._mul_table = None
        self._inv_table = None
        self._gram = None
        self._gram_inv = None
        if 1 < self.q <= _TABLE_LIMIT and mu > 1:
            self._build_tables()

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.mu, self.modulus) == (other.p, other.mu, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.mu, self.modulus))

    def __repr__(self):
        if self.mu == 1:
            return f"FieldSpec(p={self.p})"
        return f"FieldSpec(p={self.p}, mu={self.mu}, modulus={list(self.modulus)})"

    # -- element encoding ----------------------------------------------------

    def digits(self, x: int) -> tuple[int, ...]:
        """Base-p digits of x, little-endian, length mu."""
        out = []
        for _ in range(self.mu):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def undigits(self, cs) -> int:
        x = 0
        for c in reversed(list(cs)):
            x = x * self.p + (c % self.p)
        return x

    def check_element(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.q:
            raise DomainError(f"{x!r} is not an element of F_{self.q}")
        return x

    def elements(self) -> range:
        return range(self.q)

    def basis_elements(self) -> tuple[int, ...]:
        """Encodings of the polynomial basis 1, g, ..., g^(mu-1)."""
        return tuple(self.p**j for j in range(self.mu))

    # -- arithmetic ----------------------------------------------------------

    def _build_tables(self):
        q = self.q
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                s = self._add_slow(a, b)
                add[a][b] = add[b][a] = s
                m = self._mul_slow(a, b)
                mul[a][b] = mul[b][a] = m
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self._add_table, self._mul_table, self._inv_table = add, mul, inv

    def _add_slow(self, a: int, b: int) -> int:
        if self.mu == 1:
            return (a + b) % self.p
        return self.undigits(
            (x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))
        )

    def _mul_slow(self, a: int, b: int) -> int:
        if self.mu == 1:
            return (a * b) % self.p
        prod = _poly_mul(list(self.digits(a)), list(self.digits(b)), self.p)
        red = _poly_mod(prod, list(self.modulus), self.p)
        return self.undigits(red + [0] * (self.mu - len(red)))

    def add(self, a: int, b: int) -> int:
        if self.mu == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.mu == 1:
            return (-a) % self.p
        return self.undigits((-x) % self.p for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.mu == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("0 has no multiplicative inverse")
        if self.mu == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    # -- trace and descent -----------------------------------------------------

    def trace(self, x: int) -> int:
        """Tr_{q/p}(x) = sum of x^(p^i), i < mu, as an element of F_p."""
        self.check_element(x)
        acc, t = x, x
        for _ in range(self.mu - 1):
            t = self.frobenius(t)
            acc = self.add(acc, t)
        # The trace lands in the prime subfield, whose encodings are 0..p-1.
        if acc >= self.p:
            raise DomainError(f"trace of {x} fell outside the prime subfield")
        return acc

    def gram_matrix(self) -> tuple[tuple[int, ...], ...]:
        """mu x mu matrix over F_p with entry (i, j) = Tr(g_i g_j) for the polynomial basis."""
        if self._gram is None:
            basis = self.basis_elements()
            self._gram = tuple(
                tuple(self.trace(self.mul(gi, gj)) for gj in basis) for gi in basis
            )
        return self._gram

    def gram_inverse(self) -> tuple[tuple[int, ...], ...]:
        if self._gram_inv is None:
            self._gram_inv = _invert_mod_p(self.gram_matrix(), self.p)
        return self._gram_inv

    def prime_subfield(self) -> "FieldSpec":
        return self if self.mu == 1 else FieldSpec(self.p)

    def hermitian_conj(self, x: int) -> int:
        """x -> x^sqrt(q); defined only when mu is even."""
        if self.mu % 2 != 0:
            raise NotSupported("hermitian conjugation needs an even extension degree")
        return self.pow(x, self.p ** (self.mu // 2))


def _invert_mod_p(matrix, p: int):
    """Gauss-Jordan inverse of a square matrix over F_p."""
    m = len(matrix)
    work = [list(row) + [int(i == j) for j in range(m)] for i, row in enumerate(matrix)]
    row = 0
    for col in range(m):
        piv = next((r for r in range(row, m) if work[r][col] % p != 0), None)
        if piv is None:
            raise ValidationError("matrix is singular over F_p")
        work[row], work[piv] = work[piv], work[row]
        inv_lead = pow(work[row][col], p - 2, p)
        work[row] = [(c * inv_lead) % p for c in work[row]]
        for r in range(m):
            if r != row and work[r][col] % p:
                f = work[r][col]
                work[r] = [(a - f * b) % p for a, b in zip(work[r], work[row])]
        row += 1
    return tuple(tuple(r[m:]) for r in work)


def descend_vector(spec: FieldSpec, v) -> tuple[int, ...]:
    """Expand an F_q vector (a|b) of length 2n into F_p coordinates of length 2*mu*n.

    a-coordinates expand by plain polynomial-basis coefficients; b-coordinates
    pick up the Gram-matrix twist, which is what makes symplectic duality
    commute with descent.
    """
    v = tuple(v)
    if len(v) % 2 != 0:
        raise DimensionMismatch(f"vector length {len(v)} is odd")
    n = len(v) // 2
    gram = spec.gram_matrix()
    p = spec.p
    out_a: list[int] = []
    out_b: list[int] = []
    for i in range(n):
        out_a.extend(spec.digits(spec.check_element(v[i])))
    for i in range(n):
        coeffs = spec.digits(spec.check_element(v[n + i]))
        out_b.extend(
            sum(coeffs[r] * gram[r][c] for r in range(spec.mu)) % p
            for c in range(spec.mu)
        )
    return tuple(out_a + out_b)


def lift_vector(spec: FieldSpec, u) -> tuple[int, ...]:
    """Inverse of :func:`descend_vector`: map an F_p vector of length 2*mu*n to F_q^(2n)."""
    u = tuple(u)
    mu = spec.mu
    if len(u) % (2 * mu) != 0:
        raise DimensionMismatch(f"vector length {len(u)} is not a multiple of 2*mu")
    n = len(u) // (2 * mu)
    gram_inv = spec.gram_inverse()
    p = spec.p
    out = []
    for i in range(n):
        out.append(spec.undigits(u[i * mu : (i + 1) * mu]))
    for i in range(n):
        chunk = u[(n + i) * mu : (n + i + 1) * mu]
        coeffs = [
            sum(chunk[r] * gram_inv[r][c] for r in range(mu)) % p for c in range(mu)
        ]
        out.append(spec.undigits(coeffs))
    return tuple(out)
