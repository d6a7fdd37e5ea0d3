"""Existence bounds for schemes with prescribed coset distances.

The finite-length bound is evaluated in exact rational arithmetic (the
inequality is sharp and q^(2n) overflows floats long before it stops being
interesting); the asymptotic form is solved by bisection; a randomized
witness search validates the existence claim at toy scale.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, TooLarge, ValidationError
from .fields import FieldSpec, is_prime
from .linalg import Subspace
from .symplectic import complete_to_lagrangian, symp_dual
from .weights import coset_distance

SEARCH_CAP = 1 << 20


@dataclass(frozen=True)
class GVQuery:
    q: int
    n: int
    k: int
    delta_t: int
    delta_r: int

    def __post_init__(self):
        if self.q < 2:
            raise ValidationError("q must be at least 2")
        if not 1 <= self.k <= self.n:
            raise ValidationError(f"k = {self.k} outside 1..{self.n}")
        if self.delta_t < 1 or self.delta_r < 1:
            raise ValidationError("distance targets must be at least 1")


@dataclass(frozen=True)
class AsymptoticQuery:
    q: int
    rate: float

    def __post_init__(self):
        if self.q < 2:
            raise ValidationError("q must be at least 2")
        if not 0.0 <= self.rate <= 1.0:
            raise ValidationError(f"rate R = {self.rate} outside [0, 1]")


@dataclass(frozen=True)
class GVResult:
    holds: bool
    lhs: Fraction


@dataclass(frozen=True)
class Witness:
    stabilizer: Subspace
    lagrangian: Subspace
    trial: int
    privacy_distance: int
    reconstruction_distance: int


def sphere_sum(n: int, q: int, delta: int) -> int:
    """Number of vectors with symplectic weight in 1..delta-1, exactly."""
    if delta < 1:
        raise DomainError("delta must be at least 1")
    return sum(math.comb(n, i) * (q * q - 1) ** i for i in range(1, delta))


def gv_check(query: GVQuery) -> GVResult:
    """Exact left-hand side of the existence bound and whether it is below 1."""
    q, n, k = query.q, query.n, query.k
    denom = q ** (2 * n) - 1
    lhs = Fraction(q ** (n + k) - q**n, denom) * sphere_sum(n, q, query.delta_r)
    lhs += Fraction(q**n - q ** (n - k), denom) * sphere_sum(n, q, query.delta_t)
    return GVResult(holds=lhs < 1, lhs=lhs)


def entropy_hq(q: int, x: float) -> float:
    """q-ary entropy -x log_q x - (1-x) log_q (1-x), continuous at the endpoints."""
    if q < 2:
        raise DomainError("q must be at least 2")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x = {x} outside [0, 1]")
    if x in (0.0, 1.0):
        return 0.0
    lq = math.log(q)
    return (-x * math.log(x) - (1.0 - x) * math.log(1.0 - x)) / lq


def _growth_exponent(q: int, eps: float) -> float:
    return entropy_hq(q, eps) + eps * math.log(q * q - 1, q)


def _bisect_increasing(fn, target: float, lo: float, hi: float, tol: float) -> float:
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if fn(mid) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def gv_asymptotic(query: AsymptoticQuery, tol: float = 1e-9) -> tuple[float, float]:
    """Largest asymptotic fractions (eps_t, eps_r) allowed by the bound.

    eps_t solves h_q(eps) + eps log_q(q^2 - 1) = 1 and eps_r the same with
    right side 1 - R, both on the increasing branch [0, 1 - 1/q^2] where the
    exponent climbs from 0 to 2.  R = 1 gives eps_r = 0.
    """
    q = query.q
    hi = 1.0 - 1.0 / (q * q)
    fn = lambda e: _growth_exponent(q, e)
    eps_t = _bisect_increasing(fn, 1.0, 0.0, hi, tol)
    target = 1.0 - query.rate
    if target <= 0.0:
        eps_r = 0.0
    else:
        eps_r = _bisect_increasing(fn, target, 0.0, hi, tol)
    return eps_t, eps_r


# ---------------------------------------------------------------------------
# Randomized witness search
# ---------------------------------------------------------------------------


def field_from_order(q: int) -> FieldSpec:
    """FieldSpec for a prime-power order q."""
    for p in range(2, q + 1):
        if q % p == 0:
            mu = 0
            t = q
            while t % p == 0:
                t //= p
                mu += 1
            if t != 1 or not is_prime(p):
                raise ValidationError(f"q = {q} is not a prime power")
            return FieldSpec(p, mu)
    raise ValidationError(f"q = {q} is not a prime power")


def _random_self_orthogonal(field: FieldSpec, n: int, dim: int, rng: random.Random) -> Subspace:
    """Uniform-ish self-orthogonal space: extend repeatedly inside the current dual."""
    current = Subspace.zero(field, 2 * n)
    while current.dim < dim:
        dual = symp_dual(current)
        for _ in range(200):
            coeffs = [rng.randrange(field.q) for _ in range(dual.dim)]
            v = [0] * (2 * n)
            for c, row in zip(coeffs, dual.rows):
                if c:
                    v = [field.add(a, field.mul(c, b)) for a, b in zip(v, row)]
            if not current.contains(v):
                current = Subspace(field, 2 * n, current.rows + (tuple(v),))
                break
        else:
            raise AssertionError("rejection sampling starved")
    return current


def witness_search(
    query: GVQuery, trials: int = 10_000, seed: int = 0
) -> Witness | None:
    """Seeded random search for a pair meeting the distance targets.

    Each trial draws a self-orthogonal stabilizer of dimension n-k with a
    per-trial derived seed (seed + trial index), completes it greedily, and
    keeps the first pair whose coset distances reach the targets.
    """
    field = field_from_order(query.q)
    n, k = query.n, query.k
    if field.q ** (2 * n) > SEARCH_CAP:
        raise TooLarge(f"q^(2n) = {field.q ** (2 * n)} exceeds search cap {SEARCH_CAP}")
    for trial in range(trials):
        rng = random.Random(seed + trial)
        stab = _random_self_orthogonal(field, n, n - k, rng)
        lagr = complete_to_lagrangian(stab)
        dt = coset_distance(lagr, stab)
        if dt < query.delta_t:
            continue
        dr = coset_distance(symp_dual(stab), lagr)
        if dr < query.delta_r:
            continue
        return Witness(
            stabilizer=stab,
            lagrangian=lagr,
            trial=trial,
            privacy_distance=dt,
            reconstruction_distance=dr,
        )
    return None
