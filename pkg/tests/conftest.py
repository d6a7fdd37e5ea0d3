"""Shared fixtures: paper-example schemes and a seeded random corpus."""

from __future__ import annotations

from itertools import combinations

import pytest

from stabshare.constructions import (
    RSParams,
    css_scheme,
    euclidean_scheme,
    hermitian_scheme,
    rs_scheme,
)
from stabshare.fields import FieldSpec
from stabshare.gv import GVQuery, witness_search
from stabshare.linalg import Subspace
from stabshare.scheme import Scheme, build_scheme

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F4 = FieldSpec(2, 2)


def superdense_scheme(paper_reps: bool = True) -> Scheme:
    """The 2-qubit, 2-bit perfect scheme with the Bell-state lagrangian."""
    lagr = Subspace(F2, 4, [[1, 1, 0, 0], [0, 0, 1, 1]])
    reps = [(1, 0, 0, 0), (0, 0, 1, 0)] if paper_reps else None
    return build_scheme(Subspace.zero(F2, 4), lagr, reps)


def computational_lagrangian_scheme() -> Scheme:
    """Same stabilizer, computational-basis lagrangian: singletons leak one bit."""
    lagr = Subspace(F2, 4, [[0, 0, 1, 0], [0, 0, 0, 1]])
    return build_scheme(Subspace.zero(F2, 4), lagr)


@pytest.fixture(scope="session")
def ex3():
    return superdense_scheme()


@pytest.fixture(scope="session")
def ex6():
    return computational_lagrangian_scheme()


def paper_schemes() -> list[tuple[str, Scheme]]:
    out = [
        ("superdense", superdense_scheme()),
        ("superdense-default-reps", superdense_scheme(paper_reps=False)),
        ("computational", computational_lagrangian_scheme()),
        (
            "css-standard",
            css_scheme(Subspace.full(F2, 2), Subspace.zero(F2, 2), "standard"),
        ),
        (
            "euclidean-repetition",
            euclidean_scheme(Subspace.zero(F2, 2), Subspace(F2, 2, [[1, 1]])),
        ),
        (
            "hermitian-repetition",
            hermitian_scheme(Subspace.zero(F4, 2), Subspace(F4, 2, [[1, 1]])),
        ),
        ("rs-q2-k2", rs_scheme(RSParams(F2, 2))),
        ("rs-q4-k2", rs_scheme(RSParams(F4, 2))),
        ("rs-q4-k4", rs_scheme(RSParams(F4, 4))),
    ]
    return out


def random_scheme(q: int, n: int, k: int, seed: int) -> Scheme:
    witness = witness_search(GVQuery(q, n, k, 1, 1), trials=1, seed=seed)
    assert witness is not None
    return build_scheme(witness.stabilizer, witness.lagrangian)


def random_corpus() -> list[tuple[str, Scheme]]:
    out = []
    for q in (2, 3):
        top_n = 5 if q == 2 else 4
        for n in range(2, top_n + 1):
            for k in range(1, n + 1):
                for seed in (11, 42):
                    out.append(
                        (f"random-q{q}-n{n}-k{k}-s{seed}", random_scheme(q, n, k, seed))
                    )
    for k in (1, 2):
        out.append((f"random-q3-n5-k{k}-s7", random_scheme(3, 5, k, 7)))
    return out


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, Scheme]]:
    return paper_schemes() + random_corpus()


# ---------------------------------------------------------------------------
# Exhaustive subspace enumeration (independent oracle for small cases)
# ---------------------------------------------------------------------------


def enumerate_subspaces(field: FieldSpec, ambient: int, dims) -> list[Subspace]:
    """Every subspace of F_q^ambient whose dimension lies in dims.

    Brute force over spanning sets with canonical de-duplication; intended
    only for tiny parameters.
    """
    dims = set(dims)
    vectors = []
    from itertools import product

    for v in product(field.elements(), repeat=ambient):
        if any(v):
            vectors.append(v)
    seen = {}
    if 0 in dims:
        z = Subspace.zero(field, ambient)
        seen[z.rows] = z
    for d in sorted(dims - {0}):
        for combo in combinations(vectors, d):
            s = Subspace(field, ambient, combo)
            if s.dim == d and s.rows not in seen:
                seen[s.rows] = s
    return list(seen.values())
