"""Hom-Leibniz instances: Yau twists, the built-in catalog, random generation.

Twisting an untwisted algebra ``(L, *)`` by a multiplicative endomorphism
``M`` gives the Hom-algebra with product ``x o y = M(x * y)`` and twist
``M``. Left Leibniz algebras twist into left Hom-Leibniz algebras; every
output is re-checked rather than trusted.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .algebra import (
    CheckReport,
    HomAlgebra,
    Matrix,
    as_matrix,
    check_basis,
    diagonal_matrix,
    identity_matrix,
    mat_vec,
    zero_algebra,
    zero_matrix,
)
from .identities import check_left_hom_leibniz

ENTRY_RANGE = 3


class NotEndomorphismError(ValueError):
    def __init__(self, report: CheckReport):
        self.report = report
        i, j = report.witness.data
        super().__init__(f"map is not an algebra endomorphism: fails on (e{i + 1}, e{j + 1})")


class GenerationError(RuntimeError):
    pass


def is_algebra_endomorphism(L: HomAlgebra, M) -> CheckReport:
    """Decide ``M(e_i e_j) = M(e_i) M(e_j)`` for L's product (its twist is not used)."""
    M = as_matrix(M)
    n = L.dim
    if len(M) != n or any(len(r) != n for r in M):
        raise ValueError(f"map must be {n}x{n}, got {len(M)}x{len(M[0]) if M else 0}")
    images = [mat_vec(M, L.basis(i)) for i in range(n)]
    name = "endomorphism"
    if not L.twist_is_identity:
        name += " [warning: algebra has a nontrivial twist]"
    return check_basis(name, n, 2,
                       lambda i, j: mat_vec(M, L.structure[i][j]) - L.product(images[i], images[j]))


def yau_twist(L: HomAlgebra, M, name: str | None = None) -> HomAlgebra:
    """Hom-algebra with product ``M(x y)`` and twist ``M``."""
    M = as_matrix(M)
    if not L.twist_is_identity:
        raise ValueError("yau_twist expects an untwisted algebra (identity twist)")
    report = is_algebra_endomorphism(L, M)
    if not report.holds:
        raise NotEndomorphismError(report)
    n = L.dim
    structure = tuple(tuple(mat_vec(M, L.structure[i][j]) for j in range(n)) for i in range(n))
    A = HomAlgebra(n, structure, M, name=name, basis_names=L.basis_names)
    if check_left_hom_leibniz(L).holds and not check_left_hom_leibniz(A).holds:
        raise AssertionError("Yau twist of a left Leibniz algebra is not left Hom-Leibniz")
    return A


# -- catalog ------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: HomAlgebra
    note: str
    expected: dict[str, bool] = field(default_factory=dict)


def _alg(name, dim, products, twist=None) -> HomAlgebra:
    return HomAlgebra.from_products(dim, products, twist=twist, name=name)


def L2() -> HomAlgebra:
    return _alg("L2", 2, {(1, 1): (1, 0)})


def L3() -> HomAlgebra:
    return _alg("L3", 3, {(0, 0): (0, 1, 0), (0, 1): (0, 0, 1)})


def heisenberg() -> HomAlgebra:
    return _alg("Heisenberg", 3, {(0, 1): (0, 0, 1), (1, 0): (0, 0, -1)})


def hemi4() -> HomAlgebra:
    """Nonabelian 2-dim Lie algebra acting on a 2-dim module, module as left annihilator.

    Left Leibniz, and not Hom-Lie admissible: ``[e1, e2] = e2`` acts
    nontrivially on ``e4``.
    """
    return _alg("Hemi4", 4, {
        (0, 1): (0, 1, 0, 0),
        (1, 0): (0, -1, 0, 0),
        (0, 2): (0, 0, 1, 0),
        (1, 3): (0, 0, 1, 0),
    })


def non_leibniz() -> HomAlgebra:
    return _alg("NonLeib", 1, {(0, 0): (1,)})


I, O = True, False
# Column order of the verdict tables below.
VERDICT_NAMES = (
    "multiplicative", "hom-associative", "left-hom-leibniz", "right-hom-leibniz", "skew",
    "hom-jacobi", "associator-form", "anticommutator-annihilates", "bracket-derivation",
    "jacobian-cyclic-form", "hom-lie-admissible", "hom-akivis",
    "hom-power-associative-3", "hom-power-associative", "cube-vanishes",
    "twisted-cube-criterion", "right-powers-vanish", "left-powers-annihilate",
    "power-associative", "left-cube-annihilates",
)

_VERDICTS = {
    # multiplicative .. hom-akivis | hpa3 hpa cube crit rpv lpa | pa lca
    "Zero1":              (I, I, I, I, I, I, I, I, I, I, I, I,  I, I, I, I, I, I,  I, I),
    "Zero2":              (I, I, I, I, I, I, I, I, I, I, I, I,  I, I, I, I, I, I,  I, I),
    "Zero3":              (I, I, I, I, I, I, I, I, I, I, I, I,  I, I, I, I, I, I,  I, I),
    "L2":                 (I, I, I, I, O, I, I, I, I, I, I, I,  I, I, I, I, I, I,  I, I),
    "L3":                 (I, O, I, O, O, I, I, I, I, I, I, I,  O, O, I, O, I, I,  O, I),
    "Heisenberg":         (I, I, I, I, I, I, I, I, I, I, I, I,  I, I, I, I, I, I,  I, I),
    "A2":                 (I, I, I, I, O, I, I, I, I, I, I, I,  I, I, I, I, I, I,  None, None),
    "L3-twisted":         (I, O, I, O, O, I, I, I, I, I, I, I,  O, O, I, O, I, I,  None, None),
    "Heisenberg-twisted": (I, I, I, I, I, I, I, I, I, I, I, I,  I, I, I, I, I, I,  None, None),
    "Hemi4":              (I, O, I, O, O, O, I, I, I, I, O, I,  O, O, I, O, I, I,  O, I),
    "Hemi4-twisted":      (I, O, I, O, O, O, I, I, I, I, O, I,  O, O, I, O, I, I,  None, None),
    "NonLeib":            (I, I, O, O, O, O, O, O, I, O, O, I,  I, I, O, O, O, O,  I, O),
}


@lru_cache(maxsize=1)
def _catalog() -> tuple[CatalogEntry, ...]:
    l2, l3, heis, h4 = L2(), L3(), heisenberg(), hemi4()
    algebras = [
        (zero_algebra(1), "zero product"),
        (zero_algebra(2), "zero product"),
        (zero_algebra(3), "zero product"),
        (l2, "e2 e2 = e1; two-sided Leibniz, not Lie"),
        (l3, "e1 e1 = e2, e1 e2 = e3; left Leibniz with x x^2 != 0"),
        (heis, "Heisenberg Lie algebra [e1, e2] = e3"),
        (yau_twist(l2, diagonal_matrix([4, 2]), name="A2"), "Yau twist of L2 by diag(4, 2)"),
        (yau_twist(l3, diagonal_matrix([2, 4, 8]), name="L3-twisted"),
         "Yau twist of L3 by diag(2, 4, 8)"),
        (yau_twist(heis, diagonal_matrix([1, 2, 2]), name="Heisenberg-twisted"),
         "Yau twist of Heisenberg by diag(1, 2, 2)"),
        (h4, "left Leibniz, not Lie admissible"),
        (yau_twist(h4, diagonal_matrix([1, 2, 2, 1]), name="Hemi4-twisted"),
         "Yau twist of Hemi4 by diag(1, 2, 2, 1); not Hom-Lie admissible"),
        (non_leibniz(), "e1 e1 = e1; negative control, not Leibniz"),
    ]
    entries = []
    for A, note in algebras:
        row = _VERDICTS[A.name]
        expected = {k: v for k, v in zip(VERDICT_NAMES, row) if v is not None}
        entries.append(CatalogEntry(A.name, A, note, expected))
    return tuple(entries)


def catalog() -> list[CatalogEntry]:
    return list(_catalog())


def catalog_entry(name: str) -> CatalogEntry:
    for entry in _catalog():
        if entry.name == name:
            return entry
    raise KeyError(f"no catalog entry named {name!r}")


def recompute_verdicts(A: HomAlgebra, names: Iterable[str] = VERDICT_NAMES) -> dict[str, bool]:
    from .registry import run_named

    return {name: run_named(A, name).holds for name in names}


# -- random generation --------------------------------------------------------

MAX_RANDOM_DIM = 4


def _random_structure(rng: random.Random, n: int) -> HomAlgebra:
    # e_i e_j lies in span(e_k : k > max(i, j)), which keeps the algebra nilpotent
    products = {}
    for i in range(n):
        for j in range(n):
            lo = max(i, j) + 1
            if lo < n and rng.random() < 0.5:
                v = [0] * n
                for k in range(lo, n):
                    if rng.random() < 0.6:
                        v[k] = rng.randint(-2, 2)
                products[(i, j)] = v
    return HomAlgebra.from_products(n, products)


def _random_map(rng: random.Random, n: int) -> Matrix:
    diagonal_only = rng.random() < 0.5
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j or (not diagonal_only and i > j and rng.random() < 0.5):
                rows[i][j] = rng.randint(-ENTRY_RANGE, ENTRY_RANGE)
    return as_matrix(rows)


def random_hom_leibniz(
    seed: int,
    dim: int = 3,
    max_structures: int = 200,
    max_maps: int = 500,
) -> HomAlgebra:
    """Deterministic random left Hom-Leibniz algebra of dimension ``dim <= 4``.

    Rejection-samples a nilpotent structure tensor until it satisfies the
    untwisted left Leibniz identity, then rejection-samples a nontrivial
    endomorphism with small integer entries and returns the Yau twist.
    """
    if not 1 <= dim <= MAX_RANDOM_DIM:
        raise ValueError(f"dim must be between 1 and {MAX_RANDOM_DIM}, got {dim}")
    rng = random.Random(seed)
    trivial = {identity_matrix(dim), zero_matrix(dim)}
    for _ in range(max_structures):
        L = _random_structure(rng, dim)
        if dim > 1 and not L.nonzero_products():
            continue
        if not check_left_hom_leibniz(L).holds:
            continue
        for _ in range(max_maps):
            M = _random_map(rng, dim)
            if M in trivial or not is_algebra_endomorphism(L, M).holds:
                continue
            return yau_twist(L, M, name=f"random-{dim}-{seed}")
    raise GenerationError(
        f"no Hom-Leibniz algebra found for seed={seed}, dim={dim} within budget; "
        "try another seed or a smaller dimension"
    )


def fuzz_corpus(count: int = 50, start: int = 0) -> list[HomAlgebra]:
    """Seeds ``start .. start+count-1`` cycling through dimensions 2, 3, 4."""
    return [random_hom_leibniz(s, 2 + s % 3) for s in range(start, start + count)]
