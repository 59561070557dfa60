"""Hom-Akivis structures: a skew bracket, a ternary operation and a twist.

Every Hom-algebra carries one, with the commutator as bracket and the
Hom-associator as ternary operation.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    CheckReport,
    DimensionError,
    Element,
    HomAlgebra,
    Matrix,
    Vector,
    as_matrix,
    bilinear,
    check_basis,
    mat_vec,
    sparse_terms,
)
from .identities import commutator, hom_associator


@dataclass(frozen=True, eq=False)
class HomAkivisAlgebra:
    dim: int
    bracket: tuple[tuple[Element, ...], ...]
    ternary: tuple[tuple[tuple[Element, ...], ...], ...]
    twist: Matrix
    name: str | None = None
    _terms: tuple = field(init=False, repr=False)

    def __post_init__(self):
        n = self.dim
        bracket = tuple(tuple(Element(tuple(v)) for v in row) for row in self.bracket)
        ternary = tuple(
            tuple(tuple(Element(tuple(v)) for v in col) for col in row) for row in self.ternary
        )
        twist = as_matrix(self.twist)
        if len(bracket) != n or any(len(r) != n or any(v.dim != n for v in r) for r in bracket):
            raise DimensionError(f"bracket tensor must be {n}x{n}x{n}")
        if len(ternary) != n or any(
            len(r) != n or any(len(c) != n or any(v.dim != n for v in c) for c in r)
            for r in ternary
        ):
            raise DimensionError(f"ternary tensor must be {n}x{n}x{n}x{n}")
        if len(twist) != n or any(len(r) != n for r in twist):
            raise DimensionError(f"twist must be {n}x{n}")
        for i in range(n):
            for j in range(i, n):
                if not (bracket[i][j] + bracket[j][i]).is_zero():
                    raise ValueError(f"bracket is not skew-symmetric at (e{i + 1}, e{j + 1})")
        object.__setattr__(self, "bracket", bracket)
        object.__setattr__(self, "ternary", ternary)
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "_terms", sparse_terms(bracket))

    def _key(self):
        return (self.dim, self.bracket, self.ternary, self.twist, self.name)

    def __eq__(self, other):
        if not isinstance(other, HomAkivisAlgebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def bracket_of(self, u: Vector, v: Vector) -> Vector:
        return bilinear(self._terms, self.dim, u, v)

    def apply_twist(self, u: Vector) -> Vector:
        return mat_vec(self.twist, u)

    def perturbed(self, i: int, j: int, k: int, delta: Element) -> "HomAkivisAlgebra":
        """Copy with ``[e_i, e_j, e_k]`` shifted by ``delta``."""
        t = [[list(col) for col in row] for row in self.ternary]
        t[i][j][k] = t[i][j][k] + delta
        return HomAkivisAlgebra(self.dim, self.bracket, t, self.twist, name=self.name)


def commutator_bracket(A: HomAlgebra, x: Vector, y: Vector) -> Vector:
    return commutator(A, x, y)


def to_hom_akivis(A: HomAlgebra) -> HomAkivisAlgebra:
    n = A.dim
    e = [A.basis(i) for i in range(n)]
    bracket = [[commutator(A, e[i], e[j]) for j in range(n)] for i in range(n)]
    ternary = [
        [[hom_associator(A, e[i], e[j], e[k]) for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    return HomAkivisAlgebra(n, bracket, ternary, A.twist, name=A.name)


def check_hom_akivis_identity(K: HomAkivisAlgebra) -> CheckReport:
    """Hom-Jacobian of the bracket equals ``sum_cyc [x,y,z] - sum_cyc [y,x,z]``."""
    n = K.dim
    e = [Element.basis(n, i) for i in range(n)]
    te = [K.apply_twist(v) for v in e]
    b, t = K.bracket, K.ternary
    br = K.bracket_of

    def residual(i, j, k):
        jac = br(b[i][j], te[k]) + br(b[j][k], te[i]) + br(b[k][i], te[j])
        cyc = t[i][j][k] + t[j][k][i] + t[k][i][j]
        anti = t[j][i][k] + t[i][k][j] + t[k][j][i]
        return jac - (cyc - anti)

    return check_basis("hom-akivis", n, 3, residual)
