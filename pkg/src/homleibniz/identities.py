"""Exact decision of the trilinear Hom-algebra identities.

Every identity here is linear in each of its arguments, because the
product is bilinear and the twist is linear, so evaluating on all basis
triples decides it over the whole algebra. Checkers always run, even when
the algebra does not satisfy the intended hypothesis; in that case the
report name carries a warning.
"""
from __future__ import annotations

from .algebra import CheckReport, HomAlgebra, Vector, check_basis


def _guarded(A: HomAlgebra, identity: str) -> str:
    if not check_left_hom_leibniz(A).holds:
        return f"{identity} [warning: not left Hom-Leibniz]"
    return identity


class _Basis:
    """Cached basis vectors, their images under the twist, and basis products."""

    def __init__(self, A: HomAlgebra):
        self.A = A
        self.e = [A.basis(i) for i in range(A.dim)]
        self.te = [A.apply_twist(v) for v in self.e]
        self.p = A.structure


def hom_associator(A: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """``as(x, y, z) = (x y) alpha(z) - alpha(x) (y z)``."""
    return A.product(A.product(x, y), A.apply_twist(z)) - A.product(A.apply_twist(x), A.product(y, z))


def commutator(A: HomAlgebra, x: Vector, y: Vector) -> Vector:
    return A.product(x, y) - A.product(y, x)


def commutator_algebra(A: HomAlgebra) -> HomAlgebra:
    """The algebra with product ``[x, y] = x y - y x`` and the same twist."""
    n = A.dim
    structure = tuple(
        tuple(A.structure[i][j] - A.structure[j][i] for j in range(n)) for i in range(n)
    )
    return HomAlgebra(n, structure, A.twist, name=f"[{A.name or 'A'}]",
                      basis_names=A.basis_names, check=False)


def hom_jacobian(A: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """Cyclic sum ``[[x,y],alpha(z)] + [[y,z],alpha(x)] + [[z,x],alpha(y)]`` using A's product as bracket."""
    tw = A.apply_twist
    br = A.product
    return br(br(x, y), tw(z)) + br(br(y, z), tw(x)) + br(br(z, x), tw(y))


def cyclic_product_sum(A: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """``(x y) alpha(z) + (y z) alpha(x) + (z x) alpha(y)``."""
    tw = A.apply_twist
    pr = A.product
    return pr(pr(x, y), tw(z)) + pr(pr(y, z), tw(x)) + pr(pr(z, x), tw(y))


def left_hom_leibniz_residual(A: HomAlgebra, x, y, z) -> Vector:
    """``alpha(x)(y z) - (x y) alpha(z) - alpha(y)(x z)``."""
    tw, pr = A.apply_twist, A.product
    return pr(tw(x), pr(y, z)) - pr(pr(x, y), tw(z)) - pr(tw(y), pr(x, z))


def right_hom_leibniz_residual(A: HomAlgebra, x, y, z) -> Vector:
    """``(x y) alpha(z) - (x z) alpha(y) - alpha(x)(y z)``."""
    tw, pr = A.apply_twist, A.product
    return pr(pr(x, y), tw(z)) - pr(pr(x, z), tw(y)) - pr(tw(x), pr(y, z))


def check_hom_associative(A: HomAlgebra) -> CheckReport:
    b = _Basis(A)
    return check_basis("hom-associative", A.dim, 3,
                       lambda i, j, k: hom_associator(A, b.e[i], b.e[j], b.e[k]))


def check_left_hom_leibniz(A: HomAlgebra) -> CheckReport:
    pr = A.product
    b = _Basis(A)

    def residual(i, j, k):
        return (pr(b.te[i], b.p[j][k]) - pr(b.p[i][j], b.te[k]) - pr(b.te[j], b.p[i][k]))

    return check_basis("left-hom-leibniz", A.dim, 3, residual)


def check_right_hom_leibniz(A: HomAlgebra) -> CheckReport:
    pr = A.product
    b = _Basis(A)

    def residual(i, j, k):
        return (pr(b.p[i][j], b.te[k]) - pr(b.p[i][k], b.te[j]) - pr(b.te[i], b.p[j][k]))

    return check_basis("right-hom-leibniz", A.dim, 3, residual)


def check_skew_symmetric(A: HomAlgebra) -> CheckReport:
    return check_basis("skew", A.dim, 2, lambda i, j: A.structure[i][j] + A.structure[j][i])


def check_hom_jacobi(A: HomAlgebra) -> CheckReport:
    b = _Basis(A)
    return check_basis("hom-jacobi", A.dim, 3,
                       lambda i, j, k: hom_jacobian(A, b.e[i], b.e[j], b.e[k]))


def check_associator_form(A: HomAlgebra) -> CheckReport:
    """``as(x, y, z) = -alpha(y)(x z)``, a restatement of the left Hom-Leibniz identity."""
    b = _Basis(A)

    def residual(i, j, k):
        return hom_associator(A, b.e[i], b.e[j], b.e[k]) + A.product(b.te[j], b.p[i][k])

    return check_basis("associator-form", A.dim, 3, residual)


def check_anticommutator_annihilates(A: HomAlgebra) -> CheckReport:
    """``(x y + y x) alpha(z) = 0``."""
    b = _Basis(A)

    def residual(i, j, k):
        return A.product(b.p[i][j] + b.p[j][i], b.te[k])

    return check_basis(_guarded(A, "anticommutator-annihilates"), A.dim, 3, residual)


def check_bracket_derivation(A: HomAlgebra) -> CheckReport:
    """``alpha(x)[y, z] = [x y, alpha(z)] + [alpha(y), x z]`` with the commutator bracket."""
    b = _Basis(A)
    pr = A.product

    def residual(i, j, k):
        lhs = pr(b.te[i], b.p[j][k] - b.p[k][j])
        rhs = commutator(A, b.p[i][j], b.te[k]) + commutator(A, b.te[j], b.p[i][k])
        return lhs - rhs

    return check_basis(_guarded(A, "bracket-derivation"), A.dim, 3, residual)


def check_jacobian_cyclic_form(A: HomAlgebra) -> CheckReport:
    """Hom-Jacobian of the commutator bracket equals ``sum_cyc (x y) alpha(z)``."""
    C = commutator_algebra(A)
    b = _Basis(A)
    br, pr, c = C.product, A.product, C.structure

    def residual(i, j, k):
        jac = br(c[i][j], b.te[k]) + br(c[j][k], b.te[i]) + br(c[k][i], b.te[j])
        cyc = pr(b.p[i][j], b.te[k]) + pr(b.p[j][k], b.te[i]) + pr(b.p[k][i], b.te[j])
        return jac - cyc

    return check_basis(_guarded(A, "jacobian-cyclic-form"), A.dim, 3, residual)


def check_hom_lie_admissible(A: HomAlgebra) -> CheckReport:
    """For Hom-Leibniz algebras: admissible iff ``sum_cyc (x y) alpha(z) = 0``.

    Admissible means the commutator bracket with the same twist is Hom-Lie;
    compare with ``check_hom_jacobi(commutator_algebra(A))``.
    """
    b = _Basis(A)
    pr = A.product
    return check_basis(_guarded(A, "hom-lie-admissible"), A.dim, 3,
                       lambda i, j, k: pr(b.p[i][j], b.te[k]) + pr(b.p[j][k], b.te[i]) + pr(b.p[k][i], b.te[j]))


CHECKS = {
    "hom-associative": check_hom_associative,
    "left-hom-leibniz": check_left_hom_leibniz,
    "right-hom-leibniz": check_right_hom_leibniz,
    "skew": check_skew_symmetric,
    "hom-jacobi": check_hom_jacobi,
    "associator-form": check_associator_form,
    "anticommutator-annihilates": check_anticommutator_annihilates,
    "bracket-derivation": check_bracket_derivation,
    "jacobian-cyclic-form": check_jacobian_cyclic_form,
    "hom-lie-admissible": check_hom_lie_admissible,
}
