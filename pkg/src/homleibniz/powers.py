"""Right and left Hom-powers and the "for all x" statements about them.

All universal claims are decided at the generic element, so a verdict of
"holds" is a proof for the given algebra, and a failure comes with a small
integer point where the claim is false.
"""
from __future__ import annotations

from .algebra import CheckReport, Element, HomAlgebra, Vector, Witness
from .identities import check_left_hom_leibniz
from .symbolic import PolyElement, generic_element, lift, zero_witness

DEFAULT_MAX_N = 6


def right_hom_powers(A: HomAlgebra, x: Vector, n: int) -> list[Vector]:
    """``[x^1, ..., x^n]`` with ``x^k = x^(k-1) alpha^(k-2)(x)``."""
    if n < 1:
        raise ValueError(f"Hom-power exponent must be at least 1, got {n}")
    tower = [x]
    for k in range(2, n + 1):
        tower.append(A.product(tower[-1], A.apply_twist(x, k - 2)))
    return tower


def left_hom_powers(A: HomAlgebra, a: Vector, n: int) -> list[Vector]:
    """``[a^1, ..., a^n]`` with ``a^k = alpha^(k-2)(a) a^(k-1)``."""
    if n < 1:
        raise ValueError(f"Hom-power exponent must be at least 1, got {n}")
    tower = [a]
    for k in range(2, n + 1):
        tower.append(A.product(A.apply_twist(a, k - 2), tower[-1]))
    return tower


def right_hom_power(A: HomAlgebra, x: Vector, n: int) -> Vector:
    return right_hom_powers(A, x, n)[-1]


def left_hom_power(A: HomAlgebra, a: Vector, n: int) -> Vector:
    return left_hom_powers(A, a, n)[-1]


def ordinary_powers(A: HomAlgebra, x: Vector, n: int) -> list[Vector]:
    """Untwisted right powers ``x^(k+1) = x^k x``; the twist is ignored."""
    if n < 1:
        raise ValueError(f"power exponent must be at least 1, got {n}")
    tower = [x]
    for _ in range(2, n + 1):
        tower.append(A.product(tower[-1], x))
    return tower


def ordinary_power(A: HomAlgebra, x: Vector, n: int) -> Vector:
    return ordinary_powers(A, x, n)[-1]


def _symbolic(identity: str, residual: PolyElement, detail: str | None = None) -> CheckReport | None:
    """Failing report for a nonzero residual, None if it vanishes identically."""
    point = zero_witness(residual)
    if point is None:
        return None
    return CheckReport(identity, False, Witness("point", point.coords),
                       residual.evaluate(point.coords), detail)


def _first_failure(identity: str, cases) -> CheckReport:
    for detail, residual in cases:
        report = _symbolic(identity, residual, detail)
        if report is not None:
            return report
    return CheckReport(identity, True)


def _untwisted_name(A: HomAlgebra, identity: str) -> str:
    if not A.twist_is_identity:
        return f"{identity} [warning: twist is not the identity]"
    return identity


def _leibniz_name(A: HomAlgebra, identity: str) -> str:
    if not check_left_hom_leibniz(A).holds:
        return f"{identity} [warning: not left Hom-Leibniz]"
    return identity


def check_nth_hom_power_associative(A: HomAlgebra, n: int) -> CheckReport:
    """``x^n = alpha^(n-i-1)(x^i) alpha^(i-1)(x^(n-i))`` for every ``i`` in ``1..n-1``."""
    if n < 2:
        raise ValueError(f"Hom-power associativity needs n >= 2, got {n}")
    x = generic_element(A)
    p = [None] + right_hom_powers(A, x, n)

    def cases():
        for i in range(1, n):
            rhs = A.product(A.apply_twist(p[i], n - i - 1), A.apply_twist(p[n - i], i - 1))
            yield f"i={i}", p[n] - rhs

    return _first_failure(f"hom-power-associative-{n}", cases())


def check_up_to_nth_hom_power_associative(A: HomAlgebra, n: int) -> list[CheckReport]:
    return [check_nth_hom_power_associative(A, k) for k in range(2, n + 1)]


def check_hom_power_associative(A: HomAlgebra) -> CheckReport:
    """``x^2 alpha(x) = alpha(x) x^2`` and ``x^4 = alpha(x^2) alpha(x^2)``.

    For multiplicative Hom-algebras these two conditions are equivalent to
    Hom-power associativity in every degree.
    """
    x = generic_element(A)
    _, x2, _, x4 = right_hom_powers(A, x, 4)
    ax, ax2 = A.apply_twist(x), A.apply_twist(x2)
    return _first_failure("hom-power-associative", [
        ("x^2 alpha(x) = alpha(x) x^2", A.product(x2, ax) - A.product(ax, x2)),
        ("x^4 = alpha(x^2) alpha(x^2)", x4 - A.product(ax2, ax2)),
    ])


def check_cube_vanishes(A: HomAlgebra) -> CheckReport:
    """``x^3 = 0`` for the right Hom-cube."""
    x = generic_element(A)
    return _first_failure(_leibniz_name(A, "cube-vanishes"), [(None, right_hom_power(A, x, 3))])


def check_twisted_cube_criterion(A: HomAlgebra) -> CheckReport:
    """``alpha(x) x^2 = 0``; for Hom-Leibniz algebras this decides Hom-power associativity."""
    x = generic_element(A)
    resid = A.product(A.apply_twist(x), A.product(x, x))
    return _first_failure(_leibniz_name(A, "twisted-cube-criterion"), [(None, resid)])


def check_third_power_lemma(A: HomAlgebra) -> tuple[CheckReport, CheckReport]:
    """The cube vanishes, and whether ``alpha(x) x^2`` does.

    On a left Hom-Leibniz algebra the first always holds and the second
    agrees with ``check_nth_hom_power_associative(A, 3)``.
    """
    return check_cube_vanishes(A), check_twisted_cube_criterion(A)


def check_right_powers_vanish(A: HomAlgebra, n_max: int = DEFAULT_MAX_N) -> CheckReport:
    """``x^k = 0`` for ``3 <= k <= n_max``."""
    if n_max < 3:
        raise ValueError(f"n_max must be at least 3, got {n_max}")
    tower = right_hom_powers(A, generic_element(A), n_max)
    return _first_failure(_leibniz_name(A, "right-powers-vanish"),
                          ((f"k={k}", tower[k - 1]) for k in range(3, n_max + 1)))


def check_left_powers_annihilate(A: HomAlgebra, n_max: int = DEFAULT_MAX_N) -> CheckReport:
    """``a^k alpha(z) = 0`` for left Hom-powers, ``2 <= k <= n_max``, every z.

    Linear in ``z``, so it is enough to take ``z`` over the basis.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    a = generic_element(A)
    tower = left_hom_powers(A, a, n_max)
    targets = [_lift_basis(A, j) for j in range(A.dim)]

    def cases():
        for k in range(2, n_max + 1):
            for j, tz in enumerate(targets):
                yield f"k={k}, z=e{j + 1}", A.product(tower[k - 1], tz)

    return _first_failure(_leibniz_name(A, "left-powers-annihilate"), cases())


def _lift_basis(A: HomAlgebra, j: int, twisted: bool = True) -> PolyElement:
    v = A.apply_twist(A.basis(j)) if twisted else A.basis(j)
    return lift(v, A.dim)


def check_left_cube_annihilates(A: HomAlgebra, m_max: int = DEFAULT_MAX_N) -> CheckReport:
    """Untwisted: ``b z = 0`` for ``b = x(x(...(x x)))`` with ``2 <= m <= m_max`` factors.

    The ``m = 3`` case is ``(x x^2) z = 0``. Intended for ordinary left
    Leibniz algebras; the twist is ignored and a warning attached otherwise.
    """
    if m_max < 3:
        raise ValueError(f"m_max must be at least 3, got {m_max}")
    x = generic_element(A)
    basis = [_lift_basis(A, j, twisted=False) for j in range(A.dim)]

    def cases():
        b = x
        for m in range(2, m_max + 1):
            b = A.product(x, b)
            for j, z in enumerate(basis):
                yield f"m={m}, z=e{j + 1}", A.product(b, z)

    name = _untwisted_name(A, "left-cube-annihilates")
    if A.twist_is_identity:
        name = _leibniz_name(A, name)
    return _first_failure(name, cases())


def check_power_associative(A: HomAlgebra) -> CheckReport:
    """Albert's criterion ``x^2 x = x x^2`` and ``x^4 = x^2 x^2`` for the untwisted product."""
    x = generic_element(A)
    x2 = A.product(x, x)
    x4 = A.product(A.product(x2, x), x)
    return _first_failure(_untwisted_name(A, "power-associative"), [
        ("x^2 x = x x^2", A.product(x2, x) - A.product(x, x2)),
        ("x^4 = x^2 x^2", x4 - A.product(x2, x2)),
    ])


def check_power_associative_direct(A: HomAlgebra, n_max: int = DEFAULT_MAX_N) -> CheckReport:
    """``x^n = x^(n-i) x^i`` for all ``2 <= n <= n_max`` and ``1 <= i < n``."""
    x = generic_element(A)
    p = [None] + ordinary_powers(A, x, n_max)

    def cases():
        for n in range(2, n_max + 1):
            for i in range(1, n):
                yield f"n={n}, i={i}", p[n] - A.product(p[n - i], p[i])

    return _first_failure(_untwisted_name(A, "power-associative-direct"), cases())


def power_report(A: HomAlgebra, n_max: int = DEFAULT_MAX_N) -> list[CheckReport]:
    """Every power-related verdict for ``A``, in a fixed order."""
    reports = check_up_to_nth_hom_power_associative(A, n_max)
    reports.append(check_hom_power_associative(A))
    reports.extend(check_third_power_lemma(A))
    reports.append(check_right_powers_vanish(A, max(n_max, 3)))
    reports.append(check_left_powers_annihilate(A, n_max))
    if A.twist_is_identity:
        reports.append(check_left_cube_annihilates(A, n_max))
        reports.append(check_power_associative(A))
    return reports


def element_tower(A: HomAlgebra, x: Element, n: int, left: bool = False) -> list[Element]:
    return (left_hom_powers if left else right_hom_powers)(A, x, n)
