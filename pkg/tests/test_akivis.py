import pytest

from homleibniz.akivis import (
    HomAkivisAlgebra,
    check_hom_akivis_identity,
    commutator_bracket,
    to_hom_akivis,
)
from homleibniz.algebra import Element, check_multiplicative, zero_algebra
from homleibniz.identities import check_left_hom_leibniz, cyclic_product_sum

E = Element.of


def test_zero_algebra_gives_trivial_structure():
    K = to_hom_akivis(zero_algebra(3))
    assert all(v.is_zero() for row in K.bracket for v in row)
    assert all(v.is_zero() for row in K.ternary for col in row for v in col)
    assert check_hom_akivis_identity(K).holds


def test_a2_has_vanishing_bracket_and_ternary(A2):
    # e2 e2 is the only nonzero product, so commutators and associators vanish
    K = to_hom_akivis(A2)
    assert all(v.is_zero() for row in K.bracket for v in row)
    assert all(v.is_zero() for row in K.ternary for col in row for v in col)
    assert K.twist == A2.twist


def test_l3_structure(L3):
    K = to_hom_akivis(L3)
    e = [L3.basis(i) for i in range(3)]
    assert K.bracket[0][1] == E(0, 0, 1) and K.bracket[1][0] == E(0, 0, -1)
    assert K.bracket_of(e[0], e[1]) == commutator_bracket(L3, e[0], e[1])
    assert K.ternary[0][0][0] == E(0, 0, -1)
    assert check_hom_akivis_identity(K).holds


def test_identity_on_multiplicative_catalog(entries):
    for e in entries.values():
        assert check_multiplicative(e.algebra).holds
        assert check_hom_akivis_identity(to_hom_akivis(e.algebra)).holds, e.name


def test_identity_on_fuzz_and_arbitrary(fuzzed, arbitrary):
    # the identity is formal: it holds for any bilinear product and any twist
    for A in fuzzed + arbitrary:
        assert check_hom_akivis_identity(to_hom_akivis(A)).holds, A.name


def test_corrupted_ternary_is_detected(L3, heis):
    for A in (L3, heis, zero_algebra(3)):
        K = to_hom_akivis(A).perturbed(0, 1, 2, E(1, 0, 0))
        r = check_hom_akivis_identity(K)
        assert not r.holds
        assert r.witness.kind == "basis" and r.witness.data == (0, 1, 2)
        # residual is J - (cyclic - anticyclic); bumping a cyclic slot shifts it by -delta
        assert r.residual == E(-1, 0, 0)


def test_repeated_index_corruption_is_invisible(L3):
    # [x,y,z] enters only through its antisymmetrization in the first two
    # slots summed cyclically, so t[e1,e1,e2] cancels in every basis triple
    K = to_hom_akivis(L3).perturbed(0, 0, 1, E(5, -2, 1))
    assert check_hom_akivis_identity(K).holds


def test_bracket_must_be_skew():
    n = 2
    zero = [[[E(0, 0) for _ in range(n)] for _ in range(n)] for _ in range(n)]
    bracket = [[E(0, 0), E(1, 0)], [E(1, 0), E(0, 0)]]
    with pytest.raises(ValueError, match="not skew-symmetric"):
        HomAkivisAlgebra(n, bracket, zero, [[1, 0], [0, 1]])


def test_sigma_difference_equals_cyclic_product_sum(hom_leibniz_instances):
    # on Hom-Leibniz algebras the right-hand side collapses to the cyclic sum of products
    for A in hom_leibniz_instances:
        assert check_left_hom_leibniz(A).holds
        K = to_hom_akivis(A)
        t = K.ternary
        n = A.dim
        e = [A.basis(i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    rhs = (t[i][j][k] + t[j][k][i] + t[k][i][j]) - (t[j][i][k] + t[i][k][j] + t[k][j][i])
                    assert rhs == cyclic_product_sum(A, e[i], e[j], e[k]), (A.name, i, j, k)
