import pytest

from homleibniz.algebra import Element, HomAlgebra, diagonal_matrix, identity_matrix
from homleibniz.constructions import (
    VERDICT_NAMES,
    GenerationError,
    NotEndomorphismError,
    catalog,
    catalog_entry,
    fuzz_corpus,
    is_algebra_endomorphism,
    random_hom_leibniz,
    recompute_verdicts,
    yau_twist,
)
from homleibniz.identities import check_hom_lie_admissible, check_left_hom_leibniz
from homleibniz.powers import check_left_powers_annihilate, check_right_powers_vanish
from oracle import Oracle

E = Element.of


def test_endomorphism_examples(L2):
    assert is_algebra_endomorphism(L2, identity_matrix(2)).holds
    assert is_algebra_endomorphism(L2, diagonal_matrix([4, 2])).holds
    r = is_algebra_endomorphism(L2, diagonal_matrix([1, 2]))
    assert not r.holds and r.witness.data == (1, 1)
    with pytest.raises(ValueError):
        is_algebra_endomorphism(L2, identity_matrix(3))


def test_yau_twist_examples(L2, A2):
    assert yau_twist(L2, identity_matrix(2), name="L2").structure == L2.structure
    B = yau_twist(L2, diagonal_matrix([4, 2]))
    assert B.product(E(0, 1), E(0, 1)) == E(4, 0)
    assert B.twist == diagonal_matrix([4, 2])
    assert B.structure == A2.structure and B.twist == A2.twist


def test_yau_twist_rejects_non_endomorphism(L2, A2):
    with pytest.raises(NotEndomorphismError, match=r"\(e2, e2\)") as info:
        yau_twist(L2, diagonal_matrix([1, 2]))
    assert info.value.report.witness.data == (1, 1)
    with pytest.raises(ValueError, match="identity twist"):
        yau_twist(A2, identity_matrix(2))


def test_yau_twist_preserves_leibniz(entries):
    maps = {
        "L2": [diagonal_matrix([4, 2]), diagonal_matrix([1, -1]), [[9, 2], [0, 3]]],
        "L3": [diagonal_matrix([2, 4, 8]), diagonal_matrix([-1, 1, -1]), [[1, 0, 0], [3, 1, 0], [0, 3, 1]]],
        "Heisenberg": [diagonal_matrix([1, 2, 2]), diagonal_matrix([2, 3, 6])],
    }
    for name, ms in maps.items():
        L = entries[name].algebra
        for M in ms:
            assert is_algebra_endomorphism(L, M).holds, (name, M)
            assert check_left_hom_leibniz(yau_twist(L, M)).holds, (name, M)


def test_catalog_names_and_size():
    names = [e.name for e in catalog()]
    assert len(names) == len(set(names)) == 12
    for required in ("Zero1", "Zero2", "Zero3", "L2", "L3", "A2", "NonLeib", "Hemi4"):
        assert required in names
    with pytest.raises(KeyError):
        catalog_entry("nope")


def test_catalog_regression(entries):
    for e in entries.values():
        assert set(e.expected) <= set(VERDICT_NAMES)
        recomputed = recompute_verdicts(e.algebra)
        stored = {k: v for k, v in e.expected.items() if v is not None}
        assert {k: recomputed[k] for k in stored} == stored, e.name
        oracle = {**Oracle(e.algebra).verdicts(), **Oracle(e.algebra).power_verdicts()}
        for name, value in stored.items():
            if name in oracle:
                assert oracle[name] == value, (e.name, name)


def test_catalog_covers_both_admissibility_verdicts(entries):
    assert check_hom_lie_admissible(entries["A2"].algebra).holds
    assert not check_hom_lie_admissible(entries["Hemi4-twisted"].algebra).holds


def test_generator_is_deterministic():
    a, b = random_hom_leibniz(42, 2), random_hom_leibniz(42, 2)
    assert a == b and a.structure == b.structure and a.twist == b.twist
    assert fuzz_corpus(5) == fuzz_corpus(5)


def test_generator_output_is_nontrivial(fuzzed):
    assert len(fuzzed) == 50
    assert {A.dim for A in fuzzed} == {2, 3, 4}
    for A in fuzzed:
        assert not A.twist_is_identity
        assert any(any(c != 0 for c in row) for row in A.twist)


def test_generated_algebras_satisfy_power_identities(fuzzed):
    for A in fuzzed:
        assert check_left_hom_leibniz(A).holds, A.name
        assert check_right_powers_vanish(A).holds, A.name
        assert check_left_powers_annihilate(A).holds, A.name


@pytest.mark.parametrize("dim", [1, 4])
def test_generator_dim_bounds(dim):
    A = random_hom_leibniz(3, dim)
    assert A.dim == dim and check_left_hom_leibniz(A).holds


@pytest.mark.parametrize("dim", [0, 5])
def test_generator_rejects_bad_dim(dim):
    with pytest.raises(ValueError):
        random_hom_leibniz(0, dim)


def test_generator_budget_exhaustion():
    with pytest.raises(GenerationError, match="within budget"):
        random_hom_leibniz(1, 3, max_structures=0)


def test_unchecked_algebras_are_not_in_catalog():
    # every catalog entry passes the multiplicativity guard of the default constructor
    for e in catalog():
        A = e.algebra
        HomAlgebra(A.dim, A.structure, A.twist)
