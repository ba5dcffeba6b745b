import pytest

from condlat.errors import (
    MissingBound,
    NotALattice,
    NotAPartialOrder,
    TooLarge,
)
from condlat.lattice import (
    FiniteLattice,
    antichain_bounded,
    boolean_algebra,
    chain,
    find_isomorphism,
)


def test_chain_order_and_tables():
    L = chain(4)
    assert (L.bottom, L.top) == (0, 3)
    for a in range(4):
        for b in range(4):
            assert L.leq(a, b) == (a <= b)
            assert L.meet(a, b) == min(a, b)
            assert L.join(a, b) == max(a, b)
    assert L.covers() == [(0, 1), (1, 2), (2, 3)]


def test_singleton_is_accepted():
    L = chain(1)
    assert L.bottom == L.top == 0
    assert L.meet(0, 0) == L.join(0, 0) == 0


def test_boolean_algebra_is_subset_order():
    B = boolean_algebra(("p", "q", "r"))
    assert B.n == 8
    for a in range(8):
        for b in range(8):
            assert B.leq(a, b) == (a & ~b == 0)
            assert B.meet(a, b) == a & b
            assert B.join(a, b) == a | b
    assert B.is_boolean()
    assert B.complement_map() == tuple(7 ^ a for a in range(8))
    assert B.names[0] == "0" and B.names[7] == "pqr"


def test_antichain_m3_not_distributive():
    M3 = antichain_bounded(("a", "b", "c"))
    assert M3.n == 5
    assert M3.atoms() == [1, 2, 3] and M3.coatoms() == [1, 2, 3]
    assert not M3.is_distributive()
    a, b, c = M3.distributivity_witness()
    lhs = M3.meet(a, M3.join(b, c))
    rhs = M3.join(M3.meet(a, b), M3.meet(a, c))
    assert lhs != rhs


def test_pentagon_not_distributive_but_complemented():
    N5 = FiniteLattice.from_cover(
        ("0", "a", "b", "c", "1"), [(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)]
    )
    assert not N5.is_distributive()
    assert N5.complement_map() is not None
    assert not N5.is_boolean()


def test_rejections_have_specific_types():
    with pytest.raises(NotAPartialOrder):
        FiniteLattice.from_leq(("a", "b"), [(0, 1), (1, 0)])
    with pytest.raises(NotAPartialOrder):
        FiniteLattice(("a", "a"), (0, 0))
    with pytest.raises(MissingBound):
        # two incomparable points: no bottom
        FiniteLattice(("a", "b"), (1, 2))
    with pytest.raises(NotALattice):
        # two middle antichains stacked: meets of coatoms do not exist
        FiniteLattice.from_cover(
            ("0", "a", "b", "c", "d", "1"),
            [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
        )
    with pytest.raises(TooLarge):
        chain(65)
    with pytest.raises(NotALattice):
        FiniteLattice((), ())


def test_meet_join_masks():
    B = boolean_algebra(("p", "q"))
    assert B.meet_mask(0) == B.top
    assert B.join_mask(0) == B.bottom
    assert B.meet_mask(0b1010) == B.meet(1, 3)
    assert B.join_mask(0b0110) == B.join(1, 2)


def test_index_lookup():
    L = chain(3, ("bot", "mid", "top"))
    assert L.index("mid") == 1
    with pytest.raises(ValueError):
        L.index("nope")


def test_from_leq_takes_closure():
    # only the generating pairs, no transitivity spelled out
    L = FiniteLattice.from_leq(("0", "a", "1"), [(0, 1), (1, 2)])
    assert L.leq(0, 2)
    assert L.top == 2


def test_up_down_masks_are_consistent():
    M3 = antichain_bounded(("x", "y", "z"))
    for a in range(M3.n):
        for b in range(M3.n):
            assert (M3.up_mask(a) >> b & 1) == M3.leq(a, b)
            assert (M3.down_mask(a) >> b & 1) == M3.leq(b, a)


def test_find_isomorphism_respects_order_and_tables():
    B = boolean_algebra(("p", "q"))
    # same shape, shuffled names
    C = FiniteLattice.from_cover(
        ("bot", "left", "right", "top"), [(0, 1), (0, 2), (1, 3), (2, 3)]
    )
    phi = find_isomorphism(B, C)
    assert phi is not None
    assert phi[B.bottom] == C.bottom and phi[B.top] == C.top
    assert find_isomorphism(B, chain(4)) is None

    # table-respecting map must exist for meet against itself
    t = B.meet_table
    assert find_isomorphism(B, B, t, t) is not None
    # but not from meet onto join
    assert find_isomorphism(B, B, t, B.join_table) is None
