from itertools import product

import pytest

from condlat.errors import BudgetExhausted, TooLarge
from condlat.lattice import boolean_algebra, chain, find_isomorphism
from condlat.ops import (
    Axiom,
    BINARY_AXIOMS,
    ConditionalOp,
    PRECONDITIONAL_AXIOMS,
    check_axioms,
)
from condlat.search import (
    INVENTORY,
    SearchSpec,
    enumerate_lattices,
    find_witness,
    minimal_witness,
)

P = PRECONDITIONAL_AXIOMS


def brute_force(lattice, require, forbid):
    """Oracle: enumerate every table and filter by full axiom checks."""
    n = lattice.n
    out = []
    for cells in product(range(n), repeat=n * n):
        rows = tuple(cells[i * n:(i + 1) * n] for i in range(n))
        rep = check_axioms(ConditionalOp(lattice, rows), tuple(require) + tuple(forbid))
        if all(rep[ax].holds for ax in require) and not any(
            rep[ax].holds for ax in forbid
        ):
            out.append(rows)
    return sorted(out)


def test_spec_validation():
    c2 = chain(2)
    with pytest.raises(ValueError):
        SearchSpec(c2, require=(Axiom.P1,), forbid=(Axiom.P1,))
    with pytest.raises(ValueError):
        SearchSpec(c2, require=(Axiom.PC_ANTI,))
    with pytest.raises(TooLarge):
        SearchSpec(chain(7))
    with pytest.raises(ValueError):
        SearchSpec(c2, fixed_entries=((0, 0, 5),))


def test_unconstrained_search_finds_all_tables():
    c2 = chain(2)
    res = find_witness(SearchSpec(c2, find_all=True))
    assert len(res.witnesses) == 16
    assert res.exhausted


def test_forbid_p1_unique_witness():
    res = find_witness(SearchSpec(chain(2), require=P[1:], forbid=(P[0],),
                                  find_all=True))
    assert [op.table for op in res.witnesses] == [((1, 1), (1, 1))]
    assert res.exhausted


def test_require_core_and_mp_forbid_wm_unique_witness():
    res = find_witness(SearchSpec(chain(2), require=P + (Axiom.MP,),
                                  forbid=(Axiom.WM,), find_all=True))
    assert [op.table for op in res.witnesses] == [((0, 0), (0, 1))]


def test_first_witness_stops_early():
    res = find_witness(SearchSpec(chain(2)))
    assert res.found and len(res.witnesses) == 1
    assert not res.exhausted or res.nodes > 0


def test_fixed_entries_are_honored():
    res = find_witness(SearchSpec(chain(2), require=P,
                                  fixed_entries=((0, 0, 1),), find_all=True))
    assert res.witnesses
    for op in res.witnesses:
        assert op.table[0][0] == 1
        assert check_axioms(op, P).ok


def test_budget_exhaustion_carries_partial_result():
    c3 = chain(3)
    with pytest.raises(BudgetExhausted) as info:
        find_witness(SearchSpec(c3, find_all=True, node_budget=50))
    partial = info.value.partial
    assert partial is not None
    assert not partial.exhausted
    assert partial.witnesses  # what was found before the cutoff survives
    for op in partial.witnesses:
        assert len(op.table) == 3


@pytest.mark.parametrize(
    "require,forbid",
    [
        (P, ()),
        (P, (Axiom.MP,)),
        (P + (Axiom.MP,), (Axiom.WM,)),
        ((), (Axiom.P1, Axiom.P2)),
        ((Axiom.ID, Axiom.NORM), (Axiom.FLAT,)),
        ((Axiom.NEGIMP,), (Axiom.INV,)),
    ],
    ids=["core", "core-no-mp", "mp-no-wm", "neither-p1-p2", "id-norm-no-flat",
         "negimp-no-inv"],
)
def test_search_matches_brute_force_on_2chain(require, forbid):
    c2 = chain(2)
    res = find_witness(SearchSpec(c2, require=require, forbid=forbid,
                                  find_all=True))
    assert sorted(op.table for op in res.witnesses) == brute_force(
        c2, require, forbid
    )
    assert res.exhausted


def test_search_matches_brute_force_on_3chain_spot():
    c3 = chain(3)
    res = find_witness(SearchSpec(c3, require=P + (Axiom.MP, Axiom.WM),
                                  find_all=True))
    assert sorted(op.table for op in res.witnesses) == brute_force(
        c3, P + (Axiom.MP, Axiom.WM), ()
    )


def test_witnesses_are_reverified():
    # every emitted table must pass the full checker, not just the
    # search's incremental bookkeeping
    res = find_witness(SearchSpec(chain(2), require=(Axiom.FLAT,), find_all=True))
    for op in res.witnesses:
        assert check_axioms(op, (Axiom.FLAT,)).ok


def test_enumerate_lattices_counts():
    assert [len(enumerate_lattices(n)) for n in range(1, 6)] == [1, 1, 1, 2, 5]


def test_inventory_matches_enumeration_up_to_isomorphism():
    by_size = {}
    for label, L in INVENTORY:
        by_size.setdefault(L.n, []).append(L)
    for n in range(1, 6):
        generated = enumerate_lattices(n)
        embedded = by_size.get(n, [])
        assert len(embedded) == len(generated)
        for L in embedded:
            assert any(find_isomorphism(L, G) is not None for G in generated)
        # embedded lattices of one size are pairwise non-isomorphic
        for i, A in enumerate(embedded):
            for B in embedded[i + 1:]:
                assert find_isomorphism(A, B) is None


MINIMAL = {
    Axiom.P1: ("chain2", ((1, 1), (1, 1))),
    Axiom.P2: ("chain2", ((0, 0), (0, 0))),
    Axiom.P3: ("chain2", ((0, 1), (0, 1))),
    Axiom.P4: ("chain3", ((1, 1, 1), (2, 1, 1), (0, 1, 2))),
    Axiom.P5: ("chain3", ((0, 0, 0), (1, 1, 1), (0, 1, 2))),
}


@pytest.mark.parametrize("axiom", P, ids=lambda a: a.value)
def test_minimal_witness_per_core_axiom(axiom):
    mw = minimal_witness(tuple(a for a in P if a is not axiom), (axiom,))
    label, table = MINIMAL[axiom]
    assert mw.found and mw.label == label
    assert mw.op.table == table
    # the lattices below the witness were searched to exhaustion
    for lab, _nodes, exhausted in mw.trail[:-1]:
        assert exhausted


def test_minimal_witness_exhausts_inventory_on_impossible_profile():
    # MP and WM force the top row to the identity, so P1 cannot fail
    mw = minimal_witness((Axiom.MP, Axiom.WM), (Axiom.P1,))
    assert not mw.found and mw.op is None and mw.label is None
    assert len(mw.trail) == len(INVENTORY)
    assert all(exhausted for _label, _nodes, exhausted in mw.trail)


def test_negimp_stack_on_b4_pinned():
    B = boolean_algebra(("p", "q"))
    res = find_witness(SearchSpec(
        B,
        require=P + (Axiom.MP, Axiom.ID, Axiom.NORM, Axiom.NEGIMP),
        forbid=(Axiom.WM,),
    ))
    assert res.found
    assert res.witnesses[0].table == ((3, 3, 3, 3), (0, 3, 0, 3),
                                      (1, 1, 3, 3), (0, 1, 2, 3))
    assert res.nodes == 48
