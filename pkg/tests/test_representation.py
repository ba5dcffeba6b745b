import pytest

from condlat import catalog
from condlat.errors import NotAPreconditional
from condlat.ops import ConditionalOp
from condlat.representation import (
    build_fi_space,
    build_pair_frame,
    check_space_conditions,
    consonant,
    open_sets,
    verify_fi_embedding,
    verify_pair_embedding,
)

PRECONDITIONALS = catalog.preconditional_entries()


def test_preconditional_subcatalog_shape():
    names = [e.name for e in PRECONDITIONALS]
    assert len(names) == 14
    assert "residual-3chain" in names and "sasaki-twin-peaks" in names
    assert "const-top-2chain" not in names


def test_build_pair_frame_requires_the_core_axioms():
    bad = catalog.entry("antitone-step-3chain").conditional
    with pytest.raises(NotAPreconditional):
        build_pair_frame(bad.lattice, bad)


def test_pair_points_are_the_conditional_image():
    e = catalog.entry("residual-3chain")
    pf = build_pair_frame(e.lattice, e.conditional)
    T = e.conditional.table
    expect = sorted({(x, T[x][y]) for x in range(3) for y in range(3)})
    assert pf.points == tuple(expect)
    # relation: (a,b) -> (c,d) iff c is not below b
    for i, (_a, b) in enumerate(pf.points):
        for j, (c, _d) in enumerate(pf.points):
            assert pf.frame.related(i, j) == (not e.lattice.leq(c, b))


@pytest.mark.parametrize("entry", PRECONDITIONALS, ids=lambda e: e.name)
def test_pair_embedding_holds_catalog_wide(entry):
    pf = build_pair_frame(entry.lattice, entry.conditional)
    rep = verify_pair_embedding(pf)
    assert rep.ok
    assert rep.fixpoint_count == entry.lattice.n
    assert rep.mapping is not None and len(set(rep.mapping)) == entry.lattice.n


@pytest.mark.parametrize("entry", PRECONDITIONALS, ids=lambda e: e.name)
def test_fi_embedding_holds_catalog_wide(entry):
    space = build_fi_space(entry.lattice, entry.conditional)
    rep = verify_fi_embedding(space)
    assert rep.ok
    assert rep.open_fixpoint_count == entry.lattice.n


@pytest.mark.parametrize("entry", PRECONDITIONALS, ids=lambda e: e.name)
def test_space_conditions_hold_catalog_wide(entry):
    space = build_fi_space(entry.lattice, entry.conditional)
    rep = check_space_conditions(space.frame, space.basis)
    assert rep.ok, (rep.separated, rep.cofix_structure,
                    rep.pairs_realized, rep.relation_matches)


def test_consonant_pairs_include_the_promised_ones():
    e = catalog.entry("material-B4")
    L, T = e.lattice, e.conditional.table
    for x in range(L.n):
        assert consonant(L, e.conditional, L.top, x)
        for y in range(L.n):
            assert consonant(L, e.conditional, x, T[x][y])


def test_basis_is_principal_filters():
    e = catalog.entry("residual-3chain")
    space = build_fi_space(e.lattice, e.conditional)
    for a in range(e.lattice.n):
        want = sum(
            1 << k
            for k, (f, _i) in enumerate(space.pairs)
            if e.lattice.leq(f, a)
        )
        assert space.basis[a] == want


def test_open_sets_are_unions_of_basis():
    e = catalog.entry("well-order-B4")
    space = build_fi_space(e.lattice, e.conditional)
    opens = open_sets(space.frame, space.basis)
    for o in opens:
        cover = 0
        for b in space.basis:
            if b & ~o == 0:
                cover |= b
        assert cover == o
    # the empty union and the whole basis union are present
    assert 0 in opens or space.frame.closure(0) == 0
    full_union = 0
    for b in space.basis:
        full_union |= b
    assert full_union in opens


def test_space_separation_can_fail_off_catalog():
    # two points with identical filter and ideal data: a two-point frame
    # with no edges and a one-set basis cannot separate them
    from condlat.frames import RelationalFrame
    fr = RelationalFrame(("a", "b"), (0, 0))
    rep = check_space_conditions(fr, (0b11,))
    assert not rep.separated[0]
    assert not rep.ok
