import pytest

from condlat import catalog
from condlat.errors import (
    NotAPrecomplementation,
    NotAnOrthocomplementation,
    NotAPreconditional,
    NotResiduated,
    WidthMismatch,
)
from condlat.lattice import antichain_bounded, boolean_algebra, chain
from condlat.ops import (
    Axiom,
    BINARY_AXIOMS,
    ClassLabel,
    ConditionalOp,
    PRECONDITIONAL_AXIOMS,
    UnaryOp,
    check_axiom,
    check_axioms,
    check_flattening,
    classify,
    from_precomplementation,
    heyting_residual,
    is_orthomodular,
    orthocomplement_report,
    precomplementation_report,
    require_orthocomplement,
    require_preconditional,
    residuation_witness,
    sasaki_hook,
)

from conftest import names_at


# -- table plumbing -----------------------------------------------------

def test_table_validation():
    L = chain(2)
    with pytest.raises(WidthMismatch):
        ConditionalOp(L, ((0,), (0, 1)))
    with pytest.raises(WidthMismatch):
        ConditionalOp(L, ((0, 2), (0, 1)))
    with pytest.raises(WidthMismatch):
        UnaryOp(L, (0, 1, 0))


def test_from_names_and_derive_negation():
    L = chain(3, ("0", "h", "1"))
    op = ConditionalOp.from_names(L, (("1", "1", "1"), ("0", "1", "1"), ("0", "h", "1")))
    assert op.table == ((2, 2, 2), (0, 2, 2), (0, 1, 2))
    assert op.derive_negation().table == (2, 0, 0)


# -- each catalog entry reproduces its recorded profile -----------------

@pytest.mark.parametrize("entry", catalog.ENTRIES, ids=lambda e: e.name)
def test_catalog_profile_is_exact(entry):
    rep = check_axioms(entry.conditional, tuple(entry.profile))
    got = {ax: rep[ax].holds for ax in entry.profile}
    assert got == entry.profile


@pytest.mark.parametrize(
    "entry",
    [e for e in catalog.ENTRIES if e.label is not None],
    ids=lambda e: e.name,
)
def test_catalog_label_is_exact(entry):
    assert classify(entry.conditional).label is entry.label


# -- single-axiom isolation: each of the five has a table failing it alone

FACT1 = {
    Axiom.P1: "const-top-2chain",
    Axiom.P2: "const-bottom-2chain",
    Axiom.P3: "consequent-projection-2chain",
    Axiom.P4: "antitone-step-3chain",
    Axiom.P5: "collapse-step-3chain",
}


@pytest.mark.parametrize("axiom", PRECONDITIONAL_AXIOMS, ids=lambda a: a.value)
def test_core_axioms_are_independent(axiom):
    op = catalog.entry(FACT1[axiom]).conditional
    rep = check_axioms(op, PRECONDITIONAL_AXIOMS)
    assert {ax for ax in PRECONDITIONAL_AXIOMS if not rep[ax].holds} == {axiom}


def test_witnesses_are_lex_first():
    op = catalog.entry("antitone-step-3chain").conditional
    c = check_axiom(op, Axiom.P4)
    assert not c.holds
    assert c.witness == (0, 1, 0)
    assert names_at(op.lattice, c.witness) == ("0", "h", "0")
    assert "P4 fails at (0,h,0)" in c.describe(op.lattice.names)


def test_mp_and_wm_pull_apart():
    tail = catalog.entry("tail-constant-4chain")
    rep = check_axioms(tail.conditional, BINARY_AXIOMS)
    assert all(rep[ax].holds for ax in PRECONDITIONAL_AXIOMS + (Axiom.WM,))
    assert not rep[Axiom.MP].holds
    assert names_at(tail.lattice, rep[Axiom.MP].witness) == ("b", "a")

    meet2 = catalog.entry("meet-2chain")
    rep = check_axioms(meet2.conditional, BINARY_AXIOMS)
    assert all(rep[ax].holds for ax in PRECONDITIONAL_AXIOMS + (Axiom.MP,))
    assert not rep[Axiom.WM].holds
    assert rep[Axiom.WM].witness == (0, 1)


def test_require_preconditional_raises_with_axiom_name():
    op = catalog.entry("const-top-2chain").conditional
    with pytest.raises(NotAPreconditional, match="P1"):
        require_preconditional(op)


def test_meet_is_a_preconditional_on_any_lattice():
    for L in (chain(4), antichain_bounded(("a", "b", "c")), boolean_algebra(("p", "q"))):
        op = ConditionalOp(L, L.meet_table)
        assert check_axioms(op, PRECONDITIONAL_AXIOMS + (Axiom.MP,)).ok


# -- flattening ---------------------------------------------------------

def test_flattening_report_routes_agree():
    op = catalog.entry("residual-3chain").conditional
    rep = check_flattening(op)
    assert rep.holds and rep.forward.holds and rep.reverse_holds

    broken = catalog.entry("collapse-step-3chain").conditional
    rep = check_flattening(broken)
    assert not rep.forward.holds
    assert not rep.holds
    # FLAT and the P5 inclusion must agree whenever the reverse holds
    if rep.reverse_holds:
        assert rep.equation.holds == rep.forward.holds


# -- precomplementations ------------------------------------------------

def test_precomplementation_route():
    B = boolean_algebra(("p", "q"))
    neg = UnaryOp(B, B.complement_map())
    assert precomplementation_report(neg).ok
    op = from_precomplementation(neg)
    assert op.table == catalog.entry("material-B4").conditional.table
    assert classify(op).label is ClassLabel.CLASSICAL


def test_precomplementation_rejects_non_antitone():
    L = chain(3)
    with pytest.raises(NotAPrecomplementation):
        from_precomplementation(UnaryOp(L, (2, 1, 1)))  # top not sent to bottom
    rep = precomplementation_report(UnaryOp(L, (0, 1, 0)))  # not antitone
    assert not rep[Axiom.PC_ANTI].holds


def test_derived_negation_of_catalog_preconditionals_is_precomplementation():
    for e in catalog.preconditional_entries():
        assert precomplementation_report(e.conditional.derive_negation()).ok, e.name


# -- orthocomplements and the Sasaki table ------------------------------

def test_orthocomplement_report_on_m4():
    e = catalog.entry("sasaki-M4")
    rep = require_orthocomplement(e.unary)
    assert rep.ok and rep.de_morgan[0] and rep.excluded_middle[0]


def test_orthocomplement_rejects_boolean_complement_shuffle():
    B = boolean_algebra(("p", "q"))
    # swap the images of the two atoms: stays antitone-shaped but not involutive
    bad = UnaryOp(B, (3, 1, 2, 0))
    with pytest.raises(NotAnOrthocomplementation):
        require_orthocomplement(bad)


def test_sasaki_table_formula():
    e = catalog.entry("sasaki-M4")
    op = sasaki_hook(e.unary)
    assert op.table == e.conditional.table
    L, t = e.lattice, e.unary.table
    for a in range(L.n):
        for b in range(L.n):
            assert op.table[a][b] == L.join(t[a], L.meet(a, b))


def test_orthomodularity_split():
    assert is_orthomodular(catalog.entry("sasaki-M4").unary).holds
    om = is_orthomodular(catalog.entry("sasaki-benzene").unary)
    assert not om.holds and om.witness is not None
    a, b = om.witness
    L = catalog.entry("sasaki-benzene").lattice
    t = catalog.entry("sasaki-benzene").unary.table
    assert L.leq(a, b) and L.join(a, L.meet(t[a], b)) != b


# -- residuation --------------------------------------------------------

def test_heyting_residual_is_residuated_and_unique():
    for L in (chain(2), chain(5), boolean_algebra(("p", "q", "r"))):
        op = heyting_residual(L)
        assert residuation_witness(op) is None
        assert classify(op).label in (ClassLabel.HEYTING, ClassLabel.CLASSICAL)


def test_non_distributive_has_no_residual():
    with pytest.raises(NotResiduated):
        heyting_residual(antichain_bounded(("a", "b", "c")))


def test_residuation_witness_directions():
    L = chain(2)
    # constant-top table accepts everything on the right: backward fails
    w = residuation_witness(ConditionalOp(L, ((1, 1), (1, 1))))
    assert w is not None and w[3] == "backward"
    w = residuation_witness(ConditionalOp(L, ((0, 0), (0, 0))))
    assert w is not None and w[3] == "forward"


# -- classification chain ----------------------------------------------

def test_classification_most_specific_labels():
    cases = {
        "residual-3chain": ClassLabel.HEYTING,
        "material-B8": ClassLabel.CLASSICAL,
        "sasaki-M4": ClassLabel.SASAKI_OML,
        "sasaki-benzene": ClassLabel.SASAKI_OL,
        "tail-constant-4chain": ClassLabel.PROTO_HEYTING,
        "meet-M3": ClassLabel.WITH_MP,
        "const-top-2chain": ClassLabel.NOT_PRECONDITIONAL,
    }
    for name, label in cases.items():
        assert classify(catalog.entry(name).conditional).label is label, name


def test_classify_label_strings():
    # the labels are part of the CLI surface; keep them stable
    assert str(ClassLabel.CLASSICAL) == "ClassicalMaterial"
    assert str(ClassLabel.PROTO_HEYTING) == "ProtoHeyting"
    assert str(ClassLabel.NOT_PRECONDITIONAL) == "None"
