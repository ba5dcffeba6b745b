"""Binary operation tables and the implication axiom checkers.

An operation table is checked against named axioms.  The five core
axioms P1..P5 single out the operations this package revolves around;
the remaining named axioms carve out the classical subfamilies
(Heyting, Sasaki, material).  Negation is always the derived one,
neg(a) = a -> bottom, unless a unary table is supplied explicitly.

Checkers report the lexicographically first counterexample together
with both sides of the violated (in)equality.  Ternary axioms switch to
seeded sampling past a size threshold; everything in the shipped
catalog is checked exhaustively.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .errors import (
    InternalInconsistency,
    NotAPrecomplementation,
    NotAPreconditional,
    NotAnOrthocomplementation,
    NotResiduated,
    WidthMismatch,
)
from .lattice import FiniteLattice


class Axiom(enum.Enum):
    P1 = "P1"            # 1 -> a  <=  a
    P2 = "P2"            # a ∧ b  <=  a -> b
    P3 = "P3"            # a -> b  <=  a -> (a ∧ b)
    P4 = "P4"            # a -> (b ∧ c)  <=  a -> b
    P5 = "P5"            # a -> ((a ∧ b) -> c)  <=  (a ∧ b) -> c
    MP = "MP"            # a ∧ (a -> b)  <=  b
    WM = "WM"            # b  <=  a -> b
    SEMI = "SEMI"        # a ∧ (a -> 0)  =  0
    INV = "INV"          # (a -> 0) -> 0  =  a
    ID = "ID"            # a -> a  =  1
    NORM = "NORM"        # (a -> b) ∧ (a -> c)  <=  a -> (b ∧ c)
    NEGIMP = "NEGIMP"    # ¬(a -> b)  <=  a -> ¬b
    FLAT = "FLAT"        # a -> ((a ∧ b) -> c)  =  (a ∧ b) -> c
    PC_ANTI = "PC-ANTI"  # unary: a <= b  implies  ¬b <= ¬a
    PC_TOP = "PC-TOP"    # unary: ¬1 = 0

    def __str__(self):
        return self.value


PRECONDITIONAL_AXIOMS = (Axiom.P1, Axiom.P2, Axiom.P3, Axiom.P4, Axiom.P5)
BINARY_AXIOMS = (
    Axiom.P1, Axiom.P2, Axiom.P3, Axiom.P4, Axiom.P5, Axiom.MP, Axiom.WM,
    Axiom.SEMI, Axiom.INV, Axiom.ID, Axiom.NORM, Axiom.NEGIMP, Axiom.FLAT,
)


@dataclass(frozen=True)
class UnaryOp:
    """A unary table over a lattice; table[a] is the image of a."""

    lattice: FiniteLattice
    table: tuple

    def __post_init__(self):
        n = self.lattice.n
        t = tuple(int(x) for x in self.table)
        if len(t) != n:
            raise WidthMismatch(f"unary table has {len(t)} entries for {n} elements")
        for v in t:
            if not 0 <= v < n:
                raise WidthMismatch(f"unary table entry {v} out of range")
        object.__setattr__(self, "table", t)

    def apply(self, a: int) -> int:
        return self.table[a]


@dataclass(frozen=True)
class ConditionalOp:
    """A binary table over a lattice; table[a][b] is a -> b."""

    lattice: FiniteLattice
    table: tuple

    def __post_init__(self):
        n = self.lattice.n
        rows = tuple(tuple(int(x) for x in row) for row in self.table)
        if len(rows) != n:
            raise WidthMismatch(f"table has {len(rows)} rows for {n} elements")
        for row in rows:
            if len(row) != n:
                raise WidthMismatch(f"table row has {len(row)} entries for {n} elements")
            for v in row:
                if not 0 <= v < n:
                    raise WidthMismatch(f"table entry {v} out of range")
        object.__setattr__(self, "table", rows)

    def apply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def derive_negation(self) -> UnaryOp:
        """neg(a) = a -> bottom."""
        bot = self.lattice.bottom
        return UnaryOp(self.lattice, tuple(row[bot] for row in self.table))

    @classmethod
    def from_names(cls, lattice: FiniteLattice, rows_of_names):
        table = tuple(
            tuple(lattice.index(name) for name in row) for row in rows_of_names
        )
        return cls(lattice, table)


# -- axiom definitions -------------------------------------------------
#
# Each definition evaluates one instance, returning (lhs, rhs); the
# relation field says whether lhs <= rhs or lhs = rhs is required.

@dataclass(frozen=True)
class _AxiomDef:
    arity: int
    relation: str  # "le" or "eq"
    eval: object


def _d_p1(L, T, v):
    a, = v
    return T[L.top][a], a


def _d_p2(L, T, v):
    a, b = v
    return L.meet_table[a][b], T[a][b]


def _d_p3(L, T, v):
    a, b = v
    return T[a][b], T[a][L.meet_table[a][b]]


def _d_p4(L, T, v):
    a, b, c = v
    return T[a][L.meet_table[b][c]], T[a][b]


def _d_p5(L, T, v):
    a, b, c = v
    inner = T[L.meet_table[a][b]][c]
    return T[a][inner], inner


def _d_mp(L, T, v):
    a, b = v
    return L.meet_table[a][T[a][b]], b


def _d_wm(L, T, v):
    a, b = v
    return b, T[a][b]


def _d_semi(L, T, v):
    a, = v
    return L.meet_table[a][T[a][L.bottom]], L.bottom


def _d_inv(L, T, v):
    a, = v
    return T[T[a][L.bottom]][L.bottom], a


def _d_id(L, T, v):
    a, = v
    return T[a][a], L.top


def _d_norm(L, T, v):
    a, b, c = v
    return L.meet_table[T[a][b]][T[a][c]], T[a][L.meet_table[b][c]]


def _d_negimp(L, T, v):
    a, b = v
    return T[T[a][b]][L.bottom], T[a][T[b][L.bottom]]


def _d_flat(L, T, v):
    a, b, c = v
    inner = T[L.meet_table[a][b]][c]
    return T[a][inner], inner


AXIOM_DEFS = {
    Axiom.P1: _AxiomDef(1, "le", _d_p1),
    Axiom.P2: _AxiomDef(2, "le", _d_p2),
    Axiom.P3: _AxiomDef(2, "le", _d_p3),
    Axiom.P4: _AxiomDef(3, "le", _d_p4),
    Axiom.P5: _AxiomDef(3, "le", _d_p5),
    Axiom.MP: _AxiomDef(2, "le", _d_mp),
    Axiom.WM: _AxiomDef(2, "le", _d_wm),
    Axiom.SEMI: _AxiomDef(1, "eq", _d_semi),
    Axiom.INV: _AxiomDef(1, "eq", _d_inv),
    Axiom.ID: _AxiomDef(1, "eq", _d_id),
    Axiom.NORM: _AxiomDef(3, "le", _d_norm),
    Axiom.NEGIMP: _AxiomDef(2, "le", _d_negimp),
    Axiom.FLAT: _AxiomDef(3, "eq", _d_flat),
}


@dataclass(frozen=True)
class CheckConfig:
    exhaustive_limit: int = 16   # largest n with exhaustive ternary checks
    samples: int = 100_000
    seed: int = 0


DEFAULT_CONFIG = CheckConfig()


@dataclass(frozen=True)
class AxiomCheck:
    axiom: Axiom
    holds: bool
    witness: tuple | None = None
    lhs: int | None = None
    rhs: int | None = None
    relation: str = "le"
    mode: str = "exhaustive"
    samples: int = 0

    def describe(self, names=None) -> str:
        if self.holds:
            return f"{self.axiom} holds ({self.mode})"
        sym = "<=" if self.relation == "le" else "="
        if names is None:
            w = ",".join(str(x) for x in self.witness)
            return f"{self.axiom} fails at ({w}): {self.lhs} {sym} {self.rhs} is false"
        w = ",".join(names[x] for x in self.witness)
        return (
            f"{self.axiom} fails at ({w}): "
            f"{names[self.lhs]} {sym} {names[self.rhs]} is false"
        )


@dataclass
class AxiomReport:
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks.values())

    def failing(self):
        return [c for c in self.checks.values() if not c.holds]

    def profile(self):
        return {ax: c.holds for ax, c in self.checks.items()}

    def __getitem__(self, axiom: Axiom) -> AxiomCheck:
        return self.checks[axiom]


def _violates(L, lhs, rhs, relation):
    if relation == "eq":
        return lhs != rhs
    return not L.leq(lhs, rhs)


def check_axiom(op: ConditionalOp, axiom: Axiom, config: CheckConfig = DEFAULT_CONFIG) -> AxiomCheck:
    """Check one axiom; lexicographically first counterexample if any."""
    d = AXIOM_DEFS.get(axiom)
    if d is None:
        raise ValueError(f"{axiom} is not an axiom of binary tables")
    L, T = op.lattice, op.table
    n = L.n

    if d.arity == 3 and n > config.exhaustive_limit:
        rng = random.Random(f"{config.seed}:{axiom.value}")
        for i in range(config.samples):
            v = (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            lhs, rhs = d.eval(L, T, v)
            if _violates(L, lhs, rhs, d.relation):
                return AxiomCheck(axiom, False, v, lhs, rhs, d.relation,
                                  "sampled", i + 1)
        return AxiomCheck(axiom, True, mode="sampled", samples=config.samples)

    if d.arity == 1:
        space = ((a,) for a in range(n))
    elif d.arity == 2:
        space = ((a, b) for a in range(n) for b in range(n))
    else:
        space = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
    for v in space:
        lhs, rhs = d.eval(L, T, v)
        if _violates(L, lhs, rhs, d.relation):
            return AxiomCheck(axiom, False, v, lhs, rhs, d.relation)
    return AxiomCheck(axiom, True)


def check_axioms(op: ConditionalOp, axioms, config: CheckConfig = DEFAULT_CONFIG) -> AxiomReport:
    return AxiomReport({ax: check_axiom(op, ax, config) for ax in axioms})


def check_preconditional(op: ConditionalOp, config: CheckConfig = DEFAULT_CONFIG) -> AxiomReport:
    return check_axioms(op, PRECONDITIONAL_AXIOMS, config)


def require_preconditional(op: ConditionalOp):
    report = check_preconditional(op)
    if not report.ok:
        first = report.failing()[0]
        raise NotAPreconditional(first.describe(op.lattice.names))
    return report


@dataclass(frozen=True)
class FlatteningReport:
    equation: AxiomCheck      # the full equation (FLAT)
    forward: AxiomCheck       # the P5 inclusion
    reverse_holds: bool       # (a ∧ b) -> c  <=  a -> ((a ∧ b) -> c)
    reverse_witness: tuple | None

    @property
    def holds(self):
        return self.equation.holds


def check_flattening(op: ConditionalOp, config: CheckConfig = DEFAULT_CONFIG) -> FlatteningReport:
    """The flattening equation, plus each inclusion separately."""
    eq = check_axiom(op, Axiom.FLAT, config)
    fwd = check_axiom(op, Axiom.P5, config)
    L, T = op.lattice, op.table
    rev_w = None
    for a in range(L.n):
        for b in range(L.n):
            for c in range(L.n):
                inner = T[L.meet_table[a][b]][c]
                if not L.leq(inner, T[a][inner]):
                    rev_w = (a, b, c)
                    break
            if rev_w:
                break
        if rev_w:
            break
    return FlatteningReport(eq, fwd, rev_w is None, rev_w)


# -- unary tables: precomplementations and orthocomplementations -------

def precomplementation_report(neg: UnaryOp) -> AxiomReport:
    L, t = neg.lattice, neg.table
    anti_w = None
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(a, b) and not L.leq(t[b], t[a]):
                anti_w = (a, b)
                break
        if anti_w:
            break
    checks = {
        Axiom.PC_ANTI: AxiomCheck(
            Axiom.PC_ANTI, anti_w is None, anti_w,
            None if anti_w is None else t[anti_w[1]],
            None if anti_w is None else t[anti_w[0]],
        ),
        Axiom.PC_TOP: AxiomCheck(
            Axiom.PC_TOP, t[L.top] == L.bottom,
            None if t[L.top] == L.bottom else (L.top,),
            t[L.top], L.bottom, "eq",
        ),
    }
    return AxiomReport(checks)


def require_precomplementation(neg: UnaryOp):
    report = precomplementation_report(neg)
    if not report.ok:
        raise NotAPrecomplementation(report.failing()[0].describe(neg.lattice.names))
    return report


def from_precomplementation(neg: UnaryOp) -> ConditionalOp:
    """The table a -> b = ¬a ∨ (a ∧ b) for a precomplementation ¬."""
    require_precomplementation(neg)
    L, t = neg.lattice, neg.table
    rows = tuple(
        tuple(L.join(t[a], L.meet(a, b)) for b in range(L.n)) for a in range(L.n)
    )
    return ConditionalOp(L, rows)


@dataclass(frozen=True)
class OrthocomplementReport:
    antitone: AxiomCheck
    semicomplement: tuple   # (holds, witness)
    involution: tuple
    excluded_middle: tuple  # derived, still checked
    de_morgan: tuple        # derived, still checked

    @property
    def defining_ok(self):
        return (self.antitone.holds and self.semicomplement[0]
                and self.involution[0])

    @property
    def ok(self):
        return (self.defining_ok and self.excluded_middle[0]
                and self.de_morgan[0])


def orthocomplement_report(neg: UnaryOp) -> OrthocomplementReport:
    L, t = neg.lattice, neg.table
    anti = precomplementation_report(neg)[Axiom.PC_ANTI]
    semi_w = next(
        ((a,) for a in range(L.n) if L.meet(a, t[a]) != L.bottom), None)
    inv_w = next(((a,) for a in range(L.n) if t[t[a]] != a), None)
    em_w = next(((a,) for a in range(L.n) if L.join(a, t[a]) != L.top), None)
    dm_w = None
    for a in range(L.n):
        for b in range(L.n):
            if t[L.meet(a, b)] != L.join(t[a], t[b]):
                dm_w = (a, b, "meet")
                break
            if t[L.join(a, b)] != L.meet(t[a], t[b]):
                dm_w = (a, b, "join")
                break
        if dm_w:
            break
    return OrthocomplementReport(
        anti, (semi_w is None, semi_w), (inv_w is None, inv_w),
        (em_w is None, em_w), (dm_w is None, dm_w),
    )


def require_orthocomplement(neg: UnaryOp) -> OrthocomplementReport:
    report = orthocomplement_report(neg)
    if not report.defining_ok:
        detail = []
        if not report.antitone.holds:
            detail.append(f"not antitone at {report.antitone.witness}")
        if not report.semicomplement[0]:
            detail.append(f"a ∧ ¬a != 0 at {report.semicomplement[1]}")
        if not report.involution[0]:
            detail.append(f"¬¬a != a at {report.involution[1]}")
        raise NotAnOrthocomplementation("; ".join(detail))
    if not report.ok:
        # derivable from the defining three, so this cannot fire on a
        # correct checker
        raise InternalInconsistency(
            "orthocomplement passed its defining laws but failed a derived one"
        )
    return report


def sasaki_hook(neg: UnaryOp) -> ConditionalOp:
    """a -> b = ¬a ∨ (a ∧ b), requiring ¬ to be an orthocomplementation.

    Computed in both of its equivalent shapes, ¬a ∨ (a ∧ b) and
    ¬(a ∧ ¬(a ∧ b)), which must agree on an ortholattice.
    """
    require_orthocomplement(neg)
    L, t = neg.lattice, neg.table
    rows = []
    for a in range(L.n):
        row = []
        for b in range(L.n):
            v1 = L.join(t[a], L.meet(a, b))
            v2 = t[L.meet(a, t[L.meet(a, b)])]
            if v1 != v2:
                raise InternalInconsistency(
                    f"Sasaki forms disagree at ({L.names[a]},{L.names[b]})"
                )
            row.append(v1)
        rows.append(tuple(row))
    return ConditionalOp(L, tuple(rows))


@dataclass(frozen=True)
class Orthomodularity:
    holds: bool
    witness: tuple | None  # (a, b) with a <= b and b != a ∨ (¬a ∧ b)


def is_orthomodular(neg: UnaryOp) -> Orthomodularity:
    """Orthomodular law, cross-checked against the Sasaki detachment form.

    Route 1: a <= b implies b = a ∨ (¬a ∧ b).
    Route 2: a ∧ (¬a ∨ (a ∧ b)) <= b for all a, b.
    The two must agree on any ortholattice.
    """
    require_orthocomplement(neg)
    L, t = neg.lattice, neg.table
    w1 = None
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(a, b) and L.join(a, L.meet(t[a], b)) != b:
                w1 = (a, b)
                break
        if w1:
            break
    w2 = None
    for a in range(L.n):
        for b in range(L.n):
            lhs = L.meet(a, L.join(t[a], L.meet(a, b)))
            if not L.leq(lhs, b):
                w2 = (a, b)
                break
        if w2:
            break
    if (w1 is None) != (w2 is None):
        raise InternalInconsistency(
            f"orthomodularity routes disagree: law witness {w1}, detachment witness {w2}"
        )
    return Orthomodularity(w1 is None, w1)


# -- residuation and the Heyting construction --------------------------

def residuation_witness(op: ConditionalOp):
    """First (a, b, c, direction) violating a ∧ b <= c  iff  a <= b -> c."""
    L, T = op.lattice, op.table
    for a in range(L.n):
        for b in range(L.n):
            for c in range(L.n):
                left = L.leq(L.meet(a, b), c)
                right = L.leq(a, T[b][c])
                if left and not right:
                    return (a, b, c, "forward")
                if right and not left:
                    return (a, b, c, "backward")
    return None


def heyting_residual(L: FiniteLattice) -> ConditionalOp:
    """b -> c = join of {a : a ∧ b <= c}; verified to residuate meet."""
    rows = []
    for b in range(L.n):
        row = []
        for c in range(L.n):
            mask = 0
            for a in range(L.n):
                if L.leq(L.meet(a, b), c):
                    mask |= 1 << a
            row.append(L.join_mask(mask))
        rows.append(tuple(row))
    op = ConditionalOp(L, tuple(rows))
    w = residuation_witness(op)
    if w is not None:
        a, b, c, direction = w
        raise NotResiduated(
            f"no residual: candidate fails at "
            f"({L.names[a]},{L.names[b]},{L.names[c]}) ({direction})"
        )
    return op


# -- classification ----------------------------------------------------

class ClassLabel(enum.Enum):
    NOT_PRECONDITIONAL = "None"
    PRECONDITIONAL = "Preconditional"
    WITH_SEMICOMP = "PreconditionalWithSemicomp"
    WITH_MP = "PreconditionalWithMP"
    PROTO_HEYTING = "ProtoHeyting"
    HEYTING = "Heyting"
    SASAKI_OL = "SasakiOL"
    SASAKI_OML = "SasakiOML"
    CLASSICAL = "ClassicalMaterial"

    def __str__(self):
        return self.value


CLASSIFY_AXIOMS = PRECONDITIONAL_AXIOMS + (
    Axiom.MP, Axiom.WM, Axiom.SEMI, Axiom.INV,
)

_SASAKI_LABELS = (ClassLabel.SASAKI_OL, ClassLabel.SASAKI_OML, ClassLabel.CLASSICAL)
_HEYTING_LABELS = (ClassLabel.HEYTING, ClassLabel.CLASSICAL)


@dataclass(frozen=True)
class Classification:
    label: ClassLabel
    report: AxiomReport

    @property
    def profile(self):
        return self.report.profile()


def classify(op: ConditionalOp, config: CheckConfig = DEFAULT_CONFIG) -> Classification:
    """Most specific label for the table; cross-checked where a label
    comes with a structural characterization."""
    report = check_axioms(op, CLASSIFY_AXIOMS, config)
    p = report.profile()
    precond = all(p[ax] for ax in PRECONDITIONAL_AXIOMS)
    if not precond:
        label = ClassLabel.NOT_PRECONDITIONAL
    elif p[Axiom.MP] and p[Axiom.WM] and p[Axiom.INV]:
        label = ClassLabel.CLASSICAL
    elif p[Axiom.MP] and p[Axiom.WM]:
        label = ClassLabel.HEYTING
    elif p[Axiom.MP] and p[Axiom.INV]:
        label = ClassLabel.SASAKI_OML
    elif p[Axiom.SEMI] and p[Axiom.WM]:
        label = ClassLabel.PROTO_HEYTING
    elif p[Axiom.SEMI] and p[Axiom.INV]:
        label = ClassLabel.SASAKI_OL
    elif p[Axiom.MP]:
        label = ClassLabel.WITH_MP
    elif p[Axiom.SEMI]:
        label = ClassLabel.WITH_SEMICOMP
    else:
        label = ClassLabel.PRECONDITIONAL

    if label in _SASAKI_LABELS:
        L, T = op.lattice, op.table
        t = op.derive_negation().table
        for a in range(L.n):
            for b in range(L.n):
                if T[a][b] != L.join(t[a], L.meet(a, b)):
                    raise InternalInconsistency(
                        f"label {label} but table is not ¬a ∨ (a ∧ b) at "
                        f"({L.names[a]},{L.names[b]})"
                    )
    if label in _HEYTING_LABELS:
        w = residuation_witness(op)
        if w is not None:
            raise InternalInconsistency(
                f"label {label} but residuation fails at {w[:3]} ({w[3]})"
            )
    return Classification(label, report)
