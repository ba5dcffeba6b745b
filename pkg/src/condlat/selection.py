"""Selection-function frames over a finite set of worlds.

For k worlds there is one selection relation per subset A, stored as
rel[A][w] = bitmask of worlds selected at w for antecedent A.  The
conditional of A and B holds at w when every world selected for A lies
in B.  Properties checked, each with a witness on failure:

* success: selected worlds lie in the antecedent;
* centering: a world inside the antecedent selects exactly itself;
* functionality: at most one selected world;
* strong density: a selection for A ∩ B factors through a selection
  for A.

``from_well_order`` realizes the canonical example: fix a total order
on worlds and select, for w and A, the first world of A at or after w;
worlds with nothing of A at or after them select nothing.  These frames
are functional and strongly dense, and their conditionals flatten.

``ba_to_selection`` goes the other way: a Boolean algebra whose table
passes the core axioms together with MP, ID, NORM and negation import
(taken with the Boolean complement) is turned into a selection frame on
its atoms, and the frame's conditional is verified to transport back to
the original table.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .errors import (
    InternalInconsistency,
    NotBoolean,
    PreconditionFailed,
    TooLarge,
    WidthMismatch,
)
from .lattice import FiniteLattice, boolean_algebra
from .ops import (
    Axiom,
    ConditionalOp,
    check_axioms,
    PRECONDITIONAL_AXIOMS,
)

MAX_WORLDS = 16


@dataclass(frozen=True)
class SelectionFrame:
    names: tuple
    rel: tuple  # rel[A][w] for every subset mask A

    def __post_init__(self):
        names = tuple(str(x) for x in self.names)
        k = len(names)
        if k == 0:
            raise WidthMismatch("a selection frame needs at least one world")
        if k > MAX_WORLDS:
            raise TooLarge(f"{k} worlds exceeds the guard of {MAX_WORLDS}")
        if len(set(names)) != k:
            raise WidthMismatch("duplicate world names")
        full = (1 << k) - 1
        rel = tuple(tuple(int(x) for x in row) for row in self.rel)
        if len(rel) != full + 1:
            raise WidthMismatch(
                f"need one selection row per subset: {full + 1}, got {len(rel)}"
            )
        for row in rel:
            if len(row) != k:
                raise WidthMismatch("selection row length does not match world count")
            for mask in row:
                if mask & ~full:
                    raise WidthMismatch("selection mask references unknown worlds")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "rel", rel)

    @property
    def k(self):
        return len(self.names)

    @property
    def full_mask(self):
        return (1 << len(self.names)) - 1

    def selected(self, A: int, w: int) -> int:
        return self.rel[A][w]

    def arrow(self, A: int, B: int) -> int:
        full = self.full_mask
        if A & ~full or B & ~full:
            raise WidthMismatch("subset mask outside this frame's worlds")
        out = 0
        for w in range(self.k):
            if self.rel[A][w] & ~B == 0:
                out |= 1 << w
        return out


@dataclass(frozen=True)
class SelectionFrameReport:
    success: tuple        # (holds, (A, w, v) | None)
    centering: tuple      # (holds, (A, w) | None)
    functionality: tuple  # (holds, (A, w) | None)
    strong_density: tuple # (holds, (A, C, w, v) | None)

    @property
    def ok(self):
        return all(
            x[0]
            for x in (self.success, self.centering,
                      self.functionality, self.strong_density)
        )


def check_frame(frame: SelectionFrame) -> SelectionFrameReport:
    k, rel = frame.k, frame.rel
    succ_w = cent_w = func_w = dens_w = None
    for A in range(frame.full_mask + 1):
        for w in range(k):
            sel = rel[A][w]
            if succ_w is None and sel & ~A:
                v = (sel & ~A) & -(sel & ~A)
                succ_w = (A, w, v.bit_length() - 1)
            if cent_w is None and A >> w & 1 and sel != 1 << w:
                cent_w = (A, w)
            if func_w is None and bin(sel).count("1") > 1:
                func_w = (A, w)
        if succ_w and cent_w and func_w:
            break
    for A in range(frame.full_mask + 1):
        if dens_w:
            break
        C = A
        while True:  # C runs over the submasks of A, including A itself
            for w in range(k):
                sel = rel[C][w]
                for v in range(k):
                    if not sel >> v & 1:
                        continue
                    if not any(
                        rel[C][u] >> v & 1
                        for u in range(k)
                        if rel[A][w] >> u & 1
                    ):
                        dens_w = (A, C, w, v)
                        break
                if dens_w:
                    break
            if dens_w or C == 0:
                break
            C = (C - 1) & A
    return SelectionFrameReport(
        (succ_w is None, succ_w),
        (cent_w is None, cent_w),
        (func_w is None, func_w),
        (dens_w is None, dens_w),
    )


def from_well_order(names, order=None) -> SelectionFrame:
    """Select the first world of A at or after w in the given total order.

    order lists world indices from least to greatest; default is index
    order.  A world with nothing of A at or after it selects nothing.
    """
    names = tuple(str(x) for x in names)
    k = len(names)
    if order is None:
        order = tuple(range(k))
    order = tuple(order)
    if sorted(order) != list(range(k)):
        raise WidthMismatch("order must be a permutation of the worlds")
    rank = [0] * k
    for pos, w in enumerate(order):
        rank[w] = pos
    rel = []
    for A in range(1 << k):
        row = []
        for w in range(k):
            hit = 0
            for pos in range(rank[w], k):
                v = order[pos]
                if A >> v & 1:
                    hit = 1 << v
                    break
            row.append(hit)
        rel.append(tuple(row))
    return SelectionFrame(names, tuple(rel))


def induced_conditional(frame: SelectionFrame):
    """The frame's conditional as a table over the powerset algebra.

    Element index i of the returned lattice is exactly the subset with
    bitmask i, so subset masks and element indices can be identified.
    """
    lat = boolean_algebra(frame.names)
    n = lat.n
    table = tuple(
        tuple(frame.arrow(A, B) for B in range(n)) for A in range(n)
    )
    return ConditionalOp(lat, table)


# NEGIMP is checked separately against the Boolean complement: the derived
# negation a -> 0 can be strictly smaller (an antecedent may select nothing
# at some world), and the representation argument needs the complement form.
BA_AXIOMS = PRECONDITIONAL_AXIOMS + (Axiom.MP, Axiom.ID, Axiom.NORM)


@dataclass(frozen=True)
class SelectionModel:
    frame: SelectionFrame
    atoms: tuple          # lattice atom indices, in world order
    element_mask: tuple   # element -> bitmask over atom positions

    def element_of(self, mask: int) -> int:
        return self.element_mask.index(mask)


def ba_to_selection(lattice: FiniteLattice, op: ConditionalOp) -> SelectionModel:
    """Represent a Boolean conditional algebra on a frame over its atoms.

    w selects v for antecedent hat(a) iff every b with w <= a -> b has
    v <= b.  The result is verified to be a centered, functional,
    strongly dense frame whose conditional transports back to the input
    table; both verifications are theorems given the preconditions, so
    their failure raises InternalInconsistency.
    """
    L, T = lattice, op.table
    if not L.is_boolean():
        raise NotBoolean(f"{L!r} is not a Boolean algebra")
    report = check_axioms(op, BA_AXIOMS)
    if not report.ok:
        bad = report.failing()[0]
        raise PreconditionFailed(f"required axiom fails: {bad.describe(L.names)}")
    neg = L.complement_map()
    for a in range(L.n):
        for b in range(L.n):
            if not L.leq(neg[T[a][b]], T[a][neg[b]]):
                raise PreconditionFailed(
                    f"required axiom fails: {Axiom.NEGIMP.value} with the Boolean"
                    f" complement fails at ({L.names[a]},{L.names[b]})"
                )

    atoms = tuple(L.atoms())
    k = len(atoms)
    pos = {a: p for p, a in enumerate(atoms)}
    element_mask = tuple(
        sum(1 << pos[a] for a in atoms if L.leq(a, e)) for e in range(L.n)
    )
    element_of = {m: e for e, m in enumerate(element_mask)}
    if len(element_of) != L.n or len(element_of) != 1 << k:
        raise InternalInconsistency("atom masks do not enumerate the powerset")

    rel = []
    for A in range(1 << k):
        a = element_of[A]
        row = []
        for wp in range(k):
            w = atoms[wp]
            allowed = (1 << k) - 1
            for b in range(L.n):
                if L.leq(w, T[a][b]):
                    allowed &= element_mask[b]
            row.append(allowed)
        rel.append(tuple(row))
    frame = SelectionFrame(tuple(L.names[a] for a in atoms), tuple(rel))

    fcheck = check_frame(frame)
    if not fcheck.ok:
        raise InternalInconsistency(
            f"derived frame violates a required property: {fcheck}"
        )
    for a in range(L.n):
        for b in range(L.n):
            if frame.arrow(element_mask[a], element_mask[b]) != element_mask[T[a][b]]:
                raise InternalInconsistency(
                    f"transported conditional differs at ({L.names[a]},{L.names[b]})"
                )
    return SelectionModel(frame, atoms, element_mask)


def random_centered_frame(rng: Random, k: int, hit: float = 0.7) -> SelectionFrame:
    """A random frame with success and centering; worlds outside the
    antecedent select one random member with probability hit, else
    nothing.  Not strongly dense in general; callers filter."""
    rel = []
    for A in range(1 << k):
        members = [v for v in range(k) if A >> v & 1]
        row = []
        for w in range(k):
            if A >> w & 1:
                row.append(1 << w)
            elif members and rng.random() < hit:
                row.append(1 << rng.choice(members))
            else:
                row.append(0)
        rel.append(tuple(row))
    return SelectionFrame(tuple(f"w{i}" for i in range(k)), tuple(rel))
