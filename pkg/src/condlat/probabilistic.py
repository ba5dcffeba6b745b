"""Threshold-confidence conditionals on a finite probability space.

Worlds are 0..n-1, subsets are bitmasks.  Each world w carries a measure
concentrated on itself: mu_w({w}) = self_mass and mu_w({v}) = other_mass
for v != w.  The conditional of A and B holds at w when the conditional
probability mu_w(B|A) clears a fixed threshold.  With the default
parameters (11 worlds, self mass 9/10, threshold 9/10) this operation on
the full powerset satisfies the five core axioms and modus ponens but
not normality; the stock failure conditions on everything except world
0, where either ten-minus-one consequent sits exactly at the threshold
while their intersection drops below it.

Two evaluation routes are kept deliberately separate: a scalar route in
exact ``Fraction`` arithmetic, and an integer numpy route over the full
2^n x 2^n table.  ``verify_axioms`` drives the table and cross-checks it
against the scalar route on sampled cells; a disagreement is a bug, not
a finding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import ConditioningOnNull, InternalInconsistency, TooLarge, WidthMismatch
from .ops import Axiom

# full tables are dense: 2^12 x 2^12 at 2 bytes per cell is the ceiling
TABLE_LIMIT = 12


def _mask(worlds) -> int:
    return sum(1 << w for w in worlds)


@dataclass(frozen=True)
class ConfidenceSpace:
    """Parameters of the measure family, all exact rationals.

    ``empty_antecedent_total`` governs worlds where the antecedent has
    measure zero (with positive other_mass that is only the empty set):
    True puts every such world in the conditional, False keeps them all
    out.  The definition itself is silent there; this knob is ours.
    """

    world_count: int
    self_mass: Fraction
    other_mass: Fraction
    threshold: Fraction
    empty_antecedent_total: bool = True

    def __post_init__(self):
        n = self.world_count
        if n < 1:
            raise ValueError("need at least one world")
        for name in ("self_mass", "other_mass", "threshold"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, Fraction(v))
        if not 0 < self.self_mass <= 1 or self.other_mass < 0:
            raise ValueError("masses must be a positive and a nonnegative rational")
        if self.self_mass + (n - 1) * self.other_mass != 1:
            raise ValueError("masses of each mu_w must sum to exactly 1")
        if not 0 < self.threshold <= 1:
            raise ValueError("threshold must lie in (0, 1], else the comparison is vacuous")

    # -- scalar route ----------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.world_count) - 1

    def _guard(self, S: int):
        if S & ~self.full:
            raise WidthMismatch(f"subset {S:#x} exceeds {self.world_count} worlds")

    def measure(self, w: int, S: int) -> Fraction:
        """mu_w(S), exactly."""
        self._guard(S)
        k = S.bit_count()
        if S >> w & 1:
            return self.self_mass + (k - 1) * self.other_mass
        return k * self.other_mass

    def cond_prob(self, w: int, B: int, A: int) -> Fraction:
        """mu_w(B | A); conditioning on a null set is an error here,
        the knob on the space only shapes the arrow."""
        base = self.measure(w, A)
        if base == 0:
            raise ConditioningOnNull(f"mu_{w}(A) = 0 for A = {A:#x}")
        return self.measure(w, A & B) / base

    def arrow(self, A: int, B: int) -> int:
        """Worlds where the confidence in B given A clears the threshold."""
        self._guard(A), self._guard(B)
        out = 0
        for w in range(self.world_count):
            if self.measure(w, A) == 0:
                if self.empty_antecedent_total:
                    out |= 1 << w
            elif self.cond_prob(w, B, A) >= self.threshold:
                out |= 1 << w
        return out


def confidence_space(
    world_count: int = 11,
    self_mass: Fraction = Fraction(9, 10),
    threshold: Fraction = Fraction(9, 10),
    empty_antecedent_total: bool = True,
) -> ConfidenceSpace:
    """Spread the remaining mass evenly; defaults are the reference
    11-world configuration (self 9/10, others 1/100 each)."""
    self_mass = Fraction(self_mass)
    if world_count == 1:
        if self_mass != 1:
            raise ValueError("a single world must carry all the mass")
        other = Fraction(0)
    else:
        other = (1 - self_mass) / (world_count - 1)
    return ConfidenceSpace(
        world_count, self_mass, other, Fraction(threshold), empty_antecedent_total
    )


# the stock normality failure: A = all but world 0, B and C each drop one
# further world, so at 0 both confidences are exactly 9/10 but B cap C
# gives only 8/10
NORM_WITNESS = (_mask(range(1, 11)), _mask(range(1, 10)), _mask(range(2, 11)), 0)


# -- integer table route -------------------------------------------------

def arrow_table(space: ConfidenceSpace) -> np.ndarray:
    """Dense (2^n, 2^n) uint16 table of arrow masks, pure integer
    arithmetic: with D a common denominator, D*mu_w(S) is an integer
    linear form in |S| and [w in S], and the threshold test becomes
    td * (D*mu_w(A&B)) >= tn * (D*mu_w(A))."""
    n = space.world_count
    if n > TABLE_LIMIT:
        raise TooLarge(f"{n} worlds: table would have 2^{2 * n} cells")
    D = lcm(space.self_mass.denominator, space.other_mass.denominator)
    om = int(space.other_mass * D)
    sm = int(space.self_mass * D)
    tn, td = space.threshold.numerator, space.threshold.denominator

    N = 1 << n
    masks = np.arange(N, dtype=np.int64)
    pc = np.zeros(N, dtype=np.int64)
    for w in range(n):
        pc += masks >> w & 1
    AB = masks[:, None] & masks[None, :]
    m_ab_base = pc[AB] * om                      # D*mu_w(A&B) before the self bump
    m_a_base = (pc * om)[:, None]
    table = np.zeros((N, N), dtype=np.uint16)
    bump = sm - om
    for w in range(n):
        in_ab = AB >> w & 1
        in_a = (masks >> w & 1)[:, None]
        m_ab = m_ab_base + bump * in_ab
        m_a = m_a_base + bump * in_a
        ok = td * m_ab >= tn * m_a
        if space.empty_antecedent_total:
            ok |= m_a == 0
        else:
            ok &= m_a != 0
        table |= ok.astype(np.uint16) << w
    return table


@dataclass(frozen=True)
class ProbCheck:
    axiom: Axiom
    holds: bool
    mode: str                 # "exhaustive" | "sampled+structured" | "pinned"
    instances: int
    witness: tuple | None = None   # (A, B, w) or (A, B, C, w), masks and a world

    def describe(self) -> str:
        if self.holds:
            return f"{self.axiom} holds ({self.mode}, {self.instances} instances)"
        *sets, w = self.witness
        names = ",".join(f"{{{bin(S)[2:]}}}" for S in sets)
        return f"{self.axiom} fails at ({names}) world {w} ({self.mode})"


@dataclass(frozen=True)
class ProbReport:
    checks: dict = field(default_factory=dict)
    crosschecked: int = 0

    def __getitem__(self, axiom: Axiom) -> ProbCheck:
        return self.checks[axiom]

    @property
    def ok(self) -> bool:
        """All checks except NORM, which is expected to fail on the
        reference configuration."""
        return all(c.holds for ax, c in self.checks.items() if ax is not Axiom.NORM)


def _first_violation(viol: np.ndarray, *index_arrays):
    """Lexicographically first nonzero cell, decoded through the index
    arrays; appends the lowest violating world."""
    flat = np.flatnonzero(viol.reshape(-1))
    if flat.size == 0:
        return None
    i = int(flat[0])
    coords = np.unravel_index(i, viol.shape)
    sets = tuple(int(arr[c]) for arr, c in zip(index_arrays, coords))
    bits = int(viol.reshape(-1)[i])
    return sets + ((bits & -bits).bit_length() - 1,)


def interval_sets(n: int) -> tuple:
    """The structured family: the empty set and every index interval."""
    out = [0]
    for i in range(n):
        for j in range(i, n):
            out.append(_mask(range(i, j + 1)))
    return tuple(out)


def verify_axioms(
    space: ConfidenceSpace,
    samples: int = 1_000_000,
    seed: int = 0,
    exhaustive: bool = False,
    crosscheck: int = 512,
) -> ProbReport:
    """Check P1-P5, MP and NORM over the table route.

    P1 is exhaustive in A; P2, P3 and MP are exhaustive over all pairs.
    P4 and P5 run over every triple from the interval family plus
    ``samples`` seeded uniform triples; ``exhaustive=True`` replaces the
    sampling with the full 2^3n sweep (hours at n=11, use deliberately).
    The NORM entry evaluates the pinned reference witness and only
    searches when that instance unexpectedly passes.  Before any axiom
    runs, ``crosscheck`` sampled cells of the table are recomputed on
    the scalar route; a mismatch raises InternalInconsistency.
    """
    n = space.world_count
    N = 1 << n
    T = arrow_table(space)
    rng = np.random.default_rng(seed)

    if crosscheck:
        picks = {(int(a), int(b)) for a, b in rng.integers(0, N, size=(crosscheck, 2))}
        picks |= {(N - 1, N - 1), (0, 0), (0, N - 1), (N - 1, 0)}
        picks |= {(NORM_WITNESS[0] & (N - 1), NORM_WITNESS[1] & (N - 1))}
        for a, b in picks:
            if space.arrow(a, b) != int(T[a, b]):
                raise InternalInconsistency(
                    f"table and scalar routes disagree at ({a:#x},{b:#x})"
                )

    checks = {}
    masks = np.arange(N, dtype=np.int64)
    full = N - 1
    Tm = T.astype(np.int64)

    # P1: full -> a <= a
    viol = Tm[full, :] & ~masks & full
    checks[Axiom.P1] = ProbCheck(
        Axiom.P1, not viol.any(), "exhaustive", N,
        _first_violation(viol, masks) if viol.any() else None,
    )

    # pairwise, exhaustive: P2 a&b <= a->b; MP a & (a->b) <= b;
    # P3 a->b <= a->(a&b)
    AB = masks[:, None] & masks[None, :]
    viol = AB & ~Tm
    w2 = _first_violation(viol, masks, masks)
    checks[Axiom.P2] = ProbCheck(Axiom.P2, w2 is None, "exhaustive", N * N, w2)

    viol = masks[:, None] & Tm & ~masks[None, :]
    wmp = _first_violation(viol, masks, masks)
    checks[Axiom.MP] = ProbCheck(Axiom.MP, wmp is None, "exhaustive", N * N, wmp)

    viol = Tm & ~np.take_along_axis(Tm, AB, axis=1)
    w3 = _first_violation(viol, masks, masks)
    checks[Axiom.P3] = ProbCheck(Axiom.P3, w3 is None, "exhaustive", N * N, w3)
    del viol, AB

    # ternary: structured family first, then sampled or full sweep
    def p4_block(A, B, C):
        return Tm[A, B & C] & ~Tm[A, B]

    def p5_block(A, B, C):
        inner = Tm[A & B, C]
        return Tm[A, inner] & ~inner

    w4 = w5 = None
    count = 0
    fam = np.array(interval_sets(n), dtype=np.int64)
    FA = np.repeat(fam, len(fam) * len(fam))
    FB = np.tile(np.repeat(fam, len(fam)), len(fam))
    FC = np.tile(fam, len(fam) * len(fam))
    for name, block in ((Axiom.P4, p4_block), (Axiom.P5, p5_block)):
        v = block(FA, FB, FC)
        bad = np.flatnonzero(v)
        if bad.size and (w4 if name is Axiom.P4 else w5) is None:
            i = int(bad[0])
            wit = (int(FA[i]), int(FB[i]), int(FC[i]),
                   (int(v[i]) & -int(v[i])).bit_length() - 1)
            if name is Axiom.P4:
                w4 = wit
            else:
                w5 = wit
    count += len(FA)

    if exhaustive:
        mode = "exhaustive"
        cols = masks
        for A in range(N):
            Arow = np.full(N * N, A, dtype=np.int64)
            B = np.repeat(cols, N)
            C = np.tile(cols, N)
            if w4 is None:
                v = p4_block(Arow, B, C)
                bad = np.flatnonzero(v)
                if bad.size:
                    i = int(bad[0])
                    w4 = (A, int(B[i]), int(C[i]),
                          (int(v[i]) & -int(v[i])).bit_length() - 1)
            if w5 is None:
                v = p5_block(Arow, B, C)
                bad = np.flatnonzero(v)
                if bad.size:
                    i = int(bad[0])
                    w5 = (A, int(B[i]), int(C[i]),
                          (int(v[i]) & -int(v[i])).bit_length() - 1)
            count += N * N
    else:
        mode = "sampled+structured"
        chunk = 1 << 18
        done = 0
        while done < samples:
            m = min(chunk, samples - done)
            A, B, C = rng.integers(0, N, size=(3, m))
            for name, block in ((Axiom.P4, p4_block), (Axiom.P5, p5_block)):
                v = block(A, B, C)
                bad = np.flatnonzero(v)
                if bad.size and (w4 if name is Axiom.P4 else w5) is None:
                    i = int(bad[0])
                    wit = (int(A[i]), int(B[i]), int(C[i]),
                           (int(v[i]) & -int(v[i])).bit_length() - 1)
                    if name is Axiom.P4:
                        w4 = wit
                    else:
                        w5 = wit
            done += m
        count += samples

    checks[Axiom.P4] = ProbCheck(Axiom.P4, w4 is None, mode, count, w4)
    checks[Axiom.P5] = ProbCheck(Axiom.P5, w5 is None, mode, count, w5)

    # NORM: evaluate the pinned witness on both routes; fall back to a
    # family scan only if it unexpectedly holds (a different space)
    wn = None
    if n == 11:
        A, B, C, w = NORM_WITNESS
        lhs = T[A, B] & T[A, C]
        rhs = T[A, B & C]
        if lhs & ~rhs & (1 << w):
            sl = space.arrow(A, B) & space.arrow(A, C) & ~space.arrow(A, B & C)
            if not sl >> w & 1:
                raise InternalInconsistency("routes disagree on the pinned witness")
            wn = NORM_WITNESS
    if wn is None:
        v = Tm[FA, FB] & Tm[FA, FC] & ~Tm[FA, FB & FC]
        bad = np.flatnonzero(v)
        if bad.size:
            i = int(bad[0])
            wn = (int(FA[i]), int(FB[i]), int(FC[i]),
                  (int(v[i]) & -int(v[i])).bit_length() - 1)
    checks[Axiom.NORM] = ProbCheck(
        Axiom.NORM, wn is None, "pinned" if wn == NORM_WITNESS else "structured",
        1 if wn == NORM_WITNESS else len(FA), wn,
    )

    return ProbReport(checks, crosschecked=len(picks) if crosscheck else 0)
