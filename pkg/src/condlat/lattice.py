"""Finite bounded lattices over dense integer indices.

Conventions used by the whole package:

* The elements of an n-element lattice are the integers 0..n-1.  Names
  are display labels only; every computation is index based.
* A subset of elements is a Python int bitmask: bit e set iff element e
  belongs to the subset.  The same convention is used for frame points.
* ``up_mask(a)`` is the bitmask of x with a <= x, ``down_mask(a)`` the
  bitmask of x <= a; both include a itself.

Construction is strict.  ``FiniteLattice`` refuses anything that is not
a partial order with a global bottom, a global top, and all binary meets
and joins; each rejection raises its own exception type with a witness
in the message.  A one-element lattice (bottom == top) is accepted.
"""

from __future__ import annotations

from .errors import (
    MissingBound,
    NotALattice,
    NotAPartialOrder,
    TooLarge,
)

MAX_ELEMENTS = 64  # one machine word of bitmask; raise deliberately if ever needed


def _bits(mask: int):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """A bounded lattice with precomputed order masks and meet/join tables."""

    def __init__(self, names, up_rows, *, max_size: int = MAX_ELEMENTS):
        names = tuple(str(x) for x in names)
        n = len(names)
        if n == 0:
            raise NotALattice("empty carrier")
        if n > max_size:
            raise TooLarge(f"{n} elements exceeds the size guard of {max_size}")
        if len(set(names)) != n:
            raise NotAPartialOrder("duplicate element names")

        rows = [int(r) for r in up_rows]
        if len(rows) != n:
            raise NotAPartialOrder("relation row count does not match element count")
        full = (1 << n) - 1
        for a in range(n):
            if rows[a] & ~full:
                raise NotAPartialOrder(f"row for {names[a]} references unknown elements")
            rows[a] |= 1 << a
        # transitive closure, then antisymmetry; a cycle shows up as a 2-cycle here
        for k in range(n):
            kbit = 1 << k
            for a in range(n):
                if rows[a] & kbit:
                    rows[a] |= rows[k]
        for a in range(n):
            for b in range(a + 1, n):
                if rows[a] >> b & 1 and rows[b] >> a & 1:
                    raise NotAPartialOrder(
                        f"{names[a]} <= {names[b]} and {names[b]} <= {names[a]}"
                    )

        dn = [0] * n
        for a in range(n):
            for b in _bits(rows[a]):
                dn[b] |= 1 << a

        bottom = top = -1
        for a in range(n):
            if rows[a] == full:
                bottom = a
            if dn[a] == full:
                top = a
        if bottom < 0:
            raise MissingBound("no global bottom")
        if top < 0:
            raise MissingBound("no global top")

        meet_t = [[0] * n for _ in range(n)]
        join_t = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                common = dn[a] & dn[b]
                m = -1
                for x in _bits(common):
                    if common & ~dn[x] == 0:
                        m = x
                        break
                if m < 0:
                    raise NotALattice(f"{names[a]} and {names[b]} have no meet")
                meet_t[a][b] = meet_t[b][a] = m
                common = rows[a] & rows[b]
                j = -1
                for x in _bits(common):
                    if common & ~rows[x] == 0:
                        j = x
                        break
                if j < 0:
                    raise NotALattice(f"{names[a]} and {names[b]} have no join")
                join_t[a][b] = join_t[b][a] = j

        self.n = n
        self.names = names
        self.full_mask = full
        self.bottom = bottom
        self.top = top
        self._up = tuple(rows)
        self._dn = tuple(dn)
        self.meet_table = tuple(tuple(r) for r in meet_t)
        self.join_table = tuple(tuple(r) for r in join_t)
        self._index = {name: i for i, name in enumerate(names)}

    # -- order ----------------------------------------------------------

    def leq(self, a: int, b: int) -> bool:
        return bool(self._up[a] >> b & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def up_mask(self, a: int) -> int:
        return self._up[a]

    def down_mask(self, a: int) -> int:
        return self._dn[a]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet_mask(self, mask: int) -> int:
        """Meet of a subset given as a bitmask; the empty meet is top."""
        out = self.top
        for x in _bits(mask):
            out = self.meet_table[out][x]
        return out

    def join_mask(self, mask: int) -> int:
        """Join of a subset given as a bitmask; the empty join is bottom."""
        out = self.bottom
        for x in _bits(mask):
            out = self.join_table[out][x]
        return out

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown element name {name!r}") from None

    # -- structure ------------------------------------------------------

    def covers(self):
        """All pairs (a, b) with a covered by b, in index order."""
        out = []
        for a in range(self.n):
            strict = self._up[a] & ~(1 << a)
            for b in _bits(strict):
                between = strict & self._dn[b] & ~(1 << b)
                if between == 0:
                    out.append((a, b))
        return out

    def atoms(self):
        return [b for (a, b) in self.covers() if a == self.bottom]

    def coatoms(self):
        return [a for (a, b) in self.covers() if b == self.top]

    def distributivity_witness(self):
        """A triple (a, b, c) violating a∧(b∨c) = (a∧b)∨(a∧c), or None."""
        for a in range(self.n):
            for b in range(self.n):
                for c in range(self.n):
                    lhs = self.meet(a, self.join(b, c))
                    rhs = self.join(self.meet(a, b), self.meet(a, c))
                    if lhs != rhs:
                        return (a, b, c)
        return None

    def is_distributive(self) -> bool:
        return self.distributivity_witness() is None

    def complements_of(self, a: int):
        """All b with a∧b = bottom and a∨b = top."""
        return [
            b
            for b in range(self.n)
            if self.meet(a, b) == self.bottom and self.join(a, b) == self.top
        ]

    def complement_map(self):
        """One complement per element, or None if some element has none."""
        out = []
        for a in range(self.n):
            cs = self.complements_of(a)
            if not cs:
                return None
            out.append(cs[0])
        return tuple(out)

    def is_boolean(self) -> bool:
        return self.is_distributive() and self.complement_map() is not None

    def __repr__(self):
        return f"FiniteLattice({self.n} elements: {' '.join(self.names)})"

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_cover(cls, names, cover_pairs, **kw):
        """Build from covering pairs (a, b) meaning a is covered by b."""
        names = tuple(names)
        rows = [0] * len(names)
        for a, b in cover_pairs:
            rows[a] |= 1 << b
        return cls(names, rows, **kw)

    @classmethod
    def from_leq(cls, names, leq_pairs, **kw):
        """Build from arbitrary (a, b) pairs meaning a <= b; closure is taken."""
        names = tuple(names)
        rows = [0] * len(names)
        for a, b in leq_pairs:
            rows[a] |= 1 << b
        return cls(names, rows, **kw)


def chain(k: int, names=None) -> FiniteLattice:
    """The k-element chain 0 < 1 < ... < k-1."""
    if names is None:
        if k == 1:
            names = ("0",)
        else:
            names = ("0",) + tuple(f"m{i}" for i in range(1, k - 1)) + ("1",)
    return FiniteLattice.from_cover(names, [(i, i + 1) for i in range(k - 1)])


def boolean_algebra(atom_names) -> FiniteLattice:
    """Powerset of the given atoms; element index i is the subset with mask i.

    Names are the concatenation of member atom names, "0" for the empty set.
    """
    atom_names = tuple(atom_names)
    k = len(atom_names)
    if k > 6:
        raise TooLarge(f"2^{k} elements exceeds the size guard of {MAX_ELEMENTS}")
    n = 1 << k
    names = []
    for mask in range(n):
        names.append("".join(atom_names[i] for i in _bits(mask)) or "0")
    rows = []
    for mask in range(n):
        row = 0
        for other in range(n):
            if mask & ~other == 0:
                row |= 1 << other
        rows.append(row)
    return FiniteLattice(names, rows)


def antichain_bounded(middle_names) -> FiniteLattice:
    """Bottom, a middle antichain, top: the lattice M_k for k middle elements."""
    middle_names = tuple(middle_names)
    k = len(middle_names)
    names = ("0",) + middle_names + ("1",)
    covers = [(0, i) for i in range(1, k + 1)] + [(i, k + 1) for i in range(1, k + 1)]
    return FiniteLattice.from_cover(names, covers)


def find_isomorphism(L1: FiniteLattice, L2: FiniteLattice, table1=None, table2=None):
    """A bijection phi with a <= b iff phi(a) <= phi(b), or None.

    When table1/table2 are given (n x n index tables), phi must also carry
    table1 entrywise onto table2.  Backtracking with degree invariants;
    meant for the small structures this package works with.
    """
    if L1.n != L2.n:
        return None
    n = L1.n

    def key(L, a):
        return (bin(L.down_mask(a)).count("1"), bin(L.up_mask(a)).count("1"))

    cands = []
    for a in range(n):
        k1 = key(L1, a)
        cs = [b for b in range(n) if key(L2, b) == k1]
        if not cs:
            return None
        cands.append(cs)

    phi = [-1] * n
    used = [False] * n

    def ok(a, b):
        for x in range(n):
            if phi[x] < 0:
                continue
            if L1.leq(a, x) != L2.leq(b, phi[x]):
                return False
            if L1.leq(x, a) != L2.leq(phi[x], b):
                return False
        return True

    def rec(a):
        if a == n:
            if table1 is not None:
                for x in range(n):
                    for y in range(n):
                        if phi[table1[x][y]] != table2[phi[x]][phi[y]]:
                            return False
            return True
        for b in cands[a]:
            if used[b] or not ok(a, b):
                continue
            phi[a] = b
            used[b] = True
            if rec(a + 1):
                return True
            phi[a] = -1
            used[b] = False
        return False

    if rec(0):
        return tuple(phi)
    return None
