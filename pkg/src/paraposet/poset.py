"""Finite bounded posets with bitmask-based order computations.

Elements are integers ``0..n-1``; subsets of a poset are plain int
bitmasks. The order relation is stored as one bitmask row per element
(``up[i]`` = everything above ``i``, ``down[i]`` = everything below),
built from cover pairs by transitive closure. At the sizes this library
targets (a few hundred elements at most) the O(n^3) closure and the
all-pairs scans below are cheap.

All values are immutable after construction and every operation is
pure, so instances can be shared freely across threads.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


class PosetError(ValueError):
    """Structural problem with an order relation."""


class NotAntisymmetric(PosetError):
    pass


class NotBounded(PosetError):
    pass


class BadIndex(PosetError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Iterate the indices set in a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


# subset-relation kinds, matching the four relations on the powerset
LE = "le"          # every element of A below every element of B
LE1 = "le1"        # every element of A below some element of B
LE2 = "le2"        # every element of B above some element of A
EQ2 = "approx2"    # le2 in both directions


class FinitePoset:
    """A bounded partial order on indexed elements.

    Construction validates reflexivity, antisymmetry, transitivity and
    the existence of a unique bottom and top.
    """

    def __init__(self, labels: Sequence[str], up: Sequence[int], name: str = ""):
        n = len(labels)
        if n == 0:
            raise PosetError("poset needs at least one element")
        if len(set(labels)) != n:
            raise PosetError("element labels must be unique")
        self.n = n
        self.name = name
        self.labels = tuple(str(x) for x in labels)
        self.full = (1 << n) - 1
        up = tuple(up)
        if len(up) != n or any(row & ~self.full for row in up):
            raise BadIndex("order rows do not match the element count")
        down = [0] * n
        for i in range(n):
            if not up[i] >> i & 1:
                raise PosetError("order must be reflexive")
            for j in bits(up[i]):
                down[j] |= 1 << i
        for i in range(n):
            if up[i] & down[i] != 1 << i:
                raise NotAntisymmetric(f"cycle through element {self.labels[i]}")
            for j in bits(up[i]):
                if up[j] & ~up[i]:
                    raise PosetError("order must be transitive")
        self.up = up
        self.down = tuple(down)
        bottoms = [i for i in range(n) if up[i] == self.full]
        tops = [i for i in range(n) if down[i] == self.full]
        if not bottoms or not tops:
            raise NotBounded("poset has no bottom or no top element")
        self.bottom = bottoms[0]
        self.top = tops[0]
        self._index = {lbl: i for i, lbl in enumerate(self.labels)}

    @classmethod
    def from_covers(cls, labels: Sequence[str], covers: Iterable[tuple], name: str = "") -> "FinitePoset":
        """Build from cover pairs (lower, upper), given as labels or indices."""
        labels = [str(x) for x in labels]
        index = {lbl: i for i, lbl in enumerate(labels)}
        n = len(labels)
        up = [1 << i for i in range(n)]
        for lo, hi in covers:
            i = lo if isinstance(lo, int) else index.get(str(lo))
            j = hi if isinstance(hi, int) else index.get(str(hi))
            if i is None or j is None or not (0 <= i < n and 0 <= j < n):
                raise BadIndex(f"unknown element in cover pair ({lo}, {hi})")
            up[i] |= 1 << j
        for k in range(n):
            kbit = 1 << k
            for i in range(n):
                if up[i] & kbit:
                    up[i] |= up[k]
        return cls(labels, up, name=name)

    # -- basic access -------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise BadIndex(f"no element labelled {label!r}") from None

    def label_set(self, mask: int) -> set:
        return {self.labels[i] for i in bits(mask)}

    def subset(self, labels: Iterable[str]) -> int:
        return mask_of(self.index(str(x)) for x in labels)

    def _check_subset(self, a: int) -> None:
        if a & ~self.full:
            raise BadIndex("subset indexes elements outside the poset")

    # -- cones and extremal elements ----------------------------------

    def lower_cone(self, a: int) -> int:
        """L(A): common lower bounds of A; L(empty) is the whole poset."""
        self._check_subset(a)
        res = self.full
        for i in bits(a):
            res &= self.down[i]
        return res

    def upper_cone(self, a: int) -> int:
        """U(A): common upper bounds of A; U(empty) is the whole poset."""
        self._check_subset(a)
        res = self.full
        for i in bits(a):
            res &= self.up[i]
        return res

    def max_of(self, a: int) -> int:
        """Maximal elements of A within the induced order."""
        self._check_subset(a)
        return mask_of(x for x in bits(a) if self.up[x] & a == 1 << x)

    def min_of(self, a: int) -> int:
        self._check_subset(a)
        return mask_of(x for x in bits(a) if self.down[x] & a == 1 << x)

    # -- relations between subsets ------------------------------------

    def subset_rel(self, a: int, b: int, kind: str) -> bool:
        """One of the four powerset relations: le, le1, le2, approx2."""
        self._check_subset(a)
        self._check_subset(b)
        if kind == LE:
            return a & ~self.lower_cone(b) == 0
        if kind == LE1:
            cover = 0
            for y in bits(b):
                cover |= self.down[y]
            return a & ~cover == 0
        if kind == LE2:
            cover = 0
            for x in bits(a):
                cover |= self.up[x]
            return b & ~cover == 0
        if kind == EQ2:
            return self.subset_rel(a, b, LE2) and self.subset_rel(b, a, LE2)
        raise ValueError(f"unknown subset relation {kind!r}")

    # -- meets and joins ----------------------------------------------

    def meet(self, x: int, y: int) -> Optional[int]:
        """Infimum of x and y, or None when no greatest lower bound exists."""
        lo = self.down[x] & self.down[y]
        m = self.max_of(lo)
        if m and m & (m - 1) == 0:
            return m.bit_length() - 1
        return None

    def join(self, x: int, y: int) -> Optional[int]:
        hi = self.up[x] & self.up[y]
        m = self.min_of(hi)
        if m and m & (m - 1) == 0:
            return m.bit_length() - 1
        return None

    @cached_property
    def is_lattice(self) -> bool:
        return all(
            self.meet(x, y) is not None and self.join(x, y) is not None
            for x in range(self.n) for y in range(x + 1, self.n)
        )

    # -- structural predicates ----------------------------------------

    def distributive_variants(self, x: int, y: int, z: int):
        """The four binary LU-identities at (x, y, z) as (lhs, rhs) masks."""
        L, U = self.lower_cone, self.upper_cone
        b = 1 << x | 1 << y
        c = 1 << x | 1 << z
        d = 1 << y | 1 << z
        return (
            (L(U(b) | 1 << z), L(U(L(c) | L(d)))),
            (U(L(c) | L(d)), U(L(U(b) | 1 << z))),
            (U(L(b) | 1 << z), U(L(U(c) | U(d)))),
            (L(U(c) | U(d)), L(U(L(b) | 1 << z))),
        )

    @cached_property
    def is_distributive(self) -> bool:
        """First binary LU-identity, checked over all triples."""
        L, U = self.lower_cone, self.upper_cone
        for x in range(self.n):
            for y in range(self.n):
                uxy = U(1 << x | 1 << y)
                for z in range(self.n):
                    lhs = L(uxy | 1 << z)
                    rhs = L(U(L(1 << x | 1 << z) | L(1 << y | 1 << z)))
                    if lhs != rhs:
                        return False
        return True

    def is_mub_complete(self, max_subset: int = 2) -> bool:
        """Below every upper bound of a small subset sits a minimal upper bound.

        Finiteness makes the unrestricted condition automatic; the check
        runs over subsets up to ``max_subset`` elements.
        """
        for size in range(1, max_subset + 1):
            for m in combinations(range(self.n), size):
                u = self.upper_cone(mask_of(m))
                mins = self.min_of(u)
                for x in bits(u):
                    if not mins & self.down[x]:
                        return False
        return True

    def is_mlb_complete(self, max_subset: int = 2) -> bool:
        for size in range(1, max_subset + 1):
            for m in combinations(range(self.n), size):
                lo = self.lower_cone(mask_of(m))
                maxs = self.max_of(lo)
                for x in bits(lo):
                    if not maxs & self.up[x]:
                        return False
        return True

    def has_maximality(self) -> bool:
        """Every two-element lower cone has a maximal element."""
        return all(
            self.max_of(self.lower_cone(1 << a | 1 << b)) != 0
            for a in range(self.n) for b in range(self.n)
        )

    def covers(self) -> list:
        """All pairs (x, y) with x strictly below y and nothing in between."""
        out = []
        for x in range(self.n):
            for y in bits(self.up[x] & ~(1 << x)):
                if self.up[x] & self.down[y] == 1 << x | 1 << y:
                    out.append((x, y))
        return out

    def covers_pair(self, x: int, y: int) -> bool:
        return self.lt(x, y) and self.up[x] & self.down[y] == 1 << x | 1 << y

    def induced(self, mask: int) -> tuple:
        """Subposet on the elements of ``mask``; returns (poset, old_indices).

        The restriction must itself be bounded, which holds for every use
        here (principal filters, involution-closed spans).
        """
        old = list(bits(mask))
        pos = {o: k for k, o in enumerate(old)}
        up = [mask_of(pos[j] for j in bits(self.up[o] & mask)) for o in old]
        sub = FinitePoset([self.labels[o] for o in old], up)
        return sub, old

    # -- misc ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FinitePoset)
            and self.labels == other.labels
            and self.up == other.up
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.up))

    def __repr__(self) -> str:
        tag = self.name or f"{self.n} elements"
        return f"FinitePoset({tag})"


def distributive_nary(p: FinitePoset, xs: Sequence[int], z: int) -> tuple:
    """The n-ary LU-identity and its dual at (xs, z) as (lhs==rhs, lhs==rhs)."""
    L, U = p.lower_cone, p.upper_cone
    xmask = mask_of(xs)
    cones_l = 0
    cones_u = 0
    for x in xs:
        cones_l |= L(1 << x | 1 << z)
        cones_u |= U(1 << x | 1 << z)
    first = L(U(xmask) | 1 << z) == L(U(cones_l))
    second = U(L(xmask) | 1 << z) == U(L(cones_u))
    return first, second
