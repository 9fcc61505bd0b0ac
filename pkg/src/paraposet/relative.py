"""Per-filter involutions, relative paraorthomodularity and the
section-based implications.

A section family assigns every element x an antitone involution of the
principal filter [x,1]. Stored as one row per x with the image of y,
or -1 for y outside the filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .poset import FinitePoset, PosetError, bits, mask_of
from .implication import JoinMissing, SetValuedTable, TheoremReport


class SectionViolation(PosetError):
    def __init__(self, x, detail):
        super().__init__(f"bad section at {x}: {detail}")
        self.base = x


class NotJoinSemilattice(PosetError):
    pass


class CompatibilityFailed(PosetError):
    pass


@dataclass(frozen=True)
class SectionedPoset:
    """A bounded poset with an antitone involution on every [x,1]."""

    poset: FinitePoset
    sections: Tuple[Tuple[int, ...], ...]

    def sec(self, x: int, y: int) -> int:
        """The image y^x; y must lie in [x,1]."""
        v = self.sections[x][y]
        if v < 0:
            raise SectionViolation(self.poset.labels[x],
                                   f"{self.poset.labels[y]} not in the filter")
        return v

    @property
    def n(self) -> int:
        return self.poset.n

    def __repr__(self) -> str:
        return f"SectionedPoset({self.poset.name or self.poset.n})"


def validate_sections(poset: FinitePoset, sections) -> SectionedPoset:
    """Check every row is an antitone involution of its filter."""
    rows = []
    for x in range(poset.n):
        row = list(sections[x]) if not callable(sections) else [
            sections(x, y) if poset.leq(x, y) else -1 for y in range(poset.n)]
        lx = poset.labels[x]
        filt = poset.up[x]
        if len(row) != poset.n:
            raise SectionViolation(lx, "row length mismatch")
        for y in range(poset.n):
            inside = bool(filt >> y & 1)
            if inside != (row[y] >= 0):
                raise SectionViolation(lx, f"domain mismatch at {poset.labels[y]}")
            if inside and not (poset.leq(x, row[y]) and row[row[y]] == y):
                raise SectionViolation(lx, f"not an involution of the filter at {poset.labels[y]}")
        for y in bits(filt):
            for z in bits(poset.up[y]):
                if not poset.leq(row[z], row[y]):
                    raise SectionViolation(
                        lx, f"not antitone on ({poset.labels[y]}, {poset.labels[z]})")
        rows.append(tuple(row))
    s = SectionedPoset(poset, tuple(rows))
    # forced for antitone involutions on bounded filters
    assert all(rows[x][x] == poset.top and rows[x][poset.top] == x
               for x in range(poset.n))
    return s


def relative_paraortho_witness(s: SectionedPoset) -> Optional[Tuple[int, int, int]]:
    """A triple (x, y, z) with x <= y < z and y^x meet z = x inside [x,1].

    The meet is read on relative cones, so it never requires the meet to
    exist as an element.
    """
    p = s.poset
    for x in range(p.n):
        filt = p.up[x]
        for y in bits(filt):
            yi = s.sections[x][y]
            for z in bits(p.up[y] & ~(1 << y)):
                if p.down[yi] & p.down[z] & filt == 1 << x:
                    return (x, y, z)
    return None


def is_relatively_paraorthomodular(s: SectionedPoset) -> bool:
    return relative_paraortho_witness(s) is None


def check_C(s: SectionedPoset) -> Tuple[bool, Optional[Tuple[int, int, int]]]:
    """Whether z^y = z^x v y on every chain x <= y <= z."""
    p = s.poset
    for x in range(p.n):
        for y in bits(p.up[x]):
            for z in bits(p.up[y]):
                j = p.join(s.sections[x][z], y)
                if j is None:
                    raise JoinMissing(
                        f"join of {p.labels[s.sections[x][z]]} and {p.labels[y]} missing")
                if j != s.sections[y][z]:
                    return False, (x, y, z)
    return True, None


def impl_I3(s: SectionedPoset) -> SetValuedTable:
    """x -> y as the section images of the minimal upper bounds of (x, y)."""
    p = s.poset
    cells = []
    for x in range(p.n):
        row = []
        for y in range(p.n):
            cell = 0
            for w in bits(p.min_of(p.up[x] & p.up[y])):
                cell |= 1 << s.sections[y][w]
            row.append(cell)
        cells.append(tuple(row))
    return SetValuedTable(p, tuple(cells))


def impl_I4(s: SectionedPoset) -> SetValuedTable:
    """x -> y as (x v y)^y on join-semilattices; cells are singletons."""
    p = s.poset
    cells = []
    for x in range(p.n):
        row = []
        for y in range(p.n):
            j = p.join(x, y)
            if j is None:
                raise NotJoinSemilattice(
                    f"join of {p.labels[x]} and {p.labels[y]} missing")
            row.append(1 << s.sections[y][j])
        cells.append(tuple(row))
    return SetValuedTable(p, tuple(cells))


def check_th2(s: SectionedPoset) -> TheoremReport:
    """Elementary properties of the section implication."""
    t = impl_I3(s)
    p = s.poset
    rep = TheoremReport("th2")
    one = 1 << p.top

    def both(tag, lhs, rhs, *elems):
        if lhs != rhs:
            rep.violations.append((tag, *elems))
        if not p.subset_rel(lhs, rhs, "approx2"):
            rep.violations_elementwise.append((tag, *elems))

    for x in range(p.n):
        for y in range(p.n):
            cell = t.cell(x, y)
            if cell & ~p.up[y]:
                rep.violations.append(("i", x, y))
            if (cell == one) != p.leq(x, y):
                rep.violations.append(("ii", x, y))
            if p.leq(x, y) and cell != one:
                rep.violations.append(("iii-le", x, y))
            j = p.join(x, y)
            if j is not None and cell != 1 << s.sections[y][j]:
                rep.violations.append(("iii-join", x, y))
            if p.leq(y, x) and cell != 1 << s.sections[y][x]:
                rep.violations.append(("iii-ge", x, y))
            minu = p.min_of(p.up[x] & p.up[y])
            both("iv", t.lift(cell, 1 << y), minu, x, y)
            both("v", t.lift(t.lift(cell, 1 << y), 1 << y), cell, x, y)
    return rep


def para_via_I3(s: SectionedPoset) -> Tuple[bool, bool, bool]:
    """Global paraorthomodularity of ^0 against the implication law.

    The law: x <= y^0 and x -> y = {y} together force x = y^0.
    """
    t = impl_I3(s)
    p = s.poset
    g = s.sections[p.bottom]
    zero = 1 << p.bottom
    direct = True
    for x in range(p.n):
        for y in bits(p.up[x] & ~(1 << x)):
            if p.down[g[x]] & p.down[y] == zero:
                direct = False
    law = all(
        x == g[y]
        for x in range(p.n) for y in range(p.n)
        if p.leq(x, g[y]) and t.cell(x, y) == 1 << y
    )
    return direct, law, direct == law


def relpara_via_impl_under_C(s: SectionedPoset) -> Tuple[bool, bool, bool]:
    """Relative paraorthomodularity against 'x -> y = {1} forces x <= y'.

    The equivalence needs the compatibility condition on sections.
    """
    ok, w = check_C(s)
    if not ok:
        raise CompatibilityFailed(f"compatibility fails on chain {w}")
    t = impl_I3(s)
    p = s.poset
    one = 1 << p.top
    law = all(
        p.leq(x, y)
        for x in range(p.n) for y in range(p.n)
        if t.cell(x, y) == one
    )
    direct = is_relatively_paraorthomodular(s)
    return direct, law, direct == law


def antitone_first_arg_I4(s: SectionedPoset) -> bool:
    """On join-semilattices, x <= y forces (y -> z) <= (x -> z)."""
    t = impl_I4(s)
    p = s.poset
    for x in range(p.n):
        for y in bits(p.up[x]):
            for z in range(p.n):
                if not p.leq(t.element(y, z), t.element(x, z)):
                    return False
    return True


def sections_from_involution(o) -> SectionedPoset:
    """Sections z^y := z' v y induced by a global involution.

    Needs every join z' v y with y <= z to exist; on orthomodular
    lattices this family satisfies the compatibility condition.
    """
    p = o.poset
    rows = []
    for x in range(p.n):
        row = [-1] * p.n
        for y in bits(p.up[x]):
            j = p.join(o.inv[y], x)
            if j is None:
                raise JoinMissing(
                    f"join of {p.labels[o.inv[y]]} and {p.labels[x]} missing")
            row[y] = j
        rows.append(tuple(row))
    return validate_sections(p, rows)
