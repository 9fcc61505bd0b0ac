"""Adjointness conditions for product/implication pairs.

The element-level conditions (A)/(B) only make sense where both cells
are singletons; non-singleton cells are counted as not applicable
instead of being coerced. The subscripted variants work on arbitrary
set-valued cells through the le1/le2 relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .poset import FinitePoset, PosetError, bits
from .ortho import (OrthoPoset, is_boolean_algebra, is_boolean_poset,
                    is_orthomodular, is_weakly_boolean)
from .implication import (NotALattice, NotOrthogonal, SetValuedTable,
                          TheoremReport, impl_I, sasaki_impl, sasaki_proj,
                          _require_orthogonal)


class NoLeastElement(PosetError):
    def __init__(self, x, y):
        super().__init__(f"residuation candidates for ({x}, {y}) have no least element")
        self.pair = (x, y)


class PreconditionUnmet(PosetError):
    pass


@dataclass
class AdjointnessReport:
    holds_A: bool = True
    holds_B: bool = True
    holds_A21: bool = True
    holds_B12: bool = True
    witness_A: Optional[tuple] = None
    witness_B: Optional[tuple] = None
    witness_A21: Optional[tuple] = None
    witness_B12: Optional[tuple] = None
    not_applicable: int = 0


def check_conditions(o: OrthoPoset, prod: SetValuedTable,
                     imp: SetValuedTable) -> AdjointnessReport:
    """Evaluate (A), (B) and their subscripted variants over all triples."""
    p = o.poset
    rep = AdjointnessReport()
    for x in range(p.n):
        for y in range(p.n):
            pc = prod.cell(x, y)
            for z in range(p.n):
                ic = imp.cell(y, z)
                single = pc & (pc - 1) == 0 and ic & (ic - 1) == 0
                if single:
                    pe = pc.bit_length() - 1
                    ie = ic.bit_length() - 1
                    if p.leq(pe, z) and not p.leq(x, ie):
                        if rep.holds_A:
                            rep.holds_A = False
                            rep.witness_A = (x, y, z)
                    if p.leq(x, ie) and not p.leq(pe, z):
                        if rep.holds_B:
                            rep.holds_B = False
                            rep.witness_B = (x, y, z)
                else:
                    rep.not_applicable += 1
                le2 = p.subset_rel(pc, 1 << z, "le2")
                le1 = p.subset_rel(1 << x, ic, "le1")
                if le2 and not le1 and rep.holds_A21:
                    rep.holds_A21 = False
                    rep.witness_A21 = (x, y, z)
                if le1 and not le2 and rep.holds_B12:
                    rep.holds_B12 = False
                    rep.witness_B12 = (x, y, z)
    return rep


def lemma_AB_equiv(o: OrthoPoset) -> bool:
    """(A) matches (B) and the subscripted pair matches, for the Sasaki pair."""
    rep = check_conditions(o, sasaki_proj(o), sasaki_impl(o))
    return rep.holds_A == rep.holds_B and rep.holds_A21 == rep.holds_B12


# -- lattice-side results (plain involutions allowed) -----------------

def _sasaki_lattice(p: FinitePoset, inv: Sequence[int]):
    """Direct lattice formulas for the Sasaki product and implication."""
    if not p.is_lattice:
        raise NotALattice("Sasaki lattice operators need a lattice")
    prod = [[p.meet(y, p.join(x, inv[y])) for y in range(p.n)]
            for x in range(p.n)]
    imp = [[p.join(inv[x], p.meet(x, y)) for y in range(p.n)]
           for x in range(p.n)]
    return prod, imp


def omidentity_equiv(p: FinitePoset, inv: Sequence[int]) -> Tuple[bool, bool, bool]:
    """Both orthomodular identities against two-sided Sasaki adjointness.

    Stated for lattices with an arbitrary involution; ``inv`` only needs
    to satisfy inv[inv[x]] == x.
    """
    inv = tuple(inv)
    assert all(inv[inv[x]] == x for x in range(p.n))
    prod, imp = _sasaki_lattice(p, inv)
    oi = all(
        p.join(x, p.meet(p.join(x, y), inv[x])) == p.join(x, y)
        and p.meet(x, p.join(p.meet(x, y), inv[x])) == p.meet(x, y)
        for x in range(p.n) for y in range(p.n)
    )
    adj = all(
        p.leq(prod[x][y], z) == p.leq(x, imp[y][z])
        for x in range(p.n) for y in range(p.n) for z in range(p.n)
    )
    return oi, adj, oi == adj


def sasom_equiv(o: OrthoPoset) -> Tuple[bool, bool, bool]:
    """Orthomodularity against the le2/le1 Sasaki adjointness on posets."""
    _require_orthogonal(o)
    rep = check_conditions(o, sasaki_proj(o), sasaki_impl(o))
    adj21 = rep.holds_A21 and rep.holds_B12
    om = is_orthomodular(o)
    return om, adj21, om == adj21


@dataclass
class ConditionReport:
    """Outcome of a 'condition forces orthomodularity' statement."""

    condition_holds: bool
    orthomodular: bool

    @property
    def consistent(self) -> bool:
        return not self.condition_holds or self.orthomodular


def th3_check(o: OrthoPoset) -> ConditionReport:
    """(A) for the Sasaki product with the cone implication, on lattices;
    the le2/le1 variant on non-lattice orthogonal posets. Either one
    holding forces orthomodularity."""
    rep = check_conditions(o, sasaki_proj(o), impl_I(o))
    cond = rep.holds_A if o.poset.is_lattice else rep.holds_A21
    return ConditionReport(cond, is_orthomodular(o))


def posth3_check(o: OrthoPoset) -> ConditionReport:
    """The le2/le1 condition variant on any orthogonal poset."""
    rep = check_conditions(o, sasaki_proj(o), impl_I(o))
    return ConditionReport(rep.holds_A21, is_orthomodular(o))


# -- residuation ------------------------------------------------------

@dataclass
class ResiduationResult:
    product: Optional[SetValuedTable]
    failure: Optional[Tuple[int, int]] = None
    adjoint: bool = False


def residuate(o: OrthoPoset, imp: SetValuedTable,
              strict: bool = False) -> ResiduationResult:
    """Try to build the product adjoint to ``imp``.

    For each (x, y) the candidate set is every z with x le1 imp(y, z);
    the product cell is its least element. With ``strict`` a missing
    least element raises instead of being reported.
    """
    p = o.poset
    cells = []
    for x in range(p.n):
        row = []
        for y in range(p.n):
            cand = 0
            for z in range(p.n):
                if p.subset_rel(1 << x, imp.cell(y, z), "le1"):
                    cand |= 1 << z
            least = p.min_of(cand)
            if least == 0 or least & (least - 1):
                if strict:
                    raise NoLeastElement(p.labels[x], p.labels[y])
                return ResiduationResult(None, failure=(x, y))
            row.append(least)
        cells.append(tuple(row))
    prod = SetValuedTable(p, tuple(cells))
    adjoint = all(
        p.leq(prod.element(x, y), z) == p.subset_rel(1 << x, imp.cell(y, z), "le1")
        for x in range(p.n) for y in range(p.n) for z in range(p.n)
    )
    return ResiduationResult(prod, adjoint=adjoint)


def adji_consequences(o: OrthoPoset, prod: SetValuedTable) -> TheoremReport:
    """Consequences of having a product adjoint to the cone implication."""
    p = o.poset
    rep = TheoremReport("adji")
    zero = 1 << p.bottom
    for x in range(p.n):
        if prod.cell(x, o.inv[x]) != zero:
            rep.violations.append(("i", x))
    if not is_orthomodular(o):
        rep.violations.append(("ii",))
    for x in range(p.n):
        for y in range(p.n):
            pc = prod.cell(x, y)
            maxl = p.max_of(p.down[x] & p.down[y])
            if not p.subset_rel(pc, maxl, "le1"):
                rep.violations.append(("iii", x, y))
            if pc & ~(p.down[x] & p.down[y]):
                rep.violations.append(("iii-bound", x, y))
    if not is_weakly_boolean(o):
        rep.violations.append(("iv",))
    return rep


def adjibp_check(o: OrthoPoset) -> Optional[bool]:
    """Orthogonal Boolean posets with maximality must be Boolean algebras.

    Returns None when the hypotheses fail, else the conclusion verdict.
    """
    from .ortho import is_orthogonal_poset
    if not (is_orthogonal_poset(o) and is_boolean_poset(o)
            and o.poset.has_maximality()):
        return None
    return is_boolean_algebra(o)


def adjebp_equiv(o: OrthoPoset) -> Tuple[bool, bool, bool]:
    """Adjoint-to-cone-implication existence against Booleanness."""
    res = residuate(o, impl_I(o))
    exists = res.product is not None and res.adjoint
    if exists:
        rep = adji_consequences(o, res.product)
        assert rep.ok, f"adjoint product consequences fail: {rep.violations}"
    is_ba = is_boolean_algebra(o)
    if is_boolean_poset(o):
        assert adjibp_check(o) in (None, True)
    return exists, is_ba, exists == is_ba
