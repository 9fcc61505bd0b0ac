"""Antitone involutions and structural predicates on involutive posets.

Predicates that can fail in interesting ways have a ``*_witness``
variant returning a concrete counterexample (or None); the boolean
forms are thin wrappers. Witnesses are element indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Tuple

from .poset import FinitePoset, PosetError, bits, mask_of


class InvolutionError(PosetError):
    pass


class AntitoneViolation(InvolutionError):
    def __init__(self, x, y):
        super().__init__(f"map is not antitone at ({x}, {y})")
        self.pair = (x, y)


class InvolutionViolation(InvolutionError):
    def __init__(self, x):
        super().__init__(f"map is not an involution at {x}")
        self.element = x


class UndefinedTerm(PosetError):
    """A meet or join needed by a predicate does not exist."""

    def __init__(self, x, y):
        super().__init__(f"required meet/join absent for ({x}, {y})")
        self.pair = (x, y)


@dataclass(frozen=True)
class OrthoPoset:
    """A bounded poset together with an antitone involution.

    Use :func:`validate_involution` to construct; the raw constructor
    does not re-validate.
    """

    poset: FinitePoset
    inv: Tuple[int, ...]

    @property
    def n(self) -> int:
        return self.poset.n

    def __repr__(self) -> str:
        return f"OrthoPoset({self.poset.name or self.poset.n})"


def validate_involution(poset: FinitePoset, inv: Sequence[int]) -> OrthoPoset:
    """Wrap ``poset`` with the map ``inv``, checking both involution laws."""
    inv = tuple(inv)
    n = poset.n
    if len(inv) != n or any(not 0 <= i < n for i in inv):
        raise InvolutionError("involution must be a total self-map")
    for x in range(n):
        if inv[inv[x]] != x:
            raise InvolutionViolation(poset.labels[x])
    for x in range(n):
        for y in bits(poset.up[x]):
            if not poset.leq(inv[y], inv[x]):
                raise AntitoneViolation(poset.labels[x], poset.labels[y])
    o = OrthoPoset(poset, inv)
    # forced for any antitone involution on a bounded poset
    assert inv[poset.bottom] == poset.top
    return o


def is_antitone_involution(poset: FinitePoset, inv: Sequence[int]) -> bool:
    try:
        validate_involution(poset, inv)
        return True
    except InvolutionError:
        return False


# -- orthogonality ----------------------------------------------------

def orthogonal(o: OrthoPoset, x: int, y: int) -> bool:
    """x is below the involute of y (equivalently, y below that of x)."""
    return o.poset.leq(x, inv_of(o, y))


def inv_of(o: OrthoPoset, x: int) -> int:
    return o.inv[x]


def orthogonality_witness(o: OrthoPoset) -> Optional[Tuple[int, int]]:
    """An orthogonal pair without a join, if any."""
    p = o.poset
    for x in range(p.n):
        for y in range(x, p.n):
            if p.leq(x, o.inv[y]) and p.join(x, y) is None:
                return (x, y)
    return None


def is_orthogonal_poset(o: OrthoPoset) -> bool:
    return orthogonality_witness(o) is None


# -- paraorthomodularity ----------------------------------------------

def paraortho_witness(o: OrthoPoset) -> Optional[Tuple[int, int]]:
    """A pair x < y with L(x', y) = {0}, violating paraorthomodularity.

    The meet condition is read on cones, so the witness never depends on
    the meet existing as an element.
    """
    p = o.poset
    zero = 1 << p.bottom
    for x in range(p.n):
        for y in bits(p.up[x] & ~(1 << x)):
            if p.down[o.inv[x]] & p.down[y] == zero:
                return (x, y)
    return None


def is_paraorthomodular(o: OrthoPoset) -> bool:
    return paraortho_witness(o) is None


def is_sharply_paraorthomodular(o: OrthoPoset) -> bool:
    return is_orthogonal_poset(o) and is_paraorthomodular(o)


def find_benzene(o: OrthoPoset) -> Optional[Tuple[int, int]]:
    """A pair spanning a strong subposet orthoisomorphic to the benzene ring.

    Returns (x, y) with x < y, x' meet y = 0, such that
    {0, x, y, x', y', 1} induces the hexagon; present exactly when
    paraorthomodularity fails.
    """
    w = paraortho_witness(o)
    if w is None:
        return None
    x, y = w
    p = o.poset
    xi, yi = o.inv[x], o.inv[y]
    six = {p.bottom, x, y, xi, yi, p.top}
    assert len(six) == 6
    # the only comparabilities among the four middles are x<y and y'<x'
    middles = (x, y, xi, yi)
    expected = {(x, y), (yi, xi)}
    got = {(a, b) for a in middles for b in middles if a != b and p.leq(a, b)}
    assert got == expected, "paraorthomodularity witness does not span a hexagon"
    return w


# -- complementation, regularity, orthomodularity ---------------------

def is_complementation(o: OrthoPoset) -> bool:
    """Every x meets its involute in {0} and joins it in {1} (cone-wise)."""
    p = o.poset
    zero, one = 1 << p.bottom, 1 << p.top
    for x in range(p.n):
        xi = o.inv[x]
        if p.down[x] & p.down[xi] != zero or p.up[x] & p.up[xi] != one:
            return False
    return True


def is_regular(o: OrthoPoset) -> bool:
    """x meet x' lies below y join y' for all pairs.

    On orthogonal posets both terms always exist; elsewhere a missing
    term raises UndefinedTerm.
    """
    p = o.poset
    meets = []
    joins = []
    for x in range(p.n):
        m = p.meet(x, o.inv[x])
        j = p.join(x, o.inv[x])
        if m is None or j is None:
            raise UndefinedTerm(p.labels[x], p.labels[o.inv[x]])
        meets.append(m)
        joins.append(j)
    return all(p.leq(m, j) for m in meets for j in joins)


def orthomodular_witness(o: OrthoPoset) -> Optional[tuple]:
    """First failure of the orthomodular law x <= y => x v (y ^ x') = y.

    A missing meet y ^ x' counts as a failure at that pair.
    """
    p = o.poset
    for x in range(p.n):
        for y in bits(p.up[x]):
            if not om_law_holds(o, x, y):
                return (x, y)
    return None


def om_law_holds(o: OrthoPoset, x: int, y: int) -> bool:
    """Whether x v (y ^ x') = y for a specific pair with x <= y."""
    p = o.poset
    m = p.meet(y, o.inv[x])
    if m is None:
        return False
    return p.join(x, m) == y


def om_u_identity(o: OrthoPoset, elementwise: bool = False) -> bool:
    """The Min-U form of the orthomodular identity over all pairs.

    With ``elementwise`` the comparison uses the two-sided le2 relation
    instead of literal set equality. A missing meet or join makes the
    identity fail.
    """
    p = o.poset
    for x in range(p.n):
        for y in range(p.n):
            minu = p.min_of(p.up[x] & p.up[y])
            lhs = 0
            for w in bits(minu):
                m = p.meet(w, o.inv[x])
                if m is None:
                    return False
                j = p.join(x, m)
                if j is None:
                    return False
                lhs |= 1 << j
            if elementwise:
                if not p.subset_rel(lhs, minu, "approx2"):
                    return False
            elif lhs != minu:
                return False
    return True


def orthomodular_verdicts(o: OrthoPoset) -> tuple:
    """(direct, via OM_U, via OM_UE) orthomodularity verdicts."""
    direct = (
        is_orthogonal_poset(o)
        and is_complementation(o)
        and orthomodular_witness(o) is None
    )
    return direct, om_u_identity(o), om_u_identity(o, elementwise=True)


def is_orthomodular(o: OrthoPoset) -> bool:
    """Orthogonal, complemented, and satisfying the orthomodular law.

    On orthogonal inputs the Min-U reformulations are evaluated as well
    and all three verdicts must agree.
    """
    direct, via_u, via_ue = orthomodular_verdicts(o)
    if is_orthogonal_poset(o):
        assert direct == via_u == via_ue, "orthomodularity verdicts disagree"
    return direct


# -- Boolean-flavoured predicates -------------------------------------

def is_weakly_boolean(o: OrthoPoset) -> bool:
    """a ^ b = 0 and a ^ b' = 0 (cone-wise) force a = 0."""
    p = o.poset
    zero = 1 << p.bottom
    for a in range(p.n):
        if a == p.bottom:
            continue
        for b in range(p.n):
            if (p.down[a] & p.down[b] == zero
                    and p.down[a] & p.down[o.inv[b]] == zero):
                return False
    return True


def is_boolean_poset(o: OrthoPoset) -> bool:
    return o.poset.is_distributive and is_complementation(o)


def is_boolean_algebra(o: OrthoPoset) -> bool:
    return is_boolean_poset(o) and o.poset.is_lattice


def is_kleene_lattice(o: OrthoPoset) -> bool:
    """Distributive, regular, paraorthomodular lattice."""
    if not (o.poset.is_lattice and o.poset.is_distributive):
        return False
    return is_regular(o) and is_paraorthomodular(o)


PREDICATES = {
    "lattice": lambda o: o.poset.is_lattice,
    "distributive": lambda o: o.poset.is_distributive,
    "orthogonal": is_orthogonal_poset,
    "paraorthomodular": is_paraorthomodular,
    "sharply-paraorthomodular": is_sharply_paraorthomodular,
    "regular": is_regular,
    "complemented": is_complementation,
    "orthomodular": is_orthomodular,
    "weakly-boolean": is_weakly_boolean,
    "boolean-poset": is_boolean_poset,
    "boolean-algebra": is_boolean_algebra,
    "kleene-lattice": is_kleene_lattice,
}
