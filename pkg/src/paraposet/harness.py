"""Re-verification of every statement on exhaustively enumerated structures.

Each registered check walks a stream of small structures and returns
violation strings (expected: none). Streams and results are fully
deterministic, so repeated runs with equal settings produce identical
reports.
"""

from __future__ import annotations

import time
import zlib
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from . import adjoint, implication, relative
from .ortho import (OrthoPoset, PREDICATES, find_benzene, is_boolean_algebra,
                    is_kleene_lattice, is_orthogonal_poset, is_orthomodular,
                    is_paraorthomodular, is_sharply_paraorthomodular,
                    is_weakly_boolean, orthomodular_verdicts, paraortho_witness)
from .poset import FinitePoset, bits, distributive_nary, mask_of
from .universe import (BudgetExceeded, bounded_posets, involutions,
                       ortho_posets, sectioned_posets)


@dataclass
class HarnessResult:
    theorem: str
    instances: int
    violations: List[str]
    seconds: float

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"theorem": self.theorem, "instances": self.instances,
                "violations": list(self.violations)}


def _tag(o) -> str:
    p = o.poset if hasattr(o, "poset") else o
    key = repr((p.labels, p.up)).encode()
    return f"n={p.n}:{zlib.crc32(key):08x}"


def _report_th(check):
    def run(o):
        rep = check(o)
        out = [f"{_tag(o)} clause {v}" for v in rep.violations]
        out += [f"{_tag(o)} clause {v} (elementwise)" for v in rep.violations_elementwise]
        return out
    return run


def _agree3(fn):
    def run(o):
        a, b, agree = fn(o)
        return [] if agree else [f"{_tag(o)} verdicts {a} vs {b}"]
    return run


def _orthogonal(o):
    return is_orthogonal_poset(o)


def _sharply(o):
    return is_sharply_paraorthomodular(o)


def _lattice(o):
    return o.poset.is_lattice


def _relpara(s):
    return relative.is_relatively_paraorthomodular(s)


def _check_under_c(s):
    try:
        ok, _ = relative.check_C(s)
    except implication.JoinMissing:
        return False
    return ok


def _relpara_c(s):
    d, l, agree = relative.relpara_via_impl_under_C(s)
    return [] if agree else [f"{_tag(s)} verdicts {d} vs {l}"]


def _omui(o):
    d, u, ue = orthomodular_verdicts(o)
    return [] if d == u == ue else [f"{_tag(o)} verdicts {d}/{u}/{ue}"]


def _ab_equiv(o):
    return [] if adjoint.lemma_AB_equiv(o) else [f"{_tag(o)} A/B verdicts split"]


def _th3(o):
    rep = adjoint.th3_check(o)
    return [] if rep.consistent else [f"{_tag(o)} condition holds yet not orthomodular"]


def _posth3(o):
    rep = adjoint.posth3_check(o)
    return [] if rep.consistent else [f"{_tag(o)} condition holds yet not orthomodular"]


def _adji(o):
    res = adjoint.residuate(o, implication.impl_I(o))
    if res.product is None or not res.adjoint:
        return []
    rep = adjoint.adji_consequences(o, res.product)
    return [f"{_tag(o)} clause {v}" for v in rep.violations]


def _adjibp(o):
    verdict = adjoint.adjibp_check(o)
    return [] if verdict in (None, True) else [f"{_tag(o)} Boolean poset not a Boolean algebra"]


def _om_implies_p(o):
    if is_orthomodular(o) and not is_paraorthomodular(o):
        return [f"{_tag(o)} orthomodular but not paraorthomodular"]
    return []


def _wb_ba(o):
    if (is_weakly_boolean(o) and is_orthomodular(o)
            and o.poset.has_maximality() and not is_boolean_algebra(o)):
        return [f"{_tag(o)} weakly Boolean orthomodular yet not Boolean"]
    return []


def _kleene_remark(o):
    if not is_kleene_lattice(o):
        return []
    p = o.poset
    out = []
    for x in range(p.n):
        for y in range(p.n):
            if p.meet(x, y) == p.bottom and not p.leq(x, o.inv[y]):
                out.append(f"{_tag(o)} zero meet without orthogonality at "
                           f"({p.labels[x]}, {p.labels[y]})")
    return out


def _benzene(o):
    try:
        w = find_benzene(o)
    except AssertionError as exc:
        return [f"{_tag(o)} {exc}"]
    if (w is None) != (paraortho_witness(o) is None):
        return [f"{_tag(o)} hexagon presence disagrees with the predicate"]
    return []


def _duality(o):
    return [] if implication.duality_check(o) else [f"{_tag(o)} duality broken"]


def _dist_variants(o):
    p = o.poset
    first = p.is_distributive
    out = []
    for x in range(p.n):
        for y in range(p.n):
            for z in range(p.n):
                agrees = [lhs == rhs for lhs, rhs in p.distributive_variants(x, y, z)]
                if first and not all(agrees):
                    out.append(f"{_tag(o)} variant split at ({x},{y},{z})")
                    return out
    if not first:
        # some variant must also fail somewhere
        all_hold = all(
            lhs == rhs
            for x in range(p.n) for y in range(p.n) for z in range(p.n)
            for lhs, rhs in p.distributive_variants(x, y, z)
        )
        if all_hold:
            out.append(f"{_tag(o)} predicate false yet every variant holds")
    return out


def _nary_dist(o):
    p = o.poset
    if not p.is_distributive:
        return []
    from itertools import combinations
    for xs in combinations(range(p.n), 3):
        for z in range(p.n):
            a, b = distributive_nary(p, xs, z)
            if not (a and b):
                return [f"{_tag(o)} n-ary identity fails at {xs},{z}"]
    return []


def _mub_small(o):
    p = o.poset
    if not (p.is_mub_complete(3) and p.is_mlb_complete(3) and p.has_maximality()):
        return [f"{_tag(o)} finite poset fails a completeness predicate"]
    return []


def _omid_stream(n):
    for p in bounded_posets(n):
        if not p.is_lattice:
            continue
        for inv in involutions(p.n):
            yield (p, inv)


def _omid(pair):
    p, inv = pair
    oi, adj, agree = adjoint.omidentity_equiv(p, inv)
    return [] if agree else [f"{_tag(p)} inv={inv} verdicts {oi} vs {adj}"]


@dataclass(frozen=True)
class Theorem:
    id: str
    stream: str                     # ortho | sectioned | lattice-inv
    check: Callable
    applies: Optional[Callable] = None
    description: str = ""


THEOREMS: Dict[str, Theorem] = {}


def _register(id, stream, check, applies=None, description=""):
    THEOREMS[id] = Theorem(id, stream, check, applies, description)


_register("th1", "ortho", _report_th(implication.check_th1), _orthogonal,
          "elementary laws of the cone implication")
_register("lemma-sharply", "ortho", _report_th(implication.check_lemma_sharply),
          _sharply, "sharp collapse laws of the cone implication")
_register("paraortho-iff-impl", "ortho", _agree3(implication.paraortho_iff_impl),
          _orthogonal, "paraorthomodularity via the implication unit law")
_register("i2-antitone", "ortho",
          lambda o: [] if implication.antitone_first_arg_I2(o) else [f"{_tag(o)} not antitone"],
          _lattice, "lattice implication antitone in the first slot")
_register("i1-matches-i2", "ortho", lambda o: [
    f"{_tag(o)} cells differ at ({x},{y})"
    for t1, t2 in [(implication.impl_I(o), implication.impl_I2(o))]
    for x in range(o.n) for y in range(o.n) if t1.cell(x, y) != t2.cell(x, y)
], _lattice, "set and lattice implications agree on lattices")
_register("duality", "ortho", _duality, _orthogonal,
          "cone implication is the flipped Sasaki implication")
_register("th2", "sectioned", _report_th(relative.check_th2), _relpara,
          "elementary laws of the section implication")
_register("para-via-i3", "sectioned", _agree3(relative.para_via_I3), None,
          "global paraorthomodularity via the section implication")
_register("relpara-under-c", "sectioned", _relpara_c, _check_under_c,
          "relative paraorthomodularity via the unit law under compatibility")
_register("i4-antitone", "sectioned",
          lambda s: [] if relative.antitone_first_arg_I4(s) else [f"{_tag(s)} not antitone"],
          lambda s: s.poset.is_lattice,
          "join-semilattice implication antitone in the first slot")
_register("lemadj", "ortho", _ab_equiv, _lattice,
          "forward and backward Sasaki adjointness agree on lattices")
_register("aisb", "ortho", _ab_equiv, _orthogonal,
          "forward and backward Sasaki adjointness agree on posets")
_register("omidentity", "lattice-inv", _omid, None,
          "orthomodular identities equal two-sided Sasaki adjointness")
_register("omui", "ortho", _omui, _orthogonal,
          "three readings of orthomodularity agree")
_register("sasom", "ortho", _agree3(adjoint.sasom_equiv), _orthogonal,
          "orthomodularity equals subscripted Sasaki adjointness")
_register("th3", "ortho", _th3, _lattice,
          "forward condition for the mixed pair forces orthomodularity")
_register("posth3", "ortho", _posth3, _orthogonal,
          "poset variant of the mixed-pair condition")
_register("adji", "ortho", _adji, _orthogonal,
          "consequences of an adjoint product for the cone implication")
_register("adjibp", "ortho", _adjibp, None,
          "orthogonal Boolean posets with maximality are Boolean algebras")
_register("adjebp", "ortho", _agree3(adjoint.adjebp_equiv), _orthogonal,
          "adjoint product exists exactly on Boolean algebras")
_register("om-implies-paraortho", "ortho", _om_implies_p, None,
          "orthomodular structures are paraorthomodular")
_register("weakly-boolean-ba", "ortho", _wb_ba, None,
          "weakly Boolean orthomodular maximality forces Booleanness")
_register("kleene-ortho-remark", "ortho", _kleene_remark, None,
          "zero meets are orthogonal in Kleene lattices")
_register("benzene-equiv", "ortho", _benzene, None,
          "hexagon witnesses track non-paraorthomodularity")
_register("distributive-variants", "ortho", _dist_variants, None,
          "the four binary cone identities stand or fall together")
_register("nary-distributivity", "ortho", _nary_dist, None,
          "ternary cone identities on distributive posets")
_register("completeness-finite", "ortho", _mub_small, None,
          "finite posets satisfy the bound-completeness predicates")


def _stream(kind: str, n: int):
    if kind == "ortho":
        return ortho_posets(n)
    if kind == "sectioned":
        return sectioned_posets(n)
    if kind == "lattice-inv":
        return _omid_stream(n)
    raise ValueError(f"unknown stream {kind!r}")


def run_one(theorem: Theorem, max_n: int) -> HarnessResult:
    t0 = time.perf_counter()
    checked = 0
    violations: List[str] = []
    for n in range(2, max_n + 1):
        for item in _stream(theorem.stream, n):
            if theorem.applies is not None and not theorem.applies(item):
                continue
            checked += 1
            violations.extend(theorem.check(item))
    return HarnessResult(theorem.id, checked, violations,
                         time.perf_counter() - t0)


def run_harness(max_n: int = 6, ids: Optional[Sequence[str]] = None,
                jobs: int = 1) -> List[HarnessResult]:
    wanted = sorted(THEOREMS) if ids is None else list(ids)
    for tid in wanted:
        if tid not in THEOREMS:
            raise KeyError(f"unknown theorem id {tid!r}")
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda t: run_one(THEOREMS[t], max_n), wanted))
    else:
        results = [run_one(THEOREMS[t], max_n) for t in wanted]
    return results


def find_counterexample(prop_a: str, prop_b: str,
                        max_n: int = 7) -> Optional[OrthoPoset]:
    """Smallest enumerated structure satisfying prop_a but not prop_b."""
    fa, fb = PREDICATES[prop_a], PREDICATES[prop_b]
    for n in range(2, max_n + 1):
        for o in ortho_posets(n):
            try:
                if fa(o) and not fb(o):
                    return o
            except Exception:
                continue
    return None
