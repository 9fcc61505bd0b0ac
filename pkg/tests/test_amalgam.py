import time

import pytest

from paraposet import figures
from paraposet import amalgam as am
from paraposet import ortho as O
from paraposet.poset import bits


def test_fig5_family_builds_eight_element_lattice():
    fam = figures.fig5_family()
    amal = am.build_amalgam(fam)
    p = amal.carrier.poset
    assert p.n == 8
    assert p.is_lattice
    assert O.is_sharply_paraorthomodular(amal.carrier)


def test_small_block_rejected():
    k1 = figures.boolean_cube()
    sub, old = k1.poset.induced(0b11000001 | 1 << k1.poset.top)
    # a four-element chain fragment is no Kleene block
    with pytest.raises(am.FamilyError):
        am.validate_family([figures.kleene_k3b2("a", "b"),
                            O.OrthoPoset(*_involute(sub))],
                           [], names=("K1", "K2"))


def _involute(p):
    # antitone involution by mirrored rank, good enough for tiny chains
    inv = [-1] * p.n
    order = sorted(range(p.n), key=lambda i: bin(p.down[i]).count("1"))
    for i, x in enumerate(order):
        inv[x] = order[p.n - 1 - i]
    return p, tuple(inv)


def test_hexagon_block_rejected():
    with pytest.raises(am.NotKleene):
        am.validate_family([figures.kleene_k3b2("a", "b"), figures.fig4()],
                           [], names=("K1", "K2"))


def test_three_element_intersection_rejected():
    cube = figures.boolean_cube()
    other = figures.boolean_cube(("x", "u", "v"))
    glue = [[(0, "x"), (1, "x")], [(0, "x'"), (1, "x'")],
            [(0, "y"), (1, "u")]]
    with pytest.raises(am.FamilyError):
        am.validate_family([cube, other], glue, names=("K1", "K2"))


def test_triangle_classification():
    fam = figures.greechie_cycle(3)
    amal = am.build_amalgam(fam)
    rep = am.classify_amalgam(fam, amal)
    assert amal.carrier.poset.n == 14
    assert len(rep.loops3) == 1 and len(rep.loops4) == 0
    assert rep.direct_paraortho and not rep.direct_sharply
    assert not rep.direct_lattice
    assert rep.agree
    assert rep.join_witness is not None
    a, b = rep.join_witness
    p = amal.carrier.poset
    assert p.leq(a, amal.carrier.inv[b])
    assert p.join(a, b) is None
    assert rep.two_block_lattices


def test_square_classification():
    fam = figures.greechie_cycle(4)
    rep = am.classify_amalgam(fam)
    assert len(rep.loops3) == 0 and len(rep.loops4) == 1
    assert rep.direct_sharply and not rep.direct_lattice
    assert rep.agree


def test_chain_and_pentagon_are_lattices():
    for fam in (figures.greechie_chain(), figures.greechie_cycle(5)):
        rep = am.classify_amalgam(fam)
        assert not rep.loops3 and not rep.loops4
        assert rep.direct_lattice and rep.direct_sharply
        assert rep.agree


def test_loop_search_budget():
    fam = figures.greechie_cycle(5)
    assert am.find_loops(fam, 3) == []
    assert am.find_loops(fam, 4) == []
    assert len(am.find_loops(fam, 5)) == 1


def test_two_block_unions_are_lattices():
    fam = figures.greechie_cycle(3)
    for i in range(3):
        for j in range(i + 1, 3):
            sub = am.two_block_union(fam, i, j)
            assert sub.poset.is_lattice
            assert O.is_paraorthomodular(sub)


def test_fig5_cover_anomaly():
    fam = figures.fig5_family()
    amal = am.build_amalgam(fam)
    rep = am.cover_transfer(fam, amal)
    assert rep.ok, rep.violations
    p = amal.carrier.poset
    found = False
    for cx, cy, blk, between in rep.exceptions:
        if p.labels[cx] == "a" and p.labels[cy] == "a'":
            found = True
            assert "c" in {p.labels[i] for i in bits(between)}
    assert found


def test_cover_transfer_clean_on_chain():
    fam = figures.greechie_chain()
    amal = am.build_amalgam(fam)
    rep = am.cover_transfer(fam, amal)
    assert rep.ok and not rep.exceptions


def test_classification_speed():
    t0 = time.perf_counter()
    for fam in (figures.greechie_cycle(3), figures.greechie_cycle(4),
                figures.greechie_chain()):
        am.classify_amalgam(fam)
    assert time.perf_counter() - t0 < 5.0
