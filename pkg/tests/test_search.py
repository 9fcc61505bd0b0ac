import pytest

from paraposet import figures
from paraposet import harness
from paraposet import universe as U
from paraposet import ortho as O


def test_bounded_poset_counts():
    # unlabeled bounded posets on n points
    expected = {2: 1, 3: 1, 4: 2, 5: 5, 6: 16, 7: 63}
    for n, count in expected.items():
        assert sum(1 for _ in U.bounded_posets(n)) == count


def test_smallest_ortho_universe():
    structures = list(U.ortho_posets(2))
    assert len(structures) == 1
    o = structures[0]
    assert o.n == 2 and o.inv == (1, 0)


def test_ortho_universe_counts():
    assert sum(1 for _ in U.ortho_posets(6)) == 21
    assert sum(1 for _ in U.ortho_posets(7)) == 51


def test_sectioned_universe_count():
    assert sum(1 for _ in U.sectioned_posets(6)) == 26


def test_budget_guard():
    with pytest.raises(U.BudgetExceeded):
        list(U.ortho_posets(6, max_count=5))


def test_involutions_are_antitone():
    for p in U.bounded_posets(5):
        for inv in U.antitone_involutions(p):
            assert O.is_antitone_involution(p, inv)


def test_fig1a_appears_in_universe():
    target = figures.fig1a()
    hits = [o for o in U.ortho_posets(6)
            if O.is_paraorthomodular(o) and not O.is_orthogonal_poset(o)
            and U.is_orthoisomorphic(o, target)]
    assert hits


def test_fig2a_appears_in_universe():
    target = figures.fig2a()
    hits = [o for o in U.ortho_posets(6)
            if O.is_sharply_paraorthomodular(o) and o.poset.is_lattice
            and U.is_orthoisomorphic(o, target)]
    assert hits


def test_small_figures_keep_profiles_in_universe():
    # every drawing small enough for the sweep is reachable at its size
    for builder in (figures.fig1a, figures.fig2a, figures.fig3,
                    figures.fig4, figures.fig7):
        target = builder()
        assert any(U.is_orthoisomorphic(o, target)
                   for o in U.ortho_posets(target.n))


def test_counterexample_paraortho_not_orthomodular():
    found = harness.find_counterexample("paraorthomodular", "orthomodular",
                                        max_n=6)
    assert found is not None
    assert O.is_paraorthomodular(found) and not O.is_orthomodular(found)


def test_no_orthomodular_without_paraortho():
    assert harness.find_counterexample("orthomodular", "paraorthomodular",
                                       max_n=7) is None


def test_harness_small_sweep_clean():
    results = harness.run_harness(max_n=5)
    assert len(results) == len(harness.THEOREMS)
    for res in results:
        assert res.ok, (res.theorem, res.violations)
        assert res.instances >= 0


def test_harness_deterministic_and_parallel():
    a = harness.run_harness(max_n=4, ids=["th1", "omui", "sasom"])
    b = harness.run_harness(max_n=4, ids=["th1", "omui", "sasom"], jobs=3)
    assert [r.as_dict() for r in a] == [r.as_dict() for r in b]


def test_unknown_theorem_rejected():
    with pytest.raises(KeyError):
        harness.run_harness(max_n=3, ids=["no-such-theorem"])
