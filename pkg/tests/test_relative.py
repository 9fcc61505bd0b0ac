import pytest

from paraposet import figures
from paraposet import relative as R
from paraposet.poset import bits


EXPECTED_I3_FIG1A = {
    "0": {"0": {"1"}, "a": {"1"}, "b": {"1"}, "a'": {"1"}, "b'": {"1"}, "1": {"1"}},
    "a": {"0": {"a'"}, "a": {"1"}, "b": {"a'", "b'"}, "a'": {"1"},
          "b'": {"1"}, "1": {"1"}},
    "b": {"0": {"b'"}, "a": {"a'", "b'"}, "b": {"1"}, "a'": {"1"},
          "b'": {"1"}, "1": {"1"}},
    "a'": {"0": {"a"}, "a": {"b'"}, "b": {"b'"}, "a'": {"1"},
           "b'": {"b'"}, "1": {"1"}},
    "b'": {"0": {"b"}, "a": {"a'"}, "b": {"a'"}, "a'": {"a'"},
           "b'": {"1"}, "1": {"1"}},
    "1": {"0": {"0"}, "a": {"a"}, "b": {"b"}, "a'": {"a'"},
          "b'": {"b'"}, "1": {"1"}},
}


def labels_of(p, mask):
    return {p.labels[i] for i in bits(mask)}


def test_i3_table_cell_for_cell():
    s = figures.fig1a_sections()
    p = s.poset
    t = R.impl_I3(s)
    for rx in p.labels:
        for cy in p.labels:
            got = labels_of(p, t.cell(p.index(rx), p.index(cy)))
            assert got == EXPECTED_I3_FIG1A[rx][cy], (rx, cy, got)


def test_section_validation_rejects_broken_row():
    s = figures.fig1a_sections()
    rows = [list(r) for r in s.sections]
    a = s.poset.index("a")
    rows[a][a] = a  # a^a must be the top of the filter
    with pytest.raises(R.SectionViolation):
        R.validate_sections(s.poset, rows)


def test_elementary_laws_hold():
    for builder in (figures.fig1a_sections, figures.fig8_sections):
        rep = R.check_th2(builder())
        assert rep.ok, rep.violations


def test_global_characterization():
    assert R.para_via_I3(figures.fig1a_sections()) == (True, True, True)
    direct, law, agree = R.para_via_I3(figures.fig7_sections())
    assert (direct, law, agree) == (False, False, True)


def test_relative_paraorthomodularity():
    assert R.is_relatively_paraorthomodular(figures.fig1a_sections())
    assert R.is_relatively_paraorthomodular(figures.fig8_sections())
    assert not R.is_relatively_paraorthomodular(figures.fig7_sections())
    w = R.relative_paraortho_witness(figures.fig7_sections())
    assert w is not None


def test_compatibility_fails_on_examples():
    ok, w = R.check_C(figures.fig1a_sections())
    assert (ok, w) == (False, (0, 1, 1))
    ok, w = R.check_C(figures.fig8_sections())
    assert (ok, w) == (False, (0, 4, 4))


def test_compatibility_holds_on_cube():
    s = R.sections_from_involution(figures.boolean_cube())
    ok, _ = R.check_C(s)
    assert ok
    direct, law, agree = R.relpara_via_impl_under_C(s)
    assert agree and direct


def test_join_semilattice_form_on_cube():
    o = figures.boolean_cube()
    s = R.sections_from_involution(o)
    p = o.poset
    t = R.impl_I4(s)
    for x in range(p.n):
        for y in range(p.n):
            j = p.join(x, y)
            assert t.cell(x, y) == 1 << s.sec(y, j)
    assert R.antitone_first_arg_I4(s)


def test_i4_needs_joins():
    with pytest.raises(R.NotJoinSemilattice):
        R.impl_I4(figures.fig1a_sections())
