import pytest

from paraposet import figures
from paraposet import implication as I
from paraposet.poset import bits


def cell_labels(table, x, y):
    p = table.poset
    return sorted(p.labels[i] for i in bits(table.cell(x, y)))


def test_requires_orthogonality():
    with pytest.raises(I.NotOrthogonal):
        I.impl_I(figures.fig1a())


def test_th1_clean_on_examples():
    for builder in (figures.fig2a, figures.fig2b, figures.fig3,
                    figures.fig5, figures.fig8):
        rep = I.check_th1(builder())
        assert rep.ok, rep.violations


def test_sharp_collapse_laws():
    for builder in (figures.fig2a, figures.fig2b, figures.fig8):
        rep = I.check_lemma_sharply(builder())
        assert rep.ok, rep.violations


def test_unit_law_characterization():
    assert I.paraortho_iff_impl(figures.fig2a()) == (True, True, True)
    direct, law, agree = I.paraortho_iff_impl(figures.fig4())
    assert (direct, law, agree) == (False, False, True)


def test_set_and_lattice_forms_agree_on_lattices():
    for builder in (figures.fig2a, figures.fig3, figures.boolean_cube):
        o = builder()
        t1, t2 = I.impl_I(o), I.impl_I2(o)
        assert all(t1.cell(x, y) == t2.cell(x, y)
                   for x in range(o.n) for y in range(o.n))


def test_lattice_form_needs_lattice():
    with pytest.raises(I.NotALattice):
        I.impl_I2(figures.fig2b())


def test_cube_sasaki_is_classical():
    o = figures.boolean_cube()
    p = o.poset
    t = I.sasaki_impl(o)
    for x in range(p.n):
        for y in range(p.n):
            assert t.cell(x, y) == 1 << p.join(o.inv[x], y)


def test_sasaki_product_below_both_arguments():
    o = figures.fig2a()
    p = o.poset
    t = I.sasaki_proj(o)
    for x in range(p.n):
        for y in range(p.n):
            for z in bits(t.cell(x, y)):
                assert p.leq(z, y)


def test_duality_with_sasaki():
    for builder in (figures.fig2a, figures.fig2b, figures.fig3,
                    figures.boolean_cube):
        assert I.duality_check(builder())


def test_antitone_in_first_argument():
    assert I.antitone_first_arg_I2(figures.fig2a())
    assert I.antitone_first_arg_I2(figures.boolean_cube())


def test_unit_row_and_diagonal():
    o = figures.fig2a()
    p = o.poset
    t = I.impl_I(o)
    for x in range(p.n):
        assert t.cell(x, x) == 1 << p.join(x, o.inv[x])
        assert t.cell(x, p.top) == 1 << p.top
        assert t.cell(p.top, x) == 1 << x
