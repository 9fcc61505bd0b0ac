import pathlib

import pytest

from paraposet import cli, figures, fileformat as ff, render
from paraposet.poset import PosetError

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def all_fixture_files():
    return sorted(FIXTURES.rglob("*.poset"))


def test_fixtures_exist():
    names = {p.name for p in all_fixture_files()}
    assert {"fig1a.poset", "fig2a.poset", "fig2b.poset", "fig4.poset",
            "fig8.poset", "cube.poset"} <= names
    assert (FIXTURES / "fig5" / "family.poset").exists()
    assert (FIXTURES / "triangle" / "family.poset").exists()


@pytest.mark.parametrize("path", all_fixture_files(), ids=lambda p: str(p.relative_to(FIXTURES)))
def test_round_trip_identity(path):
    text = path.read_text()
    built = ff.build(ff.parse(text), basedir=str(path.parent))
    assert ff.emit(built) == text


def test_emit_idempotent():
    o = figures.fig2a()
    once = ff.emit(o)
    twice = ff.emit(ff.build(ff.parse(once)))
    assert once == twice


def test_parse_error_positions():
    with pytest.raises(ff.ParseError) as err:
        ff.parse("elements 0 1\nbogus 0 1\n")
    assert err.value.line_no == 2


def test_cycle_is_semantic_error():
    text = ("elements 0 a b 1\ncover 0 a\ncover a b\ncover b a\ncover b 1\n")
    with pytest.raises(PosetError):
        ff.build(ff.parse(text))


def test_missing_involute_is_semantic_error():
    text = "elements 0 a b 1\ncover 0 a\ncover 0 b\ncover a 1\ncover b 1\ninv a b\n"
    built = ff.build(ff.parse(text))  # bounds pair implicitly
    assert built.inv[0] == 3
    bad = "elements 0 a b 1\ncover 0 a\ncover 0 b\ncover a 1\ncover b 1\ninv a a\n"
    with pytest.raises(PosetError):
        ff.build(ff.parse(bad))


def test_two_chain_dot():
    from paraposet.poset import FinitePoset
    p = FinitePoset.from_covers(["0", "1"], [("0", "1")])
    dot = render.export_dot(p)
    assert dot.count("->") == 1
    assert dot.count("label=") == 2


def test_benzene_dot():
    dot = render.export_dot(figures.fig4())
    assert dot.count("->") == 6
    assert dot.count("[label=") == 6
    assert "rankdir=BT" in dot
    assert dot == render.export_dot(figures.fig4())


def test_table_rendering_matches_layout():
    from paraposet.relative import impl_I3
    text = render.render_table(impl_I3(figures.fig1a_sections()))
    lines = text.splitlines()
    assert lines[0].split("|")[1].split() == ["0", "a", "b", "a'", "b'", "1"]
    row_a = next(l for l in lines if l.startswith("a "))
    assert "{a', b'}" in row_a
    row_top = lines[-1]
    assert row_top.split("|")[1].split() == ["0", "a", "b", "a'", "b'", "1"]


def test_cli_check_exit_codes(capsys):
    assert cli.main(["check", str(FIXTURES / "cube.poset")]) == 0
    capsys.readouterr()
    assert cli.main(["check", str(FIXTURES / "fig2a.poset")]) == 1
    out = capsys.readouterr().out
    assert "sharply-paraorthomodular: true" in out
    assert cli.main(["check", str(FIXTURES / "fig2a.poset"),
                     "--predicate", "lattice"]) == 0


def test_cli_check_witnesses(capsys):
    code = cli.main(["check", str(FIXTURES / "fig7.poset"),
                     "--predicate", "paraorthomodular"])
    out = capsys.readouterr().out
    assert code == 1
    assert "witness (a, b')" in out


def test_cli_table_i3(capsys):
    assert cli.main(["table", str(FIXTURES / "fig1a.poset"), "--op", "i3"]) == 0
    out = capsys.readouterr().out
    assert "{a', b'}" in out


def test_cli_table_needs_valid_op_domain(capsys):
    code = cli.main(["table", str(FIXTURES / "fig1a.poset"), "--op", "i1"])
    assert code == 2  # not an orthogonal poset
    capsys.readouterr()


def test_cli_amalgam_classify(capsys):
    code = cli.main(["amalgam", str(FIXTURES / "triangle" / "family.poset"),
                     "--classify"])
    out = capsys.readouterr().out
    assert code == 0
    assert "order-3=1" in out
    assert "missing join" in out


def test_cli_amalgam_loops(capsys):
    code = cli.main(["amalgam", str(FIXTURES / "square" / "family.poset"),
                     "--loops", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "1 loop(s) of order 4" in out


def test_cli_verify_deterministic(capsys):
    argv = ["verify", "--theorems", "th1,duality,omui", "--max-n", "4"]
    assert cli.main(argv) == 0
    first = capsys.readouterr().out
    assert cli.main(argv + ["--jobs", "2"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "0 violations" in first


def test_cli_search(capsys):
    code = cli.main(["search", "--implies", "orthomodular,paraorthomodular",
                     "--max-n", "5"])
    out = capsys.readouterr().out
    assert code == 1 and "no counterexample" in out
    code = cli.main(["search", "--implies", "paraorthomodular,orthomodular",
                     "--max-n", "5"])
    out = capsys.readouterr().out
    assert code == 0 and "counterexample" in out


def test_cli_export_family(capsys):
    code = cli.main(["export", str(FIXTURES / "fig5" / "family.poset"), "--dot"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("[label=") == 8


def test_cli_bad_file(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["check", str(FIXTURES / "does-not-exist.poset")])
    assert err.value.code == 2
