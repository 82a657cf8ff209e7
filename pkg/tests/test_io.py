from __future__ import annotations

import re

import pytest

from conftest import figure_eight, hopf, trefoil
from linkdensity.diagram import LinkDiagram, Tangle, closure, is_isomorphic, pretzel_tangle, weaving_tangle
from linkdensity.errors import DomainError
from linkdensity.invariants import determinant
from linkdensity.io import dumps, export, loads, read_diagram, to_dt, to_gauss, to_pd, write_diagram


def test_round_trip(corpus, tmp_path):
    for name, D in corpus.items():
        back = loads(dumps(D.with_name(name)))
        assert back.name == name
        assert is_isomorphic(back, D)
    T = weaving_tangle(4, 3).with_name("W43")
    path = tmp_path / "t.txt"
    write_diagram(T, path)
    back = read_diagram(path)
    assert isinstance(back, Tangle) and back.ends == T.ends and back.crossings == T.crossings


def test_free_loops_survive():
    D = LinkDiagram(trefoil().crossings, 2)
    text = dumps(D)
    assert text.splitlines()[0] == "link 3 8"
    assert loads(text).free_loops == 2


def test_comments_are_ignored():
    text = "# made by hand\n# id = tref\nlink 3 6\n\nX 1 5 2 4\nX 5 3 6 2\nX 3 1 4 6\n"
    D = loads(text)
    assert D.name == "tref" and determinant(D) == 3


@pytest.mark.parametrize(
    "text, msg",
    [
        ("X 1 2 3 4\n", "expected"),
        ("link 2 4\nX 1 2 3 4\n", "declares 2 crossings"),
        ("link 1 2\nX 1 2 3\n", "exactly 4"),
        ("link 1 2\nX 1 1 2 3\n", "exactly twice"),
        ("link 1 2\nX 1 -1 2 2\n", "positive"),
        ("tangle 0 2\n", "missing its 'ends'"),
        ("link 1 2\nX 1 1 2 2\nends NW=1 NE=2 SE=3 SW=4\n", "only allowed"),
        ("link 1 2\nY 1 1 2 2\n", "unexpected record"),
        ("link a 2\n", "line 1"),
        ("", "missing header"),
    ],
)
def test_parse_errors(text, msg):
    with pytest.raises(DomainError, match=re.escape(msg)):
        loads(text)


def test_pd_of_trefoil():
    assert to_pd(trefoil()) == "PD[X[1,5,2,4],X[5,3,6,2],X[3,1,4,6]]"


def test_pd_labels_run_along_components(corpus):
    for D in corpus.values():
        if D.n_crossings == 0 or D.free_loops:
            continue
        entries = [list(map(int, x.split(","))) for x in re.findall(r"X\[([\d,]+)\]", to_pd(D))]
        assert sorted(e for x in entries for e in x) == sorted(list(range(1, 2 * D.n_crossings + 1)) * 2)
        for i, j, k, l in entries:
            # the under-strand enters on i and leaves on k
            assert k == i + 1 or k < i


def test_gauss_codes():
    assert to_gauss(trefoil()).startswith("GaussCode[")
    g = [int(v) for v in re.findall(r"-?\d+", to_gauss(figure_eight()))]
    assert len(g) == 8 and sorted(map(abs, g)) == [1, 1, 2, 2, 3, 3, 4, 4]
    assert all(g.count(v) == 1 for v in g)
    assert "{" in to_gauss(hopf())


def test_gauss_alternates_on_alternating_knot():
    g = [int(v) for v in re.findall(r"-?\d+", to_gauss(closure(pretzel_tangle(3, 1, 3), "D")))]
    assert len(g) == 14
    assert all((a > 0) != (b > 0) for a, b in zip(g, g[1:] + g[:1]))


def test_dt_codes():
    assert to_dt(trefoil()) == "DTCode[-4, -6, -2]"
    dt = [int(v) for v in re.findall(r"-?\d+", to_dt(figure_eight()))]
    assert sorted(map(abs, dt)) == [2, 4, 6, 8]
    with pytest.raises(DomainError, match="knots only"):
        to_dt(hopf())


def test_export_rejects_tangles_and_unknown_formats():
    with pytest.raises(DomainError):
        export(weaving_tangle(3, 3), "pd")
    with pytest.raises(DomainError):
        export(trefoil(), "svg")
    assert export(trefoil(), "native") == dumps(trefoil())
