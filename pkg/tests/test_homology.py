"""Triply graded closure homology: anchors, frozen tables, trace checks."""

from braidhom.bimodule import identity_bimodule
from braidhom.braid import Word
from braidhom.conventions import homology_euler_as_skein, match_exact
from braidhom.homology import (DegreeWindow, TriGradedSpace,
                               hochschild_bimodule, hochschild_closed_form,
                               homfly_homology, koszul_resolution_check)
from braidhom.oracle import homfly_oracle

ORIGIN = [[0, 0, 0, 1]]
TREFOIL = [[-1, 1, 4, 1], [1, 1, 0, 1], [1, 2, 4, 1]]
TREFOIL_MIRROR = [[-1, -2, -4, 1], [-1, -1, 0, 1], [1, -1, -4, 1]]
FIGURE_EIGHT = [[-1, -1, -2, 1], [-1, 0, 2, 1], [0, 0, 0, 1],
                [1, 0, -2, 1], [1, 1, 2, 1]]
CINQUEFOIL = [[-2, 2, 8, 1], [0, 2, 4, 1], [0, 3, 8, 1],
              [2, 2, 0, 1], [2, 3, 4, 1]]


def table(text: str, **kw):
    space, report = homfly_homology(Word.parse(text), **kw)
    assert report["stabilized"], f"scan did not stabilize on {text!r}"
    return space.table()


def euler_matches_trace(text: str) -> bool:
    word = Word.parse(text)
    space, _report = homfly_homology(word)
    value = homfly_oracle(word)
    assert value.is_polynomial
    return match_exact(homology_euler_as_skein(space), value.poly)


def test_unknot_presentations_sit_at_the_origin():
    for text in ["1:", "2: 1", "2: -1", "2: 1 -1 1",
                 "3: 1 2", "3: -1 -2", "3: 1 -2"]:
        assert table(text) == ORIGIN, text


def test_trefoil_table_and_euler():
    assert table("2: 1 1 1") == TREFOIL
    assert euler_matches_trace("2: 1 1 1")


def test_mirror_word_negates_all_gradings():
    assert table("2: -1 -1 -1") == TREFOIL_MIRROR
    mirrored = TriGradedSpace.from_table(TREFOIL).mirror()
    assert mirrored.table() == TREFOIL_MIRROR
    assert euler_matches_trace("2: -1 -1 -1")


def test_figure_eight_table_is_amphichiral():
    assert table("3: 1 -2 1 -2") == FIGURE_EIGHT
    space = TriGradedSpace.from_table(FIGURE_EIGHT)
    assert space == space.mirror()
    assert euler_matches_trace("3: 1 -2 1 -2")


def test_cinquefoil_table_and_euler():
    assert table("2: 1 1 1 1 1") == CINQUEFOIL
    assert euler_matches_trace("2: 1 1 1 1 1")


def test_gaussian_elimination_does_not_change_homology():
    for text in ["2: 1 1 1", "2: 1 -1 1", "3: 1 2"]:
        assert table(text, simplify=False) == table(text), text


def test_stabilization_and_conjugation_invariance():
    # the same trefoil from a stabilized 2-strand word and a 3-strand word
    assert table("2: -1 1 1 1 1") == TREFOIL
    assert table("3: 1 1 1 2") == TREFOIL


def test_link_closure_is_reported_not_silently_truncated():
    word = Word.parse("2: 1 1")
    space, report = homfly_homology(word, DegreeWindow(max_degree=12,
                                                       margin=2))
    assert not word.is_knot_closure
    assert not report["stabilized"]
    assert any("not a knot" in w for w in report["warnings"])
    assert space.total_dim > 0


def test_self_tensor_homology_matches_closed_form():
    for n in (2, 3):
        hh = hochschild_bimodule(identity_bimodule(n),
                                 DegreeWindow(max_degree=10))
        for p in range(n):
            for j in range(0, 11):
                assert hh.get((p, j), 0) == hochschild_closed_form(n, p, j), \
                    (n, p, j)


def test_contraction_complex_resolves_the_one_sided_ring():
    koszul_resolution_check(2)
    koszul_resolution_check(3, j_max=12)
