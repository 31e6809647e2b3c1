"""Crossing-change connecting maps and resolution-cube homology."""

from fractions import Fraction

from braidhom.braid import Word
from braidhom.conventions import homology_euler_as_skein, match_exact
from braidhom.homology import DegreeWindow
from braidhom.laurent import Laurent2
from braidhom.oracle import vassiliev_oracle
from braidhom.wallcross import (extension_realization,
                                finite_dimensionality_check,
                                vassiliev_complex, wall_crossing_map)

CONE_TABLE = [[-1, 0, 0, 1], [-1, 1, 4, 1], [1, 1, 0, 1], [1, 2, 4, 1]]
CONE_TABLE_N2 = [[0, -3, 0, 1], [0, -2, 0, 1], [2, -6, 0, 1], [2, -5, 0, 1]]


def cone_table(text: str, **kw):
    space, report = vassiliev_complex(Word.parse(text), **kw)
    assert report["stabilized"], f"scan did not stabilize on {text!r}"
    return space.table()


def euler_matches_trace(text: str) -> bool:
    word = Word.parse(text)
    space, _report = vassiliev_complex(word)
    value = vassiliev_oracle(word)
    assert value.is_polynomial
    return match_exact(homology_euler_as_skein(space), value.poly)


# -- the checked exact sequence ---------------------------------------------

def test_extension_realization_invariants():
    for n, i in [(2, 1), (3, 1), (3, 2)]:
        er = extension_realization(n, i)
        assert er.scale == 1
        er.iota.check()
        er.pi.check()
        assert set(er.X.degrees) == {-1, 0}
        assert set(er.Y1.degrees) == {-1, 0}
        assert set(er.E.degrees) == {-1, 0}


def test_extension_scale_divides_the_inclusion():
    plain = extension_realization(2, 1)
    scaled = extension_realization(2, 1, scale=7)
    for k in plain.E.degrees:
        a, b = plain.iota.comp_mat(k), scaled.iota.comp_mat(k)
        assert set(a) == set(b)
        for key, p in a.items():
            assert b[key] * 7 == p, (k, key)
        assert plain.pi.comp_mat(k) == scaled.pi.comp_mat(k)


def test_extension_scale_must_be_nonzero():
    try:
        extension_realization(2, 1, scale=0)
        assert False, "expected a zero scale to raise"
    except ValueError:
        pass


# -- the connecting map ------------------------------------------------------

def test_connecting_map_single_crossing():
    wmap, report = wall_crossing_map(Word.parse("2: 1!"))
    assert report["stabilized"]
    assert wmap["source"] == "2: -1"
    assert wmap["target"] == "2: 1"
    assert wmap["rank"] == 11  # with the default degree window
    assert wmap["scale"] == 1


def test_connecting_map_scales_inversely_with_the_inclusion():
    # dividing the inclusion by c multiplies the snake lift by c
    for text in ["2: 1!", "2: 1! 1 1"]:
        base, _ = wall_crossing_map(Word.parse(text))
        seven, _ = wall_crossing_map(Word.parse(text), scale=7)
        assert seven["scale"] == Fraction(7)
        assert set(base["slices"]) == set(seven["slices"])
        for key, mat in base["slices"].items():
            other = seven["slices"][key]
            assert set(mat) == set(other)
            for rc, v in mat.items():
                assert other[rc] == 7 * v, (text, key, rc)
        assert base["rank"] == seven["rank"]


def test_connecting_map_chain_property_on_longer_words():
    # words with up to four letters; the chain-map identity and the
    # termwise exactness are asserted inside the call
    for text in ["2: 1! -1", "2: 1! 1 -1 1"]:
        wmap, _report = wall_crossing_map(Word.parse(text))
        assert wmap["rank"] > 0, text


def test_connecting_map_wants_exactly_one_singular_letter():
    for text in ["2: 1 1 1", "2: 1! 1! 1"]:
        try:
            wall_crossing_map(Word.parse(text))
            assert False, f"expected {text!r} to be rejected"
        except ValueError:
            pass


# -- cube homology, infinite rank --------------------------------------------

def test_one_singular_crossing_cones_to_nothing():
    space, report = vassiliev_complex(Word.parse("2: 1!"))
    assert report["stabilized"]
    assert space.table() == []
    assert homology_euler_as_skein(space) == Laurent2.zero()
    assert match_exact(homology_euler_as_skein(space),
                       vassiliev_oracle(Word.parse("2: 1!")).poly)


def test_singular_trefoil_cone_table_and_euler():
    assert cone_table("2: 1! 1 1") == CONE_TABLE
    assert euler_matches_trace("2: 1! 1 1")


def test_two_singular_letters_euler_matches_second_difference():
    assert euler_matches_trace("2: 1! 1! 1")


def test_cone_order_does_not_change_the_answer():
    base = cone_table("2: 1! 1! 1")
    assert cone_table("2: 1! 1! 1", order=[1, 0]) == base
    assert cone_table("2: 1! 1! 1", order=[0, 1]) == base


def test_extension_rescaling_does_not_change_the_answer():
    base = cone_table("2: 1! 1! 1")
    assert cone_table("2: 1! 1! 1", scales={0: 7}) == base
    assert cone_table("2: 1! 1! 1", scales={1: Fraction(1, 3)}) == base


def test_cube_input_validation():
    for bad in [dict(order=[1]), dict(order=[0, 0]), dict(order=[0, 2]),
                dict(scales={2: 5}), dict(scales={0: 0})]:
        try:
            vassiliev_complex(Word.parse("2: 1! 1! 1"), **bad)
            assert False, f"expected {bad} to be rejected"
        except ValueError:
            pass
    try:
        vassiliev_complex(Word.parse("2: 1 1 1"))
        assert False, "expected a word without singular letters to be rejected"
    except ValueError:
        pass


# -- cube homology, folded ----------------------------------------------------

def test_folded_cone_empty_for_single_crossing():
    for N in (2, 4):
        space, report = vassiliev_complex(Word.parse("2: 1!"), N=N)
        assert report["stabilized"], N
        assert space.table() == [], N


def test_folded_cone_table_for_singular_trefoil():
    assert cone_table("2: 1! 1 1", N=2) == CONE_TABLE_N2


def test_folded_cone_outside_its_domain_raises():
    # odd N on two strands, and any extension on three strands, carry a
    # nonvanishing potential: the folded columns do not exist there
    for text, N in [("2: 1!", 3), ("3: 1! 2", 2)]:
        try:
            vassiliev_complex(Word.parse(text), N=N)
            assert False, f"expected {text!r} at N={N} to be rejected"
        except ValueError as e:
            assert "potential" in str(e) or "curved" in str(e)


# -- finiteness reporting -----------------------------------------------------

def test_finite_dimensionality_certificates():
    out = finite_dimensionality_check(Word.parse("2: 1! 1 1"))
    assert out["all_resolutions_knots"]
    assert out["finite"] and not out["inconclusive"]
    assert out["total_dimension"] == 4

    out = finite_dimensionality_check(Word.parse("2: 1!"))
    assert out["finite"]
    assert out["total_dimension"] == 0


def test_link_resolution_is_inconclusive_not_failed():
    out = finite_dimensionality_check(
        Word.parse("2: 1! 1"), window=DegreeWindow(max_degree=16, margin=4))
    assert not out["all_resolutions_knots"]
    assert out["inconclusive"] and not out["finite"]
    assert "link" in out["note"]
