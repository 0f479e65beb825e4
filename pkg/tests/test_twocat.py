import dataclasses

import pytest

import geomnerve as gn
from geomnerve.twocat import two_category_violations


def test_terminal_is_valid():
    T = gn.delta_two_category(0)
    assert len(T.objects) == 1
    assert len(T.one_cells) == 1
    assert len(T.two_cells) == 1
    assert not two_category_violations(T)


def test_corpus_passes_full_axiom_check(corpus):
    for name, C in corpus.items():
        assert not two_category_violations(C), name


def test_missing_comp1_pair_reports_partial_table():
    C = gn.delta_two_category(2)
    broken_comp1 = dict(C.comp1)
    del broken_comp1[("0>1", "1>2")]
    broken = dataclasses.replace(C, comp1=broken_comp1)
    with pytest.raises(gn.ValidationError) as err:
        gn.validate_two_category(broken)
    laws = {(v.law, v.witnesses) for v in err.value.violations}
    assert ("partial table", ("0>1", "1>2")) in laws


def test_dangling_reference_reported():
    C = gn.delta_two_category(1)
    bad_cells = dict(C.one_cells)
    bad_cells["ghost"] = ("0", "nowhere")
    broken = dataclasses.replace(C, one_cells=bad_cells)
    with pytest.raises(gn.ValidationError) as err:
        gn.validate_two_category(broken)
    assert any(v.law == "dangling identifier" for v in err.value.violations)


def test_broken_interchange_detected(corpus):
    # swap two distinct hcomp values in Aut({Z/3})
    C = corpus["autz3"]
    hcomp = dict(C.hcomp)
    keys = sorted(k for k in hcomp if hcomp[k] != C.id2[C.two_cells[hcomp[k]][0]])[:2]
    (k1, k2) = keys
    hcomp[k1], hcomp[k2] = hcomp[k2], hcomp[k1]
    broken = dataclasses.replace(C, hcomp=hcomp)
    with pytest.raises(gn.ValidationError):
        gn.validate_two_category(broken)


@pytest.mark.parametrize("n,cells", [(0, 1), (1, 3), (2, 6), (3, 10), (4, 15)])
def test_delta_one_cell_counts(n, cells):
    C = gn.delta_two_category(n)
    assert len(C.one_cells) == cells == (n + 1) * (n + 2) // 2
    assert all(C.is_id2(a) for a in C.two_cells)


def test_delta_two_matches_poset_construction():
    # independent construction from the poset 0 <= 1 <= 2
    assert gn.from_category(gn.poset_category(2)) == gn.delta_two_category(2)


def test_from_category_trivial_group(groups):
    C = gn.from_category(gn.group_as_groupoid(groups["z1"]))
    assert len(C.objects) == 1 and len(C.one_cells) == 1


def test_from_category_z2_is_two_discrete(groups):
    C = gn.from_category(gn.group_as_groupoid(groups["z2"]))
    assert len(C.objects) == 1
    assert len(C.one_cells) == 2
    assert len(C.two_cells) == 2
    assert all(C.is_id2(a) for a in C.two_cells)


def test_from_category_round_trip(cats):
    # the underlying category is recoverable, so the construction is injective
    for name, cat in cats.items():
        C = gn.from_category(cat)
        assert set(C.objects) == set(cat.objects)
        assert C.one_cells == cat.arrows
        assert C.comp1 == cat.compose
        assert C.id1 == cat.identity, name


def test_is_two_groupoid(corpus):
    assert gn.is_two_groupoid(corpus["bz2"])
    assert not gn.is_two_groupoid(gn.delta_two_category(1))
    assert gn.is_two_groupoid(corpus["autz3"])
    assert gn.is_two_groupoid(corpus["autz2"])
    assert not gn.is_two_groupoid(corpus["poset2"])


def test_whiskering_against_hcomp(corpus):
    C = corpus["autz3"]
    for a in sorted(C.two_cells):
        f, g = C.two_cells[a]
        x, y = C.one_cells[f]
        # whiskers are horizontal composites with identity 2-cells
        for m in C.hom1(y, y):
            assert C.whisker_left(m, a) == C.horiz(a, C.id2[m])
        for e in C.hom1(x, x):
            assert C.whisker_right(a, e) == C.horiz(C.id2[e], a)


def test_category_validation_errors():
    cat = gn.poset_category(1)
    broken = dataclasses.replace(cat, compose={k: v for k, v in cat.compose.items() if k != ("0>1", "1>1")})
    with pytest.raises(gn.ValidationError) as err:
        gn.validate_category(broken)
    assert any(v.law == "partial table" for v in err.value.violations)


def test_is_groupoid(cats):
    assert gn.is_groupoid(cats["bz2"])
    assert gn.is_groupoid(cats["terminal"])
    assert not gn.is_groupoid(cats["poset1"])
