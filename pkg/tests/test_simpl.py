import dataclasses
import itertools

import pytest

import geomnerve as gn
from geomnerve.simpl import (
    homotopy_violations,
    simplicial_map_violations,
    trunc_sset_violations,
)


def standard_one_simplex():
    """Delta[1] truncated at 3, built straight from monotone 0/1 sequences."""
    levels = [["".join(s) for s in itertools.product("01", repeat=n + 1) if list(s) == sorted(s)] for n in range(4)]
    faces = {}
    for n in (1, 2, 3):
        for i in range(n + 1):
            faces[(n, i)] = {x: x[:i] + x[i + 1 :] for x in levels[n]}
    degens = {}
    for n in (0, 1, 2):
        for i in range(n + 1):
            degens[(n, i)] = {x: x[: i + 1] + x[i:] for x in levels[n]}
    return gn.TruncSSet(
        simplices=tuple(tuple(sorted(l)) for l in levels),
        faces=faces,
        degens=degens,
        coskeletal=False,
    )


def test_standard_one_simplex_counts_and_identities():
    X = standard_one_simplex()
    assert [len(X.level(n)) for n in range(4)] == [2, 3, 4, 5]
    assert not trunc_sset_violations(X)


def test_broken_face_identity_names_simplex():
    X = standard_one_simplex()
    faces = {k: dict(v) for k, v in X.faces.items()}
    faces[(2, 0)]["011"] = "00"  # should be "11"
    broken = dataclasses.replace(X, faces=faces)
    with pytest.raises(gn.ValidationError) as err:
        gn.validate_trunc_sset(broken)
    assert any(v.law == "simplicial identity" and "011" in v.witnesses for v in err.value.violations)


def test_dangling_face_reference():
    X = standard_one_simplex()
    faces = {k: dict(v) for k, v in X.faces.items()}
    faces[(1, 0)]["01"] = "missing"
    broken = dataclasses.replace(X, faces=faces)
    with pytest.raises(gn.ValidationError) as err:
        gn.validate_trunc_sset(broken)
    assert any(v.law == "dangling simplex reference" for v in err.value.violations)


@pytest.mark.parametrize(
    "name,sizes",
    [("terminal", (1, 1, 1, 1)), ("bz2", (1, 2, 4, 8)), ("bz3", (1, 3, 9, 27)), ("poset2", (3, 6, 10, 15))],
)
def test_classic_nerve_level_sizes(cats, name, sizes):
    X = gn.classic_nerve(cats[name])
    assert tuple(len(X.level(n)) for n in range(4)) == sizes
    assert not trunc_sset_violations(X)


def test_identity_map_and_constant_map(cats):
    X = gn.classic_nerve(cats["bz2"])
    assert not simplicial_map_violations(X, X, gn.identity_map(X))
    # constant map collapsing everything onto a degenerate vertex
    Y = gn.classic_nerve(cats["poset2"])
    w = Y.level(0)[0]
    images = [w]
    for n in range(3):
        images.append(Y.degen(n, 0, images[-1]))
    const = gn.SimplicialMap(dom=X, cod=Y, levels=tuple({x: images[n] for x in X.level(n)} for n in range(4)))
    gn.validate_simplicial_map(X, Y, const)


def test_map_violation_reports_operator(cats):
    X = gn.classic_nerve(cats["bz2"])
    ident = gn.identity_map(X)
    levels = tuple(dict(l) for l in ident.levels)
    levels[1]["1"] = "0"
    broken = gn.SimplicialMap(dom=X, cod=X, levels=levels)
    with pytest.raises(gn.ValidationError) as err:
        gn.validate_simplicial_map(X, X, broken)
    assert any(v.law == "naturality" for v in err.value.violations)


def test_enumerate_maps_from_point(cats, nerves):
    point = gn.classic_nerve(cats["terminal"])
    for name in ("delta2", "autz3", "bz2"):
        Y = nerves[name]
        maps = gn.enumerate_simplicial_maps(point, Y)
        assert len(maps) == len(Y.level(0)), name


def test_enumerate_rejects_non_coskeletal(cats):
    X = gn.classic_nerve(cats["terminal"])
    Y = standard_one_simplex()
    with pytest.raises(ValueError):
        gn.enumerate_simplicial_maps(X, Y)


def test_endomaps_of_z2_nerve(nerves):
    # simplicial maps correspond to the two endomorphisms of Z/2
    X = nerves["bz2"]
    maps = gn.enumerate_simplicial_maps(X, X)
    assert len(maps) == 2
    assert sorted(m.levels[1]["1"] for m in maps) == ["0", "1"]


def test_maps_z2_to_autz3_count(nerves):
    maps = gn.enumerate_simplicial_maps(nerves["bz2"], nerves["autz3"])
    assert len(maps) == 4


def test_constant_homotopy_valid_for_every_map(nerves):
    maps = gn.enumerate_simplicial_maps(nerves["bz2"], nerves["autz3"])
    for m in maps:
        h = gn.constant_homotopy(m)
        assert not homotopy_violations(m, m, h)


def test_homotopy_violation_names_vertex(nerves):
    maps = gn.enumerate_simplicial_maps(nerves["bz2"], nerves["autz3"])
    m = maps[0]
    h = gn.constant_homotopy(m)
    comp = {k: dict(v) for k, v in h.components.items()}
    Y = m.cod
    other = [e for e in Y.level(1) if e != comp[(0, 0)]["*"]][0]
    comp[(0, 0)]["*"] = other
    broken = gn.Homotopy(src=m, tgt=m, components=comp)
    violations = homotopy_violations(m, m, broken)
    assert any(v.law == "homotopy identity" and "*" in v.witnesses for v in violations)


def test_homotopy_classes_from_point_counts_components(cats, groups):
    # a discrete two-object category: the vertex-edge graph has two components
    disc = gn.Category(
        objects=("A", "B"),
        arrows={"idA": ("A", "A"), "idB": ("B", "B")},
        identity={"A": "idA", "B": "idB"},
        compose={("idA", "idA"): "idA", ("idB", "idB"): "idB"},
    )
    point = gn.classic_nerve(cats["terminal"])
    Y = gn.classic_nerve(disc)
    part = gn.homotopy_classes(point, Y)
    assert len(part.items) == 2 and len(part) == 2
    # one-object groupoid: a single component
    part2 = gn.homotopy_classes(point, gn.classic_nerve(cats["bz3"]))
    assert len(part2.items) == 1 and len(part2) == 1


def test_homotopy_classes_counts(nerves):
    part3 = gn.homotopy_classes(nerves["bz2"], nerves["autz3"])
    assert len(part3.items) == 4 and len(part3) == 2
    part2 = gn.homotopy_classes(nerves["bz2"], nerves["autz2"])
    assert len(part2.items) == 2 and len(part2) == 2


def test_homotopy_witnesses_validate(nerves):
    part = gn.homotopy_classes(nerves["bz2"], nerves["autz3"])
    assert part.witnesses
    for (i, j), h in part.witnesses.items():
        assert h.src == part.items[i] and h.tgt == part.items[j]
        assert not homotopy_violations(part.items[i], part.items[j], h)


def test_enumerated_homotopies_all_validate(nerves):
    maps = gn.enumerate_simplicial_maps(nerves["bz2"], nerves["autz2"])
    for p in maps:
        for q in maps:
            for h in gn.enumerate_homotopies(p, q):
                assert not homotopy_violations(p, q, h)


@pytest.mark.parametrize("target", ["autz2", "autz3"])
def test_one_step_homotopy_symmetric_on_two_groupoid_nerves(nerves, target):
    # not assumed anywhere, but it does hold on these instances
    maps = gn.enumerate_simplicial_maps(nerves["bz2"], nerves[target])
    for p in maps:
        for q in maps:
            assert (gn.homotopy_exists(p, q) is None) == (gn.homotopy_exists(q, p) is None)


def test_map_composition_with_nerve_automorphism(nerves, corpus):
    # postcomposing with an automorphism of the target permutes the map set
    maps = gn.enumerate_simplicial_maps(nerves["bz2"], nerves["autz3"])
    auto_funs = gn.enumerate_lax_functors(corpus["autz3"], corpus["autz3"], fix_objects={"*": "*"})
    strict_autos = [
        F
        for F in auto_funs
        if all(corpus["autz3"].is_id2(s) for s in F.sigma.values())
        and sorted(set(F.F1.values())) == sorted(corpus["autz3"].one_cells)
        and sorted(set(F.F2.values())) == sorted(corpus["autz3"].two_cells)
    ]
    assert strict_autos
    keys = {m.key() for m in maps}
    for A in strict_autos:
        nerve_a = gn.nerve_of_lax_functor(A)
        assert {gn.compose_maps(m, nerve_a).key() for m in maps} == keys
