import pytest

import geomnerve as gn
from geomnerve.laxfun import lax_functor_violations, lax_transformation_violations

from helpers import enumerate_functors_cat, enumerate_natural_transformations


def aut_family(group):
    return gn.GroupFamily(base=("K",), groups={"K": group})


@pytest.fixture(scope="module")
def z2_to_autz3(corpus):
    return gn.enumerate_lax_functors(corpus["bz2"], corpus["autz3"], fix_objects={"*": "*"})


def test_identity_functor_valid(corpus):
    for name, C in corpus.items():
        F = gn.identity_lax_functor(C)
        assert not lax_functor_violations(C, C, F), name


def test_strict_functor_between_two_discrete(corpus):
    # the inclusion [1] -> [2] induces a strict 2-functor
    C, D = corpus["delta1"], corpus["delta2"]
    F = gn.LaxFunctor(
        dom=C,
        cod=D,
        F0={"0": "0", "1": "1"},
        F1={f: f for f in C.one_cells},
        F2={x: x for x in C.two_cells},
        sigma={pair: D.id2[r] for pair, r in C.comp1.items()},
    )
    gn.validate_lax_functor(C, D, F)


def test_coherence_failure_names_witness_triple(corpus):
    # inversion with a nonzero structure element fixes only 0, so (t,t,t) breaks
    C, D = corpus["bz2"], corpus["autz3"]
    F = gn.LaxFunctor(
        dom=C,
        cod=D,
        F0={"*": "*"},
        F1={"0": "*>*:0", "1": "*>*:1"},
        F2={"id:0": "*>*:0=>*>*:0:0", "id:1": "*>*:1=>*>*:1:0"},
        sigma={
            ("0", "0"): "*>*:0=>*>*:0:0",
            ("0", "1"): "*>*:1=>*>*:1:0",
            ("1", "0"): "*>*:1=>*>*:1:0",
            ("1", "1"): "*>*:0=>*>*:0:1",
        },
    )
    violations = lax_functor_violations(C, D, F)
    assert ("coherence", ("1", "1", "1")) in {(v.law, v.witnesses) for v in violations}


def test_enumeration_counts_z2_to_autz3(z2_to_autz3):
    # hand-solved coherence: theta^2 inner via k and theta(k) = k
    funs = z2_to_autz3
    assert len(funs) == 4
    data = sorted((F.F1["1"], F.sigma[("1", "1")]) for F in funs)
    assert data == [
        ("*>*:0", "*>*:0=>*>*:0:0"),
        ("*>*:0", "*>*:0=>*>*:0:1"),
        ("*>*:0", "*>*:0=>*>*:0:2"),
        ("*>*:1", "*>*:0=>*>*:0:0"),
    ]


def test_enumeration_from_terminal(corpus):
    T = corpus["terminal"]
    for name in ("delta2", "bz2", "autz3"):
        D = corpus[name]
        assert len(gn.enumerate_lax_functors(T, D)) == len(D.objects), name
        fixed = {a: sorted(D.objects)[0] for a in T.objects}
        assert len(gn.enumerate_lax_functors(T, D, fix_objects=fixed)) == 1


def test_enumeration_from_delta1(corpus):
    C = corpus["delta1"]
    for name in ("delta2", "bz3", "autz3"):
        D = corpus[name]
        assert len(gn.enumerate_lax_functors(C, D)) == len(D.one_cells), name


def test_enumeration_matches_plain_functors_on_two_discrete(cats):
    # independent oracle: plain functor enumeration on the category presentations
    for dom_name, cod_name in [("poset1", "poset2"), ("bz2", "bz2"), ("bz2", "bz3")]:
        C, D = cats[dom_name], cats[cod_name]
        plain = enumerate_functors_cat(C, D)
        lax = gn.enumerate_lax_functors(gn.from_category(C), gn.from_category(D))
        assert len(lax) == len(plain), (dom_name, cod_name)
        assert sorted(tuple(sorted(F.F1.items())) for F in lax) == sorted(
            tuple(sorted(F1.items())) for _, F1 in plain
        )


def test_every_enumerated_functor_validates(z2_to_autz3, corpus):
    for F in z2_to_autz3:
        assert not lax_functor_violations(corpus["bz2"], corpus["autz3"], F)


def test_compose_with_identity(z2_to_autz3, corpus):
    for F in z2_to_autz3:
        assert gn.compose_lax_functors(gn.identity_lax_functor(corpus["autz3"]), F) == F
        assert gn.compose_lax_functors(F, gn.identity_lax_functor(corpus["bz2"])) == F


def test_composite_of_strict_is_strict(corpus):
    C, D, E = corpus["delta1"], corpus["delta2"], corpus["delta3"]
    fs = gn.enumerate_lax_functors(C, D)
    gs = gn.enumerate_lax_functors(D, E)
    some = 0
    for F in fs:
        for G in gs:
            H = gn.compose_lax_functors(G, F)
            assert not lax_functor_violations(C, E, H)
            assert all(E.is_id2(s) for s in H.sigma.values())
            some += 1
    assert some


def test_compose_is_associative_on_enumerated_chain(corpus):
    C, D = corpus["delta1"], corpus["bz2"]
    E = corpus["autz3"]
    fs = gn.enumerate_lax_functors(C, D)
    gs = gn.enumerate_lax_functors(D, E, fix_objects={"*": "*"})
    hs = gn.enumerate_lax_functors(E, E, fix_objects={"*": "*"})
    assert hs
    for F in fs:
        for G in gs:
            for H in hs:
                left = gn.compose_lax_functors(H, gn.compose_lax_functors(G, F))
                right = gn.compose_lax_functors(gn.compose_lax_functors(H, G), F)
                assert left == right


def test_composite_of_enumerated_validates(corpus):
    C, E = corpus["bz2"], corpus["autz3"]
    fs = gn.enumerate_lax_functors(C, E, fix_objects={"*": "*"})
    gs = gn.enumerate_lax_functors(E, E, fix_objects={"*": "*"})
    for F in fs:
        for G in gs:
            assert not lax_functor_violations(C, E, gn.compose_lax_functors(G, F))


def test_identity_transformation_valid(z2_to_autz3):
    for F in z2_to_autz3:
        t = gn.identity_lax_transformation(F)
        assert not lax_transformation_violations(F, F, t)


def test_transformations_between_strict_are_natural_transformations(cats):
    C, D = cats["poset1"], cats["poset2"]
    plain = enumerate_functors_cat(C, D)
    C2, D2 = gn.from_category(C), gn.from_category(D)
    lax = gn.enumerate_lax_functors(C2, D2)
    by_f1 = {tuple(sorted(F.F1.items())): F for F in lax}
    for Fp in plain:
        for Gp in plain:
            F = by_f1[tuple(sorted(Fp[1].items()))]
            G = by_f1[tuple(sorted(Gp[1].items()))]
            ours = gn.enumerate_lax_transformations(F, G)
            oracle = enumerate_natural_transformations(C, D, Fp, Gp)
            assert len(ours) == len(oracle)
            assert sorted(tuple(sorted(t.components.items())) for t in ours) == sorted(
                tuple(sorted(a.items())) for a in oracle
            )


def test_no_transformation_between_distinct_actions(z2_to_autz3):
    by_data = {(F.F1["1"], F.sigma[("1", "1")]): F for F in z2_to_autz3}
    F = by_data[("*>*:0", "*>*:0=>*>*:0:0")]
    G = by_data[("*>*:1", "*>*:0=>*>*:0:0")]
    assert gn.enumerate_lax_transformations(F, G) == ()
    assert gn.enumerate_lax_transformations(G, F) == ()


def test_terminal_endotransformation_unique(corpus):
    T = corpus["terminal"]
    F = gn.identity_lax_functor(T)
    assert len(gn.enumerate_lax_transformations(F, F)) == 1


def test_pi0_terminal(corpus):
    part = gn.pi0_lax(corpus["terminal"], corpus["autz3"], fix_objects={"0": "*"})
    assert len(part) == 1


def test_pi0_counts(corpus):
    # extension classes: (Z/6, S3) and (Z/4, Z/2 x Z/2)
    part3 = gn.pi0_lax(corpus["bz2"], corpus["autz3"], fix_objects={"*": "*"})
    assert len(part3) == 2
    assert [len(c) for c in part3.classes] == [3, 1]
    part2 = gn.pi0_lax(corpus["bz2"], corpus["autz2"], fix_objects={"*": "*"})
    assert len(part2) == 2
    assert [len(c) for c in part2.classes] == [1, 1]


def test_pi0_witnesses_validate(corpus):
    part = gn.pi0_lax(corpus["bz2"], corpus["autz3"], fix_objects={"*": "*"})
    assert part.witnesses
    for (i, j), t in part.witnesses.items():
        assert not lax_transformation_violations(part.items[i], part.items[j], t)


def test_pi0_stable_under_reordering(corpus):
    part = gn.pi0_lax(corpus["bz2"], corpus["autz3"], fix_objects={"*": "*"})
    keys = [F.key() for F in part.representatives]
    again = gn.pi0_lax(corpus["bz2"], corpus["autz3"], fix_objects={"*": "*"})
    assert [F.key() for F in again.representatives] == keys


def test_fix_objects_rejects_partial_mapping(corpus):
    with pytest.raises(ValueError):
        gn.enumerate_lax_functors(corpus["delta1"], corpus["bz2"], fix_objects={"0": "*"})


def test_search_budget_enforced(corpus):
    with pytest.raises(gn.SearchLimitExceeded):
        gn.enumerate_lax_functors(corpus["delta3"], corpus["autz3"], max_branches=3)
