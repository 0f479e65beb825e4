"""Normal lax 2-functors and lax 2-natural transformations between finite 2-categories.

Conventions fixed throughout:

- The structure 2-cell of a lax functor is directed sigma[(f, g)]:
  F(g∘f) => F(g)∘F(f), for each composable pair (f then g).
- A transformation t: F -> G has 1-cell components alpha_A: F(A) -> G(A) and
  structure 2-cells s_f: alpha_B ∘ F(f) => G(f) ∘ alpha_A for f: A -> B, with
  s on identity 1-cells required to be an identity (unit-strict).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import SearchBudget, ValidationError, Violation
from .partition import partition_from_edges
from .twocat import TwoCat


@dataclass(frozen=True)
class LaxFunctor:
    """Cell mappings F0, F1, F2 plus the structure map sigma over composable 1-cell pairs.

    sigma is stored totally: it has an entry for *every* composable pair, with
    the entries forced by normality (an identity leg) equal to identity 2-cells.
    """

    dom: TwoCat
    cod: TwoCat
    F0: dict
    F1: dict
    F2: dict
    sigma: dict

    def key(self):
        """Canonical comparison/sort key: the full assignment, order-normalised."""
        return (
            tuple(sorted(self.F0.items())),
            tuple(sorted(self.F1.items())),
            tuple(sorted(self.F2.items())),
            tuple(sorted(self.sigma.items())),
        )

    def is_identity_on_objects(self):
        return all(self.F0[a] == a for a in self.dom.objects)


@dataclass(frozen=True)
class LaxTransformation:
    """Components alpha_A: F(A) -> G(A) and structure s_f: alpha_B∘F(f) => G(f)∘alpha_A."""

    src: LaxFunctor
    tgt: LaxFunctor
    components: dict
    structure: dict

    def key(self):
        return (tuple(sorted(self.components.items())), tuple(sorted(self.structure.items())))


# -- validation ----------------------------------------------------------------


def lax_functor_violations(C: TwoCat, D: TwoCat, F: LaxFunctor):
    v = []
    cod_objects = set(D.objects)
    for a in C.objects:
        x = F.F0.get(a)
        if x is None:
            v.append(Violation("partial table", (a,), "object has no image"))
        elif x not in cod_objects:
            v.append(Violation("dangling identifier", (a, str(x)), "object image is not an object"))
    if v:
        return v

    for f in sorted(C.one_cells):
        x = F.F1.get(f)
        if x is None:
            v.append(Violation("partial table", (f,), "1-cell has no image"))
            continue
        if x not in D.one_cells:
            v.append(Violation("dangling identifier", (f, str(x)), "1-cell image is not a 1-cell"))
            continue
        want = (F.F0[C.src1(f)], F.F0[C.tgt1(f)])
        if D.one_cells[x] != want:
            v.append(Violation("endpoint mismatch", (f, x), "1-cell image endpoints disagree with the object images"))
    if v:
        return v

    for a in C.objects:
        if F.F1[C.id1[a]] != D.id1[F.F0[a]]:
            v.append(Violation("normality", (a,), "identity 1-cell not sent to an identity 1-cell"))

    for x in sorted(C.two_cells):
        y = F.F2.get(x)
        if y is None:
            v.append(Violation("partial table", (x,), "2-cell has no image"))
            continue
        if y not in D.two_cells:
            v.append(Violation("dangling identifier", (x, str(y)), "2-cell image is not a 2-cell"))
            continue
        f, g = C.two_cells[x]
        if D.two_cells[y] != (F.F1[f], F.F1[g]):
            v.append(Violation("endpoint mismatch", (x, y), "2-cell image boundary disagrees with the 1-cell images"))
    if v:
        return v

    for f in sorted(C.one_cells):
        if F.F2[C.id2[f]] != D.id2[F.F1[f]]:
            v.append(Violation("normality", (f,), "identity 2-cell not sent to an identity 2-cell"))

    for table, domain, name in ((F.F0, set(C.objects), "F0"), (F.F1, set(C.one_cells), "F1"), (F.F2, set(C.two_cells), "F2")):
        for key in sorted(set(table) - domain):
            v.append(Violation("spurious entry", (key,), "%s entry for an unknown cell" % name))

    # local functoriality of F2 on each hom-category
    for (a, b), r in sorted(C.vcomp.items()):
        if F.F2[r] != D.vert(F.F2[a], F.F2[b]):
            v.append(Violation("local functoriality", (a, b), "F2 does not preserve vertical composition"))

    pairs = sorted(C.comp1)
    for (f, g) in pairs:
        s = F.sigma.get((f, g))
        if s is None:
            v.append(Violation("partial table", (f, g), "composable pair has no structure 2-cell"))
            continue
        if s not in D.two_cells:
            v.append(Violation("dangling identifier", (f, g, str(s)), "structure value is not a 2-cell"))
            continue
        want = (F.F1[C.compose1(f, g)], D.compose1(F.F1[f], F.F1[g]))
        if D.two_cells[s] != want:
            v.append(Violation("endpoint mismatch", (f, g, s), "structure 2-cell has wrong boundary"))
    for pair in sorted(set(F.sigma) - set(pairs)):
        v.append(Violation("spurious entry", pair, "structure entry for a non-composable pair"))
    if v:
        return v

    for (f, g) in pairs:
        if C.is_id1(f) or C.is_id1(g):
            if F.sigma[(f, g)] != D.id2[F.F1[C.compose1(f, g)]]:
                v.append(Violation("normality", (f, g), "structure 2-cell on an identity leg is not an identity"))

    # naturality of sigma in both 2-cell arguments
    for (a, b) in sorted(C.hcomp):
        f, f2 = C.two_cells[a]
        g, g2 = C.two_cells[b]
        lhs = D.vert(F.F2[C.horiz(a, b)], F.sigma[(f2, g2)])
        rhs = D.vert(F.sigma[(f, g)], D.horiz(F.F2[a], F.F2[b]))
        if lhs != rhs:
            v.append(Violation("naturality", (a, b), "structure map is not natural at this 2-cell pair"))

    # coherence on every composable triple
    for f in sorted(C.one_cells):
        for g in sorted(C.one_cells):
            if C.tgt1(f) != C.src1(g):
                continue
            for h in sorted(C.one_cells):
                if C.tgt1(g) != C.src1(h):
                    continue
                lhs = D.vert(
                    F.sigma[(C.compose1(f, g), h)],
                    D.whisker_left(F.F1[h], F.sigma[(f, g)]),
                )
                rhs = D.vert(
                    F.sigma[(f, C.compose1(g, h))],
                    D.whisker_right(F.sigma[(g, h)], F.F1[f]),
                )
                if lhs != rhs:
                    v.append(Violation("coherence", (f, g, h), "structure map fails the cocycle condition"))
    return v


def validate_lax_functor(C: TwoCat, D: TwoCat, F: LaxFunctor):
    v = lax_functor_violations(C, D, F)
    if v:
        raise ValidationError(v)
    return F


def identity_lax_functor(C: TwoCat):
    return LaxFunctor(
        dom=C,
        cod=C,
        F0={a: a for a in C.objects},
        F1={f: f for f in C.one_cells},
        F2={x: x for x in C.two_cells},
        sigma={pair: C.id2[r] for pair, r in C.comp1.items()},
    )


def compose_lax_functors(G: LaxFunctor, F: LaxFunctor):
    """The composite G∘F; its structure map is G2(sigma^F) followed by sigma^G."""
    if F.cod != G.dom:
        raise ValueError("codomain of the first factor must equal the domain of the second")
    C, D = F.dom, G.cod
    F0 = {a: G.F0[F.F0[a]] for a in C.objects}
    F1 = {f: G.F1[F.F1[f]] for f in C.one_cells}
    F2 = {x: G.F2[F.F2[x]] for x in C.two_cells}
    sigma = {}
    for (f, g) in C.comp1:
        sigma[(f, g)] = D.vert(G.F2[F.sigma[(f, g)]], G.sigma[(F.F1[f], F.F1[g])])
    return LaxFunctor(dom=C, cod=D, F0=F0, F1=F1, F2=F2, sigma=sigma)


def lax_transformation_violations(F: LaxFunctor, G: LaxFunctor, t: LaxTransformation):
    if F.dom != G.dom or F.cod != G.cod:
        return [Violation("parallelism", (), "functors are not parallel")]
    C, D = F.dom, F.cod
    v = []
    for a in C.objects:
        comp = t.components.get(a)
        if comp is None:
            v.append(Violation("partial table", (a,), "object has no component"))
        elif comp not in D.one_cells or D.one_cells[comp] != (F.F0[a], G.F0[a]):
            v.append(Violation("endpoint mismatch", (a, str(comp)), "component is not a 1-cell F(A) -> G(A)"))
    if v:
        return v

    for f in sorted(C.one_cells):
        a, b = C.one_cells[f]
        s = t.structure.get(f)
        if s is None:
            v.append(Violation("partial table", (f,), "1-cell has no structure 2-cell"))
            continue
        want = (D.compose1(F.F1[f], t.components[b]), D.compose1(t.components[a], G.F1[f]))
        if s not in D.two_cells or D.two_cells[s] != want:
            v.append(Violation("endpoint mismatch", (f, str(s)), "structure 2-cell has wrong boundary"))
    if v:
        return v

    for a in C.objects:
        if t.structure[C.id1[a]] != D.id2[t.components[a]]:
            v.append(Violation("unit", (a,), "structure 2-cell on an identity 1-cell is not an identity"))
    for table, domain, name in ((t.components, set(C.objects), "components"), (t.structure, set(C.one_cells), "structure")):
        for key in sorted(set(table) - domain):
            v.append(Violation("spurious entry", (key,), "%s entry for an unknown cell" % name))

    # naturality in 2-cells: (G2(b) ∗ id_alpha_A) · s_f = s_f' · (id_alpha_B ∗ F2(b))
    for x in sorted(C.two_cells):
        f, f2 = C.two_cells[x]
        a, b = C.one_cells[f]
        lhs = D.vert(t.structure[f], D.whisker_right(G.F2[x], t.components[a]))
        rhs = D.vert(D.whisker_left(t.components[b], F.F2[x]), t.structure[f2])
        if lhs != rhs:
            v.append(Violation("naturality", (x,), "structure is not natural at this 2-cell"))

    # coherence with both structure maps on every composable pair
    for (f, g) in sorted(C.comp1):
        a = C.src1(f)
        c = C.tgt1(g)
        lhs = D.vert(
            D.vert(
                D.whisker_left(t.components[c], F.sigma[(f, g)]),
                D.whisker_right(t.structure[g], F.F1[f]),
            ),
            D.whisker_left(G.F1[g], t.structure[f]),
        )
        rhs = D.vert(t.structure[C.compose1(f, g)], D.whisker_right(G.sigma[(f, g)], t.components[a]))
        if lhs != rhs:
            v.append(Violation("coherence", (f, g), "structure fails the composition coherence"))
    return v


def validate_lax_transformation(F: LaxFunctor, G: LaxFunctor, t: LaxTransformation):
    v = lax_transformation_violations(F, G, t)
    if v:
        raise ValidationError(v)
    return t


def identity_lax_transformation(F: LaxFunctor):
    D = F.cod
    return LaxTransformation(
        src=F,
        tgt=F,
        components={a: D.id1[F.F0[a]] for a in F.dom.objects},
        structure={f: D.id2[F.F1[f]] for f in F.dom.one_cells},
    )


# -- exhaustive enumeration ------------------------------------------------------


def _assignments(keys, candidates, budget):
    """Yield dicts key->value over per-key candidate lists, depth-first in order."""
    if any(not candidates[k] for k in keys):
        return
    for combo in itertools.product(*(candidates[k] for k in keys)):
        budget.spend()
        yield dict(zip(keys, combo))


def enumerate_lax_functors(C: TwoCat, D: TwoCat, fix_objects=None, max_branches=None):
    """All normal lax 2-functors C -> D, in canonical order.

    Backtracks over (F0, F1, F2, sigma) with endpoint, normality and local
    functoriality pruning before the global naturality/coherence checks; every
    emitted functor passes validate_lax_functor.
    """
    budget = SearchBudget.create(max_branches)
    objs = list(C.objects)
    non_id1 = [f for f in sorted(C.one_cells) if not C.is_id1(f)]
    non_id2 = [x for x in sorted(C.two_cells) if not C.is_id2(x)]
    pairs = sorted(C.comp1)

    if fix_objects is not None:
        missing = [a for a in objs if a not in fix_objects]
        if missing or any(fix_objects[a] not in set(D.objects) for a in objs):
            raise ValueError("fix_objects must map every object of the domain to an object of the codomain")
        object_maps = [{a: fix_objects[a] for a in objs}]
    else:
        object_maps = [dict(zip(objs, combo)) for combo in itertools.product(sorted(D.objects), repeat=len(objs))]

    results = []
    for F0 in object_maps:
        budget.spend()
        f1_cands = {f: list(D.hom1(F0[C.src1(f)], F0[C.tgt1(f)])) for f in non_id1}
        for F1p in _assignments(non_id1, f1_cands, budget):
            F1 = dict(F1p)
            for a in objs:
                F1[C.id1[a]] = D.id1[F0[a]]
            f2_cands = {}
            for x in non_id2:
                f, g = C.two_cells[x]
                f2_cands[x] = list(D.two_cells_between(F1[f], F1[g]))
            for F2p in _assignments(non_id2, f2_cands, budget):
                F2 = dict(F2p)
                for f in C.one_cells:
                    F2[C.id2[f]] = D.id2[F1[f]]
                if any(F2[r] != D.vert(F2[a], F2[b]) for (a, b), r in C.vcomp.items()):
                    continue
                sig_cands = {}
                ok = True
                for (f, g) in pairs:
                    src = F1[C.compose1(f, g)]
                    tgt = D.compose1(F1[f], F1[g])
                    if C.is_id1(f) or C.is_id1(g):
                        cands = [D.id2[src]] if src == tgt else []
                    else:
                        cands = list(D.two_cells_between(src, tgt))
                    if not cands:
                        ok = False
                        break
                    sig_cands[(f, g)] = cands
                if not ok:
                    continue
                for sigma in _assignments(pairs, sig_cands, budget):
                    F = LaxFunctor(dom=C, cod=D, F0=F0, F1=F1, F2=F2, sigma=sigma)
                    if not lax_functor_violations(C, D, F):
                        results.append(F)
    results.sort(key=lambda F: F.key())
    return tuple(results)


def enumerate_lax_transformations(F: LaxFunctor, G: LaxFunctor, identity_components=False, max_branches=None):
    """All lax transformations F -> G (unit-strict), in canonical order."""
    if F.dom != G.dom or F.cod != G.cod:
        raise ValueError("functors must be parallel")
    budget = SearchBudget.create(max_branches)
    C, D = F.dom, F.cod
    objs = list(C.objects)
    non_id1 = [f for f in sorted(C.one_cells) if not C.is_id1(f)]

    comp_cands = {}
    for a in objs:
        cands = list(D.hom1(F.F0[a], G.F0[a]))
        if identity_components:
            cands = [c for c in cands if D.is_id1(c)]
        comp_cands[a] = cands

    results = []
    for components in _assignments(objs, comp_cands, budget):
        s_cands = {}
        ok = True
        for f in non_id1:
            a, b = C.one_cells[f]
            src = D.compose1(F.F1[f], components[b])
            tgt = D.compose1(components[a], G.F1[f])
            cands = list(D.two_cells_between(src, tgt))
            if not cands:
                ok = False
                break
            s_cands[f] = cands
        if not ok:
            continue
        for sp in _assignments(non_id1, s_cands, budget):
            structure = dict(sp)
            for a in objs:
                structure[C.id1[a]] = D.id2[components[a]]
            t = LaxTransformation(src=F, tgt=G, components=components, structure=structure)
            if not lax_transformation_violations(F, G, t):
                results.append(t)
    results.sort(key=lambda t: t.key())
    return tuple(results)


def transformation_exists(F, G, identity_components=False, max_branches=None):
    """First lax transformation F -> G in canonical order, or None."""
    found = enumerate_lax_transformations(F, G, identity_components=identity_components, max_branches=max_branches)
    return found[0] if found else None


def pi0_lax(C: TwoCat, D: TwoCat, fix_objects=None, identity_components=False, max_branches=None):
    """Connected components of the enumerated lax functors C -> D.

    Two functors are joined when a lax transformation exists in either
    direction; the partition is the symmetric-transitive closure of that
    relation.
    """
    functors = enumerate_lax_functors(C, D, fix_objects=fix_objects, max_branches=max_branches)
    return partition_from_edges(
        functors,
        lambda F, G: transformation_exists(
            F, G, identity_components=identity_components, max_branches=max_branches
        ),
    )
