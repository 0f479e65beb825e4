"""Non-abelian 2-cohomology of finite groupoids with coefficients in an
object-indexed family of groups, computed by brute force over lax functors
into the automorphism 2-groupoid, plus the bijection check against homotopy
classes of simplicial maps between the nerves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cat import Category, is_groupoid, validate_category
from .errors import ValidationError, Violation
from .laxfun import pi0_lax
from .nerve import geometric_nerve, nerve_of_lax_functor, nerve_of_transformation, reconstruct_lax_functor
from .simpl import homotopy_classes, homotopy_violations
from .twocat import TwoCat, from_category, validate_two_category


@dataclass(frozen=True)
class FiniteGroup:
    elements: tuple
    unit: str
    mult: dict
    inv: dict

    def times(self, a, b):
        return self.mult[(a, b)]

    def conj(self, k, g):
        """k·g·k⁻¹"""
        return self.times(self.times(k, g), self.inv[k])


def group_violations(G: FiniteGroup):
    v = []
    elems = set(G.elements)
    if len(G.elements) != len(elems):
        v.append(Violation("duplicate identifier", (), "repeated element id"))
    if G.unit not in elems:
        v.append(Violation("dangling identifier", (G.unit,), "unit is not an element"))
    pairs = {(a, b) for a in elems for b in elems}
    for pair in sorted(pairs - set(G.mult)):
        v.append(Violation("partial table", pair, "product missing"))
    for pair in sorted(set(G.mult) - pairs):
        v.append(Violation("spurious entry", pair, "product of unknown elements"))
    for (a, b), c in sorted(G.mult.items()):
        if (a, b) in pairs and c not in elems:
            v.append(Violation("closure", (a, b, str(c)), "product is not an element"))
    if v:
        return v
    for a in sorted(elems):
        if G.times(G.unit, a) != a or G.times(a, G.unit) != a:
            v.append(Violation("unit law", (a,), "unit does not act trivially"))
    for a in sorted(elems):
        for b in sorted(elems):
            for c in sorted(elems):
                if G.times(G.times(a, b), c) != G.times(a, G.times(b, c)):
                    v.append(Violation("associativity", (a, b, c), "multiplication is not associative"))
    for a in sorted(elems):
        b = G.inv.get(a)
        if b is None:
            v.append(Violation("partial table", (a,), "inverse missing"))
        elif G.times(a, b) != G.unit or G.times(b, a) != G.unit:
            v.append(Violation("inverse law", (a, str(b)), "stated inverse is not an inverse"))
    return v


def validate_group(G: FiniteGroup):
    v = group_violations(G)
    if v:
        raise ValidationError(v)
    return G


def make_group(elements, unit, mult, inv=None):
    """Build a FiniteGroup, deriving the inverse table when it is not given."""
    elements = tuple(sorted(elements))
    if inv is None:
        inv = {}
        for a in elements:
            for b in elements:
                if mult.get((a, b)) == unit and mult.get((b, a)) == unit:
                    inv[a] = b
                    break
    return validate_group(FiniteGroup(elements=elements, unit=unit, mult=dict(mult), inv=dict(inv)))


def cyclic_group(n):
    elems = [str(i) for i in range(n)]
    mult = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    return make_group(elems, "0", mult)


def trivial_group():
    return cyclic_group(1)


def symmetric_group(n):
    """Permutations of 0..n-1 named by their image strings; (a·b)(x) = a(b(x))."""
    perms = list(itertools.permutations(range(n)))
    name = {p: "".join(str(i) for i in p) for p in perms}
    mult = {}
    for a in perms:
        for b in perms:
            mult[(name[a], name[b])] = name[tuple(a[b[i]] for i in range(n))]
    return make_group(name.values(), name[tuple(range(n))], mult)


@dataclass(frozen=True)
class GroupFamily:
    """Finite groups indexed by the objects of a groupoid."""

    base: tuple
    groups: dict

    def group(self, x):
        return self.groups[x]


def group_isomorphisms(G: FiniteGroup, H: FiniteGroup):
    """All group isomorphisms G -> H as dicts, sorted by image tuple."""
    if len(G.elements) != len(H.elements):
        return []
    src = sorted(G.elements)
    out = []
    for images in itertools.permutations(sorted(H.elements)):
        iso = dict(zip(src, images))
        if iso[G.unit] != H.unit:
            continue
        if all(iso[G.times(a, b)] == H.times(iso[a], iso[b]) for a in src for b in src):
            out.append(iso)
    return out


def group_as_groupoid(G: FiniteGroup, obj="*"):
    """A group as a one-object groupoid; arrows are the elements."""
    arrows = {a: (obj, obj) for a in G.elements}
    compose = {(a, b): G.times(a, b) for a in G.elements for b in G.elements}
    return validate_category(
        Category(objects=(obj,), arrows=arrows, identity={obj: G.unit}, compose=compose)
    )


# -- the automorphism 2-groupoid -------------------------------------------------


@dataclass(frozen=True)
class AutStructure:
    """The 2-groupoid of a coefficient family together with decoding tables.

    twocat   objects: the base; 1-cells: group isomorphisms; 2-cells between
             phi, psi: K_x -> K_y: the elements k of K_y conjugating phi to psi.
    iso_of   1-cell id -> the underlying element mapping
    elt_of   2-cell id -> the conjugating element
    """

    family: GroupFamily
    twocat: TwoCat
    iso_of: dict
    elt_of: dict


def automorphism_structure(K: GroupFamily):
    for x in K.base:
        validate_group(K.group(x))
    base = tuple(sorted(K.base))

    one_cells = {}
    iso_of = {}
    id1 = {}
    iso_index = {}  # (x, y) -> {image tuple: cell id}
    for x in base:
        for y in base:
            isos = group_isomorphisms(K.group(x), K.group(y))
            table = {}
            for i, iso in enumerate(isos):
                cell = "%s>%s:%d" % (x, y, i)
                one_cells[cell] = (x, y)
                iso_of[cell] = iso
                table[tuple(sorted(iso.items()))] = cell
                if x == y and all(iso[g] == g for g in iso):
                    id1[x] = cell
            iso_index[(x, y)] = table

    def iso_cell(x, y, iso):
        return iso_index[(x, y)][tuple(sorted(iso.items()))]

    comp1 = {}
    for f, (x, y) in one_cells.items():
        for g, (y2, z) in one_cells.items():
            if y != y2:
                continue
            composite = {a: iso_of[g][iso_of[f][a]] for a in K.group(x).elements}
            comp1[(f, g)] = iso_cell(x, z, composite)

    two_cells = {}
    elt_of = {}
    id2 = {}
    cell_name = {}  # (phi, psi, k) -> 2-cell id
    for phi, (x, y) in sorted(one_cells.items()):
        Ky = K.group(y)
        for psi, (x2, y2) in sorted(one_cells.items()):
            if (x2, y2) != (x, y):
                continue
            for k in Ky.elements:
                if all(Ky.conj(k, iso_of[phi][g]) == iso_of[psi][g] for g in K.group(x).elements):
                    cell = "%s=>%s:%s" % (phi, psi, k)
                    two_cells[cell] = (phi, psi)
                    elt_of[cell] = k
                    cell_name[(phi, psi, k)] = cell
        id2[phi] = cell_name[(phi, phi, Ky.unit)]

    vcomp = {}
    for a, (phi, psi) in two_cells.items():
        y = one_cells[phi][1]
        Ky = K.group(y)
        for b, (psi2, chi) in two_cells.items():
            if psi2 != psi:
                continue
            vcomp[(a, b)] = cell_name[(phi, chi, Ky.times(elt_of[b], elt_of[a]))]

    hcomp = {}
    for a, (phi, psi) in two_cells.items():
        x, y = one_cells[phi]
        for b, (chi, chi2) in two_cells.items():
            if one_cells[chi][0] != y:
                continue
            z = one_cells[chi][1]
            Kz = K.group(z)
            elt = Kz.times(iso_of[chi2][elt_of[a]], elt_of[b])
            hcomp[(a, b)] = cell_name[(comp1[(phi, chi)], comp1[(psi, chi2)], elt)]

    C = TwoCat(
        objects=base,
        one_cells=one_cells,
        id1=id1,
        comp1=comp1,
        two_cells=two_cells,
        id2=id2,
        vcomp=vcomp,
        hcomp=hcomp,
    )
    validate_two_category(C)
    return AutStructure(family=K, twocat=C, iso_of=iso_of, elt_of=elt_of)


def automorphism_two_groupoid(K: GroupFamily):
    """The 2-groupoid of groups, group isomorphisms and conjugation 2-cells."""
    return automorphism_structure(K).twocat


# -- cohomology ---------------------------------------------------------------


def _check_h2_inputs(G: Category, K: GroupFamily):
    validate_category(G)
    if not is_groupoid(G):
        raise ValidationError([Violation("not a groupoid", (), "some arrow has no inverse")])
    if tuple(sorted(K.base)) != tuple(sorted(G.objects)):
        raise ValidationError(
            [Violation("base mismatch", (), "family base differs from the groupoid objects")]
        )


def h2(G: Category, K: GroupFamily, identity_components=False, max_branches=None):
    """Cohomology classes: connected components of the identity-on-objects lax
    functors from the groupoid into the automorphism 2-groupoid."""
    _check_h2_inputs(G, K)
    C = from_category(G)
    aut = automorphism_structure(K)
    fix = {x: x for x in C.objects}
    return pi0_lax(
        C,
        aut.twocat,
        fix_objects=fix,
        identity_components=identity_components,
        max_branches=max_branches,
    )


def dedecker_cocycle(F, aut: AutStructure):
    """The (action, factor set) presentation of a lax functor into Aut."""
    C = F.dom
    action = {}
    for f in sorted(C.one_cells):
        if C.is_id1(f):
            continue
        cell = F.F1[f]
        action[f] = {"one_cell": cell, "map": dict(sorted(aut.iso_of[cell].items()))}
    factor = []
    for (f, g) in sorted(C.comp1):
        if C.is_id1(f) or C.is_id1(g):
            continue
        factor.append({"f": f, "g": g, "element": aut.elt_of[F.sigma[(f, g)]]})
    return {"action": action, "factor_set": factor}


@dataclass(frozen=True)
class RepresentationReport:
    """Result of checking the cohomology/homotopy-class bijection by enumeration."""

    h2_count: int
    h2_identity_component_count: int
    homotopy_count: int
    vertex_fixed_homotopy_count: int
    class_map: tuple  # h2 class index -> homotopy class index
    well_defined: bool
    injective: bool
    surjective: bool
    notes: tuple
    cocycles: tuple

    @property
    def passed(self):
        return (
            self.well_defined
            and self.injective
            and self.surjective
            and self.h2_count == self.homotopy_count
        )

    def summary(self):
        return "classes: %d, homotopy classes: %d, bijection: %s" % (
            self.h2_count,
            self.homotopy_count,
            "PASS" if self.passed else "FAIL",
        )

    def to_json(self):
        return {
            "h2_classes": self.h2_count,
            "h2_classes_identity_components": self.h2_identity_component_count,
            "homotopy_classes": self.homotopy_count,
            "homotopy_classes_vertex_fixed": self.vertex_fixed_homotopy_count,
            "class_map": list(self.class_map),
            "well_defined": self.well_defined,
            "injective": self.injective,
            "surjective": self.surjective,
            "pass": self.passed,
            "notes": list(self.notes),
            "cocycle_representatives": list(self.cocycles),
        }


def representation_check(G: Category, K: GroupFamily, max_branches=None):
    """Verify, by exhaustive enumeration, that cohomology classes biject with
    homotopy classes of simplicial maps between the nerves."""
    _check_h2_inputs(G, K)
    C = from_category(G)
    aut = automorphism_structure(K)

    part_h2 = h2(G, K, max_branches=max_branches)
    part_h2_idc = h2(G, K, identity_components=True, max_branches=max_branches)

    X = geometric_nerve(C).sset
    Y = geometric_nerve(aut.twocat).sset
    part_maps = homotopy_classes(X, Y, max_branches=max_branches)

    notes = []
    map_index = {m.key(): i for i, m in enumerate(part_maps.items)}
    nerve_index = {}
    for i, F in enumerate(part_h2.items):
        phi = nerve_of_lax_functor(F)
        nerve_index[i] = map_index[phi.key()]

    well_defined = True
    for (i, j), t in part_h2.witnesses.items():
        hom = nerve_of_transformation(t)
        if homotopy_violations(hom.src, hom.tgt, hom):
            well_defined = False
            notes.append("witness transformation %d->%d does not induce a homotopy" % (i, j))
        if part_maps.class_of(nerve_index[i]) != part_maps.class_of(nerve_index[j]):
            well_defined = False
            notes.append("connected functors %d, %d have non-homotopic nerves" % (i, j))

    class_map = tuple(
        part_maps.class_of(nerve_index[cls[0]]) for cls in part_h2.classes
    )
    injective = len(set(class_map)) == len(class_map)

    surjective = set(class_map) == set(range(len(part_maps.classes)))
    for cls in part_maps.classes:
        rep = part_maps.items[cls[0]]
        F = reconstruct_lax_functor(rep, C, aut.twocat)
        if not F.is_identity_on_objects():
            notes.append("homotopy class %d is represented by a map moving objects" % part_maps.class_of(cls[0]))

    vertex_fixed = set()
    for i, m in enumerate(part_maps.items):
        if all(m.levels[0][x] == x for x in X.simplices[0]):
            vertex_fixed.add(part_maps.class_of(i))
    if len(vertex_fixed) != len(part_maps.classes):
        notes.append(
            "vertex-fixed class count %d differs from the full count %d"
            % (len(vertex_fixed), len(part_maps.classes))
        )
    if len(part_h2) != len(part_h2_idc):
        notes.append(
            "identity-component transformation count %d differs from the unrestricted count %d"
            % (len(part_h2_idc), len(part_h2))
        )

    cocycles = tuple(dedecker_cocycle(F, aut) for F in part_h2.representatives)
    return RepresentationReport(
        h2_count=len(part_h2),
        h2_identity_component_count=len(part_h2_idc),
        homotopy_count=len(part_maps),
        vertex_fixed_homotopy_count=len(vertex_fixed),
        class_map=class_map,
        well_defined=well_defined,
        injective=injective,
        surjective=surjective,
        notes=tuple(notes),
        cocycles=cocycles,
    )
