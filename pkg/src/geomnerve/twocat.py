"""Finite strict 2-categories as explicit cell sets and composition tables.

Table conventions (all diagrammatic, "first leg first"):

- comp1[(f, g)] with tgt(f) = src(g) is the composite "f then g", written g∘f.
- vcomp[(a, b)] with tgt2(a) = src2(b) is "a then b", written b·a.
- hcomp[(a, b)], a over A->B and b over B->C, is the horizontal composite b∗a.

Whiskering helpers follow the usual pasting notation: whisker_left(m, b) is
m∗b ("mb", postcompose the legs of b with the 1-cell m) and whisker_right(b, f)
is b∗f ("bf", precompose the legs of b with f).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cat import Category, validate_category
from .errors import ValidationError, Violation


@dataclass(frozen=True)
class TwoCat:
    """A strict 2-category with every composite stored extensionally.

    objects    sorted tuple of object ids
    one_cells  id -> (src object, tgt object)
    id1        object -> identity 1-cell
    comp1      (f, g) -> "f then g"            (tgt f = src g)
    two_cells  id -> (src 1-cell, tgt 1-cell)  (parallel 1-cells)
    id2        1-cell -> identity 2-cell
    vcomp      (a, b) -> "a then b"            (tgt2 a = src2 b)
    hcomp      (a, b) -> b beside a            (a over the first leg)
    """

    objects: tuple
    one_cells: dict
    id1: dict
    comp1: dict
    two_cells: dict
    id2: dict
    vcomp: dict
    hcomp: dict

    # -- lookups ------------------------------------------------------------

    def src1(self, f):
        return self.one_cells[f][0]

    def tgt1(self, f):
        return self.one_cells[f][1]

    def src2(self, a):
        return self.two_cells[a][0]

    def tgt2(self, a):
        return self.two_cells[a][1]

    def compose1(self, f, g):
        """The 1-cell "f then g" = g∘f."""
        return self.comp1[(f, g)]

    def vert(self, a, b):
        """The 2-cell "a then b" = b·a."""
        return self.vcomp[(a, b)]

    def horiz(self, a, b):
        """Horizontal composite b∗a, with a over the first leg."""
        return self.hcomp[(a, b)]

    def whisker_left(self, m, b):
        """m∗b for a 1-cell m after the legs of b (the pasting "mb")."""
        return self.horiz(b, self.id2[m])

    def whisker_right(self, b, f):
        """b∗f for a 1-cell f before the legs of b (the pasting "bf")."""
        return self.horiz(self.id2[f], b)

    # -- enumeration helpers -------------------------------------------------

    def hom1(self, a, b):
        return tuple(f for f in sorted(self.one_cells) if self.one_cells[f] == (a, b))

    def two_cells_between(self, f, g):
        return tuple(x for x in sorted(self.two_cells) if self.two_cells[x] == (f, g))

    def is_id1(self, f):
        return self.id1.get(self.src1(f)) == f

    def is_id2(self, a):
        return self.id2.get(self.src2(a)) == a

    def inverse1(self, f):
        """Strict inverse of a 1-cell under comp1, or None."""
        a, b = self.one_cells[f]
        for g in self.hom1(b, a):
            if self.comp1.get((f, g)) == self.id1[a] and self.comp1.get((g, f)) == self.id1[b]:
                return g
        return None

    def vertical_inverse(self, a):
        """Vertical inverse of a 2-cell, or None."""
        f, g = self.two_cells[a]
        for b in self.two_cells_between(g, f):
            if self.vcomp.get((a, b)) == self.id2[f] and self.vcomp.get((b, a)) == self.id2[g]:
                return b
        return None


# -- validation ---------------------------------------------------------------


def _reference_violations(C):
    v = []
    objs = set(C.objects)
    if len(C.objects) != len(objs):
        v.append(Violation("duplicate identifier", (), "repeated object id"))
    for f, (a, b) in sorted(C.one_cells.items()):
        for x in (a, b):
            if x not in objs:
                v.append(Violation("dangling identifier", (f, x), "1-cell endpoint is not an object"))
    ones = set(C.one_cells)
    for x, (f, g) in sorted(C.two_cells.items()):
        if f not in ones or g not in ones:
            v.append(Violation("dangling identifier", (x,), "2-cell boundary is not a 1-cell"))
        elif C.one_cells[f] != C.one_cells[g]:
            v.append(Violation("parallelism", (x, f, g), "2-cell boundary 1-cells are not parallel"))
    for a in C.objects:
        e = C.id1.get(a)
        if e is None:
            v.append(Violation("partial table", (a,), "object has no identity 1-cell"))
        elif e not in ones or C.one_cells[e] != (a, a):
            v.append(Violation("dangling identifier", (a, str(e)), "identity 1-cell is not an endo-1-cell"))
    for a in sorted(set(C.id1) - objs):
        v.append(Violation("dangling identifier", (a,), "id1 keyed by unknown object"))
    twos = set(C.two_cells)
    for f in sorted(ones):
        e = C.id2.get(f)
        if e is None:
            v.append(Violation("partial table", (f,), "1-cell has no identity 2-cell"))
        elif e not in twos or C.two_cells[e] != (f, f):
            v.append(Violation("dangling identifier", (f, str(e)), "identity 2-cell does not sit on its 1-cell"))
    for f in sorted(set(C.id2) - ones):
        v.append(Violation("dangling identifier", (f,), "id2 keyed by unknown 1-cell"))
    return v


def _table_violations(C):
    v = []
    ones, twos = C.one_cells, C.two_cells

    composable1 = {(f, g) for f in ones for g in ones if ones[f][1] == ones[g][0]}
    for pair in sorted(composable1 - set(C.comp1)):
        v.append(Violation("partial table", pair, "composable 1-cell pair missing from comp1"))
    for pair in sorted(set(C.comp1) - composable1):
        v.append(Violation("spurious entry", pair, "comp1 entry for a non-composable pair"))
    for (f, g), r in sorted(C.comp1.items()):
        if (f, g) in composable1:
            if r not in ones:
                v.append(Violation("dangling identifier", (f, g, str(r)), "comp1 value is not a 1-cell"))
            elif ones[r] != (ones[f][0], ones[g][1]):
                v.append(Violation("closure", (f, g, r), "comp1 value has wrong endpoints"))

    vcomposable = {(a, b) for a in twos for b in twos if twos[a][1] == twos[b][0]}
    for pair in sorted(vcomposable - set(C.vcomp)):
        v.append(Violation("partial table", pair, "vertically composable pair missing from vcomp"))
    for pair in sorted(set(C.vcomp) - vcomposable):
        v.append(Violation("spurious entry", pair, "vcomp entry for a non-composable pair"))
    for (a, b), r in sorted(C.vcomp.items()):
        if (a, b) in vcomposable:
            if r not in twos:
                v.append(Violation("dangling identifier", (a, b, str(r)), "vcomp value is not a 2-cell"))
            elif twos[r] != (twos[a][0], twos[b][1]):
                v.append(Violation("closure", (a, b, r), "vcomp value has wrong boundary"))

    # (a, b) horizontally composable when a's legs end where b's legs start
    def legs(a):
        f, g = twos[a]
        return ones[f]

    hcomposable = {(a, b) for a in twos for b in twos if legs(a)[1] == legs(b)[0]}
    for pair in sorted(hcomposable - set(C.hcomp)):
        v.append(Violation("partial table", pair, "horizontally composable pair missing from hcomp"))
    for pair in sorted(set(C.hcomp) - hcomposable):
        v.append(Violation("spurious entry", pair, "hcomp entry for a non-composable pair"))
    if any(x.law == "partial table" for x in v):
        return v
    for (a, b), r in sorted(C.hcomp.items()):
        if (a, b) in hcomposable:
            fa, ga = twos[a]
            fb, gb = twos[b]
            if r not in twos:
                v.append(Violation("dangling identifier", (a, b, str(r)), "hcomp value is not a 2-cell"))
            elif twos[r] != (C.comp1[(fa, fb)], C.comp1[(ga, gb)]):
                v.append(Violation("closure", (a, b, r), "hcomp value has wrong boundary"))
    return v


def _law_violations(C):
    v = []
    ones, twos = C.one_cells, C.two_cells

    for f in sorted(ones):
        a, b = ones[f]
        if C.compose1(C.id1[a], f) != f:
            v.append(Violation("unit law", (f,), "identity 1-cell is not a left unit"))
        if C.compose1(f, C.id1[b]) != f:
            v.append(Violation("unit law", (f,), "identity 1-cell is not a right unit"))
    for f in sorted(ones):
        for g in sorted(ones):
            if ones[f][1] != ones[g][0]:
                continue
            for h in sorted(ones):
                if ones[g][1] != ones[h][0]:
                    continue
                if C.compose1(C.compose1(f, g), h) != C.compose1(f, C.compose1(g, h)):
                    v.append(Violation("associativity", (f, g, h), "comp1 is not associative"))

    for a in sorted(twos):
        f, g = twos[a]
        if C.vert(C.id2[f], a) != a:
            v.append(Violation("unit law", (a,), "identity 2-cell is not a left vertical unit"))
        if C.vert(a, C.id2[g]) != a:
            v.append(Violation("unit law", (a,), "identity 2-cell is not a right vertical unit"))
    for a in sorted(twos):
        for b in sorted(twos):
            if twos[a][1] != twos[b][0]:
                continue
            for c in sorted(twos):
                if twos[b][1] != twos[c][0]:
                    continue
                if C.vert(C.vert(a, b), c) != C.vert(a, C.vert(b, c)):
                    v.append(Violation("associativity", (a, b, c), "vcomp is not associative"))

    def legs(a):
        return ones[twos[a][0]]

    # functoriality of horizontal composition on identities
    for f in sorted(ones):
        for g in sorted(ones):
            if ones[f][1] == ones[g][0]:
                if C.horiz(C.id2[f], C.id2[g]) != C.id2[C.compose1(f, g)]:
                    v.append(Violation("functoriality", (f, g), "hcomp of identity 2-cells is not the identity of the composite"))

    # horizontal units and associativity
    for a in sorted(twos):
        x, y = legs(a)
        if C.horiz(C.id2[C.id1[x]], a) != a:
            v.append(Violation("unit law", (a,), "identity object 2-cell is not a left horizontal unit"))
        if C.horiz(a, C.id2[C.id1[y]]) != a:
            v.append(Violation("unit law", (a,), "identity object 2-cell is not a right horizontal unit"))
    for a in sorted(twos):
        for b in sorted(twos):
            if legs(a)[1] != legs(b)[0]:
                continue
            for c in sorted(twos):
                if legs(b)[1] != legs(c)[0]:
                    continue
                if C.horiz(C.horiz(a, b), c) != C.horiz(a, C.horiz(b, c)):
                    v.append(Violation("associativity", (a, b, c), "hcomp is not associative"))

    # interchange: (b'·b) ∗ (a'·a) = (b'∗a')·(b∗a)
    for a in sorted(twos):
        for a2 in sorted(twos):
            if twos[a][1] != twos[a2][0]:
                continue
            for b in sorted(twos):
                if legs(a)[1] != legs(b)[0]:
                    continue
                for b2 in sorted(twos):
                    if twos[b][1] != twos[b2][0]:
                        continue
                    lhs = C.horiz(C.vert(a, a2), C.vert(b, b2))
                    rhs = C.vert(C.horiz(a, b), C.horiz(a2, b2))
                    if lhs != rhs:
                        v.append(Violation("interchange", (a, a2, b, b2), "interchange law fails"))
    return v


def two_category_violations(C):
    v = _reference_violations(C)
    if v:
        return v
    v = _table_violations(C)
    if v:
        return v
    return _law_violations(C)


def validate_two_category(C):
    """Return C if it satisfies every strict 2-category axiom, else raise with all violations."""
    v = two_category_violations(C)
    if v:
        raise ValidationError(v)
    return C


# -- canonical constructions ---------------------------------------------------


def _identity_two_cell_name(one_cell):
    return "id:%s" % one_cell


def _two_discrete(objects, one_cells, id1, comp1):
    """Pad an ordinary category structure with identity 2-cells only."""
    two_cells = {_identity_two_cell_name(f): (f, f) for f in one_cells}
    id2 = {f: _identity_two_cell_name(f) for f in one_cells}
    vcomp = {(a, a): a for a in two_cells}
    hcomp = {}
    for (f, g), r in comp1.items():
        hcomp[(id2[f], id2[g])] = id2[r]
    return TwoCat(
        objects=tuple(sorted(objects)),
        one_cells=dict(one_cells),
        id1=dict(id1),
        comp1=dict(comp1),
        two_cells=two_cells,
        id2=id2,
        vcomp=vcomp,
        hcomp=hcomp,
    )


def delta_two_category(n):
    """The poset 0 <= ... <= n as a 2-category whose only 2-cells are identities."""
    if n < 0:
        raise ValueError("n must be >= 0")
    objects = [str(i) for i in range(n + 1)]
    one_cells = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            one_cells["%d>%d" % (i, j)] = (str(i), str(j))
    id1 = {str(i): "%d>%d" % (i, i) for i in range(n + 1)}
    comp1 = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                comp1[("%d>%d" % (i, j), "%d>%d" % (j, k))] = "%d>%d" % (i, k)
    return validate_two_category(_two_discrete(objects, one_cells, id1, comp1))


def from_category(cat: Category):
    """A finite category regarded as a 2-discrete 2-category."""
    validate_category(cat)
    C = _two_discrete(cat.objects, cat.arrows, cat.identity, cat.compose)
    return validate_two_category(C)


def is_two_groupoid(C: TwoCat):
    """True iff every 1-cell is strictly invertible and every 2-cell vertically invertible."""
    for f in C.one_cells:
        if C.inverse1(f) is None:
            return False
    for a in C.two_cells:
        if C.vertical_inverse(a) is None:
            return False
    return True
