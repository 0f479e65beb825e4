"""Finite category presentations: explicit arrow sets and a total composition table."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError, Violation


@dataclass(frozen=True)
class Category:
    """A finite category given extensionally.

    arrows   id -> (src object, tgt object)
    identity object -> its identity arrow
    compose  (f, g) with tgt(f) = src(g)  ->  "f then g" (i.e. g after f)
    """

    objects: tuple
    arrows: dict
    identity: dict
    compose: dict

    def src(self, f):
        return self.arrows[f][0]

    def tgt(self, f):
        return self.arrows[f][1]

    def then(self, f, g):
        return self.compose[(f, g)]

    def hom(self, a, b):
        return tuple(f for f in sorted(self.arrows) if self.arrows[f] == (a, b))

    def is_identity(self, f):
        return self.identity.get(self.src(f)) == f


def category_violations(cat):
    """All broken category axioms (references, totality, units, associativity)."""
    v = []
    objs = set(cat.objects)
    if len(cat.objects) != len(objs):
        v.append(Violation("duplicate identifier", (), "repeated object id"))
    for f, (a, b) in sorted(cat.arrows.items()):
        for x in (a, b):
            if x not in objs:
                v.append(Violation("dangling identifier", (f, x), "arrow endpoint is not an object"))
    if v:
        return v

    for a in cat.objects:
        e = cat.identity.get(a)
        if e is None:
            v.append(Violation("partial table", (a,), "object has no identity arrow"))
        elif e not in cat.arrows or cat.arrows[e] != (a, a):
            v.append(Violation("dangling identifier", (a, str(e)), "identity arrow is not an endo-arrow on its object"))
    extra = set(cat.identity) - objs
    for a in sorted(extra):
        v.append(Violation("dangling identifier", (a,), "identity table keyed by unknown object"))
    if v:
        return v

    composable = {(f, g) for f in cat.arrows for g in cat.arrows if cat.tgt(f) == cat.src(g)}
    for pair in sorted(composable - set(cat.compose)):
        v.append(Violation("partial table", pair, "composable pair missing from composition table"))
    for pair in sorted(set(cat.compose) - composable):
        v.append(Violation("spurious entry", pair, "composition table entry for a non-composable pair"))
    for (f, g), r in sorted(cat.compose.items()):
        if (f, g) not in composable:
            continue
        if r not in cat.arrows:
            v.append(Violation("dangling identifier", (f, g, str(r)), "composite is not a declared arrow"))
        elif cat.arrows[r] != (cat.src(f), cat.tgt(g)):
            v.append(Violation("closure", (f, g, r), "composite has wrong endpoints"))
    if v:
        return v

    for f in sorted(cat.arrows):
        a, b = cat.arrows[f]
        if cat.then(cat.identity[a], f) != f:
            v.append(Violation("unit law", (f,), "left identity does not act trivially"))
        if cat.then(f, cat.identity[b]) != f:
            v.append(Violation("unit law", (f,), "right identity does not act trivially"))
    for f in sorted(cat.arrows):
        for g in sorted(cat.arrows):
            if cat.tgt(f) != cat.src(g):
                continue
            for h in sorted(cat.arrows):
                if cat.tgt(g) != cat.src(h):
                    continue
                if cat.then(cat.then(f, g), h) != cat.then(f, cat.then(g, h)):
                    v.append(Violation("associativity", (f, g, h), "composition is not associative"))
    return v


def validate_category(cat):
    v = category_violations(cat)
    if v:
        raise ValidationError(v)
    return cat


def is_groupoid(cat):
    """True iff every arrow has a two-sided inverse under composition."""
    for f in cat.arrows:
        a, b = cat.arrows[f]
        if not any(
            cat.arrows[g] == (b, a)
            and cat.then(f, g) == cat.identity[a]
            and cat.then(g, f) == cat.identity[b]
            for g in cat.arrows
        ):
            return False
    return True


def poset_category(n):
    """The poset 0 <= 1 <= ... <= n as a category with one arrow per pair i <= j."""
    objects = tuple(str(i) for i in range(n + 1))
    arrows = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            arrows["%d>%d" % (i, j)] = (str(i), str(j))
    identity = {str(i): "%d>%d" % (i, i) for i in range(n + 1)}
    compose = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                compose[("%d>%d" % (i, j), "%d>%d" % (j, k))] = "%d>%d" % (i, k)
    return Category(objects=objects, arrows=arrows, identity=identity, compose=compose)


def terminal_category():
    return poset_category(0)
