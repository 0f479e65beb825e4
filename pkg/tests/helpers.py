"""Independent oracles used by the tests.

None of these go through the library's 2-category or nerve machinery; they
work straight on category presentations, arrow strings, and group tables, so
they can cross-check the main constructions.
"""

import itertools

from geomnerve import Category, FiniteGroup, Homotopy, SimplicialMap, classic_nerve


def enumerate_functors_cat(C: Category, D: Category):
    """All functors C -> D, as (object map, arrow map) pairs, brute force."""
    objs = sorted(C.objects)
    out = []
    for images in itertools.product(sorted(D.objects), repeat=len(objs)):
        F0 = dict(zip(objs, images))
        arrows = sorted(a for a in C.arrows if not C.is_identity(a))
        cands = []
        for a in arrows:
            s, t = C.arrows[a]
            cands.append([b for b in sorted(D.arrows) if D.arrows[b] == (F0[s], F0[t])])
        if any(not c for c in cands):
            continue
        for combo in itertools.product(*cands):
            F1 = dict(zip(arrows, combo))
            for x in objs:
                F1[C.identity[x]] = D.identity[F0[x]]
            if all(F1[C.then(f, g)] == D.then(F1[f], F1[g]) for (f, g) in C.compose):
                out.append((F0, F1))
    return out


def enumerate_natural_transformations(C: Category, D: Category, F, G):
    """All natural transformations between functors given as (F0, F1) pairs."""
    F0, F1 = F
    G0, G1 = G
    objs = sorted(C.objects)
    cands = [
        [a for a in sorted(D.arrows) if D.arrows[a] == (F0[x], G0[x])] for x in objs
    ]
    out = []
    for combo in itertools.product(*cands):
        alpha = dict(zip(objs, combo))
        if all(
            D.then(F1[f], alpha[C.tgt(f)]) == D.then(alpha[C.src(f)], G1[f])
            for f in C.arrows
        ):
            out.append(alpha)
    return out


def classic_to_geometric(cat: Category, ner):
    """The canonical level-wise renaming classic_nerve(cat) -> geometric nerve.

    ner is the GeometricNerve of the 2-discrete 2-category on cat.  Returns
    the four level dictionaries; levels 0 and 1 are identities on ids.
    """
    from geomnerve.nerve import Simplex2, Simplex3

    C = ner.two_cat

    def tri(a, b):
        return Simplex2(f=a, g=b, h=cat.then(a, b), interior=C.id2[cat.then(a, b)])

    X = classic_nerve(cat)
    lvl0 = {x: x for x in X.level(0)}
    lvl1 = {x: x for x in X.level(1)}
    lvl2 = {}
    strings2 = {}
    for x in X.level(2):
        a, b = x[1:-1].split(";")
        strings2[x] = (a, b)
        lvl2[x] = tri(a, b).key
    lvl3 = {}
    for x in X.level(3):
        a, b, c = x[1:-1].split(";")
        th = Simplex3(
            d0=tri(b, c),
            d1=tri(cat.then(a, b), c),
            d2=tri(a, cat.then(b, c)),
            d3=tri(a, b),
        )
        lvl3[x] = th.key
    return X, (lvl0, lvl1, lvl2, lvl3)


def classical_prism_homotopy(cat_dom: Category, cat_cod: Category, F, G, alpha, p, q):
    """The textbook homotopy of classic nerves induced by alpha: F => G.

    Components insert the alpha arrow after position i of the F-image prefix;
    the result goes from p = N(G) to q = N(F).
    """
    F0, F1 = F
    G0, G1 = G
    X = p.dom

    def string_of(n, x):
        if n == 1:
            return (x,)
        return tuple(x[1:-1].split(";"))

    def sid(s):
        if len(s) == 1:
            return s[0]
        return "[%s]" % ";".join(s)

    comp = {}
    comp[(0, 0)] = {v: alpha[v] for v in X.level(0)}
    for n in (1, 2):
        for i in range(n + 1):
            table = {}
            for x in X.level(n):
                s = string_of(n, x)
                at = cat_dom.src(s[i]) if i < n else cat_dom.tgt(s[-1])
                image = (
                    tuple(F1[a] for a in s[:i])
                    + (alpha[at],)
                    + tuple(G1[a] for a in s[i:])
                )
                table[x] = sid(image)
            comp[(n, i)] = table
    return Homotopy(src=p, tgt=q, components=comp)


def abelian_h2_size(G: FiniteGroup, K: FiniteGroup, action):
    """|H^2(G, K)| for abelian K with a left action, by brute force.

    action maps each g in G to a dict K -> K.  Cocycles are normalised maps
    f: G x G -> K with  a_g f(h,k) - f(gh,k) + f(g,hk) - f(g,h) = 0; the
    coboundaries come from normalised c: G -> K.
    """
    elems = sorted(G.elements)
    non_unit = [g for g in elems if g != G.unit]
    pairs = [(g, h) for g in non_unit for h in non_unit]

    def add(x, y):
        return K.times(x, y)

    def neg(x):
        return K.inv[x]

    def value(f, g, h):
        if g == G.unit or h == G.unit:
            return K.unit
        return f[(g, h)]

    cocycles = []
    for combo in itertools.product(sorted(K.elements), repeat=len(pairs)):
        f = dict(zip(pairs, combo))
        if all(
            add(
                add(action[g][value(f, h, k)], value(f, g, G.times(h, k))),
                add(neg(value(f, G.times(g, h), k)), neg(value(f, g, h))),
            )
            == K.unit
            for g in elems
            for h in elems
            for k in elems
        ):
            cocycles.append(tuple(value(f, g, h) for g in elems for h in elems))

    coboundaries = set()
    for combo in itertools.product(sorted(K.elements), repeat=len(non_unit)):
        c = dict(zip(non_unit, combo))
        c[G.unit] = K.unit
        cob = tuple(
            add(add(action[g][c[h]], neg(c[G.times(g, h)])), c[g])
            for g in elems
            for h in elems
        )
        coboundaries.add(cob)

    classes = set()
    for z in cocycles:
        shifted = frozenset(
            tuple(add(z[i], b[i]) for i in range(len(z))) for b in coboundaries
        )
        classes.add(shifted)
    return len(classes)
