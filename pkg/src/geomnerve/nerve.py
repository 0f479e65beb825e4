"""The geometric nerve of a strict 2-category and its action on lax functors,
lax transformations and homotopies.

Simplex conventions:

- A 2-simplex on vertices A0, A1, A2 is a triangle (g, h, f; interior) with
  edges f: A0->A1, g: A1->A2, h: A0->A2 and a 2-cell interior: h => g∘f.
  Faces are the edges opposite the vertex: d0 = g, d1 = h, d2 = f.
- A 3-simplex is a tetrahedron given by its four triangle faces
  (d0, d1, d2, d3) = (right, front, left, lower) with interiors
  (rho, phi, lam, beta); it exists in the nerve exactly when the square

        k --phi--> m∘h
        |           |
       lam        m∗beta
        |           |
        v           v
       l∘f -rho∗f-> m∘g∘f

  of 2-cells commutes.
- Degeneracies insert identity edges with identity interiors, so the nerve of
  a normal lax-functor image is again simplicial.

Simplex ids are canonical: a 2-simplex is "[d0;d1;d2;interior]" over the cell
ids and a 3-simplex is the bracket of its four face ids, so equality of
nerves and of simplicial maps is plain string comparison.  Cell identifiers
must therefore avoid the characters '[', ']' and ';'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laxfun import (
    LaxFunctor,
    LaxTransformation,
    validate_lax_functor,
    validate_lax_transformation,
)
from .simpl import Homotopy, SimplicialMap, TruncSSet
from .twocat import TwoCat, is_two_groupoid


@dataclass(frozen=True)
class Simplex2:
    """Triangle (g, h, f; interior) with interior: h => g∘f."""

    f: str
    g: str
    h: str
    interior: str

    @property
    def key(self):
        return "[%s;%s;%s;%s]" % (self.g, self.h, self.f, self.interior)

    def face(self, i):
        return (self.g, self.h, self.f)[i]


@dataclass(frozen=True)
class Simplex3:
    """Commutative tetrahedron by its four triangle faces (right, front, left, lower)."""

    d0: Simplex2
    d1: Simplex2
    d2: Simplex2
    d3: Simplex2

    @property
    def key(self):
        return "[%s;%s;%s;%s]" % (self.d0.key, self.d1.key, self.d2.key, self.d3.key)

    def face(self, i):
        return (self.d0, self.d1, self.d2, self.d3)[i]


def _check_simplex2(C: TwoCat, t: Simplex2):
    if C.tgt1(t.f) != C.src1(t.g):
        raise ValueError("edges %s and %s are not composable" % (t.f, t.g))
    if C.one_cells[t.h] != (C.src1(t.f), C.tgt1(t.g)):
        raise ValueError("long edge %s has wrong endpoints" % t.h)
    if C.two_cells[t.interior] != (t.h, C.compose1(t.f, t.g)):
        raise ValueError("interior %s is not a 2-cell %s => %s∘%s" % (t.interior, t.h, t.g, t.f))


def _tetra_edges(d0, d1, d2, d3):
    """Shared-edge incidence of a tetrahedron; raises on mismatch."""
    checks = [
        ("f", d2.f, d3.f),
        ("g", d0.f, d3.g),
        ("m", d0.g, d1.g),
        ("h", d1.f, d3.h),
        ("l", d0.h, d2.g),
        ("k", d1.h, d2.h),
    ]
    edges = {}
    for name, a, b in checks:
        if a != b:
            raise ValueError("tetrahedron incidence mismatch on edge %s: %s != %s" % (name, a, b))
        edges[name] = a
    return edges


def tetrahedron_commutes(d0: Simplex2, d1: Simplex2, d2: Simplex2, d3: Simplex2, C: TwoCat):
    """Whether m∗beta · phi equals rho∗f · lam for the tetrahedron with these faces."""
    for t in (d0, d1, d2, d3):
        _check_simplex2(C, t)
    edges = _tetra_edges(d0, d1, d2, d3)
    lhs = C.vert(d1.interior, C.whisker_left(edges["m"], d3.interior))
    rhs = C.vert(d2.interior, C.whisker_right(d0.interior, edges["f"]))
    return lhs == rhs


class GeometricNerve:
    """The 3-truncated geometric nerve of a 2-category with its simplex registry."""

    def __init__(self, C: TwoCat):
        self.two_cat = C
        self.two_simplices = {}
        self.three_simplices = {}
        self.sset = self._build()

    # -- simplex constructors ---------------------------------------------

    def degen1(self, i, e):
        """s_i of an edge: identity edge inserted at vertex i, identity interior."""
        C = self.two_cat
        if i == 0:
            return Simplex2(f=C.id1[C.src1(e)], g=e, h=e, interior=C.id2[e])
        return Simplex2(f=e, g=C.id1[C.tgt1(e)], h=e, interior=C.id2[e])

    def degen2(self, i, t: Simplex2):
        if i == 0:
            return Simplex3(d0=t, d1=t, d2=self.degen1(0, t.h), d3=self.degen1(0, t.f))
        if i == 1:
            return Simplex3(d0=self.degen1(0, t.g), d1=t, d2=t, d3=self.degen1(1, t.f))
        return Simplex3(d0=self.degen1(1, t.g), d1=self.degen1(1, t.h), d2=t, d3=t)

    # -- construction -------------------------------------------------------

    def _build(self):
        C = self.two_cat
        for f in sorted(C.one_cells):
            for g in sorted(C.one_cells):
                if C.tgt1(f) != C.src1(g):
                    continue
                gf = C.compose1(f, g)
                for h in C.hom1(C.src1(f), C.tgt1(g)):
                    for interior in C.two_cells_between(h, gf):
                        t = Simplex2(f=f, g=g, h=h, interior=interior)
                        self.two_simplices[t.key] = t

        by_f = {}
        by_fg = {}
        by_fgh = {}
        for t in self.two_simplices.values():
            by_f.setdefault(t.f, []).append(t)
            by_fg.setdefault((t.f, t.g), []).append(t)
            by_fgh.setdefault((t.f, t.g, t.h), []).append(t)

        for d3 in self.two_simplices.values():
            for d0 in by_f.get(d3.g, ()):
                for d2 in by_fg.get((d3.f, d0.h), ()):
                    for d1 in by_fgh.get((d3.h, d0.g, d2.h), ()):
                        lhs = C.vert(d1.interior, C.whisker_left(d0.g, d3.interior))
                        rhs = C.vert(d2.interior, C.whisker_right(d0.interior, d3.f))
                        if lhs == rhs:
                            th = Simplex3(d0=d0, d1=d1, d2=d2, d3=d3)
                            self.three_simplices[th.key] = th

        simplices = (
            tuple(sorted(C.objects)),
            tuple(sorted(C.one_cells)),
            tuple(sorted(self.two_simplices)),
            tuple(sorted(self.three_simplices)),
        )
        if len(set(simplices[2])) != len(self.two_simplices) or any(
            "[" in x or "]" in x or ";" in x for x in list(C.objects) + list(C.one_cells) + list(C.two_cells)
        ):
            raise ValueError("cell identifiers must not contain '[', ']' or ';'")

        faces = {
            (1, 0): {e: C.tgt1(e) for e in C.one_cells},
            (1, 1): {e: C.src1(e) for e in C.one_cells},
        }
        for i in range(3):
            faces[(2, i)] = {k: t.face(i) for k, t in self.two_simplices.items()}
        for i in range(4):
            faces[(3, i)] = {k: th.face(i).key for k, th in self.three_simplices.items()}

        degens = {(0, 0): {a: C.id1[a] for a in C.objects}}
        for i in range(2):
            degens[(1, i)] = {e: self.degen1(i, e).key for e in C.one_cells}
        for i in range(3):
            degens[(2, i)] = {k: self.degen2(i, t).key for k, t in self.two_simplices.items()}

        return TruncSSet(simplices=simplices, faces=faces, degens=degens, coskeletal=True)


def geometric_nerve(C: TwoCat):
    return GeometricNerve(C)


def nerve_of_two_category(C: TwoCat):
    """The geometric nerve as a 3-truncated, coskeletal simplicial set."""
    return geometric_nerve(C).sset


def _image_two_simplex(F: LaxFunctor, t: Simplex2):
    """Image triangle under a lax functor: interior is sigma after the 2-cell image."""
    D = F.cod
    return Simplex2(
        f=F.F1[t.f],
        g=F.F1[t.g],
        h=F.F1[t.h],
        interior=D.vert(F.F2[t.interior], F.sigma[(t.f, t.g)]),
    )


def nerve_of_lax_functor(F: LaxFunctor):
    """The simplicial map induced by a lax functor between the geometric nerves."""
    ner_dom = geometric_nerve(F.dom)
    ner_cod = geometric_nerve(F.cod)
    level0 = {a: F.F0[a] for a in F.dom.objects}
    level1 = {f: F.F1[f] for f in F.dom.one_cells}
    level2 = {}
    for k, t in ner_dom.two_simplices.items():
        image = _image_two_simplex(F, t)
        if image.key not in ner_cod.two_simplices:
            raise ValueError("image triangle %s is not a 2-simplex of the codomain nerve" % image.key)
        level2[k] = image.key
    level3 = {}
    for k, th in ner_dom.three_simplices.items():
        # determined by its faces; the image bounds because the functor is coherent
        key = "[%s;%s;%s;%s]" % tuple(level2[th.face(i).key] for i in range(4))
        if key not in ner_cod.three_simplices:
            raise ValueError("image tetrahedron of %s does not commute in the codomain" % k)
        level3[k] = key
    return SimplicialMap(dom=ner_dom.sset, cod=ner_cod.sset, levels=(level0, level1, level2, level3))


def reconstruct_lax_functor(phi: SimplicialMap, C: TwoCat, D: TwoCat):
    """The unique lax functor whose nerve is the given simplicial map.

    Reads only levels <= 2: objects and 1-cells from the vertex and edge
    parts, each 2-cell image from the triangle (id, h, f; a) and each
    structure 2-cell from the triangle (g, g∘f, f; id).  Level-3 data of the
    map is exercised separately when the result is validated and re-nerved.
    """
    ner_dom = geometric_nerve(C)
    ner_cod = geometric_nerve(D)
    if phi.dom != ner_dom.sset or phi.cod != ner_cod.sset:
        raise ValueError("map is not between the nerves of the given 2-categories")

    F0 = {a: phi.levels[0][a] for a in C.objects}
    F1 = {f: phi.levels[1][f] for f in C.one_cells}
    F2 = {}
    for x in sorted(C.two_cells):
        h, fcell = C.two_cells[x]
        a1 = C.tgt1(fcell)
        tri = Simplex2(f=fcell, g=C.id1[a1], h=h, interior=x)
        F2[x] = ner_cod.two_simplices[phi.levels[2][tri.key]].interior
    sigma = {}
    for (f, g) in sorted(C.comp1):
        gf = C.compose1(f, g)
        tri = Simplex2(f=f, g=g, h=gf, interior=C.id2[gf])
        sigma[(f, g)] = ner_cod.two_simplices[phi.levels[2][tri.key]].interior
    F = LaxFunctor(dom=C, cod=D, F0=F0, F1=F1, F2=F2, sigma=sigma)
    return validate_lax_functor(C, D, F)


def nerve_of_transformation(t: LaxTransformation):
    """The homotopy induced by a lax transformation.

    A transformation t: F -> G (components F(A) -> G(A)) yields a homotopy
    from ner(G) to ner(F); the level-0 components are the 1-cell components,
    level 1 pairs the structure 2-cells with identity triangles over the
    composite edges, and level 2 is determined by the boundaries assembled
    from the homotopy identities.
    """
    F, G = t.src, t.tgt
    C, D = F.dom, F.cod
    p = nerve_of_lax_functor(G)
    q = nerve_of_lax_functor(F)
    ner_dom = geometric_nerve(C)
    ner_cod = geometric_nerve(D)

    alpha = t.components

    def long_edge(f):
        # the diagonal F(src f) -> G(tgt f) used by both level-1 triangles
        return D.compose1(F.F1[f], alpha[C.tgt1(f)])

    h10 = {}
    h11 = {}
    for f in C.one_cells:
        a, b = C.one_cells[f]
        d = long_edge(f)
        h10[f] = Simplex2(f=alpha[a], g=G.F1[f], h=d, interior=t.structure[f])
        h11[f] = Simplex2(f=F.F1[f], g=alpha[b], h=d, interior=D.id2[d])

    comp = {
        (0, 0): {a: alpha[a] for a in C.objects},
        (1, 0): {f: h10[f].key for f in C.one_cells},
        (1, 1): {f: h11[f].key for f in C.one_cells},
        (2, 0): {},
        (2, 1): {},
        (2, 2): {},
    }

    for k, tri in ner_dom.two_simplices.items():
        a2 = C.tgt1(tri.g)
        q_tri = _image_two_simplex(F, tri)  # the ner(F) image
        p_tri = _image_two_simplex(G, tri)  # the ner(G) image
        dg = long_edge(tri.g)
        dh = long_edge(tri.h)
        df = long_edge(tri.f)
        lam = D.whisker_left(alpha[a2], q_tri.interior)
        e2 = Simplex2(f=F.F1[tri.f], g=dg, h=dh, interior=lam)
        phi = D.vert(lam, D.whisker_right(t.structure[tri.g], F.F1[tri.f]))
        e1 = Simplex2(f=df, g=G.F1[tri.g], h=dh, interior=phi)
        tetras = (
            Simplex3(d0=p_tri, d1=e1, d2=h10[tri.h], d3=h10[tri.f]),
            Simplex3(d0=h10[tri.g], d1=e1, d2=e2, d3=h11[tri.f]),
            Simplex3(d0=h11[tri.g], d1=h11[tri.h], d2=e2, d3=q_tri),
        )
        for j, th in enumerate(tetras):
            if th.key not in ner_cod.three_simplices:
                raise ValueError("level-2 component over %s does not bound (face %d)" % (k, j))
            comp[(2, j)][k] = th.key

    return Homotopy(src=p, tgt=q, components=comp)


def transformation_from_homotopy(h: Homotopy, F: LaxFunctor, G: LaxFunctor):
    """The lax transformation G -> F read off a homotopy from ner(F) to ner(G).

    Needs the codomain to be a 2-groupoid: the structure 2-cell is
    s(f) = interior(h_0^1 f) · interior(h_1^1 f)^{-1}.
    """
    D = F.cod
    if not is_two_groupoid(D):
        raise ValueError("codomain is not a 2-groupoid; vertical inverses are unavailable")
    p = nerve_of_lax_functor(F)
    q = nerve_of_lax_functor(G)
    if h.src != p or h.tgt != q:
        raise ValueError("homotopy is not between the nerves of the given functors")
    ner_cod = geometric_nerve(D)

    components = {a: h.components[(0, 0)][a] for a in F.dom.objects}
    structure = {}
    for f in F.dom.one_cells:
        t0 = ner_cod.two_simplices[h.components[(1, 0)][f]]
        t1 = ner_cod.two_simplices[h.components[(1, 1)][f]]
        inv = D.vertical_inverse(t1.interior)
        structure[f] = D.vert(inv, t0.interior)
    t = LaxTransformation(src=G, tgt=F, components=components, structure=structure)
    return validate_lax_transformation(G, F, t)
