"""3-truncated simplicial sets, simplicial maps, and combinatorial homotopies.

Everything is stored up to dimension 3.  A set with the `coskeletal` flag
declares its simplices above dimension 3 to be exactly the compatible
boundary families, so nothing above the truncation is ever materialised;
induced data is reassembled on demand from the face identities.

Homotopy convention: a homotopy from a simplicial map p to a simplicial map q
consists of components h_i^n: X_n -> Y_{n+1} (0 <= i <= n <= 2) subject to

    d_0 h_0^n = p_n                      d_{n+1} h_n^n = q_n
    d_i h_j^n = h_{j-1}^{n-1} d_i        (i < j)
    d_{j+1} h_{j+1}^n = d_{j+1} h_j^n
    d_i h_j^n = h_j^{n-1} d_{i-1}        (i > j + 1)
    s_i h_j^n = h_{j+1}^{n+1} s_i        (i <= j)
    s_i h_j^n = h_j^{n+1} s_{i-1}        (i > j)

checked wherever both sides land in dimension <= 3.  Into a coskeletal
target the level-3 components are determined by these identities; their
three underdetermined faces are assembled from the stored data and must
each bound an actual 3-simplex of the target.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cat import Category, validate_category
from .errors import SearchBudget, ValidationError, Violation
from .partition import partition_from_edges


@dataclass(frozen=True)
class TruncSSet:
    """Simplex sets S0..S3 with total face and degeneracy tables on the truncation.

    simplices  four sorted id tuples, one per level
    faces      (n, i) -> {id in S_n: id in S_{n-1}}   for 1 <= n <= 3, 0 <= i <= n
    degens     (n, i) -> {id in S_n: id in S_{n+1}}   for 0 <= n <= 2, 0 <= i <= n
    """

    simplices: tuple
    faces: dict
    degens: dict
    coskeletal: bool

    def level(self, n):
        return self.simplices[n]

    def face(self, n, i, x):
        return self.faces[(n, i)][x]

    def degen(self, n, i, x):
        return self.degens[(n, i)][x]

    def degenerate(self, n):
        """Ids in S_n that are degeneracies of lower simplices."""
        if n == 0:
            return frozenset()
        out = set()
        for i in range(n):
            out.update(self.degens[(n - 1, i)].values())
        return frozenset(out)

    def nondegenerate(self, n):
        degen = self.degenerate(n)
        return tuple(x for x in self.simplices[n] if x not in degen)

    def degeneracy_source(self, n, x):
        """Some (i, w) with s_i(w) = x, for a degenerate x in S_n."""
        for i in range(n):
            for w, y in self.degens[(n - 1, i)].items():
                if y == x:
                    return i, w
        raise KeyError(x)

    def boundary(self, n, x):
        return tuple(self.face(n, i, x) for i in range(n + 1))

    def filler_index(self):
        """Boundary 4-tuple of level-2 ids -> sorted tuple of bounding 3-simplices."""
        index = {}
        for y in self.simplices[3]:
            index.setdefault(self.boundary(3, y), []).append(y)
        return {k: tuple(sorted(v)) for k, v in index.items()}


# -- validation ----------------------------------------------------------------


def trunc_sset_violations(X: TruncSSet):
    v = []
    levels = [set(X.simplices[n]) for n in range(4)]
    for n in range(4):
        if len(X.simplices[n]) != len(levels[n]):
            v.append(Violation("duplicate identifier", (str(n),), "repeated simplex id at level %d" % n))

    for n in range(1, 4):
        for i in range(n + 1):
            table = X.faces.get((n, i))
            if table is None:
                v.append(Violation("partial table", (str(n), str(i)), "missing face table d_%d at level %d" % (i, n)))
                continue
            for x in X.simplices[n]:
                if x not in table:
                    v.append(Violation("partial table", (x,), "d_%d undefined on a level-%d simplex" % (i, n)))
                elif table[x] not in levels[n - 1]:
                    v.append(Violation("dangling simplex reference", (x, table[x]), "face lands outside level %d" % (n - 1)))
    for n in range(3):
        for i in range(n + 1):
            table = X.degens.get((n, i))
            if table is None:
                v.append(Violation("partial table", (str(n), str(i)), "missing degeneracy table s_%d at level %d" % (i, n)))
                continue
            for x in X.simplices[n]:
                if x not in table:
                    v.append(Violation("partial table", (x,), "s_%d undefined on a level-%d simplex" % (i, n)))
                elif table[x] not in levels[n + 1]:
                    v.append(Violation("dangling simplex reference", (x, table[x]), "degeneracy lands outside level %d" % (n + 1)))
    if v:
        return v

    # d_i d_j = d_{j-1} d_i (i < j)
    for n in range(2, 4):
        for j in range(n + 1):
            for i in range(j):
                for x in X.simplices[n]:
                    if X.face(n - 1, i, X.face(n, j, x)) != X.face(n - 1, j - 1, X.face(n, i, x)):
                        v.append(Violation("simplicial identity", (x,), "d_%d d_%d != d_%d d_%d at level %d" % (i, j, j - 1, i, n)))
    # face/degeneracy relations
    for n in range(3):
        for j in range(n + 1):
            for i in range(n + 2):
                for x in X.simplices[n]:
                    lhs = X.face(n + 1, i, X.degen(n, j, x))
                    if i < j:
                        rhs = X.degen(n - 1, j - 1, X.face(n, i, x))
                        tag = "d_%d s_%d != s_%d d_%d" % (i, j, j - 1, i)
                    elif i in (j, j + 1):
                        rhs = x
                        tag = "d_%d s_%d != id" % (i, j)
                    else:
                        rhs = X.degen(n - 1, j, X.face(n, i - 1, x))
                        tag = "d_%d s_%d != s_%d d_%d" % (i, j, j, i - 1)
                    if lhs != rhs:
                        v.append(Violation("simplicial identity", (x,), tag + " at level %d" % n))
    # s_i s_j = s_{j+1} s_i (i <= j)
    for n in range(2):
        for j in range(n + 1):
            for i in range(j + 1):
                for x in X.simplices[n]:
                    if X.degen(n + 1, i, X.degen(n, j, x)) != X.degen(n + 1, j + 1, X.degen(n, i, x)):
                        v.append(Violation("simplicial identity", (x,), "s_%d s_%d != s_%d s_%d at level %d" % (i, j, j + 1, i, n)))
    return v


def validate_trunc_sset(X: TruncSSet):
    v = trunc_sset_violations(X)
    if v:
        raise ValidationError(v)
    return X


# -- simplicial maps -------------------------------------------------------------


@dataclass(frozen=True)
class SimplicialMap:
    dom: TruncSSet
    cod: TruncSSet
    levels: tuple  # four dicts, S_n(dom) -> S_n(cod)

    def apply(self, n, x):
        return self.levels[n][x]

    def key(self):
        return tuple(tuple(sorted(lvl.items())) for lvl in self.levels)


def simplicial_map_violations(X: TruncSSet, Y: TruncSSet, phi: SimplicialMap):
    v = []
    ylevels = [set(Y.simplices[n]) for n in range(4)]
    for n in range(4):
        for x in X.simplices[n]:
            y = phi.levels[n].get(x)
            if y is None:
                v.append(Violation("partial table", (x,), "no image at level %d" % n))
            elif y not in ylevels[n]:
                v.append(Violation("dangling simplex reference", (x, y), "image is not a level-%d simplex" % n))
    if v:
        return v
    for n in range(1, 4):
        for i in range(n + 1):
            for x in X.simplices[n]:
                if Y.face(n, i, phi.levels[n][x]) != phi.levels[n - 1][X.face(n, i, x)]:
                    v.append(Violation("naturality", (x,), "does not commute with d_%d at level %d" % (i, n)))
    for n in range(3):
        for i in range(n + 1):
            for x in X.simplices[n]:
                if Y.degen(n, i, phi.levels[n][x]) != phi.levels[n + 1][X.degen(n, i, x)]:
                    v.append(Violation("naturality", (x,), "does not commute with s_%d at level %d" % (i, n)))
    return v


def validate_simplicial_map(X: TruncSSet, Y: TruncSSet, phi: SimplicialMap):
    v = simplicial_map_violations(X, Y, phi)
    if v:
        raise ValidationError(v)
    return phi


def identity_map(X: TruncSSet):
    return SimplicialMap(dom=X, cod=X, levels=tuple({x: x for x in X.simplices[n]} for n in range(4)))


def compose_maps(phi: SimplicialMap, psi: SimplicialMap):
    """The composite "phi then psi"."""
    if psi.dom != phi.cod:
        raise ValueError("maps are not composable")
    return SimplicialMap(
        dom=phi.dom,
        cod=psi.cod,
        levels=tuple({x: psi.levels[n][phi.levels[n][x]] for x in phi.dom.simplices[n]} for n in range(4)),
    )


def enumerate_simplicial_maps(X: TruncSSet, Y: TruncSSet, max_branches=None):
    """All simplicial maps X -> Y, canonical order; Y must be coskeletal.

    Searches levels 0..2 over non-degenerate simplices with face and
    degeneracy pruning, then fills level 3 through the boundary index of Y.
    """
    if not Y.coskeletal:
        raise ValueError("enumeration requires a coskeletal codomain (level-3 images determined by boundaries)")
    budget = SearchBudget.create(max_branches)
    fillers = Y.filler_index()

    by_edge = {}
    for e in Y.simplices[1]:
        by_edge.setdefault((Y.face(1, 0, e), Y.face(1, 1, e)), []).append(e)
    by_tri = {}
    for t in Y.simplices[2]:
        by_tri.setdefault(Y.boundary(2, t), []).append(t)

    nd = [X.nondegenerate(n) for n in range(4)]

    def extend_level(phi_prev, n, assign_nd):
        """Total level-n mapping from the level-(n-1) mapping and the non-degenerate choices."""
        out = dict(assign_nd)
        for x in X.simplices[n]:
            if x in out:
                continue
            i, w = X.degeneracy_source(n, x)
            out[x] = Y.degen(n - 1, i, phi_prev[w])
        return out

    results = []

    def level3_choices(phi2):
        per = []
        for x in nd[3]:
            want = tuple(phi2[X.face(3, i, x)] for i in range(4))
            cands = fillers.get(want, ())
            if not cands:
                return None
            per.append((x, cands))
        return per

    for combo0 in itertools.product(sorted(Y.simplices[0]), repeat=len(nd[0])):
        budget.spend()
        phi0 = dict(zip(nd[0], combo0))
        cands1 = []
        for e in nd[1]:
            want = (phi0[X.face(1, 0, e)], phi0[X.face(1, 1, e)])
            cands1.append(by_edge.get(want, []))
        if any(not c for c in cands1):
            continue
        for combo1 in itertools.product(*cands1):
            budget.spend()
            phi1 = extend_level(phi0, 1, dict(zip(nd[1], combo1)))
            cands2 = []
            for t in nd[2]:
                want = tuple(phi1[X.face(2, i, t)] for i in range(3))
                cands2.append(by_tri.get(want, []))
            if any(not c for c in cands2):
                continue
            for combo2 in itertools.product(*cands2):
                budget.spend()
                phi2 = extend_level(phi1, 2, dict(zip(nd[2], combo2)))
                per3 = level3_choices(phi2)
                if per3 is None:
                    continue
                for combo3 in itertools.product(*(c for _, c in per3)):
                    budget.spend()
                    phi3 = extend_level(phi2, 3, dict(zip((x for x, _ in per3), combo3)))
                    phi = SimplicialMap(dom=X, cod=Y, levels=(phi0, phi1, phi2, phi3))
                    if not simplicial_map_violations(X, Y, phi):
                        results.append(phi)
    results.sort(key=lambda m: m.key())
    return tuple(results)


# -- homotopies -----------------------------------------------------------------


@dataclass(frozen=True)
class Homotopy:
    """A homotopy from the map src to the map tgt, stored on the 2-truncation."""

    src: SimplicialMap
    tgt: SimplicialMap
    components: dict  # (n, i) -> {id in X_n: id in Y_{n+1}}

    def component(self, n, i, x):
        return self.components[(n, i)][x]

    def key(self):
        return tuple((k, tuple(sorted(tbl.items()))) for k, tbl in sorted(self.components.items()))


def _homotopy_face_checks(X, Y, p, q, comp):
    """(description, level, simplex, lhs, rhs) for every face identity instance."""
    h = comp
    out = []
    for a in X.simplices[0]:
        e = h[(0, 0)][a]
        out.append(("d_0 h_0^0 = p_0", 0, a, Y.face(1, 0, e), p[0][a]))
        out.append(("d_1 h_0^0 = q_0", 0, a, Y.face(1, 1, e), q[0][a]))
    for f in X.simplices[1]:
        t0, t1 = h[(1, 0)][f], h[(1, 1)][f]
        out.append(("d_0 h_0^1 = p_1", 1, f, Y.face(2, 0, t0), p[1][f]))
        out.append(("d_2 h_0^1 = h_0^0 d_1", 1, f, Y.face(2, 2, t0), h[(0, 0)][X.face(1, 1, f)]))
        out.append(("d_1 h_1^1 = d_1 h_0^1", 1, f, Y.face(2, 1, t1), Y.face(2, 1, t0)))
        out.append(("d_0 h_1^1 = h_0^0 d_0", 1, f, Y.face(2, 0, t1), h[(0, 0)][X.face(1, 0, f)]))
        out.append(("d_2 h_1^1 = q_1", 1, f, Y.face(2, 2, t1), q[1][f]))
    for x in X.simplices[2]:
        y0, y1, y2 = h[(2, 0)][x], h[(2, 1)][x], h[(2, 2)][x]
        out.append(("d_0 h_0^2 = p_2", 2, x, Y.face(3, 0, y0), p[2][x]))
        out.append(("d_2 h_0^2 = h_0^1 d_1", 2, x, Y.face(3, 2, y0), h[(1, 0)][X.face(2, 1, x)]))
        out.append(("d_3 h_0^2 = h_0^1 d_2", 2, x, Y.face(3, 3, y0), h[(1, 0)][X.face(2, 2, x)]))
        out.append(("d_1 h_1^2 = d_1 h_0^2", 2, x, Y.face(3, 1, y1), Y.face(3, 1, y0)))
        out.append(("d_0 h_1^2 = h_0^1 d_0", 2, x, Y.face(3, 0, y1), h[(1, 0)][X.face(2, 0, x)]))
        out.append(("d_3 h_1^2 = h_1^1 d_2", 2, x, Y.face(3, 3, y1), h[(1, 1)][X.face(2, 2, x)]))
        out.append(("d_2 h_2^2 = d_2 h_1^2", 2, x, Y.face(3, 2, y2), Y.face(3, 2, y1)))
        out.append(("d_0 h_2^2 = h_1^1 d_0", 2, x, Y.face(3, 0, y2), h[(1, 1)][X.face(2, 0, x)]))
        out.append(("d_1 h_2^2 = h_1^1 d_1", 2, x, Y.face(3, 1, y2), h[(1, 1)][X.face(2, 1, x)]))
        out.append(("d_3 h_2^2 = q_2", 2, x, Y.face(3, 3, y2), q[2][x]))
    return out


def _homotopy_degen_checks(X, Y, comp):
    h = comp
    out = []
    for a in X.simplices[0]:
        e = h[(0, 0)][a]
        out.append(("s_0 h_0^0 = h_1^1 s_0", 0, a, Y.degen(1, 0, e), h[(1, 1)][X.degen(0, 0, a)]))
        out.append(("s_1 h_0^0 = h_0^1 s_0", 0, a, Y.degen(1, 1, e), h[(1, 0)][X.degen(0, 0, a)]))
    for f in X.simplices[1]:
        t0, t1 = h[(1, 0)][f], h[(1, 1)][f]
        out.append(("s_0 h_0^1 = h_1^2 s_0", 1, f, Y.degen(2, 0, t0), h[(2, 1)][X.degen(1, 0, f)]))
        out.append(("s_1 h_0^1 = h_0^2 s_0", 1, f, Y.degen(2, 1, t0), h[(2, 0)][X.degen(1, 0, f)]))
        out.append(("s_2 h_0^1 = h_0^2 s_1", 1, f, Y.degen(2, 2, t0), h[(2, 0)][X.degen(1, 1, f)]))
        out.append(("s_0 h_1^1 = h_2^2 s_0", 1, f, Y.degen(2, 0, t1), h[(2, 2)][X.degen(1, 0, f)]))
        out.append(("s_1 h_1^1 = h_2^2 s_1", 1, f, Y.degen(2, 1, t1), h[(2, 2)][X.degen(1, 1, f)]))
        out.append(("s_2 h_1^1 = h_1^2 s_1", 1, f, Y.degen(2, 2, t1), h[(2, 1)][X.degen(1, 1, f)]))
    return out


def _induced_level3_boundaries(X, p, q, comp, x):
    """The three underdetermined faces of the level-3 components over x in X_3.

    Each is a candidate 3-simplex boundary of the codomain, written as its
    4-tuple of level-2 faces; with e1 = d_1 h_0^2 and e2 = d_2 h_1^2 they are

        u1 = (p_2 d_0,  e1 d_1,  e1 d_2,  e1 d_3)
        u2 = (e1 d_0,   e1 d_1,  e2 d_2,  e2 d_3)
        u3 = (e2 d_0,   e2 d_1,  e2 d_2,  q_2 d_3)
    """
    Y = p.cod

    def e1(w):
        return Y.face(3, 1, comp[(2, 0)][w])

    def e2(w):
        return Y.face(3, 2, comp[(2, 1)][w])

    d = [X.face(3, i, x) for i in range(4)]
    u1 = (p.levels[2][d[0]], e1(d[1]), e1(d[2]), e1(d[3]))
    u2 = (e1(d[0]), e1(d[1]), e2(d[2]), e2(d[3]))
    u3 = (e2(d[0]), e2(d[1]), e2(d[2]), q.levels[2][d[3]])
    return u1, u2, u3


def homotopy_violations(p: SimplicialMap, q: SimplicialMap, h: Homotopy):
    if p.dom != q.dom or p.cod != q.cod:
        return [Violation("parallelism", (), "maps are not parallel")]
    X, Y = p.dom, p.cod
    v = []
    for n in range(3):
        for i in range(n + 1):
            table = h.components.get((n, i))
            if table is None:
                v.append(Violation("partial table", (str(n), str(i)), "missing component h_%d^%d" % (i, n)))
                continue
            for x in X.simplices[n]:
                y = table.get(x)
                if y is None:
                    v.append(Violation("partial table", (x,), "h_%d^%d undefined" % (i, n)))
                elif y not in set(Y.simplices[n + 1]):
                    v.append(Violation("dangling simplex reference", (x, y), "component lands outside level %d" % (n + 1)))
    if v:
        return v

    for tag, n, x, lhs, rhs in _homotopy_face_checks(X, Y, p.levels, q.levels, h.components):
        if lhs != rhs:
            v.append(Violation("homotopy identity", (x,), "%s fails at level %d" % (tag, n)))
    for tag, n, x, lhs, rhs in _homotopy_degen_checks(X, Y, h.components):
        if lhs != rhs:
            v.append(Violation("homotopy identity", (x,), "%s fails at level %d" % (tag, n)))
    if v:
        return v

    if Y.coskeletal:
        fillers = Y.filler_index()
        for x in X.simplices[3]:
            for name, u in zip(("u1", "u2", "u3"), _induced_level3_boundaries(X, p, q, h.components, x)):
                if u not in fillers:
                    v.append(
                        Violation(
                            "unbounded level-3 component",
                            (x,) + u,
                            "induced face %s of the level-3 component does not bound a 3-simplex" % name,
                        )
                    )
    return v


def validate_homotopy(p: SimplicialMap, q: SimplicialMap, h: Homotopy):
    v = homotopy_violations(p, q, h)
    if v:
        raise ValidationError(v)
    return h


def constant_homotopy(p: SimplicialMap):
    """The homotopy from p to itself with components s_i ∘ p_n."""
    X, Y = p.dom, p.cod
    comp = {}
    for n in range(3):
        for i in range(n + 1):
            comp[(n, i)] = {x: Y.degen(n, i, p.levels[n][x]) for x in X.simplices[n]}
    return Homotopy(src=p, tgt=p, components=comp)


def enumerate_homotopies(p: SimplicialMap, q: SimplicialMap, max_branches=None):
    """Yield all homotopies from p to q, in canonical search order.

    Exhaustive backtracking over the non-degenerate component values, pruned
    by the face/degeneracy identities; every candidate is confirmed by
    homotopy_violations before being emitted.
    """
    if p.dom != q.dom or p.cod != q.cod:
        raise ValueError("maps must be parallel")
    budget = SearchBudget.create(max_branches)
    X, Y = p.dom, p.cod

    by_edge = {}
    for e in Y.simplices[1]:
        by_edge.setdefault((Y.face(1, 0, e), Y.face(1, 1, e)), []).append(e)
    by_tri_02 = {}
    by_tri = {}
    for t in Y.simplices[2]:
        b = Y.boundary(2, t)
        by_tri_02.setdefault((b[0], b[2]), []).append(t)
        by_tri.setdefault(b, []).append(t)
    tet_023 = {}
    tet_013 = {}
    tet_full = Y.filler_index()
    for y in Y.simplices[3]:
        b = Y.boundary(3, y)
        tet_023.setdefault((b[0], b[2], b[3]), []).append(y)
        tet_013.setdefault((b[0], b[1], b[3]), []).append(y)

    nd = [X.nondegenerate(n) for n in range(3)]

    h00_cands = {a: by_edge.get((p.levels[0][a], q.levels[0][a]), []) for a in nd[0]}

    def h00_products():
        keys = sorted(nd[0])
        if any(not h00_cands[a] for a in keys):
            return
        for combo in itertools.product(*(h00_cands[a] for a in keys)):
            budget.spend()
            yield dict(zip(keys, combo))

    for h00_nd in h00_products():
        comp = {(0, 0): dict(h00_nd)}
        # level 0 has no degenerate simplices
        comp[(1, 0)] = {}
        comp[(1, 1)] = {}
        for a in X.simplices[0]:
            sa = X.degen(0, 0, a)
            comp[(1, 1)][sa] = Y.degen(1, 0, comp[(0, 0)][a])
            comp[(1, 0)][sa] = Y.degen(1, 1, comp[(0, 0)][a])

        cands10 = {}
        ok = True
        for f in nd[1]:
            want = (p.levels[1][f], comp[(0, 0)][X.face(1, 1, f)])
            cands10[f] = by_tri_02.get(want, [])
            if not cands10[f]:
                ok = False
                break
        if not ok:
            continue

        keys1 = sorted(nd[1])
        for combo10 in itertools.product(*(cands10[f] for f in keys1)):
            budget.spend()
            h10 = dict(comp[(1, 0)])
            h10.update(zip(keys1, combo10))
            cands11 = {}
            ok = True
            for f in keys1:
                want = (comp[(0, 0)][X.face(1, 0, f)], Y.face(2, 1, h10[f]), q.levels[1][f])
                cands11[f] = by_tri.get(want, [])
                if not cands11[f]:
                    ok = False
                    break
            if not ok:
                continue
            for combo11 in itertools.product(*(cands11[f] for f in keys1)):
                budget.spend()
                h11 = dict(comp[(1, 1)])
                h11.update(zip(keys1, combo11))
                comp1 = {(0, 0): comp[(0, 0)], (1, 0): h10, (1, 1): h11}

                # forced level-2 values on degenerate 2-simplices
                h2 = {(2, 0): {}, (2, 1): {}, (2, 2): {}}
                for f in X.simplices[1]:
                    s0f, s1f = X.degen(1, 0, f), X.degen(1, 1, f)
                    h2[(2, 1)].setdefault(s0f, Y.degen(2, 0, h10[f]))
                    h2[(2, 0)].setdefault(s0f, Y.degen(2, 1, h10[f]))
                    h2[(2, 0)].setdefault(s1f, Y.degen(2, 2, h10[f]))
                    h2[(2, 2)].setdefault(s0f, Y.degen(2, 0, h11[f]))
                    h2[(2, 2)].setdefault(s1f, Y.degen(2, 1, h11[f]))
                    h2[(2, 1)].setdefault(s1f, Y.degen(2, 2, h11[f]))

                def search2(idx, tables):
                    budget.spend()
                    if idx == len(nd[2]):
                        comp_full = dict(comp1)
                        comp_full[(2, 0)] = tables[(2, 0)]
                        comp_full[(2, 1)] = tables[(2, 1)]
                        comp_full[(2, 2)] = tables[(2, 2)]
                        cand = Homotopy(src=p, tgt=q, components=comp_full)
                        if not homotopy_violations(p, q, cand):
                            yield cand
                        return
                    x = nd[2][idx]
                    want20 = (p.levels[2][x], h10[X.face(2, 1, x)], h10[X.face(2, 2, x)])
                    for y0 in tet_023.get(want20, ()):
                        want21 = (h10[X.face(2, 0, x)], Y.face(3, 1, y0), h11[X.face(2, 2, x)])
                        for y1 in tet_013.get(want21, ()):
                            want22 = (
                                h11[X.face(2, 0, x)],
                                h11[X.face(2, 1, x)],
                                Y.face(3, 2, y1),
                                q.levels[2][x],
                            )
                            for y2 in tet_full.get(want22, ()):
                                nxt = {
                                    (2, 0): dict(tables[(2, 0)], **{x: y0}),
                                    (2, 1): dict(tables[(2, 1)], **{x: y1}),
                                    (2, 2): dict(tables[(2, 2)], **{x: y2}),
                                }
                                yield from search2(idx + 1, nxt)

                yield from search2(0, h2)


def homotopy_exists(p: SimplicialMap, q: SimplicialMap, max_branches=None):
    """First homotopy from p to q, or None."""
    return next(enumerate_homotopies(p, q, max_branches=max_branches), None)


def homotopy_classes(X: TruncSSet, Y: TruncSSet, max_branches=None):
    """Homotopy classes of all simplicial maps X -> Y.

    The partition is the symmetric-transitive closure of one-step homotopy
    existence, since an elementary combinatorial homotopy need not be
    symmetric or transitive by itself.
    """
    maps = enumerate_simplicial_maps(X, Y, max_branches=max_branches)
    return partition_from_edges(maps, lambda a, b: homotopy_exists(a, b, max_branches=max_branches))


# -- the classic nerve of a category (independent construction) -------------------


def _string_id(arrows):
    return "[%s]" % ";".join(arrows)


def classic_nerve(cat: Category):
    """3-truncated nerve of a finite category: composable arrow strings.

    Built directly from the category presentation (no 2-category machinery),
    so it can serve as an independent oracle for nerve constructions.
    """
    validate_category(cat)
    objs = sorted(cat.objects)
    arrows = sorted(cat.arrows)
    strings = {0: [()], 1: [(a,) for a in arrows]}
    for n in (2, 3):
        strings[n] = [
            s + (a,)
            for s in strings[n - 1]
            for a in arrows
            if cat.tgt(s[-1]) == cat.src(a)
        ]

    def sid(n, s):
        if n == 0:
            raise ValueError
        if n == 1:
            return s[0]
        return _string_id(s)

    simplices = (
        tuple(objs),
        tuple(sorted(arrows)),
        tuple(sorted(_string_id(s) for s in strings[2])),
        tuple(sorted(_string_id(s) for s in strings[3])),
    )

    by_id = {1: {a: (a,) for a in arrows}}
    for n in (2, 3):
        by_id[n] = {_string_id(s): s for s in strings[n]}

    faces = {}
    for n in (1, 2, 3):
        for i in range(n + 1):
            table = {}
            for x in simplices[n]:
                s = by_id[n][x]
                if i == 0:
                    r = s[1:]
                elif i == n:
                    r = s[:-1]
                else:
                    r = s[: i - 1] + (cat.then(s[i - 1], s[i]),) + s[i + 1 :]
                if n == 1:
                    table[x] = cat.tgt(s[0]) if i == 0 else cat.src(s[0])
                else:
                    table[x] = sid(n - 1, r)
            faces[(n, i)] = table

    degens = {}
    for n in (0, 1, 2):
        for i in range(n + 1):
            table = {}
            for x in simplices[n]:
                if n == 0:
                    table[x] = cat.identity[x]
                    continue
                s = by_id[n][x]
                at = cat.src(s[i]) if i < n else cat.tgt(s[-1])
                r = s[:i] + (cat.identity[at],) + s[i:]
                table[x] = sid(n + 1, r)
            degens[(n, i)] = table

    return TruncSSet(simplices=simplices, faces=faces, degens=degens, coskeletal=True)
