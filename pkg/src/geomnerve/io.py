"""JSON interchange for every structure the CLI reads or writes.

All documents are strict: unknown fields are rejected.  Dumps are canonical
(sorted keys, sorted arrays) so identical inputs produce byte-identical
output.
"""

from __future__ import annotations

import json
import os

from .cat import Category
from .cohom import FiniteGroup, GroupFamily, validate_group
from .errors import FormatError
from .laxfun import LaxFunctor
from .simpl import SimplicialMap, TruncSSet
from .twocat import TwoCat


def canonical_json(data):
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _require_fields(doc, fields, optional=(), kind="document"):
    if not isinstance(doc, dict):
        raise FormatError("%s must be a JSON object" % kind)
    have = set(doc)
    unknown = have - set(fields) - set(optional)
    missing = set(fields) - have
    if unknown:
        raise FormatError("%s has unknown fields: %s" % (kind, ", ".join(sorted(unknown))))
    if missing:
        raise FormatError("%s is missing fields: %s" % (kind, ", ".join(sorted(missing))))


def _cells(entries, fields, kind):
    out = []
    if not isinstance(entries, list):
        raise FormatError("%s must be an array" % kind)
    for e in entries:
        _require_fields(e, fields, kind="%s entry" % kind)
        out.append(tuple(e[f] for f in fields))
    return out


# -- 2-categories -----------------------------------------------------------------


def load_two_cat(doc):
    _require_fields(
        doc,
        ("objects", "one_cells", "id1", "comp1", "two_cells", "id2", "vcomp", "hcomp"),
        kind="2-category",
    )
    one_cells = {i: (s, t) for i, s, t in _cells(doc["one_cells"], ("id", "src", "tgt"), "one_cells")}
    two_cells = {i: (s, t) for i, s, t in _cells(doc["two_cells"], ("id", "src", "tgt"), "two_cells")}
    comp1 = {(f, g): r for f, g, r in _cells(doc["comp1"], ("f", "g", "result"), "comp1")}
    vcomp = {(a, b): r for a, b, r in _cells(doc["vcomp"], ("a", "b", "result"), "vcomp")}
    hcomp = {(a, b): r for a, b, r in _cells(doc["hcomp"], ("a", "b", "result"), "hcomp")}
    return TwoCat(
        objects=tuple(sorted(doc["objects"])),
        one_cells=one_cells,
        id1=dict(doc["id1"]),
        comp1=comp1,
        two_cells=two_cells,
        id2=dict(doc["id2"]),
        vcomp=vcomp,
        hcomp=hcomp,
    )


def dump_two_cat(C: TwoCat):
    return {
        "objects": sorted(C.objects),
        "one_cells": [{"id": i, "src": s, "tgt": t} for i, (s, t) in sorted(C.one_cells.items())],
        "id1": dict(sorted(C.id1.items())),
        "comp1": [{"f": f, "g": g, "result": r} for (f, g), r in sorted(C.comp1.items())],
        "two_cells": [{"id": i, "src": s, "tgt": t} for i, (s, t) in sorted(C.two_cells.items())],
        "id2": dict(sorted(C.id2.items())),
        "vcomp": [{"a": a, "b": b, "result": r} for (a, b), r in sorted(C.vcomp.items())],
        "hcomp": [{"a": a, "b": b, "result": r} for (a, b), r in sorted(C.hcomp.items())],
    }


# -- categories ---------------------------------------------------------------------


def load_category(doc):
    _require_fields(doc, ("objects", "arrows", "identity", "compose"), kind="category")
    arrows = {i: (s, t) for i, s, t in _cells(doc["arrows"], ("id", "src", "tgt"), "arrows")}
    compose = {(f, g): r for f, g, r in _cells(doc["compose"], ("f", "g", "result"), "compose")}
    return Category(
        objects=tuple(sorted(doc["objects"])),
        arrows=arrows,
        identity=dict(doc["identity"]),
        compose=compose,
    )


def dump_category(cat: Category):
    return {
        "objects": sorted(cat.objects),
        "arrows": [{"id": i, "src": s, "tgt": t} for i, (s, t) in sorted(cat.arrows.items())],
        "identity": dict(sorted(cat.identity.items())),
        "compose": [{"f": f, "g": g, "result": r} for (f, g), r in sorted(cat.compose.items())],
    }


# -- truncated simplicial sets ---------------------------------------------------------


def load_trunc_sset(doc):
    _require_fields(doc, ("simplices", "faces", "degens", "coskeletal"), kind="simplicial set")
    levels = doc["simplices"]
    _require_fields(levels, ("0", "1", "2", "3"), kind="simplices")
    simplices = tuple(tuple(sorted(levels[str(n)])) for n in range(4))
    faces = {}
    for e in _cells(doc["faces"], ("level", "index", "from", "to"), "faces"):
        n, i, x, y = e
        faces.setdefault((int(n), int(i)), {})[x] = y
    degens = {}
    for e in _cells(doc["degens"], ("level", "index", "from", "to"), "degens"):
        n, i, x, y = e
        degens.setdefault((int(n), int(i)), {})[x] = y
    return TruncSSet(
        simplices=simplices, faces=faces, degens=degens, coskeletal=bool(doc["coskeletal"])
    )


def dump_trunc_sset(X: TruncSSet):
    return {
        "simplices": {str(n): sorted(X.simplices[n]) for n in range(4)},
        "faces": [
            {"level": n, "index": i, "from": x, "to": y}
            for (n, i) in sorted(X.faces)
            for x, y in sorted(X.faces[(n, i)].items())
        ],
        "degens": [
            {"level": n, "index": i, "from": x, "to": y}
            for (n, i) in sorted(X.degens)
            for x, y in sorted(X.degens[(n, i)].items())
        ],
        "coskeletal": X.coskeletal,
    }


# -- groups and families ---------------------------------------------------------------


def load_group(doc):
    _require_fields(doc, ("elements", "unit", "mult"), optional=("inv",), kind="group")
    mult = {}
    for triple in doc["mult"]:
        if not isinstance(triple, list) or len(triple) != 3:
            raise FormatError("mult entries must be [a, b, ab] triples")
        mult[(triple[0], triple[1])] = triple[2]
    inv = doc.get("inv")
    elements = tuple(sorted(doc["elements"]))
    if inv is None:
        unit = doc["unit"]
        inv = {}
        for a in elements:
            for b in elements:
                if mult.get((a, b)) == unit and mult.get((b, a)) == unit:
                    inv[a] = b
                    break
    return FiniteGroup(elements=elements, unit=doc["unit"], mult=mult, inv=dict(inv))


def dump_group(G: FiniteGroup):
    return {
        "elements": sorted(G.elements),
        "unit": G.unit,
        "mult": [[a, b, c] for (a, b), c in sorted(G.mult.items())],
        "inv": dict(sorted(G.inv.items())),
    }


def load_family(doc, base_dir="."):
    """Family document: object id -> inline group or path to a group file."""
    if not isinstance(doc, dict):
        raise FormatError("family must be a JSON object mapping object ids to groups")
    groups = {}
    for x, val in doc.items():
        if isinstance(val, str):
            groups[x] = validate_group(load_group(read_json(os.path.join(base_dir, val))))
        else:
            groups[x] = validate_group(load_group(val))
    return GroupFamily(base=tuple(sorted(doc)), groups=groups)


def dump_family(K: GroupFamily):
    return {x: dump_group(K.group(x)) for x in sorted(K.base)}


# -- lax functors and simplicial maps ------------------------------------------------------


def _resolve(ref, base_dir, loader, kind):
    if isinstance(ref, str):
        return loader(read_json(os.path.join(base_dir, ref)))
    if isinstance(ref, dict):
        return loader(ref)
    raise FormatError("%s reference must be a path string or an inline object" % kind)


def load_lax_functor(doc, base_dir=".", dom=None, cod=None):
    _require_fields(doc, ("dom", "cod", "F0", "F1", "F2", "sigma"), kind="lax functor")
    if dom is None:
        dom = _resolve(doc["dom"], base_dir, load_two_cat, "dom")
    if cod is None:
        cod = _resolve(doc["cod"], base_dir, load_two_cat, "cod")
    sigma = {(f, g): s for f, g, s in _cells(doc["sigma"], ("f", "g", "two_cell"), "sigma")}
    return LaxFunctor(
        dom=dom, cod=cod, F0=dict(doc["F0"]), F1=dict(doc["F1"]), F2=dict(doc["F2"]), sigma=sigma
    )


def dump_lax_functor(F: LaxFunctor, dom_ref=None, cod_ref=None):
    return {
        "dom": dom_ref if dom_ref is not None else dump_two_cat(F.dom),
        "cod": cod_ref if cod_ref is not None else dump_two_cat(F.cod),
        "F0": dict(sorted(F.F0.items())),
        "F1": dict(sorted(F.F1.items())),
        "F2": dict(sorted(F.F2.items())),
        "sigma": [{"f": f, "g": g, "two_cell": s} for (f, g), s in sorted(F.sigma.items())],
    }


def load_simplicial_map(doc, base_dir=".", dom=None, cod=None):
    _require_fields(doc, ("dom", "cod", "levels"), kind="simplicial map")
    if dom is None:
        dom = _resolve(doc["dom"], base_dir, load_trunc_sset, "dom")
    if cod is None:
        cod = _resolve(doc["cod"], base_dir, load_trunc_sset, "cod")
    _require_fields(doc["levels"], ("0", "1", "2", "3"), kind="levels")
    levels = tuple(dict(doc["levels"][str(n)]) for n in range(4))
    return SimplicialMap(dom=dom, cod=cod, levels=levels)


def dump_simplicial_map(phi: SimplicialMap, dom_ref=None, cod_ref=None):
    return {
        "dom": dom_ref if dom_ref is not None else dump_trunc_sset(phi.dom),
        "cod": cod_ref if cod_ref is not None else dump_trunc_sset(phi.cod),
        "levels": {str(n): dict(sorted(phi.levels[n].items())) for n in range(4)},
    }


def read_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
