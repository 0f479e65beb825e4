"""Command-line front end over the JSON interchange files."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io
from .cat import validate_category
from .cohom import dedecker_cocycle, h2, representation_check, automorphism_structure, validate_group
from .errors import FormatError, SearchLimitExceeded, ValidationError
from .laxfun import enumerate_lax_functors, validate_lax_functor
from .nerve import nerve_of_lax_functor, nerve_of_two_category, reconstruct_lax_functor
from .simpl import homotopy_classes, validate_simplicial_map, validate_trunc_sset
from .twocat import validate_two_category

KINDS = ("2cat", "sset", "group", "cat", "family", "laxfun", "smap", "laxfun-list")


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(violations, json_errors):
    if json_errors:
        sys.stderr.write(io.canonical_json({"violations": [v.to_json() for v in violations]}))
    else:
        for v in violations:
            sys.stderr.write(str(v) + "\n")
    return 1


def _kind_of(path, kind):
    if kind:
        return kind
    if path.endswith(".fam.json"):
        return "family"
    for k in KINDS:
        if path.endswith(".%s.json" % k):
            return k
    raise FormatError("cannot infer the document kind from %r; pass --kind" % path)


def _validate_document(path, kind):
    doc = io.read_json(path)
    base = os.path.dirname(path) or "."
    if kind == "2cat":
        validate_two_category(io.load_two_cat(doc))
    elif kind == "sset":
        validate_trunc_sset(io.load_trunc_sset(doc))
    elif kind == "group":
        validate_group(io.load_group(doc))
    elif kind == "cat":
        validate_category(io.load_category(doc))
    elif kind == "family":
        io.load_family(doc, base)
    elif kind == "laxfun":
        F = io.load_lax_functor(doc, base)
        validate_two_category(F.dom)
        validate_two_category(F.cod)
        validate_lax_functor(F.dom, F.cod, F)
    elif kind == "smap":
        phi = io.load_simplicial_map(doc, base)
        validate_trunc_sset(phi.dom)
        validate_trunc_sset(phi.cod)
        validate_simplicial_map(phi.dom, phi.cod, phi)
    elif kind == "laxfun-list":
        dom = io.load_two_cat(doc["dom"])
        cod = io.load_two_cat(doc["cod"])
        validate_two_category(dom)
        validate_two_category(cod)
        for entry in doc["functors"]:
            F = io.load_lax_functor(
                {"dom": doc["dom"], "cod": doc["cod"], **entry}, dom=dom, cod=cod
            )
            validate_lax_functor(dom, cod, F)
    else:
        raise FormatError("unknown kind %r" % kind)


def _parse_fix_objects(spec_str, dom, cod):
    if spec_str is None:
        return None
    if spec_str == "identity":
        return {x: x for x in dom.objects}
    mapping = json.loads(spec_str)
    if not isinstance(mapping, dict):
        raise FormatError("--fix-objects must be 'identity' or a JSON object")
    return mapping


def _load_groupoid_inputs(args):
    cat = io.load_category(io.read_json(args.groupoid))
    fam = io.load_family(io.read_json(args.family), os.path.dirname(args.family) or ".")
    return cat, fam


def _run(args):
    if args.command == "validate":
        _validate_document(args.file, _kind_of(args.file, args.kind))
        sys.stdout.write("ok\n")
        return 0

    if args.command == "nerve":
        C = validate_two_category(io.load_two_cat(io.read_json(args.file)))
        X = nerve_of_two_category(C)
        _emit(io.canonical_json(io.dump_trunc_sset(X)), args.output)
        return 0

    if args.command == "nerve-map":
        doc = io.read_json(args.file)
        base = os.path.dirname(args.file) or "."
        F = io.load_lax_functor(doc, base)
        validate_two_category(F.dom)
        validate_two_category(F.cod)
        validate_lax_functor(F.dom, F.cod, F)
        phi = nerve_of_lax_functor(F)
        out = io.dump_simplicial_map(
            phi, io.dump_trunc_sset(phi.dom), io.dump_trunc_sset(phi.cod)
        )
        _emit(io.canonical_json(out), args.output)
        return 0

    if args.command == "reconstruct":
        C = validate_two_category(io.load_two_cat(io.read_json(args.dom)))
        D = validate_two_category(io.load_two_cat(io.read_json(args.cod)))
        doc = io.read_json(args.file)
        base = os.path.dirname(args.file) or "."
        phi = io.load_simplicial_map(doc, base)
        validate_trunc_sset(phi.dom)
        validate_trunc_sset(phi.cod)
        validate_simplicial_map(phi.dom, phi.cod, phi)
        F = reconstruct_lax_functor(phi, C, D)
        out = io.dump_lax_functor(F, io.dump_two_cat(C), io.dump_two_cat(D))
        _emit(io.canonical_json(out), args.output)
        return 0

    if args.command == "enum-lax":
        C = validate_two_category(io.load_two_cat(io.read_json(args.dom)))
        D = validate_two_category(io.load_two_cat(io.read_json(args.cod)))
        fix = _parse_fix_objects(args.fix_objects, C, D)
        functors = enumerate_lax_functors(C, D, fix_objects=fix, max_branches=args.max_branches)
        out = {
            "count": len(functors),
            "dom": io.dump_two_cat(C),
            "cod": io.dump_two_cat(D),
            "functors": [
                {k: v for k, v in io.dump_lax_functor(F).items() if k not in ("dom", "cod")}
                for F in functors
            ],
        }
        _emit(io.canonical_json(out), args.output)
        return 0

    if args.command == "h2":
        cat, fam = _load_groupoid_inputs(args)
        part = h2(cat, fam, identity_components=args.identity_components, max_branches=args.max_branches)
        if args.json:
            aut = automorphism_structure(fam)
            out = {
                "classes": len(part),
                "class_sizes": [len(c) for c in part.classes],
                "representatives": [dedecker_cocycle(F, aut) for F in part.representatives],
            }
            _emit(io.canonical_json(out), args.output)
        else:
            _emit("classes: %d\n" % len(part), args.output)
        return 0

    if args.command == "rep-check":
        cat, fam = _load_groupoid_inputs(args)
        report = representation_check(cat, fam, max_branches=args.max_branches)
        if args.json:
            _emit(io.canonical_json(report.to_json()), args.output)
        else:
            _emit(report.summary() + "\n", args.output)
        return 0 if report.passed else 1

    if args.command == "homotopy-classes":
        X = validate_trunc_sset(io.load_trunc_sset(io.read_json(args.dom)))
        Y = validate_trunc_sset(io.load_trunc_sset(io.read_json(args.cod)))
        part = homotopy_classes(X, Y, max_branches=args.max_branches)
        if args.json:
            out = {
                "classes": [list(c) for c in part.classes],
                "count": len(part),
                "maps": [
                    {str(n): dict(sorted(m.levels[n].items())) for n in range(4)}
                    for m in part.items
                ],
            }
            _emit(io.canonical_json(out), args.output)
        else:
            _emit("maps: %d, classes: %d\n" % (len(part.items), len(part)), args.output)
        return 0

    raise AssertionError("unhandled command")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="geomnerve",
        description="Geometric nerves of finite 2-categories, lax functor enumeration, "
        "combinatorial homotopy and non-abelian 2-cohomology of groupoids.",
    )
    parser.add_argument("--json-errors", action="store_true", help="machine-readable violations on stderr")
    parser.add_argument(
        "--max-branches",
        type=int,
        default=None,
        help="search budget (default GEOMNERVE_MAX_BRANCHES or 10^7)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate an interchange file")
    p.add_argument("file")
    p.add_argument("--kind", choices=KINDS)

    p = sub.add_parser("nerve", help="geometric nerve of a 2-category")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = sub.add_parser("nerve-map", help="simplicial map induced by a lax functor")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = sub.add_parser("reconstruct", help="lax functor from a simplicial map between nerves")
    p.add_argument("file")
    p.add_argument("--dom", required=True)
    p.add_argument("--cod", required=True)
    p.add_argument("-o", "--output")

    p = sub.add_parser("enum-lax", help="enumerate normal lax 2-functors")
    p.add_argument("dom")
    p.add_argument("cod")
    p.add_argument("--fix-objects", nargs="?", const="identity", default=None)
    p.add_argument("-o", "--output")

    p = sub.add_parser("h2", help="non-abelian 2-cohomology classes of a groupoid")
    p.add_argument("--groupoid", required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--identity-components", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("rep-check", help="verify the cohomology/homotopy bijection by enumeration")
    p.add_argument("--groupoid", required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("homotopy-classes", help="homotopy classes of simplicial maps")
    p.add_argument("dom")
    p.add_argument("cod")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _run(args)
    except ValidationError as exc:
        return _fail(exc.violations, args.json_errors)
    except FormatError as exc:
        sys.stderr.write("format error: %s\n" % exc)
        return 1
    except SearchLimitExceeded as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write("io error: %s\n" % exc)
        return 2
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
