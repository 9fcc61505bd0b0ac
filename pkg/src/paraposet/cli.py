"""Command-line front end.

Exit codes: 0 success / property holds, 1 property fails or a
counterexample search comes back empty, 2 usage or file errors,
3 a pasting theorem is violated by an amalgam.
"""

from __future__ import annotations

import argparse
import sys

from . import amalgam as am
from . import fileformat, harness, implication, relative, render
from .ortho import (OrthoPoset, PREDICATES, orthogonality_witness,
                    orthomodular_witness, paraortho_witness)
from .poset import FinitePoset, PosetError
from .relative import SectionedPoset


def _load(path: str):
    try:
        return fileformat.load(path)
    except (OSError, fileformat.ParseError, PosetError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _as_ortho(obj, path: str) -> OrthoPoset:
    if isinstance(obj, OrthoPoset):
        return obj
    if isinstance(obj, SectionedPoset):
        return OrthoPoset(obj.poset, obj.sections[obj.poset.bottom])
    if isinstance(obj, am.PastedFamily):
        return am.build_amalgam(obj).carrier
    print(f"error: {path}: no involution declared", file=sys.stderr)
    raise SystemExit(2)


def _witness(o: OrthoPoset, name: str):
    p = o.poset
    w = None
    if name in ("paraorthomodular", "sharply-paraorthomodular"):
        w = paraortho_witness(o)
    elif name == "orthomodular":
        w = orthomodular_witness(o)
    elif name == "orthogonal":
        w = orthogonality_witness(o)
    if w is None:
        return ""
    return "  witness (" + ", ".join(p.labels[i] for i in w) + ")"


def cmd_check(args) -> int:
    obj = _load(args.file)
    names = args.predicate or sorted(PREDICATES)
    for name in names:
        if name not in PREDICATES:
            print(f"error: unknown predicate {name!r}", file=sys.stderr)
            return 2
    o = _as_ortho(obj, args.file)
    all_ok = True
    for name in names:
        try:
            verdict = PREDICATES[name](o)
        except PosetError as exc:
            print(f"{name}: undefined ({exc})")
            all_ok = False
            continue
        extra = "" if verdict else _witness(o, name)
        print(f"{name}: {'true' if verdict else 'false'}{extra}")
        all_ok = all_ok and verdict
    return 0 if all_ok else 1


def cmd_table(args) -> int:
    obj = _load(args.file)
    op = args.op
    if op in ("i3", "i4"):
        if isinstance(obj, SectionedPoset):
            s = obj
        else:
            o = _as_ortho(obj, args.file)
            try:
                s = relative.sections_from_involution(o)
            except PosetError as exc:
                print(f"error: {args.file}: {exc}", file=sys.stderr)
                return 2
        table = relative.impl_I3(s) if op == "i3" else relative.impl_I4(s)
    else:
        o = _as_ortho(obj, args.file)
        fn = {"i1": implication.impl_I, "i2": implication.impl_I2,
              "sasaki-impl": implication.sasaki_impl,
              "sasaki-prod": implication.sasaki_proj}[op]
        try:
            table = fn(o)
        except (implication.NotOrthogonal, implication.NotALattice,
                implication.JoinMissing) as exc:
            print(f"error: {args.file}: {exc}", file=sys.stderr)
            return 2
    sys.stdout.write(render.render_table(table))
    return 0


def cmd_amalgam(args) -> int:
    obj = _load(args.family)
    if not isinstance(obj, am.PastedFamily):
        print(f"error: {args.family}: not a family file", file=sys.stderr)
        return 2
    try:
        built = am.build_amalgam(obj)
    except PosetError as exc:
        print(f"error: {args.family}: {exc}", file=sys.stderr)
        return 2
    if args.export_dot:
        sys.stdout.write(render.export_dot(built))
        return 0
    if args.loops is not None:
        loops = am.find_loops(obj, args.loops)
        p = built.carrier.poset
        for loop in loops:
            blocks = " ".join(obj.names[i] for i in loop.blocks)
            atoms = " ".join(p.labels[a] for a in loop.atoms)
            print(f"loop order={args.loops} blocks=[{blocks}] atoms=[{atoms}]")
        print(f"{len(loops)} loop(s) of order {args.loops}")
        return 0
    rep = am.classify_amalgam(obj, built)
    cov = am.cover_transfer(obj, built)
    p = built.carrier.poset
    print(f"elements: {p.n}")
    print(f"loops: order-3={len(rep.loops3)} order-4={len(rep.loops4)}")
    print(f"predicted: sharply={rep.predicted_sharply} lattice={rep.predicted_lattice}")
    print(f"direct: paraorthomodular={rep.direct_paraortho} "
          f"sharply={rep.direct_sharply} lattice={rep.direct_lattice}")
    if rep.join_witness is not None:
        a, b = rep.join_witness
        print(f"missing join: {p.labels[a]} v {p.labels[b]}")
    print(f"two-block pastings are lattices: {rep.two_block_lattices}")
    for cx, cy, blk, between in cov.exceptions:
        mids = ", ".join(p.labels[i] for i in _bits(between))
        print(f"cover exception: {p.labels[cx]} < {p.labels[cy]} "
              f"(block {obj.names[blk]}) interlopers [{mids}]")
    if not args.classify:
        return 0
    if rep.agree and cov.ok:
        print("classification: predictions agree with direct checks")
        return 0
    print("classification: THEOREM VIOLATION")
    return 3


def _bits(mask: int):
    from .poset import bits
    return bits(mask)


def cmd_verify(args) -> int:
    if args.theorems in (None, "all"):
        ids = None
    else:
        ids = [t for t in args.theorems.split(",") if t]
        for tid in ids:
            if tid not in harness.THEOREMS:
                print(f"error: unknown theorem id {tid!r}", file=sys.stderr)
                return 2
    results = harness.run_harness(max_n=args.max_n, ids=ids, jobs=args.jobs)
    bad = 0
    for res in results:
        status = "ok" if res.ok else f"FAIL ({len(res.violations)} violations)"
        print(f"{res.theorem}: {status} instances={res.instances}")
        for v in res.violations:
            print(f"  {v}")
        bad += len(res.violations)
    print(f"total: {len(results)} theorems, {bad} violations, max-n={args.max_n}")
    return 0 if bad == 0 else 1


def cmd_search(args) -> int:
    try:
        prop_a, prop_b = args.implies.split(",")
    except ValueError:
        print("error: --implies takes two comma-separated predicates",
              file=sys.stderr)
        return 2
    for name in (prop_a, prop_b):
        if name not in PREDICATES:
            print(f"error: unknown predicate {name!r}", file=sys.stderr)
            return 2
    found = harness.find_counterexample(prop_a, prop_b, max_n=args.max_n)
    if found is None:
        print(f"no counterexample: {prop_a} implies {prop_b} up to n={args.max_n}")
        return 1
    print(f"counterexample ({prop_a} without {prop_b}):")
    sys.stdout.write(fileformat.emit(found))
    return 0


def cmd_export(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, am.PastedFamily):
        obj = am.build_amalgam(obj)
    sys.stdout.write(render.export_dot(obj))
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="paraposet",
        description="Checks and tables for finite ordered structures "
                    "with antitone involutions.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate structural predicates")
    p.add_argument("file")
    p.add_argument("--predicate", action="append",
                   help="predicate name (repeatable; default: all)")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("table", help="print an implication or product table")
    p.add_argument("file")
    p.add_argument("--op", required=True,
                   choices=["i1", "i2", "i3", "i4", "sasaki-impl", "sasaki-prod"])
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("amalgam", help="build and classify a pasted family")
    p.add_argument("family")
    p.add_argument("--classify", action="store_true",
                   help="exit 3 if predictions and direct checks disagree")
    p.add_argument("--loops", type=int, metavar="N",
                   help="list atomic loops of the given order")
    p.add_argument("--export-dot", action="store_true")
    p.set_defaults(fn=cmd_amalgam)

    p = sub.add_parser("verify", help="run the exhaustive theorem harness")
    p.add_argument("--theorems", default="all",
                   help="comma-separated theorem ids, or 'all'")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="hunt for a counterexample to A implies B")
    p.add_argument("--implies", required=True, metavar="A,B")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("export", help="write a DOT cover diagram")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", default=True)
    p.set_defaults(fn=cmd_export)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
