"""Command-line entry point.

Exit codes: 0 success, 1 verification counterexample / failed relation,
2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import complex as cx
from . import diagram as dg
from . import frobenius as fb
from . import rank2, verifier
from .rings import QQ, ZZ, GF, RingSpec


class InputError(Exception):
    pass


def _load_diagram(spec: str) -> dg.LinkDiagram:
    if spec.startswith("builder:"):
        name = spec[len("builder:") :]
        try:
            return dg.BUILDERS[name]()
        except KeyError:
            known = ", ".join(sorted(dg.BUILDERS))
            raise InputError(f"unknown builder {name!r}; known: {known}") from None
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {spec}: {e}") from None
    try:
        return dg.parse_pd(text)
    except dg.PDError as e:
        raise InputError(f"{spec}: {e}") from None


def _parse_ring(spec: str) -> RingSpec:
    if spec == "Z":
        return ZZ
    if spec == "Q":
        return QQ
    if spec.startswith("Fp:"):
        try:
            return GF(int(spec[3:]))
        except ValueError as e:
            raise InputError(f"bad ring {spec!r}: {e}") from None
    raise InputError(f"bad ring {spec!r}; expected Z, Q, or Fp:P")


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read {path}: {e}") from None


def _algebra_from_args(args) -> fb.FrobeniusData:
    if args.algebra and args.a5:
        raise InputError("--algebra and --a5 are mutually exclusive")
    ring = _parse_ring(args.ring) if args.ring else None
    if args.a5:
        try:
            h, t = (int(x) for x in args.a5.split(","))
        except ValueError:
            raise InputError("--a5 expects two integers: H,T") from None
        return fb.a5(h, t, ring or ZZ)
    if args.algebra:
        data = _load_json(args.algebra)
        try:
            F = fb.FrobeniusData.from_json(data)
        except (KeyError, ValueError, TypeError) as e:
            raise InputError(f"{args.algebra}: {e}") from None
        if ring is not None and ring != F.ring:
            return fb.FrobeniusData(ring, F.rank, F.mult, F.comult, F.unit, F.counit)
        return F
    raise InputError(
        "homology over the generic two-parameter coefficient ring is not "
        "supported; specialize with --a5 H,T or supply --algebra FILE"
    )


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _cmd_homology(args) -> int:
    d = _load_diagram(args.diagram)
    F = _algebra_from_args(args)
    C = cx.chain_complex(d, F, normalize=args.normalize)
    table = cx.homology(C)
    if args.json:
        _emit_json(table.to_json())
    else:
        print(f"ring {F.ring.to_json()}  normalized={table.normalized}")
        for i, free, tor in table.rows:
            tors = " + ".join(f"Z/{t}" for t in tor)
            desc = f"free rank {free}" + (f" + {tors}" if tors else "")
            print(f"  H^{i}: {desc}")
    return 0


def _cmd_bracket(args) -> int:
    d = _load_diagram(args.diagram)
    b = dg.kauffman_bracket(d)
    if args.json:
        _emit_json({"bracket": {str(e): c for e, c in b.as_dict().items()}})
    else:
        print(b.render("A"))
    return 0


def _cmd_check_algebra(args) -> int:
    F = fb.FrobeniusData.from_json(_load_json(args.file))
    flags = fb.check_axioms(F)
    if args.json:
        _emit_json(flags)
    else:
        for k, v in flags.items():
            print(f"{k}: {'yes' if v else 'no'}")
    return 0


def _cmd_relations(args) -> int:
    F = fb.FrobeniusData.from_json(_load_json(args.file))
    report = fb.verify_n2cob_relations(F)
    if args.json:
        _emit_json(report)
    else:
        for k, v in report.items():
            print(f"{k}: {'holds' if v else 'FAILS'}")
    return 0 if all(report.values()) else 1


def _cmd_classify(args) -> int:
    data = _load_json(args.file)
    try:
        t = rank2.MultTable.from_json(data)
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"{args.file}: {e}") from None
    if args.p is not None:
        ring = GF(args.p)
        t = rank2.MultTable(ring, t.e11, t.e12, t.e22, t.e21)
    try:
        label, params = rank2.classify(t)
    except rank2.ClassificationGap as e:
        print(f"classification gap: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        raise InputError(str(e)) from None
    if args.json:
        _emit_json({"family": label, "params": list(params)})
    else:
        print(f"{label} {tuple(params)}")
    return 0


def _cmd_verify(args) -> int:
    reports = []
    which = args.target
    if which == "thm1.2":
        if args.zbound is not None:
            reports.append(verifier.verify_theorem_1_2(zbound=args.zbound))
        elif args.p is not None:
            reports.append(verifier.verify_theorem_1_2(ring=GF(args.p)))
        else:
            for p in (2, 3, 5):
                reports.append(verifier.verify_theorem_1_2(ring=GF(p)))
            reports.append(verifier.verify_theorem_1_2(zbound=2))
    elif which == "thm1.1":
        for p in [args.p] if args.p else (2, 3):
            reports.append(verifier.verify_theorem_1_1(p))
    elif which == "prop3.4":
        for p in [args.p] if args.p else (3, 5):
            reports.append(verifier.verify_prop_3_4(p))
    elif which == "char2":
        reports.append(verifier.verify_char2_classification())
    elif which == "noncomm":
        for p in [args.p] if args.p else (2, 3):
            reports.append(verifier.verify_noncommutative(p))
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown verify target {which!r}")

    if args.json:
        _emit_json([r.to_json() for r in reports])
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.ok for r in reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="frobknot",
        description="Exact link homology and rank-2 algebra verification.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("homology", help="homology of a diagram under an algebra")
    p.add_argument("diagram", help="PD file path or builder:NAME")
    p.add_argument("--algebra", help="FrobeniusData JSON file")
    p.add_argument("--a5", help="two-parameter algebra at H,T (integers)")
    p.add_argument("--ring", help="Z, Q, or Fp:P")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_homology)

    p = sub.add_parser("bracket", help="state-sum bracket polynomial")
    p.add_argument("diagram", help="PD file path or builder:NAME")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_bracket)

    p = sub.add_parser("check-algebra", help="axiom report for algebra data")
    p.add_argument("file", help="FrobeniusData JSON file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_check_algebra)

    p = sub.add_parser("relations", help="cobordism-relation report for algebra data")
    p.add_argument("file", help="FrobeniusData JSON file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_relations)

    p = sub.add_parser("classify", help="match a product table to a representative family")
    p.add_argument("file", help="MultTable JSON file")
    p.add_argument("--p", type=int, help="reinterpret the table over F_p")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("verify", help="run an exhaustive verification battery")
    p.add_argument("target", choices=["thm1.1", "thm1.2", "prop3.4", "char2", "noncomm"])
    p.add_argument("--p", type=int)
    p.add_argument("--zbound", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return ap


def main(argv=None) -> int:
    threads = os.environ.get("FROBKNOT_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print(f"FROBKNOT_THREADS must be a positive integer, got {threads!r}", file=sys.stderr)
            return 2
        # execution is sequential; output is identical for any worker count

    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
