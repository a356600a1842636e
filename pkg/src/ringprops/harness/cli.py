"""Command line: ``ringprops {check,suite,separate,describe}``.

Exit codes: 0 no violations / property holds, 1 property fails or a violation
was found, 2 malformed input, 3 SizeCapExceeded.
"""

import argparse
import json
import sys

from ..annprop.module_props import MODULE_PROPERTIES, check_module_property
from ..annprop.ring_props import RING_PROPERTIES, check_ring_property
from ..errors import DEFAULT_SIZE_CAP, RingPropsError, SizeCapExceeded
from ..finmod import regular_module
from ..io import is_module, load_structure
from .corpus import CorpusSpec, corpus_from_descriptions, generate_corpus
from .separation import find_separation
from .theorems import THEOREM_IDS, report_violations, run_theorem_suite

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_CAP = 0, 1, 2, 3


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_check(args):
    s = load_structure(args.file, args.cap)
    p = args.property
    if is_module(s):
        if p not in MODULE_PROPERTIES:
            raise ValueError(f"{p!r} is not a module property ({', '.join(MODULE_PROPERTIES)})")
        v = check_module_property(s, p, args.cap)
    elif p in RING_PROPERTIES:
        v = check_ring_property(s, p, orientation=args.orientation, cap=args.cap)
    elif p in MODULE_PROPERTIES:
        v = check_module_property(regular_module(s, cap=args.cap), p, args.cap)
    else:
        raise ValueError(f"unknown property {p!r}")
    text = f"{s.name}: {p} {'holds' if v.holds else 'FAILS'}"
    if not v.holds:
        text += "\nwitness: " + json.dumps(v.witness, sort_keys=True)
    _emit(args, v.to_json(), text)
    return EXIT_OK if v.holds else EXIT_FAIL


def _load_corpus(args):
    if not args.corpus:
        return generate_corpus(CorpusSpec.with_cap(args.cap))
    try:
        with open(args.corpus) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        from ..errors import MalformedDescription
        raise MalformedDescription(f"{args.corpus}: {e}") from None
    if isinstance(data, list):
        return corpus_from_descriptions(data, args.cap)
    if isinstance(data, dict):
        return generate_corpus(CorpusSpec.from_json(data))
    raise ValueError("a corpus file holds a CorpusSpec object or a list of descriptions")


def cmd_suite(args):
    ids = None
    if args.theorems:
        ids = [t.strip().upper().replace("-", "_") for t in args.theorems.split(",") if t.strip()]
        ids = [{"IFP_EQ": "IFP-EQ"}.get(t, t) for t in ids]
    corpus = _load_corpus(args)
    if not len(corpus):
        raise ValueError("the corpus is empty")
    report = run_theorem_suite(corpus, ids, end_cap=args.cap)
    bad = report_violations(report)
    lines = [f"corpus: {len(corpus)} structures, {len(corpus.skipped)} cap-skipped"]
    for t in report["theorems"]:
        lines.append(f"{t['id']:<7} tested {t['tested']:>4}  hypothesis {t['hypothesis_met']:>4}"
                     f"  violations {len(t['violations'])}  skipped {len(t['skipped'])}")
        for v in t["violations"]:
            lines.append(f"    VIOLATION {v['structure']}: {v['detail']}")
    for o in report["observations"]:
        found = [c["structure"] if isinstance(c, dict) else c for c in o["counterexamples"]]
        lines.append(f"observation: {o['claim']}; tested {o['tested']}, "
                     f"counterexamples: {', '.join(found) or 'none'}")
    lines.append(f"total: {bad} violations in {report['timing']['total']} s")
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
    _emit(args, report, "\n".join(lines))
    return EXIT_FAIL if bad else EXIT_OK


def cmd_separate(args):
    corpus = _load_corpus(args)
    sep = find_separation(args.a, args.b, corpus, cap=args.cap)
    if sep is None:
        _emit(args, {"a": args.a, "b": args.b, "separation": None},
              f"no finite witness for {args.a} and not {args.b} in this corpus")
        return EXIT_OK
    replayed = sep.replay()
    data = dict(sep.to_json(), replayed=replayed)
    text = (f"{sep.entry.name}: {args.a} holds, {args.b} fails (witness replayed: {replayed})\n"
            f"witness: {json.dumps(sep.fails.witness, sort_keys=True)}")
    _emit(args, data, text)
    return EXIT_OK if replayed else EXIT_FAIL


def describe(s, cap=DEFAULT_SIZE_CAP):
    """A JSON-able summary of a ring or module."""
    from ..annprop.ideals import all_two_sided_ideals
    from ..homcalc import end_ring
    from ..lattice import all_submodules, fully_invariant_submodules, uniform_dimension

    if is_module(s):
        e = end_ring(s, cap=cap)
        return {"type": "module", "name": s.name, "order": s.order,
                "invariants": list(s.group.orders), "ring": s.ring.name,
                "ring_order": s.ring.order, "end_order": e.ring.order,
                "submodules": len(all_submodules(s, cap)),
                "fully_invariant_submodules": len(fully_invariant_submodules(s, e)),
                "uniform_dimension": uniform_dimension(s, cap),
                "description": s.description}
    return {"type": "ring", "name": s.name, "order": s.order,
            "additive_invariants": list(s.group.orders),
            "idempotents": len(s.idempotents), "units": len(s.units),
            "center_order": len(s.central_elements),
            "two_sided_ideals": len(all_two_sided_ideals(s, cap)),
            "commutative": len(s.central_elements) == s.order,
            "description": s.description}


def cmd_describe(args):
    d = describe(load_structure(args.file, args.cap), args.cap)
    _emit(args, d, "\n".join(f"{k}: {v}" for k, v in d.items() if k != "description"))
    return EXIT_OK


def _common_options(parser, default):
    # subcommands use SUPPRESS so that options given before the subcommand survive
    parser.add_argument("--json", action="store_true",
                        default=False if default is None else default,
                        help="machine-readable output")
    parser.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP if default is None else default,
                        help="size cap for rings, modules and End(M)")
    return parser


def build_parser():
    common = _common_options(argparse.ArgumentParser(add_help=False), argparse.SUPPRESS)
    p = _common_options(argparse.ArgumentParser(
        prog="ringprops", description="Annihilator properties of finite rings and modules"), None)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="decide one property")
    c.add_argument("file")
    c.add_argument("--property", required=True)
    c.add_argument("--orientation", choices=("right", "left"), default="right")
    c.set_defaults(run=cmd_check)

    s = sub.add_parser("suite", parents=[common], help="run the theorem suite")
    s.add_argument("--theorems", help=f"comma-separated subset of {','.join(THEOREM_IDS)}")
    s.add_argument("--corpus", help="CorpusSpec JSON object or list of descriptions")
    s.add_argument("--output", help="also write the JSON report here")
    s.set_defaults(run=cmd_suite)

    sp = sub.add_parser("separate", parents=[common],
                        help="find a structure with property a but not b")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--corpus")
    sp.set_defaults(run=cmd_separate)

    d = sub.add_parser("describe", parents=[common], help="summarize a structure file")
    d.add_argument("file")
    d.set_defaults(run=cmd_describe)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except SizeCapExceeded as e:
        print(f"error: size cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except (RingPropsError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
