"""Command-line front door.

Every run re-verifies the certificates it reports and exits 0 only when
verification passed; reports are JSON with rationals as [num, den] pairs.
Identical command lines (same seeds) produce byte-identical reports.
"""

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import jsonio, verify
from .caps import CapParams, build_cover
from .core import Family
from .diameter_helly import (
    ColourfulCounterexample,
    colorful_helly_diameter,
    fractional_helly_diameter,
)
from .errors import GeometryError
from .extremal import build_claim_family, verify_claim
from .generators import GeneratorSpec, generate
from .pq import partition_large_intersections, pq_transversal
from .scaling import rows_to_csv, scaling_experiment
from .tverberg import selection_diameter, tverberg_diameter, weak_net_diameter
from .width_helly import ClassWitness, colorful_helly_width, helly_width_witness


def _frac(text):
    return Fraction(text)


def _direction(text):
    return tuple(Fraction(x) for x in text.split(","))


def _digest(obj):
    return hashlib.sha256(
        json.dumps(obj, sort_keys=True).encode()).hexdigest()[:16]


def _load_family(args):
    if args.input:
        with open(args.input) as fp:
            return jsonio.family_in(json.load(fp)), None
    spec = GeneratorSpec(args.dim, args.count, args.shape, args.seed,
                         {"jitter": args.jitter})
    return generate(spec), spec


def _emit(report, args):
    text = jsonio.dump(report, indent=None)
    if args.output:
        with open(args.output, "w") as fp:
            fp.write(text + "\n")
    else:
        print(text)
    return 0 if report.get("verified", False) else 1


def _base_report(command, family):
    return {
        "command": command,
        "input_digest": _digest(jsonio.family_out(family)),
        "timings": {},
        "verified": False,
    }


def _family_args(sub, count=6):
    sub.add_argument("--input", help="family JSON file")
    sub.add_argument("--output", help="report destination (default stdout)")
    sub.add_argument("--dim", type=int, default=2)
    sub.add_argument("--count", type=int, default=count)
    sub.add_argument("--shape", default="shifted-core",
                     choices=["boxes", "shifted-core", "random-halfspaces"])
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--jitter", type=_frac, default=Fraction(1, 5))


def _split_classes(family, n_classes):
    """Singleton colour classes from the first n_classes bodies."""
    if len(family) < n_classes:
        raise GeometryError(
            f"need at least {n_classes} bodies for the colour classes")
    return [Family.of([family[i]]) for i in range(n_classes)]


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="hellydiam",
        description="quantitative Helly theorems for diameter, executable")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("generate", help="emit a generated family as JSON")
    _family_args(sub)

    sub = subs.add_parser("helly-width", help="exact width Helly witness")
    _family_args(sub)
    sub.add_argument("--direction", type=_direction, default=(1, 0))
    sub.add_argument("--threshold", type=_frac, default=Fraction(1))

    sub = subs.add_parser("colorful-width", help="colourful width Helly")
    _family_args(sub)
    sub.add_argument("--direction", type=_direction, default=(1, 0))
    sub.add_argument("--threshold", type=_frac, default=Fraction(1))

    sub = subs.add_parser("frac-width", help="fractional width Helly")
    _family_args(sub)
    sub.add_argument("--direction", type=_direction, default=(1, 0))
    sub.add_argument("--threshold", type=_frac, default=Fraction(1))

    sub = subs.add_parser("frac-diam", help="fractional diameter Helly")
    _family_args(sub, count=8)
    sub.add_argument("--delta", type=_frac, default=Fraction(1, 4))

    sub = subs.add_parser("colorful-diam", help="colourful diameter Helly")
    _family_args(sub, count=24)
    sub.add_argument("--delta", type=_frac, default=Fraction(1, 2))

    sub = subs.add_parser("tverberg", help="Tverberg partition for diameter")
    _family_args(sub, count=49)
    sub.add_argument("--m", type=int, default=2)
    sub.add_argument("--delta", type=_frac, default=Fraction(1, 2))

    sub = subs.add_parser("selection", help="selection lemma for diameter")
    _family_args(sub)
    sub.add_argument("--delta", type=_frac, default=Fraction(1, 2))

    sub = subs.add_parser("net", help="weak epsilon-net for diameter")
    _family_args(sub, count=8)
    sub.add_argument("--epsilon", type=_frac, default=Fraction(1, 2))
    sub.add_argument("--delta", type=_frac, default=Fraction(1, 4))
    sub.add_argument("--exhaustive-cap", type=int, default=14)

    sub = subs.add_parser("pq", help="(p,q) transversal pipeline")
    _family_args(sub, count=8)
    sub.add_argument("--p", type=int, default=4)
    sub.add_argument("--q", type=int, default=4)
    sub.add_argument("--delta", type=_frac, default=Fraction(1, 4))
    sub.add_argument("--exhaustive-cap", type=int, default=14)

    sub = subs.add_parser("partition", help="partition corollary")
    _family_args(sub, count=8)
    sub.add_argument("--delta", type=_frac, default=Fraction(1, 4))
    sub.add_argument("--exhaustive-cap", type=int, default=14)

    sub = subs.add_parser("extremal", help="lower-bound family + verifier")
    sub.add_argument("--d", type=int, default=2)
    sub.add_argument("--k", type=int, default=1)
    sub.add_argument("--verify", action="store_true")
    sub.add_argument("--output")

    sub = subs.add_parser("scaling", help="delta vs check-size probe")
    sub.add_argument("--deltas", default="1/2,1/4,1/8,1/16")
    sub.add_argument("--trials", type=int, default=3)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--output")

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except GeometryError as exc:
        report = {"command": args.command, "verified": False,
                  "error": type(exc).__name__, "message": str(exc)}
        print(jsonio.dump(report))
        return 2


def _dispatch(args):
    cmd = args.command

    if cmd == "extremal":
        t0 = time.time()
        cf = build_claim_family(args.d, args.k)
        report = {
            "command": cmd,
            "d": args.d,
            "k": args.k,
            "bodies": len(cf.family),
            "pairs": len(cf.pair_map),
            "verified": False,
        }
        if args.verify:
            rep = verify_claim(cf)
            report["claim"] = {
                "all_2d_wide": rep.all_2d_wide,
                "worst_2d_diam_sq": jsonio.frac_out(rep.worst_2d_diam_sq),
                "all_partitions_thin": rep.all_partitions_thin,
                "worst_part_diam_sq": jsonio.frac_out(rep.worst_part_diam_sq),
                "counts": rep.counts,
            }
            report["verified"] = rep.all_2d_wide and rep.all_partitions_thin
        else:
            report["verified"] = True
        report["timings"] = {"seconds": round(time.time() - t0, 3)}
        return _emit(report, args)

    if cmd == "scaling":
        deltas = [Fraction(x) for x in args.deltas.split(",")]
        rows = scaling_experiment(2, deltas, args.trials, args.seed)
        csv = rows_to_csv(rows)
        if args.output:
            with open(args.output, "w") as fp:
                fp.write(csv)
        else:
            sys.stdout.write(csv)
        return 0 if all(r["verified"] for r in rows) else 1

    family, spec = _load_family(args)
    t0 = time.time()

    if cmd == "generate":
        report = jsonio.family_out(family)
        text = jsonio.dump(report)
        if args.output:
            with open(args.output, "w") as fp:
                fp.write(text + "\n")
        else:
            print(text)
        return 0

    report = _base_report(cmd, family)

    if cmd == "helly-width":
        witness = helly_width_witness(family, args.direction, args.threshold)
        ok = verify.check_width_witness(family, args.direction,
                                        args.threshold, witness)
        report["outcome"] = {
            "segment": jsonio.segment_out(witness.segment),
            "raw_gap": jsonio.frac_out(witness.raw_gap),
        }
        report["verified"] = ok

    elif cmd == "colorful-width":
        classes = _split_classes(family, 2 * family.dim)
        out = colorful_helly_width(classes, args.direction, args.threshold)
        if isinstance(out, ClassWitness):
            ok = verify.check_class_width_witness(
                classes, args.direction, args.threshold, out)
            report["outcome"] = {
                "kind": "class",
                "index": out.index,
                "segment": jsonio.segment_out(out.witness.segment),
            }
        else:
            ok = verify.check_width_counterexample(
                classes, args.direction, args.threshold, out)
            report["outcome"] = {
                "kind": "rainbow",
                "choice": list(out.choice.indices),
            }
        report["verified"] = ok

    elif cmd == "frac-width":
        from .width_helly import fractional_helly_width

        out = fractional_helly_width(family, args.direction, args.threshold)
        ok = (verify.check_members_contain_pair(family, out.members, out.pair)
              and len(out.members) > 0)
        report["outcome"] = {
            "pair": jsonio.segment_out(out.pair),
            "members": list(out.members),
            "beta_observed": jsonio.frac_out(out.beta_observed),
        }
        report["verified"] = ok

    elif cmd == "frac-diam":
        out = fractional_helly_diameter(family, args.delta)
        floor_sq = (1 - args.delta) ** 2
        ok = verify.check_diameter_witness(family, out.members, floor_sq,
                                           out.witness)
        report["outcome"] = {
            "witness": jsonio.segment_out(out.witness.segment),
            "squared_length": jsonio.frac_out(out.witness.squared_length),
            "members": list(out.members),
            "beta_observed": jsonio.frac_out(out.beta_observed),
        }
        report["verified"] = ok

    elif cmd == "colorful-diam":
        d = family.dim
        cover = build_cover(CapParams(d, args.delta))
        classes = _split_classes(family, 2 * d * len(cover.directions))
        out = colorful_helly_diameter(classes, args.delta)
        if isinstance(out, ClassWitness):
            ok = verify.check_diameter_witness(
                classes[out.index],
                range(len(classes[out.index])),
                (1 - args.delta) ** 2, out.witness)
            report["outcome"] = {"kind": "class", "index": out.index}
        else:
            ok = verify.check_colourful_diameter_counterexample(classes, out)
            report["outcome"] = {
                "kind": "rainbow",
                "choice": list(out.choice.indices),
                "diameter_sq": jsonio.frac_out(out.diameter_sq),
            }
        report["verified"] = ok

    elif cmd == "tverberg":
        out = tverberg_diameter(family, args.m, args.delta)
        ok = verify.check_tverberg(family, out, (1 - args.delta) ** 2)
        report["outcome"] = {
            "parts": [list(p) for p in out.parts],
            "witness": jsonio.segment_out(out.witness),
        }
        report["verified"] = ok

    elif cmd == "selection":
        out = selection_diameter(family, args.delta)
        ok = verify.check_selection(family, out, (1 - args.delta) ** 2)
        report["outcome"] = {
            "witness": jsonio.segment_out(out.witness),
            "covered": [list(s) for s in out.covered],
            "lambda_observed": jsonio.frac_out(out.lambda_observed),
        }
        report["verified"] = ok

    elif cmd == "net":
        out = weak_net_diameter(family, args.epsilon, args.delta,
                                exhaustive_cap=args.exhaustive_cap)
        got = verify.check_net(family, args.epsilon, out,
                               (1 - args.delta) ** 2)
        report["outcome"] = {
            "elements": [jsonio.segment_out(s) for s in out.elements],
            "exhaustive": out.exhaustive,
            "posterior_check": got,
        }
        report["verified"] = bool(got) if got is not None else out.exhaustive
    elif cmd == "pq":
        out = pq_transversal(family, args.p, args.q, args.delta,
                             exhaustive_cap=args.exhaustive_cap)
        ok = verify.check_transversal(family, out.transversal,
                                      (1 - args.delta) ** 2)
        report["outcome"] = {
            "tau_star": jsonio.frac_out(out.tau_star),
            "nu_star": jsonio.frac_out(out.nu_star),
            "transversal": [jsonio.segment_out(s)
                            for s in out.transversal.elements],
            "verified": ok,
        }
        report["verified"] = ok

    elif cmd == "partition":
        out = partition_large_intersections(family, args.delta,
                                            exhaustive_cap=args.exhaustive_cap)
        ok = verify.check_partition(family, out, (1 - args.delta) ** 2)
        report["outcome"] = {
            "parts": [list(p) for p in out.parts],
            "elements": [jsonio.segment_out(s) for s in out.elements],
            "verified": ok,
        }
        report["verified"] = ok

    else:
        raise ValueError(f"unhandled command {cmd}")

    if spec is not None:
        report["generator"] = {
            "dim": spec.dim, "count": spec.count,
            "shape": spec.shape, "seed": spec.seed,
        }
    report["timings"] = {"seconds": round(time.time() - t0, 3)}
    return _emit(report, args)


if __name__ == "__main__":
    sys.exit(main())
