"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 when a verification command
records a finding (an inequality violation, an oversized fiber, a mismatch).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__
from .arrays import format_array, format_triple
from .core import (
    ComponentType,
    MapError,
    canonical_map,
    format_cycles,
    format_map,
    parse_cycles,
    parse_map,
)
from .enumeration import Theorem31Entry, ratio_minima, scan_conjecture, verify_theorem31, w_table
from .tracking import TrackInstance, instances, punctured_type, track_counts, verify_reduction

SWEEP_LIMIT = 8
SINGLE_LIMIT = 10
SHARPNESS_FIXTURE = "6->1; 5->2; (3 4)"


class UsageError(Exception):
    pass


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _check_n(n: int, limit: int, force: bool) -> None:
    if n < 1:
        raise UsageError("n must be positive")
    if n > limit and not force:
        raise UsageError(f"n={n} is above the exhaustive limit {limit}; pass --force")


def _parse_type(text: str) -> ComponentType:
    try:
        return ComponentType.parse(text)
    except MapError as exc:
        raise UsageError(str(exc)) from None


def _parse_instance(d: str, e: str, n: int | None) -> TrackInstance:
    try:
        labels = [int(v) for v in e.split(",") if v.strip()]
        D = parse_cycles(d, None)
        size = max([n or 0, len(D), *labels])
        return TrackInstance(parse_cycles(d, size), frozenset(labels))
    except (MapError, ValueError) as exc:
        raise UsageError(f"bad instance: {exc}") from None


def _entry_json(e: Theorem31Entry) -> dict:
    return {
        "type": str(e.ctype),
        "n": e.ctype.n,
        "counts": {str(k): v for k, v in e.counts.items()},
        "w_max": e.w_max,
        "w_next": e.w_next,
        "ratio": _frac(e.ratio),
        "sharp": e.sharp,
        "violation": e.violation,
        "max_fiber": e.max_fiber,
        "mismatches": e.mismatches,
    }


def _ratio_json(r) -> dict:
    return {"type": str(r.ctype), "n": r.ctype.n, "k": r.k, "w_k": r.w_k,
            "w_k_plus_1": r.w_next, "ratio": _frac(r.ratio), "small_n": r.small_n}


def cmd_wtable(args):
    t = _parse_type(args.type)
    _check_n(t.n, SINGLE_LIMIT, args.force)
    table = w_table(t, args.workers)
    report = {"type": str(t), "n": t.n, "counts": {str(k): v for k, v in table.counts.items()},
              "total": table.total()}
    rows = [{"type": str(t), "k": k, "count": v} for k, v in table.counts.items()]
    text = [f"{t}  n={t.n}"] + [f"  W_{k} = {v}" for k, v in table.counts.items()]
    return report, rows, text, 0


def cmd_verify_thm31(args):
    _check_n(args.n_max, SWEEP_LIMIT, args.force)
    if args.n_max < 3:
        raise UsageError("--n-max must be at least 3")
    rep = verify_theorem31(args.n_max, args.n_min, args.workers, not args.no_fibers)
    entries = [_entry_json(e) for e in rep.entries]
    report = {
        "entries": entries,
        "ratios": [{"type": e["type"], "ratio": e["ratio"]} for e in entries],
        "witnesses": [str(e.ctype) for e in rep.witnesses],
        "violations": [str(e.ctype) for e in rep.violations],
        "fiber_exceptions": [str(e.ctype) for e in rep.fiber_exceptions],
        "ok": rep.ok,
    }
    rows = [{k: v for k, v in e.items() if k != "counts"} for e in entries]
    text = [
        f"{e['type']:<28} W_top={e['w_max']:<6} W_next={e['w_next']:<6} ratio={e['ratio']:<8}"
        + (" SHARP" if e["sharp"] else "") + (" VIOLATION" if e["violation"] else "")
        for e in entries
    ]
    text.append(f"{len(entries)} types, {len(report['violations'])} violations, "
                f"{len(report['witnesses'])} sharpness witnesses, "
                f"{len(report['fiber_exceptions'])} fiber exceptions")
    return report, rows, text, 0 if rep.ok else 2


def cmd_scan_conjecture(args):
    _check_n(args.n_max, SWEEP_LIMIT, args.force)
    if args.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    reps = list(scan_conjecture(args.n_max, args.n_min, args.workers))
    per_n, best = ratio_minima(reps)
    report = {
        "ratios": [_ratio_json(r) for r in reps],
        "min_by_n": {str(n): _ratio_json(r) for n, r in per_n.items()},
        "overall_min": _ratio_json(best) if best else None,
    }
    rows = report["ratios"]
    text = [f"n={n}: min W_k/W_k+1 = {_frac(r.ratio)} at {r.ctype}, k={r.k}"
            + (" (n <= 6)" if r.small_n else "") for n, r in per_n.items()]
    if best:
        text.append(f"overall: {_frac(best.ratio)} at {best.ctype}, k={best.k}")
    return report, rows, text, 0


def _instance_json(inst: TrackInstance) -> dict:
    return {"D": format_cycles(inst.D), "E": sorted(inst.E), "n": inst.n}


def cmd_track(args):
    inst = _parse_instance(args.d, args.e, args.n)
    _check_n(inst.n, SINGLE_LIMIT, args.force)
    rep = track_counts(inst, force=True)
    report = {
        "instance": _instance_json(inst),
        "theta": rep.theta,
        "histogram": {str(j): v for j, v in rep.histogram.items()},
        "hypothesis": rep.hypothesis,
        "reduction_type": str(punctured_type(inst)),
    }
    rows = [{"j": j, "count": v} for j, v in rep.histogram.items()]
    text = [f"theta = {rep.theta}  hypothesis = {rep.hypothesis}  "
            f"reduction type = {report['reduction_type']}"]
    text += [f"  {v} long cycles give {j} E-free cycles" for j, v in rep.histogram.items()]
    return report, rows, text, 0


def cmd_verify_reduction(args):
    if args.d is not None:
        if args.e is None:
            raise UsageError("--d needs --e")
        inst = _parse_instance(args.d, args.e, args.n)
        _check_n(inst.n, SINGLE_LIMIT, args.force)
        todo = [inst]
    else:
        if args.n_max is None:
            raise UsageError("give either --d/--e or --n-max")
        _check_n(args.n_max, SWEEP_LIMIT, args.force)
        todo = [i for n in range(2, args.n_max + 1) for i in instances(n, not args.no_dedupe)]
    results = []
    for inst in todo:
        r = verify_reduction(inst, force=True)
        results.append({
            **_instance_json(inst),
            "reduction_type": str(r.ctype),
            "histogram": {str(j): v for j, v in r.histogram.items()},
            "w_counts": {str(k): v for k, v in r.w_counts.items()},
            "theta": r.theta_observed,
            "hypothesis": inst.hypothesis,
            "type_condition": r.type_condition,
            "inequality": r.inequality,
            "findings": r.findings,
        })
    bad = [r for r in results if r["findings"]]
    report = {"instances": results, "mismatches": len(bad)}
    rows = [{k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in r.items()}
            for r in results]
    text = [f"{r['D']} E={r['E']}: theta={r['theta']} type={r['reduction_type']}"
            + ("" if not r["findings"] else "  FINDINGS: " + "; ".join(r["findings"]))
            for r in results]
    text.append(f"{len(results)} instances, {len(bad)} with findings")
    return report, rows, text, 2 if bad else 0


def cmd_phi_demo(args):
    from .enumeration import enumerate_arrays
    from .phi import PhiDomainError, check_diagonal, fibers, phi, preimages_direct

    try:
        D = parse_map(args.d) if args.d else parse_map(SHARPNESS_FIXTURE)
        if args.type:
            D = canonical_map(_parse_type(args.type))
        _check_n(len(D), SINGLE_LIMIT, args.force)
        t = check_diagonal(D)
    except (MapError, PhiDomainError) as exc:
        raise UsageError(str(exc)) from None
    arrays = list(enumerate_arrays(D, 1))
    forward = []
    for psi, k in arrays:
        if k == t.max_components:
            image, case = phi(psi, D)
            forward.append({"array": format_array(psi), "image": format_array(image),
                            "case": case.tag, "m": case.m, "triple": format_triple(case.triple)})
    fib = fibers(D, arrays)
    fiber_list = []
    mismatches = 0
    for psi2, pre in fib.items():
        direct = preimages_direct(psi2, D)
        agree = direct == set(pre)
        mismatches += not agree
        fiber_list.append({"array": format_array(psi2), "size": len(pre),
                           "preimages": sorted(format_array(p) for p in pre),
                           "direct_agrees": agree})
    report = {"diagonal": format_map(D), "type": str(t), "forward": forward, "fibers": fiber_list,
              "max_fiber": max((f["size"] for f in fiber_list), default=0),
              "mismatches": mismatches}
    rows = [{"array": f["array"], "image": f["image"], "case": f["case"], "m": f["m"],
             "triple": f["triple"]} for f in forward]
    text = [f"diagonal {report['diagonal']}  type {t}"]
    text += [f"  {f['array']}  ->  {f['image']}   {f['case']}, m={f['m']}, h={f['triple']}"
             for f in forward]
    text += [f"  fiber of {f['array']}: {f['size']} preimage(s)" for f in fiber_list]
    bad = mismatches or report["max_fiber"] > 2
    return report, rows, text, 2 if bad else 0


COMMANDS = {
    "wtable": cmd_wtable,
    "verify-thm31": cmd_verify_thm31,
    "scan-conjecture": cmd_scan_conjecture,
    "track": cmd_track,
    "verify-reduction": cmd_verify_reduction,
    "phi-demo": cmd_phi_demo,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bijfact",
        description="Enumerate and verify factorizations of bijections through two-row arrays.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--force", action="store_true",
                        help="allow sizes above the exhaustive limit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wtable", parents=[common], help="W_k for one component-type")
    p.add_argument("--type", required=True, help='component-type, e.g. "L=1,1;M=2"')

    p = sub.add_parser("verify-thm31", parents=[common],
                       help="check the one-half inequality and the fiber bound for all types")
    p.add_argument("--n-max", type=int, default=SWEEP_LIMIT)
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--no-fibers", action="store_true", help="skip the preimage audit")

    p = sub.add_parser("scan-conjecture", parents=[common], help="ratios W_k / W_k+1")
    p.add_argument("--n-max", type=int, default=SWEEP_LIMIT)
    p.add_argument("--n-min", type=int, default=2)

    p = sub.add_parser("track", parents=[common], help="E-free cycle histogram of D o gamma")
    p.add_argument("--d", required=True, help='permutation in cycle notation, e.g. "(1 2)(3 4)"')
    p.add_argument("--e", required=True, help="comma separated labels, e.g. 1,2")
    p.add_argument("--n", type=int, default=None, help="size when D leaves labels implicit")

    p = sub.add_parser("verify-reduction", parents=[common],
                       help="compare label tracking with arrays on the punctured map")
    p.add_argument("--d")
    p.add_argument("--e")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None, help="sweep all instances up to this size")
    p.add_argument("--no-dedupe", action="store_true", help="keep symmetric E-patterns")

    p = sub.add_parser("phi-demo", parents=[common], help="forward images and fibers of the map")
    p.add_argument("--d", default=None, help=f'diagonal, default "{SHARPNESS_FIXTURE}"')
    p.add_argument("--type", default=None, help="use the canonical diagonal of this type")
    return parser


def _config(args) -> dict:
    skip = {"output", "workers", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def render(args, report, rows, text) -> str:
    if args.format == "json":
        return json.dumps({"command": args.command, "config": _config(args), **report},
                          indent=2) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        buf.write("# " + json.dumps(_config(args), sort_keys=True) + "\n")
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        return buf.getvalue()
    head = "# " + " ".join(f"{k}={v}" for k, v in _config(args).items() if v is not None)
    return "\n".join([head, *text]) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if args.workers < 1:
        print("error: --workers must be positive", file=sys.stderr)
        return 1
    try:
        report, rows, text, status = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = render(args, report, rows, text)
    if args.output == "-":
        sys.stdout.write(out)
    else:
        with open(args.output, "w") as fh:
            fh.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
