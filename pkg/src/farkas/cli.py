"""Command-line interface.

Reports go to stdout as JSON (schema "1"); a short human-readable summary
goes to stderr unless --quiet.  Exit codes are a stable contract:

    0  success (and: representable / valid certificate)
    1  negative decision (not representable / invalid certificate)
    2  parse or input error
    3  enumeration limit exceeded
    4  oracle or cross-validation disagreement
    5  class check failed (family outside the rule's class)
    6  disconnected graph
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .boxes import (
    Box,
    Certificate,
    certificate_rhs,
    decide_afr,
    decide_wfr,
    verify_certificate,
)
from .classify import is_afr, is_afr_oracle, is_wfr, is_wfr_oracle
from .errors import (
    ClassCheckError,
    DisconnectedGraphError,
    FarkasError,
    LimitExceeded,
    ParseError,
)
from .formats import (
    fmt_int,
    fmt_int_vec,
    fmt_rational,
    fmt_rational_vec,
    parse_graph_text,
    parse_int_csv,
    parse_rational_csv,
    parse_vector_text,
)
from .graphs import (
    cross_validate,
    is_almost_farkas_graph,
    is_weakly_farkas_graph,
)
from .lattice import dot
from .limits import DEFAULT_LIMITS
from .relations import circuit_stats, enumerate_circuits

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3
EXIT_DISAGREEMENT = 4
EXIT_CLASS = 5
EXIT_DISCONNECTED = 6


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")


def _limits(args):
    if args.limit is not None:
        if args.limit < 1:
            raise ParseError("--limit must be a positive integer")
        return DEFAULT_LIMITS.override_all(args.limit)
    return DEFAULT_LIMITS


def _family_json(fam) -> list[list[str]]:
    return [fmt_int_vec(v) for v in fam]


def _circuit_json(circuit):
    max_abs, count_ge2 = circuit_stats(circuit)
    return {
        "support": [fmt_int(i) for i in circuit.support],
        "coeffs": {fmt_int(i): fmt_int(c) for i, c in zip(circuit.support, circuit.coeffs)},
        "max_abs": fmt_int(max_abs),
        "count_ge2": fmt_int(count_ge2),
    }


def cmd_circuits(args):
    fam = parse_vector_text(_read(args.vectors))
    circuits = enumerate_circuits(fam)
    report = {
        "inputs": {"vectors": _family_json(fam)},
        "result": {
            "count": fmt_int(len(circuits)),
            "circuits": [_circuit_json(c) for c in circuits],
        },
    }
    summary = [f"{len(circuits)} circuit(s)"]
    for c in circuits:
        terms = ", ".join(f"{c2}*v{i}" for i, c2 in zip(c.support, c.coeffs))
        summary.append(f"  {terms} = 0")
    return report, EXIT_OK, summary


def cmd_classify(args):
    fam = parse_vector_text(_read(args.vectors))
    limits = _limits(args)
    result = {}
    summary = []
    disagreement = False
    if args.mode in ("afr", "both"):
        verdict = is_afr(fam)
        result["afr"] = {
            "is_afr": verdict.is_afr,
            "violating_circuit": (
                _circuit_json(verdict.violating_circuit)
                if verdict.violating_circuit
                else None
            ),
        }
        summary.append(f"almost-Farkas-related: {verdict.is_afr}")
        if args.oracle:
            oracle = is_afr_oracle(fam, limits)
            agree = oracle == verdict.is_afr
            result["afr"]["oracle"] = oracle
            result["afr"]["oracle_agreement"] = agree
            summary.append(f"  oracle: {oracle} ({'agrees' if agree else 'DISAGREES'})")
            disagreement |= not agree
    if args.mode in ("wfr", "both"):
        verdict = is_wfr(fam, limits)
        counter = None
        if verdict.counterexample is not None:
            pattern, witness = verdict.counterexample
            counter = {
                "pattern": fmt_int_vec(pattern.values),
                "special_index": fmt_int(pattern.special_index),
                "rational_witness": fmt_rational_vec(witness),
            }
        result["wfr"] = {"is_wfr": verdict.is_wfr, "counterexample": counter}
        summary.append(f"weakly-Farkas-related: {verdict.is_wfr}")
        if args.oracle:
            oracle = is_wfr_oracle(fam, limits)
            agree = oracle == verdict.is_wfr
            result["wfr"]["oracle"] = oracle
            result["wfr"]["oracle_agreement"] = agree
            summary.append(f"  oracle: {oracle} ({'agrees' if agree else 'DISAGREES'})")
            disagreement |= not agree
    report = {
        "inputs": {"vectors": _family_json(fam), "mode": args.mode},
        "result": result,
    }
    return report, EXIT_DISAGREEMENT if disagreement else EXIT_OK, summary


def _parse_box(args, size: int) -> Box:
    lower = parse_int_csv(args.lower, "--lower")
    upper = parse_int_csv(args.upper, "--upper")
    if len(lower) != size or len(upper) != size:
        raise ParseError(f"--lower/--upper must list {size} integers")
    try:
        return Box(lower, upper)
    except ValueError as exc:
        raise ParseError(str(exc))


def cmd_decide(args):
    fam = parse_vector_text(_read(args.vectors))
    limits = _limits(args)
    box = _parse_box(args, fam.size)
    w = parse_int_csv(args.w, "--w")
    rule = args.rule
    check_class = not args.no_class_check
    if rule == "auto":
        if args.no_class_check:
            raise ParseError("--rule auto cannot be combined with --no-class-check")
        if is_afr(fam).is_afr:
            rule = "afr"
        elif box.is_strict and is_wfr(fam, limits).is_wfr:
            rule = "wfr"
        else:
            raise ClassCheckError(
                "family fits neither decision rule (or the box is not strict)"
            )
        check_class = False  # already established
    decide = decide_afr if rule == "afr" else decide_wfr
    decision = decide(fam, box, w, check_class=check_class, limits=limits)
    report = {
        "inputs": {
            "vectors": _family_json(fam),
            "lower": fmt_int_vec(box.lower),
            "upper": fmt_int_vec(box.upper),
            "w": fmt_int_vec(w),
            "rule": rule,
        },
        "result": {
            "representable": decision.representable,
            "reason": decision.reason.value,
            "solution": fmt_int_vec(decision.solution) if decision.solution else None,
        },
    }
    summary = [
        f"rule: {rule}",
        f"representable: {decision.representable} ({decision.reason.value})",
    ]
    if decision.solution:
        summary.append(f"solution: {list(decision.solution)}")
    return report, EXIT_OK if decision.representable else EXIT_NEGATIVE, summary


def cmd_certify(args):
    fam = parse_vector_text(_read(args.vectors))
    box = _parse_box(args, fam.size)
    w = parse_int_csv(args.w, "--w")
    u = parse_rational_csv(args.u, "--u")
    try:
        cert = Certificate(u)
    except ValueError as exc:
        raise ParseError(str(exc))
    lhs = dot(cert.u, w)
    rhs = certificate_rhs(cert, fam, box)
    valid = verify_certificate(cert, fam, box, w)
    report = {
        "inputs": {
            "vectors": _family_json(fam),
            "lower": fmt_int_vec(box.lower),
            "upper": fmt_int_vec(box.upper),
            "w": fmt_int_vec(w),
            "u": fmt_rational_vec(cert.u),
        },
        "result": {
            "lhs": fmt_rational(lhs),
            "rhs": fmt_rational(rhs),
            "valid": valid,
        },
    }
    summary = [
        f"<u,w> = {fmt_rational(lhs)}, box maximum = {fmt_rational(rhs)}",
        f"certificate valid: {valid}",
    ]
    return report, EXIT_OK if valid else EXIT_NEGATIVE, summary


def _witness_json(witness):
    if witness is None:
        return None
    c1, c2, note = witness
    return {
        "cycle1": list(c1.vertex_sequence),
        "cycle2": list(c2.vertex_sequence),
        "note": note,
    }


def cmd_graph(args):
    g = parse_graph_text(_read(args.graph))
    limits = _limits(args)
    result = {}
    summary = []
    disagreement = False
    almost = weak = None
    if args.check in ("almost", "both"):
        verdict = is_almost_farkas_graph(g, limits)
        almost = verdict.almost_farkas
        result["almost_farkas"] = almost
        result["almost_witness"] = _witness_json(verdict.witness)
        summary.append(f"almost Farkas graph: {almost}")
    if args.check in ("weak", "both"):
        verdict = is_weakly_farkas_graph(g, limits)
        weak = verdict.weakly_farkas
        result["weakly_farkas"] = weak
        result["weak_witness"] = _witness_json(verdict.witness)
        summary.append(f"weakly Farkas graph: {weak}")
    if args.cross_validate:
        agree = cross_validate(g, limits)
        result["cross_validate"] = {"agreement": agree}
        summary.append(f"vector classifiers agree: {agree}")
        disagreement = not agree
    report = {
        "inputs": {
            "vertices": list(g.vertices),
            "edges": [[a, b] for a, b in g.edge_labels()],
            "check": args.check,
        },
        "result": result,
    }
    return report, EXIT_DISAGREEMENT if disagreement else EXIT_OK, summary


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true",
                        help="suppress the stderr summary")
    common.add_argument("--limit", type=int, default=None, metavar="N",
                        help="override every enumeration limit with N")

    parser = argparse.ArgumentParser(
        prog="farkas",
        description="Exact integer-rounding classification, box decisions "
                    "and certificates for integer vector families and graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("circuits", parents=[common],
                       help="enumerate the elementary integral relations")
    p.add_argument("vectors", help="vector family file")
    p.set_defaults(func=cmd_circuits)

    p = sub.add_parser("classify", parents=[common],
                       help="decide the rounding classes of a family")
    p.add_argument("vectors")
    p.add_argument("--mode", choices=("afr", "wfr", "both"), default="both")
    p.add_argument("--oracle", action="store_true",
                   help="also run the definitional brute-force oracles")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decide", parents=[common],
                       help="decide box-constrained integer representability")
    p.add_argument("vectors")
    p.add_argument("--lower", required=True, metavar="a1,..,am")
    p.add_argument("--upper", required=True, metavar="b1,..,bm")
    p.add_argument("--w", required=True, metavar="c1,..,cn")
    p.add_argument("--rule", choices=("afr", "wfr", "auto"), default="auto")
    p.add_argument("--no-class-check", action="store_true",
                   help="skip verifying that the family is in the rule's class")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("certify", parents=[common],
                       help="evaluate a rational infeasibility certificate")
    p.add_argument("vectors")
    p.add_argument("--lower", required=True, metavar="a1,..,am")
    p.add_argument("--upper", required=True, metavar="b1,..,bm")
    p.add_argument("--w", required=True, metavar="c1,..,cn")
    p.add_argument("--u", required=True, metavar="q1,..,qn",
                   help="rational direction, entries like 3 or -1/2")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("graph", parents=[common],
                       help="check the odd-cycle graph criteria")
    p.add_argument("graph", help="edge list file")
    p.add_argument("--check", choices=("almost", "weak", "both"), default="both")
    p.add_argument("--cross-validate", action="store_true",
                   help="also run the vector classifiers on the edge vectors")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter_ns()
    try:
        report, code, summary = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ClassCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (FarkasError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    elapsed_us = (time.perf_counter_ns() - started) // 1000
    envelope = {
        "schema": "1",
        "command": args.command,
        **report,
        "timings": {"total_us": fmt_int(elapsed_us)},
    }
    json.dump(envelope, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if not args.quiet:
        for line in summary:
            print(line, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
