"""Command-line front end.

One subcommand per calculus artifact: products, duals, degrees, word
enumeration, plain and ad-saturated closures, the simplicity and circle
checkers, the invertibles scan, and certificate verification.  Every run
is reproducible from its invocation; reports carry no timestamps or other
hidden state unless timing is explicitly requested, and a --threads value
never changes a single output byte.

Exit codes: 0 success or pass, 1 check failed, 2 usage error,
3 inconclusive (bound exhaustion).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .closure import (
    ClosureConfig,
    certificate_from_json,
    certificate_to_json,
    enumerate_words,
    generate,
    member,
    verify_certificate_detailed,
    witness,
)
from .fusion import element_to_json, mul_many
from .normality import (
    AdConfig,
    Ambient,
    ad_closure,
    check_circle_corollary,
    check_simplicity,
    find_invertibles,
)
from .words import degree, format_word, involute, parse_word, shortlex_key

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _parse_words(text: str) -> list[str]:
    return [parse_word(t) for t in text.split(",") if t]


def _add_output_flags(p):
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.add_argument("--report", metavar="FILE", help="write the JSON report to FILE")
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker threads for per-seed checks; never changes any output byte",
    )
    p.add_argument(
        "--timing",
        action="store_true",
        help="include wall-clock timing in the report (breaks byte-stability)",
    )


def _add_bound_flags(p, seed_len=False, ad_len=False):
    p.add_argument("--work-len", type=int, default=12,
                   help="maximum word length retained during saturation")
    p.add_argument("--report-len", type=int, default=6,
                   help="length up to which answers are reported")
    if ad_len:
        p.add_argument("--ad-len", type=int, default=8,
                       help="maximum conjugator length")
    if seed_len:
        p.add_argument("--seed-len", type=int, default=6,
                       help="maximum seed length for the sweep")


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="freefusion")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("mul", help="fusion product of simples")
    p.add_argument("words", nargs="+")
    _add_output_flags(p)

    p = sub.add_parser("dual", help="dual of a word")
    p.add_argument("word")
    _add_output_flags(p)

    p = sub.add_parser("degree", help="degree of a word (#0 - #1)")
    p.add_argument("word")
    _add_output_flags(p)

    p = sub.add_parser("enumerate", help="list words in shortlex order")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true", default=True)
    g.add_argument("--balanced", action="store_true")
    p.add_argument("--max-len", type=int, required=True)
    _add_output_flags(p)

    p = sub.add_parser("closure", help="bounded closure of a generated sub-semiring")
    p.add_argument("--gens", required=True, help="comma-separated words")
    p.add_argument("--member", help="query membership of a word")
    p.add_argument("--witness", help="emit a derivation certificate for a member")
    p.add_argument("--no-dual-closure", action="store_true",
                   help="do not close the generator set under duals")
    _add_bound_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("ad-closure", help="ad-saturated closure of seeds")
    p.add_argument("--seeds", required=True, help="comma-separated words")
    p.add_argument("--ambient", default="au", help="au, pu, or gen:w1,w2,...")
    p.add_argument("--member", help="query membership of a word")
    p.add_argument("--witness", help="emit a derivation certificate for a member")
    _add_bound_flags(p, ad_len=True)
    _add_output_flags(p)

    p = sub.add_parser("check-simple", help="per-seed simplicity check")
    p.add_argument("--ambient", default="pu", help="au, pu, or gen:w1,w2,...")
    p.add_argument("--cert-samples", type=int, default=3)
    _add_bound_flags(p, seed_len=True, ad_len=True)
    _add_output_flags(p)

    p = sub.add_parser("check-circle",
                       help="every nonempty seed reaches all balanced words")
    p.add_argument("--cert-samples", type=int, default=3)
    _add_bound_flags(p, seed_len=True, ad_len=True)
    _add_output_flags(p)

    p = sub.add_parser("invertibles", help="scan for invertible simples")
    p.add_argument("--max-len", type=int, required=True)
    _add_output_flags(p)

    p = sub.add_parser("verify-cert", help="replay a certificate file")
    p.add_argument("file")
    _add_output_flags(p)

    return parser


# --------------------------------------------------------------------------
# subcommand implementations: each returns (result payload, text lines, exit)


def _closure_payload(result, report_len):
    data = result.to_json()
    members = data.pop("members")
    data["member_count"] = len(members)
    data["members"] = [w for w in members if w == "e" or len(w) <= report_len]
    return data


def _membership_lines(w, m):
    reason = f" ({m.reason})" if m.reason else ""
    return [f"{format_word(w)}: {m.status}{reason}"]


def _witness_payload(result, w):
    cert = witness(result, w)
    if cert is None:
        return None
    ok, why = verify_certificate_detailed(cert, set(result.generators))
    payload = {
        "word": format_word(w),
        "generators": [
            format_word(g) for g in sorted(result.generators, key=shortlex_key)
        ],
        "verified": ok,
        "certificate": certificate_to_json(cert),
    }
    if why is not None:
        payload["error"] = why
    return payload


def _run_mul(args):
    words = [parse_word(t) for t in args.words]
    product = mul_many([{w: 1} for w in words])
    payload = {"factors": [format_word(w) for w in words],
               "element": element_to_json(product)}
    return payload, [json.dumps(element_to_json(product), separators=(",", ":"))], EXIT_OK


def _run_dual(args):
    w = parse_word(args.word)
    d = involute(w)
    return {"word": format_word(w), "dual": format_word(d)}, [format_word(d)], EXIT_OK


def _run_degree(args):
    w = parse_word(args.word)
    return {"word": format_word(w), "degree": degree(w)}, [str(degree(w))], EXIT_OK


def _run_enumerate(args):
    which = "balanced" if args.balanced else "all"
    words = enumerate_words(which, args.max_len)
    formatted = [format_word(w) for w in words]
    return {"filter": which, "max_len": args.max_len,
            "count": len(words), "words": formatted}, formatted, EXIT_OK


def _run_closure(args):
    gens = _parse_words(args.gens)
    config = ClosureConfig(
        work_len=args.work_len,
        report_len=args.report_len,
        require_dual_closure=not args.no_dual_closure,
    )
    result = generate(gens, config)
    payload = {"closure": _closure_payload(result, args.report_len)}
    lines = [f"members: {len(result.members)} (saturated: {result.saturated})"]
    if args.member is not None:
        w = parse_word(args.member)
        m = member(result, w)
        payload["membership"] = {"word": format_word(w), **m.to_json()}
        lines += _membership_lines(w, m)
    if args.witness is not None:
        w = parse_word(args.witness)
        wp = _witness_payload(result, w)
        payload["witness"] = wp
        lines.append(
            f"witness for {format_word(w)}: "
            + ("none" if wp is None else json.dumps(wp["certificate"], separators=(",", ":")))
        )
    return payload, lines, EXIT_OK


def _run_ad_closure(args):
    seeds = _parse_words(args.seeds)
    ambient = Ambient.parse(args.ambient)
    config = AdConfig(
        closure=ClosureConfig(work_len=args.work_len, report_len=args.report_len),
        ad_len=args.ad_len,
    )
    result = ad_closure(seeds, ambient, config)
    payload = {"ambient": ambient.describe(),
               "closure": _closure_payload(result, args.report_len)}
    lines = [f"members: {len(result.members)} (saturated: {result.saturated})"]
    if args.member is not None:
        w = parse_word(args.member)
        m = member(result, w)
        payload["membership"] = {"word": format_word(w), **m.to_json()}
        lines += _membership_lines(w, m)
    if args.witness is not None:
        w = parse_word(args.witness)
        wp = _witness_payload(result, w)
        payload["witness"] = wp
        lines.append(
            f"witness for {format_word(w)}: "
            + ("none" if wp is None else json.dumps(wp["certificate"], separators=(",", ":")))
        )
    return payload, lines, EXIT_OK


def _verdict_exit(verdict: str) -> int:
    if verdict == "pass":
        return EXIT_OK
    if verdict == "fail":
        return EXIT_FAIL
    return EXIT_INCONCLUSIVE


def _report_lines(report):
    lines = [f"check: {report.check}", f"ambient: {report.ambient}",
             f"seeds: {len(report.seeds)}", f"verdict: {report.verdict}"]
    for r in report.seeds:
        if r.status != "pass":
            missing = ",".join(
                format_word(w)
                for w in r.missing_certified + r.missing_within_bound
            )
            lines.append(f"seed {format_word(r.seed)}: {r.status} missing {missing}")
    return lines


def _run_check_simple(args):
    ambient = Ambient.parse(args.ambient)
    config = AdConfig(
        closure=ClosureConfig(work_len=args.work_len, report_len=args.report_len),
        ad_len=args.ad_len,
        seed_len=args.seed_len,
    )
    report = check_simplicity(
        ambient, config, cert_samples=args.cert_samples, threads=args.threads
    )
    return report.to_json(), _report_lines(report), _verdict_exit(report.verdict)


def _run_check_circle(args):
    config = AdConfig(
        closure=ClosureConfig(work_len=args.work_len, report_len=args.report_len),
        ad_len=args.ad_len,
        seed_len=args.seed_len,
    )
    report = check_circle_corollary(
        config, cert_samples=args.cert_samples, threads=args.threads
    )
    return report.to_json(), _report_lines(report), _verdict_exit(report.verdict)


def _run_invertibles(args):
    found = find_invertibles(args.max_len)
    formatted = [format_word(w) for w in found]
    return {"max_len": args.max_len, "invertibles": formatted}, formatted, EXIT_OK


def _run_verify_cert(args):
    with open(args.file, encoding="utf-8") as fh:
        doc = json.load(fh)
    gens = {parse_word(g) for g in doc.get("generators", [])}
    cert = certificate_from_json(doc["certificate"])
    ok, why = verify_certificate_detailed(cert, gens)
    payload = {"file": args.file, "valid": ok}
    if why is not None:
        payload["error"] = why
    lines = ["valid" if ok else f"invalid: {why}"]
    return payload, lines, EXIT_OK if ok else EXIT_FAIL


_HANDLERS = {
    "mul": _run_mul,
    "dual": _run_dual,
    "degree": _run_degree,
    "enumerate": _run_enumerate,
    "closure": _run_closure,
    "ad-closure": _run_ad_closure,
    "check-simple": _run_check_simple,
    "check-circle": _run_check_circle,
    "invertibles": _run_invertibles,
    "verify-cert": _run_verify_cert,
}

# Flags that are contractually output-neutral are left out of the
# invocation echo so that, e.g., --threads 1 and --threads 8 runs write
# byte-identical reports.
_ECHO_EXCLUDED = {"subcommand", "json", "report", "threads", "timing"}


def _invocation_echo(args) -> dict:
    return {
        "subcommand": args.subcommand,
        "args": {
            k.replace("_", "-"): v
            for k, v in sorted(vars(args).items())
            if k not in _ECHO_EXCLUDED
        },
    }


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    start = time.monotonic()
    try:
        payload, lines, code = _HANDLERS[args.subcommand](args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = time.monotonic() - start

    document = {
        "version": __version__,
        "invocation": _invocation_echo(args),
        "result": payload,
        "timing": {"seconds": round(elapsed, 6)} if args.timing else None,
    }
    rendered = json.dumps(document, indent=2) + "\n"
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    if args.json:
        sys.stdout.write(rendered)
    else:
        for line in lines:
            print(line)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
