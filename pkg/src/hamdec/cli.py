"""Command-line interface.

Exit codes, relied on by scripts:

* 0: success (admissible / constructed / verified / path found / clean sweep)
* 1: negative result (not admissible, verification failed)
* 2: input error (unparseable flags or files, bad sizes, bad ranges)
* 3: admissible but no known construction family applies
* 4: search exhausted (no path) or sweep found failing multisets
"""
from __future__ import annotations

import argparse
import os
import re
import sys

from .admissibility import analyze
from .buratti import find_path, sweep
from .constructions import construct_with_family
from .document import CertificateDocument, load_certificate
from .errors import (
    BadMultisetSize,
    CertificateFormatError,
    HamdecError,
    NotAdmissible,
    NotPrime,
    RepeatedVertex,
    Unsupported,
    WindowTooSmall,
)
from .model import ConnectionSet
from .figures import FORMATS, render_figure
from .verifier import verify_certificate, window_oracle

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_EXHAUSTED = 4


class UsageError(Exception):
    pass


def _parse_set(text: str) -> ConnectionSet:
    try:
        entries = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"cannot parse connection set {text!r}: {exc}") from exc
    if not entries:
        raise UsageError("connection set is empty")
    if any(a < 1 for a in entries):
        raise UsageError("generators must be positive integers")
    return ConnectionSet(entries)


def _parse_lengths(text: str) -> list[int]:
    """Comma-separated lengths; 'vxn' or 'v×n' repeats v n times."""
    lengths: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        m = re.fullmatch(r"(\d+)\s*[x×]\s*(\d+)", part)
        if m:
            lengths.extend([int(m.group(1))] * int(m.group(2)))
            continue
        try:
            lengths.append(int(part))
        except ValueError as exc:
            raise UsageError(f"cannot parse length entry {part!r}") from exc
    if not lengths:
        raise UsageError("length multiset is empty")
    return lengths


def _parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if not m:
        raise UsageError(f"cannot parse range {text!r}, expected like 0..12")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo >= hi:
        raise UsageError(f"range {text!r} is empty")
    return lo, hi


def _default_jobs() -> int:
    env = os.environ.get("HAMDEC_JOBS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def cmd_check(args) -> int:
    s = _parse_set(args.set)
    report = analyze(s)
    print(f"S+ = {s}")
    print(f"gcd = {report.gcd}  (connected components: {report.component_count})")
    total = sum(s.s_plus)
    print(f"parity: sum(S+) = {total}, |S+| = {len(s)} -> "
          f"{'ok' if report.parity_ok else 'violated'}")
    print(f"admissible: {'yes' if report.admissible else 'no'}")
    return EXIT_OK if report.admissible else EXIT_FAIL


def cmd_construct(args) -> int:
    s = _parse_set(args.set)
    try:
        family, cert = construct_with_family(s)
    except NotAdmissible as exc:
        print(f"not admissible: {exc}")
        return EXIT_FAIL
    except Unsupported as exc:
        print(f"unsupported: {exc}")
        return EXIT_UNSUPPORTED
    print(f"family:  {family}")
    print(f"S+:      {cert.connection_set}")
    print(f"period:  {cert.period}")
    print(f"starter: [{', '.join(map(str, cert.starter.vertices))}]")
    print(f"offsets: {{{', '.join(map(str, cert.offsets))}}}")
    if args.out:
        doc = CertificateDocument.from_certificate(
            cert, provenance=f"{family}(S+={cert.connection_set})")
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(doc.to_json())
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        _, cert = load_certificate(args.cert)
    except CertificateFormatError as exc:
        print(f"malformed certificate: {exc}")
        return EXIT_USAGE
    except RepeatedVertex as exc:
        print(f"exact check: rejected ({exc})")
        print("failures: PathBroken")
        return EXIT_FAIL

    report = verify_certificate(cert)
    print(f"exact check: {'accepted' if report.accepted else 'rejected'}")
    if report.failures:
        print(f"failures: {', '.join(report.failures)}")
    try:
        check = window_oracle(cert, args.window_periods)
    except WindowTooSmall as exc:
        print(f"window oracle: {exc}")
        return EXIT_USAGE
    print(f"window oracle ({args.window_periods} periods): "
          f"{'accepted' if check.accepted else 'rejected'}")
    if check.failure:
        print(f"window failure: {check.failure}")
    return EXIT_OK if report.accepted and check.accepted else EXIT_FAIL


def cmd_buratti(args) -> int:
    if (args.sweep_prime is None) == (args.k is None):
        raise UsageError("use either --k with --lengths, or --sweep-prime")

    if args.k is not None:
        if args.lengths is None:
            raise UsageError("--k requires --lengths")
        lengths = _parse_lengths(args.lengths)
        try:
            outcome = find_path(args.k, lengths)
        except BadMultisetSize as exc:
            print(f"bad multiset: {exc}")
            return EXIT_USAGE
        if outcome.found:
            print(f"found: [{', '.join(map(str, outcome.witness))}]  "
                  f"(nodes expanded: {outcome.nodes_expanded})")
            return EXIT_OK
        print(f"exhausted: no path realizes the multiset  "
              f"(nodes expanded: {outcome.nodes_expanded})")
        return EXIT_EXHAUSTED

    try:
        report = sweep(args.sweep_prime, sample=args.sample, seed=args.seed,
                       jobs=args.jobs)
    except NotPrime as exc:
        print(f"bad modulus: {exc}")
        return EXIT_USAGE
    for lengths, outcome in report.entries:
        witness = ",".join(map(str, outcome.witness)) if outcome.found else "-"
        print(f"{','.join(map(str, lengths))}\t{outcome.status}\t{witness}\t"
              f"{outcome.nodes_expanded}")
    scope = f"{len(report.entries)} of {report.total}" if report.sampled else str(report.total)
    print(f"sweep p={report.p}: {scope} multisets, {len(report.failures)} failures, "
          f"{report.elapsed:.1f}s")
    return EXIT_OK if report.clean else EXIT_EXHAUSTED


def cmd_figure(args) -> int:
    try:
        _, cert = load_certificate(args.cert)
    except CertificateFormatError as exc:
        print(f"malformed certificate: {exc}")
        return EXIT_USAGE
    except RepeatedVertex as exc:
        print(f"broken certificate: {exc}")
        return EXIT_FAIL
    lo, hi = _parse_range(args.range)
    if hi - lo < cert.period:
        print(f"range {lo}..{hi} does not cover one period ({cert.period})")
        return EXIT_USAGE
    text = render_figure(cert, lo, hi, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamdec",
        description="Hamilton decompositions of infinite circulant graphs: "
                    "construct, verify, search, draw.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="test the necessary conditions for a connection set")
    p_check.add_argument("--set", required=True, metavar="S",
                         help="positive generators, comma separated, e.g. '1,2,4'")
    p_check.set_defaults(func=cmd_check)

    p_construct = sub.add_parser("construct", help="build and self-verify a certificate")
    p_construct.add_argument("--set", required=True, metavar="S")
    p_construct.add_argument("--out", metavar="FILE", help="write the certificate as JSON")
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", help="verify a certificate file exactly and by window")
    p_verify.add_argument("--cert", required=True, metavar="FILE")
    p_verify.add_argument("--window-periods", type=int, default=5, metavar="N")
    p_verify.set_defaults(func=cmd_verify)

    p_buratti = sub.add_parser(
        "buratti", help="search for length-constrained Hamilton paths on Z_k")
    p_buratti.add_argument("--k", type=int, metavar="K")
    p_buratti.add_argument("--lengths", metavar="L",
                           help="multiset, e.g. '1,1,2,2' or '3x8'")
    p_buratti.add_argument("--sweep-prime", type=int, metavar="P",
                           help="run every multiset for an odd prime")
    p_buratti.add_argument("--sample", type=int, metavar="N",
                           help="sample N multisets instead of sweeping all")
    p_buratti.add_argument("--seed", type=int, default=0, metavar="SEED")
    p_buratti.add_argument("--jobs", type=int, default=_default_jobs(), metavar="J")
    p_buratti.set_defaults(func=cmd_buratti)

    p_figure = sub.add_parser("figure", help="emit an arc diagram for a certificate")
    p_figure.add_argument("--cert", required=True, metavar="FILE")
    p_figure.add_argument("--range", required=True, metavar="A..B")
    p_figure.add_argument("--format", choices=FORMATS, default="svg")
    p_figure.add_argument("--out", metavar="FILE")
    p_figure.set_defaults(func=cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, HamdecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
