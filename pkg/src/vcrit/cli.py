"""Command-line interface.

Exit status: 0 success / true, 1 false / negative verdict, 2 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence, TextIO

from .catalog import base_graph
from .certify import DEFAULT_MAX_LEVEL, Certificate, CertificationError, certify, verify_certificate
from .coloring import chromatic_number
from .criticality import is_k_vertex_critical
from .detectors import family, freeness_witness
from .expansion import count_table, critical_profiles, enumerate_k_critical, format_profile
from .graph import Graph
from .graph6 import Graph6Error, decode_graph6, encode_graph6


class UsageError(Exception):
    pass


def _read_graphs(source: Optional[str], stdin: TextIO) -> list[Graph]:
    """A graph6 string, a file of graph6 lines, or stdin when absent or '-'."""
    if source is None or source == "-":
        lines: Iterable[str] = stdin.read().splitlines()
    elif os.path.isfile(source):
        lines = Path(source).read_text().splitlines()
    else:
        lines = [source]
    graphs = [decode_graph6(line) for line in lines if line.strip()]
    if not graphs:
        raise UsageError("no graph given")
    return graphs


def _ints(xs: Sequence[int]) -> str:
    return ",".join(str(x) for x in xs)


def cmd_freecheck(args, out: TextIO, stdin: TextIO) -> int:
    fams = [family(name) for name in args.forbid.split(",") if name.strip()]
    status = 0
    for g in _read_graphs(args.graph, stdin):
        for fam in fams:
            hit = freeness_witness(g, fam)
            if hit is None:
                out.write(f"{fam.name}\tfree\n")
            else:
                status = 1
                out.write(f"{fam.name}\tcontains\t{_ints(hit[1])}\n")
    return status


def cmd_chi(args, out: TextIO, stdin: TextIO) -> int:
    for g in _read_graphs(args.graph, stdin):
        chi, col = chromatic_number(g)
        out.write(f"{chi}\t{_ints(col.assignment)}\n")
    return 0


def cmd_critical(args, out: TextIO, stdin: TextIO) -> int:
    status = 0
    for g in _read_graphs(args.graph, stdin):
        rep = is_k_vertex_critical(g, args.k, exact=args.verbose)
        out.write(f"{'true' if rep.verdict else 'false'}\n")
        if args.verbose:
            out.write(f"# chi={rep.chi}\n")
            for v in sorted(rep.per_vertex):
                out.write(f"# chi(G-{v})={rep.per_vertex[v]}\n")
        if not rep.verdict:
            status = 1
    return status


def cmd_enumerate(args, out: TextIO, stdin: TextIO) -> int:
    if args.profiles:
        out.write(f"K{args.k}\n")
        for p in critical_profiles(args.k):
            out.write(format_profile(p) + "\n")
    else:
        for g in enumerate_k_critical(args.k):
            out.write(encode_graph6(g) + "\n")
    return 0


def cmd_table(args, out: TextIO, stdin: TextIO) -> int:
    for num in count_table(args.max_k):
        out.write(f"{num}\n")
    return 0


def cmd_certify(args, out: TextIO, stdin: TextIO) -> int:
    status = 0
    for g in _read_graphs(args.graph, stdin):
        cert = certify(g, args.k, max_level=args.max_level)
        out.write(cert.to_json() + "\n")
        if cert.verdict != "yes":
            status = 1
    return status


def cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    graphs = _read_graphs(args.graph, stdin)
    text = Path(args.cert).read_text()
    try:
        certs = [Certificate.from_json(line) for line in text.splitlines() if line.strip()]
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed certificate: {exc}") from None
    if len(certs) != len(graphs):
        raise UsageError(f"{len(certs)} certificates for {len(graphs)} graphs")
    status = 0
    for g, cert in zip(graphs, certs):
        ok = verify_certificate(g, args.k, cert)
        out.write("accept\n" if ok else "reject\n")
        if not ok:
            status = 1
    return status


def cmd_catalog(args, out: TextIO, stdin: TextIO) -> int:
    ids = [args.id] if args.id is not None else range(1, 11)
    for i in ids:
        out.write(encode_graph6(base_graph(i).graph) + "\n")
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", "-v", action="store_true", help="human-readable extras")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                        help="worker bound (accepted for compatibility; work runs in one thread)")

    parser = argparse.ArgumentParser(prog="vcrit", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("freecheck", parents=[common], help="test H-freeness")
    p.add_argument("--forbid", required=True, help="comma list of gem, co-gem, p4, c5, p3+<l>p1")
    p.add_argument("graph", nargs="?")
    p.set_defaults(func=cmd_freecheck)

    p = sub.add_parser("chi", parents=[common], help="chromatic number and a colouring")
    p.add_argument("graph", nargs="?")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("critical", parents=[common], help="k-vertex-criticality test")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("graph", nargs="?")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("enumerate", parents=[common], help="k-vertex-critical (gem, co-gem)-free graphs")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--profiles", action="store_true", help="print bag-size profiles instead of graph6")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", parents=[common], help="num(k) for k = 1..max-k")
    p.add_argument("--max-k", type=_positive, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("certify", parents=[common], help="certified k-colourability")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--max-level", type=_positive, default=DEFAULT_MAX_LEVEL)
    p.add_argument("graph", nargs="?")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", parents=[common], help="check a certificate")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--cert", required=True, help="file with one certificate per line")
    p.add_argument("graph", nargs="?")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="graph6 of the special graphs G1..G10")
    p.add_argument("--id", type=int, choices=range(1, 11))
    p.set_defaults(func=cmd_catalog)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout,
        err: TextIO = sys.stderr, stdin: TextIO = sys.stdin) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, stdin)
    except Graph6Error as exc:
        err.write(f"vcrit: graph6 error: {exc}\n")
        return 2
    except (UsageError, ValueError, OSError) as exc:
        err.write(f"vcrit: {exc}\n")
        return 2
    except CertificationError as exc:
        err.write(f"vcrit: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
