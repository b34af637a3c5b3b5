"""Command-line front end: ``critgraphs enumerate | verify | check-claims | rerun``.

Exit codes: 0 success, 1 negative verdict or count mismatch, 2 enumeration
truncated at the vertex bound, 64 bad usage, 66 unreadable input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .enumerate import CountTable, EnumerationConfig, enumerate_critical, verify_corpus
from .graph6 import Graph6Error, parse_graph6, serialize_graph6
from .patterns import PatternFamily, UnknownPatternError
from .structure import (
    VARIANTS,
    ClaimReport,
    check_lemma2,
    find_lemma1_violation,
    verify_case_table,
    verify_proof_claims,
)

EX_OK = 0
EX_FAIL = 1
EX_TRUNCATED = 2
EX_USAGE = 64
EX_NOINPUT = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _family(text: str) -> PatternFamily:
    try:
        fam = PatternFamily.from_names(text)
    except (UnknownPatternError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if not len(fam):
        raise UsageError("--family needs at least one pattern name")
    return fam


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, encoding="ascii") as fh:
            return fh.readlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc}") from exc


def _sha256(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 16), b""):
            h.update(block)
    return h.hexdigest()


def _format_counts(table: CountTable) -> str:
    return ",".join(f"{n}:{c}" for n, c in sorted(table.counts.items()))


def write_manifest(path: str, command: str, config: dict, wall: float, table: CountTable,
                   inputs: Sequence[str] = ()) -> None:
    lines = [f"command={command}", f"tool_version={__version__}"]
    for key, val in config.items():
        lines.append(f"{key}={val}")
    lines.append(f"wall_time_s={wall:.3f}")
    lines.append(f"counts={_format_counts(table)}")
    lines.append(f"partial={'true' if table.partial else 'false'}")
    for p in inputs:
        lines.append(f"input_sha256[{p}]={_sha256(p)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_manifest(path: str) -> dict[str, str]:
    out = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.strip() and not line.startswith("#"):
            key, _, val = line.partition("=")
            out[key.strip()] = val.strip()
    return out


# --- enumerate ---------------------------------------------------------------

def cmd_enumerate(args: argparse.Namespace) -> int:
    fam = _family(args.family)
    try:
        cfg = EnumerationConfig(args.k, fam, args.n_max, connected_prefix=not args.all_masks,
                                jobs=args.jobs or os.cpu_count() or 1,
                                spill_threshold=args.spill_threshold,
                                use_symmetry=not args.no_symmetry)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        out = open(args.out, "w", encoding="ascii") if args.out else None
    except OSError as exc:
        raise FileNotFoundError(f"cannot write {args.out}: {exc}") from exc
    t0 = time.perf_counter()

    def progress(n: int, frontier: int, candidates: int) -> None:
        if args.verbose:
            print(f"# level {n}: frontier {frontier}, candidates {candidates}, "
                  f"{time.perf_counter() - t0:.1f}s", file=sys.stderr)

    try:
        result = enumerate_critical(cfg, sink=(lambda g: out.write(serialize_graph6(g) + "\n")) if out else None,
                                    progress=progress)
    finally:
        if out:
            out.close()
    table = result.counts
    csv_text = table.to_csv(lo=1, hi=args.n_max)
    if args.counts:
        Path(args.counts).write_text(csv_text, encoding="ascii")
    if not args.out:
        for line in result.graph6_lines():
            print(line)
    print(table.summary(title=f"{args.k}-crit ({fam})", lo=1, hi=args.n_max), file=sys.stderr)
    if args.manifest:
        config = dict(cfg.describe(), jobs=cfg.jobs)
        write_manifest(args.manifest, "enumerate", config, result.elapsed, table)
    return EX_TRUNCATED if table.partial else EX_OK


# --- verify ------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    fam = _family(args.family)
    if args.k < 1:
        raise UsageError("--k must be positive")
    lines = _read_lines(args.infile)
    expect = None
    if args.expect:
        expect = CountTable.from_csv(Path(_ensure_readable(args.expect)).read_text(encoding="ascii"))
    t0 = time.perf_counter()
    report = verify_corpus(lines, args.k, fam)
    bad = 0
    for v in report.verdicts:
        if args.format == "kv":
            print(json.dumps({"line": v.line, "graph6": v.text, "n": v.n, "family_free": v.family_free,
                              "forbidden": v.forbidden, "critical": v.critical, "chi": v.chi,
                              "duplicate_of": v.duplicate_of, "error": v.error, "ok": v.ok}))
        elif not v.ok or args.all:
            why = v.error or ("duplicate of line %d" % v.duplicate_of if v.duplicate_of else
                              f"contains {v.forbidden}" if v.forbidden else
                              f"not {args.k}-vertex-critical (chi={v.chi})")
            print(f"line {v.line}: {'OK' if v.ok else 'FAIL'} {v.text}" + ("" if v.ok else f" ({why})"))
        bad += not v.ok
    table = report.counts
    mismatch = []
    if expect is not None:
        for n in sorted(set(expect.counts) | set(table.counts)):
            if expect.counts.get(n, 0) != table.counts.get(n, 0):
                mismatch.append((n, expect.counts.get(n, 0), table.counts.get(n, 0)))
    print(table.summary(title="graphs"), file=sys.stderr)
    print(f"# {len(report.verdicts)} graphs, {bad} negative, {len(mismatch)} count mismatches",
          file=sys.stderr)
    for n, want, got in mismatch:
        print(f"# n={n}: expected {want}, found {got}", file=sys.stderr)
    if args.counts:
        Path(args.counts).write_text(table.to_csv(lo=min(table.counts, default=1)), encoding="ascii")
    if args.manifest:
        config = {"k": args.k, "family": str(fam), "in": args.infile}
        write_manifest(args.manifest, "verify", config, time.perf_counter() - t0, table, [args.infile])
    return EX_FAIL if bad or mismatch else EX_OK


def _ensure_readable(path: str) -> str:
    if not os.access(path, os.R_OK):
        raise FileNotFoundError(f"cannot read {path}")
    return path


# --- check-claims ----------------------------------------------------------------

def _emit(report, fmt: str, graph: Optional[str] = None) -> None:
    if fmt == "kv":
        d = report.as_dict()
        if graph is not None:
            d = {"graph6": graph, **d}
        print(json.dumps(d))
    else:
        print(("" if graph is None else graph + "  ") + report.line())


def cmd_check_claims(args: argparse.Namespace) -> int:
    if args.variant not in VARIANTS:
        raise UsageError(f"--variant must be one of {VARIANTS}")
    failures = 0
    if args.tables_only or not args.infile:
        reports = verify_case_table(args.variant)
        for r in reports:
            if not args.quiet:
                _emit(r, args.format)
        held = sum(r.holds and not r.unconstrained for r in reports)
        free = sum(r.unconstrained for r in reports)
        failures += sum(not r.holds for r in reports)
        print(f"# {held} holds, {free} unconstrained rows, {failures} failures", file=sys.stderr)
        return EX_FAIL if failures else EX_OK
    if args.k is None:
        raise UsageError("--k is required with --in")
    lines = _read_lines(args.infile)
    graphs = 0
    checks = 0
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            print(f"line {lineno}: parse error: {exc}", file=sys.stderr)
            failures += 1
            continue
        graphs += 1
        try:
            reports = verify_proof_claims(g, args.k, args.variant, sample_size=args.sample, seed=args.seed)
            if args.lemmas:
                reports.append(check_lemma2(g, args.k))
        except ValueError as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            failures += 1
            continue
        if args.lemmas:
            hit = find_lemma1_violation(g, args.lemma1_size)
            reports.append(ClaimReport("lemma1", hit is None,
                                       None if hit is None else {"X": hit[0], "Y": hit[1]},
                                       note=f"|X|,|Y| <= {args.lemma1_size}"))
        for r in reports:
            checks += 1
            if not r.holds:
                failures += 1
            if args.all or not r.holds:
                _emit(r, args.format, text)
    print(f"# {graphs} graphs, {checks} checks, {failures} failures", file=sys.stderr)
    return EX_FAIL if failures else EX_OK


# --- rerun ---------------------------------------------------------------------------

def cmd_rerun(args: argparse.Namespace) -> int:
    m = read_manifest(_ensure_readable(args.manifest))
    command = m.get("command")
    want = m.get("counts", "")
    if command == "enumerate":
        cfg = EnumerationConfig(int(m["k"]), _family(m["family"]), int(m["n_max"]),
                                connected_prefix=m.get("connected_prefix", "True") == "True",
                                jobs=args.jobs or int(m.get("jobs", 1)),
                                use_symmetry=m.get("use_symmetry", "True") == "True")
        table = enumerate_critical(cfg).counts
    elif command == "verify":
        table = verify_corpus(_read_lines(m["in"]), int(m["k"]), _family(m["family"])).counts
    else:
        raise UsageError(f"manifest has unknown command {command!r}")
    got = _format_counts(table)
    print(f"manifest counts: {want}")
    print(f"rerun counts:    {got}")
    return EX_OK if got == want else EX_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="critgraphs", description="Enumerate and verify k-vertex-critical F-free graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    e = sub.add_parser("enumerate", help="generate all k-vertex-critical F-free graphs up to --n-max")
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--family", required=True, help="comma-separated pattern names, e.g. P5,chair")
    e.add_argument("--n-max", type=int, required=True)
    e.add_argument("--out", help="graph6 output file (default: stdout)")
    e.add_argument("--counts", help="write per-n counts as CSV")
    e.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    e.add_argument("--spill-threshold", type=int, default=None,
                   help="write frontiers larger than this to temporary files")
    e.add_argument("--all-masks", action="store_true", help="also try disconnected extensions")
    e.add_argument("--no-symmetry", action="store_true", help="do not merge symmetric extensions")
    e.add_argument("--manifest", help="write a run manifest")
    e.add_argument("-v", "--verbose", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="check a graph6 corpus for freeness and criticality")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--family", required=True)
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--expect", help="CSV (n,count) the per-n counts must equal")
    v.add_argument("--counts", help="write per-n counts as CSV")
    v.add_argument("--format", choices=("text", "kv"), default="text")
    v.add_argument("--all", action="store_true", help="print positive verdicts too")
    v.add_argument("--manifest", help="write a run manifest")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("check-claims", help="replay the case tables or check proof claims on graphs")
    c.add_argument("--variant", required=True, choices=VARIANTS)
    c.add_argument("--k", type=int)
    c.add_argument("--in", dest="infile")
    c.add_argument("--tables-only", action="store_true")
    c.add_argument("--lemmas", action="store_true", help="also run the two criticality lemmas")
    c.add_argument("--lemma1-size", type=int, default=3)
    c.add_argument("--sample", type=int, default=100, help="P4 sample size for graphs above 10 vertices")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--format", choices=("text", "kv"), default="text")
    c.add_argument("--all", action="store_true", help="print holding claims too")
    c.add_argument("-q", "--quiet", action="store_true")
    c.set_defaults(func=cmd_check_claims)

    r = sub.add_parser("rerun", help="re-run a manifest and compare counts")
    r.add_argument("manifest")
    r.add_argument("--jobs", type=int, default=None)
    r.set_defaults(func=cmd_rerun)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EX_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"critgraphs: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except FileNotFoundError as exc:
        print(f"critgraphs: {exc}", file=sys.stderr)
        return EX_NOINPUT


if __name__ == "__main__":
    sys.exit(main())
