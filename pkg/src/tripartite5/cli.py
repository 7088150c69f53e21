"""Command-line interface.

Exit codes: 0 ok, 1 invalid certificate (or no decomposition found),
2 malformed input, 3 unsupported instance, 4 construction error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .blowup import blowup_decomposition
from .certificate import Certificate, CertificateError, dumps, read, write
from .conditions import check_construction_domain, check_necessary
from .core import ConstructionError, Params
from .expansion import construct
from .oracle import SearchConfig, search
from .sweep import COLUMNS, SweepRow, run_one, supported_instances, sweep
from .verifier import verify

OK, INVALID, MALFORMED, UNSUPPORTED, CONSTRUCTION = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _params(args) -> Params:
    try:
        return Params(args.r, args.s, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _lengths(args, default=(3, 5)) -> tuple:
    if getattr(args, "pure", False):
        return (5,)
    text = getattr(args, "lengths", None)
    if not text:
        return tuple(default)
    try:
        out = tuple(sorted({int(x) for x in text.split(",")}))
    except ValueError:
        raise UsageError(f"--lengths expects a comma list such as 3,5, got {text!r}") from None
    if not out or min(out) < 3:
        raise UsageError("cycle lengths must be at least 3")
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _save_certificate(cert: Certificate, out: str | None, compress: bool) -> int:
    """Write, re-read and re-verify; returns an exit code."""
    if not out:
        text = dumps(cert)
        sys.stdout.write(text)
        return OK
    write(cert, out, compress or None)
    again = read(out)
    outcome = verify(again.decomposition(), again.lengths)
    if not outcome.ok:
        print(f"written certificate fails verification: {outcome.summary()}", file=sys.stderr)
        return INVALID
    return OK


def cmd_check(args) -> int:
    p = _params(args)
    rep = check_necessary(p) if args.pure else check_construction_domain(p)
    if args.json:
        print(rep.to_json())
    else:
        print(rep.to_text())
    if args.pure:
        return OK if rep.parity_ok and rep.divisibility_ok and rep.bound_ok else UNSUPPORTED
    return OK if rep.construction_supported else UNSUPPORTED


def cmd_construct(args) -> int:
    p = _params(args)
    rep = check_construction_domain(p)
    if not rep.construction_supported:
        print(f"unsupported: {','.join(rep.reasons)}", file=sys.stderr)
        return UNSUPPORTED
    try:
        con = construct(p)
    except ConstructionError as exc:
        print(f"construction error at step {exc.step}: {exc}", file=sys.stderr)
        return CONSTRUCTION
    dec = con.decomposition()
    outcome = verify(dec)
    if not outcome.ok:
        print(f"construction produced an invalid decomposition: {outcome.summary()}", file=sys.stderr)
        return CONSTRUCTION
    budget = json.dumps(con.budget.to_dict(), sort_keys=True)
    if args.out:
        Path(str(args.out) + ".budget.json").write_text(budget + "\n")
        Path(str(args.out) + ".trades.json").write_text(trades_json(con.trades) + "\n")
    if args.json:
        print(budget, file=sys.stderr)
    cert = Certificate.of(dec, f"tripartite5 {__version__} construct")
    return _save_certificate(cert, args.out, args.gzip)


def trades_json(trades) -> str:
    """Typed trade records (kind, orientation, cells, roles) for independent re-expansion."""
    records = [{
        "kind": tr.kind,
        "orient": tr.orient,
        "a_cells": [list(c) for c in tr.a_cells],
        "outside": [list(c) for c in tr.outside],
        "roles": {k: str(v) for k, v in sorted(tr.roles.items())},
    } for tr in trades]
    return json.dumps(records, sort_keys=True)


def _load(path) -> Certificate:
    try:
        return read(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except CertificateError as exc:
        raise UsageError(f"malformed certificate {path}: {exc}") from None


def cmd_verify(args) -> int:
    cert = _load(args.path)
    lengths = _lengths(args, cert.lengths)
    outcome = verify(cert.decomposition(), lengths)
    if args.json:
        print(json.dumps({
            "ok": outcome.ok,
            "edges_seen": outcome.edges_seen,
            "edges_expected": outcome.edges_expected,
            "length_counts": {str(k): v for k, v in sorted(outcome.length_counts.items())},
            "violations": [v.__dict__ for v in outcome.violations],
        }, sort_keys=True))
    else:
        print(outcome.summary())
        for v in outcome.violations[1:]:
            print(f"  {v.kind}: {v.detail}")
    return OK if outcome.ok else INVALID


def cmd_blowup(args) -> int:
    cert = _load(args.path)
    dec = cert.decomposition()
    outcome = verify(dec, (3, 5))
    if not outcome.ok:
        print(f"input is not a {{3,5}}-cycle decomposition: {outcome.summary()}", file=sys.stderr)
        return INVALID
    big = blowup_decomposition(dec)
    check = verify(big, (5,))
    if not check.ok:
        print(f"blowup failed verification: {check.summary()}", file=sys.stderr)
        return CONSTRUCTION
    out = Certificate.of(big, f"tripartite5 {__version__} blowup", (5,), source=cert.params,
                           factor=5)
    return _save_certificate(out, args.out, args.gzip)


def cmd_latin(args) -> int:
    from .core import build_latin_rep

    p = _params(args)
    if not args.annotate:
        _emit(build_latin_rep(p).to_csv(), args.out)
        return OK
    rep = check_construction_domain(p)
    if not rep.construction_supported:
        print(f"cannot annotate an unsupported instance: {','.join(rep.reasons)}", file=sys.stderr)
        return UNSUPPORTED
    try:
        con = construct(p)
    except ConstructionError as exc:
        print(f"construction error at step {exc.step}: {exc}", file=sys.stderr)
        return CONSTRUCTION
    tags = {}
    for tr in con.trades:
        for c in tr.cells:
            tags[c] = tr.kind
    _emit(con.placement.rep.to_csv(tags), args.out)
    return OK


def cmd_oracle(args) -> int:
    p = _params(args)
    config = SearchConfig(allowed_lengths=_lengths(args, (5,)), edge_cap=args.edge_cap,
                          time_limit=args.time_limit)
    try:
        res = search(p, config)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return UNSUPPORTED
    if args.json:
        print(json.dumps({"found": res.found, "exhausted": res.exhausted, "nodes": res.nodes},
                         sort_keys=True), file=sys.stderr)
    if res.found:
        cert = Certificate.of(res.decomposition(p), f"tripartite5 {__version__} oracle",
                              config.allowed_lengths)
        return _save_certificate(cert, args.out, False)
    if not res.exhausted:
        print("search stopped at its time limit without an answer", file=sys.stderr)
        return UNSUPPORTED
    print("no decomposition exists", file=sys.stderr)
    return INVALID


def cmd_sweep(args) -> int:
    instances = supported_instances(args.max_t, args.min_t)
    done: dict = {}
    if args.out and args.resume and Path(args.out).exists():
        for line in Path(args.out).read_text().splitlines()[1:]:
            row = SweepRow.from_line(line)
            done[row.params] = row
    todo = [x for x in instances if x not in done]
    if args.workers == 1:
        new = [run_one(x) for x in todo]
    else:
        new = sweep(todo, args.workers)
    rows = {**done, **{row.params: row for row in new}}
    ordered = [rows[x] for x in instances]
    text = "\t".join(COLUMNS) + "\n" + "".join(row.to_line() + "\n" for row in ordered)
    _emit(text, args.out)
    failed = [row for row in ordered if not (row.ok and row.budget_ok)]
    print(f"{len(ordered) - len(failed)}/{len(ordered)} instances passed", file=sys.stderr)
    return OK if not failed else INVALID


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tripartite5",
                                 description="5-cycle decompositions of complete tripartite graphs")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def triple(p):
        for name in ("r", "s", "t"):
            p.add_argument(name, type=int)

    p = sub.add_parser("check", help="feasibility of K_{r,s,t}")
    triple(p)
    p.add_argument("--pure", action="store_true", help="necessary conditions for 5-cycles only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build and certify a {3,5}-cycle decomposition")
    triple(p)
    p.add_argument("--out", help="certificate path (stdout if omitted)")
    p.add_argument("--json", action="store_true", help="print the budget report to stderr")
    p.add_argument("--gzip", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("blowup", help="5-blowup of a {3,5} certificate")
    p.add_argument("path")
    p.add_argument("--out")
    p.add_argument("--gzip", action="store_true")
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("path")
    p.add_argument("--lengths", help="allowed cycle lengths, e.g. 3,5 (default: from header)")
    p.add_argument("--pure", action="store_true", help="allow 5-cycles only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("latin", help="dump the latin representation as CSV")
    triple(p)
    p.add_argument("--annotate", action="store_true", help="tag cells with their trade kind")
    p.add_argument("--out")
    p.set_defaults(func=cmd_latin)

    p = sub.add_parser("oracle", help="exhaustive search on a small instance")
    triple(p)
    p.add_argument("--lengths", help="allowed cycle lengths (default 5)")
    p.add_argument("--pure", action="store_true")
    p.add_argument("--edge-cap", type=int, default=SearchConfig.edge_cap)
    p.add_argument("--time-limit", type=float, default=None)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="construct and verify every supported instance")
    p.add_argument("--max-t", type=int, default=99)
    p.add_argument("--min-t", type=int, default=1)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", help="tab-separated table")
    p.add_argument("--resume", action="store_true", help="keep rows already in --out")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED


if __name__ == "__main__":
    sys.exit(main())
