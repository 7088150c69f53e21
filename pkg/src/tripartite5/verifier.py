"""Independent check that a list of cycles decomposes K_{r,s,t}.

The check is linear in the number of edges: every cycle edge is validated
and counted once, then the count is compared with rs + rt + st.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import Decomposition, Params, Vertex, cell_edges, edge

KINDS = ("MissingEdge", "DuplicateEdge", "IntraPartEdge", "RepeatedVertex", "BadLength", "BadIndex")


@dataclass
class Violation:
    kind: str
    detail: str
    cycle: int = -1  # index of the offending cycle, -1 when not tied to one


@dataclass
class VerifyOutcome:
    ok: bool
    violations: list = field(default_factory=list)
    edges_seen: int = 0
    edges_expected: int = 0
    length_counts: dict = field(default_factory=dict)

    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def summary(self) -> str:
        if self.ok:
            counts = ", ".join(f"{n}x C{k}" for k, n in sorted(self.length_counts.items()))
            return f"valid: {self.edges_seen} edges in {counts or 'no cycles'}"
        v = self.violations[0]
        more = len(self.violations) - 1
        tail = f" (+{more} more)" if more else ""
        return f"invalid: {v.kind}: {v.detail}{tail}"


def _index_ok(v: Vertex, p: Params) -> bool:
    return v.part in ("R", "S", "T") and 1 <= v.index <= p.size(v.part)


def verify(dec: Decomposition, allowed_lengths=(3, 5), max_violations: int = 50) -> VerifyOutcome:
    """Check that ``dec.cycles`` partition the edges of K_{r,s,t}."""
    p = dec.params
    out = VerifyOutcome(False, edges_expected=p.edge_count)
    allowed = set(allowed_lengths)
    seen: set = set()

    def bad(kind, detail, idx=-1):
        if len(out.violations) < max_violations:
            out.violations.append(Violation(kind, detail, idx))

    for idx, cyc in enumerate(dec.cycles):
        n = len(cyc)
        out.length_counts[n] = out.length_counts.get(n, 0) + 1
        if n not in allowed:
            bad("BadLength", f"cycle {idx} has length {n}", idx)
        if len(set(cyc)) != n:
            bad("RepeatedVertex", f"cycle {idx} repeats a vertex", idx)
        if not all(_index_ok(v, p) for v in cyc):
            bad("BadIndex", f"cycle {idx} has a vertex outside K{p.r},{p.s},{p.t}", idx)
            continue
        for k in range(n):
            u, w = cyc[k], cyc[(k + 1) % n]
            if u.part == w.part:
                bad("IntraPartEdge", f"cycle {idx} joins {u} and {w}", idx)
                continue
            e = edge(u, w)
            if e in seen:
                bad("DuplicateEdge", f"edge {u}-{w} repeated in cycle {idx}", idx)
            else:
                seen.add(e)
    out.edges_seen = len(seen)
    if len(seen) < p.edge_count:
        for e in _all_edges(p):
            if e not in seen:
                bad("MissingEdge", f"edge {_fmt(e)} not covered")
    out.ok = not out.violations
    return out


def _all_edges(p: Params):
    parts = [[Vertex(part, i) for i in range(1, p.size(part) + 1)] for part in ("R", "S", "T")]
    for a, b in ((0, 1), (0, 2), (1, 2)):
        for u in parts[a]:
            for w in parts[b]:
                yield edge(u, w)


def verify_trade_exchange(trade, p: Params | None = None) -> VerifyOutcome:
    """Check a trade's exchange: its 5-cycles use exactly the edges it replaces.

    The replaced edges are read from the exchange table through the trade's
    roles and, when ``p`` is given, also from the trade's cells.
    """
    from .trades import cycles_edges, expand_trade_to_cycles, left_side_edges

    right = cycles_edges(expand_trade_to_cycles(trade))
    out = VerifyOutcome(True, edges_seen=sum(right.values()))
    sides = [("table", left_side_edges(trade.kind, trade.roles))]
    if p is not None:
        cells: Counter = Counter()
        for c in trade.cells:
            cells.update(cell_edges(c, p))
        sides.append(("cells", cells))
    for name, left in sides:
        out.edges_expected = sum(left.values())
        for e in left - right:
            out.violations.append(Violation("MissingEdge", f"{name} edge {_fmt(e)} not in the cycles"))
        for e in right - left:
            out.violations.append(Violation("DuplicateEdge", f"cycle edge {_fmt(e)} not in the {name} side"))
    out.ok = not out.violations
    return out


def _fmt(e) -> str:
    return "-".join(sorted(str(v) for v in e))
