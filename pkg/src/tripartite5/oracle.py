"""Exhaustive search for cycle decompositions of small K_{r,s,t}.

This is deliberately independent of the latin-square machinery: it works
on the raw edge set and branches on an uncovered edge at the vertex of
smallest remaining degree, trying every cycle of an allowed length through
that edge.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .conditions import check_necessary
from .core import Decomposition, Params, R, S, T, Vertex, edge


@dataclass
class SearchConfig:
    allowed_lengths: tuple = (5,)
    edge_cap: int = 120
    ordering: str = "min-degree"  # or "first-edge": lowest-ranked uncovered edge
    symmetry_breaking: bool = True
    # counting shortcuts (degree parity, divisibility, part-pair counts); off
    # gives a plain search that does not restate the necessary conditions
    pruning: bool = True
    time_limit: float | None = None  # seconds; None for no limit
    max_nodes: int | None = None


class SearchAborted(RuntimeError):
    pass


@dataclass
class SearchResult:
    found: bool
    cycles: list
    nodes: int
    exhausted: bool  # True when "not found" is a proof of non-existence

    def decomposition(self, p: Params) -> Decomposition | None:
        return Decomposition(p, list(self.cycles)) if self.found else None


def vertices(p: Params) -> list[Vertex]:
    return [R(i) for i in range(1, p.r + 1)] + [S(i) for i in range(1, p.s + 1)] + [
        T(i) for i in range(1, p.t + 1)]


def _vertex_order(p: Params) -> dict:
    return {v: n for n, v in enumerate(vertices(p))}


def search(p: Params, config: SearchConfig | None = None) -> SearchResult:
    """Find a decomposition of K_{r,s,t} into cycles with lengths in ``config.allowed_lengths``.

    Raises ``ValueError`` when the graph has more than ``config.edge_cap`` edges.
    With symmetry breaking the first cycle is forced through a fixed edge in
    a canonical direction, which is sound because the graph is
    vertex-transitive within each part.
    """
    config = config or SearchConfig()
    if p.edge_count > config.edge_cap:
        raise ValueError(f"K{p.r},{p.s},{p.t} has {p.edge_count} edges, cap is {config.edge_cap}")
    lengths = sorted(set(config.allowed_lengths))
    if config.ordering not in ORDERINGS:
        raise ValueError(f"unknown ordering {config.ordering!r}")
    rank = _vertex_order(p)
    vs = vertices(p)
    adj = {v: [w for w in vs if w.part != v.part] for v in vs}
    all_edges = sorted(
        {edge(u, w) for u in vs for w in adj[u]},
        key=lambda e: tuple(sorted(rank[x] for x in e)),
    )
    unused = set(all_edges)
    deadline = None if config.time_limit is None else time.monotonic() + config.time_limit
    nodes = 0
    chosen: list = []

    if config.pruning:
        # every vertex of a cycle cover has even degree
        if any(len(adj[v]) % 2 for v in vs):
            return SearchResult(False, [], 0, True)
        if len(lengths) == 1 and p.edge_count % lengths[0]:
            return SearchResult(False, [], 0, True)

    degree = {v: len(adj[v]) for v in vs}
    pair_count = {pair: 0 for pair in PAIRS}
    for e in all_edges:
        pair_count[_pair_of(e)] += 1
    pure5 = config.pruning and lengths == [5]

    def _apply(es, sign):
        for e in es:
            if sign < 0:
                unused.discard(e)
            else:
                unused.add(e)
            for v in e:
                degree[v] += sign
            pair_count[_pair_of(e)] += sign

    def cycles_through(u, w):
        # paths u -> w -> ... -> u of each allowed length, avoiding used edges
        path = [u, w]
        on_path = {u, w}

        def extend():
            n = len(path)
            last = path[-1]
            if n in lengths and n >= 3 and edge(last, u) in unused:
                yield tuple(path)
            if n >= lengths[-1]:
                return
            for x in adj[last]:
                if x in on_path or edge(last, x) not in unused:
                    continue
                path.append(x)
                on_path.add(x)
                yield from extend()
                path.pop()
                on_path.discard(x)

        yield from extend()

    def solve(first: bool) -> bool:
        nonlocal nodes
        if not unused:
            return True
        nodes += 1
        if config.max_nodes is not None and nodes > config.max_nodes:
            raise SearchAborted("node limit")
        if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
            raise SearchAborted("time limit")
        if pure5 and not _pair_counts_feasible(pair_count, len(unused) // 5):
            return False
        if config.ordering == "min-degree":
            # most constrained vertex first, then its lowest-ranked neighbour
            u = min((v for v in vs if degree[v]), key=lambda v: (degree[v], rank[v]))
            w = min((x for x in adj[u] if edge(u, x) in unused), key=rank.__getitem__)
        else:
            e = min(unused, key=lambda f: sorted(rank[x] for x in f))
            u, w = sorted(e, key=rank.__getitem__)
        for cyc in list(cycles_through(u, w)):
            if first and config.symmetry_breaking and not _canonical_first(cyc, rank):
                continue
            es = [edge(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))]
            _apply(es, -1)
            chosen.append(cyc)
            if solve(False):
                return True
            chosen.pop()
            _apply(es, +1)
        return False

    try:
        found = solve(True)
    except SearchAborted:
        return SearchResult(False, [], nodes, False)
    return SearchResult(found, list(chosen) if found else [], nodes, True)


def brute_force_decompose(p: Params, config: SearchConfig | None = None) -> Decomposition | None:
    """The decomposition found by :func:`search`, or None."""
    return search(p, config).decomposition(p)


ORDERINGS = ("min-degree", "first-edge")
PAIRS = ("RS", "RT", "ST")


def _pair_of(e) -> str:
    return "".join(sorted(v.part for v in e))


def _pair_counts_feasible(pair_count: dict, cycles_left: int) -> bool:
    # a 5-cycle in a tripartite graph has part pattern (2, 2, 1): it uses 3
    # edges between its two doubled parts and 1 edge on each other pair, so
    # every pair count is cycles_left plus an even number
    return all(n >= cycles_left and (n - cycles_left) % 2 == 0 for n in pair_count.values())


def _canonical_first(cyc, rank) -> bool:
    # within each part, vertices appear in increasing index order of first use
    seen: dict[str, int] = {}
    for v in cyc:
        last = seen.get(v.part, 0)
        if v.index != last + 1:
            return False
        seen[v.part] = v.index
    return True


@dataclass
class CrossCheck:
    params: Params
    necessary: bool
    found: bool
    exhausted: bool

    def to_dict(self) -> dict:
        return {"params": [self.params.r, self.params.s, self.params.t],
                "necessary": self.necessary, "found": self.found,
                "exhausted": self.exhausted, "agrees": self.agrees}

    @property
    def agrees(self) -> bool:
        # a found decomposition proves the necessary conditions hold; a proof
        # of non-existence is consistent with either answer for tiny graphs
        return (not self.found) or self.necessary


def cross_validate(p: Params, config: SearchConfig | None = None) -> CrossCheck:
    rep = check_necessary(p)
    necessary = rep.parity_ok and rep.divisibility_ok and rep.bound_ok
    res = search(p, config)
    return CrossCheck(p, necessary, res.found, res.exhausted)
