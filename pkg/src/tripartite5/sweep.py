"""Run the constructor and verifier over every supported instance up to a bound."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .conditions import check_construction_domain
from .core import ConstructionError, Params
from .expansion import construct
from .verifier import verify

COLUMNS = ("r", "s", "t", "ok", "seconds", "ignored", "bound", "twice", "f_match", "error")


@dataclass
class SweepRow:
    params: tuple
    ok: bool
    seconds: float
    total_ignored: int = -1
    bound: int = -1
    outside_twice_inside: bool = False
    f_matches: bool = False
    error: str = ""

    @property
    def budget_ok(self) -> bool:
        return 0 <= self.total_ignored <= self.bound

    def to_line(self) -> str:
        r, s, t = self.params
        fields = (r, s, t, int(self.ok), f"{self.seconds:.3f}", self.total_ignored, self.bound,
                  int(self.outside_twice_inside), int(self.f_matches), self.error.replace("\t", " "))
        return "\t".join(str(x) for x in fields)

    @classmethod
    def from_line(cls, line: str) -> "SweepRow":
        r, s, t, ok, sec, ign, bound, twice, fm, err = line.rstrip("\n").split("\t", 9)
        return cls((int(r), int(s), int(t)), ok == "1", float(sec), int(ign), int(bound),
                   twice == "1", fm == "1", err)

    def to_dict(self) -> dict:
        return asdict(self)


def supported_instances(max_t: int = 99, min_t: int = 1):
    """All (r, s, t) with r <= s <= t, min_t <= t <= max_t, accepted by the construction gate."""
    out = []
    for t in range(max(min_t, 1), max_t + 1):
        for s in range(1, t + 1):
            for r in range(1, s + 1):
                if check_construction_domain(Params(r, s, t)).construction_supported:
                    out.append((r, s, t))
    return out


def f_matches(con) -> bool:
    """Measured uncovered-row counts equal the closed form, all non-negative."""
    formula, measured = con.placement.f_formula, con.placement.f_measured
    keys = set(formula) | set(measured)
    return all(formula.get(k, 0) == measured.get(k, 0) >= 0 for k in keys)


def run_one(triple) -> SweepRow:
    p = Params(*triple)
    start = time.perf_counter()
    try:
        con = construct(p)
        outcome = verify(con.decomposition())
    except ConstructionError as exc:
        return SweepRow(tuple(triple), False, time.perf_counter() - start, error=str(exc))
    elapsed = time.perf_counter() - start
    b = con.budget
    return SweepRow(tuple(triple), outcome.ok, elapsed, b.total_ignored, b.bound,
                    b.outside_cells == 2 * b.a_cells_used, f_matches(con),
                    "" if outcome.ok else outcome.summary())


def sweep(instances, workers: int | None = None) -> list[SweepRow]:
    """Rows in the order of ``instances``; ``workers=1`` stays in-process."""
    instances = list(instances)
    if workers == 1 or len(instances) < 2:
        return [run_one(x) for x in instances]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_one, instances, chunksize=16))
