"""The 5-blowup: from triangles and 5-cycles of K_{r,s,t} to 5-cycles of K_{5r,5s,5t}.

Vertex ``x_i`` of the base graph becomes ``x_{5(i-1)+m}`` for m = 1..5.  A
base 5-cycle blows up to the 125 edges of B_5(C_5), which split into 25
5-cycles; a base triangle blows up to K_{5,5,5}, which splits into 15.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Decomposition, Params, Vertex, cycle_edges

# copy offsets along the cycle; consecutive differences are the constant 0..4
B5_FAMILIES = ((1, 1, 1, 1, 1), (1, 2, 3, 4, 5), (1, 3, 5, 2, 4), (1, 4, 2, 5, 3), (1, 5, 4, 3, 2))

# A decomposition of K_{5,5,5} into 15 5-cycles, found once by
# oracle.brute_force_decompose(Params(5, 5, 5)) and checked on import.
K555_TABLE = (
    "r1 s1 r2 s2 t1",
    "r1 s2 r3 s1 t2",
    "r1 s3 r2 s4 t3",
    "r1 s4 r3 s3 t4",
    "r1 s5 r4 s1 t5",
    "s1 r5 t1 r2 t3",
    "s1 t1 r3 s5 t4",
    "r2 s5 t1 r4 t2",
    "r2 t4 r4 s2 t5",
    "t1 s3 r4 t5 s4",
    "r4 s4 t2 r3 t3",
    "r3 t4 r5 s3 t5",
    "s3 t2 r5 s5 t3",
    "s4 r5 t3 s2 t4",
    "r5 s2 t2 s5 t5",
)


def _parse_table(rows) -> list[tuple]:
    return [tuple(Vertex.parse(x) for x in row.split()) for row in rows]


def check_k555(cycles) -> bool:
    """True iff ``cycles`` are fifteen 5-cycles covering each edge of K_{5,5,5} once."""
    from .verifier import verify

    return len(cycles) == 15 and verify(Decomposition(Params(5, 5, 5), list(cycles)), (5,)).ok


@dataclass(frozen=True)
class BlowupClass:
    """The five copies of a base vertex."""

    source: Vertex

    @property
    def members(self) -> tuple:
        return tuple(lift(self.source, m) for m in range(1, 6))


def lift(v: Vertex, m: int) -> Vertex:
    """Copy ``m`` (1..5) of vertex ``v``."""
    return Vertex(v.part, 5 * (v.index - 1) + m)


def _classes(items) -> list[BlowupClass]:
    return [x if isinstance(x, BlowupClass) else BlowupClass(x) for x in items]


def b5_c5_cycles(classes) -> list[tuple]:
    """The 25 5-cycles of B_5(C_5) over five classes (or base vertices) in cycle order."""
    classes = _classes(classes)
    if len(classes) != 5:
        raise ValueError("B_5(C_5) needs five classes")
    out = []
    for fam in B5_FAMILIES:
        for i in range(5):
            out.append(tuple(c.members[(a - 1 + i) % 5] for c, a in zip(classes, fam)))
    return out


def k555_cycles(classes=None) -> list[tuple]:
    """The 15 5-cycles of K_{5,5,5}; relabelled onto three classes when given."""
    if classes is None:
        return list(_K555)
    by_part = {c.source.part: c for c in _classes(classes)}
    if sorted(by_part) != ["R", "S", "T"] or len(by_part) != len(classes):
        raise ValueError("K_{5,5,5} needs one class from each part")
    return [tuple(by_part[v.part].members[v.index - 1] for v in cyc) for cyc in _K555]


def blowup_decomposition(dec: Decomposition) -> Decomposition:
    """Blow up a {3,5}-cycle decomposition of K_{r,s,t} into a 5-cycle one of K_{5r,5s,5t}."""
    cycles = []
    for cyc in dec.cycles:
        if len(cyc) == 3:
            cycles.extend(k555_cycles(cyc))
        elif len(cyc) == 5:
            cycles.extend(b5_c5_cycles(cyc))
        else:
            raise ValueError(f"cannot blow up a cycle of length {len(cyc)}")
    return Decomposition(dec.params.scaled(5), cycles)


def b5_edge_set(cycle) -> set:
    """All edges of B_5 of a base cycle: every copy pair along every base edge."""
    out = set()
    for e in cycle_edges(cycle):
        u, w = tuple(e)
        for m in range(1, 6):
            for n in range(1, 6):
                out.add(frozenset((lift(u, m), lift(w, n))))
    return out


_K555 = _parse_table(K555_TABLE)
if not check_k555(_K555):  # pragma: no cover - guards against an edited table
    raise ImportError("K_{5,5,5} table does not verify")
