"""Feasibility gates: necessary conditions and the supported construction domain.

All inequalities are evaluated in exact integer arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .core import Params

# reason tags
PARITY = "ParityMismatch"
DIVISIBILITY = "NotDivisibleBy5"
BOUND = "BoundViolated"
EVEN_PARTS = "EvenPartsUnsupported"
SLACK = "InsufficientSlack"
T_IS_S_PLUS_2 = "TIsSPlus2"
EQUAL_PARTS = "EqualPartsUnsupported"
T_EQUALS_S = "TEqualsSUnsupported"
SLACK_CONSTANT = 18


@dataclass
class FeasibilityReport:
    params: Params
    parity_ok: bool
    divisibility_ok: bool
    bound_ok: bool
    construction_supported: bool = False
    reasons: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["params"] = [self.params.r, self.params.s, self.params.t]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"{k}: {v}" for k, v in d.items() if k != "reasons"]
        lines.append("reasons: " + (",".join(self.reasons) or "none"))
        return "\n".join(lines)


def check_necessary(p: Params) -> FeasibilityReport:
    """The three necessary conditions for a 5-cycle decomposition of K_{r,s,t}."""
    r, s, t = p.r, p.s, p.t
    parity_ok = r % 2 == s % 2 == t % 2
    divisibility_ok = (r * s + r * t + s * t) % 5 == 0
    bound_ok = t * (r + s) <= 4 * r * s
    reasons = []
    if not parity_ok:
        reasons.append(PARITY)
    if not divisibility_ok:
        reasons.append(DIVISIBILITY)
    if not bound_ok:
        reasons.append(BOUND)
    return FeasibilityReport(p, parity_ok, divisibility_ok, bound_ok, False, reasons)


def check_construction_domain(p: Params) -> FeasibilityReport:
    """Whether the triangle/5-cycle constructor accepts ``p``.

    Divisibility is reported but does not gate: the constructor produces
    triangles and 5-cycles, and its 5-blowup is always divisible.
    """
    rep = check_necessary(p)
    r, s, t = p.r, p.s, p.t
    reasons = []
    if not (r % 2 == 1 and s % 2 == 1 and t % 2 == 1):
        reasons.append(PARITY if not rep.parity_ok else EVEN_PARTS)
    if (t + SLACK_CONSTANT) * (r + s) > 4 * r * s:
        reasons.append(SLACK)
    if t == s + 2:
        reasons.append(T_IS_S_PLUS_2)
    if r == s:
        reasons.append(EQUAL_PARTS)
    if t == s:
        reasons.append(T_EQUALS_S)
    rep.reasons = reasons
    rep.construction_supported = not reasons
    return rep


def check_scaled(p: Params) -> FeasibilityReport:
    """Gate a 5-blowup target K_{5r,5s,5t} by the construction domain of (r,s,t)."""
    if p.r % 5 or p.s % 5 or p.t % 5:
        rep = check_necessary(p)
        rep.reasons.append("NotMultipleOf5")
        return rep
    return check_construction_domain(Params(p.r // 5, p.s // 5, p.t // 5))


def lemma_rs_lower_bound(r: int, s: int, t: int) -> bool:
    """If r <= s <= t and (t+18)(r+s) <= 4rs then r, s >= 18.

    Takes a raw triple so the premise can be probed on arbitrary input; the
    result is vacuously true when the premise fails.
    """
    premise = r <= s <= t and (t + SLACK_CONSTANT) * (r + s) <= 4 * r * s
    return (not premise) or (r >= 18 and s >= 18)
