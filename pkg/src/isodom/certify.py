"""Set-based checkers for domination, secure domination, isolate domination and
isolate secure domination, each returning a replayable certificate.

These work on plain Python sets and are the reference the bitmask kernels are
tested against. When several defenders are valid, the least one is recorded.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckReport:
    verdict: bool
    defenders: dict = field(default_factory=dict)
    isolate_witness: int | None = None
    violation: dict | None = None

    def __bool__(self):
        return self.verdict

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "defenders": {str(u): v for u, v in sorted(self.defenders.items())},
            "isolate_witness": self.isolate_witness,
            "violation": self.violation,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def _as_set(g, s):
    s = frozenset(int(v) for v in s)
    bad = [v for v in s if not 0 <= v < g.n]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} not in graph with n={g.n}")
    return s


def closed_neighborhood(g, v):
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return frozenset(g.adjacency[v] | {v})


def _first_undominated(g, s):
    for w in range(g.n):
        if w not in s and not (g.adjacency[w] & s):
            return w
    return None


def _first_isolated(g, s):
    for v in sorted(s):
        if not (g.adjacency[v] & s):
            return v
    return None


def is_dominating(g, s):
    s = _as_set(g, s)
    w = _first_undominated(g, s)
    if w is not None:
        return CheckReport(False, violation={"kind": "undominated", "vertex": w})
    return CheckReport(True)


def is_isolate_dominating(g, s):
    s = _as_set(g, s)
    rep = is_dominating(g, s)
    if not rep:
        return rep
    iso = _first_isolated(g, s)
    if iso is None:
        return CheckReport(False, violation={"kind": "no_isolated_vertex"})
    return CheckReport(True, isolate_witness=iso)


def external_private_neighbors(g, v, s):
    """``{w in V - S : N[w] & S == {v}}``."""
    s = _as_set(g, s)
    if v not in s:
        raise ValueError(f"vertex {v} is not in the set")
    return frozenset(w for w in g.adjacency[v] if w not in s and g.adjacency[w] & s == {v})


def _swap(s, v, u):
    return (s - {v}) | {u}


def _secure_check(g, s, accept_swap):
    """Shared driver: for each outside u, try neighbours v in S in order.

    ``accept_swap(t)`` returns ``None`` when the swapped set is acceptable,
    else a short reason string.
    """
    defenders = {}
    for u in range(g.n):
        if u in s:
            continue
        rejected = []
        for v in sorted(g.adjacency[u] & s):
            reason = accept_swap(_swap(s, v, u))
            if reason is None:
                defenders[u] = v
                break
            rejected.append({"defender": v, "reason": reason})
        else:
            return CheckReport(False, defenders=defenders, violation={
                "kind": "undefendable", "vertex": u, "rejected": rejected})
    return CheckReport(True, defenders=defenders)


def _dominating_reason(g, t):
    w = _first_undominated(g, t)
    return None if w is None else f"swap leaves vertex {w} undominated"


def _ids_reason(g, t):
    w = _first_undominated(g, t)
    if w is not None:
        return f"swap leaves vertex {w} undominated"
    if _first_isolated(g, t) is None:
        return "swap has no isolated vertex"
    return None


def is_secure_dominating_naive(g, s):
    """Literal swap test for every outside vertex and every neighbour in S."""
    s = _as_set(g, s)
    rep = is_dominating(g, s)
    if not rep:
        return rep
    return _secure_check(g, s, lambda t: _dominating_reason(g, t))


def is_secure_dominating_epn(g, s):
    """Secure domination via the private-neighbour criterion: u is defended by
    v in S iff ``epn(v, S) | {u, v}`` induces a clique."""
    s = _as_set(g, s)
    rep = is_dominating(g, s)
    if not rep:
        return rep
    epn = {v: external_private_neighbors(g, v, s) for v in s}
    defenders = {}
    for u in range(g.n):
        if u in s:
            continue
        rejected = []
        for v in sorted(s):
            block = sorted(epn[v] | {u, v})
            missing = next(((a, b) for i, a in enumerate(block) for b in block[i + 1:]
                            if not g.has_edge(a, b)), None)
            if missing is None:
                defenders[u] = v
                break
            if v in g.adjacency[u]:
                rejected.append({"defender": v,
                                 "reason": f"epn block not complete: ({missing[0]}, {missing[1]}) missing"})
        else:
            return CheckReport(False, defenders=defenders, violation={
                "kind": "undefendable", "vertex": u, "rejected": rejected})
    return CheckReport(True, defenders=defenders)


def is_isolate_secure_dominating(g, s):
    s = _as_set(g, s)
    rep = is_isolate_dominating(g, s)
    if not rep:
        return rep
    sec = _secure_check(g, s, lambda t: _ids_reason(g, t))
    sec.isolate_witness = rep.isolate_witness
    return sec


CHECKERS = {
    "ds": is_dominating,
    "sds": is_secure_dominating_naive,
    "ids": is_isolate_dominating,
    "isds": is_isolate_secure_dominating,
}


def check(g, s, problem, method="naive"):
    problem = problem.lower()
    if problem == "sds" and method == "epn":
        return is_secure_dominating_epn(g, s)
    if method not in ("naive", "epn"):
        raise ValueError(f"unknown check method {method!r}")
    try:
        return CHECKERS[problem](g, s)
    except KeyError:
        raise ValueError(f"unknown problem {problem!r}") from None
