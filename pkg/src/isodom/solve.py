"""Exact minimisation for DS, SDS, IDS and ISDS.

``solve_brute`` is the reference: it scans subsets by (size, lexicographic)
order and returns the first feasible one, which is therefore the canonical
witness. ``solve_bnb`` is the fast path; its value and status always agree
with ``solve_brute`` but its witness need not be canonical.
"""
from __future__ import annotations

import enum
import json
import os
import time
from dataclasses import dataclass, field

from . import certify, kernels

DEFAULT_ORACLE_LIMIT = 20


class OracleLimitError(ValueError):
    pass


class ProblemKind(enum.Enum):
    DS = kernels.DS
    SDS = kernels.SDS
    IDS = kernels.IDS
    ISDS = kernels.ISDS

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls[str(name).upper()]
        except KeyError:
            raise ValueError(f"unknown problem kind {name!r}") from None

    @property
    def checker(self):
        return certify.CHECKERS[self.name.lower()]


OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
EXCEEDS_BOUND = "exceeds_bound"


@dataclass
class SolveResult:
    kind: ProblemKind
    status: str
    value: int | None = None
    witness: tuple | None = None
    report: certify.CheckReport | None = None
    method: str = ""
    nodes: int = 0
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def feasible(self):
        return self.status == OPTIMAL

    def to_dict(self, timing=True):
        out = {
            "kind": self.kind.name,
            "status": self.status,
            "value": self.value,
            "witness": list(self.witness) if self.witness is not None else None,
            "report": self.report.to_dict() if self.report is not None else None,
            "method": self.method,
        }
        out.update(self.extra)
        if timing:
            out["stats"] = {"nodes": self.nodes, "elapsed": self.elapsed}
        return out

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing=timing), sort_keys=True)


def oracle_limit():
    return int(os.environ.get("ISODOM_ORACLE_LIMIT", DEFAULT_ORACLE_LIMIT))


def _finish(g, kind, mask, nodes, t0, method):
    elapsed = time.perf_counter() - t0
    if mask < 0:
        return SolveResult(kind, INFEASIBLE, method=method, nodes=int(nodes), elapsed=elapsed)
    witness = kernels.mask_to_set(mask)
    report = kind.checker(g, witness)
    if not report.verdict:
        raise AssertionError(f"{method} produced a set rejected by the {kind.name} checker: {witness}")
    return SolveResult(kind, OPTIMAL, len(witness), witness, report, method, int(nodes), elapsed)


def solve_brute(g, kind, limit=None):
    kind = ProblemKind.parse(kind)
    limit = oracle_limit() if limit is None else limit
    if g.n > limit:
        raise OracleLimitError(f"n={g.n} exceeds the brute-force oracle limit {limit}")
    t0 = time.perf_counter()
    open_nb, closed_nb = g.masks
    mask, nodes = kernels.brute_search(kind.value, open_nb, closed_nb, g.n)
    return _finish(g, kind, mask, nodes, t0, "brute")


def solve_bnb(g, kind, upper_bound=None):
    """Branch and bound. With ``upper_bound`` only sets of that size or less
    are sought; failing that the status is ``exceeds_bound``."""
    kind = ProblemKind.parse(kind)
    t0 = time.perf_counter()
    open_nb, closed_nb = g.masks
    best_init = g.n + 1 if upper_bound is None else min(g.n, upper_bound) + 1
    if upper_bound is not None and upper_bound < 0:
        best_init = 0
    mask, _, nodes = kernels.bnb_search(kind.value, open_nb, closed_nb, g.n, best_init)
    res = _finish(g, kind, mask, nodes, t0, "bnb")
    if upper_bound is not None:
        res.extra["upper_bound"] = upper_bound
        if not res.feasible:
            res.status = EXCEEDS_BOUND
    return res


@dataclass(frozen=True)
class DominationChain:
    gamma: int
    gamma_s: int
    gamma_0: int
    gamma_0s: int | None  # None: no ISDS exists


def domination_chain(g, limit=None):
    vals = {k: solve_brute(g, k, limit=limit) for k in ProblemKind}
    chain = DominationChain(vals[ProblemKind.DS].value, vals[ProblemKind.SDS].value,
                            vals[ProblemKind.IDS].value, vals[ProblemKind.ISDS].value)
    if g.n and not chain.gamma <= chain.gamma_s:
        raise AssertionError(f"gamma > gamma_s on {g!r}: {chain}")
    if g.n and not chain.gamma <= chain.gamma_0:
        raise AssertionError(f"gamma > gamma_0 on {g!r}: {chain}")
    if chain.gamma_0s is not None and not (chain.gamma_s <= chain.gamma_0s and chain.gamma_0 <= chain.gamma_0s):
        raise AssertionError(f"chain violated on {g!r}: {chain}")
    return chain
