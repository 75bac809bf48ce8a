"""Seeded sweeps shared by ``isodom bench`` and the test suite.

Each suite returns a list of row dicts; a row passes when its ``ok`` field is
true. Instance sizes are drawn from ``numpy.random.default_rng([seed, tag])``
and the graph itself from the generators in :mod:`isodom.graph` with ``seed``.
"""
from math import ceil

import numpy as np

from . import reduce as red
from .families import closed_form_isds_number
from .graph import gen_family, gen_random_bipartite, gen_random_graph, gen_random_split
from .solve import ProblemKind, domination_chain, solve_bnb, solve_brute
from .treewidth import make_nice, min_fill_decomposition, validate_decomposition
from .treewidth import dp_min_dominating_set, dp_min_isolate_dominating_set

SUITES = ("formulas", "reductions", "treewidth", "chain")


def sample_graph(seed, n_min=2, n_max=10, tag=0):
    rng = np.random.default_rng([seed, tag])
    n = int(rng.integers(n_min, n_max + 1))
    p = float(rng.choice([0.2, 0.35, 0.5, 0.7]))
    return gen_random_graph(n, p, seed)


def sample_bipartite(seed, max_n=8):
    rng = np.random.default_rng([seed, 1])
    total = int(rng.integers(2, max_n + 1))
    m = int(rng.integers(1, total))
    p = float(rng.choice([0.3, 0.5, 0.7]))
    return gen_random_bipartite(m, total - m, p, seed)


def sample_split(seed, max_n=8):
    rng = np.random.default_rng([seed, 2])
    total = int(rng.integers(2, max_n + 1))
    c = int(rng.integers(1, total + 1))
    p = float(rng.choice([0.3, 0.5, 0.7]))
    return gen_random_split(c, total - c, p, seed)


def formulas_rows(n_lo=4, n_hi=18):
    rows = []
    for family in ("path", "cycle"):
        for n in range(n_lo, n_hi + 1):
            res = solve_brute(gen_family(family, n), ProblemKind.ISDS)
            cf = closed_form_isds_number(family, n)
            rows.append({"family": family, "n": n, "formula": ceil(3 * n / 7),
                         "closed_form": cf, "brute": res.value,
                         "formula_equal": res.value == ceil(3 * n / 7),
                         "ok": res.value == cf})
    return rows


def bipartite_reduction_row(seed, max_n=8):
    g, bp = sample_bipartite(seed, max_n)
    gamma = solve_brute(g, ProblemKind.DS)
    art = red.reduce_dom_bipartite(g, bp, gamma.value)
    best = solve_bnb(art.reduced, ProblemKind.ISDS)
    embedded = red.embed_ds_to_isds(art, gamma.witness)
    back = red.extract_ds_from_isds(art, embedded, gamma.value)
    from_opt = red.extract_ds_from_isds(art, best.witness, gamma.value)
    att = art.attestation()
    return {"kind": "dom-bipartite", "seed": seed, "n": g.n, "m": g.m,
            "gamma": gamma.value, "gamma_0s_reduced": best.value,
            "counts_ok": att["counts_ok"], "roundtrip_size": len(back),
            "extracted_from_optimum": len(from_opt),
            "ok": best.value == gamma.value + 6 and att["counts_ok"]
            and len(back) <= gamma.value and len(from_opt) == gamma.value}


def split_reduction_row(seed, max_n=8):
    g, sp = sample_split(seed, max_n)
    gs = solve_brute(g, ProblemKind.SDS)
    art = red.reduce_sdom_split(g, sp, gs.value)
    best = solve_bnb(art.reduced, ProblemKind.ISDS)
    embedded = red.embed_sds_to_isds(art, gs.witness)
    back = red.extract_sds_from_isds(art, embedded, gs.value)
    from_opt = red.extract_sds_from_isds(art, best.witness, gs.value)
    att = art.attestation()
    return {"kind": "sdom-split", "seed": seed, "n": g.n, "m": g.m,
            "gamma_s": gs.value, "gamma_0s_reduced": best.value,
            "counts_ok": att["counts_ok"], "roundtrip_size": len(back),
            "extracted_from_optimum": len(from_opt),
            "ok": best.value == gs.value + 2 and att["counts_ok"]
            and len(back) <= gs.value and len(from_opt) == gs.value}


def reductions_rows(count=20):
    rows = [bipartite_reduction_row(s) for s in range(count)]
    rows += [split_reduction_row(s) for s in range(count)]
    return rows


def treewidth_row(g, seed=None):
    td = min_fill_decomposition(g)
    valid = bool(validate_decomposition(g, td))
    ntd = make_nice(td, g=g)
    ds = dp_min_dominating_set(g, ntd)
    ids = dp_min_isolate_dominating_set(g, ntd)
    bds = solve_brute(g, ProblemKind.DS)
    bids = solve_brute(g, ProblemKind.IDS)
    return {"seed": seed, "n": g.n, "m": g.m, "width": td.width, "valid": valid,
            "dp_ds": ds.value, "brute_ds": bds.value,
            "dp_ids": ids.value, "brute_ids": bids.value,
            "ok": valid and ds.value == bds.value and ids.value == bids.value}


def treewidth_rows(count=50, n_max=12, width_cap=4):
    rows = []
    seed = 0
    while len(rows) < count:
        g = sample_graph(seed, 2, n_max, tag=3)
        if min_fill_decomposition(g).width <= width_cap:
            rows.append(treewidth_row(g, seed))
        seed += 1
    return rows


def chain_rows(count=50, n_max=10):
    rows = []
    for seed in range(count):
        g = sample_graph(seed, 1, n_max, tag=4)
        ch = domination_chain(g)
        feasible = ch.gamma_0s is not None
        ok = ch.gamma <= ch.gamma_s and ch.gamma <= ch.gamma_0
        if feasible:
            ok = ok and ch.gamma_s <= ch.gamma_0s and ch.gamma_0 <= ch.gamma_0s
        rows.append({"seed": seed, "n": g.n, "m": g.m, "gamma": ch.gamma, "gamma_s": ch.gamma_s,
                     "gamma_0": ch.gamma_0, "gamma_0s": ch.gamma_0s, "ok": ok})
    return rows


def run_suite(name, count=None):
    if name == "formulas":
        return formulas_rows()
    kwargs = {} if count is None else {"count": count}
    if name == "reductions":
        return reductions_rows(**kwargs)
    if name == "treewidth":
        return treewidth_rows(**kwargs)
    if name == "chain":
        return chain_rows(**kwargs)
    raise ValueError(f"unknown suite {name!r}")
