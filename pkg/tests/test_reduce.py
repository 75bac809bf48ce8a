import json

import pytest

from isodom import certify
from isodom.bench import sample_bipartite, sample_split
from isodom.graph import Bipartition, SplitPartition, gen_family, is_bipartite, split_partition
from isodom.reduce import (ReductionError, embed_ds_to_isds, embed_sds_to_isds,
                           extract_ds_from_isds, extract_sds_from_isds, reduce_dom_bipartite,
                           reduce_sdom_split)
from isodom.solve import solve_bnb, solve_brute

K2 = gen_family("complete", 2)
K2_BP = Bipartition(frozenset({0}), frozenset({1}))


def test_bipartite_counts_k2():
    art = reduce_dom_bipartite(K2, K2_BP, 1)
    assert (art.reduced.n, art.reduced.m, art.k_out) == (16, 17, 7)
    assert art.attestation()["counts_ok"]
    assert is_bipartite(art.reduced) is not None


def test_bipartite_gadget_wiring():
    art = reduce_dom_bipartite(gen_family("cycle", 4), is_bipartite(gen_family("cycle", 4)), 2)
    h, v = art.reduced, art.v
    assert [v(f"{c}1") for c in "abcdefg"] == list(range(4, 11))
    assert [v(f"{c}2") for c in "abcdefg"] == list(range(11, 18))
    for i in (1, 2):
        # 6-cycle a-b-c-d-e-f-a plus pendant g on a
        ring = [v(f"{c}{i}") for c in "abcdef"]
        for x, y in zip(ring, ring[1:] + ring[:1]):
            assert h.has_edge(x, y)
        assert h.neighbors(v(f"g{i}")) == {v(f"a{i}")}
        assert h.degree(v(f"c{i}")) == 2
    assert h.neighbors(v("a1")) == {0, 2, v("b1"), v("f1"), v("g1")}
    assert h.neighbors(v("a2")) == {1, 3, v("b2"), v("f2"), v("g2")}


def test_bipartite_rejects_bad_partition():
    with pytest.raises(ValueError):
        reduce_dom_bipartite(K2, Bipartition(frozenset({0, 1}), frozenset()), 1)


def test_embed_ds():
    art = reduce_dom_bipartite(K2, K2_BP, 1)
    d_star = embed_ds_to_isds(art, {0})
    assert len(d_star) == 7
    assert certify.is_isolate_secure_dominating(art.reduced, d_star).verdict
    d_star = embed_ds_to_isds(art, {0, 1})
    assert len(d_star) == 8 and certify.is_isolate_secure_dominating(art.reduced, d_star).verdict
    with pytest.raises(ValueError):
        embed_ds_to_isds(reduce_dom_bipartite(*_p3_bip(), 1), {0})


def _p3_bip():
    g = gen_family("path", 3)
    return g, is_bipartite(g)


def test_extract_ds_rejects_non_isds():
    art = reduce_dom_bipartite(K2, K2_BP, 1)
    d_star = set(embed_ds_to_isds(art, {0}))
    d_star.discard(art.v("a1"))  # g_1 no longer dominated
    with pytest.raises(ValueError, match="not an ISDS"):
        extract_ds_from_isds(art, d_star, 1)
    with pytest.raises(ValueError, match="exceeds"):
        extract_ds_from_isds(art, embed_ds_to_isds(art, {0, 1}), 1)


def test_extract_ds_roundtrip_and_optimum():
    for seed in range(25):
        g, bp = sample_bipartite(seed)
        gamma = solve_brute(g, "ds")
        art = reduce_dom_bipartite(g, bp, gamma.value)
        back = extract_ds_from_isds(art, embed_ds_to_isds(art, gamma.witness), gamma.value)
        assert certify.is_dominating(g, back).verdict and len(back) <= gamma.value
        best = solve_bnb(art.reduced, "isds")
        assert best.value == gamma.value + 6
        assert len(extract_ds_from_isds(art, best.witness, gamma.value)) == gamma.value


def test_split_counts_k3():
    k3 = gen_family("complete", 3)
    sp = SplitPartition(frozenset({0, 1, 2}), frozenset())
    art = reduce_sdom_split(k3, sp, 1)
    assert (art.reduced.n, art.reduced.m, art.k_out) == (7, 12, 3)
    art.reduced_partition.validate(art.reduced)
    c = sorted(art.reduced_partition.clique)
    assert all(art.reduced.has_edge(a, b) for i, a in enumerate(c) for b in c[i + 1:])
    assert art.reduced.neighbors(art.v("x2")) == {art.v("x1")}
    assert art.reduced.neighbors(art.v("y2")) == {art.v("y1")}


def test_split_rejects_bad_partition():
    with pytest.raises(ValueError):
        reduce_sdom_split(gen_family("path", 4), SplitPartition(frozenset({0, 1, 2}), frozenset({3})), 1)


def test_extract_sds_roundtrip_and_optimum():
    for seed in range(25):
        g, sp = sample_split(seed)
        gs = solve_brute(g, "sds")
        art = reduce_sdom_split(g, sp, gs.value)
        emb = embed_sds_to_isds(art, gs.witness)
        assert len(emb) == gs.value + 2
        assert certify.is_isolate_secure_dominating(art.reduced, emb).verdict
        back = extract_sds_from_isds(art, emb, gs.value)
        assert certify.is_secure_dominating_naive(g, back).verdict and len(back) <= gs.value
        best = solve_bnb(art.reduced, "isds")
        assert best.value == gs.value + 2
        assert len(extract_sds_from_isds(art, best.witness, gs.value)) == gs.value


def test_extract_sds_every_isds_small():
    """Every ISDS D* of a small reduced instance extracts to an SDS of size <= |D*| - 2."""
    from isodom import kernels
    seen_cases = set()
    for seed in range(40):
        g, sp = sample_split(seed, max_n=6)
        art = reduce_sdom_split(g, sp, 0)
        h = art.reduced
        open_nb, closed_nb = h.masks
        for mask in range(1 << h.n):
            if kernels.satisfies(kernels.ISDS, mask, open_nb, closed_nb, h.n):
                s = kernels.mask_to_set(mask)
                xs = {art.v("x1"), art.v("x2")} & set(s)
                ys = {art.v("y1"), art.v("y2")} & set(s)
                seen_cases.add((len(xs), len(ys)))
                d = extract_sds_from_isds(art, s, len(s) - 2)
                assert certify.is_secure_dominating_naive(g, d).verdict
                added = set(d) - set(s)
                assert added <= sp.clique
                spare = len(sp.clique - set(s))
                assert len(added) == min(spare, (len(xs) == 2) + (len(ys) == 2))
    assert seen_cases == {(1, 1), (1, 2), (2, 1), (2, 2)}


def test_extract_ds_every_isds_small():
    from isodom import kernels
    seen_cases = set()
    for seed in range(6):
        g, bp = sample_bipartite(seed, max_n=3)
        art = reduce_dom_bipartite(g, bp, 0)
        h = art.reduced
        open_nb, closed_nb = h.masks
        for mask in range(1 << h.n):
            if kernels.satisfies(kernels.ISDS, mask, open_nb, closed_nb, h.n):
                s = kernels.mask_to_set(mask)
                sizes = tuple(len({art.v(f"a{i}"), art.v(f"g{i}")} & set(s)) for i in (1, 2))
                seen_cases.add(sizes)
                d = extract_ds_from_isds(art, s, len(s) - 6)
                assert certify.is_dominating(g, d).verdict
                if sizes == (1, 1):
                    assert set(d) == set(s) & set(range(g.n))
    assert seen_cases == {(1, 1), (1, 2), (2, 1), (2, 2)}


def test_sidecar_json():
    art = reduce_dom_bipartite(K2, K2_BP, 1)
    side = json.loads(art.sidecar_json())
    assert side["k_out"] == 7 and side["vertex_names"]["g2"] == 15
    assert side["attestation"]["counts_ok"]


def test_disconnected_and_empty_side_inputs():
    from isodom.graph import Graph
    g = Graph.from_edges(3, [])
    art = reduce_dom_bipartite(g, Bipartition(frozenset({0, 1, 2}), frozenset()), 3)
    assert art.attestation()["counts_ok"]
    assert solve_bnb(art.reduced, "isds").value == 3 + 6
