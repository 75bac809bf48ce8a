"""Simple undirected graphs on vertices 0..n-1, edge-list I/O and generators.

Random instances use numpy's PCG64 bit generator seeded through
``numpy.random.SeedSequence(seed)`` (scheme ``RNG_SCHEME``). Each generator
draws one ``Generator.random()`` double per candidate pair, in the pair order
documented on the generator, and keeps the pair iff the draw is ``< p``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

RNG_SCHEME = "pcg64-seedseq-v1"


class GraphFormatError(ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class Graph:
    """Immutable simple graph. Use :meth:`from_edges` to build one."""

    def __init__(self, n, adjacency):
        self.n = n
        self.adjacency = tuple(frozenset(a) for a in adjacency)
        self.m = sum(len(a) for a in self.adjacency) // 2

    @classmethod
    def from_edges(cls, n, edges):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def neighbors(self, v):
        return self.adjacency[v]

    def closed_neighborhood(self, v):
        return self.adjacency[v] | {v}

    def degree(self, v):
        return len(self.adjacency[v])

    def has_edge(self, u, v):
        return v in self.adjacency[u]

    def edges(self):
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def vertices(self):
        return range(self.n)

    def induced(self, vertices):
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(len(keep), [(pos[u], pos[v]) for u, v in self.edges()
                                             if u in pos and v in pos])

    def is_complete(self):
        return self.m == self.n * (self.n - 1) // 2

    @cached_property
    def masks(self):
        """``(open, closed)`` int64 neighbourhood bitmasks for the kernels."""
        from .kernels import MAX_KERNEL_VERTICES
        if self.n > MAX_KERNEL_VERTICES:
            raise ValueError(f"bitmask kernels support at most {MAX_KERNEL_VERTICES} vertices")
        open_nb = np.zeros(self.n, dtype=np.int64)
        for v, nb in enumerate(self.adjacency):
            for u in nb:
                open_nb[v] |= np.int64(1) << np.int64(u)
        closed_nb = open_nb | (np.int64(1) << np.arange(self.n, dtype=np.int64))
        return open_nb, closed_nb

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    left: frozenset
    right: frozenset

    def validate(self, g):
        if self.left & self.right or (self.left | self.right) != set(range(g.n)):
            raise ValueError("bipartition parts must partition V")
        for u, v in g.edges():
            if (u in self.left) == (v in self.left):
                raise ValueError(f"edge ({u}, {v}) does not cross the bipartition")


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset
    independent: frozenset

    def validate(self, g):
        if self.clique & self.independent or (self.clique | self.independent) != set(range(g.n)):
            raise ValueError("split parts must partition V")
        c = sorted(self.clique)
        for i, u in enumerate(c):
            for v in c[i + 1:]:
                if not g.has_edge(u, v):
                    raise ValueError(f"clique part misses edge ({u}, {v})")
        for u in self.independent:
            if g.adjacency[u] & self.independent:
                raise ValueError(f"independent part has an edge at {u}")


# -- text and JSON forms -----------------------------------------------------

def parse_edge_list(text):
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` lines are comments."""
    header = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex id out of range 0..{n - 1}", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append((a, b, lineno))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    n, m = header
    if len(edges) != m:
        last = edges[-1][2] if edges else None
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}", last)
    return Graph.from_edges(n, [(a, b) for a, b, _ in edges])


def serialize_edge_list(g):
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines)


def graph_to_json(g):
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}, separators=(",", ":"))


def graph_from_json(text):
    data = json.loads(text) if isinstance(text, str) else text
    return Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def load_graph(text):
    """Accept either the edge-list text form or the JSON form."""
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return parse_edge_list(text)


# -- generators --------------------------------------------------------------

FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "star")


def gen_family(family, *sizes):
    """Named families with canonical numbering.

    ``path(n)``/``cycle(n)`` run 0..n-1 in order, ``complete_bipartite(m, n)``
    has left part 0..m-1, ``star(k)`` is K_{1,k} with centre 0.
    """
    if family in ("path", "cycle", "complete", "star"):
        if len(sizes) != 1:
            raise ValueError(f"{family} takes one size")
        (n,) = sizes
        if family == "path":
            if n < 1:
                raise ValueError("path needs n >= 1")
            return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
        if family == "cycle":
            if n < 3:
                raise ValueError("cycle needs n >= 3")
            return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
        if family == "complete":
            if n < 1:
                raise ValueError("complete graph needs n >= 1")
            return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
        if n < 1:
            raise ValueError("star needs at least one leaf")
        return gen_family("complete_bipartite", 1, n)
    if family == "complete_bipartite":
        if len(sizes) != 2:
            raise ValueError("complete_bipartite takes two sizes")
        m, n = sizes
        if m < 1 or n < 1:
            raise ValueError("complete_bipartite needs m, n >= 1")
        return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])
    raise ValueError(f"unknown family {family!r}")


def _rng(seed):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _check_p(p):
    if not 0.0 <= p <= 1.0:
        raise ValueError("probability must lie in [0, 1]")


def gen_random_bipartite(m, n, p, seed):
    """Left part 0..m-1, right part m..m+n-1; pairs drawn row-major (left outer)."""
    _check_p(p)
    rng = _rng(seed)
    draws = rng.random(m * n)
    edges = [(i, m + j) for i in range(m) for j in range(n) if draws[i * n + j] < p]
    g = Graph.from_edges(m + n, edges)
    return g, Bipartition(frozenset(range(m)), frozenset(range(m, m + n)))


def gen_random_split(c, i, p, seed):
    """Clique 0..c-1 (all edges), independent c..c+i-1; cross pairs row-major."""
    _check_p(p)
    rng = _rng(seed)
    draws = rng.random(c * i)
    edges = [(a, b) for a in range(c) for b in range(a + 1, c)]
    edges += [(a, c + b) for a in range(c) for b in range(i) if draws[a * i + b] < p]
    g = Graph.from_edges(c + i, edges)
    return g, SplitPartition(frozenset(range(c)), frozenset(range(c, c + i)))


def gen_random_graph(n, p, seed):
    """G(n, p); pairs (u, v), u < v, in lexicographic order."""
    _check_p(p)
    rng = _rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    draws = rng.random(len(pairs))
    return Graph.from_edges(n, [e for e, r in zip(pairs, draws) if r < p])


def gen_random_tree(n, seed):
    """Random recursive tree: vertex v >= 1 attaches to a uniform earlier vertex."""
    rng = _rng(seed)
    return Graph.from_edges(n, [(int(rng.integers(v)), v) for v in range(1, n)])


def random_spanning_subgraph(g, q, seed):
    """Keep each edge (in canonical order) independently with probability q."""
    _check_p(q)
    rng = _rng(seed)
    edges = g.edges()
    draws = rng.random(len(edges))
    return Graph.from_edges(g.n, [e for e, r in zip(edges, draws) if r < q])


# -- recognition -------------------------------------------------------------

def is_bipartite(g):
    """2-colour each component from its lowest id (coloured left); None on odd cycle."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    left = frozenset(v for v in range(g.n) if color[v] == 0)
    return Bipartition(left, frozenset(range(g.n)) - left)


def split_partition(g):
    """Hammer-Simeone degree test; None if g is not split.

    Vertices are ordered by degree descending, then id ascending; the clique
    is the longest prefix with ``d_i >= i - 1`` (1-based).
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    k = 0
    for i, d in enumerate(deg, start=1):
        if d >= i - 1:
            k = i
    if sum(deg[:k]) != k * (k - 1) + sum(deg[k:]):
        return None
    sp = SplitPartition(frozenset(order[:k]), frozenset(order[k:]))
    sp.validate(g)
    return sp
