"""Tree decompositions: min-fill construction, validation, nice form, and
exact dynamic programmes for minimum dominating and isolate dominating sets.

Text format for decompositions (0-based node and vertex ids, ``#`` comments)::

    td <node-count>
    b <node> <vertex> <vertex> ...     one line per node, possibly no vertices
    e <node> <node>                    one line per tree edge
"""
from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass

from . import certify
from .solve import INFEASIBLE, OPTIMAL, ProblemKind, SolveResult

LEAF, INTRODUCE, FORGET, JOIN = "leaf", "introduce", "forget", "join"

# DP labels, in table iteration order
IN_ISO, IN_NISO, OUT_DOM, OUT_UNDOM = 0, 1, 2, 3
LABEL_NAMES = ("IN_SET_ISOLATED_SO_FAR", "IN_SET_NOT_ISOLATED", "OUT_DOMINATED", "OUT_UNDOMINATED")


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple
    edges: tuple

    @classmethod
    def build(cls, bags, edges):
        return cls(tuple(frozenset(b) for b in bags),
                   tuple(sorted((min(a, b), max(a, b)) for a, b in edges)))

    @property
    def width(self):
        return max((len(b) for b in self.bags), default=0) - 1

    def neighbors(self):
        adj = [[] for _ in self.bags]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return [sorted(x) for x in adj]


@dataclass(frozen=True)
class NiceTreeDecomposition:
    """Rooted nice decomposition; nodes are stored children-first."""
    kinds: tuple
    bags: tuple
    vertex: tuple  # introduced / forgotten vertex, None for leaf and join
    children: tuple
    root: int

    @property
    def width(self):
        return max((len(b) for b in self.bags), default=0) - 1

    def __len__(self):
        return len(self.kinds)

    def as_tree_decomposition(self):
        edges = [(i, c) for i, ch in enumerate(self.children) for c in ch]
        return TreeDecomposition.build(self.bags, edges)


# -- validation --------------------------------------------------------------

def _tree_problem(td):
    """None if the node graph is a tree, else a description."""
    k = len(td.bags)
    if k == 0:
        return "decomposition has no nodes"
    if any(not (0 <= a < k and 0 <= b < k) or a == b for a, b in td.edges):
        return "tree edge references an invalid node"
    if len(set(td.edges)) != len(td.edges):
        return "repeated tree edge"
    if len(td.edges) != k - 1:
        return f"{k} nodes need {k - 1} tree edges, got {len(td.edges)}"
    adj = td.neighbors()
    seen = {0}
    stack = [0]
    while stack:
        for b in adj[stack.pop()]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    if len(seen) != k:
        return "tree is disconnected"
    return None


def _trace_components(td, v):
    nodes = [i for i, b in enumerate(td.bags) if v in b]
    node_set = set(nodes)
    adj = td.neighbors()
    comps = 0
    seen = set()
    for start in nodes:
        if start in seen:
            continue
        comps += 1
        seen.add(start)
        stack = [start]
        while stack:
            for b in adj[stack.pop()]:
                if b in node_set and b not in seen:
                    seen.add(b)
                    stack.append(b)
    return comps


def validate_decomposition(g, td):
    """Check vertex coverage (i), edge coverage (ii) and connected traces (iii),
    then that the node graph is a tree."""
    covered = set().union(*td.bags) if td.bags else set()
    stray = sorted(covered - set(range(g.n)))
    if stray:
        return certify.CheckReport(False, violation={"condition": "bags", "vertex": stray[0],
                                                     "detail": "bag holds a non-vertex"})
    for v in range(g.n):
        if v not in covered:
            return certify.CheckReport(False, violation={"condition": "i", "vertex": v})
    for u, v in g.edges():
        if not any(u in b and v in b for b in td.bags):
            return certify.CheckReport(False, violation={"condition": "ii", "edge": [u, v]})
    for v in range(g.n):
        if _trace_components(td, v) > 1:
            return certify.CheckReport(False, violation={"condition": "iii", "vertex": v})
    problem = _tree_problem(td)
    if problem:
        return certify.CheckReport(False, violation={"condition": "tree", "detail": problem})
    return certify.CheckReport(True)


# -- construction ------------------------------------------------------------

def min_fill_ordering(g):
    """Elimination order by (fill-in, degree, id)."""
    adj = [set(a) for a in g.adjacency]
    alive = set(range(g.n))
    order = []
    while alive:
        best = None
        for v in sorted(alive):
            nb = sorted(adj[v])
            fill = sum(1 for i, a in enumerate(nb) for b in nb[i + 1:] if b not in adj[a])
            key = (fill, len(nb), v)
            if best is None or key < best:
                best = key
        v = best[2]
        nb = adj[v]
        for a in nb:
            adj[a] |= nb - {a}
            adj[a].discard(v)
        order.append(v)
        alive.discard(v)
    return order


def min_fill_decomposition(g):
    if g.n == 0:
        return TreeDecomposition.build([()], [])
    order = min_fill_ordering(g)
    pos = {v: i for i, v in enumerate(order)}
    adj = [set(a) for a in g.adjacency]
    bags, parents = [], []
    for v in order:
        nb = adj[v]
        bags.append({v} | nb)
        parents.append(min((pos[u] for u in nb), default=None))
        for a in nb:
            adj[a] |= nb - {a}
            adj[a].discard(v)
    edges = [(i, p) for i, p in enumerate(parents) if p is not None]
    roots = [i for i, p in enumerate(parents) if p is None]
    if len(roots) > 1:
        hub = len(bags)
        bags.append(set())
        edges += [(r, hub) for r in roots]
    return TreeDecomposition.build(bags, edges)


def make_nice(td, root=0, g=None):
    """Nice form of ``td`` rooted at ``root`` with an empty root bag."""
    if g is not None:
        rep = validate_decomposition(g, td)
        if not rep:
            raise ValueError(f"invalid tree decomposition: {rep.violation}")
    else:
        problem = _tree_problem(td)
        if problem:
            raise ValueError(f"invalid tree decomposition: {problem}")
        for v in set().union(*td.bags):
            if _trace_components(td, v) > 1:
                raise ValueError(f"invalid tree decomposition: trace of {v} is disconnected")

    kinds, bags, verts, children = [], [], [], []

    def add(kind, bag, v, ch):
        kinds.append(kind)
        bags.append(frozenset(bag))
        verts.append(v)
        children.append(tuple(ch))
        return len(kinds) - 1

    def move(top, src, dst):
        cur = set(src)
        for v in sorted(src - dst):
            cur.discard(v)
            top = add(FORGET, cur, v, (top,))
        for v in sorted(dst - src):
            cur.add(v)
            top = add(INTRODUCE, cur, v, (top,))
        return top

    adj = td.neighbors()
    # iterative post-order over the decomposition tree
    tops = {}
    stack = [(root, -1, False)]
    while stack:
        t, parent, done = stack.pop()
        if not done:
            stack.append((t, parent, True))
            for c in reversed(adj[t]):
                if c != parent:
                    stack.append((c, t, False))
            continue
        bag = td.bags[t]
        subs = [move(tops.pop(c), td.bags[c], bag) for c in adj[t] if c != parent]
        if not subs:
            subs = [move(add(LEAF, (), None, ()), frozenset(), bag)]
        cur = subs[0]
        for other in subs[1:]:
            cur = add(JOIN, bag, None, (cur, other))
        tops[t] = cur
    top = move(tops[root], td.bags[root], frozenset())
    return NiceTreeDecomposition(tuple(kinds), tuple(bags), tuple(verts), tuple(children), top)


def check_nice(ntd):
    for i, kind in enumerate(ntd.kinds):
        bag, ch = ntd.bags[i], ntd.children[i]
        if any(c >= i for c in ch):
            raise ValueError(f"node {i}: children must precede parents")
        if kind == LEAF:
            ok = not ch and not bag
        elif kind == INTRODUCE:
            ok = len(ch) == 1 and bag == ntd.bags[ch[0]] | {ntd.vertex[i]} and ntd.vertex[i] not in ntd.bags[ch[0]]
        elif kind == FORGET:
            ok = len(ch) == 1 and bag == ntd.bags[ch[0]] - {ntd.vertex[i]} and ntd.vertex[i] in ntd.bags[ch[0]]
        elif kind == JOIN:
            ok = len(ch) == 2 and all(ntd.bags[c] == bag for c in ch)
        else:
            ok = False
        if not ok:
            raise ValueError(f"node {i} is not a well-formed {kind} node")
    if ntd.bags[ntd.root]:
        raise ValueError("root bag must be empty")


# -- serialization -----------------------------------------------------------

def serialize_decomposition(td):
    lines = [f"td {len(td.bags)}"]
    for i, b in enumerate(td.bags):
        lines.append(" ".join(["b", str(i)] + [str(v) for v in sorted(b)]))
    lines += [f"e {a} {b}" for a, b in td.edges]
    return "\n".join(lines)


def parse_decomposition(text):
    count = None
    bags = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        try:
            nums = [int(x) for x in tok[1:]]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token") from None
        if tok[0] == "td" and len(nums) == 1 and count is None:
            count = nums[0]
        elif tok[0] == "b" and nums and count is not None:
            if nums[0] in bags or not 0 <= nums[0] < count:
                raise ValueError(f"line {lineno}: bad or repeated node id {nums[0]}")
            bags[nums[0]] = nums[1:]
        elif tok[0] == "e" and len(nums) == 2 and count is not None:
            edges.append(tuple(nums))
        else:
            raise ValueError(f"line {lineno}: unexpected {line!r}")
    if count is None or len(bags) != count:
        raise ValueError("decomposition must declare 'td <count>' and one bag per node")
    return TreeDecomposition.build([bags[i] for i in range(count)], edges)


# -- dynamic programming -----------------------------------------------------

def _is_in(label):
    return label <= IN_NISO


def run_dp(g, ntd, isolate):
    """Fill the DP tables bottom-up.

    A state is ``(labels, flag)`` with one label per bag vertex in sorted
    order; ``flag`` records that a forgotten set vertex stayed isolated. Each
    table maps state -> (size, back-pointer). Returns ``(tables, ops)``.
    """
    tables = []
    ops = 0
    for i, kind in enumerate(ntd.kinds):
        table = {}
        ch = ntd.children[i]

        def offer(state, value, back):
            old = table.get(state)
            if old is None or value < old[0]:
                table[state] = (value, back)

        if kind == LEAF:
            table[((), False)] = (0, None)
        elif kind == INTRODUCE:
            v = ntd.vertex[i]
            child_bag = sorted(ntd.bags[ch[0]])
            pos = sorted(ntd.bags[i]).index(v)
            nb_idx = [j for j, w in enumerate(child_bag) if g.has_edge(v, w)]
            for state in sorted(tables[ch[0]]):
                labels, flag = state
                value = tables[ch[0]][state][0]
                ops += 1
                touches_set = any(_is_in(labels[j]) for j in nb_idx)
                new = list(labels)
                for j in nb_idx:
                    if new[j] == OUT_UNDOM:
                        new[j] = OUT_DOM
                    elif new[j] == IN_ISO and isolate:
                        new[j] = IN_NISO
                own = IN_NISO if (isolate and touches_set) else IN_ISO
                new.insert(pos, own)
                offer((tuple(new), flag), value + 1, state)
                new = list(labels)
                new.insert(pos, OUT_DOM if touches_set else OUT_UNDOM)
                offer((tuple(new), flag), value, state)
        elif kind == FORGET:
            pos = sorted(ntd.bags[ch[0]]).index(ntd.vertex[i])
            for state in sorted(tables[ch[0]]):
                labels, flag = state
                ops += 1
                lab = labels[pos]
                if lab == OUT_UNDOM:
                    continue
                new_flag = flag or (isolate and lab == IN_ISO)
                offer((labels[:pos] + labels[pos + 1:], new_flag), tables[ch[0]][state][0], state)
        else:
            left, right = tables[ch[0]], tables[ch[1]]
            groups = defaultdict(list)
            for state in sorted(right):
                groups[tuple(_is_in(x) for x in state[0])].append(state)
            for s1 in sorted(left):
                sig = tuple(_is_in(x) for x in s1[0])
                in_count = sum(sig)
                for s2 in groups[sig]:
                    ops += 1
                    merged = []
                    for a, b in zip(s1[0], s2[0]):
                        if _is_in(a):
                            merged.append(IN_NISO if IN_NISO in (a, b) else IN_ISO)
                        else:
                            merged.append(OUT_DOM if OUT_DOM in (a, b) else OUT_UNDOM)
                    value = left[s1][0] + right[s2][0] - in_count
                    offer((tuple(merged), s1[1] or s2[1]), value, (s1, s2))
        tables.append(table)
    return tables, ops


def _reconstruct(ntd, tables, state):
    chosen = set()
    stack = [(ntd.root, state)]
    while stack:
        i, st = stack.pop()
        kind = ntd.kinds[i]
        back = tables[i][st][1]
        if kind == LEAF:
            continue
        if kind == INTRODUCE:
            v = ntd.vertex[i]
            if _is_in(st[0][sorted(ntd.bags[i]).index(v)]):
                chosen.add(v)
            stack.append((ntd.children[i][0], back))
        elif kind == FORGET:
            stack.append((ntd.children[i][0], back))
        else:
            stack.append((ntd.children[i][0], back[0]))
            stack.append((ntd.children[i][1], back[1]))
    return tuple(sorted(chosen))


def _solve_dp(g, ntd, kind):
    t0 = time.perf_counter()
    rep = validate_decomposition(g, ntd.as_tree_decomposition())
    if not rep:
        raise ValueError(f"invalid tree decomposition: {rep.violation}")
    check_nice(ntd)
    isolate = kind is ProblemKind.IDS
    tables, ops = run_dp(g, ntd, isolate)
    final = ((), isolate)
    root = tables[ntd.root]
    if final not in root:
        # only the empty graph lacks an isolate dominating set
        return SolveResult(kind, INFEASIBLE, method="treewidth", nodes=ops,
                           elapsed=time.perf_counter() - t0)
    witness = _reconstruct(ntd, tables, final)
    report = kind.checker(g, witness)
    if not report or len(witness) != root[final][0]:
        raise AssertionError(f"DP witness {witness} inconsistent with value {root[final][0]}")
    return SolveResult(kind, OPTIMAL, len(witness), witness, report, "treewidth", ops,
                       time.perf_counter() - t0, {"width": ntd.width, "nice_nodes": len(ntd)})


def dp_min_dominating_set(g, ntd):
    return _solve_dp(g, ntd, ProblemKind.DS)


def dp_min_isolate_dominating_set(g, ntd):
    return _solve_dp(g, ntd, ProblemKind.IDS)


def solve_treewidth(g, kind, td=None):
    """Convenience: decompose (min-fill unless ``td`` is given), make nice, run the DP."""
    kind = ProblemKind.parse(kind)
    if kind not in (ProblemKind.DS, ProblemKind.IDS):
        raise ValueError("treewidth DPs cover DS and IDS only")
    td = min_fill_decomposition(g) if td is None else td
    ntd = make_nice(td, g=g)
    return _solve_dp(g, ntd, kind)
