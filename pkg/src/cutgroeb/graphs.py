"""Simple undirected graphs: named families, contraction, minors, induced cycles.

Vertices are labeled 1..m.  All values are immutable; every operation returns
a new graph.  Isomorphism and minor search are exhaustive and intended for
graphs with at most ~10 vertices.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..vertex_count with a fixed edge order."""

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        m = self.vertex_count
        if m < 1:
            raise ValueError("graph needs at least one vertex")
        seen = set()
        for e in self.edges:
            u, v = e
            if not (1 <= u < v <= m):
                raise ValueError(f"bad edge {e} for vertex count {m}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree_sequence(self) -> tuple[int, ...]:
        adj = self.adjacency()
        return tuple(sorted(len(adj[v]) for v in adj))

    def is_connected(self) -> bool:
        if self.vertex_count == 1:
            return True
        adj = self.adjacency()
        seen = {1}
        stack = [1]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q} on parts {1..p} and {p+1..p+q}."""
    if p < 1 or q < 1:
        raise ValueError("complete bipartite graph needs p, q >= 1")
    return Graph(p + q, tuple((u, v) for u in range(1, p + 1) for v in range(p + 1, p + q + 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph(n, tuple(sorted(edges)))


# 6 vertices, 7 edges; has an induced 5-cycle on {1,2,4,5,6} and contracting
# edge (5,6) yields K_{2,3}.  This labeling's cut configuration matches the
# fig1 fixture matrix up to row/column permutation (asserted in tests).
FIG1_EDGES: tuple[Edge, ...] = ((1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 6), (5, 6))


def fig1() -> Graph:
    return Graph(6, FIG1_EDGES)


def named_graph(name: str) -> Graph:
    """Resolve a CLI graph id: c<n>, k<n>, k<p>_<q>, k23, or fig1."""
    name = name.strip().lower()
    if name == "fig1":
        return fig1()
    if name == "k23":
        return complete_bipartite(2, 3)
    m = re.fullmatch(r"c(\d+)", name)
    if m:
        return cycle(int(m.group(1)))
    m = re.fullmatch(r"k(\d+)_(\d+)", name)
    if m:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"k(\d)", name)
    if m:
        return complete(int(m.group(1)))
    raise ValueError(f"unknown graph id {name!r}")


def parse_graph(text: str) -> Graph:
    """Read the plain text format: first line m, then one 'u v' line per edge."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph text")
    m = int(lines[0])
    edges = []
    for ln in lines[1:]:
        u, v = (int(t) for t in ln.split())
        edges.append((min(u, v), max(u, v)))
    return Graph(m, tuple(edges))


def format_graph(g: Graph) -> str:
    return "\n".join([str(g.vertex_count)] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def delete_edge(g: Graph, e: Edge) -> Graph:
    e = (min(e), max(e))
    if e not in g.edges:
        raise ValueError(f"edge {e} not in graph")
    return Graph(g.vertex_count, tuple(f for f in g.edges if f != e))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove v and its incident edges; higher labels shift down by one."""
    if not (1 <= v <= g.vertex_count):
        raise ValueError(f"vertex {v} out of range")
    if g.vertex_count == 1:
        raise ValueError("cannot delete the last vertex")

    def relabel(w: int) -> int:
        return w if w < v else w - 1

    edges = sorted(
        (relabel(a), relabel(b)) for a, b in g.edges if a != v and b != v
    )
    return Graph(g.vertex_count - 1, tuple(edges))


def contract_edge(g: Graph, e: Edge) -> Graph:
    """Merge the endpoints of e; loops vanish and parallel edges collapse.

    The merged vertex takes the smaller endpoint label and the remaining
    vertices are relabeled 1..m-1 preserving relative order.
    """
    e = (min(e), max(e))
    if e not in g.edges:
        raise ValueError(f"edge {e} not in graph")
    u0, v0 = e

    def relabel(w: int) -> int:
        if w == v0:
            w = u0
        return w if w < v0 else w - 1

    out = set()
    for a, b in g.edges:
        a2, b2 = relabel(a), relabel(b)
        if a2 != b2:
            out.add((min(a2, b2), max(a2, b2)))
    return Graph(g.vertex_count - 1, tuple(sorted(out)))


@lru_cache(maxsize=65536)
def canonical_form(g: Graph) -> tuple:
    """Lexicographically minimal adjacency code over all vertex orderings.

    Branch-and-bound over placements; the code is the tuple of adjacency
    bitmasks of each newly placed vertex towards the already placed ones.
    Exhaustive in the worst case, fine for <= ~10 vertices.
    """
    m = g.vertex_count
    adj = [0] * (m + 1)
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best: list[tuple] = [()]
    found = [False]

    def rec(placed: list[int], codes: tuple):
        k = len(placed)
        if found[0]:
            prefix = best[0][:k]
            if codes > prefix:
                return
            tight = codes == prefix
        else:
            tight = False
        if k == m:
            if not found[0] or codes < best[0]:
                best[0] = codes
                found[0] = True
            return
        placed_set = set(placed)
        for v in range(1, m + 1):
            if v in placed_set:
                continue
            code = 0
            for i, w in enumerate(placed):
                if adj[v] >> w & 1:
                    code |= 1 << i
            if tight and code > best[0][k]:
                continue
            rec(placed + [v], codes + (code,))

    rec([], ())
    return (m,) + best[0]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def has_minor(g: Graph, h: Graph) -> bool:
    """Exhaustive delete/contract search with canonical-form memoization."""
    target = canonical_form(h)
    hm, he = h.vertex_count, h.edge_count
    seen: set[tuple] = set()

    def search(cur: Graph) -> bool:
        if cur.vertex_count < hm or cur.edge_count < he:
            return False
        cf = canonical_form(cur)
        if cf in seen:
            return False
        seen.add(cf)
        if cur.vertex_count == hm and cur.edge_count == he:
            return cf == target
        adj = cur.adjacency()
        if cur.vertex_count > hm:
            for v in range(1, cur.vertex_count + 1):
                if not adj[v] and search(delete_vertex(cur, v)):
                    return True
        for e in cur.edges:
            if cur.edge_count > he and search(delete_edge(cur, e)):
                return True
            if cur.vertex_count > hm and search(contract_edge(cur, e)):
                return True
        return False

    return search(g)


def contraction_reachable(g: Graph, h: Graph) -> bool:
    """True iff h arises from g by edge contractions alone, up to isomorphism."""
    target = canonical_form(h)
    seen: set[tuple] = set()

    def search(cur: Graph) -> bool:
        cf = canonical_form(cur)
        if cf in seen:
            return False
        seen.add(cf)
        if cur.vertex_count == h.vertex_count:
            return cf == target
        if cur.vertex_count < h.vertex_count or cur.edge_count < h.edge_count:
            return False
        return any(search(contract_edge(cur, e)) for e in cur.edges)

    return search(g)


def has_long_induced_cycle(g: Graph, k: int) -> bool:
    """True iff some vertex subset of size >= k induces a chordless cycle."""
    if k < 3:
        raise ValueError("cycle length threshold must be >= 3")
    adj = g.adjacency()
    for size in range(k, g.vertex_count + 1):
        for subset in itertools.combinations(range(1, g.vertex_count + 1), size):
            sset = set(subset)
            if any(len(adj[v] & sset) != 2 for v in subset):
                continue
            # all induced degrees are 2: a disjoint union of cycles; connected
            # means a single chordless cycle
            seen = {subset[0]}
            stack = [subset[0]]
            while stack:
                for w in adj[stack.pop()] & sset:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == size:
                return True
    return False
