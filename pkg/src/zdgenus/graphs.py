"""Simple undirected graphs with bitmask adjacency, plus the zero-divisor
graph constructions and the invariants used by the verifier.

Vertices are indices 0..n-1 with string labels.  Adjacency rows are Python
ints used as bitsets, which keeps neighborhood intersections cheap for the
clique and biclique searches.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import inf

from .errors import InvalidSpec, MTooLarge, TooLarge, WholeRingIdeal
from .rings import RingTable
from .ideals import IdealSet, quotient


# === Core structure =========================================================


@dataclass(eq=False)
class SimpleGraph:
    """Undirected simple graph: bitmask adjacency rows plus vertex labels."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.adj) != self.n or len(self.labels) != self.n:
            raise InvalidSpec("adjacency/label length mismatch")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise InvalidSpec(f"self-loop at vertex {v}")
            if row >> self.n:
                raise InvalidSpec(f"adjacency row {v} out of range")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.adj[u] >> v & 1) != (self.adj[v] >> u & 1):
                    raise InvalidSpec(f"asymmetric adjacency {u},{v}")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in _bits(row))
        return out

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.m})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def make_graph(n: int, edges, labels=None) -> SimpleGraph:
    adj = [0] * n
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise InvalidSpec(f"bad edge ({u},{v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    return SimpleGraph(n, tuple(adj), tuple(labels))


def complete_graph(k: int) -> SimpleGraph:
    return make_graph(k, combinations(range(k), 2))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return make_graph(a + b, edges)


def complete_multipartite(*sizes: int) -> SimpleGraph:
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    part = []
    for p, s in enumerate(sizes):
        part.extend([p] * s)
    n = bounds[-1]
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part[u] != part[v]
    ]
    return make_graph(n, edges)


def path_graph(k: int) -> SimpleGraph:
    return make_graph(k, [(i, i + 1) for i in range(k - 1)])


def induced_subgraph(g: SimpleGraph, vertices) -> SimpleGraph:
    verts = list(vertices)
    pos = {v: i for i, v in enumerate(verts)}
    edges = [
        (pos[u], pos[v])
        for u, v in combinations(verts, 2)
        if g.has_edge(u, v)
    ]
    return make_graph(
        len(verts), edges, tuple(g.labels[v] for v in verts)
    )


def remove_vertices(g: SimpleGraph, vertices) -> SimpleGraph:
    drop = set(vertices)
    return induced_subgraph(g, [v for v in range(g.n) if v not in drop])


# === Zero-divisor graphs ====================================================


def zero_divisor_graph(t: RingTable) -> SimpleGraph:
    """Vertices are the nonzero zero-divisors; edges join annihilating pairs."""
    z = t.zero
    verts = []
    for x in range(t.order):
        if x == z:
            continue
        if any(int(t.mul[x, y]) == z for y in range(t.order) if y != z):
            verts.append(x)
    pos = {x: i for i, x in enumerate(verts)}
    edges = [
        (pos[x], pos[y])
        for x, y in combinations(verts, 2)
        if int(t.mul[x, y]) == z
    ]
    return make_graph(len(verts), edges, tuple(t.labels[x] for x in verts))


def ideal_zero_divisor_graph(t: RingTable, i: IdealSet) -> SimpleGraph:
    """Graph on elements outside I that multiply into I with a partner
    outside I; edges join pairs whose product lands in I.  Vertices are
    sorted by (coset index, element index)."""
    if i.is_whole():
        raise WholeRingIdeal("the whole ring leaves no outside elements")
    q = quotient(t, i)
    outside = [x for x in range(t.order) if not i.contains(x)]
    verts = []
    for x in outside:
        row = t.mul[x]
        if any(i.contains(int(row[y])) for y in outside):
            verts.append(x)
    verts.sort(key=lambda x: (q.projection[x], x))
    pos = {x: k for k, x in enumerate(verts)}
    edges = [
        (pos[x], pos[y])
        for x, y in combinations(verts, 2)
        if i.contains(int(t.mul[x, y]))
    ]
    return make_graph(len(verts), edges, tuple(t.labels[x] for x in verts))


def expand(g: SimpleGraph, t: int) -> SimpleGraph:
    """t-fold expansion: each vertex becomes t copies, copies of adjacent
    vertices are joined, copies of the same vertex are not."""
    if t < 1:
        raise InvalidSpec("expansion factor must be >= 1")
    n = g.n * t
    edges = []
    for u, v in g.edges():
        for a in range(t):
            for b in range(t):
                edges.append((u * t + a, v * t + b))
    labels = tuple(
        f"{g.labels[j]}#{a + 1}" for j in range(g.n) for a in range(t)
    )
    return make_graph(n, edges, labels)


# === Invariants =============================================================


def _bfs_dist(g: SimpleGraph, src: int, skip_edge=None) -> list:
    dist = [inf] * g.n
    dist[src] = 0
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            row = g.adj[u]
            if skip_edge is not None and u in skip_edge:
                row &= ~(1 << skip_edge[u])
            for v in _bits(row):
                if dist[v] is inf:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def is_connected(g: SimpleGraph) -> bool:
    if g.n == 0:
        return True
    return all(d is not inf for d in _bfs_dist(g, 0))


def connected_components(g: SimpleGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        dist = _bfs_dist(g, s)
        comp = [v for v in range(g.n) if dist[v] is not inf and not seen[v]]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def diameter(g: SimpleGraph):
    """Longest shortest path; 0 for the empty graph, inf if disconnected."""
    if g.n == 0:
        return 0
    best = 0
    for s in range(g.n):
        dist = _bfs_dist(g, s)
        worst = max(dist)
        if worst is inf:
            return inf
        best = max(best, worst)
    return best


def girth(g: SimpleGraph):
    """Length of a shortest cycle, inf for forests.  Each edge is removed in
    turn and the endpoint distance in the rest gives the best cycle through
    that edge."""
    best = inf
    for u, v in g.edges():
        dist = _bfs_dist(g, u, skip_edge={u: v, v: u})
        if dist[v] is not inf and dist[v] + 1 < best:
            best = dist[v] + 1
    return best


def clique_number(g: SimpleGraph) -> int:
    """Exact maximum clique size by branch and bound; 0 for the empty graph."""
    if g.n > 200:
        raise TooLarge(f"clique search capped at 200 vertices, got {g.n}")
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    best = 0

    def grow(size: int, cands: int):
        nonlocal best
        if size + cands.bit_count() <= best:
            return
        if cands == 0:
            best = max(best, size)
            return
        for v in order:
            if not (cands >> v & 1):
                continue
            grow(size + 1, cands & g.adj[v])
            cands &= ~(1 << v)
            if size + cands.bit_count() <= best:
                return

    grow(0, (1 << g.n) - 1)
    return best


def find_complete_subgraph(g: SimpleGraph, r: int):
    """Lexicographically least r-clique as a vertex list, or None."""
    if r == 0:
        return []

    def grow(chosen: list[int], cands: int):
        if len(chosen) == r:
            return list(chosen)
        if cands.bit_count() < r - len(chosen):
            return None
        for v in _bits(cands):
            chosen.append(v)
            above = ~((1 << (v + 1)) - 1)
            hit = grow(chosen, cands & g.adj[v] & above)
            chosen.pop()
            if hit is not None:
                return hit
        return None

    return grow([], (1 << g.n) - 1)


def find_biclique(g: SimpleGraph, m: int, n: int):
    """First complete bipartite K_{m,n} subgraph (not necessarily induced)
    in lexicographic order of the m-side, or None.  m is capped at 5."""
    if m > 5:
        raise MTooLarge(f"biclique side capped at m <= 5, got {m}")
    if m < 1 or n < 1 or m + n > g.n:
        return None
    for a in combinations(range(g.n), m):
        common = (1 << g.n) - 1
        for v in a:
            common &= g.adj[v]
        common &= ~sum(1 << v for v in a)
        if common.bit_count() >= n:
            return list(a), _bits(common)[:n]
    return None


# === Serialization ==========================================================


def export_dot(g: SimpleGraph) -> str:
    order = sorted(range(g.n), key=lambda v: (g.labels[v], v))
    rank = {v: k for k, v in enumerate(order)}
    lines = ["graph G {"]
    for v in order:
        label = g.labels[v].replace('"', '\\"')
        lines.append(f'  n{v} [label="{label}"];')
    pairs = sorted(
        (min(rank[u], rank[v]), max(rank[u], rank[v])) for u, v in g.edges()
    )
    for a, b in pairs:
        lines.append(f"  n{order[a]} -- n{order[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: SimpleGraph) -> str:
    data = {
        "n": g.n,
        "labels": list(g.labels),
        "edges": [[u, v] for u, v in g.edges()],
    }
    return json.dumps(data, indent=2) + "\n"


def graph_from_json(text: str) -> SimpleGraph:
    data = json.loads(text)
    try:
        n = data["n"]
        labels = tuple(data["labels"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSpec(f"malformed graph JSON: {exc}") from exc
    return make_graph(n, edges, labels)


# === Isomorphism ============================================================


def _refine(g: SimpleGraph, colors: list[int]) -> list[int]:
    """Stable neighborhood-color refinement."""
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def canonical_certificate(g: SimpleGraph) -> tuple:
    """Canonical form of the unlabeled graph: edge set minimized over all
    orderings compatible with iterated color refinement.  Capped at 40
    vertices since the search is exponential in the worst case."""
    if g.n > 40:
        raise TooLarge(f"canonical form capped at 40 vertices, got {g.n}")
    best: list[tuple[int, int]] | None = None

    def ordered_edges(perm: list[int]) -> list[tuple[int, int]]:
        rank = {v: i for i, v in enumerate(perm)}
        return sorted(
            (min(rank[u], rank[v]), max(rank[u], rank[v]))
            for u, v in g.edges()
        )

    def place(colors: list[int], prefix: list[int]):
        nonlocal best
        if len(prefix) == g.n:
            cand = ordered_edges(prefix)
            if best is None or cand < best:
                best = cand
            return
        cells: dict[int, list[int]] = {}
        placed = set(prefix)
        for v in range(g.n):
            if v not in placed:
                cells.setdefault(colors[v], []).append(v)
        target = min(cells.items(), key=lambda kv: (len(kv[1]), kv[0]))[1]
        if len(target) == 1:
            v = target[0]
            place(colors, prefix + [v])
            return
        for v in target:
            forced = list(colors)
            forced[v] = -1 - len(prefix)
            place(_refine(g, forced), prefix + [v])

    place(_refine(g, [0] * g.n), [])
    return (g.n, tuple(best if best is not None else []))


def graph_iso(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_certificate(g) == canonical_certificate(h)
