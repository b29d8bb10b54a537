"""Trees on vertices ``0..n-1``: construction, structural queries, I/O and
isomorphism canonicalization.

A :class:`Tree` is immutable and validated at construction, so every other
module may assume connectivity and ``n - 1`` edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidVertex, MalformedEdgeList, MalformedGraph6, NotATree, SelfLoop, TooLarge

Edge = tuple[int, int]

GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class Tree:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise NotATree(f"adjacency has {len(self.adjacency)} rows for n={self.n}")

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v!r} not in 0..{self.n - 1}")
        return v

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Build a validated tree; raises NotATree, InvalidVertex or SelfLoop."""
    if n < 1:
        raise NotATree("a tree needs at least one vertex")
    adj: list[set[int]] = [set() for _ in range(n)]
    count = 0
    for pair in edges:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < n:
                raise InvalidVertex(f"vertex {x} not in 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        if v in adj[u]:
            raise NotATree(f"repeated edge {u}-{v}")
        adj[u].add(v)
        adj[v].add(u)
        count += 1
    if count != n - 1:
        raise NotATree(f"{count} edges on {n} vertices")
    seen = [False] * n
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                stack.append(w)
    if reached != n:
        raise NotATree("graph is disconnected")
    return Tree(n, tuple(tuple(sorted(a)) for a in adj))


def path(n: int) -> Tree:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Tree:
    """K_{1,k} with center 0."""
    return from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def leaves(t: Tree) -> frozenset[int]:
    return frozenset(v for v in range(t.n) if t.degree(v) == 1)


def supports(t: Tree) -> frozenset[int]:
    lv = leaves(t)
    return frozenset(v for v in range(t.n) if any(w in lv for w in t.adjacency[v]))


def bfs_distances(t: Tree, source: int) -> list[int]:
    t.check_vertex(source)
    dist = [-1] * t.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in t.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(t: Tree, u: int, v: int) -> int:
    t.check_vertex(v)
    return bfs_distances(t, u)[v]


def diameter(t: Tree) -> int:
    d0 = bfs_distances(t, 0)
    far = max(range(t.n), key=d0.__getitem__)
    return max(bfs_distances(t, far))


def is_star(t: Tree) -> bool:
    return t.n >= 2 and diameter(t) <= 2


def relabel(t: Tree, perm: Sequence[int]) -> Tree:
    """Return the tree with vertex ``v`` renamed ``perm[v]``."""
    return from_edges(t.n, [(perm[u], perm[v]) for u, v in t.edges()])


def attach(t: Tree, v: int, other: Tree, at: int) -> Tree:
    """Disjoint union of ``t`` and ``other`` plus the edge ``v``-``at``.

    Vertices of ``other`` are renumbered ``t.n + i``.
    """
    t.check_vertex(v)
    other.check_vertex(at)
    off = t.n
    edges = t.edges() + [(a + off, b + off) for a, b in other.edges()] + [(v, at + off)]
    return from_edges(t.n + other.n, edges)


def delete_vertices(t: Tree, removed: Iterable[int]) -> tuple[Tree, dict[int, int]]:
    """Delete vertices; the remainder must still be a tree.

    Returns the new tree and the old-to-new index map for surviving vertices.
    """
    gone = set(removed)
    keep = [v for v in range(t.n) if v not in gone]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in t.edges() if u in index and v in index]
    return from_edges(len(keep), edges), index


# --- graph6 -----------------------------------------------------------------


def to_graph6(t: Tree) -> bytes:
    if t.n > GRAPH6_MAX_N:
        raise TooLarge(f"graph6 short form holds at most {GRAPH6_MAX_N} vertices, got {t.n}")
    bits = []
    for j in range(1, t.n):
        row = t.adjacency[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = bytearray([t.n + 63])
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        out.append(value + 63)
    return bytes(out)


def parse_graph6(s: bytes | str) -> Tree:
    if isinstance(s, str):
        s = s.encode("ascii", errors="replace")
    s = s.strip()
    if s.startswith(b">>graph6<<"):
        s = s[len(b">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= c <= 126 for c in s):
        raise MalformedGraph6(f"byte outside graph6 range in {s!r}")
    if s[0] == 126:
        raise TooLarge("graph6 long form (n > 62) is not supported")
    n = s[0] - 63
    if n < 1:
        raise NotATree("graph6 encodes the empty graph")
    nbits = n * (n - 1) // 2
    data = s[1:]
    if len(data) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(data)}")
    bits = []
    for c in data:
        value = c - 63
        bits.extend((value >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)


# --- plain edge list ----------------------------------------------------------


def to_edge_list(t: Tree) -> str:
    lines = [str(t.n)] + [f"{u} {v}" for u, v in t.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Tree:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 1:
        raise MalformedEdgeList("first line must hold the vertex count")
    try:
        n = int(rows[0][0])
        edges = []
        for row in rows[1:]:
            if len(row) != 2:
                raise MalformedEdgeList(f"bad edge line {' '.join(row)!r}")
            edges.append((int(row[0]), int(row[1])))
    except ValueError as exc:
        raise MalformedEdgeList(str(exc)) from None
    return from_edges(n, edges)


# --- canonical form -------------------------------------------------------------


def centroids(t: Tree) -> list[int]:
    """The one or two vertices minimizing the largest remaining component."""
    if t.n == 1:
        return [0]
    parent = [-1] * t.n
    order = [0]
    parent[0] = 0
    for u in order:
        for w in t.adjacency[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
    size = [1] * t.n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    best: list[int] = []
    best_weight = t.n
    for u in range(t.n):
        weight = max([t.n - size[u]] + [size[w] for w in t.adjacency[u] if parent[w] == u])
        if weight < best_weight:
            best, best_weight = [u], weight
        elif weight == best_weight:
            best.append(u)
    return best


def rooted_code(t: Tree, root: int, colors: Sequence[str] | None = None) -> bytes:
    """AHU parenthesis code of ``t`` rooted at ``root``; children codes sorted."""
    parent = [-1] * t.n
    parent[root] = root
    order = [root]
    for u in order:
        for w in t.adjacency[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
    codes: list[bytes] = [b""] * t.n
    children: list[list[bytes]] = [[] for _ in range(t.n)]
    for u in reversed(order):
        tag = colors[u].encode() if colors is not None else b""
        codes[u] = b"(" + tag + b"".join(sorted(children[u])) + b")"
        if u != root:
            children[parent[u]].append(codes[u])
    return codes[root]


def canonical_form(t: Tree, colors: Sequence[str] | None = None) -> bytes:
    """Byte string equal for two trees iff they are isomorphic.

    With ``colors`` (one short string per vertex) the code identifies the
    tree up to color-preserving isomorphism.
    """
    return min(rooted_code(t, c, colors) for c in centroids(t))


def tree_from_code(code: bytes) -> Tree:
    """Rebuild a tree (some labeling of it) from an uncolored canonical code."""
    edges: list[Edge] = []
    stack: list[int] = []
    n = 0
    for c in code:
        if c == ord("("):
            if stack:
                edges.append((stack[-1], n))
            stack.append(n)
            n += 1
        elif c == ord(")"):
            stack.pop()
        else:
            raise ValueError(f"unexpected byte {c!r} in uncolored code")
    return from_edges(n, edges)


def edge_set(t: Tree) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(e) for e in t.edges())


def degree_sequence(t: Tree) -> list[int]:
    return sorted((t.degree(v) for v in range(t.n)), reverse=True)

