"""Streams of all non-isomorphic free trees of a given order.

The fast path walks canonical level sequences with the successor rule of
Wright, Richmond, Odlyzko and McKay (constant amortized time per tree). The
independent oracle decodes every Prüfer sequence and deduplicates by
canonical form; it is only feasible for small orders.
"""

from __future__ import annotations

import heapq
from itertools import product
from pathlib import Path
from typing import Iterable, Iterator

from .config import Guardrails, check_limit
from .graph_core import Tree, canonical_form, from_edges, to_graph6


def _tree_from_levels(levels: list[int]) -> Tree:
    edges = []
    last_at_depth: dict[int, int] = {}
    for i, depth in enumerate(levels):
        if depth > 0:
            edges.append((last_at_depth[depth - 1], i))
        last_at_depth[depth] = i
    return from_edges(len(levels), edges)


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split at the second depth-1 vertex: first root subtree, and the rest."""
    m = len(levels)
    seen_one = False
    for i, d in enumerate(levels):
        if d == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [d - 1 for d in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_free(candidate: list[int]) -> list[int] | None:
    left, rest = _split(candidate)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return candidate
    p = len(left)
    nxt = _next_rooted(candidate, p)
    if nxt is not None and candidate[p] > 2:
        new_left, _ = _split(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[-len(suffix):] = suffix
    return nxt


def _free_level_sequences(n: int) -> Iterator[list[int]]:
    if n == 1:
        yield [0]
        return
    if n == 2:
        yield [0, 1]
        return
    # the path, rooted at its center, is the first sequence
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is not None:
            yield levels
            levels = _next_rooted(levels)


class TreeStream:
    """Iterator over the trees of one order, resumable and shardable.

    ``position`` counts emissions of the underlying (unsharded) sequence, so a
    stream restarted with ``start=position`` continues where it stopped.
    Worker ``shard`` of ``shards`` receives positions congruent to ``shard``.
    """

    def __init__(self, order: int, *, start: int = 0, shard: int = 0, shards: int = 1,
                 limits: Guardrails | None = None) -> None:
        limits = limits or Guardrails.from_env()
        if order < 1:
            raise ValueError("order must be at least 1")
        if not 0 <= shard < shards:
            raise ValueError(f"shard {shard} not in 0..{shards - 1}")
        check_limit(order, limits.enumeration_n, "all_trees")
        self.order = order
        self.position = 0
        self.start = start
        self.shard = shard
        self.shards = shards
        self._seqs = _free_level_sequences(order)

    def __iter__(self) -> TreeStream:
        return self

    def __next__(self) -> Tree:
        for levels in self._seqs:
            pos = self.position
            self.position += 1
            if pos >= self.start and pos % self.shards == self.shard:
                return _tree_from_levels(levels)
        raise StopIteration


def all_trees(n: int, *, shard: int = 0, shards: int = 1, limits: Guardrails | None = None) -> TreeStream:
    return TreeStream(n, shard=shard, shards=shards, limits=limits)


def count_trees(n: int, *, limits: Guardrails | None = None) -> int:
    return sum(1 for _ in all_trees(n, limits=limits))


def trees_up_to(n_max: int, n_min: int = 1, *, limits: Guardrails | None = None) -> Iterator[Tree]:
    for n in range(n_min, n_max + 1):
        yield from all_trees(n, limits=limits)


# --- Prüfer oracle ----------------------------------------------------------------


def prufer_decode(seq: Iterable[int], n: int) -> Tree:
    seq = list(seq)
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return from_edges(n, edges)


def prufer_classes(n: int) -> dict[bytes, Tree]:
    """Canonical code -> representative, by exhaustive Prüfer decoding.

    Every tree on n >= 3 vertices has two leaves, so relabeling them n-2 and
    n-1 shows each class contains a labeled tree whose Prüfer sequence avoids
    those two labels. Scanning the (n-2)^(n-2) such sequences therefore still
    meets every class.
    """
    if n == 1:
        t = from_edges(1, [])
        return {canonical_form(t): t}
    if n == 2:
        t = from_edges(2, [(0, 1)])
        return {canonical_form(t): t}
    classes: dict[bytes, Tree] = {}
    for seq in product(range(n - 2), repeat=n - 2):
        t = _decode_unchecked(seq, n)
        code = canonical_form(t)
        if code not in classes:
            classes[code] = prufer_decode(seq, n)
    return classes


def _decode_unchecked(seq: tuple[int, ...], n: int) -> Tree:
    # same decoding as prufer_decode, minus validation; the oracle's hot loop
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    adj: list[list[int]] = [[] for _ in range(n)]
    for x in seq:
        leaf = heapq.heappop(heap)
        adj[leaf].append(x)
        adj[x].append(leaf)
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    a, b = heapq.heappop(heap), heapq.heappop(heap)
    adj[a].append(b)
    adj[b].append(a)
    return Tree(n, tuple(tuple(row) for row in adj))


def write_graph6_file(path: str | Path, trees: Iterable[Tree]) -> int:
    count = 0
    with open(path, "wb") as fh:
        for t in trees:
            fh.write(to_graph6(t) + b"\n")
            count += 1
    return count
