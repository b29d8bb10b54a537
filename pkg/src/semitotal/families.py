"""The two constructive tree families.

* Family T: labeled trees ``(T, S)`` grown from the labeled path
  ``C A B A C`` by TO1 (hang a C-leaf on an A-vertex) and TO2 (hang the
  labeled path ``C A B A C`` on a C-leaf). Its underlying trees are exactly
  the trees with ``5 * gamma_t2 == 2 * (n - l + 2)``.
* Family O: trees grown from P4 by DO1..DO4. Its members are exactly the
  trees with ``gamma == gamma_t2``.

Generators compute closures up to an order bound and report a
:class:`FamilyCensus` of canonical codes.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .config import Guardrails, check_limit
from .dp import dp_almost_domination, dp_domination, dp_semitotal, dp_semitotal_forced
from .errors import InvalidParameter, PreconditionFailed, WrongDegree, WrongStatus
from .exact import verify_semitotal
from .graph_core import (
    Tree,
    attach,
    canonical_form,
    delete_vertices,
    from_edges,
    leaves,
    path,
    supports,
    tree_from_code,
)

A, B, C = "A", "B", "C"
_PATH_LABELS = (C, A, B, A, C)


@dataclass(frozen=True)
class LabeledTree:
    tree: Tree
    status: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.status) != self.tree.n:
            raise ValueError("one status per vertex required")
        if any(s not in (A, B, C) for s in self.status):
            raise ValueError(f"statuses must be A, B or C: {self.status}")

    def with_status(self, label: str) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.status) if s == label)

    @property
    def set_a(self) -> tuple[int, ...]:
        return self.with_status(A)

    @property
    def set_b(self) -> tuple[int, ...]:
        return self.with_status(B)

    @property
    def set_c(self) -> tuple[int, ...]:
        return self.with_status(C)

    def code(self) -> bytes:
        """Canonical code up to label-preserving isomorphism."""
        return canonical_form(self.tree, self.status)

    def to_json(self) -> str:
        return json.dumps({"edges": [list(e) for e in self.tree.edges()], "status": list(self.status)})

    @classmethod
    def from_json(cls, text: str) -> LabeledTree:
        data = json.loads(text)
        status = tuple(data["status"])
        return cls(from_edges(len(status), data["edges"]), status)


@dataclass
class FamilyCensus:
    """Underlying trees of a family, deduplicated by canonical code."""

    family: str
    n_max: int
    codes: dict[int, set[bytes]] = field(default_factory=dict)
    labeled: list[LabeledTree] = field(default_factory=list)

    def add(self, t: Tree) -> bool:
        bucket = self.codes.setdefault(t.n, set())
        code = canonical_form(t)
        if code in bucket:
            return False
        bucket.add(code)
        return True

    def counts(self) -> dict[int, int]:
        return {n: len(self.codes.get(n, ())) for n in range(1, self.n_max + 1)}

    def all_codes(self) -> set[bytes]:
        return set().union(*self.codes.values()) if self.codes else set()

    def codes_of_order(self, n: int) -> set[bytes]:
        return set(self.codes.get(n, ()))

    def trees(self) -> list[Tree]:
        """Representatives sorted by (order, canonical code)."""
        return [tree_from_code(c) for n in sorted(self.codes) for c in sorted(self.codes[n])]


# --- family T -----------------------------------------------------------------------


def base_p5() -> LabeledTree:
    return LabeledTree(path(5), _PATH_LABELS)


def apply_TO1(lt: LabeledTree, v: int) -> LabeledTree:
    lt.tree.check_vertex(v)
    if lt.status[v] != A:
        raise WrongStatus(f"TO1 needs an A-vertex, {v} is {lt.status[v]}")
    return LabeledTree(attach(lt.tree, v, path(1), 0), lt.status + (C,))


def apply_TO2(lt: LabeledTree, v: int) -> LabeledTree:
    lt.tree.check_vertex(v)
    if lt.status[v] != C:
        raise WrongStatus(f"TO2 needs a C-vertex, {v} is {lt.status[v]}")
    if lt.tree.degree(v) != 1:
        raise WrongDegree(f"TO2 needs a leaf, {v} has degree {lt.tree.degree(v)}")
    return LabeledTree(attach(lt.tree, v, path(5), 0), lt.status + _PATH_LABELS)


def labeling_violations(lt: LabeledTree) -> list[str]:
    """Violations of the five structural properties every member of T has.

    Each entry starts with the property letter, e.g. ``"(a) support 3 not A"``.
    """
    t, st = lt.tree, lt.status
    out: list[str] = []
    if t.n >= 2:
        bad = sorted(v for v in supports(t) if st[v] != A)
        if bad:
            out.append(f"(a) support vertices not labeled A: {bad}")
        bad = sorted(v for v in leaves(t) if st[v] != C)
        if bad:
            out.append(f"(a) leaves not labeled C: {bad}")
    sa, sb = lt.set_a, lt.set_b
    if len(sa) != 2 * len(sb):
        out.append(f"(b) |S_A|={len(sa)} != 2|S_B|={2 * len(sb)}")
    if t.n < 2 or not verify_semitotal(t, sa):
        out.append(f"(c) S_A={list(sa)} is not a semitotal dominating set")
    for name, members in (("S_A", sa), ("S_B", sb)):
        inside = set(members)
        clash = sorted((u, w) for u, w in t.edges() if u in inside and w in inside)
        if clash:
            out.append(f"(d) {name} not independent: edges {clash}")
    for v in sb:
        if t.degree(v) != 2 or any(st[w] != A for w in t.adjacency[v]):
            out.append(f"(e) B-vertex {v} has neighbors {list(t.adjacency[v])}")
    return out


def lower_bound_numerator(t: Tree) -> int:
    """``2 (n - l + 2)``; the bound on gamma_t2 is this over 5."""
    return 2 * (t.n - len(leaves(t)) + 2)


def is_extremal(t: Tree) -> bool:
    return 5 * dp_semitotal(t).value == lower_bound_numerator(t)


def generate_family_T(n_max: int, *, limits: Guardrails | None = None) -> FamilyCensus:
    """Closure of the base labeled P5 under TO1/TO2, orders <= n_max.

    Labeled states are expanded once per label-preserving isomorphism class;
    the census itself dedups underlying trees only. Below order 5 the census
    is empty.
    """
    limits = limits or Guardrails.from_env()
    check_limit(n_max, limits.enumeration_n, "generate_family_T")
    census = FamilyCensus("T", n_max)
    if n_max < 5:
        return census
    start = base_p5()
    seen = {start.code()}
    queue = deque([start])
    while queue:
        lt = queue.popleft()
        census.labeled.append(lt)
        census.add(lt.tree)
        children = []
        if lt.tree.n + 1 <= n_max:
            children += [apply_TO1(lt, v) for v in lt.set_a]
        if lt.tree.n + 5 <= n_max:
            children += [apply_TO2(lt, v) for v in lt.set_c if lt.tree.degree(v) == 1]
        for child in children:
            code = child.code()
            if code not in seen:
                seen.add(code)
                queue.append(child)
    return census


def find_labeling(t: Tree) -> LabeledTree | None:
    """A labeling putting ``t`` in family T, or None when there is none.

    Peels operations in reverse: a leaf whose support must then be an
    A-vertex (undoing TO1), or a pendant five-vertex path hanging from a
    vertex that becomes a leaf (undoing TO2), down to the labeled P5. Every
    intermediate tree must itself be extremal, which prunes the search;
    failed subproblems are memoized by their marked canonical code.
    """
    if t.n < 5 or not is_extremal(t):
        return None
    failed: set[bytes] = set()
    status = _peel(t, frozenset(), failed)
    if status is None:
        return None
    return LabeledTree(t, status)


def _peel(t: Tree, need_a: frozenset[int], failed: set[bytes]) -> tuple[str, ...] | None:
    if t.n < 5:
        return None
    if t.n == 5:
        if sorted(t.degree(v) for v in range(5)) != [1, 1, 2, 2, 2]:
            return None
        status = tuple(C if t.degree(v) == 1 else (A if v in supports(t) else B) for v in range(5))
        return status if all(status[v] == A for v in need_a) else None
    key = canonical_form(t, ["R" if v in need_a else "" for v in range(t.n)])
    if key in failed:
        return None
    for u in sorted(leaves(t)):
        if u in need_a:
            continue
        (w,) = t.adjacency[u]
        smaller, index = delete_vertices(t, [u])
        if not is_extremal(smaller):
            continue
        sub = _peel(smaller, frozenset(index[x] for x in need_a | {w}), failed)
        if sub is not None:
            return _lift(t.n, index, sub, {u: C})
    for pendant in _pendant_paths(t):
        u1, u2, u3, u4, u5 = pendant
        if need_a & {u1, u3, u5}:
            continue
        if t.n - 5 < 5:
            break
        smaller, index = delete_vertices(t, pendant)
        if not is_extremal(smaller):
            continue
        rest = need_a - {u2, u4}
        sub = _peel(smaller, frozenset(index[x] for x in rest), failed)
        if sub is not None:
            return _lift(t.n, index, sub, dict(zip(pendant, _PATH_LABELS)))
    failed.add(key)
    return None


def _pendant_paths(t: Tree) -> list[tuple[int, ...]]:
    """Paths u1..u5 with u5 a leaf, u1..u4 of degree 2, and u1's other neighbor of degree 2."""
    found = []
    for u5 in sorted(leaves(t)):
        chain = [u5]
        prev, cur = u5, t.adjacency[u5][0]
        ok = True
        for _ in range(4):
            if t.degree(cur) != 2:
                ok = False
                break
            chain.append(cur)
            prev, cur = cur, next(w for w in t.adjacency[cur] if w != prev)
        if ok and t.degree(cur) == 2:
            found.append(tuple(reversed(chain)))
    return found


def _lift(n: int, index: dict[int, int], sub: Sequence[str], extra: dict[int, str]) -> tuple[str, ...]:
    status = [""] * n
    for old, new in index.items():
        status[old] = sub[new]
    for v, s in extra.items():
        status[v] = s
    return tuple(status)


# --- family O -----------------------------------------------------------------------


def subdivided_star(k: int) -> Tree:
    """Star K_{1,k} with every edge subdivided: center 0, supports 1..k, leaves k+1..2k."""
    if k < 2:
        raise InvalidParameter(f"subdivided star needs at least two leaves, got {k}")
    edges = [(0, i) for i in range(1, k + 1)] + [(i, i + k) for i in range(1, k + 1)]
    return from_edges(2 * k + 1, edges)


def tree_Y(k: int = 3) -> Tree:
    """Star K_{1,k} with one edge subdivided.

    Center 0, plain leaves 1..k-1, subdivision vertex k, its leaf k+1.
    """
    if k < 2:
        raise InvalidParameter(f"Y needs at least two leaves, got {k}")
    edges = [(0, i) for i in range(1, k)] + [(0, k), (k, k + 1)]
    return from_edges(k + 2, edges)


def apply_DO1(t: Tree, v: int) -> Tree:
    t.check_vertex(v)
    if dp_semitotal_forced(t, v).value != dp_semitotal(t).value:
        raise PreconditionFailed(f"vertex {v} lies in no minimum semitotal dominating set")
    return attach(t, v, path(1), 0)


def apply_DO2(t: Tree, v: int, path_len: int) -> Tree:
    t.check_vertex(v)
    if path_len not in (2, 5):
        raise InvalidParameter(f"DO2 attaches P2 or P5, not P{path_len}")
    if dp_almost_domination(t, v).value != dp_domination(t).value:
        raise PreconditionFailed(f"gamma(T; {v}) < gamma(T)")
    return attach(t, v, path(path_len), 0)


def apply_DO3(t: Tree, v: int, k: int) -> Tree:
    t.check_vertex(v)
    return attach(t, v, subdivided_star(k), 0)


def apply_DO4(t: Tree, v: int) -> Tree:
    t.check_vertex(v)
    return attach(t, v, tree_Y(3), 1)


def _family_O_children(t: Tree, n_max: int) -> Iterable[Tree]:
    room = n_max - t.n
    if room <= 0:
        return
    gamma_t2 = dp_semitotal(t).value
    gamma = dp_domination(t).value
    for v in range(t.n):
        if dp_semitotal_forced(t, v).value == gamma_t2:
            yield attach(t, v, path(1), 0)
        if room >= 2 and dp_almost_domination(t, v).value == gamma:
            yield attach(t, v, path(2), 0)
            if room >= 5:
                yield attach(t, v, path(5), 0)
        for k in range(2, (room - 1) // 2 + 1):
            yield apply_DO3(t, v, k)
        if room >= 5:
            yield apply_DO4(t, v)


def generate_family_O(n_max: int, *, limits: Guardrails | None = None) -> FamilyCensus:
    """Closure of P4 under DO1..DO4, orders <= n_max."""
    limits = limits or Guardrails.from_env()
    check_limit(n_max, limits.enumeration_n, "generate_family_O")
    census = FamilyCensus("O", n_max)
    if n_max < 4:
        return census
    queue = deque([path(4)])
    census.add(path(4))
    while queue:
        t = queue.popleft()
        for child in _family_O_children(t, n_max):
            if census.add(child):
                queue.append(child)
    return census


def is_gamma_equal(t: Tree) -> bool:
    return dp_domination(t).value == dp_semitotal(t).value
