"""Brute-force ground truth for the four domination parameters.

Every search walks vertex subsets by increasing cardinality and, within a
cardinality, in lexicographic order, so the first hit is both minimum and
lexicographically smallest. Sets are handled as bitmasks internally.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .config import Guardrails, check_limit
from .errors import InvalidVertex, IsolatedVertex, SemitotalError
from .graph_core import Tree


class Kind(enum.Enum):
    PLAIN = "gamma"
    TOTAL = "gamma-t"
    SEMITOTAL = "gamma-t2"
    ALMOST = "gamma-almost"


@dataclass(frozen=True)
class DominationCertificate:
    kind: Kind
    value: int
    witness: tuple[int, ...]
    vertex: int | None = None  # exempt vertex for ALMOST, forced vertex for forced solves

    def as_dict(self) -> dict:
        d = {"kind": self.kind.value, "value": self.value, "witness": list(self.witness)}
        if self.vertex is not None:
            d["vertex"] = self.vertex
        return d


class _Masks:
    """Closed neighborhoods and radius-2 balls of every vertex as bitmasks."""

    def __init__(self, t: Tree) -> None:
        self.n = t.n
        self.full = (1 << t.n) - 1
        self.closed = []
        self.open = []
        self.ball2 = []  # vertices at distance 1 or 2, excluding self
        for v in range(t.n):
            nb = 0
            for w in t.adjacency[v]:
                nb |= 1 << w
            self.open.append(nb)
            self.closed.append(nb | (1 << v))
        for v in range(t.n):
            b = self.open[v]
            for w in t.adjacency[v]:
                b |= self.open[w]
            self.ball2.append(b & ~(1 << v))

    def covered(self, members: Iterable[int], table: list[int]) -> int:
        acc = 0
        for v in members:
            acc |= table[v]
        return acc

    def test(self, kind: Kind, members: tuple[int, ...], exempt: int | None = None) -> bool:
        if kind is Kind.PLAIN:
            return self.covered(members, self.closed) == self.full
        if kind is Kind.TOTAL:
            return self.covered(members, self.open) == self.full
        if kind is Kind.ALMOST:
            return self.covered(members, self.closed) | (1 << exempt) == self.full
        if self.covered(members, self.closed) != self.full:
            return False
        smask = 0
        for v in members:
            smask |= 1 << v
        return all(self.ball2[v] & smask for v in members)


def _check_set(t: Tree, s: Iterable[int]) -> tuple[int, ...]:
    members = tuple(sorted(set(s)))
    for v in members:
        t.check_vertex(v)
    return members


def verify_dominating(t: Tree, s: Iterable[int]) -> bool:
    return _Masks(t).test(Kind.PLAIN, _check_set(t, s))


def verify_total(t: Tree, s: Iterable[int]) -> bool:
    return _Masks(t).test(Kind.TOTAL, _check_set(t, s))


def verify_semitotal(t: Tree, s: Iterable[int]) -> bool:
    return _Masks(t).test(Kind.SEMITOTAL, _check_set(t, s))


def verify_almost(t: Tree, s: Iterable[int], v: int) -> bool:
    t.check_vertex(v)
    return _Masks(t).test(Kind.ALMOST, _check_set(t, s), v)


def verify(t: Tree, kind: Kind, s: Iterable[int], vertex: int | None = None) -> bool:
    if kind is Kind.ALMOST:
        if vertex is None:
            raise InvalidVertex("almost domination needs an exempt vertex")
        return verify_almost(t, s, vertex)
    return _Masks(t).test(kind, _check_set(t, s))


def _require_nontrivial(t: Tree) -> None:
    if t.n < 2:
        raise IsolatedVertex("domination parameters are undefined for the one-vertex tree")


def _search(t: Tree, kind: Kind, vertex: int | None, forced: int | None = None):
    """Yield (k, subset) for passing subsets in increasing-k, lexicographic order."""
    masks = _Masks(t)
    if forced is None:
        for k in range(1, t.n + 1):
            for combo in combinations(range(t.n), k):
                if masks.test(kind, combo, vertex):
                    yield k, combo
    else:
        others = [v for v in range(t.n) if v != forced]
        for k in range(1, t.n + 1):
            for rest in combinations(others, k - 1):
                combo = tuple(sorted(rest + (forced,)))
                if masks.test(kind, combo, vertex):
                    yield k, combo


def oracle_minimum(
    t: Tree, kind: Kind, vertex: int | None = None, *, limits: Guardrails | None = None
) -> DominationCertificate:
    """Minimum certificate by exhaustive search; ``vertex`` is the ALMOST exemption."""
    limits = limits or Guardrails()
    _require_nontrivial(t)
    check_limit(t.n, limits.oracle_n, "oracle_minimum")
    if kind is Kind.ALMOST:
        if vertex is None:
            raise InvalidVertex("almost domination needs an exempt vertex")
        t.check_vertex(vertex)
    for k, combo in _search(t, kind, vertex):
        cert = DominationCertificate(kind, k, combo, vertex if kind is Kind.ALMOST else None)
        if not verify(t, kind, combo, vertex):
            raise SemitotalError(f"oracle witness {combo} failed verification")
        return cert
    raise SemitotalError("no feasible set found")  # unreachable on trees with n >= 2


def oracle_semitotal_forced(
    t: Tree, v: int, *, limits: Guardrails | None = None
) -> DominationCertificate:
    """Minimum semitotal dominating set constrained to contain ``v``."""
    limits = limits or Guardrails()
    _require_nontrivial(t)
    t.check_vertex(v)
    check_limit(t.n, limits.oracle_n, "oracle_semitotal_forced")
    for k, combo in _search(t, Kind.SEMITOTAL, None, forced=v):
        return DominationCertificate(Kind.SEMITOTAL, k, combo, v)
    raise SemitotalError("no feasible set found")


def all_minimum_sets(
    t: Tree, kind: Kind, vertex: int | None = None, *, limits: Guardrails | None = None
) -> list[tuple[int, ...]]:
    limits = limits or Guardrails()
    _require_nontrivial(t)
    check_limit(t.n, limits.all_minimum_n, "all_minimum_sets")
    masks = _Masks(t)
    for k in range(1, t.n + 1):
        found = [c for c in combinations(range(t.n), k) if masks.test(kind, c, vertex)]
        if found:
            return found
    return []


def in_some_minimum_semitotal(t: Tree, v: int, *, limits: Guardrails | None = None) -> bool:
    best = oracle_minimum(t, Kind.SEMITOTAL, limits=limits).value
    return oracle_semitotal_forced(t, v, limits=limits).value == best
