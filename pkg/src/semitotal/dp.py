"""Rooted-tree dynamic programs for gamma, gamma_t, gamma_t2 and gamma(T; v).

All four share one engine. A parameter is a set of per-vertex states plus,
for every state, the child states it admits and a small accumulator automaton
that is folded over the children one at a time (linear in the degree). The
engine keeps, per vertex and state, the optimum cost together with the child
state tuple achieving it; ties go to the lexicographically smallest tuple,
which makes witnesses deterministic.

Semitotal states (see :class:`SemitotalDpCell`):

* ``S1`` in the set, witnessed inside its subtree (a solution vertex within
  distance 2 below it);
* ``S2`` in the set, not yet witnessed;
* ``S3`` out of the set, dominated by a child, nothing pending;
* ``S4`` out, dominated, but its only solution child is unwitnessed, so the
  parent must join the set (it then sits at distance 2 from that child);
* ``S5`` out and undominated from below; the parent must join.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .errors import IsolatedVertex, SemitotalError
from .exact import DominationCertificate, Kind, verify
from .graph_core import Tree


S1, S2, S3, S4, S5 = range(5)
SEMITOTAL_STATE_NAMES = ("S1", "S2", "S3", "S4", "S5")

_D_IN, _D_DOM, _D_UND = range(3)
_T_IN_OK, _T_IN_NEED, _T_OUT_OK, _T_OUT_NEED = range(4)


@dataclass(frozen=True)
class SemitotalDpCell:
    """Optimum partial costs of one vertex's subtree, indexed S1..S5; None is +inf."""

    vertex: int
    values: tuple[int | None, ...]

    def __getitem__(self, state: int) -> int | None:
        return self.values[state]


def _fold(
    kids: Sequence[int],
    table: list[list],
    options: Sequence[int],
    step: Callable[[Hashable, int], Hashable],
    start: Hashable,
) -> dict:
    acc = {start: (0, ())}
    for c in kids:
        row = table[c]
        nxt: dict = {}
        for key, (cost, picks) in acc.items():
            for st in options:
                entry = row[st]
                if entry is None:
                    continue
                nk = step(key, st)
                cand = (cost + entry[0], picks + (st,))
                old = nxt.get(nk)
                if old is None or cand < old:
                    nxt[nk] = cand
        acc = nxt
    return acc


def _plus_one(entry):
    return None if entry is None else (entry[0] + 1, entry[1])


def _best(*entries):
    live = [e for e in entries if e is not None]
    return min(live) if live else None


class _Engine:
    """Runs one parameter's rules bottom-up and backtracks a witness."""

    def __init__(self, t: Tree, root: int, rules, accept: Sequence[int], in_states: Sequence[int]):
        t.check_vertex(root)
        self.t = t
        self.root = root
        self.accept = accept
        self.in_states = frozenset(in_states)
        parent = [-1] * t.n
        parent[root] = root
        order = [root]
        for u in order:
            for w in t.adjacency[u]:
                if parent[w] < 0:
                    parent[w] = u
                    order.append(w)
        self.children = [[w for w in t.adjacency[u] if parent[w] == u and w != root] for u in range(t.n)]
        self.table: list[list] = [[] for _ in range(t.n)]
        for v in reversed(order):
            self.table[v] = rules(v, self.children[v], self.table)

    def optimum(self) -> tuple[int, int]:
        row = self.table[self.root]
        best = min(((row[s][0], s) for s in self.accept if row[s] is not None), default=None)
        if best is None:
            raise SemitotalError("no feasible root state")
        return best

    def extract(self, v: int, state: int) -> dict[int, int]:
        """Vertex -> state assignment on the subtree of ``v`` realizing ``table[v][state]``."""
        assignment = {v: state}
        stack = [(v, state)]
        while stack:
            u, s = stack.pop()
            picks = self.table[u][s][1]
            for c, cs in zip(self.children[u], picks):
                assignment[c] = cs
                stack.append((c, cs))
        return assignment

    def certificate(self, kind: Kind, vertex: int | None = None) -> DominationCertificate:
        value, state = self.optimum()
        assignment = self.extract(self.root, state)
        witness = tuple(sorted(u for u, s in assignment.items() if s in self.in_states))
        if len(witness) != value:
            raise SemitotalError(f"witness size {len(witness)} != value {value}")
        return DominationCertificate(kind, value, witness, vertex)


def _domination_rules(exempt: int | None):
    def rules(v, kids, table):
        row = [None, None, None]
        row[_D_IN] = _plus_one(_fold(kids, table, (_D_IN, _D_DOM, _D_UND), lambda k, s: 0, 0)[0])
        acc = _fold(kids, table, (_D_IN, _D_DOM), lambda k, s: k or s == _D_IN, False)
        if v == exempt:
            # undominated is acceptable here, so report it as a settled state
            row[_D_DOM] = _best(acc.get(True), acc.get(False))
        else:
            row[_D_DOM] = acc.get(True)
            row[_D_UND] = acc.get(False)
        return row

    return rules


def _total_rules(v, kids, table):
    row = [None] * 4
    acc = _fold(kids, table, range(4), lambda k, s: k or s in (_T_IN_OK, _T_IN_NEED), False)
    row[_T_IN_OK] = _plus_one(acc.get(True))
    row[_T_IN_NEED] = _plus_one(acc.get(False))
    acc = _fold(kids, table, (_T_IN_OK, _T_OUT_OK), lambda k, s: k or s == _T_IN_OK, False)
    row[_T_OUT_OK] = acc.get(True)
    row[_T_OUT_NEED] = acc.get(False)
    return row


def _semitotal_step(key: str, s: int) -> str:
    # key summarizes solution children seen so far: none, one witnessed,
    # one unwitnessed, or at least two (which witness each other via the parent)
    if s == S3:
        return key
    if key == "none":
        return "one-w" if s == S1 else "one-u"
    return "many"


def _semitotal_rules(forced: int | None):
    def rules(v, kids, table):
        row = [None] * 5
        acc = _fold(kids, table, (S1, S2, S3, S4, S5), lambda k, s: k or s != S5, False)
        row[S1] = _plus_one(acc.get(True))
        row[S2] = _plus_one(acc.get(False))
        if v != forced:
            acc = _fold(kids, table, (S1, S2, S3), _semitotal_step, "none")
            row[S3] = _best(acc.get("one-w"), acc.get("many"))
            row[S4] = acc.get("one-u")
            row[S5] = acc.get("none")
        return row

    return rules


def _require_nontrivial(t: Tree) -> None:
    if t.n < 2:
        raise IsolatedVertex("domination parameters are undefined for the one-vertex tree")


def _checked(t: Tree, cert: DominationCertificate, vertex: int | None = None) -> DominationCertificate:
    if not verify(t, cert.kind, cert.witness, vertex):
        raise SemitotalError(f"DP witness {cert.witness} fails the {cert.kind.value} verifier")
    return cert


def dp_domination(t: Tree, root: int = 0) -> DominationCertificate:
    _require_nontrivial(t)
    eng = _Engine(t, root, _domination_rules(None), (_D_IN, _D_DOM), (_D_IN,))
    return _checked(t, eng.certificate(Kind.PLAIN))


def dp_almost_domination(t: Tree, v: int, root: int = 0) -> DominationCertificate:
    _require_nontrivial(t)
    t.check_vertex(v)
    eng = _Engine(t, root, _domination_rules(v), (_D_IN, _D_DOM), (_D_IN,))
    return _checked(t, eng.certificate(Kind.ALMOST, v), v)


def dp_total_domination(t: Tree, root: int = 0) -> DominationCertificate:
    _require_nontrivial(t)
    eng = _Engine(t, root, _total_rules, (_T_IN_OK, _T_OUT_OK), (_T_IN_OK, _T_IN_NEED))
    return _checked(t, eng.certificate(Kind.TOTAL))


def dp_semitotal(t: Tree, root: int = 0) -> DominationCertificate:
    _require_nontrivial(t)
    eng = _Engine(t, root, _semitotal_rules(None), (S1, S3), (S1, S2))
    return _checked(t, eng.certificate(Kind.SEMITOTAL))


def dp_semitotal_forced(t: Tree, v: int, root: int = 0) -> DominationCertificate:
    """Minimum semitotal dominating set that must contain ``v``."""
    _require_nontrivial(t)
    t.check_vertex(v)
    eng = _Engine(t, root, _semitotal_rules(v), (S1, S3), (S1, S2))
    cert = _checked(t, eng.certificate(Kind.SEMITOTAL, v))
    if v not in cert.witness:
        raise SemitotalError(f"forced vertex {v} missing from witness {cert.witness}")
    return cert


def semitotal_in_some_minimum(t: Tree, v: int) -> bool:
    return dp_semitotal_forced(t, v).value == dp_semitotal(t).value


def semitotal_table(t: Tree, root: int = 0) -> tuple[list[SemitotalDpCell], Callable[[int, int], dict[int, int]]]:
    """Per-vertex DP cells plus a realizer mapping (vertex, state) to a state assignment."""
    _require_nontrivial(t)
    eng = _Engine(t, root, _semitotal_rules(None), (S1, S3), (S1, S2))
    cells = [
        SemitotalDpCell(v, tuple(None if e is None else e[0] for e in eng.table[v])) for v in range(t.n)
    ]
    return cells, eng.extract


def semitotal_children(t: Tree, root: int = 0) -> list[list[int]]:
    """Child lists of ``t`` rooted at ``root``, matching :func:`semitotal_table`."""
    eng = _Engine(t, root, lambda v, kids, table: [], (), ())
    return eng.children
