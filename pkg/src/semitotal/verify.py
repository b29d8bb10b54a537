"""Exhaustive sweeps over all trees of bounded order.

Each check walks :func:`all_trees` order by order, evaluates a per-tree
predicate (optionally sharded round-robin over worker processes) and builds a
:class:`VerificationReport`. Per-tree results are merged in canonical-code
order, so the report does not depend on the number of workers. Wall-clock data
lives only in the ``timing`` field.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Callable

from .config import Guardrails, check_limit
from .dp import (
    dp_almost_domination,
    dp_domination,
    dp_semitotal,
    dp_semitotal_forced,
    dp_total_domination,
)
from .enumeration import all_trees
from .exact import Kind, all_minimum_sets, oracle_minimum, oracle_semitotal_forced, verify_semitotal
from .families import (
    LabeledTree,
    labeling_violations,
    find_labeling,
    generate_family_O,
    generate_family_T,
    is_extremal,
    is_gamma_equal,
    lower_bound_numerator,
)
from .graph_core import Tree, canonical_form, is_star, leaves, parse_graph6, to_graph6, tree_from_code

OrderCallback = Callable[["VerificationReport", int], None]


@dataclass
class VerificationReport:
    check: str
    order_range: tuple[int, int]
    trees_examined: int = 0
    violations: list[dict] = field(default_factory=list)
    per_order: dict[int, dict] = field(default_factory=dict)
    config: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self, *, timing: bool = True) -> dict:
        d = asdict(self)
        d["order_range"] = list(self.order_range)
        d["per_order"] = {str(k): v for k, v in sorted(self.per_order.items())}
        d["passed"] = self.passed
        if not timing:
            d.pop("timing")
        return d

    def to_json(self, *, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing=timing), indent=2, sort_keys=True)

    def summary(self) -> str:
        lo, hi = self.order_range
        verdict = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        return f"{self.check}: orders {lo}..{hi}, {self.trees_examined} trees, {verdict}"


def _g6(t: Tree) -> str:
    return to_graph6(t).decode()


# --- per-tree tasks (top level so worker processes can pickle them) ------------------


def _task_bound(t: Tree) -> dict:
    value = dp_semitotal(t).value
    numer = lower_bound_numerator(t)
    return {"gamma_t2": value, "bound_numerator": numer, "leaves": len(leaves(t)),
            "ok": 5 * value >= numer, "extremal": 5 * value == numer}


def _task_extremal(t: Tree) -> dict:
    rec = {"extremal": is_extremal(t)}
    if rec["extremal"]:
        lt = find_labeling(t)
        rec["labeling"] = None if lt is None else "".join(lt.status)
        rec["labeling_violations"] = ["no labeling found"] if lt is None else labeling_violations(lt)
    return rec


def _task_gamma_eq(t: Tree) -> dict:
    gamma, gamma_t2 = dp_domination(t).value, dp_semitotal(t).value
    return {"gamma": gamma, "gamma_t2": gamma_t2, "equal": gamma == gamma_t2}


def _task_chain(t: Tree) -> dict:
    g, g2, gt = dp_domination(t).value, dp_semitotal(t).value, dp_total_domination(t).value
    return {"gamma": g, "gamma_t2": g2, "gamma_t": gt, "ok": g <= g2 <= gt}


def _task_oracle(t: Tree) -> dict:
    mismatches = []

    def compare(label: str, fast: int, slow: int) -> None:
        if fast != slow:
            mismatches.append({"parameter": label, "dp": fast, "oracle": slow})

    compare("gamma", dp_domination(t).value, oracle_minimum(t, Kind.PLAIN).value)
    compare("gamma_t", dp_total_domination(t).value, oracle_minimum(t, Kind.TOTAL).value)
    compare("gamma_t2", dp_semitotal(t).value, oracle_minimum(t, Kind.SEMITOTAL).value)
    for v in range(t.n):
        compare(f"gamma_almost:{v}", dp_almost_domination(t, v).value,
                oracle_minimum(t, Kind.ALMOST, v).value)
        compare(f"gamma_t2_forced:{v}", dp_semitotal_forced(t, v).value,
                oracle_semitotal_forced(t, v).value)
    return {"mismatches": mismatches, "ok": not mismatches}


def _task_leaf_free(t: Tree) -> dict:
    if is_star(t):
        return {"skipped": "star", "ok": True}
    lv = leaves(t)
    plain = any(not lv & set(s) for s in all_minimum_sets(t, Kind.PLAIN))
    semi = any(not lv & set(s) for s in all_minimum_sets(t, Kind.SEMITOTAL))
    return {"leaf_free_gamma_set": plain, "leaf_free_gamma_t2_set": semi, "ok": plain and semi}


TASKS: dict[str, Callable[[Tree], dict]] = {
    "bound": _task_bound,
    "extremal": _task_extremal,
    "gamma-eq": _task_gamma_eq,
    "chain": _task_chain,
    "oracle": _task_oracle,
    "leaf-free": _task_leaf_free,
}


def _run_shard(task: str, n: int, shard: int, shards: int, ceiling: int) -> list[tuple[bytes, str, dict]]:
    fn = TASKS[task]
    limits = Guardrails(enumeration_n=ceiling)
    return [(canonical_form(t), _g6(t), fn(t))
            for t in all_trees(n, shard=shard, shards=shards, limits=limits)]


def _sweep(task: str, n: int, jobs: int, limits: Guardrails,
           pool: ProcessPoolExecutor | None) -> list[tuple[bytes, str, dict]]:
    if pool is None or jobs <= 1:
        rows = _run_shard(task, n, 0, 1, limits.enumeration_n)
    else:
        futures = [pool.submit(_run_shard, task, n, k, jobs, limits.enumeration_n) for k in range(jobs)]
        rows = [row for f in futures for row in f.result()]
    rows.sort(key=lambda r: r[0])
    return rows


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def _run(check: str, task: str, n_min: int, n_max: int, jobs: int | None, limits: Guardrails | None,
         on_order: OrderCallback | None, handle_order: Callable[[VerificationReport, int, list], None]) -> VerificationReport:
    limits = limits or Guardrails.from_env()
    jobs = jobs or default_jobs()
    check_limit(n_max, limits.enumeration_n, check)
    report = VerificationReport(check, (n_min, n_max),
                                config={"n_min": n_min, "n_max": n_max, "guardrail_n": limits.enumeration_n})
    started = time.perf_counter()
    report.timing["started_at"] = datetime.now(timezone.utc).isoformat()
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for n in range(n_min, n_max + 1):
            rows = _sweep(task, n, jobs, limits, pool)
            report.trees_examined += len(rows)
            handle_order(report, n, rows)
            report.timing["elapsed_seconds"] = round(time.perf_counter() - started, 3)
            if on_order is not None:
                on_order(report, n)
    finally:
        if pool is not None:
            pool.shutdown()
    report.timing["elapsed_seconds"] = round(time.perf_counter() - started, 3)
    return report


# --- the checks -------------------------------------------------------------------------


def check_bound(n_max: int, *, n_min: int = 2, jobs: int | None = None, limits: Guardrails | None = None,
                on_order: OrderCallback | None = None) -> VerificationReport:
    """Every tree satisfies ``5 * gamma_t2 >= 2 (n - l + 2)``; equality cases are listed."""

    def handle(report, n, rows):
        extremal = [g6 for _, g6, rec in rows if rec["extremal"]]
        for _, g6, rec in rows:
            if not rec["ok"]:
                report.violations.append({"graph6": g6, "order": n, "predicate": "bound",
                                          "gamma_t2": rec["gamma_t2"], "bound_numerator": rec["bound_numerator"]})
        report.per_order[n] = {"trees": len(rows), "extremal": extremal,
                               "violations": sum(not r["ok"] for _, _, r in rows)}

    return _run("verify-bound", "bound", max(2, n_min), n_max, jobs, limits, on_order, handle)


def check_extremal(n_max: int, *, n_min: int = 2, jobs: int | None = None, limits: Guardrails | None = None,
                   on_order: OrderCallback | None = None) -> VerificationReport:
    """Extremal trees found exhaustively coincide with the family-T census."""
    census = generate_family_T(n_max, limits=limits)

    def handle(report, n, rows):
        found = {code: g6 for code, g6, rec in rows if rec["extremal"]}
        family = census.codes_of_order(n)
        only_exhaustive = sorted(set(found) - family)
        only_family = sorted(family - set(found))
        for code in only_exhaustive:
            report.violations.append({"graph6": found[code], "order": n, "predicate": "extremal-not-in-family"})
        for code in only_family:
            report.violations.append({"graph6": _g6(tree_from_code(code)), "order": n,
                                      "predicate": "family-member-not-extremal"})
        for code, g6, rec in rows:
            if rec["extremal"] and rec["labeling_violations"]:
                report.violations.append({"graph6": g6, "order": n, "predicate": "labeling",
                                          "details": rec["labeling_violations"]})
        report.per_order[n] = {
            "trees": len(rows),
            "extremal": [found[c] for c in sorted(found)],
            "labelings": {g6: rec["labeling"] for c, g6, rec in rows if rec["extremal"]},
            "family_count": len(family),
            "only_exhaustive": [found[c] for c in only_exhaustive],
            "only_family": [_g6(tree_from_code(c)) for c in only_family],
        }

    return _run("verify-extremal", "extremal", max(2, n_min), n_max, jobs, limits, on_order, handle)


def check_gamma_eq(n_max: int, *, n_min: int = 2, jobs: int | None = None, limits: Guardrails | None = None,
                   on_order: OrderCallback | None = None) -> VerificationReport:
    """Trees with ``gamma == gamma_t2`` coincide with the family-O census."""
    census = generate_family_O(n_max, limits=limits)

    def handle(report, n, rows):
        found = {code: g6 for code, g6, rec in rows if rec["equal"]}
        family = census.codes_of_order(n)
        only_exhaustive = sorted(set(found) - family)
        only_family = sorted(family - set(found))
        for code in only_exhaustive:
            report.violations.append({"graph6": found[code], "order": n, "predicate": "equal-not-in-family"})
        for code in only_family:
            report.violations.append({"graph6": _g6(tree_from_code(code)), "order": n,
                                      "predicate": "family-member-not-equal"})
        report.per_order[n] = {
            "trees": len(rows),
            "gamma_equal": len(found),
            "family_count": len(family),
            "only_exhaustive": [found[c] for c in only_exhaustive],
            "only_family": [_g6(tree_from_code(c)) for c in only_family],
        }

    return _run("verify-gamma-eq", "gamma-eq", max(2, n_min), n_max, jobs, limits, on_order, handle)


def _simple_check(name: str, task: str, predicate: str):
    def check(n_max: int, *, n_min: int = 2, jobs: int | None = None, limits: Guardrails | None = None,
              on_order: OrderCallback | None = None) -> VerificationReport:
        def handle(report, n, rows):
            bad = [(g6, rec) for _, g6, rec in rows if not rec["ok"]]
            for g6, rec in bad:
                report.violations.append({"graph6": g6, "order": n, "predicate": predicate,
                                          "details": {k: v for k, v in rec.items() if k != "ok"}})
            report.per_order[n] = {"trees": len(rows), "violations": len(bad)}

        return _run(name, task, max(2, n_min), n_max, jobs, limits, on_order, handle)

    check.__name__ = f"check_{task.replace('-', '_')}"
    return check


check_chain = _simple_check("verify-chain", "chain", "chain")
check_oracle_equivalence = _simple_check("verify-oracle", "oracle", "oracle")
check_leaf_free = _simple_check("verify-leaf-free", "leaf-free", "leaf-free")


def check_family_T_soundness(n_max: int, *, limits: Guardrails | None = None) -> VerificationReport:
    """Every generated labeled tree: S_A is a minimum semitotal dominating set,
    and all five structural properties hold."""
    started = time.perf_counter()
    census = generate_family_T(n_max, limits=limits)
    report = VerificationReport("family-T-soundness", (5, n_max), config={"n_max": n_max})
    report.timing["started_at"] = datetime.now(timezone.utc).isoformat()
    for lt in sorted(census.labeled, key=lambda x: (x.tree.n, x.code())):
        t = lt.tree
        gamma_t2 = dp_semitotal(t).value
        problems = labeling_violations(lt)
        if len(lt.set_a) != gamma_t2:
            problems.append(f"|S_A|={len(lt.set_a)} != gamma_t2={gamma_t2}")
        if not verify_semitotal(t, lt.set_a):
            problems.append("S_A is not semitotal dominating")
        if 5 * gamma_t2 != lower_bound_numerator(t):
            problems.append("not extremal")
        stats = report.per_order.setdefault(t.n, {"labeled_trees": 0, "violations": 0})
        stats["labeled_trees"] += 1
        report.trees_examined += 1
        if problems:
            stats["violations"] += 1
            report.violations.append({"graph6": _g6(t), "order": t.n, "predicate": "family-T-soundness",
                                      "status": "".join(lt.status), "details": problems})
    report.timing["elapsed_seconds"] = round(time.perf_counter() - started, 3)
    return report


CHECKS = {
    "verify-bound": check_bound,
    "verify-extremal": check_extremal,
    "verify-gamma-eq": check_gamma_eq,
    "verify-chain": check_chain,
    "verify-oracle": check_oracle_equivalence,
    "verify-leaf-free": check_leaf_free,
}


def replay_violation(entry: dict) -> bool:
    """Re-derive a reported violation from its graph6 code; True if it reproduces."""
    t = parse_graph6(entry["graph6"])
    pred = entry["predicate"]
    if pred == "bound":
        return 5 * dp_semitotal(t).value < lower_bound_numerator(t)
    if pred == "extremal-not-in-family":
        return is_extremal(t) and canonical_form(t) not in generate_family_T(t.n).codes_of_order(t.n)
    if pred == "family-member-not-extremal":
        return not is_extremal(t) and canonical_form(t) in generate_family_T(t.n).codes_of_order(t.n)
    if pred == "labeling":
        lt = find_labeling(t)
        return lt is None or bool(labeling_violations(lt))
    if pred == "equal-not-in-family":
        return is_gamma_equal(t) and canonical_form(t) not in generate_family_O(t.n).codes_of_order(t.n)
    if pred == "family-member-not-equal":
        return not is_gamma_equal(t) and canonical_form(t) in generate_family_O(t.n).codes_of_order(t.n)
    if pred in ("chain", "oracle", "leaf-free"):
        return not TASKS[pred](t)["ok"]
    if pred == "family-T-soundness":
        lt = LabeledTree(t, tuple(entry["status"]))
        return (bool(labeling_violations(lt)) or len(lt.set_a) != dp_semitotal(t).value
                or not verify_semitotal(t, lt.set_a))
    raise ValueError(f"unknown predicate {pred!r}")
