#!/usr/bin/env python3
"""Run every exhaustive sweep at its full order bound and write JSON reports.

    python scripts/run_sweeps.py --out results/ --jobs 4
    python scripts/run_sweeps.py --only bound chain --scale 0.5

Each report is rewritten after every finished order, so an interrupted run
leaves usable partial results. Exit status is 1 if any sweep found a violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from semitotal.config import Guardrails
from semitotal.verify import (
    VerificationReport,
    check_bound,
    check_chain,
    check_extremal,
    check_family_T_soundness,
    check_gamma_eq,
    check_leaf_free,
    check_oracle_equivalence,
)

log = logging.getLogger("run_sweeps")


@dataclass
class SweepConfig:
    out: Path = Path("results")
    jobs: int | None = None
    scale: float = 1.0
    only: list[str] = field(default_factory=list)
    # full-size order bounds per sweep
    n_max: dict[str, int] = field(default_factory=lambda: {
        "oracle": 11, "bound": 16, "extremal": 15, "family-T": 15,
        "gamma-eq": 13, "leaf-free": 11, "chain": 14,
    })

    def bound(self, name: str) -> int:
        return max(5, round(self.n_max[name] * self.scale))


SWEEPS = {
    "oracle": check_oracle_equivalence,
    "bound": check_bound,
    "extremal": check_extremal,
    "gamma-eq": check_gamma_eq,
    "leaf-free": check_leaf_free,
    "chain": check_chain,
}


def _write(path: Path, report: VerificationReport) -> None:
    tmp = path.with_suffix(".tmp")
    tmp.write_text(report.to_json() + "\n")
    tmp.replace(path)


def run(cfg: SweepConfig) -> dict[str, bool]:
    cfg.out.mkdir(parents=True, exist_ok=True)
    limits = Guardrails.from_env().with_ceiling(max(cfg.bound(k) for k in cfg.n_max))
    names = cfg.only or list(cfg.n_max)
    verdicts = {}
    for name in names:
        n_max = cfg.bound(name)
        path = cfg.out / f"{name}.json"
        log.info("%s up to n=%d", name, n_max)
        if name == "family-T":
            report = check_family_T_soundness(n_max, limits=limits)
        else:
            report = SWEEPS[name](n_max, jobs=cfg.jobs, limits=limits,
                                  on_order=lambda rep, n, p=path: _write(p, rep))
        _write(path, report)
        print(report.summary())
        verdicts[name] = report.passed
    (cfg.out / "summary.json").write_text(json.dumps(
        {"config": {k: str(v) if isinstance(v, Path) else v for k, v in asdict(cfg).items()},
         "passed": verdicts}, indent=2, sort_keys=True) + "\n")
    return verdicts


def main() -> int:
    defaults = SweepConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=defaults.out)
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("--scale", type=float, default=1.0, help="multiply every order bound (quick runs)")
    ap.add_argument("--only", nargs="*", default=[], choices=sorted(defaults.n_max))
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    verdicts = run(SweepConfig(out=args.out, jobs=args.jobs, scale=args.scale, only=args.only))
    return 0 if all(verdicts.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
