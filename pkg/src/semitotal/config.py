"""Guardrail configuration.

The exponential oracles and the exhaustive sweeps refuse inputs above
configurable orders. Defaults can be overridden per call or, for the
enumeration ceiling, through the ``SEMITOTAL_GUARDRAIL_N`` environment
variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import SizeLimitExceeded

ENV_GUARDRAIL = "SEMITOTAL_GUARDRAIL_N"


@dataclass(frozen=True)
class Guardrails:
    oracle_n: int = 20
    all_minimum_n: int = 16
    enumeration_n: int = 20

    @classmethod
    def from_env(cls) -> Guardrails:
        raw = os.environ.get(ENV_GUARDRAIL)
        if raw is None or not raw.strip():
            return cls()
        try:
            ceiling = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_GUARDRAIL} must be an integer, got {raw!r}") from None
        return cls(enumeration_n=ceiling)

    def with_ceiling(self, n: int | None) -> Guardrails:
        return self if n is None else replace(self, enumeration_n=n)


def check_limit(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise SizeLimitExceeded(f"{what}: order {n} exceeds guardrail {limit}")
