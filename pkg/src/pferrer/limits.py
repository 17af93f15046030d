"""Configurable size limits keeping brute-force oracles desk-scale."""

from __future__ import annotations

import dataclasses
import json
import os

ENV_VAR = "FERRER_LIMITS"


@dataclasses.dataclass(frozen=True)
class Limits:
    max_depth: int = 6
    max_boxes: int = 10_000
    oracle_max_variables: int = 16
    oracle_max_generators: int = 60
    hitting_set_max_variables: int = 30
    inclusion_exclusion_max_generators: int = 20
    series_recursion_max_generators: int = 512
    truncation_max_degree: int = 20

    def replace(self, **overrides) -> "Limits":
        return dataclasses.replace(self, **overrides)

    @classmethod
    def from_env(cls, environ=os.environ) -> "Limits":
        """Build defaults, overridden by a JSON object in $FERRER_LIMITS."""
        raw = environ.get(ENV_VAR)
        if not raw:
            return cls()
        data = json.loads(raw)
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown limit names in {ENV_VAR}: {sorted(unknown)}")
        return cls(**data)


DEFAULT_LIMITS = Limits()
