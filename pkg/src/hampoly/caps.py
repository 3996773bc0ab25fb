"""Enumeration caps.

The brute-force oracles are meant for desk-scale instances; beyond the caps
they fail fast with ResourceLimitError instead of running unbounded.  Caps can
be overridden programmatically or through the CIRCUIT_POLYTOPE_CAPS
environment variable, e.g. ``CIRCUIT_POLYTOPE_CAPS="circuits=10,j=6,orderings=7"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import InputError

ENV_VAR = "CIRCUIT_POLYTOPE_CAPS"


@dataclass(frozen=True)
class Caps:
    circuits: int = 10  # largest n for full circuit enumeration
    j: int = 6          # largest |J| for full J-circuit enumeration
    orderings: int = 7  # largest |J| for the all-orderings greedy loop

    @classmethod
    def from_env(cls) -> "Caps":
        raw = os.environ.get(ENV_VAR)
        if not raw:
            return cls()
        fields = {}
        for part in raw.split(","):
            part = part.strip()
            if not part:
                continue
            try:
                key, value = part.split("=")
                fields[key.strip()] = int(value)
            except ValueError:
                raise InputError(f"bad {ENV_VAR} entry: {part!r}") from None
        unknown = set(fields) - {"circuits", "j", "orderings"}
        if unknown:
            raise InputError(f"unknown {ENV_VAR} keys: {sorted(unknown)}")
        return cls(**fields)


def resolve(caps: Caps | None) -> Caps:
    return caps if caps is not None else Caps.from_env()
