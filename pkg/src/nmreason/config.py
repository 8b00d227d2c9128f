"""Caps, budgets, and generator constants.

A single flat key=value file can override any field of :class:`Config`;
command-line flags in turn override the file.  The environment variable
``NMREASON_CONFIG`` names the default config path and nothing else.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import NmError

ENV_CONFIG_PATH = "NMREASON_CONFIG"

#: Hard ceiling on truth-table signatures (2**cap rows).
DEFAULT_ATOM_CAP = 20
#: Ceiling on the number of defaults enumerated as generating-set candidates.
DEFAULT_DEFAULT_CAP = 14
#: Ceiling on program atoms for answer-set candidate enumeration (3**cap sets).
DEFAULT_PROGRAM_ATOM_CAP = 10


@dataclass(frozen=True)
class Config:
    """Runtime knobs.  All fields are overridable via file or flags.

    The ``gen_weight_*`` fields shape random formulas: implications and
    small conjunctions are favoured because they keep random theories
    strong enough for sweeps to hit a useful rate of non-vacuous
    antecedents.
    """

    atom_cap: int = DEFAULT_ATOM_CAP
    default_cap: int = DEFAULT_DEFAULT_CAP
    program_atom_cap: int = DEFAULT_PROGRAM_ATOM_CAP
    resample_budget: int = 5000
    min_nonvacuous_rate: float = 0.2
    gen_weight_atom: float = 1.0
    gen_weight_not: float = 0.7
    gen_weight_and: float = 1.1
    gen_weight_or: float = 0.8
    gen_weight_implies: float = 1.6
    gen_weight_iff: float = 0.2


_FIELD_TYPES = {f.name: f.type for f in fields(Config)}


def parse_config_text(text: str, base: Config | None = None) -> Config:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    cfg = base or Config()
    updates: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise NmError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _FIELD_TYPES:
            raise NmError(f"config line {lineno}: unknown key {key!r}")
        kind = _FIELD_TYPES[key]
        try:
            updates[key] = float(value) if "float" in str(kind) else int(value)
        except ValueError as exc:
            raise NmError(f"config line {lineno}: bad value for {key!r}: {value!r}") from exc
    return replace(cfg, **updates)


def load_config(path: str | None = None) -> Config:
    """Load configuration from ``path``, the env-named file, or defaults."""
    if path is None:
        path = os.environ.get(ENV_CONFIG_PATH)
    if path is None:
        return Config()
    with open(path, "r", encoding="utf-8") as handle:
        return parse_config_text(handle.read())
