"""Search budgets and analysis defaults.

Every exhaustive search in the package is guarded by one of these limits and
raises :class:`~convcode.errors.BudgetExceededError` instead of truncating.
The defaults can be overridden through the ``CONVCODE_BUDGET`` environment
variable, e.g. ``CONVCODE_BUDGET="enumeration=1e8,orbit=5e6"``.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

from .errors import BudgetExceededError

ENV_VAR = "CONVCODE_BUDGET"


@dataclass(frozen=True)
class Budgets:
    field_order: int = 256
    wam_states: int = 4096
    gl_search: int = 10**7
    enumeration: int = 10**7
    orbit: int = 10**6
    series_order: int = 12
    free_distance_steps: int = 200

    @classmethod
    def from_env(cls, env: dict[str, str] | None = None) -> Budgets:
        return cls.parse((os.environ if env is None else env).get(ENV_VAR, ""))

    @classmethod
    def parse(cls, text: str, base: Budgets | None = None) -> Budgets:
        """Apply overrides written as ``"name=value,name=value"`` to ``base``."""
        base = cls() if base is None else base
        names = {f.name for f in dataclasses.fields(cls)}
        values = {}
        for item in text.split(","):
            if not item.strip():
                continue
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in names:
                raise ValueError(f"unknown budget {key!r}")
            try:
                values[key] = int(float(val))
            except ValueError:
                raise ValueError(f"budget {key!r} needs a number, got {val!r}") from None
        return dataclasses.replace(base, **values)

    def replace(self, **changes) -> Budgets:
        return dataclasses.replace(self, **changes)


_default = Budgets.from_env()


def default_budgets() -> Budgets:
    return _default


def set_default_budgets(budgets: Budgets) -> None:
    global _default
    _default = budgets


def check_budget(size: int, limit: int, what: str) -> None:
    if size > limit:
        raise BudgetExceededError(f"{what}: {size} exceeds budget {limit}")
