from __future__ import annotations

import os

from .graph import GraphError

DEFAULT_MAX_EXACT_ORDER = 12
ENV_MAX_ORDER = "CHROMA_MAX_ORDER"


class CapExceeded(RuntimeError):
    """An exact computation was refused because the graph is over the order cap."""


class ContractError(ValueError):
    """An argument violates an operation's precondition (e.g. an improper colouring)."""


class TheoremViolation(AssertionError):
    """A checked statement about chromatic completion failed on a concrete graph."""


def max_exact_order(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(ENV_MAX_ORDER)
    if env:
        try:
            return int(env)
        except ValueError:
            raise GraphError(f"{ENV_MAX_ORDER}={env!r} is not an integer") from None
    return DEFAULT_MAX_EXACT_ORDER


def check_cap(n: int, cap: int | None, what: str, hint: str = "") -> None:
    limit = max_exact_order(cap)
    if n > limit:
        msg = f"{what}: order {n} exceeds exact-mode cap {limit}"
        raise CapExceeded(msg + (f"; {hint}" if hint else ""))
