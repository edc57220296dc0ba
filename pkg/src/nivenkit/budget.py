"""Digit-budget guard.

The family constructions grow doubly exponentially in k, so every
digit-producing operation checks its output size against a configurable
cap before doing any work.
"""

import os

from .errors import CapExceeded, InvalidInput

DEFAULT_DIGIT_CAP = 1_048_576
ENV_VAR = "NIVEN_DIGIT_CAP"


def digit_cap() -> int:
    """Current digit budget; the NIVEN_DIGIT_CAP env var overrides it."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_DIGIT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidInput(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InvalidInput(f"{ENV_VAR} must be >= 1, got {cap}")
    return cap


def check_digit_budget(count: int) -> None:
    """Raise CapExceeded when a construction would emit `count` digits."""
    cap = digit_cap()
    if count > cap:
        raise CapExceeded(
            f"construction needs {count} digits but the budget is {cap} "
            f"(set {ENV_VAR} to change it)"
        )
