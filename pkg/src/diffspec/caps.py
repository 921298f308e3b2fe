"""Brute-force size caps, overridable via environment variables."""

import os

from .errors import CapExceededError

DEFAULT_Q2_CAP = 4000  # O(q^2) work: DDT construction, pair counters
DEFAULT_Q3_CAP = 400   # O(q^3) work: quadruple counters
DEFAULT_N4_BRUTE_CAP = 100


def q2_cap() -> int:
    return int(os.environ.get("DIFFSPEC_CAP_Q2", DEFAULT_Q2_CAP))


def q3_cap() -> int:
    return int(os.environ.get("DIFFSPEC_CAP_Q3", DEFAULT_Q3_CAP))


def check_cap(q: int, cap: int, what: str) -> None:
    if q > cap:
        raise CapExceededError(f"{what} refused: q={q} exceeds cap {cap}")
