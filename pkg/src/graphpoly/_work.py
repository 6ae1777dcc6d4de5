import os

from .errors import InputError, ResourceError

DEFAULT_WORK_CAP = 10**8
WORK_CAP_ENV = "GRAPHPOLY_WORK_CAP"


def work_cap() -> int:
    raw = os.environ.get(WORK_CAP_ENV)
    if not raw:
        return DEFAULT_WORK_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{WORK_CAP_ENV} must be an integer, got {raw!r}") from None


def check_work(k: int, exponent: int, what: str, cap: int | None = None) -> None:
    cap = work_cap() if cap is None else cap
    if k < 0:
        raise InputError("k must be non-negative")
    if k ** exponent > cap:
        raise ResourceError(f"{what}: search space {k}^{exponent} exceeds the work cap of {cap}")
