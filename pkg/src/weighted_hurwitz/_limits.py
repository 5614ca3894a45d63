"""Safety bounds on problem sizes; HURWITZ_MAX_N overrides all of them."""

import os

DEFAULTS = {
    "characters": 10,
    "classalg": 8,
    "direct": 7,
    "brute": 7,
    "symfun_degree": 10,
}


class BoundExceeded(ValueError):
    pass


def limit(name: str) -> int:
    override = os.environ.get("HURWITZ_MAX_N")
    if override:
        return int(override)
    return DEFAULTS[name]


def check(name: str, value: int, what: str = "n") -> None:
    bound = limit(name)
    if value > bound:
        raise BoundExceeded(
            f"{what}={value} exceeds the {name} bound {bound} (set HURWITZ_MAX_N to raise it)"
        )
