"""Order caps. Operations beyond a cap raise OrderCapExceeded instead of degrading."""

from __future__ import annotations

import contextlib
import os
from dataclasses import dataclass, replace

from .errors import OrderCapExceeded

ENV_VAR = "HC_LAB_CAPS"


@dataclass(frozen=True)
class Caps:
    order: int = 512
    lattice: int = 384
    isomorphism: int = 256

    def __post_init__(self):
        for name in ("order", "lattice", "isomorphism"):
            if getattr(self, name) <= 0:
                raise ValueError(f"cap {name} must be positive")


_ALIASES = {"order": "order", "lattice": "lattice", "iso": "isomorphism", "isomorphism": "isomorphism"}


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    """Parse ``order=512,lattice=384,iso=256`` (any subset) on top of ``base``."""
    caps = base or Caps()
    updates = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = part.partition("=")
        if not sep or key.strip() not in _ALIASES:
            raise ValueError(f"bad cap entry {part!r}")
        updates[_ALIASES[key.strip()]] = int(value)
    return replace(caps, **updates)


def _initial_caps() -> Caps:
    text = os.environ.get(ENV_VAR)
    return parse_caps(text) if text else Caps()


_current = _initial_caps()


def get_caps() -> Caps:
    return _current


def set_caps(caps: Caps) -> None:
    global _current
    _current = caps


@contextlib.contextmanager
def caps_override(**kwargs):
    global _current
    saved = _current
    _current = replace(saved, **kwargs)
    try:
        yield _current
    finally:
        _current = saved


def check_cap(what: str, order: int, cap_name: str) -> None:
    cap = getattr(_current, cap_name)
    if order > cap:
        raise OrderCapExceeded(what, order, cap)
