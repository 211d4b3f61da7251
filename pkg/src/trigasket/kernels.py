"""Kernel selection: the compiled extension when built, pure Python otherwise.

Compiled kernels use 64-bit arithmetic and are exact through level 60
(distances stay below 2^59); longer addresses go to the pure twin, whose
Python integers are unbounded.
"""

from __future__ import annotations

from . import _kernels_py as _py
from .word import LETTERS, DomainError

try:
    from . import _kernels as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

HAVE_COMPILED = _compiled is not None
BACKEND = "compiled" if HAVE_COMPILED else "python"
COMPILED_LEVEL_CAP = 60

COMPILED = _compiled
PYTHON = _py

_TR = bytes.maketrans(b"lru", bytes((0, 1, 2)))


def encode(word: str) -> bytes:
    """Byte-encode an address (l=0, r=1, u=2), validating it on the way."""
    try:
        raw = word.encode("ascii")
    except UnicodeEncodeError:
        raise DomainError(f"invalid address {word!r}: non-ascii letter") from None
    if not raw:
        raise DomainError("zero-level address")
    data = raw.translate(_TR)
    if max(data) > 2:
        bad = next(ch for ch in word if ch not in LETTERS)
        raise DomainError(f"invalid address {word!r}: unknown letter {bad!r}")
    return data


def decode(codes: bytes) -> str:
    return "".join(LETTERS[c] for c in codes)


def corner_triple(codes: bytes) -> tuple[int, int, int]:
    if HAVE_COMPILED and len(codes) <= COMPILED_LEVEL_CAP:
        return _compiled.corner_triple(codes)
    return _py.corner_triple(codes)


def pair_distance(x: bytes, y: bytes) -> int:
    if HAVE_COMPILED and len(x) <= COMPILED_LEVEL_CAP:
        return _compiled.pair_distance(x, y)
    return _py.pair_distance(x, y)
