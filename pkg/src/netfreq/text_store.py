"""Growable sentinel-terminated symbol sequence.

Symbols are plain ints: unicode code points or byte values. The terminator
is ``SENTINEL`` (-1), which lies outside both ranges and sorts below every
real character, so any input character (NUL included) stays legal.

Positions are *end-offsets*: the symbol with end-offset ``k`` sits ``k - 1``
places left of the right end, so end-offset 1 is always the sentinel.
Prepending never changes the end-offset of an existing symbol, which lets
tree labels refer to text without ever being rewritten.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import OffsetOutOfRange, SentinelInInput

SENTINEL = -1

CODEPOINTS = "codepoints"
BYTES = "bytes"


class TextStore:
    __slots__ = ("_buf", "_bound")

    def __init__(self) -> None:
        # _buf[k - 1] holds the symbol with end-offset k
        self._buf: list[int] = [SENTINEL]
        self._bound = False

    @property
    def n(self) -> int:
        """Length of the current string, sentinel included."""
        return len(self._buf)

    def __len__(self) -> int:
        return len(self._buf)

    def prepend_symbol(self, c: int) -> int:
        """Prepend ``c`` and return its end-offset (the new length)."""
        if c == SENTINEL:
            raise SentinelInInput("the sentinel cannot be prepended")
        self._buf.append(c)
        return len(self._buf)

    def symbol_at(self, k: int) -> int:
        if not 1 <= k <= len(self._buf):
            raise OffsetOutOfRange(f"end-offset {k} outside 1..{len(self._buf)}")
        return self._buf[k - 1]

    def slice(self, hi: int, length: int) -> tuple[int, ...]:
        """Symbols at end-offsets ``hi, hi-1, ..., hi-length+1`` (left to right)."""
        if length < 0 or hi > len(self._buf) or hi - length + 1 < 1:
            raise OffsetOutOfRange(f"slice(hi={hi}, len={length}) outside 1..{len(self._buf)}")
        if length == 0:
            return ()
        lo = hi - length
        return tuple(self._buf[hi - 1 : lo - 1 : -1] if lo > 0 else self._buf[hi - 1 :: -1])

    def text(self) -> tuple[int, ...]:
        """The whole current string, left to right, ending with the sentinel."""
        return tuple(reversed(self._buf))

    def sigma(self) -> int:
        """Number of distinct non-sentinel symbols seen so far."""
        return len(set(self._buf)) - 1


def new_store() -> TextStore:
    return TextStore()


def encode(text: str | bytes | Iterable[int], mode: str = CODEPOINTS) -> list[int]:
    """Turn user input into a list of symbols."""
    if isinstance(text, str):
        if mode == BYTES:
            return list(text.encode("utf-8", "surrogateescape"))
        return [ord(ch) for ch in text]
    if isinstance(text, (bytes, bytearray)):
        if mode == BYTES:
            return list(text)
        return [ord(ch) for ch in bytes(text).decode("utf-8")]
    symbols = list(text)
    if SENTINEL in symbols:
        raise SentinelInInput("input contains the sentinel")
    return symbols


def decode(symbols: Sequence[int], sentinel: str = "$") -> str:
    """Inverse of :func:`encode` for display. Bytes map one-to-one onto latin-1."""
    return "".join(sentinel if s == SENTINEL else chr(s) for s in symbols)
