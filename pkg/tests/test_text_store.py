import pytest

from netfreq.errors import OffsetOutOfRange, SentinelInInput
from netfreq.text_store import BYTES, CODEPOINTS, SENTINEL, TextStore, decode, encode, new_store


def test_fresh_store_holds_only_the_sentinel():
    st = new_store()
    assert st.n == len(st) == 1
    assert st.text() == (SENTINEL,)
    assert st.sigma() == 0
    assert decode(st.text()) == "$"


def test_prepend_and_end_offsets():
    st = TextStore()
    for c in reversed(encode("abc")):
        st.prepend_symbol(c)
    assert decode(st.text()) == "abc$"
    # end-offset 1 is the sentinel, n the first symbol
    assert st.symbol_at(1) == SENTINEL
    assert st.symbol_at(4) == ord("a")
    assert decode(st.slice(4, 2)) == "ab"
    assert decode(st.slice(2, 2)) == "c$"
    assert st.slice(3, 0) == ()
    assert st.sigma() == 3


def test_symbol_at_bounds():
    st = TextStore()
    st.prepend_symbol(ord("x"))
    with pytest.raises(OffsetOutOfRange):
        st.symbol_at(0)
    with pytest.raises(OffsetOutOfRange):
        st.symbol_at(3)


def test_sentinel_rejected():
    with pytest.raises(SentinelInInput):
        TextStore().prepend_symbol(SENTINEL)
    with pytest.raises(SentinelInInput):
        encode([1, SENTINEL])


def test_encode_modes():
    assert list(encode("aé", CODEPOINTS)) == [97, 233]
    assert list(encode("aé", BYTES)) == [97, 0xC3, 0xA9]
    assert list(encode("é".encode(), CODEPOINTS)) == [233]
    assert list(encode(b"\x00\xff", BYTES)) == [0, 255]
    with pytest.raises(UnicodeDecodeError):
        encode(b"\xff", CODEPOINTS)
    assert decode([104, 105, SENTINEL]) == "hi$"
    assert decode([104, SENTINEL], sentinel="") == "h"
