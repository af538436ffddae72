import sys

import pytest

from netfreq.engine import NetFrequencyEngine
from netfreq.text_store import SENTINEL, decode, encode

S = "ababbababcababbb"
BS = "b" + S


def build(text, checked=True):
    """Engine holding ``text`` followed by the sentinel."""
    eng = NetFrequencyEngine(checked=checked)
    eng.extend(reversed(encode(text)))
    return eng


def as_text(eng, mask=False):
    return {decode(k): v for k, v in eng.pnf(mask).items()}


def with_sentinel(text):
    return tuple(encode(text)) + (SENTINEL,)


@pytest.fixture
def golden():
    return build(S)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[number])
