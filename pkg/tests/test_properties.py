"""Property tests: the engine against the oracle on generated strings."""

from hypothesis import given, settings
from hypothesis import strategies as st

from netfreq import oracle
from netfreq.engine import NetFrequencyEngine
from netfreq.text_store import SENTINEL
from netfreq.verify import check_feed, check_nf, check_tree

small = st.text(alphabet="abc", max_size=24)
binary = st.text(alphabet="ab", max_size=40)
wide = st.lists(st.integers(min_value=0, max_value=0x10FFFF), max_size=30)


def pnf_by_label(eng, mask=False):
    return {eng.label(e): e.phi for e in eng.all_nf(mask)}


@settings(max_examples=150, deadline=None)
@given(small)
def test_stepwise_equivalence(text):
    check_feed([ord(c) for c in text], full=True)


@settings(max_examples=100, deadline=None)
@given(binary)
def test_final_state_matches_oracle(text):
    eng = NetFrequencyEngine()
    eng.extend(ord(c) for c in reversed(text))
    state = tuple(map(ord, text)) + (SENTINEL,)
    assert pnf_by_label(eng) == oracle.pnf(state)
    assert pnf_by_label(eng, mask=True) == oracle.pnf(state[:-1])


@settings(max_examples=100, deadline=None)
@given(wide)
def test_arbitrary_code_points(symbols):
    eng = NetFrequencyEngine(checked=True)
    eng.extend(reversed(symbols))
    check_tree(eng.tree)
    check_nf(eng.index)
    assert pnf_by_label(eng) == oracle.pnf_fast(tuple(symbols) + (SENTINEL,))


@settings(max_examples=100, deadline=None)
@given(binary)
def test_bounds_hold(text):
    eng = NetFrequencyEngine()
    for c in reversed(text):
        delta = eng.prepend(ord(c))
        assert len(delta) <= 4
        stats = eng.stats()
        assert stats.links_bound_ok and stats.phi_bound_ok
        assert stats.climb_steps_total <= 10 * (stats.n - 1)
        assert all(e.product == e.length * e.phi for e in eng.all_nf_extract())


@settings(max_examples=100, deadline=None)
@given(small)
def test_reversal_identity(text):
    forward = oracle.pnf(text)
    backward = oracle.pnf(text[::-1])
    assert {w[::-1]: k for w, k in forward.items()} == backward


@settings(max_examples=60, deadline=None)
@given(small, st.text(alphabet="abc", max_size=5))
def test_single_nf_matches_definition(text, pattern):
    eng = NetFrequencyEngine()
    eng.extend(ord(c) for c in reversed(text))
    assert eng.single_nf([ord(c) for c in pattern]) == oracle.nf(text + "$", pattern)
