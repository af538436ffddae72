"""The oracle against hand-checked values and against itself."""

import itertools

import pytest

from netfreq import oracle

S = "ababbababcababbb$"
BS = "b" + S


@pytest.mark.parametrize("w, pairs", [
    ("bb", {("b", "$")}),
    ("bab", {("b", "a")}),
    ("abab", {("b", "c")}),
    ("ababb", {("c", "b")}),
    ("ab", set()),
    ("b", set()),
])
def test_pair_sets_on_worked_example(w, pairs):
    assert oracle.phi_set(S, w) == pairs


@pytest.mark.parametrize("w, pairs", [
    ("babab", {("b", "c")}),
    # the prose writes the second pair as (b, c); its own occurrence
    # counts (cababb, ababbb, cababbb) give (c, b)
    ("ababb", {("b", "a"), ("c", "b")}),
    ("abab", set()),
    ("bab", set()),
    ("bb", {("b", "$")}),
])
def test_pair_sets_after_prepend(w, pairs):
    assert oracle.phi_set(BS, w) == pairs


def test_pnf_and_delta_on_worked_example():
    assert oracle.pnf(S) == {"bb": 1, "bab": 1, "abab": 1, "ababb": 1}
    assert oracle.pnf(BS) == {"bb": 1, "ababb": 2, "babab": 1}
    assert oracle.pnf_delta(S, "b") == {
        "babab": (0, 1), "ababb": (1, 2), "abab": (1, 0), "bab": (1, 0)}


def test_maximal_repeats_on_worked_example():
    assert oracle.maximal_repeats(S) == {"b", "ab", "bb", "bab", "abab", "ababb"}
    assert oracle.maximal_repeats(BS) == oracle.maximal_repeats(S) | {"babab"}


def test_occ_counts_overlaps_and_empty():
    assert oracle.occ("aaaa", "aa") == 3
    assert oracle.occ("abc", "") == 4
    assert oracle.occ("abc", "abcd") == 0


def test_non_repeats_have_no_pairs():
    assert oracle.nf(S, "c") == 0
    assert oracle.nf(S, "zz") == 0
    assert oracle.nf(S, "") == 0


def test_tuple_and_str_inputs_agree():
    t = tuple(S)
    assert {"".join(k): v for k, v in oracle.pnf(t).items()} == oracle.pnf(S)


def _all_strings(alphabet, max_len):
    for m in range(max_len + 1):
        for chars in itertools.product(alphabet, repeat=m):
            yield "".join(chars) + "$"


def test_pnf_table_matches_definition():
    # the occurrence scan against the literal alphabet-by-alphabet definition
    for s in _all_strings("abc", 5):
        subs = {s[i:j] for i in range(len(s)) for j in range(i + 1, len(s) + 1)}
        by_definition = {w: oracle.nf(s, w) for w in subs}
        assert oracle.pnf(s) == {w: k for w, k in by_definition.items() if k}, s


def test_fast_oracles_match_brute_force():
    for s in _all_strings("ab", 9):
        assert oracle.pnf_fast(s) == oracle.pnf(s), s
    for s in _all_strings("abc", 6):
        assert oracle.pnf_fast(s) == oracle.pnf(s), s
        internal = {label for label, kids in oracle.naive_suffix_tree(s) if kids}
        assert {tuple(w) for w in oracle.right_branching(s)} == internal, s


def test_naive_suffix_tree_small():
    assert oracle.naive_suffix_tree("$") == (((), ("$",)), (("$",), ()))
    tree = dict(oracle.naive_suffix_tree("aa$"))
    assert tree[("a",)] == ("$", "a")
    assert len([k for k, kids in tree.items() if not kids]) == 3


def test_naive_suffix_tree_without_terminator():
    # suffix "a" of "aa" ends inside an edge and adds no node
    tree = dict(oracle.naive_suffix_tree("aa"))
    assert tree == {(): ("a",), ("a", "a"): ()}
