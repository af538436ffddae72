import itertools

import pytest

from netfreq import oracle
from netfreq.errors import NotADescendant, SentinelInInput, StoreNotFresh
from netfreq.text_store import SENTINEL, TextStore, decode, encode
from netfreq.verify import check_tree, tree_canonical
from netfreq.weiner import SuffixTree

from conftest import S, build, with_sentinel


def labels(tree, node):
    return None if node is None else decode(tree.label(node))


def test_initial_tree():
    tree = SuffixTree(TextStore())
    assert tree.n == 1
    assert len(tree.nodes) == 2
    assert tree.stats().links == 0
    assert tree_canonical(tree) == oracle.naive_suffix_tree((SENTINEL,))


def test_store_must_be_fresh_and_unbound():
    store = TextStore()
    SuffixTree(store)
    with pytest.raises(StoreNotFresh):
        SuffixTree(store)
    other = TextStore()
    other.prepend_symbol(1)
    with pytest.raises(StoreNotFresh):
        SuffixTree(other)


def test_sentinel_cannot_be_prepended():
    with pytest.raises(SentinelInInput):
        SuffixTree(TextStore()).prepend(SENTINEL)


def test_first_symbol_hangs_from_root():
    tree = SuffixTree(TextStore())
    r = tree.prepend(ord("a"))
    assert r.v is None and r.av is tree.root and not r.split_occurred
    assert r.new_leaf.parent is tree.root
    assert tree.root.wlinks == {ord("a"): r.new_leaf}


def test_split_at_root_for_aa():
    eng = build("a")
    tree = eng.tree
    r = tree.prepend(ord("a"))
    assert r.split_occurred and r.ax_was_leaf
    assert r.v is tree.root and r.z is None and r.az is tree.root
    assert labels(tree, r.av) == "a"
    assert labels(tree, r.ax) == "a$"
    assert tree_canonical(tree) == oracle.naive_suffix_tree(with_sentinel("aa"))
    assert tree.root.wlinks[ord("a")] is r.av
    assert SuffixTree.is_hard(tree.root, r.av)


def test_landmarks_on_worked_example():
    eng = build(S)
    tree = eng.tree
    r = tree.prepend(ord("b"))
    got = {k: labels(tree, getattr(r, k)) for k in ("u", "v", "z", "az", "av")}
    assert got == {"u": "ababb", "v": "abab", "z": "ab", "az": "bab", "av": "babab"}
    assert labels(tree, r.ax) == "bababcababbb$"
    assert r.split_occurred and r.ax_was_leaf
    assert r.n_before == 17 and r.n_after == 18
    assert tree_canonical(tree) == oracle.naive_suffix_tree(with_sentinel("b" + S))


def test_hard_link_case_needs_no_split():
    eng = build("bab")
    r = eng.tree.prepend(ord("b"))  # root already has a hard b-link to "b"
    assert not r.split_occurred
    assert r.av is r.az and labels(eng.tree, r.av) == "b"


def test_tree_matches_naive_builder_exhaustively():
    for m in range(1, 8):
        for chars in itertools.product("abc", repeat=m):
            text = "".join(chars)
            eng = build(text, checked=False)
            assert tree_canonical(eng.tree) == oracle.naive_suffix_tree(with_sentinel(text)), text
            check_tree(eng.tree, full=True)


def test_locate():
    tree = build(S).tree
    assert tree.locate(encode("abab")).at_node
    assert tree.locate(encode("aba")).on_edge
    assert tree.locate(encode("abc")).on_edge
    assert tree.locate(encode("zz")).absent
    assert tree.locate(encode("cc")).absent
    assert tree.locate(with_sentinel(S)).at_node
    assert tree.locate(()).node is tree.root


def test_first_symbol_below():
    tree = build(S).tree
    ab = tree.locate(encode("ab")).node
    leaf = tree.leaves[tree.n]
    assert tree.first_symbol_below(ab, leaf) == ord("a")
    bb = tree.locate(encode("bb")).node
    with pytest.raises(NotADescendant):
        tree.first_symbol_below(bb, leaf)


def test_leaf_links_are_implicit():
    tree = build("ab").tree
    leaf = tree.leaves[2]  # "b$"
    assert tree.weiner_links(leaf) == {ord("a"): tree.leaves[3]}
    assert tree.weiner_links(tree.leaves[3]) == {}


def test_stats_and_link_bound():
    tree = build(S).tree
    st = tree.stats()
    assert st.n == 17 and st.leaf_count == 17 and st.sigma == 3
    assert st.node_count == len(list(tree.iter_nodes()))
    assert st.links <= 3 * st.n - 4 and st.links_bound_ok
    assert st.climb_steps_total <= 10 * (st.n - 1)


def test_dot_dump():
    dot = build("aab").tree.to_dot()
    assert dot.startswith("digraph") and dot.rstrip().endswith("}")
    assert "shape=box" in dot and "style=dashed" in dot and "penwidth=2" in dot
    assert 'label="ε"' in dot
