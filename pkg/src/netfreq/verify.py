"""Invariant walks and oracle-equivalence suites for the engine."""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

from . import oracle
from .engine import NetFrequencyEngine
from .errors import InvariantError
from .net_frequency import NetFrequencyIndex
from .text_store import SENTINEL, decode
from .weiner import SuffixTree

CLIMB_FACTOR = 10


class Mismatch(Exception):
    """The engine disagreed with the oracle or broke an invariant on ``feed``.

    ``feed`` is the full current string (sentinel excluded) at the failing
    step, i.e. the shortest prefix-of-feed that reproduces the failure.
    """

    def __init__(self, message: str, feed: Sequence[int]) -> None:
        super().__init__(message)
        self.message = message
        self.feed = tuple(feed)

    def __str__(self) -> str:
        return f"{self.message} (feed {decode(self.feed)!r})"


def _fail(message: str) -> None:
    raise InvariantError(message)


def tree_canonical(tree: SuffixTree) -> tuple:
    """Same shape as :func:`oracle.naive_suffix_tree`."""
    return tuple(sorted(
        (tree.label(node), tuple(sorted(node.children or ())))
        for node in tree.nodes
    ))


def internal_labels(tree: SuffixTree) -> set[tuple[int, ...]]:
    return {tree.label(node) for node in tree.nodes if not node.is_leaf}


def check_tree(tree: SuffixTree, full: bool = True) -> None:
    """Walk the whole tree and check its structural invariants.

    ``full`` adds the checks that materialize labels: suffix links, Weiner
    link soundness and completeness. They are quadratic; keep ``n`` small.
    """
    n = tree.n
    root = tree.root
    if root.parent is not None or root.depth != 0:
        _fail("root must have depth 0 and no parent")
    if len(tree.leaves) - 1 != n:
        _fail(f"{len(tree.leaves) - 1} leaves for n={n}")
    internal = 0
    soft = hard = 0
    for node in tree.nodes:
        if node.slen < node.depth:
            _fail(f"{node!r}: sample suffix shorter than depth")
        if node.is_leaf:
            if node.depth != node.slen or tree.leaves[node.slen] is not node:
                _fail(f"{node!r}: leaf depth must equal its suffix length")
        else:
            internal += 1
            if node is not root and len(node.children) < 2:
                _fail(f"{node!r}: internal node is not branching")
            for key, child in node.children.items():
                if child.parent is not node:
                    _fail(f"{child!r}: parent pointer does not match")
                if child.depth <= node.depth:
                    _fail(f"{child!r}: not deeper than its parent")
                if tree.edge_symbol(node, child) != key:
                    _fail(f"{child!r}: filed under the wrong first symbol")
        for sym, target in tree.weiner_links(node).items():
            if target.depth == node.depth + 1:
                hard += 1
                if target.slink is not node:
                    _fail(f"hard link {node!r} -{sym}-> {target!r} without matching suffix link")
            else:
                soft += 1
            if target.parent is not None and target.parent.depth > node.depth:
                _fail(f"link {node!r} -{sym}-> {target!r} skips the shallowest extension")
    if internal > n - 1 + (n == 1):
        _fail(f"{internal} internal nodes for n={n}")
    if (hard, soft) != (tree.hard_links, tree.soft_links):
        _fail(f"link counters {(tree.hard_links, tree.soft_links)} but found {(hard, soft)}")
    if n > 2 and hard + soft > 3 * n - 4:
        _fail(f"{hard + soft} Weiner links exceed 3n-4 for n={n}")
    if full:
        _check_labels(tree)


def _check_labels(tree: SuffixTree) -> None:
    text = tree.store.text()
    substrings = {text[i:j] for i in range(len(text)) for j in range(i, len(text) + 1)}
    alphabet = set(text) - {SENTINEL}
    for node in tree.nodes:
        label = tree.label(node)
        for child in (node.children or {}).values():
            if tree.label(child)[:node.depth] != label:
                _fail(f"{child!r} label does not extend its parent's")
        if node.slink is not None and tree.label(node.slink) != label[1:]:
            _fail(f"{node!r}: suffix link does not drop one symbol")
        links = tree.weiner_links(node)
        for sym in alphabet:
            extended = (sym,) + label
            if (extended in substrings) != (sym in links):
                _fail(f"{node!r}: Weiner link on {sym} should exist iff {decode(extended)!r} occurs")
            if sym in links and tree.label(links[sym])[:len(extended)] != extended:
                _fail(f"{node!r}: Weiner link on {sym} points at the wrong node")


def check_nf(index: NetFrequencyIndex) -> None:
    """Every stored pair must satisfy the three tree conditions for membership."""
    tree = index.tree
    n = tree.n
    buf = tree._buf
    total = 0
    for node, pairs in index.registry.items():
        if node.parent is None or node.is_leaf:
            _fail(f"{node!r} registered but is not an internal non-root node")
        if not pairs:
            _fail(f"{node!r} registered with no pairs")
        if len(pairs.by_second) != len(pairs.by_first) or any(
                pairs.by_second.get(b) != a for a, b in pairs.by_first.items()):
            _fail(f"{node!r}: pairs share a first or a second symbol")
        if len(pairs) > min(len(node.wlinks), len(node.children)):
            _fail(f"{node!r}: phi exceeds min(left, right extensions)")
        for alpha, beta in pairs.by_first.items():
            target = node.wlinks.get(alpha)
            if target is None or not target.is_leaf or target.depth == node.depth + 1:
                _fail(f"{node!r}: ({alpha}, {beta}) lacks a soft link to a leaf")
            if buf[target.slen - node.depth - 2] != beta:
                _fail(f"{node!r}: ({alpha}, {beta}) link target does not continue with beta")
            child = node.children.get(beta)
            if child is None or not child.is_leaf:
                _fail(f"{node!r}: ({alpha}, {beta}) has no leaf child on beta")
        total += len(pairs)
    if total != index.total_phi:
        _fail(f"phi total {index.total_phi} but pairs sum to {total}")
    if total > max(0, 2 * n - 2) or len(index.registry) > max(0, n - 1):
        _fail(f"phi total {total} / registry {len(index.registry)} above bounds for n={n}")


@dataclass
class SuiteResult:
    name: str
    feeds: int = 0
    steps: int = 0
    checked_states: int = 0
    max_climb_ratio: float = 0.0
    notes: list[str] = field(default_factory=list)


def check_feed(
    symbols: Sequence[int],
    *,
    full: bool = True,
    seen: dict | None = None,
    result: SuiteResult | None = None,
    engine_factory: Callable[[], NetFrequencyEngine] | None = None,
) -> None:
    """Feed ``symbols`` right to left and compare against the oracle after every prepend.

    ``full`` compares against the quadratic naive suffix tree and the
    definitional PNF; otherwise the suffix-sorting oracles are used, which
    scale to a few hundred symbols. States already in ``seen`` are fed but
    not re-checked: the engine is deterministic, so an identical state was
    reached by an identical transition.
    """
    engine = engine_factory() if engine_factory else NetFrequencyEngine(checked=True)
    tree, index = engine.tree, engine.index
    prev = {}
    pnf_of = oracle.pnf if full else oracle.pnf_fast
    for k in range(len(symbols) - 1, -1, -1):
        state = tuple(symbols[k:]) + (SENTINEL,)
        internal_before = len(tree.nodes) - (len(tree.leaves) - 1)
        try:
            delta = engine.prepend(symbols[k])
        except InvariantError as exc:
            raise Mismatch(f"invariant failure during prepend: {exc}", state[:-1]) from exc
        if result is not None:
            result.steps += 1
            result.max_climb_ratio = max(result.max_climb_ratio,
                                         tree.climb_steps_total / (tree.n - 1))
        if seen is not None and state in seen:
            prev = seen[state]
            continue
        try:
            expected = _check_state(engine, state, delta, prev, internal_before, full, pnf_of)
        except InvariantError as exc:
            raise Mismatch(str(exc), state[:-1]) from exc
        if seen is not None:
            seen[state] = expected
        if result is not None:
            result.checked_states += 1
        prev = expected
    if result is not None:
        result.feeds += 1


def _check_state(engine, state, delta, prev, internal_before, full, pnf_of) -> dict:
    tree, index = engine.tree, engine.index
    n = len(state)
    if tree.climb_steps_total > CLIMB_FACTOR * (n - 1):
        _fail(f"{tree.climb_steps_total} climb steps for n={n}")
    internal_after = len(tree.nodes) - (len(tree.leaves) - 1)
    if internal_after - internal_before > 1:
        _fail("more than one internal node created by one prepend")
    ups = sum(1 for d in delta if d.new > d.old)
    if len(delta) > 4 or ups > 2 or len(delta) - ups > 2:
        _fail(f"delta of size {len(delta)} ({ups} increases)")

    if full:
        if tree_canonical(tree) != oracle.naive_suffix_tree(state):
            _fail("tree differs from the naive suffix tree")
    elif internal_labels(tree) != oracle.right_branching(state):
        _fail("internal nodes differ from the right-branching substrings")
    check_tree(tree, full=full)
    check_nf(index)

    expected = pnf_of(state)
    got = engine.pnf()
    if got != expected:
        _fail(f"PNF {_show(got)} but oracle says {_show(expected)}")
    for e in engine.all_nf_extract():
        if e.product != e.length * e.phi or e.length != len(engine.label(e)):
            _fail(f"extract product {e.product} for {decode(engine.label(e))!r} with nf {e.phi}")
    got_delta = {engine.label(d): (d.old, d.new) for d in delta}
    want_delta = oracle.diff_pnf(prev, expected)
    if got_delta != want_delta:
        _fail(f"delta {_show(got_delta)} but oracle says {_show(want_delta)}")

    for pattern in _query_patterns(state, expected, full):
        got_nf = engine.single_nf(pattern)
        if got_nf != expected.get(pattern, 0):
            _fail(f"single_nf({decode(pattern)!r}) = {got_nf}, oracle {expected.get(pattern, 0)}")
    return expected


def _query_patterns(state: tuple, expected: dict, full: bool) -> Iterable[tuple]:
    n = len(state)
    if full:
        subs = {state[i:j] for i in range(n) for j in range(i, n + 1)}
    else:
        # the repeats, their one-symbol extensions (on an edge or absent) and
        # a few arbitrary substrings
        subs = set(expected)
        subs.update(w + (state[0],) for w in expected)
        rng = random.Random(n)
        for _ in range(8):
            i = rng.randrange(n)
            subs.add(state[i:rng.randint(i, n)])
    subs.add(state[:-1] + state[:-1])
    return subs


def _show(pnf: dict) -> str:
    return "{" + ", ".join(f"{decode(k)!r}: {v}" for k, v in sorted(pnf.items())) + "}"


def exhaustive(alphabet: str, max_len: int, result: SuiteResult | None = None) -> SuiteResult:
    """Every string over ``alphabet`` of length at most ``max_len``, at every step."""
    result = result or SuiteResult(f"exhaustive {alphabet!r} <= {max_len}")
    seen: dict = {}
    if max_len <= 0:
        return result
    for chars in itertools.product(alphabet, repeat=max_len):
        check_feed([ord(c) for c in chars], full=True, seen=seen, result=result)
    return result


def random_strings(count: int, max_len: int, sigmas: Sequence[int | str], seed: int) -> list[str]:
    """``count`` strings of length 1..max_len, cycling through the alphabets.

    An int ``k`` in ``sigmas`` stands for the first ``k`` lowercase letters.
    """
    rng = random.Random(seed)
    letters = "abcdefghijklmnopqrstuvwxyz"
    alphabets = [letters[:s] if isinstance(s, int) else s for s in sigmas]
    out = []
    for i in range(count):
        alphabet = alphabets[i % len(alphabets)]
        length = rng.randint(1, max_len) if max_len > 0 else 0
        out.append("".join(rng.choice(alphabet) for _ in range(length)))
    return out


def randomized(count: int, max_len: int, sigmas: Sequence[int | str], seed: int) -> SuiteResult:
    """Random strings checked step by step with the scalable oracles."""
    result = SuiteResult(f"random {count} x <= {max_len}, sigma in {tuple(sigmas)}, seed {seed}")
    for text in random_strings(count, max_len, sigmas, seed):
        check_feed([ord(c) for c in text], full=False, result=result)
    return result


def shrink(feed: Sequence[int], fails: Callable[[Sequence[int]], bool]) -> tuple[int, ...]:
    """Greedily delete symbols while ``fails`` keeps returning True."""
    feed = tuple(feed)
    changed = True
    while changed:
        changed = False
        for i in range(len(feed)):
            candidate = feed[:i] + feed[i + 1:]
            if fails(candidate):
                feed = candidate
                changed = True
                break
    return feed


def minimal_counterexample(mismatch: Mismatch, **kwargs) -> tuple[int, ...]:
    def fails(candidate: Sequence[int]) -> bool:
        try:
            check_feed(candidate, full=True, **kwargs)
        except Mismatch:
            return True
        return False

    if len(mismatch.feed) > 16:
        return mismatch.feed
    return shrink(mismatch.feed, fails)
