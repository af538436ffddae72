"""Net-frequency bookkeeping on top of the Weiner tree.

Each node with positive net frequency keeps its set of character pairs
``(alpha, beta)``: ``alpha`` precedes and ``beta`` follows a net occurrence.
Within one node no two pairs share a first symbol or a second symbol, so a
pair set is stored as two mirrored dicts and either removal key is O(1).

A prepend can only touch four nodes, all found by the tree update itself:

* ``u``, parent of the old full-string leaf, may gain ``(a, b)``;
* a freshly split ``av`` whose old ``a``-target was a leaf gains ``(d, c)``;
* ``v`` loses its pair starting with ``a``;
* the parent ``az`` of a freshly split ``av`` loses its pair ending with the
  symbol on the edge toward ``av``.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from typing import NamedTuple

from .errors import InvariantError, StaleReport
from .text_store import SENTINEL
from .weiner import Node, SuffixTree, UpdateReport


class PhiSet:
    __slots__ = ("by_first", "by_second")

    def __init__(self) -> None:
        self.by_first: dict[int, int] = {}
        self.by_second: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self.by_first)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        alpha, beta = pair
        return alpha in self.by_first and self.by_first[alpha] == beta

    def pairs(self) -> set[tuple[int, int]]:
        return set(self.by_first.items())

    def add(self, alpha: int, beta: int) -> None:
        if alpha in self.by_first or beta in self.by_second:
            raise InvariantError(f"pair ({alpha}, {beta}) clashes with {sorted(self.pairs())}")
        self.by_first[alpha] = beta
        self.by_second[beta] = alpha

    def remove_first(self, alpha: int) -> tuple[int, int] | None:
        beta = self.by_first.pop(alpha, None)
        if beta is None:
            return None
        del self.by_second[beta]
        return alpha, beta

    def remove_second(self, beta: int) -> tuple[int, int] | None:
        alpha = self.by_second.pop(beta, None)
        if alpha is None:
            return None
        del self.by_first[alpha]
        return alpha, beta

    def count(self, mask_sentinel: bool = False) -> int:
        if mask_sentinel and SENTINEL in self.by_second:
            return len(self.by_first) - 1
        return len(self.by_first)


class DeltaEntry(NamedTuple):
    node: Node
    old: int
    new: int

    @property
    def label_ref(self) -> tuple[int, int]:
        return self.node.slen, self.node.depth


class NfEntry(NamedTuple):
    node: Node
    hi: int
    length: int
    phi: int


class ExtractEntry(NamedTuple):
    node: Node
    hi: int
    length: int
    phi: int
    product: int


class NetFrequencyIndex:
    """Keeps PNF of the tree's string up to date, one update report at a time.

    With ``checked=True`` the side conditions that the removal lemmas
    guarantee are asserted whenever a pair is actually removed.
    """

    def __init__(self, tree: SuffixTree, checked: bool = False) -> None:
        self.tree = tree
        self.checked = checked
        self.registry: dict[Node, PhiSet] = {}
        self.total_phi = 0
        # (phi, holds a sentinel pair) before the current update for every
        # node it touched, while a delta is being collected
        self._before: dict[Node, tuple[int, bool]] | None = None

    def __len__(self) -> int:
        return len(self.registry)

    def phi(self, node: Node, mask_sentinel: bool = False) -> int:
        pairs = self.registry.get(node)
        return 0 if pairs is None else pairs.count(mask_sentinel)

    def apply_update(self, report: UpdateReport, mask_sentinel: bool = False) -> list[DeltaEntry]:
        """Bring the registry from ``S`` to ``aS`` and return what changed.

        With ``mask_sentinel`` the old and new counts ignore pairs whose
        second symbol is the sentinel, and entries that only differ in such
        a pair are dropped.
        """
        if report.n_after != self.tree.n:
            raise StaleReport(f"report for n={report.n_after}, tree has n={self.tree.n}")
        self._before = before = {}
        try:
            self.update(report)
        finally:
            self._before = None
        if not before:
            return []
        registry = self.registry
        delta = []
        for node, (old, had_sentinel) in before.items():
            if mask_sentinel and had_sentinel:
                old -= 1
            pairs = registry.get(node)
            new = 0 if pairs is None else pairs.count(mask_sentinel)
            if new != old:
                delta.append(DeltaEntry(node, old, new))
        return delta

    def update(self, report: UpdateReport) -> None:
        """Same as :meth:`apply_update` without building the delta."""
        registry = self.registry
        # guards are repeated inside each check; these only skip the calls
        hits = (
            self.check_type_iii_1(report) if report.v in registry else None,
            self.check_type_iii_2(report) if report.split_occurred and report.az in registry else None,
            self.check_type_i(report) if report.u is not report.v else None,
            self.check_type_ii(report) if report.ax_was_leaf else None,
        )
        if self.checked:
            for hit in hits:
                if hit is not None:
                    self._assert_touched(report, hit[0])

    def _remember(self, node: Node, phi: int, had_sentinel: bool) -> None:
        before = self._before
        if before is not None and node not in before:
            before[node] = (phi, had_sentinel)

    def check_type_i(self, report: UpdateReport):
        """``u`` gains ``(a, b)`` unless it is ``v`` or the root."""
        u = report.u
        if u is report.v or u.parent is None:
            return None
        b = self.tree._buf[report.n_before - u.depth - 1]
        pairs = self.registry.get(u)
        if pairs is None:
            self._remember(u, 0, False)
            pairs = self.registry[u] = PhiSet()
        else:
            self._remember(u, len(pairs), SENTINEL in pairs.by_second)
        pairs.add(report.a, b)
        self.total_phi += 1
        return u, (report.a, b)

    def check_type_ii(self, report: UpdateReport):
        """A new node ``av`` split off toward a leaf ``ax`` starts with one pair."""
        if not (report.split_occurred and report.ax_was_leaf):
            return None
        av, ax = report.av, report.ax
        buf = self.tree._buf
        # leaf ax is never the new leaf, so its single Weiner link exists
        d = buf[ax.slen]
        c = buf[ax.slen - av.depth - 1]
        self._remember(av, 0, False)
        pairs = self.registry[av] = PhiSet()
        pairs.add(d, c)
        self.total_phi += 1
        return av, (d, c)

    def check_type_iii_1(self, report: UpdateReport):
        """``v`` loses the pair whose first symbol is ``a``, if any."""
        v = report.v
        pairs = self.registry.get(v)
        if pairs is None:
            return None
        removed = pairs.remove_first(report.a)
        if removed is None:
            return None
        if self.checked:
            ax = report.ax
            x = ax.slink if ax is not None else None
            if not (report.split_occurred and report.ax_was_leaf and x is not None
                    and x.is_leaf and x.parent is v and v is not report.z):
                raise InvariantError(f"type (iii)-1 removal at {v!r} without its preconditions")
        self._dropped(v, pairs, removed)
        return v, removed

    def check_type_iii_2(self, report: UpdateReport):
        """``az`` loses the pair whose second symbol leads toward the new ``av``."""
        if not report.split_occurred:
            return None
        az, av = report.az, report.av
        pairs = self.registry.get(az)
        if pairs is None:
            return None
        removed = pairs.remove_second(self.tree._buf[av.slen - az.depth - 1])
        if removed is None:
            return None
        if self.checked and not report.ax_was_leaf:
            raise InvariantError(f"type (iii)-2 removal at {az!r} but ax is internal")
        self._dropped(az, pairs, removed)
        return az, removed

    def _dropped(self, node: Node, pairs: PhiSet, removed: tuple[int, int]) -> None:
        self._remember(node, len(pairs) + 1,
                       removed[1] == SENTINEL or SENTINEL in pairs.by_second)
        self.total_phi -= 1
        if not pairs:
            del self.registry[node]

    def _assert_touched(self, report: UpdateReport, node: Node) -> None:
        if node.parent is None or node.children is None:
            raise InvariantError(f"NF bookkeeping touched a non-internal node {node!r}")
        if node not in (report.u, report.v, report.av, report.az):
            raise InvariantError(f"NF bookkeeping touched unexpected node {node!r}")

    def single_nf(self, pattern: Sequence[int], mask_sentinel: bool = False) -> int:
        locus = self.tree.locate(pattern)
        if not locus.at_node:
            return 0
        return self.phi(locus.node, mask_sentinel)

    def all_nf(self, mask_sentinel: bool = False) -> Iterator[NfEntry]:
        for node, pairs in self.registry.items():
            phi = pairs.count(mask_sentinel)
            if phi:
                yield NfEntry(node, node.slen, node.depth, phi)

    def all_nf_extract(self, mask_sentinel: bool = False) -> Iterator[ExtractEntry]:
        for node, hi, length, phi in self.all_nf(mask_sentinel):
            yield ExtractEntry(node, hi, length, phi, length * phi)
