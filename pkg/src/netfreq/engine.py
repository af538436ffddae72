"""Online net-frequency engine: text store, Weiner tree and PNF registry."""

from __future__ import annotations

import gc
from collections.abc import Iterable, Iterator, Sequence
from contextlib import contextmanager
from dataclasses import asdict, dataclass

from .net_frequency import DeltaEntry, ExtractEntry, NetFrequencyIndex, NfEntry
from .text_store import TextStore
from .weiner import Node, SuffixTree, UpdateReport


@contextmanager
def gc_paused():
    """Suspend the cyclic collector; the tree is one huge reference cycle."""
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


@dataclass(frozen=True)
class EngineStats:
    n: int
    node_count: int
    leaf_count: int
    hard_links: int
    soft_links: int
    climb_steps_total: int
    sigma: int
    phi_total: int
    registry_size: int
    links_bound_ok: bool
    phi_bound_ok: bool

    def as_dict(self) -> dict:
        return asdict(self)


class NetFrequencyEngine:
    """Maintains PNF of ``S$`` while symbols are prepended to ``S``.

    >>> from netfreq.text_store import encode, decode
    >>> eng = NetFrequencyEngine()
    >>> eng.extend(reversed(encode("abab")))
    >>> sorted((decode(eng.label(e)), e.phi) for e in eng.all_nf())
    [('ab', 1)]
    """

    def __init__(self, checked: bool = False) -> None:
        self.store = TextStore()
        self.tree = SuffixTree(self.store)
        self.index = NetFrequencyIndex(self.tree, checked=checked)
        self.last_report: UpdateReport | None = None

    @property
    def n(self) -> int:
        return self.store.n

    def prepend(self, symbol: int, mask_sentinel: bool = False) -> list[DeltaEntry]:
        report = self.tree.prepend(symbol)
        self.last_report = report
        return self.index.apply_update(report, mask_sentinel)

    def extend(self, symbols: Iterable[int]) -> None:
        """Prepend every symbol in iteration order, discarding the deltas."""
        tree_prepend = self.tree.prepend
        update = self.index.update
        with gc_paused():
            for symbol in symbols:
                update(tree_prepend(symbol))

    def stream(self, symbols: Iterable[int],
               mask_sentinel: bool = False) -> Iterator[tuple[int, list[DeltaEntry]]]:
        """Prepend symbols one at a time, yielding ``(symbol, delta)`` after each."""
        with gc_paused():
            for symbol in symbols:
                yield symbol, self.prepend(symbol, mask_sentinel)

    def single_nf(self, pattern: Sequence[int], mask_sentinel: bool = False) -> int:
        return self.index.single_nf(pattern, mask_sentinel)

    def all_nf(self, mask_sentinel: bool = False) -> Iterator[NfEntry]:
        return self.index.all_nf(mask_sentinel)

    def all_nf_extract(self, mask_sentinel: bool = False) -> Iterator[ExtractEntry]:
        return self.index.all_nf_extract(mask_sentinel)

    def label(self, item: Node | NfEntry | ExtractEntry | DeltaEntry) -> tuple[int, ...]:
        node = item if isinstance(item, Node) else item.node
        return self.tree.label(node)

    def pnf(self, mask_sentinel: bool = False) -> dict[tuple[int, ...], int]:
        """Materialized PNF: label -> net frequency."""
        return {self.tree.label(e.node): e.phi for e in self.all_nf(mask_sentinel)}

    def stats(self) -> EngineStats:
        t = self.tree.stats()
        n = t.n
        return EngineStats(
            n=n,
            node_count=t.node_count,
            leaf_count=t.leaf_count,
            hard_links=t.hard_links,
            soft_links=t.soft_links,
            climb_steps_total=t.climb_steps_total,
            sigma=t.sigma,
            phi_total=self.index.total_phi,
            registry_size=len(self.index),
            links_bound_ok=t.links_bound_ok,
            phi_bound_ok=self.index.total_phi <= max(0, 2 * n - 2) and len(self.index) <= n - 1,
        )
