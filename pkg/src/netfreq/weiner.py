"""Suffix tree maintained under prepends by Weiner's construction.

Every node carries its string depth and ``slen``, the length of some suffix
whose leaf lies in its subtree. The label of a node is the run of symbols at
end-offsets ``slen, slen-1, ..., slen-depth+1``; since end-offsets survive
prepends, labels are never rewritten.

Weiner links of internal nodes live in ``Node.wlinks`` (symbol -> target).
A link from ``w`` is hard exactly when its target has depth ``w.depth + 1``,
so hardness is always derived, never stored. A leaf for a suffix of length
``l < n`` has exactly one Weiner link (labelled by the symbol preceding that
suffix, targeting the leaf of length ``l + 1``); leaf links are therefore
implicit and exposed through :meth:`SuffixTree.weiner_links`.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass

from .errors import NotADescendant, SentinelInInput, StoreNotFresh
from .text_store import SENTINEL, TextStore, decode


class Node:
    __slots__ = ("id", "parent", "depth", "slen", "children", "wlinks", "slink")

    def __init__(self, id: int, parent: Node | None, depth: int, slen: int,
                 children: dict[int, Node] | None = None,
                 wlinks: dict[int, Node] | None = None) -> None:
        self.id = id
        self.parent = parent
        self.depth = depth
        self.slen = slen
        self.children = children
        self.wlinks = wlinks
        self.slink: Node | None = None

    @property
    def is_leaf(self) -> bool:
        return self.children is None

    def __repr__(self) -> str:
        kind = "Leaf" if self.children is None else "Node"
        return f"<{kind} #{self.id} depth={self.depth} slen={self.slen}>"


@dataclass(frozen=True, slots=True)
class Locus:
    """Where a string ends in the tree.

    ``node`` is the node at the locus, or the node above it when the locus is
    inside the edge toward ``child``. A locus with ``node is None`` is absent.
    """

    node: Node | None
    child: Node | None = None
    depth: int = 0

    @property
    def at_node(self) -> bool:
        return self.node is not None and self.child is None

    @property
    def on_edge(self) -> bool:
        return self.child is not None

    @property
    def absent(self) -> bool:
        return self.node is None


ABSENT = Locus(None)


@dataclass(slots=True)
class UpdateReport:
    """What one prepend of ``a`` found while updating the tree.

    ``u`` is the parent of the leaf for the old string (before the update),
    ``v`` the lowest ancestor of that leaf with an ``a``-link, ``z`` the
    lowest one with a hard ``a``-link, ``ax`` the old target of ``v``'s
    ``a``-link and ``av`` the parent of the new leaf. When ``split_occurred``
    the node ``av`` is new and ``az`` is its parent.
    """

    a: int
    old_leaf: Node
    new_leaf: Node
    u: Node
    v: Node | None
    z: Node | None
    az: Node | None
    ax: Node | None
    ax_was_leaf: bool
    split_occurred: bool
    av: Node
    n_before: int
    n_after: int


@dataclass(frozen=True)
class TreeStats:
    n: int
    node_count: int
    leaf_count: int
    hard_links: int
    soft_links: int
    climb_steps_total: int
    sigma: int

    @property
    def links(self) -> int:
        return self.hard_links + self.soft_links

    @property
    def links_bound_ok(self) -> bool:
        return self.n <= 2 or self.links <= 3 * self.n - 4


class SuffixTree:
    def __init__(self, store: TextStore) -> None:
        if store.n != 1 or store._bound:
            raise StoreNotFresh("a suffix tree needs an unbound store holding only the sentinel")
        store._bound = True
        self.store = store
        self._buf = store._buf
        self.root = Node(0, None, 0, 1, {}, {})
        leaf = Node(1, self.root, 1, 1)
        leaf.slink = self.root
        self.root.children[SENTINEL] = leaf
        self.nodes: list[Node] = [self.root, leaf]
        # leaves[l] is the leaf of the suffix of length l
        self.leaves: list[Node | None] = [None, leaf]
        self.soft_links = 0
        self.climb_steps_total = 0

    @property
    def n(self) -> int:
        return len(self._buf)

    @property
    def hard_links(self) -> int:
        # every non-root node is the target of exactly one hard link (from its
        # suffix-link target), except the leaf "$" whose link from the root is
        # never stored
        return len(self.nodes) - 2

    def prepend(self, a: int) -> UpdateReport:
        """Turn the tree of ``S`` into the tree of ``aS``."""
        if a == SENTINEL:
            raise SentinelInInput("the sentinel cannot be prepended")
        buf = self._buf
        nodes = self.nodes
        leaves = self.leaves
        n = len(buf)
        old_leaf = leaves[n]
        buf.append(a)
        new_leaf = Node(len(nodes), None, n + 1, n + 1)
        nodes.append(new_leaf)
        leaves.append(new_leaf)

        u = old_leaf.parent
        # climb to v; every node passed gets a soft a-link to the new leaf
        # (before any split, since ax may sit on this path and av copies it)
        steps = 0
        w = u
        while w is not None:
            wlinks = w.wlinks
            if a in wlinks:
                break
            wlinks[a] = new_leaf
            steps += 1
            w = w.parent
        v = w
        self.soft_links += steps

        z = az = ax = None
        split = ax_was_leaf = False
        if v is None:
            av = self.root
        else:
            steps += 1
            ax = v.wlinks[a]
            if ax.depth == v.depth + 1:
                av = az = ax
                z = v
            else:
                split = True
                ax_was_leaf = ax.children is None
                slen = ax.slen
                av = Node(len(nodes), None, v.depth + 1, slen, {}, None)
                nodes.append(av)
                v.wlinks[a] = av
                # climb on to z, redirecting the soft a-links in between
                w = v.parent
                while w is not None:
                    steps += 1
                    target = w.wlinks[a]
                    if target.depth == w.depth + 1:
                        break
                    w.wlinks[a] = av
                    w = w.parent
                z = w
                az = self.root if z is None else target
                av.parent = az
                az.children[buf[slen - az.depth - 1]] = av
                av.children[buf[slen - av.depth - 1]] = ax
                ax.parent = av
                if ax_was_leaf:
                    av.wlinks = {buf[slen]: leaves[slen + 1]}
                else:
                    av.wlinks = dict(ax.wlinks)
                av.slink = v
                # v's link turned hard; everything copied onto av is soft
                self.soft_links += len(av.wlinks) - 1

        self.climb_steps_total += steps

        new_leaf.parent = av
        av.children[buf[n - av.depth]] = new_leaf
        new_leaf.slink = old_leaf
        return UpdateReport(a, old_leaf, new_leaf, u, v, z, az, ax, ax_was_leaf,
                            split, av, n, n + 1)

    def locate(self, pattern: Sequence[int]) -> Locus:
        buf = self._buf
        node = self.root
        m = len(pattern)
        d = 0
        while d < m:
            children = node.children
            if children is None:
                return ABSENT
            child = children.get(pattern[d])
            if child is None:
                return ABSENT
            d += 1
            end = min(child.depth, m)
            base = child.slen - 1
            while d < end:
                if buf[base - d] != pattern[d]:
                    return ABSENT
                d += 1
            if d == child.depth:
                node = child
            else:
                return Locus(node, child, d)
        return Locus(node)

    def edge_symbol(self, parent: Node, child: Node) -> int:
        """First symbol on the edge from ``parent`` toward ``child``, unchecked."""
        return self._buf[child.slen - parent.depth - 1]

    def first_symbol_below(self, w: Node, descendant: Node) -> int:
        """Symbol at string depth ``w.depth`` on the path from ``w`` to ``descendant``."""
        p = descendant.parent
        while p is not None and p.depth > w.depth:
            p = p.parent
        if p is not w:
            raise NotADescendant(f"{descendant!r} is not below {w!r}")
        return self._buf[descendant.slen - w.depth - 1]

    def label(self, node: Node) -> tuple[int, ...]:
        return self.store.slice(node.slen, node.depth)

    def weiner_links(self, node: Node) -> dict[int, Node]:
        """All Weiner links of ``node`` ordered by symbol, leaves included."""
        if node.children is None:
            if node.slen < len(self._buf):
                return {self._buf[node.slen]: self.leaves[node.slen + 1]}
            return {}
        return dict(sorted(node.wlinks.items()))

    @staticmethod
    def is_hard(node: Node, target: Node) -> bool:
        return target.depth == node.depth + 1

    def iter_nodes(self) -> Iterator[Node]:
        return iter(self.nodes)

    def stats(self) -> TreeStats:
        return TreeStats(
            n=self.n,
            node_count=len(self.nodes),
            leaf_count=len(self.leaves) - 1,
            hard_links=self.hard_links,
            soft_links=self.soft_links,
            climb_steps_total=self.climb_steps_total,
            sigma=self.store.sigma(),
        )

    def to_dot(self, render: Callable[[Sequence[int]], str] = decode) -> str:
        """Graphviz dump: solid tree edges, dashed Weiner links (bold when hard)."""

        def quote(text: str) -> str:
            return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'

        lines = ["digraph suffix_tree {", "  node [fontname=monospace];"]
        for node in self.nodes:
            shape = "box" if node.is_leaf else "circle"
            text = render(self.label(node)) or "ε"
            lines.append(f"  n{node.id} [shape={shape}, label={quote(text)}];")
        for node in self.nodes:
            if node.children is not None:
                for key in sorted(node.children):
                    child = node.children[key]
                    edge = render(self.store.slice(child.slen - node.depth, child.depth - node.depth))
                    lines.append(f"  n{node.id} -> n{child.id} [label={quote(edge)}];")
        for node in self.nodes:
            for sym, target in self.weiner_links(node).items():
                width = 2 if self.is_hard(node, target) else 1
                lines.append(f"  n{node.id} -> n{target.id} [style=dashed, penwidth={width}, "
                             f"color=gray40, label={quote(render((sym,)))}];")
        lines.append("}")
        return "\n".join(lines) + "\n"
