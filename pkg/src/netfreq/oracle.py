"""Brute-force reference implementations of the net-frequency definitions.

Everything here works on plain sequences (``str`` or tuples of symbols) by
exhaustive scanning and shares no code or state with the engine. Complexity
is cubic or worse; keep inputs small.

``pnf_fast`` is the one exception to "obviously correct": it counts net
occurrences through shortest unique substrings in roughly quadratic time so
that long random feeds can be checked at every step. It is itself checked
against :func:`pnf` in the test suite.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence

Seq = Sequence  # str or tuple of symbols


def occ(s: Seq, w: Seq) -> int:
    """Number of (possibly overlapping) occurrences of ``w`` in ``s``."""
    m = len(w)
    if m == 0:
        return len(s) + 1
    return sum(1 for i in range(len(s) - m + 1) if s[i:i + m] == w)


def _cat(*parts: Seq) -> Seq:
    if isinstance(parts[0], str):
        return "".join(parts)
    return tuple(x for p in parts for x in p)


def _one(s: Seq, x) -> Seq:
    return x if isinstance(s, str) else (x,)


def phi_set(s: Seq, w: Seq) -> set[tuple]:
    """All pairs ``(alpha, beta)`` over the alphabet of ``s`` with
    ``occ(alpha w beta) == occ(alpha w) == occ(w beta) == 1``, for a repeat ``w``."""
    if not w or occ(s, w) < 2:
        return set()
    alphabet = sorted(set(s))
    out = set()
    for alpha in alphabet:
        aw = _cat(_one(s, alpha), w)
        if occ(s, aw) != 1:
            continue
        for beta in alphabet:
            wb = _cat(w, _one(s, beta))
            if occ(s, wb) == 1 and occ(s, _cat(aw, _one(s, beta))) == 1:
                out.add((alpha, beta))
    return out


def nf(s: Seq, w: Seq) -> int:
    return len(phi_set(s, w))


def substring_counts(s: Seq) -> Counter:
    return Counter(s[i:j] for i in range(len(s)) for j in range(i + 1, len(s) + 1))


def nf_table(s: Seq) -> dict[Seq, set[tuple]]:
    """Pair sets of every repeat of ``s`` with at least one pair.

    Same definition as :func:`phi_set`, but candidate pairs are read off the
    occurrences of each repeat instead of ranging over the whole alphabet.
    """
    counts = substring_counts(s)
    n = len(s)
    table: dict[Seq, set[tuple]] = {}
    for i in range(1, n - 1):
        for j in range(i + 1, n):
            w = s[i:j]
            if counts[w] < 2:
                break
            if counts[s[i - 1:j]] == 1 and counts[s[i:j + 1]] == 1 and counts[s[i - 1:j + 1]] == 1:
                table.setdefault(w, set()).add((s[i - 1], s[j]))
    return table


def pnf(s: Seq) -> dict[Seq, int]:
    """Every substring with positive net frequency, mapped to that frequency."""
    return {w: len(pairs) for w, pairs in nf_table(s).items()}


def pnf_delta(s: Seq, a) -> dict[Seq, tuple[int, int]]:
    """``PNF(aS)`` symmetric difference ``PNF(S)`` as ``w -> (old, new)``."""
    return diff_pnf(pnf(s), pnf(_cat(_one(s, a), s)))


def diff_pnf(old: dict, new: dict) -> dict:
    return {w: (old.get(w, 0), new.get(w, 0))
            for w in old.keys() | new.keys() if old.get(w, 0) != new.get(w, 0)}


def is_left_maximal(s: Seq, w: Seq) -> bool:
    m = len(w)
    starts = [i for i in range(len(s) - m + 1) if s[i:i + m] == w]
    if len(starts) < 2:
        return False
    return starts[0] == 0 or len({s[i - 1] for i in starts}) >= 2


def is_right_maximal(s: Seq, w: Seq) -> bool:
    m = len(w)
    starts = [i for i in range(len(s) - m + 1) if s[i:i + m] == w]
    if len(starts) < 2:
        return False
    return starts[-1] + m == len(s) or len({s[i + m] for i in starts}) >= 2


def maximal_repeats(s: Seq) -> set:
    """Non-empty repeats that are both left- and right-maximal."""
    subs = {s[i:j] for i in range(len(s)) for j in range(i + 1, len(s) + 1)}
    return {w for w in subs if is_left_maximal(s, w) and is_right_maximal(s, w)}


def _sorted_suffixes(s: Seq) -> tuple[list[int], list[int]]:
    """Suffix start positions in lexicographic order and adjacent LCPs."""
    order = sorted(range(len(s)), key=lambda i: s[i:])
    lcp = [0] * len(order)
    for k in range(1, len(order)):
        i, j = order[k - 1], order[k]
        h = 0
        while i + h < len(s) and j + h < len(s) and s[i + h] == s[j + h]:
            h += 1
        lcp[k] = h
    return order, lcp


def pnf_fast(s: Seq) -> dict[Seq, int]:
    """Same result as :func:`pnf`, via shortest unique substrings.

    An occurrence ``s[i:i+l]`` is net iff it is a repeat, ``s[i:i+l+1]`` is
    unique and ``s[i-1:i+l]`` is unique. With ``U(i)`` the length of the
    shortest unique substring starting at ``i`` that forces ``l = U(i) - 1``
    and ``U(i-1) <= U(i)``.
    """
    n = len(s)
    order, lcp = _sorted_suffixes(s)
    shortest = [0] * n
    for k, i in enumerate(order):
        longest_shared = max(lcp[k], lcp[k + 1] if k + 1 < n else 0)
        # no unique substring starts at i when the whole suffix repeats
        shortest[i] = longest_shared + 1 if longest_shared < n - i else n + 1
    out: dict[Seq, int] = {}
    for i in range(1, n):
        u = shortest[i]
        if u > n - i or u < 2 or shortest[i - 1] > u:
            continue
        w = s[i:i + u - 1]
        out[w] = out.get(w, 0) + 1
    return out


def right_branching(s: Seq) -> set:
    """Labels of the internal nodes (root included) of the suffix tree of ``s``."""
    order, lcp = _sorted_suffixes(s)
    labels = {s[:0]}
    for k in range(1, len(order)):
        labels.add(s[order[k]:order[k] + lcp[k]])
    return labels


def naive_suffix_tree(s: Seq) -> tuple:
    """Compacted trie of all suffixes built by one-at-a-time insertion.

    Returns the canonical form ``((label, (child first symbols...)), ...)``
    sorted by label, with labels as tuples.
    """
    s = tuple(s)
    # node: [edge label tuple, children dict]
    root: list = [(), {}]
    for i in range(len(s)):
        node, rest = root, s[i:]
        while rest:
            child = node[1].get(rest[0])
            if child is None:
                node[1][rest[0]] = [rest, {}]
                break
            edge = child[0]
            h = 0
            while h < len(edge) and h < len(rest) and edge[h] == rest[h]:
                h += 1
            if h == len(rest):
                # suffix ends inside or at the end of an existing path
                break
            if h == len(edge):
                node, rest = child, rest[h:]
                continue
            mid = [edge[:h], {edge[h]: [edge[h:], child[1]]}]
            child[0], child[1] = mid[0], mid[1]
            rest = rest[h:]
            child[1][rest[0]] = [rest, {}]
            break
    out = []

    def walk(node: list, label: tuple) -> None:
        out.append((label, tuple(sorted(node[1]))))
        for key in sorted(node[1]):
            child = node[1][key]
            walk(child, label + child[0])

    walk(root, ())
    return tuple(sorted(out))
