"""
Robinson-Schensted insertion, reverse insertion, and the subsequence type of
a diagram.

``subsequence_type`` goes through the RS shape of ``w_J(lam_D) w_D``.
``subsequence_type_oracle`` never touches RS: it finds the largest node
subsets of width at most ``k`` (no antichain of size ``k+1``), which by
Dilworth's theorem are exactly the node sets of maximal ``k``-paths.
"""

from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, Sequence

from .diagram import Diagram, Node, row_composition, w_of
from .perm import Permutation, compose, parabolic_longest
from .shapes import conjugate, is_partition

__all__ = [
    "StandardTableau", "rs_pair", "recording_tableau", "rs_inverse", "shape_of",
    "reverse_insert", "corners", "standard_tableaux", "subsequence_type",
    "subsequence_type_oracle", "max_kpath", "is_admissible", "ORACLE_MAX_NODES",
    "parse_tableau",
]

ORACLE_MAX_NODES = 14


@dataclass(frozen=True, order=True)
class StandardTableau:
    """
    Rows increasing left to right, columns increasing downwards.  Entries are
    distinct positive integers, usually ``1..n``; reverse insertion leaves
    one value missing until the result is relabelled.
    """
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        shape = tuple(len(r) for r in rows)
        values = sorted(v for r in rows for v in r)
        if not is_partition(shape):
            raise ValueError(f"row lengths {shape} are not a partition")
        if len(set(values)) != len(values) or (values and values[0] < 1):
            raise ValueError("entries must be distinct positive integers")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError("columns are not increasing")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    def node_of(self, value: int) -> Node:
        for i, r in enumerate(self.rows, 1):
            if value in r:
                return (i, r.index(value) + 1)
        raise KeyError(value)

    def relabel(self, w: Permutation) -> StandardTableau:
        """Replace each entry ``i`` by ``iw``; the caller ensures the result is standard."""
        return StandardTableau(tuple(tuple(w(v) for v in r) for r in self.rows))

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    def __str__(self):
        width = len(str(self.n)) if self.rows else 1
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in self.rows)


def _insert(rows: list[list[int]], x: int) -> int:
    """Row-insert ``x``; returns the index of the row that grew."""
    for i, r in enumerate(rows):
        k = bisect_right(r, x)
        if k == len(r):
            r.append(x)
            return i
        r[k], x = x, r[k]
    rows.append([x])
    return len(rows) - 1


def rs_pair(w: Permutation) -> tuple[StandardTableau, StandardTableau]:
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(w.row, 1):
        i = _insert(P, x)
        if i == len(Q):
            Q.append([])
        Q[i].append(step)
    return (StandardTableau(tuple(map(tuple, P))), StandardTableau(tuple(map(tuple, Q))))


def recording_tableau(w: Permutation) -> StandardTableau:
    return rs_pair(w)[1]


def shape_of(w: Permutation) -> tuple[int, ...]:
    """RS shape, computed without building the recording tableau."""
    P: list[list[int]] = []
    for x in w.row:
        _insert(P, x)
    return tuple(len(r) for r in P)


def _reverse_bump(rows: list[list[int]], i: int) -> int:
    """Remove the last entry of row ``i`` (0-based) and bump it out of row 0."""
    x = rows[i].pop()
    if not rows[i]:
        rows.pop()
    for r in reversed(rows[:i]):
        k = bisect_left(r, x) - 1
        r[k], x = x, r[k]
    return x


def reverse_insert(T: StandardTableau, corner: Node) -> tuple[StandardTableau, int]:
    """Reverse-bump from an inner corner; returns the smaller tableau and the expelled entry."""
    if corner not in corners(T.shape)[0]:
        raise ValueError(f"{corner} is not an inner corner of shape {T.shape}")
    rows = [list(r) for r in T.rows]
    x = _reverse_bump(rows, corner[0] - 1)
    return StandardTableau(tuple(map(tuple, rows))), x


def rs_inverse(P: StandardTableau, Q: StandardTableau) -> Permutation:
    if P.shape != Q.shape:
        raise ValueError(f"shape mismatch {P.shape} vs {Q.shape}")
    rows = [list(r) for r in P.rows]
    qrows = [list(r) for r in Q.rows]
    out = [0] * P.n
    for step in range(P.n, 0, -1):
        i = next(k for k, r in enumerate(qrows) if r and r[-1] == step)
        qrows[i].pop()
        out[step - 1] = _reverse_bump(rows, i)
    return Permutation(tuple(out))


def corners(shape: Sequence[int]) -> tuple[frozenset[Node], frozenset[Node]]:
    """Inner (removable) and outer (addable) corners of a partition shape."""
    lam = tuple(shape)
    r = len(lam)
    inner = {(i, lam[i - 1]) for i in range(1, r) if lam[i - 1] > lam[i]}
    inner.add((r, lam[r - 1]))
    outer = {(1, lam[0] + 1), (r + 1, 1)}
    outer |= {(i, lam[i - 1] + 1) for i in range(2, r + 1) if lam[i - 2] > lam[i - 1]}
    return frozenset(inner), frozenset(outer)


def standard_tableaux(shape: Sequence[int]) -> Iterator[StandardTableau]:
    """All standard Young tableaux of a partition shape (fills 1..n greedily into outer corners)."""
    shape = tuple(shape)
    n = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def rec(v):
        if v > n:
            yield StandardTableau(tuple(map(tuple, rows)))
            return
        for i, target in enumerate(shape):
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(v)
                yield from rec(v + 1)
                rows[i].pop()

    yield from rec(1)


# ---------------------------------------------------------------- subsequence type

def subsequence_type(D: Diagram) -> tuple[int, ...]:
    lam = row_composition(D)
    return shape_of(compose(parabolic_longest(lam), w_of(D)))


def is_admissible(D: Diagram) -> bool:
    return subsequence_type(D) == conjugate(row_composition(D))


def _incomparable_masks(nodes: Sequence[Node]) -> list[int]:
    masks = []
    for i, (a, b) in enumerate(nodes):
        m = 0
        for j, (c, d) in enumerate(nodes):
            if i != j and not ((a < c and b <= d) or (c < a and d <= b)):
                m |= 1 << j
        masks.append(m)
    return masks


def _widths(nodes: Sequence[Node]) -> list[int]:
    """``width[S]`` = size of the largest antichain inside the node subset ``S``."""
    inc = _incomparable_masks(nodes)
    size = 1 << len(nodes)
    width = [0] * size
    for S in range(1, size):
        low = S & -S
        i = low.bit_length() - 1
        without = width[S ^ low]
        with_i = 1 + width[S & inc[i]]
        width[S] = without if without > with_i else with_i
    return width


def _check_oracle_size(D: Diagram):
    if D.n > ORACLE_MAX_NODES:
        raise ValueError(f"oracle limited to {ORACLE_MAX_NODES} nodes, diagram has {D.n}")


def subsequence_type_oracle(D: Diagram) -> tuple[int, ...]:
    """Subsequence type by exhaustive subset scan; independent of RS."""
    _check_oracle_size(D)
    width = _widths(D.ordered)
    best = [0] * (D.n + 1)  # best[w] = largest subset of width exactly w
    for S, w in enumerate(width):
        size = S.bit_count()
        if size > best[w]:
            best[w] = size
    totals = list(accumulate(best, max))
    nu = [totals[k] - totals[k - 1] for k in range(1, D.n + 1)]
    return tuple(p for p in nu if p)


def _chain_cover(nodes: Sequence[Node]) -> list[list[Node]]:
    """Minimum chain cover via bipartite matching (Dilworth's constructive step)."""
    m = len(nodes)
    succ = [[j for j, (c, d) in enumerate(nodes) if a < c and b <= d] for (a, b) in nodes]
    match_right = [-1] * m  # match_right[j] = predecessor of j

    def augment(i, seen):
        for j in succ[i]:
            if j not in seen:
                seen.add(j)
                if match_right[j] < 0 or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    for i in range(m):
        augment(i, set())
    nxt = [-1] * m
    for j, i in enumerate(match_right):
        if i >= 0:
            nxt[i] = j
    chains = []
    for start in range(m):
        if match_right[start] < 0:
            chain, k = [], start
            while k >= 0:
                chain.append(nodes[k])
                k = nxt[k]
            chains.append(chain)
    return chains


def max_kpath(D: Diagram, k: int) -> list[list[Node]]:
    """A ``k``-path of maximum length, as ``k`` disjoint node paths (fewer if ``D`` runs out of nodes)."""
    _check_oracle_size(D)
    nodes = D.ordered
    width = _widths(nodes)
    best_S, best_size = 0, -1
    for S, w in enumerate(width):
        if w <= k:
            size = S.bit_count()
            if size > best_size:
                best_S, best_size = S, size
    chosen = [u for i, u in enumerate(nodes) if best_S >> i & 1]
    chains = _chain_cover(chosen)
    # split long chains so exactly k paths are returned when there are enough nodes
    while len(chains) < k and any(len(c) > 1 for c in chains):
        longest = max(chains, key=len)
        chains.remove(longest)
        chains += [longest[:1], longest[1:]]
    return sorted(chains)


def parse_tableau(text: str) -> StandardTableau:
    """Parse ``{"rows": [[1,3],[2]]}``, ``[[1,3],[2]]`` or rows separated by ``/``."""
    text = text.strip()
    if text.startswith("{") or text.startswith("["):
        data = json.loads(text)
        rows = data["rows"] if isinstance(data, dict) else data
    else:
        rows = [[int(v) for v in r.replace(",", " ").split()] for r in text.replace("\n", "/").split("/")]
    return StandardTableau(tuple(tuple(r) for r in rows))
