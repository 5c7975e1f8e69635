"""
Generalized diagrams: finite node sets in the grid, their row and column
fillings, the permutation ``w_D`` and the canonical diagram ``D(d, lam)``.

Nodes are ``(row, col)`` pairs indexed from 1, rows top to bottom.  A
:class:`Diagram` is always principal (no empty rows or columns); use
:func:`normalize_principal` to build one from arbitrary nodes.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping, Sequence

from .perm import Permutation, is_distinguished
from .shapes import conjugate

__all__ = [
    "Node", "Diagram", "DTableau", "normalize_principal", "row_composition",
    "column_composition", "is_special", "row_fill", "column_fill", "w_of",
    "is_standard", "act", "prefixes_of_w", "canonical_diagram", "rotate180",
    "young_diagram", "special_diagram", "principal_diagrams",
    "parse_diagram", "diagram_to_json", "diagram_to_ascii", "tableau_to_ascii",
]

Node = tuple[int, int]


@dataclass(frozen=True)
class Diagram:
    nodes: frozenset[Node]

    def __post_init__(self):
        nodes = frozenset((int(a), int(b)) for a, b in self.nodes)
        if not nodes:
            raise ValueError("a diagram needs at least one node")
        rows = {a for a, _ in nodes}
        cols = {b for _, b in nodes}
        if rows != set(range(1, len(rows) + 1)) or cols != set(range(1, len(cols) + 1)):
            raise ValueError("diagram is not principal; use normalize_principal")
        object.__setattr__(self, "nodes", nodes)

    @cached_property
    def ordered(self) -> tuple[Node, ...]:
        """Nodes in the row-major total order."""
        return tuple(sorted(self.nodes))

    @cached_property
    def by_columns(self) -> tuple[Node, ...]:
        return tuple(sorted(self.nodes, key=lambda u: (u[1], u[0])))

    @property
    def n(self) -> int:
        return len(self.nodes)

    @cached_property
    def r(self) -> int:
        return max(a for a, _ in self.nodes)

    @cached_property
    def c(self) -> int:
        return max(b for _, b in self.nodes)

    def __contains__(self, node) -> bool:
        return node in self.nodes

    def __iter__(self):
        return iter(self.ordered)

    def __len__(self):
        return len(self.nodes)

    def __lt__(self, other: Diagram) -> bool:
        return self.ordered < other.ordered

    def __repr__(self):
        return f"Diagram({sorted(self.nodes)})"

    def __str__(self):
        return diagram_to_ascii(self)


@dataclass(frozen=True, eq=False)
class DTableau:
    """A bijection from the nodes of ``base`` to ``1..n``."""
    base: Diagram
    entries: Mapping[Node, int]

    def __getitem__(self, node: Node) -> int:
        return self.entries[node]

    def __eq__(self, other):
        if not isinstance(other, DTableau):
            return NotImplemented
        return self.base == other.base and dict(self.entries) == dict(other.entries)

    def __hash__(self):
        return hash((self.base, frozenset(self.entries.items())))

    def __str__(self):
        return tableau_to_ascii(self)


def normalize_principal(nodes: Iterable[Node]) -> Diagram:
    """Delete empty rows and columns, reindexing consecutively from 1."""
    nodes = {(int(a), int(b)) for a, b in nodes}
    if not nodes:
        raise ValueError("a diagram needs at least one node")
    rows = {a: i for i, a in enumerate(sorted({a for a, _ in nodes}), 1)}
    cols = {b: j for j, b in enumerate(sorted({b for _, b in nodes}), 1)}
    return Diagram(frozenset((rows[a], cols[b]) for a, b in nodes))


def row_composition(D: Diagram) -> tuple[int, ...]:
    counts = Counter(a for a, _ in D.nodes)
    return tuple(counts[i] for i in range(1, D.r + 1))


def column_composition(D: Diagram) -> tuple[int, ...]:
    counts = Counter(b for _, b in D.nodes)
    return tuple(counts[j] for j in range(1, D.c + 1))


def _special_pairwise(D: Diagram) -> bool:
    nodes = D.ordered
    for (i, j), (k, l) in combinations(nodes, 2):
        if i != k and j != l and (k, j) not in D.nodes and (i, l) not in D.nodes:
            return False
    return True


def is_special(D: Diagram) -> bool:
    """
    True iff ``D`` is a Young diagram with its rows and columns permuted.

    Evaluated by both the pairwise node criterion and the conjugate test
    ``lam'' == mu'``; the two must agree.
    """
    pairwise = _special_pairwise(D)
    lam, mu = row_composition(D), column_composition(D)
    by_shape = conjugate(conjugate(lam)) == conjugate(mu)
    if pairwise != by_shape:
        raise RuntimeError(f"specialness tests disagree on {D!r}")
    return pairwise


def row_fill(D: Diagram) -> DTableau:
    return DTableau(D, {u: i for i, u in enumerate(D.ordered, 1)})


def column_fill(D: Diagram) -> DTableau:
    return DTableau(D, {u: i for i, u in enumerate(D.by_columns, 1)})


def w_of(D: Diagram) -> Permutation:
    """The permutation sending each row-fill entry to the column-fill entry at the same node."""
    row = [0] * D.n
    cf = column_fill(D).entries
    for i, u in enumerate(D.ordered):
        row[i] = cf[u]
    return Permutation(tuple(row))


def is_standard(t: DTableau) -> bool:
    nodes = t.base.ordered
    e = t.entries
    for (a, b) in nodes:
        for (c, d) in nodes:
            if a <= c and b <= d and e[(a, b)] > e[(c, d)]:
                return False
    return True


def act(t: DTableau, w: Permutation) -> DTableau:
    if t.base.n != w.n:
        raise ValueError(f"tableau has {t.base.n} entries, permutation degree {w.n}")
    return DTableau(t.base, {u: w.row[v - 1] for u, v in t.entries.items()})


def _linear_extensions(D: Diagram) -> Iterator[dict[Node, int]]:
    nodes = D.ordered
    n = len(nodes)
    below = [[k for k, (c, d) in enumerate(nodes) if k != m and c <= a and d <= b]
             for m, (a, b) in enumerate(nodes)]
    filled = [0] * n
    assignment: dict[Node, int] = {}

    def rec(value):
        if value > n:
            yield dict(assignment)
            return
        for m in range(n):
            if not filled[m] and all(filled[k] for k in below[m]):
                filled[m] = 1
                assignment[nodes[m]] = value
                yield from rec(value + 1)
                filled[m] = 0
                del assignment[nodes[m]]

    yield from rec(1)


def prefixes_of_w(D: Diagram) -> set[Permutation]:
    """All ``u`` with ``t^D u`` standard, which are exactly the prefixes of ``w_D``."""
    out = set()
    for ext in _linear_extensions(D):
        out.add(Permutation(tuple(ext[u] for u in D.ordered)))
    return out


def canonical_diagram(d: Permutation, lam: Sequence[int]) -> Diagram:
    """
    ``D(d, lam)``: the diagram with fewest columns, row composition ``lam``
    and ``w_D == d``.

    Row ``i`` holds the values of the ``i``-th block of ``d``.  Reading the
    values ``1..n`` in order, a value continues the current column when its
    row lies strictly below the previous value's row, and opens a new column
    otherwise.
    """
    if not is_distinguished(d, lam):
        raise ValueError(f"{d} is not a distinguished coset representative for {tuple(lam)}")
    row_of = [0] * (d.n + 1)
    pos = 0
    for i, part in enumerate(lam, 1):
        for v in d.row[pos:pos + part]:
            row_of[v] = i
        pos += part
    nodes = []
    col = 0
    prev_row = d.n + 1
    for v in range(1, d.n + 1):
        if row_of[v] <= prev_row:
            col += 1
        nodes.append((row_of[v], col))
        prev_row = row_of[v]
    D = Diagram(frozenset(nodes))
    if w_of(D) != d:
        raise RuntimeError(f"canonical diagram construction failed for {d}, {tuple(lam)}")
    return D


def rotate180(D: Diagram) -> Diagram:
    r, c = D.r, D.c
    return Diagram(frozenset((r + 1 - a, c + 1 - b) for a, b in D.nodes))


def young_diagram(lam: Sequence[int]) -> Diagram:
    return Diagram(frozenset((i, j) for i, p in enumerate(lam, 1) for j in range(1, p + 1)))


def special_diagram(lam: Sequence[int], mu: Sequence[int]) -> Diagram:
    """The unique diagram with row composition ``lam`` and column composition ``mu``, given ``mu'' == lam'``."""
    if conjugate(conjugate(mu)) != conjugate(lam):
        raise ValueError(f"no special diagram with rows {tuple(lam)} and columns {tuple(mu)}")
    # column j sits at Young position 1 + #{longer columns}; equal columns share rows
    rank = [1 + sum(1 for m in mu if m > mj) for mj in mu]
    D = Diagram(frozenset((i, j) for i, p in enumerate(lam, 1)
                          for j, rk in enumerate(rank, 1) if p >= rk))
    if row_composition(D) != tuple(lam) or column_composition(D) != tuple(mu):
        raise RuntimeError(f"special diagram construction failed for {tuple(lam)}, {tuple(mu)}")
    return D


def principal_diagrams(lam: Sequence[int], max_cols: int | None = None) -> set[Diagram]:
    """Every principal diagram with row composition ``lam`` and at most ``max_cols`` columns."""
    max_cols = sum(lam) if max_cols is None else max_cols
    choices = [list(combinations(range(1, max_cols + 1), p)) for p in lam]
    out = set()
    for pick in product(*choices):
        used = set().union(*pick)
        if used != set(range(1, len(used) + 1)):
            continue
        out.add(Diagram(frozenset((i, b) for i, cols in enumerate(pick, 1) for b in cols)))
    return out


# ---------------------------------------------------------------- text formats

def diagram_to_json(D: Diagram) -> dict:
    return {"nodes": [list(u) for u in D.ordered]}


def diagram_to_ascii(D: Diagram) -> str:
    return "\n".join(" ".join("x" if (i, j) in D.nodes else "." for j in range(1, D.c + 1))
                     for i in range(1, D.r + 1))


def tableau_to_ascii(t: DTableau) -> str:
    D = t.base
    width = len(str(D.n))
    lines = []
    for i in range(1, D.r + 1):
        cells = [str(t.entries[(i, j)]).rjust(width) if (i, j) in D.nodes else ".".rjust(width)
                 for j in range(1, D.c + 1)]
        lines.append(" ".join(cells))
    return "\n".join(lines)


def parse_diagram(text: str) -> Diagram:
    """
    Parse JSON ``{"nodes": [[1,3], ...]}`` or ASCII rows of ``x`` and ``.``.

    ASCII rows are separated by newlines or ``/``; cells by spaces (or not at
    all).  Non-principal input is normalized.
    """
    text = text.strip()
    if text.startswith("{") or text.startswith("[["):
        data = json.loads(text)
        nodes = data["nodes"] if isinstance(data, dict) else data
        return normalize_principal(tuple(u) for u in nodes)
    nodes = []
    for i, line in enumerate(re.split(r"[\n/;]", text), 1):
        line = line.strip()
        cells = line.split() if " " in line else list(line)
        for j, cell in enumerate(cells, 1):
            if cell.lower() in ("x", "*", "#"):
                nodes.append((i, j))
            elif cell not in (".", "_", "o"):
                raise ValueError(f"bad diagram cell {cell!r}")
    return normalize_principal(nodes)
