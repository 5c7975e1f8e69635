"""
The right cell of ``w_J(lam)`` and its rim.

``Z(lam)`` is the set of distinguished ``e`` with ``w_J(lam) e`` in the cell
of ``w_J(lam)``; it is closed under prefixes, so it is enumerated by a
breadth-first search up the right weak order from the identity.  The rim
``Y(lam)`` is its set of prefix-maximal elements.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .diagram import (Diagram, Node, canonical_diagram, diagram_to_json,
                      special_diagram, w_of)
from .perm import (Permutation, compose, coset_cycle, embed, format_row,
                   identity, inverse, is_distinguished, length,
                   parabolic_longest, reduced_word)
from .rs import (StandardTableau, corners, is_admissible, recording_tableau,
                 reverse_insert, rs_inverse, standard_tableaux)
from .shapes import composition, conjugate

__all__ = [
    "in_Z", "in_Z_by_recording", "enumerate_Z", "rim_Y", "rim_diagrams",
    "special_Z", "special_rim", "cell_elements", "cell_reduced_words",
    "brute_force_cell", "oracle_limit", "cell_id", "cell_of",
    "induce_cell", "induction_union", "restrict_cell", "restriction_union",
    "CellReport", "cell_report", "sort_key", "sorted_perms",
]


def sort_key(w: Permutation):
    return (length(w), w.row)


def sorted_perms(ws) -> list[Permutation]:
    return sorted(ws, key=sort_key)


def in_Z(lam: Sequence[int], e: Permutation) -> bool:
    """Membership in ``Z(lam)`` through admissibility of ``D(e, lam)``."""
    if sum(lam) != e.n:
        raise ValueError(f"composition {tuple(lam)} does not have size {e.n}")
    if not is_distinguished(e, lam):
        return False
    return is_admissible(canonical_diagram(e, lam))


def in_Z_by_recording(lam: Sequence[int], e: Permutation) -> bool:
    """Membership in ``Z(lam)`` by comparing recording tableaux with ``w_J(lam)``."""
    if sum(lam) != e.n:
        raise ValueError(f"composition {tuple(lam)} does not have size {e.n}")
    if not is_distinguished(e, lam):
        return False
    wj = parabolic_longest(lam)
    return recording_tableau(compose(wj, e)) == recording_tableau(wj)


def _up_neighbours(e: Permutation):
    """``e s_j`` for every ``j`` with ``l(e s_j) = l(e) + 1``."""
    row = e.row
    pos = {v: i for i, v in enumerate(row)}
    for j in range(1, e.n):
        a, b = pos[j], pos[j + 1]
        if a < b:
            new = list(row)
            new[a], new[b] = j + 1, j
            yield j, Permutation(tuple(new))


@lru_cache(maxsize=None)
def _z_and_rim(lam: tuple[int, ...]) -> tuple[frozenset, frozenset]:
    start = identity(sum(lam))
    seen = {start}
    rim = set()
    frontier = [start]
    while frontier:
        nxt = []
        for e in sorted(frontier, key=lambda w: w.row):
            extended = False
            for _, f in _up_neighbours(e):
                if f in seen:
                    extended = True
                elif in_Z(lam, f):
                    seen.add(f)
                    nxt.append(f)
                    extended = True
            if not extended:
                rim.add(e)
        frontier = nxt
    return frozenset(seen), frozenset(rim)


def enumerate_Z(lam: Sequence[int]) -> frozenset[Permutation]:
    return _z_and_rim(composition(lam))[0]


def rim_Y(lam: Sequence[int]) -> frozenset[Permutation]:
    return _z_and_rim(composition(lam))[1]


def rim_diagrams(lam: Sequence[int]) -> frozenset[Diagram]:
    lam = composition(lam)
    return frozenset(canonical_diagram(y, lam) for y in rim_Y(lam))


@lru_cache(maxsize=None)
def _special_diagrams(lam: tuple[int, ...]) -> frozenset[Diagram]:
    target = conjugate(lam)
    return frozenset(special_diagram(lam, mu) for mu in set(permutations(target)))


def special_Z(lam: Sequence[int]) -> frozenset[Permutation]:
    """``Z_s(lam)``: the ``w_D`` of special diagrams with row composition ``lam``."""
    return frozenset(w_of(D) for D in _special_diagrams(composition(lam)))


def special_rim(lam: Sequence[int]) -> frozenset[Permutation]:
    return rim_Y(lam) & special_Z(lam)


def cell_elements(lam: Sequence[int]) -> frozenset[Permutation]:
    wj = parabolic_longest(lam)
    return frozenset(compose(wj, e) for e in enumerate_Z(lam))


def cell_reduced_words(lam: Sequence[int]) -> dict[Permutation, tuple[int, ...]]:
    """Reduced word of each cell element: a word for ``w_J`` followed by one for ``e``."""
    wj = parabolic_longest(lam)
    head = reduced_word(wj)
    return {compose(wj, e): head + reduced_word(e) for e in enumerate_Z(lam)}


def oracle_limit() -> int:
    return int(os.environ.get("KLCELLS_ORACLE_LIMIT", "8"))


@lru_cache(maxsize=8)
def _recording_index(n: int) -> dict[StandardTableau, frozenset[Permutation]]:
    groups: dict[StandardTableau, set] = {}
    for row in permutations(range(1, n + 1)):
        w = Permutation(row)
        groups.setdefault(recording_tableau(w), set()).add(w)
    return {k: frozenset(v) for k, v in groups.items()}


def brute_force_cell(lam: Sequence[int]) -> frozenset[Permutation]:
    """The right cell of ``w_J(lam)`` by scanning all of ``S_n`` for its recording tableau."""
    lam = composition(lam)
    n = sum(lam)
    if n > oracle_limit():
        raise ValueError(f"brute force limited to n <= {oracle_limit()} (KLCELLS_ORACLE_LIMIT)")
    return _recording_index(n)[recording_tableau(parabolic_longest(lam))]


# ---------------------------------------------------------------- induction / restriction

def cell_id(w: Permutation) -> StandardTableau:
    return recording_tableau(w)


def cell_of(A: StandardTableau) -> frozenset[Permutation]:
    """The right cell ``{w : Q(w) = A}``, built by inverse RS over all insertion tableaux."""
    return frozenset(rs_inverse(P, A) for P in standard_tableaux(A.shape))


def induce_cell(A: StandardTableau) -> dict[Node, StandardTableau]:
    """Recording tableaux ``A_k`` obtained by adding ``n+1`` at each outer corner ``k``."""
    out = {}
    for k in sorted(corners(A.shape)[1]):
        rows = [list(r) for r in A.rows] + [[]]
        rows[k[0] - 1].append(A.n + 1)
        out[k] = StandardTableau(tuple(map(tuple, rows)))
    return out


def induction_union(A: StandardTableau) -> tuple[frozenset, frozenset]:
    """Both sides of ``cell(A) X' = union of cell(A_k)``."""
    n = A.n
    left = frozenset(compose(embed(w, n + 1), coset_cycle(i, n + 1))
                     for w in cell_of(A) for i in range(1, n + 2))
    right = frozenset().union(*(cell_of(Ak) for Ak in induce_cell(A).values()))
    return left, right


def restrict_cell(A: StandardTableau) -> list[tuple[Node, Permutation, StandardTableau]]:
    """
    For each inner corner ``k`` of a recording tableau on ``1..n+1``: the
    coset representative ``d_k`` and the recording tableau ``A_k`` on ``1..n``
    with ``cell(A)`` the disjoint union of ``d_k cell(A_k)``.
    """
    m = A.n
    out = []
    for k in sorted(corners(A.shape)[0]):
        smaller, i = reverse_insert(A, k)
        d = inverse(coset_cycle(i, m))
        out.append((k, d, smaller.relabel(d)))
    return out


def restriction_union(A: StandardTableau) -> tuple[frozenset, list[frozenset]]:
    """``cell(A)`` and the pieces ``d_k cell(A_k)`` it should split into."""
    m = A.n
    pieces = [frozenset(compose(d, embed(w, m)) for w in cell_of(Ak))
              for _, d, Ak in restrict_cell(A)]
    return cell_of(A), pieces


# ---------------------------------------------------------------- reports

@dataclass
class CellReport:
    lam: tuple[int, ...]
    Z: list[Permutation]
    Y: list[Permutation]
    Ys: list[Permutation]
    E: list[Diagram]
    cell: list[Permutation]
    reduced_words: dict[Permutation, tuple[int, ...]] = field(default_factory=dict)

    def to_dict(self, keys: Sequence[str] = ("Z", "Y", "Ys", "E", "cell")) -> dict:
        out: dict = {"lambda": list(self.lam)}
        for key in keys:
            if key == "E":
                out["E"] = [diagram_to_json(D) for D in self.E]
            else:
                out[key] = [list(w.row) for w in getattr(self, key)]
        wanted = {w for key in keys if key != "E" for w in getattr(self, key)}
        out["reduced_words"] = {format_row(w): list(word)
                                for w, word in sorted(self.reduced_words.items(), key=lambda kv: sort_key(kv[0]))
                                if w in wanted}
        return out


def cell_report(lam: Sequence[int]) -> CellReport:
    lam = composition(lam)
    Y = sorted_perms(rim_Y(lam))
    words = {e: reduced_word(e) for e in enumerate_Z(lam)}
    words.update(cell_reduced_words(lam))
    return CellReport(
        lam=lam,
        Z=sorted_perms(enumerate_Z(lam)),
        Y=Y,
        Ys=sorted_perms(special_rim(lam)),
        E=[canonical_diagram(y, lam) for y in Y],
        cell=sorted_perms(cell_elements(lam)),
        reduced_words=words,
    )
