"""
Row-form permutations of {1, ..., n} with the right action convention.

A permutation ``w`` is stored as ``row = (1w, 2w, ..., nw)``.  Products are
read left to right: ``compose(x, y)`` applies ``x`` first, then ``y``, so
``compose(x, y).row[i] == y.row[x.row[i]]``.  Under this convention
left-multiplying by ``s_j`` swaps positions ``j, j+1`` of the row and
right-multiplying swaps the values ``j, j+1``.

>>> d = Permutation((3, 4, 7, 2, 6, 8, 1, 9, 5))
>>> compose(parabolic_longest((3, 3, 2, 1)), d)
Permutation([7, 4, 3, 8, 6, 2, 9, 1, 5])
"""

from __future__ import annotations

import re
from itertools import combinations
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "identity", "generator", "compose", "inverse", "length",
    "reduced_word", "word_product", "is_prefix", "longest_element",
    "parabolic_longest", "is_distinguished", "distinguished_reps",
    "coset_decompose", "embed",
    "conjugate_by_longest", "coset_cycle", "parse_permutation",
    "format_row", "format_cycles",
]


@dataclass(frozen=True, order=True)
class Permutation:
    row: tuple[int, ...]

    def __post_init__(self):
        row = tuple(self.row)
        if sorted(row) != list(range(1, len(row) + 1)):
            raise ValueError(f"{list(row)} is not a permutation of 1..{len(row)}")
        object.__setattr__(self, "row", row)

    @property
    def n(self) -> int:
        return len(self.row)

    def __call__(self, i: int) -> int:
        return self.row[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __len__(self):
        return len(self.row)

    def __iter__(self):
        return iter(self.row)

    def __repr__(self):
        return f"Permutation({list(self.row)})"

    def __str__(self):
        return format_row(self)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def generator(j: int, n: int) -> Permutation:
    """The adjacent transposition ``s_j = (j, j+1)`` in ``S_n``."""
    if not 1 <= j < n:
        raise ValueError(f"s_{j} is not a generator of S_{n}")
    row = list(range(1, n + 1))
    row[j - 1], row[j] = row[j], row[j - 1]
    return Permutation(tuple(row))


def compose(x: Permutation, y: Permutation) -> Permutation:
    if x.n != y.n:
        raise ValueError(f"degree mismatch: S_{x.n} vs S_{y.n}")
    yr = y.row
    return Permutation(tuple(yr[i - 1] for i in x.row))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for i, v in enumerate(w.row, 1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def length(w: Permutation) -> int:
    row = w.row
    n = len(row)
    return sum(1 for i in range(n) for j in range(i + 1, n) if row[i] > row[j])


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """
    Canonical reduced word of ``w``.

    Strips the smallest left descent ``s_j`` (positions ``j, j+1`` of the row
    out of order) until the identity is reached.  The stripped letters, in the
    order they were removed, multiply back to ``w``.
    """
    row = list(w.row)
    letters = []
    while True:
        for j in range(len(row) - 1):
            if row[j] > row[j + 1]:
                row[j], row[j + 1] = row[j + 1], row[j]
                letters.append(j + 1)
                break
        else:
            return tuple(letters)


def word_product(letters: Iterable[int], n: int) -> Permutation:
    """Left-to-right product ``s_{a_1} s_{a_2} ... s_{a_k}`` in ``S_n``."""
    row = list(range(1, n + 1))
    # right multiplication by s_j swaps the values j and j+1
    pos = list(range(-1, n))  # pos[v] = index of value v in row
    for j in letters:
        if not 1 <= j < n:
            raise ValueError(f"s_{j} is not a generator of S_{n}")
        a, b = pos[j], pos[j + 1]
        row[a], row[b] = j + 1, j
        pos[j], pos[j + 1] = b, a
    return Permutation(tuple(row))


def is_prefix(x: Permutation, y: Permutation) -> bool:
    """True iff some reduced form of ``y`` begins with a reduced form of ``x``."""
    if x.n != y.n:
        raise ValueError(f"degree mismatch: S_{x.n} vs S_{y.n}")
    return length(x) + length(compose(inverse(x), y)) == length(y)


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise ValueError("degree must be positive")
    return Permutation(tuple(range(n, 0, -1)))


def _blocks(lam: Sequence[int]):
    start = 0
    for part in lam:
        yield start, start + part
        start += part


def parabolic_longest(lam: Sequence[int]) -> Permutation:
    """Longest element of the Young subgroup: reverses every block of ``lam``."""
    row = []
    for a, b in _blocks(lam):
        row.extend(range(b, a, -1))
    return Permutation(tuple(row))


def _check_size(w: Permutation, lam: Sequence[int]):
    if sum(lam) != w.n:
        raise ValueError(f"composition {tuple(lam)} does not have size {w.n}")


def is_distinguished(e: Permutation, lam: Sequence[int]) -> bool:
    """Minimal length in its right coset ``W_J e``: increasing on each block."""
    _check_size(e, lam)
    row = e.row
    return all(row[i] < row[i + 1]
               for a, b in _blocks(lam) for i in range(a, b - 1))


def distinguished_reps(lam: Sequence[int]) -> list[Permutation]:
    """Every distinguished representative for ``lam``: each block gets an increasing set of values."""
    n = sum(lam)
    out = []

    def rec(k, remaining, row):
        if k == len(lam):
            out.append(Permutation(tuple(row)))
            return
        for block in combinations(sorted(remaining), lam[k]):
            rec(k + 1, remaining - set(block), row + list(block))

    rec(0, set(range(1, n + 1)), [])
    return out


def coset_decompose(w: Permutation, lam: Sequence[int]) -> tuple[Permutation, Permutation]:
    """Factor ``w = u e`` with ``u`` in the Young subgroup and ``e`` distinguished."""
    _check_size(w, lam)
    row = []
    for a, b in _blocks(lam):
        row.extend(sorted(w.row[a:b]))
    e = Permutation(tuple(row))
    return compose(w, inverse(e)), e


def embed(w: Permutation, n: int) -> Permutation:
    """View ``w`` in ``S_n`` (n >= w.n) by fixing the extra points."""
    if n < w.n:
        raise ValueError(f"cannot embed S_{w.n} in S_{n}")
    return Permutation(w.row + tuple(range(w.n + 1, n + 1)))


def conjugate_by_longest(w: Permutation) -> Permutation:
    """``w_0 w w_0``; row-form ``i -> n+1 - (n+1-i)w``."""
    n = w.n
    return Permutation(tuple(n + 1 - w.row[n - i] for i in range(1, n + 1)))


def coset_cycle(i: int, n: int) -> Permutation:
    """
    ``x_i = (i, i+1, ..., n) = s_{n-1} ... s_i`` in ``S_n``.

    With ``n`` the degree of the larger group, these are the distinguished
    right coset representatives of ``S_{n-1}`` in ``S_n``; ``x_n`` is 1.
    """
    if not 1 <= i <= n:
        raise ValueError(f"x_{i} undefined in S_{n}")
    row = list(range(1, n + 1))
    for v in range(i, n):
        row[v - 1] = v + 1
    row[n - 1] = i
    return Permutation(tuple(row))


# ---------------------------------------------------------------- text formats

_INT = re.compile(r"-?\d+")


def _from_cycles(text: str, n: int | None) -> Permutation:
    cycles = [[int(v) for v in _INT.findall(c)] for c in re.findall(r"\(([^()]*)\)", text)]
    points = [v for c in cycles for v in c]
    if len(points) != len(set(points)):
        raise ValueError(f"cycles in {text!r} are not disjoint")
    degree = max(points, default=1) if n is None else n
    if points and (min(points) < 1 or max(points) > degree):
        raise ValueError(f"cycle entries of {text!r} out of range 1..{degree}")
    row = list(range(1, degree + 1))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            row[a - 1] = b
    return Permutation(tuple(row))


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """
    Parse row-form ``[4,6,7,1,2,3,5,8]``, cycle form ``(1,4)(2,6,3,7,5)``
    or a generator word ``s3 s4 s5``.

    Cycle and word forms need the degree ``n`` unless it can be read off the
    largest entry.  A cycle maps each listed element to the next one.
    """
    text = text.strip()
    if text.startswith("["):
        row = tuple(int(v) for v in _INT.findall(text))
        w = Permutation(row)
        if n is not None and w.n != n:
            raise ValueError(f"{text} has degree {w.n}, expected {n}")
        return w
    if text.startswith("(") or text == "()":
        return _from_cycles(text, n)
    if text.startswith("s") or text in ("", "1", "e"):
        letters = [int(v) for v in re.findall(r"s_?(\d+)", text)]
        degree = n if n is not None else max(letters, default=0) + 1
        return word_product(letters, degree)
    raise ValueError(f"cannot parse permutation {text!r}")


def format_row(w: Permutation) -> str:
    return "[" + ",".join(map(str, w.row)) + "]"


def format_cycles(w: Permutation) -> str:
    seen = set()
    out = []
    for start in range(1, w.n + 1):
        if start in seen or w(start) == start:
            continue
        cycle = [start]
        seen.add(start)
        v = w(start)
        while v != start:
            cycle.append(v)
            seen.add(v)
            v = w(v)
        out.append("(" + ",".join(map(str, cycle)) + ")")
    return "".join(out) or "()"
