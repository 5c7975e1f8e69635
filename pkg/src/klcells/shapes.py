"""Compositions and partitions, stored as plain tuples of positive ints."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate
from typing import Iterator, Sequence

__all__ = [
    "composition", "is_partition", "conjugate", "dominates_leq",
    "generator_set", "Derived", "derived", "compositions", "partitions",
    "parse_composition", "format_composition",
]


def composition(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate and freeze a proper composition."""
    parts = tuple(int(p) for p in parts)
    if not parts:
        raise ValueError("a composition needs at least one part")
    if any(p < 1 for p in parts):
        raise ValueError(f"{parts} has a non-positive part")
    return parts


def is_partition(lam: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:]))


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, max(lam) + 1))


def dominates_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam`` is below ``mu`` in dominance order (partial sums compared)."""
    if sum(lam) != sum(mu):
        raise ValueError(f"{tuple(lam)} and {tuple(mu)} have different sizes")
    k = max(len(lam), len(mu))
    a = accumulate(tuple(lam) + (0,) * (k - len(lam)))
    b = accumulate(tuple(mu) + (0,) * (k - len(mu)))
    return all(x <= y for x, y in zip(a, b))


def generator_set(lam: Sequence[int]) -> frozenset[int]:
    """Indices ``j`` of the generators ``s_j`` of the Young subgroup ``W_J(lam)``."""
    n = sum(lam)
    cuts = set(accumulate(lam[:-1]))
    return frozenset(j for j in range(1, n) if j not in cuts)


@dataclass(frozen=True)
class Derived:
    """Compositions derived from ``lam`` for the lifting maps."""
    lam: tuple[int, ...]

    @property
    def reverse(self) -> tuple[int, ...]:
        return self.lam[::-1]

    @property
    def lower_star(self) -> tuple[int, ...]:
        return self.lam + (1,)

    @property
    def upper_star(self) -> tuple[int, ...]:
        return (1,) + self.lam

    @property
    def max_part(self) -> int:
        return max(self.lam)

    @cached_property
    def M_set(self) -> frozenset[int]:
        m = self.max_part
        return frozenset(j for j, p in enumerate(self.lam, 1) if p == m)

    def bump(self, k: int) -> tuple[int, ...]:
        if k not in self.M_set:
            raise ValueError(f"part {k} of {self.lam} is not maximal")
        return self.lam[:k - 1] + (self.lam[k - 1] + 1,) + self.lam[k:]


def derived(lam: Sequence[int]) -> Derived:
    return Derived(composition(lam))


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All proper compositions of ``n``, in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_composition(text: str) -> tuple[int, ...]:
    """Parse ``(3,3,2,1)``, ``3,3,2,1`` or the exponent form ``2,1^3,2``."""
    body = text.strip().strip("()[]").replace(" ", "")
    parts = []
    for term in filter(None, body.split(",")):
        m = _TERM.match(term)
        if m is None:
            raise ValueError(f"bad composition term {term!r} in {text!r}")
        parts.extend([int(m.group(1))] * int(m.group(2) or 1))
    return composition(parts)


def format_composition(lam: Sequence[int]) -> str:
    return "(" + ",".join(map(str, lam)) + ")"
