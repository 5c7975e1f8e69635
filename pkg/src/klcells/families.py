"""
Closed-form rims for compositions whose rim is known explicitly.

Every builder checks its answer against the general enumeration in
:mod:`klcells.cells` and raises ``RuntimeError`` on disagreement.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .cells import cell_report, rim_Y
from .diagram import Diagram, special_diagram, w_of, young_diagram
from .perm import Permutation, conjugate_by_longest
from .shapes import composition, conjugate, is_partition

__all__ = [
    "Family", "FamilyRim", "rim_partition", "rim_reversed_partition", "rim_hook",
    "two_ones_two_diagram", "rim_two_ones_two", "is_hook_rearrangement",
    "classify", "family_rim",
]


class Family(enum.Enum):
    PARTITION = "partition"
    REVERSED_PARTITION = "reversed_partition"
    HOOK = "hook_rearrangement"
    TWO_ONES_TWO = "two_ones_two"


@dataclass(frozen=True)
class FamilyRim:
    lam: tuple[int, ...]
    family: Family
    rim: frozenset[Permutation]
    predicted_size: int

    def to_dict(self) -> dict:
        out = cell_report(self.lam).to_dict(keys=("Y", "Ys", "E"))
        out["family"] = self.family.value
        out["predicted_size"] = self.predicted_size
        return out


def _checked(lam, family, rim, size) -> FamilyRim:
    rim = frozenset(rim)
    if rim != rim_Y(lam):
        raise RuntimeError(f"closed-form rim for {lam} ({family.value}) disagrees with the enumeration")
    return FamilyRim(lam, family, rim, size)


def rim_partition(lam: Sequence[int]) -> FamilyRim:
    lam = composition(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return _checked(lam, Family.PARTITION, {w_of(young_diagram(lam))}, 1)


def rim_reversed_partition(lam: Sequence[int]) -> FamilyRim:
    lam = composition(lam)
    if not is_partition(lam[::-1]):
        raise ValueError(f"the reverse of {lam} is not a partition")
    y = conjugate_by_longest(w_of(young_diagram(lam[::-1])))
    return _checked(lam, Family.REVERSED_PARTITION, {y}, 1)


def is_hook_rearrangement(lam: Sequence[int]) -> bool:
    """A single part ``m > 1`` strictly inside a run of 1s, with at least three parts."""
    lam = tuple(lam)
    big = [j for j, p in enumerate(lam) if p > 1]
    return len(lam) >= 3 and len(big) == 1 and 0 < big[0] < len(lam) - 1


def rim_hook(lam: Sequence[int]) -> FamilyRim:
    """The ``m`` special diagrams with row composition ``lam``, one per position of the long column."""
    lam = composition(lam)
    if not is_hook_rearrangement(lam):
        raise ValueError(f"{lam} is not a hook rearrangement with its long part inside")
    m = max(lam)
    cols = conjugate(lam)  # (r, 1, ..., 1)
    rim = set()
    for pos in range(m):
        mu = [1] * m
        mu[pos] = cols[0]
        rim.add(w_of(special_diagram(lam, mu)))
    return _checked(lam, Family.HOOK, rim, m)


def two_ones_two_diagram(r: int, a: int) -> Diagram:
    """Column 1 covers rows ``1..a-1`` and ``r``; column 2 covers rows ``a..r`` and ``1``."""
    if not 2 <= a <= r:
        raise ValueError(f"a={a} out of range 2..{r}")
    nodes = {(i, 1) for i in range(1, a)} | {(i, 2) for i in range(a, r + 1)}
    nodes |= {(r, 1), (1, 2)}
    return Diagram(frozenset(nodes))


def rim_two_ones_two(r: int) -> FamilyRim:
    """Rim of ``(2, 1^(r-2), 2)``."""
    if r < 3:
        raise ValueError("r must be at least 3")
    lam = (2,) + (1,) * (r - 2) + (2,)
    rim = {w_of(two_ones_two_diagram(r, a)) for a in range(2, r + 1)}
    return _checked(lam, Family.TWO_ONES_TWO, rim, r - 1)


def classify(lam: Sequence[int]) -> Family | None:
    """First family whose precondition ``lam`` meets, or ``None``."""
    lam = composition(lam)
    if is_partition(lam):
        return Family.PARTITION
    if is_partition(lam[::-1]):
        return Family.REVERSED_PARTITION
    if is_hook_rearrangement(lam):
        return Family.HOOK
    if len(lam) >= 3 and lam[0] == lam[-1] == 2 and all(p == 1 for p in lam[1:-1]):
        return Family.TWO_ONES_TWO
    return None


def family_rim(lam: Sequence[int]) -> FamilyRim | None:
    """Closed-form rim through :func:`classify`; ``None`` when no family applies."""
    lam = composition(lam)
    fam = classify(lam)
    if fam is Family.PARTITION:
        return rim_partition(lam)
    if fam is Family.REVERSED_PARTITION:
        return rim_reversed_partition(lam)
    if fam is Family.HOOK:
        return rim_hook(lam)
    if fam is Family.TWO_ONES_TWO:
        return rim_two_ones_two(len(lam))
    return None
