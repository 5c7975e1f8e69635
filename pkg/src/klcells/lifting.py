"""
Lifting maps from ``Z(lam)`` into ``Z`` of a composition of ``n+1``.

* ``theta_star``: ``lam -> lam + (1,)``, adding one node in a new last row.
* ``theta_upper_star``: ``lam -> (1,) + lam``, the same map conjugated by the
  longest elements.
* ``theta_k``: ``lam -> lam`` with a maximal part ``k`` increased, adding a
  node at the end of row ``k`` in a new last column.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .cells import (cell_elements, enumerate_Z, in_Z, rim_Y, rim_diagrams,
                    sorted_perms)
from .diagram import Diagram, canonical_diagram, row_composition, w_of
from .perm import (Permutation, compose, conjugate_by_longest, coset_cycle,
                   embed, format_row, inverse, is_prefix, longest_element,
                   parabolic_longest, word_product)
from .rs import is_admissible
from .shapes import composition, derived

__all__ = [
    "star_extend_zero", "star_extend_column", "star_extend_node", "p_of", "q_of",
    "theta_star", "theta_upper_star", "upper_star_coset_ok", "bump_extend",
    "theta_k", "theta_last", "Condition", "theta_k_condition", "restriction_bridge",
    "LiftReport", "lift_star_report", "lift_k_report", "connector", "bump_prefix",
]


def star_extend_zero(D: Diagram) -> Diagram:
    """Shift every node one column right and put the new node at the start of a new last row."""
    return Diagram(frozenset({(a, b + 1) for a, b in D.nodes} | {(D.r + 1, 1)}))


def star_extend_column(D: Diagram, j: int) -> Diagram:
    if not 1 <= j <= D.c:
        raise ValueError(f"column {j} out of range 1..{D.c}")
    return Diagram(D.nodes | {(D.r + 1, j)})


def star_extend_node(D: Diagram, i: int) -> Diagram:
    """
    Add a node in a new last row under ``u_i``, the node holding ``i`` in the
    column filling.  When ``u_i`` is not last in its column, the part of the
    column below ``u_i`` first moves into a new column just to its right.
    """
    if not 1 <= i <= D.n:
        raise ValueError(f"entry {i} out of range 1..{D.n}")
    cols = D.by_columns
    a, b = cols[i - 1]
    if i == D.n or cols[i][1] > b:
        return Diagram(D.nodes | {(D.r + 1, b)})
    nodes = set(cols[:i]) | {(aj, bj + 1) for aj, bj in cols[i:]}
    nodes.add((D.r + 1, b))
    return Diagram(frozenset(nodes))


def _require_admissible(D: Diagram):
    if not is_admissible(D):
        raise ValueError(f"{D!r} is not admissible")


def p_of(D: Diagram) -> int:
    """Least ``i`` with ``D'(u_i)`` admissible (scanning down from ``n``)."""
    _require_admissible(D)
    for i in range(D.n, 0, -1):
        if not is_admissible(star_extend_node(D, i)):
            return i + 1
    return 1


def q_of(D: Diagram) -> int:
    """Least column ``j`` with ``D'_j`` admissible."""
    _require_admissible(D)
    return next(j for j in range(1, D.c + 1) if is_admissible(star_extend_column(D, j)))


def connector(z: Permutation, z_new: Permutation) -> Permutation:
    """``x`` with ``z_new = z x``, ``z`` embedded in the larger group."""
    return compose(inverse(embed(z, z_new.n)), z_new)


def _require_in_Z(lam, z):
    if not in_Z(lam, z):
        raise ValueError(f"{z} is not in Z{tuple(lam)}")


def theta_star(lam: Sequence[int], z: Permutation) -> Permutation:
    lam = composition(lam)
    _require_in_Z(lam, z)
    D = canonical_diagram(z, lam)
    return w_of(star_extend_column(D, q_of(D)))


def theta_upper_star(lam: Sequence[int], z: Permutation) -> Permutation:
    lam = composition(lam)
    _require_in_Z(lam, z)
    rev = lam[::-1]
    return conjugate_by_longest(theta_star(rev, conjugate_by_longest(z)))


def upper_star_coset_ok(z: Permutation, image: Permutation) -> bool:
    """``image`` lies in ``(w_S' w_S z w_S w_S') w_S' X' w_S'``."""
    n1 = image.n
    w_big = longest_element(n1)
    w_small = embed(longest_element(z.n), n1)
    base = compose(compose(compose(compose(w_big, w_small), embed(z, n1)), w_small), w_big)
    x = conjugate_by_longest(compose(inverse(base), image))
    return any(x == coset_cycle(i, n1) for i in range(1, n1 + 1))


def bump_extend(D: Diagram, k: int) -> Diagram:
    lam = row_composition(D)
    if k not in derived(lam).M_set:
        raise ValueError(f"row {k} of {lam} is not of maximal length")
    return Diagram(D.nodes | {(k, D.c + 1)})


def bump_prefix(lam: Sequence[int], k: int) -> Permutation:
    """``d = s_{p+1} ... s_n`` in ``S_{n+1}`` with ``p = lam_1 + ... + lam_k``."""
    n = sum(lam)
    p = sum(lam[:k])
    return word_product(range(p + 1, n + 1), n + 1)


def theta_k(lam: Sequence[int], k: int, z: Permutation) -> Permutation:
    """``w`` of ``D(z, lam)`` with a node added at the end of row ``k``; equals ``d z``."""
    lam = composition(lam)
    derived(lam).bump(k)
    _require_in_Z(lam, z)
    image = w_of(bump_extend(canonical_diagram(z, lam), k))
    if image != compose(bump_prefix(lam, k), embed(z, z.n + 1)):
        raise RuntimeError(f"theta_k disagrees with the d z formula for {z}, {lam}, k={k}")
    return image


def theta_last(lam: Sequence[int], z: Permutation) -> Permutation:
    """Dual of ``theta_k`` for ``k = r`` (the last part), through the reversal symmetry."""
    lam = composition(lam)
    rev = lam[::-1]
    return conjugate_by_longest(theta_k(rev, 1, conjugate_by_longest(z)))


class Condition(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    NONE = "none"


def theta_k_condition(lam: Sequence[int], k: int) -> Condition:
    """Which sufficient hypothesis for rim containment under ``theta_k`` applies."""
    lam = composition(lam)
    M = derived(lam).M_set
    if k not in M:
        raise ValueError(f"part {k} of {lam} is not maximal")
    if k == 1:
        return Condition.A
    if k != max(M):
        return Condition.B
    others = [p for j, p in enumerate(lam, 1) if j != k]
    if M == {k} and others:
        m = max(others)
        if max(j for j, p in enumerate(lam, 1) if p == m) > k:
            return Condition.C
    return Condition.NONE


def restriction_bridge(lam: Sequence[int], k: int) -> dict:
    """Check ``dbar w_J(lam) = w_J(lam^(k)) d`` and ``dbar C(lam)`` inside ``C(lam^(k))``."""
    lam = composition(lam)
    bar = derived(lam).bump(k)
    n = sum(lam)
    q = sum(lam[:k - 1])
    d = bump_prefix(lam, k)
    dbar = word_product(range(q + 1, n + 1), n + 1)
    lhs = compose(dbar, embed(parabolic_longest(lam), n + 1))
    rhs = compose(parabolic_longest(bar), d)
    big = cell_elements(bar)
    return {
        "lambda": lam,
        "target": bar,
        "d": d,
        "d_bar": dbar,
        "identity": lhs == rhs,
        "inclusion": all(compose(dbar, embed(w, n + 1)) in big for w in cell_elements(lam)),
    }


# ---------------------------------------------------------------- reports

@dataclass
class LiftReport:
    lam: tuple[int, ...]
    target: tuple[int, ...]
    pairs: list[tuple[Permutation, Permutation, Permutation]]
    checks: dict[str, bool]
    rim: frozenset = field(default_factory=frozenset)
    condition: Condition | None = None

    def to_dict(self) -> dict:
        out = {
            "lambda": list(self.lam),
            "target": list(self.target),
            "pairs": [{"z": list(z.row), "z_prime": list(zp.row), "connector": list(x.row),
                       "rim": z in self.rim} for z, zp, x in self.pairs],
            "checks": dict(sorted(self.checks.items())),
        }
        if self.condition is not None:
            out["condition"] = self.condition.value
        return out

    def table(self) -> str:
        head = f"{self.lam} -> {self.target}"
        if self.condition is not None:
            head += f"   condition {self.condition.value}"
        lines = [head]
        for z, zp, x in self.pairs:
            mark = "*" if z in self.rim else " "
            lines.append(f"{mark} {format_row(z):<24} -> {format_row(zp):<26} x = {format_row(x)}")
        lines += [f"  {name}: {'yes' if ok else 'no'}" for name, ok in sorted(self.checks.items())]
        return "\n".join(lines)


def lift_star_report(lam: Sequence[int]) -> LiftReport:
    lam = composition(lam)
    target = derived(lam).lower_star
    Z = sorted_perms(enumerate_Z(lam))
    image = {z: theta_star(lam, z) for z in Z}
    pairs = [(z, image[z], connector(z, image[z])) for z in Z]
    n1 = sum(target)
    xs = [coset_cycle(i, n1) for i in range(1, n1 + 1)]
    Y, Ystar, Zstar = rim_Y(lam), rim_Y(target), enumerate_Z(target)
    maximal = all(is_prefix(x, conn)
                  for z, _, conn in pairs for x in xs
                  if compose(embed(z, n1), x) in Zstar)
    checks = {
        "injective": len(set(image.values())) == len(image),
        "image_in_Z": all(v in Zstar for v in image.values()),
        "connectors_in_X": all(conn in xs for _, _, conn in pairs),
        "connector_maximal": maximal,
        "Y_in_Ystar": all(image[y] in Ystar for y in Y),
        "Ystar_in_Ztheta": Ystar <= set(image.values()),
    }
    return LiftReport(lam, target, pairs, checks, rim=Y)


def lift_k_report(lam: Sequence[int], k: int) -> LiftReport:
    lam = composition(lam)
    target = derived(lam).bump(k)
    cond = theta_k_condition(lam, k)
    Z = sorted_perms(enumerate_Z(lam))
    image = {z: theta_k(lam, k, z) for z in Z}
    pairs = [(z, image[z], connector(z, image[z])) for z in Z]
    Y, Ybar, Zbar = rim_Y(lam), rim_Y(target), enumerate_Z(target)
    rim_image = {image[y] for y in Y}
    checks = {
        "injective": len(set(image.values())) == len(image),
        "image_in_Z": all(v in Zbar for v in image.values()),
        "Y_theta_in_Ybar": rim_image <= Ybar,
        "Y_theta_equals_Ybar": rim_image == Ybar,
        "nonrim_stays_off_rim": all(image[z] not in Ybar for z in Z if z not in Y),
    }
    if cond is Condition.A:
        checks["E_bijection"] = {bump_extend(D, k) for D in rim_diagrams(lam)} == set(rim_diagrams(target))
    bridge = restriction_bridge(lam, k)
    checks["bridge_identity"] = bridge["identity"]
    checks["bridge_inclusion"] = bridge["inclusion"]
    return LiftReport(lam, target, pairs, checks, rim=Y, condition=cond)
