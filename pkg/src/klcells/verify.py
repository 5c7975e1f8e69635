"""
Exhaustive verification harness.

Each check runs on one unit, either a composition ``lam`` (``"comp"``) or a
partition shape whose recording tableaux are tested (``"shape"``).  Units are
visited smallest first, so the first failure recorded for a check is a
minimal counterexample.  A check returns ``None`` on success or a short
witness string.  Observations record facts that are reported but never
asserted, such as rim equality under the weaker lifting hypotheses.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cells import (brute_force_cell, cell_elements, enumerate_Z,
                    in_Z, in_Z_by_recording, induce_cell, induction_union,
                    oracle_limit, restrict_cell, restriction_union, rim_Y,
                    rim_diagrams, special_Z)
from .diagram import (act, canonical_diagram, column_composition, is_special,
                      is_standard, prefixes_of_w, principal_diagrams, row_fill,
                      w_of)
from .families import classify, family_rim
from .lifting import (Condition, bump_extend, connector, p_of, q_of, restriction_bridge,
                      star_extend_column, star_extend_node, star_extend_zero,
                      theta_k, theta_k_condition, theta_last, theta_star,
                      theta_upper_star, upper_star_coset_ok)
from .perm import (Permutation, compose, conjugate_by_longest, coset_cycle,
                   distinguished_reps, embed, format_row, inverse, is_prefix,
                   length,
                   parabolic_longest, reduced_word, word_product)
from .rs import (ORACLE_MAX_NODES, is_admissible, max_kpath, rs_inverse,
                 rs_pair, standard_tableaux, subsequence_type,
                 subsequence_type_oracle)
from .shapes import (compositions, conjugate, derived, dominates_leq,
                     partitions)

__all__ = ["CHECKS", "Check", "VerifyResult", "run_checks", "units"]

Unit = tuple[str, tuple[int, ...]]


@dataclass(frozen=True)
class Check:
    name: str
    kind: str
    fn: Callable
    max_n: int | None = None  # skip units above this size (cost guard)


def _lam_str(lam):
    return "(" + ",".join(map(str, lam)) + ")"


# ---------------------------------------------------------------- perm and shapes

def check_reduced_words(lam):
    for e in distinguished_reps(lam):
        word = reduced_word(e)
        if len(word) != length(e) or word_product(word, e.n) != e:
            return f"e={format_row(e)}"
    return None


def check_length_additive(lam):
    wj = parabolic_longest(lam)
    for e in distinguished_reps(lam):
        if length(compose(wj, e)) != length(wj) + length(e):
            return f"e={format_row(e)}"
    return None


def check_bump_conjugate(lam):
    d = derived(lam)
    for k in d.M_set:
        if conjugate(d.bump(k)) != conjugate(lam) + (1,):
            return f"k={k}"
    return None


# ---------------------------------------------------------------- diagrams and rs

def check_canonical_round_trip(lam):
    for e in distinguished_reps(lam):
        if w_of(canonical_diagram(e, lam)) != e:
            return f"e={format_row(e)}"
    return None


def check_greene(lam):
    for e in distinguished_reps(lam):
        D = canonical_diagram(e, lam)
        if D.n <= ORACLE_MAX_NODES and subsequence_type(D) != subsequence_type_oracle(D):
            return f"e={format_row(e)}"
    return None


def check_dominance_bounds(lam):
    lam_conj = conjugate(lam)
    for e in distinguished_reps(lam):
        D = canonical_diagram(e, lam)
        nu = subsequence_type(D)
        mu = tuple(sorted(column_composition(D), reverse=True))
        if not (dominates_leq(mu, nu) and dominates_leq(nu, lam_conj)):
            return f"e={format_row(e)} nu={nu}"
    return None


def check_witness_paths(lam):
    """For admissible ``D``, a maximal ``u``-path meets row ``i`` in ``min(u, lam_i)`` nodes."""
    for e in enumerate_Z(lam):
        D = canonical_diagram(e, lam)
        nu = subsequence_type(D)
        for u in range(1, len(nu) + 1):
            paths = max_kpath(D, u)
            nodes = [v for p in paths for v in p]
            if len(nodes) != len(set(nodes)) or len(nodes) != sum(nu[:u]) or len(paths) > u:
                return f"e={format_row(e)} u={u}: bad witness"
            for p in paths:
                if any(not (a < c and b <= d) for (a, b), (c, d) in zip(p, p[1:])):
                    return f"e={format_row(e)} u={u}: not a path"
            rows = Counter(a for a, _ in nodes)
            if any(rows[i] != min(u, part) for i, part in enumerate(lam, 1)):
                return f"e={format_row(e)} u={u}: row counts {dict(rows)}"
    return None


def check_prefix_tableaux(lam):
    """``t^D u`` standard exactly for the prefixes ``u`` of ``w_D``, on rim diagrams."""
    for D in rim_diagrams(lam):
        w = w_of(D)
        prefixes = prefixes_of_w(D)
        t = row_fill(D)
        for u in prefixes:
            if not is_prefix(u, w) or not is_standard(act(t, u)):
                return f"D={sorted(D.nodes)} u={format_row(u)}"
        if len(prefixes) != sum(1 for u in distinguished_reps(lam) if is_prefix(u, w)):
            return f"D={sorted(D.nodes)}: prefix count"
    return None


def check_special_tests(lam):
    """Both specialness criteria agree (``is_special`` raises otherwise)."""
    for e in distinguished_reps(lam):
        is_special(canonical_diagram(e, lam))
    return None


# ---------------------------------------------------------------- cells

def check_oracle_cell(lam):
    if sum(lam) > oracle_limit():
        return None
    if cell_elements(lam) != brute_force_cell(lam):
        diff = cell_elements(lam) ^ brute_force_cell(lam)
        return f"w={format_row(min(diff))}"
    return None


def check_membership_tests(lam):
    for e in distinguished_reps(lam):
        if in_Z(lam, e) != in_Z_by_recording(lam, e):
            return f"e={format_row(e)}"
    return None


def check_prefix_closure(lam):
    Z = enumerate_Z(lam)
    for e in Z:
        for j in range(1, e.n):
            if e.row.index(j) > e.row.index(j + 1):
                f = Permutation(tuple(j + 1 if v == j else j if v == j + 1 else v for v in e.row))
                if f not in Z:
                    return f"e={format_row(e)} drops s{j}"
    return None


def check_rim_maximal(lam):
    Z, Y = enumerate_Z(lam), rim_Y(lam)
    for e in Z:
        maximal = not any(f != e and is_prefix(e, f) for f in Z)
        if maximal != (e in Y):
            return f"e={format_row(e)}"
    return None


def check_special_rim(lam):
    """Special diagrams are admissible, so their ``w_D`` lie in ``Z``."""
    bad = special_Z(lam) - enumerate_Z(lam)
    if bad:
        return f"w={format_row(min(bad))}"
    return None


def check_admissible_diagrams(lam):
    """``Z \\ Y`` is the set of proper prefixes of ``w_E`` over admissible ``E`` with rows ``lam``."""
    n = sum(lam)
    tops = {w_of(E) for E in principal_diagrams(lam, max_cols=n) if is_admissible(E)}
    Z, Y = enumerate_Z(lam), rim_Y(lam)
    if not tops <= Z:
        return f"w_E={format_row(min(tops - Z))} outside Z"
    inner = {e for e in Z if any(e != w and is_prefix(e, w) for w in tops)}
    if inner != Z - Y:
        return f"e={format_row(min(inner ^ (Z - Y)))}"
    return None


def check_reverse_symmetry(lam):
    rev = lam[::-1]
    if rim_Y(rev) != {conjugate_by_longest(y) for y in rim_Y(lam)}:
        return "rim"
    if cell_elements(rev) != {conjugate_by_longest(w) for w in cell_elements(lam)}:
        return "cell"
    return None


# ---------------------------------------------------------------- lifting

def check_star_extensions(lam):
    """``w`` of the one-node extensions equals ``w_D x_{i+1}``, and ``p``/``q`` pick the same diagram."""
    n = sum(lam)
    for z in enumerate_Z(lam):
        D = canonical_diagram(z, lam)
        wz = embed(z, n + 1)
        if w_of(star_extend_zero(D)) != compose(wz, coset_cycle(1, n + 1)):
            return f"z={format_row(z)}: D'_0"
        for i in range(1, n + 1):
            if w_of(star_extend_node(D, i)) != compose(wz, coset_cycle(i + 1, n + 1)):
                return f"z={format_row(z)}: D'(u_{i})"
        p, q = p_of(D), q_of(D)
        if star_extend_node(D, p) != star_extend_column(D, q):
            return f"z={format_row(z)}: p={p} q={q}"
        if any(is_admissible(star_extend_node(D, i)) != (i >= p) for i in range(1, n + 1)):
            return f"z={format_row(z)}: admissible extensions not an upper interval"
    return None


def check_theta_star(lam):
    n1 = sum(lam) + 1
    target = derived(lam).lower_star
    Z, Zs, Ys = enumerate_Z(lam), enumerate_Z(target), rim_Y(target)
    image = {z: theta_star(lam, z) for z in Z}
    xs = [coset_cycle(i, n1) for i in range(1, n1 + 1)]
    for y in rim_Y(lam):
        if image[y] not in Ys:
            return f"y={format_row(y)}: image off the rim"
    missing = Ys - set(image.values())
    if missing:
        return f"rim element {format_row(min(missing))} not hit"
    for z, zt in image.items():
        conn = connector(z, zt)
        for x in xs:
            if compose(embed(z, n1), x) in Zs and not is_prefix(x, conn):
                return f"z={format_row(z)}: connector not maximal"
    return None


def check_theta_upper_star(lam):
    target = derived(lam).upper_star
    Y, Yt = rim_Y(lam), rim_Y(target)
    Zt = enumerate_Z(target)
    for z in enumerate_Z(lam):
        zt = theta_upper_star(lam, z)
        if zt not in Zt or not upper_star_coset_ok(z, zt):
            return f"z={format_row(z)}"
        if z in Y and zt not in Yt:
            return f"y={format_row(z)}: image off the rim"
    return None


def check_theta_k(lam):
    Y = rim_Y(lam)
    for k in sorted(derived(lam).M_set):
        bar = derived(lam).bump(k)
        cond = theta_k_condition(lam, k)
        Ybar = rim_Y(bar)
        image = {z: theta_k(lam, k, z) for z in enumerate_Z(lam)}
        for z, zb in image.items():
            if z not in Y and zb in Ybar:
                return f"k={k} z={format_row(z)}: non-rim element lands on the rim"
        rim_image = {image[y] for y in Y}
        if cond is not Condition.NONE and not rim_image <= Ybar:
            return f"k={k} ({cond.value}): rim image not contained"
        if cond is Condition.A:
            if rim_image != Ybar:
                return f"k={k}: rim image not equal under A"
            if {bump_extend(D, k) for D in rim_diagrams(lam)} != rim_diagrams(bar):
                return f"k={k}: diagram bijection fails"
    return None


def observe_theta_k(lam) -> Counter:
    """Tally equality of rim image and target rim per condition (never asserted)."""
    out = Counter()
    Y = rim_Y(lam)
    for k in derived(lam).M_set:
        cond = theta_k_condition(lam, k)
        equal = {theta_k(lam, k, y) for y in Y} == rim_Y(derived(lam).bump(k))
        out[f"theta_k {cond.value} {'equal' if equal else 'proper'}"] += 1
    return out


def check_theta_last(lam):
    r = len(lam)
    if r not in derived(lam).M_set:
        return None
    bar = derived(lam).bump(r)
    if {theta_last(lam, y) for y in rim_Y(lam)} != rim_Y(bar):
        return "dual map is not a rim bijection"
    return None


def check_restriction_bridge(lam):
    for k in sorted(derived(lam).M_set):
        b = restriction_bridge(lam, k)
        if not b["identity"]:
            return f"k={k}: identity"
        if not b["inclusion"]:
            return f"k={k}: inclusion"
    return None


# ---------------------------------------------------------------- families

def check_families(lam):
    if classify(lam) is None:
        return None
    fam = family_rim(lam)  # raises on disagreement with rim_Y
    if len(fam.rim) != fam.predicted_size:
        return f"{fam.family.value}: size {len(fam.rim)} != {fam.predicted_size}"
    return None


# ---------------------------------------------------------------- induction / restriction of cells

def check_rs_round_trip(shape):
    for P in standard_tableaux(shape):
        for Q in standard_tableaux(shape):
            w = rs_inverse(P, Q)
            if rs_pair(w) != (P, Q):
                return f"w={format_row(w)}"
            if rs_pair(inverse(w))[0] != Q:
                return f"w={format_row(w)}: Q(w) != P(w^-1)"
    return None


def check_induction(shape):
    for A in standard_tableaux(shape):
        left, right = induction_union(A)
        if left != right:
            return f"A={A.to_json()['rows']}"
        ordered = sorted(induce_cell(A).items())
        for (k, Ak), (k2, Ak2) in zip(ordered, ordered[1:]):
            if Ak2.shape == Ak.shape or not dominates_leq(Ak2.shape, Ak.shape):
                return f"A={A.to_json()['rows']}: corners {k} {k2}"
    return None


def check_restriction(shape):
    if sum(shape) < 2:
        return None
    for A in standard_tableaux(shape):
        cell, pieces = restriction_union(A)
        if sum(map(len, pieces)) != len(cell) or frozenset().union(*pieces) != cell:
            return f"A={A.to_json()['rows']}"
        parts = restrict_cell(A)
        for (k, d, Ak), (k2, d2, Ak2) in zip(parts, parts[1:]):
            if Ak.shape == Ak2.shape or not dominates_leq(Ak.shape, Ak2.shape):
                return f"A={A.to_json()['rows']}: shapes at {k} {k2}"
            # s_i...s_n is a right factor of s_i'...s_n for i' <= i
            if not is_prefix(inverse(d), inverse(d2)):
                return f"A={A.to_json()['rows']}: d_k chain at {k} {k2}"
    return None


CHECKS: list[Check] = [
    Check("reduced_word_replay", "comp", check_reduced_words),
    Check("length_additivity", "comp", check_length_additive),
    Check("bump_conjugate", "comp", check_bump_conjugate),
    Check("canonical_round_trip", "comp", check_canonical_round_trip),
    Check("special_tests_agree", "comp", check_special_tests),
    Check("greene_consistency", "comp", check_greene),
    Check("dominance_bounds", "comp", check_dominance_bounds),
    Check("witness_paths", "comp", check_witness_paths),
    Check("prefix_tableaux", "comp", check_prefix_tableaux),
    Check("oracle_cell", "comp", check_oracle_cell),
    Check("membership_tests", "comp", check_membership_tests),
    Check("prefix_closure", "comp", check_prefix_closure),
    Check("rim_maximal", "comp", check_rim_maximal),
    Check("special_in_Z", "comp", check_special_rim),
    Check("admissible_diagrams", "comp", check_admissible_diagrams, max_n=6),
    Check("reverse_symmetry", "comp", check_reverse_symmetry),
    Check("star_extensions", "comp", check_star_extensions),
    Check("theta_star", "comp", check_theta_star),
    Check("theta_upper_star", "comp", check_theta_upper_star),
    Check("theta_k", "comp", check_theta_k),
    Check("theta_last", "comp", check_theta_last),
    Check("restriction_bridge", "comp", check_restriction_bridge),
    Check("families", "comp", check_families),
    Check("rs_round_trip", "shape", check_rs_round_trip),
    Check("cell_induction", "shape", check_induction),
    Check("cell_restriction", "shape", check_restriction),
]


def units(n: int) -> list[Unit]:
    out: list[Unit] = []
    for m in range(1, n + 1):
        out += [("comp", lam) for lam in sorted(compositions(m))]
        out += [("shape", lam) for lam in sorted(partitions(m))]
    return out


@dataclass
class VerifyResult:
    n: int
    passed: Counter = field(default_factory=Counter)
    failures: dict[str, tuple[Unit, str]] = field(default_factory=dict)
    observations: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        lines = []
        for check in CHECKS:
            if check.name in self.failures:
                (kind, lam), witness = self.failures[check.name]
                lines.append(f"FAIL {check.name}: smallest counterexample {_lam_str(lam)} {witness}")
            else:
                lines.append(f"ok   {check.name} ({self.passed[check.name]} units)")
        for key, count in sorted(self.observations.items()):
            lines.append(f"note {key}: {count}")
        lines.append("all checks passed" if self.ok else f"{len(self.failures)} check(s) failed")
        return "\n".join(lines)


def _run_unit(unit: Unit, names: tuple[str, ...] | None = None):
    kind, lam = unit
    results = []
    for check in CHECKS:
        if check.kind != kind or (names and check.name not in names):
            continue
        if check.max_n is not None and sum(lam) > check.max_n:
            continue
        try:
            witness = check.fn(lam)
        except Exception as exc:  # a raised invariant is a failure, not a crash
            witness = f"raised {type(exc).__name__}: {exc}"
        results.append((check.name, witness))
    obs = observe_theta_k(lam) if kind == "comp" and (not names or "theta_k" in names) else Counter()
    return unit, results, obs


def run_checks(n: int, parallel: bool = False, names: Iterable[str] | None = None) -> VerifyResult:
    """Run every check on every unit of size at most ``n``; the result does not depend on ``parallel``."""
    names = tuple(names) if names else None
    todo = units(n)
    if parallel:
        with ProcessPoolExecutor(max_workers=os.cpu_count()) as pool:
            outcomes = list(pool.map(_run_unit, todo, [names] * len(todo), chunksize=4))
    else:
        outcomes = [_run_unit(u, names) for u in todo]
    res = VerifyResult(n)
    for unit, results, obs in outcomes:  # already in unit order
        res.observations.update(obs)
        for name, witness in results:
            if witness is None:
                res.passed[name] += 1
            elif name not in res.failures:
                res.failures[name] = (unit, witness)
    return res
