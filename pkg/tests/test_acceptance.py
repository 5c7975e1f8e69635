"""
Acceptance suite.  Every test carries a ``criterion`` marker; the conftest
prints one PASS/FAIL line per criterion at the end of the run.  All
comparisons are exact set or row-form equality.
"""

import random

import pytest

from klcells.cells import (brute_force_cell, cell_elements, in_Z,
                           in_Z_by_recording, rim_diagrams, rim_Y, special_rim)
from klcells.diagram import (act, canonical_diagram, column_fill, is_standard,
                             normalize_principal, parse_diagram, row_fill, w_of)
from klcells.families import (rim_hook, rim_partition, rim_reversed_partition,
                              rim_two_ones_two)
from klcells.lifting import (bump_extend, bump_prefix, connector, theta_k,
                             theta_star)
from klcells.perm import (Permutation, compose, distinguished_reps, embed,
                          inverse, is_prefix, parabolic_longest,
                          parse_permutation, reduced_word, word_product)
from klcells.rs import (rs_inverse, rs_pair, subsequence_type,
                        subsequence_type_oracle, is_admissible)
from klcells.shapes import compositions, derived, is_partition
from klcells.verify import run_checks


def P(*rows):
    return {Permutation(tuple(r)) for r in rows}


def cycles(n, *texts):
    return {parse_permutation(t, n=n) for t in texts}


def diagrams(*texts):
    return {parse_diagram(t) for t in texts}


# ---------------------------------------------------------------- criterion 1

c1 = pytest.mark.criterion(1)


@c1
def test_rim_1212_and_lower_star():
    assert rim_Y((1, 2, 1, 2)) == P([3, 1, 4, 5, 2, 6], [1, 2, 5, 3, 4, 6])
    assert rim_Y((1, 2, 1, 2, 1)) == P([1, 2, 6, 3, 4, 7, 5], [3, 1, 4, 5, 2, 6, 7],
                                       [2, 1, 3, 4, 5, 7, 6])


@c1
def test_rim_1212_column_tableaux():
    # column fillings of the rim diagrams, rows separated by "/"
    expected = {
        (1, 2, 1, 2): {".3/14/.5/26", "1/25/3/46"},
        (1, 2, 1, 2, 1): {"1/26/3/47/5", ".3/14/.5/26/.7", ".2/13/.4/.57/.6"},
    }
    for lam, tableaux in expected.items():
        got = set()
        for D in rim_diagrams(lam):
            t = column_fill(D).entries
            got.add("/".join("".join(str(t[(i, j)]) if (i, j) in D.nodes else "."
                                     for j in range(1, max(b for a, b in D.nodes if a == i) + 1))
                             for i in range(1, D.r + 1)))
        assert got == tableaux


@c1
def test_rim_1221():
    lam = (1, 2, 2, 1)
    y1, y2, y3 = [1, 2, 5, 3, 6, 4], [3, 1, 4, 2, 5, 6], [2, 1, 3, 4, 6, 5]
    assert rim_Y(lam) == P(y1, y2, y3)
    assert special_rim(lam) == P(y1, y2)
    assert rim_diagrams(lam) == diagrams("x/xx/xx/x", ".x/xx/xx/.x", ".x/xx/.xx/.x")


@c1
def test_rims_1321_and_1231():
    Y2 = P([1, 2, 5, 7, 3, 6, 4], [3, 1, 4, 7, 2, 5, 6], [2, 1, 3, 7, 4, 6, 5],
           [4, 1, 3, 5, 2, 6, 7], [3, 1, 2, 4, 5, 7, 6])
    Y3 = P([4, 2, 5, 1, 3, 6, 7], [2, 3, 6, 1, 4, 7, 5], [3, 2, 4, 1, 5, 7, 6],
           [1, 2, 6, 3, 5, 7, 4], [2, 1, 3, 4, 6, 7, 5])
    assert rim_Y((1, 3, 2, 1)) == Y2 and len(Y2) == 5
    assert rim_Y((1, 2, 3, 1)) == Y3 and len(Y3) == 5
    assert special_rim((1, 3, 2, 1)) == P([1, 2, 5, 7, 3, 6, 4], [3, 1, 4, 7, 2, 5, 6], [4, 1, 3, 5, 2, 6, 7])
    assert special_rim((1, 2, 3, 1)) == P([4, 2, 5, 1, 3, 6, 7], [2, 3, 6, 1, 4, 7, 5], [1, 2, 6, 3, 5, 7, 4])
    assert rim_diagrams((1, 3, 2, 1)) == diagrams(
        "x/xxx/xx/x", ".x/xxx/xx/.x", ".x/xx.x/.xx/.x", "..x/xxx/x.x/..x", "..x/xxx/..xx/..x")
    assert rim_diagrams((1, 2, 3, 1)) == diagrams(
        "..x/.xx/xxx/..x", ".x/.xx/xxx/.x", "..x/.xx/x.xx/..x", "x/x.x/xxx/x", ".x/xx/.xxx/.x")


@c1
def test_rims_2112_3112_2113():
    lam = (2, 1, 1, 2)
    assert rim_Y(lam) == P([1, 5, 2, 3, 4, 6], [1, 3, 4, 5, 2, 6], [1, 4, 2, 5, 3, 6])
    assert special_rim(lam) == P([1, 5, 2, 3, 4, 6], [1, 3, 4, 5, 2, 6])
    assert rim_Y((3, 1, 1, 2)) == P([1, 5, 7, 2, 3, 4, 6], [1, 3, 7, 4, 5, 2, 6], [1, 4, 7, 2, 5, 3, 6])
    assert special_rim((3, 1, 1, 2)) == P([1, 5, 7, 2, 3, 4, 6], [1, 3, 7, 4, 5, 2, 6])
    assert rim_Y((2, 1, 1, 3)) == P([2, 4, 5, 6, 1, 3, 7], [2, 5, 3, 6, 1, 4, 7], [2, 6, 3, 4, 1, 5, 7])
    assert special_rim((2, 1, 1, 3)) == P([2, 4, 5, 6, 1, 3, 7], [2, 6, 3, 4, 1, 5, 7])

    E = diagrams("xx/x/x/xx", "xx/.x/.x/xx", "xx/x/.x/xx")
    assert rim_diagrams(lam) == E
    assert rim_diagrams((3, 1, 1, 2)) == diagrams("xxx/x/x/xx", "xxx/.x/.x/xx", "xxx/x/.x/xx")
    assert rim_diagrams((2, 1, 1, 3)) == diagrams(".xx/..x/..x/xxx", ".xx/.x/..x/xxx", ".xx/.x/.x/xxx")
    # k = 1: the lift is a bijection of rims and of rim diagrams
    assert {theta_k(lam, 1, y) for y in rim_Y(lam)} == rim_Y((3, 1, 1, 2))
    assert {bump_extend(D, 1) for D in E} == rim_diagrams((3, 1, 1, 2))


@c1
def test_lower_star_lift_215():
    lam = (2, 1, 5)
    y1 = parse_permutation("(1,4)(2,6,3,7,5)", n=8)
    y2 = parse_permutation("(1,4)(2,7,6,3,5)", n=8)
    assert rim_Y(lam) == {y1, y2}
    assert theta_star(lam, y1) == embed(y1, 9)
    assert connector(y1, theta_star(lam, y1)) == Permutation(tuple(range(1, 10)))
    assert theta_star(lam, y2) == compose(embed(y2, 9), word_product([8, 7], 9))
    assert word_product([8, 7], 9) == parse_permutation("(7,8,9)", n=9)
    Ystar = cycles(9, "(1,4)(2,6,3,7,5)", "(1,4)(2,8,9,7,6,3,5)", "(1,3,4)(2,8,9,6,5)",
                   "(1,2,8,9,5,4)", "(2,8,9,4,3)")
    assert rim_Y((2, 1, 5, 1)) == Ystar and len(Ystar) == 5


@c1
def test_lower_star_lift_1212():
    lam = (1, 2, 1, 2)
    assert theta_star(lam, Permutation((3, 1, 4, 5, 2, 6))) == Permutation((3, 1, 4, 5, 2, 6, 7))
    assert theta_star(lam, Permutation((1, 2, 5, 3, 4, 6))) == Permutation((1, 2, 6, 3, 4, 7, 5))


@c1
def test_bump_lifts_2122():
    lam = (2, 1, 2, 2)
    assert derived(lam).M_set == {1, 3, 4}
    Y = rim_Y(lam)
    assert Y == cycles(7, "(2,4)(3,5,6)", "(2,5,6,4,3)")

    d = bump_prefix(lam, 1)
    assert d == parse_permutation("(8,7,6,5,4,3)", n=8)
    Ybar = rim_Y((3, 1, 2, 2))
    assert Ybar == cycles(8, "(2,4,5)(3,8,7)", "(2,5,3,8,7,4)")
    assert all(is_prefix(d, y) for y in Ybar)
    assert {compose(inverse(d), y) for y in Ybar} == {embed(y, 8) for y in Y}

    d = bump_prefix(lam, 3)
    assert d == parse_permutation("(8,7,6)", n=8)
    Ybar = rim_Y((2, 1, 3, 2))
    assert Ybar == cycles(8, "(1,2,5,3,6,7,4)", "(2,5,4)(3,6,7)", "(1,2,6,7,5,4)",
                          "(2,4)(3,5,6,8,7)", "(2,5,6,8,7,4,3)", "(2,6,7,4,3)")
    image = {theta_k(lam, 3, y) for y in Y}
    assert image == cycles(8, "(2,4)(3,5,6,8,7)", "(2,5,6,8,7,4,3)")
    assert {y for y in Ybar if is_prefix(d, y)} == image

    Ybar = rim_Y((2, 1, 2, 3))
    assert Ybar == cycles(8, "(1,2,5,7,4,3,6)", "(1,2,6)(5,7)")
    assert not {theta_k(lam, 4, y) for y in Y} & Ybar


@c1
def test_diagram_examples_3321():
    lam = (3, 3, 2, 1)
    d = Permutation((3, 4, 7, 2, 6, 8, 1, 9, 5))
    D = canonical_diagram(d, lam)
    assert D.nodes == {(1, 3), (1, 4), (1, 6), (2, 2), (2, 5), (2, 6), (3, 1), (3, 6), (4, 4)}
    E = parse_diagram("..xx..x./.x...x.x/x......x/....x...")
    assert w_of(D) == w_of(E) == d
    e1 = Permutation((2, 3, 4, 1, 6, 7, 5, 8, 9))
    e2 = Permutation((2, 5, 6, 1, 4, 7, 3, 8, 9))
    assert is_standard(act(row_fill(D), e1)) and is_prefix(e1, d)
    assert not is_standard(act(row_fill(D), e2)) and not is_prefix(e2, d)
    assert compose(parabolic_longest(lam), d) == Permutation((7, 4, 3, 8, 6, 2, 9, 1, 5))
    assert compose(parabolic_longest(lam), e1) == Permutation((4, 3, 2, 7, 6, 1, 8, 5, 9))


@c1
def test_inadmissible_three_row_diagram():
    D = parse_diagram(".xxx/xx../..x.")
    assert subsequence_type(D) == (3, 1, 1, 1)
    assert subsequence_type_oracle(D) == (3, 1, 1, 1)
    assert not is_admissible(D)


# ---------------------------------------------------------------- criterion 2

SMALL = [lam for n in range(1, 7) for lam in compositions(n)]


@pytest.mark.criterion(2)
@pytest.mark.parametrize("lam", SMALL, ids=lambda lam: ",".join(map(str, lam)))
def test_cell_matches_brute_force(lam):
    assert cell_elements(lam) == brute_force_cell(lam)
    for e in distinguished_reps(lam):
        assert in_Z(lam, e) == in_Z_by_recording(lam, e)


# ---------------------------------------------------------------- criterion 3

@pytest.mark.criterion(3)
def test_subsequence_type_on_canonical_diagrams():
    mismatches = []
    for lam in SMALL:
        for e in distinguished_reps(lam):
            D = canonical_diagram(e, lam)
            if subsequence_type(D) != subsequence_type_oracle(D):
                mismatches.append((lam, e))
    assert mismatches == []


def random_diagram(rng, max_nodes=10):
    size = rng.randint(1, max_nodes)
    rows, cols = rng.randint(1, size), rng.randint(1, size)
    cells = [(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)]
    return normalize_principal(rng.sample(cells, min(size, len(cells))))


@pytest.mark.criterion(3)
def test_subsequence_type_on_random_diagrams():
    rng = random.Random(20241017)
    mismatches = []
    for _ in range(500):
        D = random_diagram(rng)
        if subsequence_type(D) != subsequence_type_oracle(D):
            mismatches.append(sorted(D.nodes))
    assert mismatches == []


# ---------------------------------------------------------------- criterion 4

@pytest.mark.criterion(4)
def test_theorem_harness_n6():
    res = run_checks(6)
    assert res.ok, res.summary()


# ---------------------------------------------------------------- criterion 5

@pytest.mark.criterion(5)
def test_hook_rims():
    count = 0
    for n in range(4, 9):
        for r in range(3, n):
            m = n - r + 1
            for k in range(2, r):
                lam = (1,) * (k - 1) + (m,) + (1,) * (r - k)
                fam = rim_hook(lam)
                assert len(fam.rim) == m == fam.predicted_size
                assert fam.rim == rim_Y(lam)
                count += 1
    assert count > 0


@pytest.mark.criterion(5)
@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_two_ones_two(r):
    fam = rim_two_ones_two(r)
    lam = (2,) + (1,) * (r - 2) + (2,)
    assert fam.rim == rim_Y(lam)
    assert len(fam.rim) == r - 1


@pytest.mark.criterion(5)
def test_partition_and_reversed_singletons():
    for n in range(1, 9):
        for lam in compositions(n):
            if is_partition(lam):
                assert rim_partition(lam).rim == rim_Y(lam) and len(rim_Y(lam)) == 1
            if is_partition(lam[::-1]):
                assert rim_reversed_partition(lam).rim == rim_Y(lam) and len(rim_Y(lam)) == 1


# ---------------------------------------------------------------- criterion 6

@pytest.mark.criterion(6)
def test_rs_round_trip_s8():
    rng = random.Random(8)
    for _ in range(1000):
        row = list(range(1, 9))
        rng.shuffle(row)
        w = Permutation(tuple(row))
        assert rs_inverse(*rs_pair(w)) == w


@pytest.mark.criterion(6)
def test_reduced_word_replay():
    rng = random.Random(6)
    for _ in range(500):
        n = rng.randint(1, 9)
        row = list(range(1, n + 1))
        rng.shuffle(row)
        w = Permutation(tuple(row))
        assert word_product(reduced_word(w), n) == w


@pytest.mark.criterion(6)
def test_canonical_diagram_round_trip():
    for lam in SMALL:
        for e in distinguished_reps(lam):
            assert w_of(canonical_diagram(e, lam)) == e
