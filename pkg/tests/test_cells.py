import random
from collections import Counter
from math import factorial

import pytest

from klcells.cells import (brute_force_cell, cell_elements, cell_of,
                           cell_reduced_words, cell_report, enumerate_Z, in_Z,
                           induce_cell, induction_union, restrict_cell,
                           restriction_union, rim_diagrams, rim_Y, special_rim,
                           special_Z)
from klcells.diagram import w_of, prefixes_of_w
from klcells.perm import (Permutation, compose, identity,
                          inverse, is_prefix, longest_element, parabolic_longest,
                          word_product)
from klcells.rs import StandardTableau, recording_tableau, standard_tableaux
from klcells.shapes import compositions, conjugate


def T(*rows):
    return StandardTableau(tuple(tuple(r) for r in rows))


@pytest.mark.parametrize("n", range(1, 7))
def test_extreme_compositions(n):
    assert enumerate_Z((n,)) == {identity(n)}
    assert cell_elements((n,)) == {longest_element(n)}
    ones = (1,) * n
    assert enumerate_Z(ones) == {identity(n)}
    assert cell_elements(ones) == {identity(n)}


def test_Z_is_the_prefix_closure_of_the_rim():
    lam = (1, 2, 1, 2)
    closure = set().union(*(prefixes_of_w(D) for D in rim_diagrams(lam)))
    assert enumerate_Z(lam) == closure
    assert rim_Y(lam) == {y for y in closure if not any(y != z and is_prefix(y, z) for z in closure)}


def test_in_Z_edge_cases():
    assert not in_Z((2, 1), Permutation((2, 1, 3)))
    assert in_Z((2, 1), identity(3))
    with pytest.raises(ValueError):
        in_Z((2, 2), identity(3))


@pytest.mark.parametrize("lam", [(1, 2, 1), (2, 1, 2), (1, 2, 2, 1), (1, 1, 2)])
def test_special_sets(lam):
    assert special_Z(lam) <= enumerate_Z(lam)
    assert special_rim(lam) == rim_Y(lam) & special_Z(lam)
    # one special diagram per distinct rearrangement of the conjugate shape
    arrangements = factorial(len(conjugate(lam)))
    for mult in Counter(conjugate(lam)).values():
        arrangements //= factorial(mult)
    assert len(special_Z(lam)) == arrangements


def test_brute_force_examples():
    assert brute_force_cell((1, 1)) == {identity(2)}
    assert brute_force_cell((2,)) == {Permutation((2, 1))}
    assert brute_force_cell((2, 1)) == {Permutation((2, 1, 3)), Permutation((3, 1, 2))}


def test_oracle_limit_env(monkeypatch):
    monkeypatch.setenv("KLCELLS_ORACLE_LIMIT", "4")
    with pytest.raises(ValueError):
        brute_force_cell((3, 2))
    assert brute_force_cell((2, 2)) == cell_elements((2, 2))


def test_cell_size_matches_tableau_count():
    for lam in compositions(6):
        assert len(cell_elements(lam)) == len(list(standard_tableaux(conjugate(lam))))


def test_cell_reduced_words_replay():
    lam = (2, 1, 2)
    words = cell_reduced_words(lam)
    assert set(words) == cell_elements(lam)
    for w, word in words.items():
        assert word_product(word, w.n) == w


def test_sampled_n7_against_brute_force():
    rng = random.Random(7)
    for lam in rng.sample(list(compositions(7)), 12):
        assert cell_elements(lam) == brute_force_cell(lam)


def test_induce_single_row():
    kids = induce_cell(T([1, 2]))
    assert kids == {(1, 3): T([1, 2, 3]), (2, 1): T([1, 2], [3])}
    left, right = induction_union(T([1, 2]))
    assert left == right


@pytest.mark.parametrize("lam", [(1, 2, 1, 2), (2, 2, 1), (1, 3, 2)])
def test_induction_matches_brute_force(lam):
    A = recording_tableau(parabolic_longest(lam))
    left, right = induction_union(A)
    assert left == right
    n = A.n + 1
    from klcells.cells import _recording_index
    index = _recording_index(n)
    assert right == frozenset().union(*(index[Ak] for Ak in induce_cell(A).values()))


def test_restrict_single_column():
    A = T([1], [2], [3])
    pieces = restrict_cell(A)
    assert len(pieces) == 1
    k, d, Ak = pieces[0]
    assert k == (3, 1) and Ak == T([1], [2])
    whole, parts = restriction_union(A)
    assert whole == parts[0] == {longest_element(3)}


def test_restriction_of_2132():
    A = recording_tableau(parabolic_longest((2, 1, 3, 2)))
    target = recording_tableau(parabolic_longest((2, 1, 2, 2)))
    found = [(k, d) for k, d, Ak in restrict_cell(A) if Ak == target]
    assert found == [((3, 1), Permutation((1, 2, 3, 8, 4, 5, 6, 7)))]
    d = found[0][1]
    assert d == word_product([4, 5, 6, 7], 8)
    assert inverse(d) == Permutation((1, 2, 3, 5, 6, 7, 8, 4))


@pytest.mark.parametrize("lam", [(2, 1, 3, 2), (1, 2, 1, 2), (3, 1, 2)])
def test_restriction_is_a_disjoint_union(lam):
    A = recording_tableau(parabolic_longest(lam))
    whole, parts = restriction_union(A)
    assert sum(len(p) for p in parts) == len(whole)
    assert frozenset().union(*parts) == whole


def test_cell_of_matches_recording():
    A = T([1, 3], [2, 4])
    assert all(recording_tableau(w) == A for w in cell_of(A))
    assert len(cell_of(A)) == 2


def test_report_json():
    rep = cell_report((1, 2, 1, 2))
    out = rep.to_dict()
    assert out["lambda"] == [1, 2, 1, 2]
    assert out["Y"] == [[1, 2, 5, 3, 4, 6], [3, 1, 4, 5, 2, 6]]
    assert out["E"] == [{"nodes": [list(u) for u in D.ordered]} for D in rep.E]
    assert [w_of(D) for D in rep.E] == rep.Y
    assert len(out["cell"]) == len(cell_elements((1, 2, 1, 2)))
    w = compose(parabolic_longest((1, 2, 1, 2)), rep.Y[0])
    assert out["reduced_words"]["[" + ",".join(map(str, w.row)) + "]"]
    assert set(rep.to_dict(keys=("Y",))) == {"lambda", "Y", "reduced_words"}
