import random
from math import comb, factorial

import pytest

from ihara.errors import DimensionMismatch, ScaleGuard
from ihara.graph import bouquet, complete_graph, graph, path_graph, random_multigraph
from ihara.identities import (
    amitsur_sides,
    b_universe,
    common_origin_matrix,
    det_one_minus_b,
    involution_orbits,
    random_matrices,
    vertex_factor_matrix,
    verify_amitsur,
    verify_bass_from_8_1,
    verify_macmahon,
    verify_prop_8_1,
    verify_thm_1_1,
    verify_thm_4_1,
)
from ihara.poly import UniPoly, bareiss_det
from ihara.words import is_good, lyndon_monomials

from oracles import leibniz_det, witt


def distinct_lyndon_subsets(n, d):
    """Coefficient sum of prod over lengths of (1 + x^len)^witt(n, len), up to x^d."""
    poly = [1] + [0] * d
    for length in range(1, d + 1):
        new = [0] * (d + 1)
        for i, c in enumerate(poly):
            for k in range(witt(n, length) + 1):
                if i + k * length <= d:
                    new[i + k * length] += c * comb(witt(n, length), k)
        poly = new
    return sum(poly)


@pytest.mark.parametrize("n, d", [(1, 4), (1, 6), (2, 4), (2, 5), (3, 3), (3, 4)])
def test_series_chain(n, d):
    report = verify_thm_1_1(n, d)
    assert report.ok, report.checks
    assert verify_macmahon(n, d)


def test_series_chain_single_letter():
    report = verify_thm_1_1(1, 4)
    uni = report.det.universe
    b = uni.var("b(0,0)")
    assert report.lyndon_product == 1 - b == report.det
    assert report.vert_sum == sum((b**k for k in range(5)), uni.zero())


def test_det_matches_leibniz():
    uni = b_universe(3)
    rows = [[(1 if i == j else 0) - uni.var(f"b({i},{j})") for j in range(3)] for i in range(3)]
    assert det_one_minus_b(uni, 3) == leibniz_det(rows, uni.zero())


def test_scale_guards():
    with pytest.raises(ScaleGuard):
        verify_thm_1_1(4, 3)
    with pytest.raises(ScaleGuard):
        verify_thm_1_1(2, 7)
    with pytest.raises(ScaleGuard):
        verify_thm_4_1(2, 6)
    with pytest.raises(ScaleGuard):
        verify_prop_8_1(complete_graph(4), "symbolic")
    with pytest.raises(ScaleGuard):
        verify_amitsur(random_matrices(random.Random(0), 2, 5), 4)


@pytest.mark.parametrize(
    "n, d, monomials, good, orbits", [(1, 3, 2, 2, 0), (2, 4, 17, 5, 6), (3, 4, 82, 16, 33), (3, 5, 244, 16, 114)]
)
def test_involution_census(n, d, monomials, good, orbits):
    report = verify_thm_4_1(n, d)
    assert (report.monomials, report.good, report.orbits) == (monomials, good, orbits)
    assert monomials == distinct_lyndon_subsets(n, d)
    # good monomials are the permutations of subsets of the alphabet
    if d >= n:
        assert good == sum(comb(n, k) * factorial(k) for k in range(n + 1))
    assert report.pass_good_sum and report.pass_cancellation and report.ok


def test_good_sum_two_letters():
    report = verify_thm_4_1(2, 4)
    uni = report.good_sum.universe
    b = {(x, y): uni.var(f"b({x},{y})") for x in range(2) for y in range(2)}
    expected = 1 - b[0, 0] - b[1, 1] + b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]
    assert report.good_sum == expected


def test_orbits_cover_non_good_exactly():
    monos = lyndon_monomials(3, 5)
    orbits = involution_orbits(monos)
    covered = [pi for pair in orbits for pi in pair]
    assert len(covered) == len(set(covered))
    assert set(covered) == {pi for pi in monos if not is_good(pi)}


def test_amitsur_examples():
    a1, a2 = [[0, 1], [0, 0]], [[0, 0], [1, 0]]
    report = amitsur_sides([a1, a2], 6)
    assert report.ok and report.lhs == 1 - UniPoly.gen("t") ** 2
    rng = random.Random(5)
    a = random_matrices(rng, 1, 3)
    assert verify_amitsur(a, 7)
    with pytest.raises(DimensionMismatch):
        verify_amitsur([[[1, 0], [0, 1]], [[1]]], 3)


@pytest.mark.parametrize("k, dim", [(2, 2), (2, 3), (3, 3), (3, 2), (2, 4)])
def test_amitsur_random(k, dim):
    for seed in range(10):
        mats = random_matrices(random.Random(seed), k, dim)
        assert verify_amitsur(mats, 6)


def test_amitsur_needs_long_words():
    # commuting matrices still need every Lyndon word, not only the letters
    a1 = [[1, 0], [0, 2]]
    a2 = [[3, 0], [0, -1]]
    assert verify_amitsur([a1, a2], 6)
    assert not amitsur_sides([a1, a2], 6, max_word_len=1).ok
    fails = sum(
        not amitsur_sides(random_matrices(random.Random(s), 2, 3), 6, max_word_len=1).ok for s in range(20)
    )
    assert fails >= 18


PROP_GRAPHS = {
    "path2": path_graph(2),
    "loop": bouquet(1),
    "triangle": complete_graph(3),
    "double_edge": graph(2, [(0, 1), (0, 1)]),
    "lollipop": graph(2, [(0, 1), (1, 1)]),
}


@pytest.mark.parametrize("name", sorted(PROP_GRAPHS))
def test_common_origin_symbolic(name):
    report = verify_prop_8_1(PROP_GRAPHS[name], "symbolic")
    assert report.ok
    assert report.lhs == report.rhs


def test_common_origin_path_has_no_correction():
    report = verify_prop_8_1(path_graph(2), "symbolic")
    # Q = 0 everywhere, so det A is exactly the vertex determinant
    uni = report.lhs.universe
    u01, u10 = uni.var("u(0,1)"), uni.var("u(1,0)")
    assert report.lhs == 1 - u01 * u10


def test_common_origin_without_v():
    g = complete_graph(3)
    rng = random.Random(9)
    for _ in range(10):
        uv = {(i, j): rng.randint(-5, 5) for i in range(3) for j in range(3)}
        a = common_origin_matrix(g, lambda i, j: uv[i, j], lambda i: 0)
        assert bareiss_det(a) == bareiss_det(vertex_factor_matrix(g, lambda i, j: uv[i, j], lambda i: 0))


def test_common_origin_random(random_corpus):
    for g in random_corpus[:20]:
        assert verify_prop_8_1(g, "random_eval", 20, seed=1).ok


def test_common_origin_entries():
    g = complete_graph(3)
    a = common_origin_matrix(g, lambda i, j: f"u{i}{j}", lambda i: f"v{i}", one="1", zero="")
    # edge 0 is 0->1; its successors leave vertex 1 (ids 1 and 4); edge 2 also leaves 0
    assert a[0, 0] == "1" and a[0, 1] == "u01" and a[0, 4] == "u01" and a[0, 2] == "v0"
    assert a[0, 3] == "" and a[0, 5] == ""


@pytest.mark.parametrize("name", sorted(PROP_GRAPHS))
def test_specialization_named(name):
    report = verify_bass_from_8_1(PROP_GRAPHS[name])
    assert report.ok, report.checks
    assert report.det_reverse == UniPoly([1, 0, -1]) ** PROP_GRAPHS[name].c1


def test_specialization_corpus(random_corpus):
    for g in random_corpus:
        assert verify_bass_from_8_1(g).ok


def test_specialization_trees():
    for n in range(1, 6):
        assert verify_bass_from_8_1(path_graph(n)).ok


def test_common_origin_random_five_vertices():
    for s in range(20):
        g = random_multigraph(random.Random(500 + s), 5, 8)
        assert verify_prop_8_1(g, "random_eval", 20, seed=s).ok
