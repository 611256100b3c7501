"""Pattern scoring: quasi-clique test, contrast, interestingness, redundancy."""
import random
from fractions import Fraction

import pytest

from cqcmine import (
    DISQUALIFIED,
    MiningParams,
    Pattern,
    ResultSet,
    contrast,
    interestingness,
    is_cqc,
    is_delta_quasi_clique,
    is_redundant,
    load_layer_pair,
    pattern_json_dict,
)
from conftest import ids, random_pair

SIZE3 = MiningParams(min_size=3)


# --- parameters ------------------------------------------------------------


def test_default_parameters():
    params = MiningParams()
    assert params.delta == Fraction(1, 2)
    assert params.delta_prime == 0
    assert params.r == Fraction(1, 10)
    assert params.min_size == 4
    assert params.base_gamma == Fraction(1, 2)


def test_parameters_accept_decimal_strings():
    params = MiningParams(delta=0.6, r="0.25")
    assert params.delta == Fraction(3, 5)
    assert params.r == Fraction(1, 4)


@pytest.mark.parametrize(
    "bad",
    [
        dict(delta=0),
        dict(delta=1.5),
        dict(delta_prime=1),
        dict(r=0),
        dict(min_size=1),
        dict(base_gamma=-0.1),
        dict(base_gamma=2),
    ],
)
def test_parameter_validation(bad):
    with pytest.raises(ValueError):
        MiningParams(**bad)


# --- quasi-clique membership -----------------------------------------------


def test_complete_square_is_quasi_clique_at_delta_one(contrast_pair):
    assert is_delta_quasi_clique(contrast_pair, ids(contrast_pair, "ABCD"), 2, 1)


def test_pendant_vertex_breaks_membership(contrast_pair):
    five = ids(contrast_pair, "ABCDE")
    # E touches only A, so its degree 1 misses the required ceil(0.5 * 4) = 2
    assert not is_delta_quasi_clique(contrast_pair, five, 2, Fraction(1, 2))


def test_connected_pair_is_quasi_clique(contrast_pair):
    assert is_delta_quasi_clique(contrast_pair, ids(contrast_pair, "AB"), 1, 1)


def test_quasi_clique_requires_two_vertices(contrast_pair):
    with pytest.raises(ValueError):
        is_delta_quasi_clique(contrast_pair, ids(contrast_pair, "A"), 1, 1)


# --- contrast and interestingness -------------------------------------------


def test_contrast_of_square(contrast_pair):
    assert contrast(contrast_pair, ids(contrast_pair, "ABCD")) == Fraction(5, 6)


def test_identical_layers_have_zero_contrast():
    rng = random.Random(3)
    edges = [(f"x{i}", f"x{j}") for i in range(7) for j in range(i + 1, 7) if rng.random() < 0.5]
    pair = load_layer_pair(edges, edges)
    for _ in range(20):
        members = frozenset(rng.sample(range(pair.n), rng.randint(2, pair.n)))
        assert contrast(pair, members) == 0


def test_square_is_contrasting_quasi_clique(contrast_pair):
    assert is_cqc(contrast_pair, ids(contrast_pair, "ABCD"), MiningParams(delta=1))


def test_five_set_is_dense_in_neither_layer(contrast_pair):
    five = ids(contrast_pair, "ABCDE")
    for delta in (Fraction(1, 2), Fraction(3, 5), 1):
        assert not is_cqc(contrast_pair, five, MiningParams(delta=delta))


def test_identical_layers_admit_no_pattern():
    edges = [("a", "b"), ("b", "c"), ("a", "c")]
    pair = load_layer_pair(edges, edges)
    assert not is_cqc(pair, frozenset(range(3)), MiningParams(min_size=3))


def test_interestingness_worked_values(redundant_pair):
    assert interestingness(redundant_pair, ids(redundant_pair, "ABCD"), SIZE3) == 2
    assert interestingness(redundant_pair, ids(redundant_pair, "ACD"), SIZE3) == 3
    assert interestingness(redundant_pair, ids(redundant_pair, "BDEF"), SIZE3) == Fraction(8, 3)


def test_small_sets_are_disqualified(redundant_pair):
    # same triangle, but the default size floor is 4
    assert interestingness(redundant_pair, ids(redundant_pair, "ACD"), MiningParams()) == DISQUALIFIED


def test_sparse_sets_are_disqualified(contrast_pair):
    # {A..E} never reaches density 1/2 in either layer
    assert interestingness(contrast_pair, ids(contrast_pair, "ABCDE"), MiningParams()) == DISQUALIFIED
    assert interestingness(contrast_pair, ids(contrast_pair, "ABCD"), MiningParams()) == Fraction(10, 3)


def test_interestingness_identity_on_random_sets():
    """Size times contrast equals twice the edge difference over size minus one."""
    rng = random.Random(17)
    params = MiningParams(min_size=2, base_gamma=0)
    for _ in range(120):
        pair = random_pair(rng, 8, rng.uniform(0.2, 0.7), rng.uniform(0.2, 0.7))
        members = frozenset(rng.sample(range(8), rng.randint(2, 8)))
        score = interestingness(pair, members, params)
        e1 = pair.edges_within(members, 1)
        e2 = pair.edges_within(members, 2)
        assert score == Fraction(2 * abs(e1 - e2), len(members) - 1)


def test_pattern_caches_match_recomputation():
    rng = random.Random(23)
    for _ in range(40):
        pair = random_pair(rng, 9, 0.5, 0.4)
        members = frozenset(rng.sample(range(9), rng.randint(2, 9)))
        pat = Pattern.from_vertices(pair, members, SIZE3)
        assert pat.gamma1 == pair.gamma_density(members, 1)
        assert pat.gamma2 == pair.gamma_density(members, 2)
        assert pat.alpha1 == pair.alpha_density(members, 1)
        assert pat.alpha2 == pair.alpha_density(members, 2)
        assert pat.contrast == abs(pat.alpha1 - pat.alpha2)
        assert pat.e1 == pair.edges_within(members, 1)
        assert pat.e2 == pair.edges_within(members, 2)
        assert pat.key == tuple(sorted(members))


def test_dense_layer_tag(contrast_pair, redundant_pair):
    square = Pattern.from_vertices(contrast_pair, ids(contrast_pair, "ABCD"), MiningParams())
    assert square.dense_layer == 2
    triangle = Pattern.from_vertices(redundant_pair, ids(redundant_pair, "ACD"), SIZE3)
    assert triangle.dense_layer == 1


# --- redundancy ------------------------------------------------------------


def _fig_patterns(pair):
    o = Pattern.from_vertices(pair, ids(pair, "ABCD"), SIZE3)
    p = Pattern.from_vertices(pair, ids(pair, "ACD"), SIZE3)
    q = Pattern.from_vertices(pair, ids(pair, "BDEF"), SIZE3)
    return o, p, q


def test_pattern_never_redundant_to_itself(redundant_pair):
    o, _, _ = _fig_patterns(redundant_pair)
    assert not is_redundant(o, o, Fraction(1, 10))


def test_superset_redundant_to_stronger_triangle(redundant_pair):
    o, p, _ = _fig_patterns(redundant_pair)
    assert is_redundant(o, p, Fraction(1, 10))
    # but never the other way around: p scores higher
    assert not is_redundant(p, o, Fraction(1, 10))


def test_redundancy_threshold_is_inclusive(redundant_pair):
    # the shared fraction works out to (3/5 + 0/2) / 2 = 3/10 exactly
    o, p, _ = _fig_patterns(redundant_pair)
    assert is_redundant(o, p, Fraction(3, 10))
    assert not is_redundant(o, p, Fraction(31, 100))


def test_disjoint_edges_are_never_redundant(redundant_pair):
    o, p, q = _fig_patterns(redundant_pair)
    for other in (o, p):
        assert not is_redundant(q, other, Fraction(1, 10))
        assert not is_redundant(other, q, Fraction(1, 10))


def test_empty_layer_counts_as_fully_covered():
    # both patterns have no layer 2 edges at all; that side contributes
    # fraction 1, so even r = 1 is reachable when layer 1 is fully shared
    pair = load_layer_pair(
        [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")], []
    )
    whole = Pattern.from_vertices(pair, frozenset(range(4)), SIZE3)
    triangle = Pattern.from_vertices(pair, ids(pair, "abc"), SIZE3)
    assert is_redundant(triangle, whole, 1)


def test_equal_interestingness_can_be_mutually_redundant():
    pair = load_layer_pair(
        [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d")], []
    )
    left = Pattern.from_vertices(pair, ids(pair, "abc"), SIZE3)
    right = Pattern.from_vertices(pair, ids(pair, "bcd"), SIZE3)
    assert left.interestingness == right.interestingness == 3
    assert is_redundant(left, right, Fraction(1, 10))
    assert is_redundant(right, left, Fraction(1, 10))
    # first-come wins
    result = ResultSet(Fraction(1, 10))
    assert result.try_accept(left)
    assert not result.try_accept(right)
    assert list(result) == [left]


def test_try_accept_greedy_walkthrough(redundant_pair):
    o, p, q = _fig_patterns(redundant_pair)
    result = ResultSet(Fraction(1, 10))
    assert result.try_accept(p)
    assert result.try_accept(q)
    assert not result.try_accept(o)
    assert [pat.key for pat in result] == [p.key, q.key]


def test_result_set_stays_pairwise_non_redundant():
    rng = random.Random(31)
    params = MiningParams(min_size=3)
    for _ in range(25):
        pair = random_pair(rng, 8, 0.55, 0.25)
        drawn = {}
        for _ in range(30):
            members = frozenset(rng.sample(range(8), rng.randint(3, 6)))
            pat = Pattern.from_vertices(pair, members, params)
            if pat.interestingness > 0:
                drawn[pat.key] = pat
        candidates = sorted(drawn.values(), key=Pattern.sort_key)
        result = ResultSet(params.r)
        for pat in candidates:
            result.try_accept(pat)
        accepted = list(result)
        scores = [pat.interestingness for pat in accepted]
        assert scores == sorted(scores, reverse=True)
        for i, a in enumerate(accepted):
            for b in accepted[i + 1 :]:
                assert not is_redundant(a, b, params.r)
                assert not is_redundant(b, a, params.r)


# --- serialization ----------------------------------------------------------


def test_pattern_json_dict_shape(contrast_pair):
    pat = Pattern.from_vertices(contrast_pair, ids(contrast_pair, "ABCD"), MiningParams())
    blob = pattern_json_dict(pat, contrast_pair)
    assert blob["vertices"] == ["A", "B", "C", "D"]
    assert blob["e1"] == 1 and blob["e2"] == 6
    assert blob["gamma2"] == 1.0
    assert blob["alpha2"] == 1.0
    assert blob["contrast"] == pytest.approx(0.833333)
    assert blob["interestingness"] == pytest.approx(3.33333)
    assert blob["dense_layer"] == 2
