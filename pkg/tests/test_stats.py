import itertools

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from boolsyn.stats import mann_whitney_u, summarize


def exact_two_sided_p(a, b):
    """Permutation p-value: share of relabellings whose U is at least as far from its mean."""
    pooled = list(a) + list(b)
    na, nb = len(a), len(b)
    mu = na * nb / 2

    def u_of(x, y):
        return sum((xi > yi) + 0.5 * (xi == yi) for xi in x for yi in y)

    observed = abs(u_of(a, b) - mu)
    hits = total = 0
    for idx in itertools.combinations(range(na + nb), na):
        x = [pooled[i] for i in idx]
        y = [pooled[i] for i in range(na + nb) if i not in idx]
        total += 1
        hits += abs(u_of(x, y) - mu) >= observed - 1e-12
    return hits / total


def test_identical_samples():
    a = [1.0, 2.0, 3.0, 4.0]
    u, p = mann_whitney_u(a, a)
    assert u == len(a) ** 2 / 2
    assert p == pytest.approx(1.0)


def test_complete_separation():
    assert mann_whitney_u([1, 2, 3], [4, 5, 6])[0] == 0.0
    assert mann_whitney_u([4, 5, 6], [1, 2, 3])[0] == 9.0


def test_small_sample_against_exact_enumeration():
    a, b = [1, 3], [2, 4]
    u, p = mann_whitney_u(a, b)
    assert u == 1.0
    exact = exact_two_sided_p(a, b)
    assert exact == pytest.approx(2 / 3)  # U over relabellings: 0, 1, 2, 2, 3, 4
    assert abs(p - exact) <= 0.25


@pytest.mark.parametrize(
    "a,b",
    [([1, 2, 3, 4], [5, 6, 7, 8]), ([1, 4, 6, 9], [2, 3, 5, 8]), ([1, 2, 2, 3, 5], [2, 4, 6])],
)
def test_normal_approximation_tracks_exact(a, b):
    assert abs(mann_whitney_u(a, b)[1] - exact_two_sided_p(a, b)) < 0.1


def test_all_tied_gives_p_one():
    assert mann_whitney_u([1, 1, 1], [1, 1])[1] == 1.0


def test_empty_sample_rejected():
    with pytest.raises(ValueError):
        mann_whitney_u([], [1.0])


samples = st.lists(st.integers(min_value=-20, max_value=20), min_size=1, max_size=25)


@given(samples, samples)
def test_u_statistics_sum_to_product(a, b):
    assert mann_whitney_u(a, b)[0] + mann_whitney_u(b, a)[0] == len(a) * len(b)


@given(samples, samples)
def test_p_in_unit_interval_and_monotone_invariant(a, b):
    u, p = mann_whitney_u(a, b)
    assert 0.0 <= p <= 1.0
    ta = [np.exp(x / 10) + 3 for x in a]
    tb = [np.exp(x / 10) + 3 for x in b]
    u2, p2 = mann_whitney_u(ta, tb)
    assert u2 == u
    assert p2 == pytest.approx(p)


def test_summarize_examples():
    s = summarize([5])
    assert (s.n, s.mean, s.standard_deviation) == (1, 5.0, 0.0)
    s = summarize([1, 1, 1, 1])
    assert s.mean == 1.0 and s.standard_deviation == 0.0
    s = summarize([2, 4, 4, 4, 5, 5, 7, 9])
    assert s.mean == 5.0
    assert s.standard_deviation == pytest.approx((32 / 7) ** 0.5)
    assert s.standard_deviation == pytest.approx(2.138, abs=5e-4)


def test_summarize_empty():
    with pytest.raises(ValueError):
        summarize([])
