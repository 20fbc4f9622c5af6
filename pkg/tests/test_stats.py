import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
import scipy.stats as ss
from hypothesis import given, settings
from hypothesis import strategies as st

from woagwo.stats import EmptySampleError, describe, midranks, ranksum, u_null_counts


def brute_force_exact_p(a, b):
    """Two-sided exact p by enumerating every split of the pooled ranks."""
    pooled = sorted(list(a) + list(b))
    rank = {v: i + 1 for i, v in enumerate(pooled)}
    n, N = len(a), len(pooled)
    u_obs = sum(rank[v] for v in a) - n * (n + 1) // 2
    lo = hi = total = 0
    for combo in itertools.combinations(range(1, N + 1), n):
        u = sum(combo) - n * (n + 1) // 2
        total += 1
        lo += u <= u_obs
        hi += u >= u_obs
    return min(Fraction(1), Fraction(2 * min(lo, hi), total))


# ---------------------------------------------------------------- describe


def test_describe_constant():
    s = describe([5, 5, 5, 5])
    assert (s.mean, s.std, s.min, s.q1, s.median, s.q3, s.max) == (5, 0, 5, 5, 5, 5, 5)


def test_describe_symmetric():
    s = describe([1, 2, 3, 4, 5])
    assert (s.mean, s.median, s.min, s.max, s.q1, s.q3) == (3, 3, 1, 5, 2, 4)


def test_describe_sample_std():
    s = describe([2, 4, 4, 4, 5, 5, 7, 9])
    assert s.mean == 5
    assert s.std == pytest.approx(math.sqrt(32 / 7))
    assert s.std == pytest.approx(2.138, abs=5e-4)


def test_describe_r7_quantiles():
    x = [7.0, 1.0, 3.0, 10.0]
    s = describe(x)
    # R-7: h = (n - 1) p, interpolate between order statistics
    assert s.q1 == 1 + 0.75 * (3 - 1)
    assert s.q3 == 7 + 0.25 * (10 - 7)
    assert s.median == 5.0


def test_describe_single_value():
    s = describe([3.5])
    assert s.n == 1 and s.std == 0.0 and s.q1 == 3.5


def test_describe_errors():
    with pytest.raises(EmptySampleError):
        describe([])
    with pytest.raises(ValueError):
        describe([1.0, float("nan")])


def test_constant_non_representable_sample_has_zero_std():
    assert describe([0.1] * 3).std == 0.0


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(-1e12, 1e12), min_size=1, max_size=40), st.randoms())
def test_describe_invariants(xs, rnd):
    s = describe(xs)
    assert s.min <= s.q1 <= s.median <= s.q3 <= s.max
    assert s.std >= 0
    assert (s.std == 0) == (len(set(xs)) == 1)
    shuffled = list(xs)
    rnd.shuffle(shuffled)
    assert describe(shuffled) == s


# ---------------------------------------------------------------- ranks


def test_midranks_ties():
    assert midranks([10, 20, 20, 30]).tolist() == [1, 2.5, 2.5, 4]
    assert midranks([5, 5, 5]).tolist() == [2, 2, 2]


# ---------------------------------------------------------------- rank-sum examples


def test_identical_samples():
    r = ranksum(range(1, 31), range(1, 31))
    assert r.z == 0 and abs(r.p_two_sided - 1) <= 1e-9 and not r.significant


def test_three_vs_three_exact():
    r = ranksum([1, 2, 3], [4, 5, 6])
    assert r.exact and r.p_two_sided == pytest.approx(0.1, abs=1e-15)
    assert r.u_statistic == 0


def test_fully_separated_thirty():
    r = ranksum(np.arange(30.0), np.arange(100.0, 130.0))
    assert r.p_two_sided < 1e-10 and r.significant and not r.exact


def test_separated_thirty_against_permutation_monte_carlo():
    a, b = np.arange(30.0), np.arange(100.0, 130.0)
    # the observed split is the most extreme one; in 10^6 shuffles none is as extreme
    rng = np.random.default_rng(0)
    pooled = np.concatenate([a, b])
    extreme = 0
    for _ in range(20):
        perm = rng.permuted(np.tile(pooled, (50_000, 1)), axis=1)
        u = (perm[:, :30, None] > perm[:, None, 30:]).sum(axis=(1, 2))
        extreme += int(np.sum((u == 0) | (u == 900)))
    assert extreme == 0
    assert ranksum(a, b).p_two_sided < 1e-6


def test_errors():
    with pytest.raises(EmptySampleError):
        ranksum([], [1.0])
    with pytest.raises(EmptySampleError):
        ranksum([1.0], [])
    with pytest.raises(ValueError):
        ranksum([1.0], [2.0], method="bootstrap")
    with pytest.raises(ValueError):
        ranksum([1.0, 1.0], [1.0, 2.0], method="exact")
    with pytest.raises(ValueError):
        ranksum([1.0], [2.0], alpha=1.5)


def test_all_equal_pooled_values():
    r = ranksum([2.0] * 5, [2.0] * 40)
    assert r.z == 0 and r.p_two_sided == 1.0


# ---------------------------------------------------------------- exact path oracle


def test_null_counts_match_enumeration():
    for n in range(1, 6):
        for m in range(1, 6):
            counts = [0] * (n * m + 1)
            for combo in itertools.combinations(range(1, n + m + 1), n):
                counts[sum(combo) - n * (n + 1) // 2] += 1
            assert list(u_null_counts(n, m)) == counts


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("m", range(1, 7))
def test_exact_matches_brute_force(n, m):
    rng = np.random.default_rng(100 * n + m)
    for _ in range(5):
        pooled = rng.permutation(n + m).astype(float)
        a, b = pooled[:n], pooled[n:]
        r = ranksum(a, b, method="exact")
        assert r.p_two_sided == float(brute_force_exact_p(a, b))


@pytest.mark.parametrize("n,m", [(3, 20), (8, 8), (8, 30), (5, 12)])
def test_exact_matches_scipy(n, m):
    rng = np.random.default_rng(n * m)
    a, b = rng.normal(size=n), rng.normal(0.8, size=m)
    ours = ranksum(a, b)
    ref = ss.mannwhitneyu(a, b, alternative="two-sided", method="exact")
    assert ours.exact
    assert ours.u_statistic == ref.statistic
    assert ours.p_two_sided == pytest.approx(ref.pvalue, rel=1e-12)


# ---------------------------------------------------------------- normal path


@pytest.mark.parametrize("seed", range(10))
def test_normal_matches_scipy_with_ties(seed):
    rng = np.random.default_rng(seed)
    a = np.round(rng.normal(size=30), 1)
    b = np.round(rng.normal(0.3, size=25), 1)
    ours = ranksum(a, b)
    ref = ss.mannwhitneyu(a, b, alternative="two-sided", method="asymptotic", use_continuity=True)
    assert not ours.exact
    assert ours.u_statistic == ref.statistic
    assert ours.p_two_sided == pytest.approx(ref.pvalue, rel=1e-10)


def test_normal_z_formula():
    a, b = [1.0, 4.0, 5.0, 9.0], [2.0, 3.0, 6.0, 7.0, 8.0]
    r = ranksum(a, b, method="normal")
    u = 0 + 2 + 2 + 5  # pairs with a > b
    mu, sd = 10.0, math.sqrt(4 * 5 * 10 / 12)
    assert r.u_statistic == u
    assert r.z == pytest.approx((u - mu + 0.5) / sd, rel=1e-14)
    assert r.p_two_sided == pytest.approx(math.erfc(abs(r.z) / math.sqrt(2)), rel=1e-14)


# ---------------------------------------------------------------- properties

samples = st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=25)


@settings(max_examples=200, deadline=None)
@given(samples, samples)
def test_symmetry(a, b):
    assert ranksum(a, b).p_two_sided == ranksum(b, a).p_two_sided


int_samples = st.lists(st.integers(-10**6, 10**6).map(float), min_size=1, max_size=25)


@settings(max_examples=200, deadline=None)
@given(int_samples, int_samples, st.integers(-1000, 1000))
def test_translation_invariance(a, b, c):
    # integer-valued data keeps the shift exact in floating point
    r1 = ranksum(a, b)
    r2 = ranksum(np.add(a, c), np.add(b, c))
    assert r1 == r2


@settings(max_examples=200, deadline=None)
@given(samples, samples)
def test_p_in_unit_interval_and_verdict(a, b):
    r = ranksum(a, b, alpha=0.05)
    assert 0.0 <= r.p_two_sided <= 1.0
    assert r.significant == (r.p_two_sided < 0.05)


@pytest.mark.parametrize("seed", range(20))
def test_shift_monotonicity(seed):
    """Shifting b upward never strengthens the evidence that b < a."""
    rng = np.random.default_rng(seed)
    a, b = rng.normal(size=15), rng.normal(size=18)
    us, zs = [], []
    for c in (0.0, 1.0, 10.0):
        r = ranksum(a, b + c)
        us.append(r.u_statistic)
        zs.append(r.z)
    assert us[0] >= us[1] >= us[2]
    assert zs[0] >= zs[1] >= zs[2]
