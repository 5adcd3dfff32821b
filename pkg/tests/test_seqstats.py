import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from chsets.construct import greedy, sidon_greedy
from chsets.core import ElementOutOfRange, EmptySample, IntegerSet, Params
from chsets.seqstats import (
    block_profile,
    counting_function,
    geometric_grid,
    tau,
    thm3_statistic,
)
from chsets.verify import is_chg


def test_counting_function():
    a = IntegerSet([1, 2, 5, 11])
    assert counting_function(a, 5) == 3
    assert counting_function(a, 0) == 0
    assert counting_function(range(100), 49) == 50


def test_block_profile_examples():
    prof = block_profile([0, 1, 4, 8], 3, Params(2, 2))
    assert prof.counts == (2, 1, 1)
    assert prof.lhs == 1 and prof.rhs == 2 and prof.power_sum == 6
    assert prof.within_class_bound
    empty = block_profile([], 5, Params(3, 3))
    assert empty.counts == (0,) * 5 and empty.lhs == 0
    one_each = block_profile([0, 4, 8, 12], 4, Params(2, 2))
    assert one_each.lhs == 0 <= one_each.rhs


def test_block_profile_errors():
    with pytest.raises(ElementOutOfRange):
        block_profile([9], 3, Params(2, 2))
    with pytest.raises(ValueError):
        block_profile([0], 1, Params(2, 2))


def test_block_profile_csv():
    text = block_profile([0, 1, 4, 8], 3, Params(2, 2)).to_csv()
    assert text == "nu,count\n1,2\n2,1\n3,1\n\nN,h,g,lhs,rhs,power_sum\n3,2,2,1,2,6\n"


@settings(max_examples=200, deadline=None)
@given(st.sets(st.integers(0, 80), max_size=14), st.sampled_from([(2, 2), (2, 3), (3, 2), (3, 3)]))
def test_class_inequality_for_verified_sets(a, hg):
    p = Params(*hg)
    if not is_chg(a, p).holds:
        return
    top = max(a, default=0)
    for N in range(max(2, math.isqrt(top) + 1), 12):
        prof = block_profile(a, N, p)
        assert sum(prof.counts) == counting_function(a, N * N - 1)
        assert prof.lhs <= prof.rhs


@pytest.mark.parametrize("h,g", [(2, 2), (2, 3), (3, 3)])
def test_class_inequality_on_greedy(h, g):
    a = greedy(400, Params(h, g))
    for N in range(21, 40):
        assert block_profile(a, N, Params(h, g)).within_class_bound


def test_thm3_statistic_examples():
    full = range(1, 1000)
    x = round(math.e**2)  # A(x) = x on a full interval
    assert thm3_statistic(full, x, 2) == pytest.approx(x * math.sqrt(math.log(x)) / math.sqrt(x))
    assert thm3_statistic([1], 2, 3) == pytest.approx(math.log(2) ** (1 / 3) / 2 ** (2 / 3))
    with pytest.raises(ValueError):
        thm3_statistic([1], 1, 2)


@pytest.mark.parametrize("h", [2, 3, 4])
def test_thm3_statistic_full_interval_closed_form(h):
    # A(x) = x gives (x log x)^(1/h)
    full = IntegerSet(range(1, 5000))
    for x in (2, 7, 100, 4999):
        assert thm3_statistic(full, x, h) == pytest.approx((x * math.log(x)) ** (1 / h), rel=1e-12)


def test_tau():
    mc = sidon_greedy(10**4)
    xs = geometric_grid(100, 10**4)
    assert xs == [128, 256, 512, 1024, 2048, 4096, 8192]
    t = tau(mc, 100, xs)
    assert t == min(thm3_statistic(mc, x, 2) for x in xs)
    assert t == tau(mc, 100)
    assert tau(mc, 100, [500]) == thm3_statistic(mc, 500, 2)
    with pytest.raises(EmptySample):
        tau(mc, 100, [])
    with pytest.raises(ValueError):
        tau(mc, 100, [50])
    with pytest.raises(ValueError):
        tau(mc, 100, [10**5])


def test_tau_non_decreasing_in_m():
    mc = sidon_greedy(10**4)
    xs = geometric_grid(2, 10**4)
    vals = [tau(mc, m, [x for x in xs if x >= m]) for m in (2, 16, 128, 1024, 8192)]
    assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_sidon_statistic_bounded():
    mc = sidon_greedy(10**5)
    stats = [thm3_statistic(mc, x, 2) for x in geometric_grid(2, 10**5)]
    assert max(stats) < 10


def test_tau_single_point():
    rnd = random.Random(1)
    a = sorted(rnd.sample(range(1, 5000), 300))
    assert tau(a, 1000, [2000]) == thm3_statistic(a, 2000, 2)
    assert tau(a, 1000, [2000, 2000]) == thm3_statistic(a, 2000, 2)
