import pytest
from hypothesis import given, settings, strategies as st

from chsets.bounds import deletion_p
from chsets.construct import (
    attempt_seed,
    bad_elements,
    bernoulli_sample,
    deletion_trial,
    greedy,
    is_prime,
    random_deletion,
    sidon_erdos_turan,
    sidon_greedy,
    strict_bad_elements,
)
from chsets.core import IntegerSet, Mode, NotPrime, Params
from chsets.verify import is_chg, is_weak_chg

from conftest import oracle_bad, oracle_holds

HG = [(2, 2), (2, 3), (3, 2), (3, 3)]


def test_bernoulli_sample_deterministic():
    a = bernoulli_sample(100, 0.5, 7)
    assert a == bernoulli_sample(100, 0.5, 7)
    assert a != bernoulli_sample(100, 0.5, 8)
    assert all(1 <= x <= 100 for x in a)
    assert len(bernoulli_sample(10, 0.999999, 3)) == 10
    for p in (0.0, 1.0, -0.1):
        with pytest.raises(ValueError):
            bernoulli_sample(10, p, 1)


def test_bernoulli_sample_size_distribution():
    sizes = [len(bernoulli_sample(10**6, 5e-5, s)) for s in range(300)]
    mean = sum(sizes) / len(sizes)
    assert abs(mean - 50) < 3 * 7 / len(sizes) ** 0.5 + 1
    assert all(15 <= x <= 85 for x in sizes)


def test_bad_elements_examples():
    p = Params(2, 2)
    assert bad_elements([0, 1, 2, 3], p).elements == (1, 2)
    assert bad_elements([1, 2, 5, 11], p).elements == ()
    assert bad_elements([4], Params(2, 3)).elements == ()


def test_strict_bad_examples():
    p = Params(2, 2)
    assert strict_bad_elements([0, 1, 2], p).elements == (1,)
    # shape (1) marks 1 and 2, shape (2) marks 1, shape (3) has one offset
    assert strict_bad_elements([0, 1, 2, 3], p).elements == (1, 2)
    assert strict_bad_elements(sidon_erdos_turan(7), p).elements == ()


@settings(max_examples=150, deadline=None)
@given(st.sets(st.integers(0, 40), max_size=12), st.sampled_from(HG))
def test_bad_elements_match_oracle(s, hg):
    h, g = hg
    p = Params(h, g)
    weak_bad = set(bad_elements(s, p))
    strict_bad = set(strict_bad_elements(s, p))
    assert weak_bad == oracle_bad(s, h, g, weak=True)
    assert strict_bad == oracle_bad(s, h, g, weak=False)
    assert weak_bad <= strict_bad <= set(s)
    assert oracle_holds(set(s) - weak_bad, h, g, weak=True)
    assert oracle_holds(set(s) - strict_bad, h, g)


def test_deletion_trial_fields():
    p = Params(2, 2, Mode.WEAK)
    t = deletion_trial(10**4, p, seed=5)
    assert t.p == deletion_p(10**4, 2, 2) and t.np == pytest.approx(10**4 * t.p)
    assert set(t.bad) <= set(t.sample)
    assert t.result == t.sample.without(t.bad)
    assert t.success == (len(t.sample) >= t.np / 2 and len(t.bad) <= t.np / 4)
    rec = dict(line.split("=", 1) for line in t.to_record().splitlines())
    assert rec["n"] == "10000" and rec["seed"] == "5" and int(rec["result_size"]) == len(t.result)
    with pytest.raises(ValueError):
        deletion_trial(1, p, seed=1)


def test_random_deletion_deterministic():
    p = Params(2, 2)
    a = random_deletion(100, p, seed=11)
    b = random_deletion(100, p, seed=11)
    assert a == b and a.to_record() == b.to_record()


def test_attempt_seed():
    assert attempt_seed(9, 0) == 9
    assert attempt_seed(9, 1) == attempt_seed(9, 1) != attempt_seed(9, 2)


def test_budget_fallback_is_strict():
    t = deletion_trial(10**4, Params(2, 2), seed=3, budget=0)
    if t.strict_fallback:
        assert is_chg(t.result, Params(2, 2)).holds
    assert is_weak_chg(t.result, Params(2, 2, Mode.WEAK)).holds


@pytest.mark.parametrize("h,g", [(2, 2), (2, 3), (3, 3)])
def test_random_deletion_valid(h, g):
    w = Params(h, g, Mode.WEAK)
    for seed in range(10):
        t = random_deletion(10**4, Params(h, g), seed)
        assert is_weak_chg(t.result, w).holds
        if t.success:
            assert len(t.result) > t.np / 4


def test_greedy_examples():
    assert greedy(30, Params(2, 2)).elements == (1, 2, 4, 8, 13, 21)
    assert greedy(5, Params(2, 2, Mode.WEAK)).elements == (1, 2, 3, 5)
    for h, g in HG:
        assert greedy(1, Params(h, g)).elements == (1,)


@pytest.mark.parametrize("h,g", HG)
@pytest.mark.parametrize("weak", [False, True])
def test_greedy_valid_and_prefix_stable(h, g, weak):
    p = Params(h, g, Mode.WEAK if weak else Mode.STRICT)
    big = greedy(40, p)
    assert oracle_holds(big, h, g, weak)
    for n in (5, 17, 33):
        small = greedy(n, p)
        assert small.elements == tuple(x for x in big if x <= n)


def test_greedy_greedy_choice():
    # each skipped element really would break the property
    p = Params(2, 3)
    a = list(greedy(30, p))
    for m in range(1, 31):
        if m not in a:
            assert not oracle_holds([x for x in a if x < m] + [m], 2, 3)


def test_sidon_greedy_matches_generic():
    assert sidon_greedy(300).elements == greedy(300, Params(2, 2)).elements
    mc = sidon_greedy(10**5)
    assert mc.elements[:10] == (1, 2, 4, 8, 13, 21, 31, 45, 66, 81)
    assert len(mc) == 161


def test_sidon_erdos_turan():
    assert sidon_erdos_turan(5).elements == (0, 11, 24, 34, 41)
    assert sidon_erdos_turan(3).elements == (0, 7, 13)
    assert sidon_erdos_turan(2).elements == (0, 5)
    for q in (2, 3, 5, 7, 11, 13, 17):
        a = sidon_erdos_turan(q)
        assert len(a) == q and a[-1] < 2 * q * q
        diffs = [y - x for x in a for y in a if y > x]
        assert len(diffs) == len(set(diffs))
    for q in (1, 4, 9, 15):
        with pytest.raises(NotPrime):
            sidon_erdos_turan(q)


def test_is_prime():
    assert [q for q in range(30) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_integer_set_n_hint_from_sample():
    a = bernoulli_sample(50, 0.3, 1)
    assert isinstance(a, IntegerSet) and a.n_hint == 50
