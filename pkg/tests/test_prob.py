from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twochild.prob import (
    Event,
    ZeroProbabilityError,
    as_rational,
    cond_prob,
    condition,
    dist,
    partition_check,
    point_mass,
    prob,
    product,
    pushforward,
    rational,
    uniform,
)

SEXES = uniform(["BB", "BG", "GB", "GG"])
two_boys = Event(lambda s: s == "BB", "two_boys")
some_boy = Event(lambda s: "B" in s, "some_boy")


@pytest.mark.parametrize(
    "num, den, expected",
    [(2, 4, (1, 2)), (0, 7, (0, 1)), (-3, -6, (1, 2)), (3, -6, (-1, 2))],
)
def test_rational_is_reduced(num, den, expected):
    q = rational(num, den)
    assert (q.numerator, q.denominator) == expected


def test_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rational(1, 0)


@pytest.mark.parametrize("text, expected", [("1/50", F(1, 50)), ("3", F(3)), (" -2/4 ", F(-1, 2))])
def test_as_rational_parses(text, expected):
    assert as_rational(text) == expected


@pytest.mark.parametrize("bad", ["0.5", "1/x", "", 0.5, True])
def test_as_rational_refuses_inexact(bad):
    with pytest.raises((ValueError, TypeError)):
        as_rational(bad)


def test_dist_examples():
    coin = dist([("H", 1), ("T", 1)])
    assert coin.weight("H") == coin.weight("T") == F(1, 2)
    merged = dist([("a", F(1, 2)), ("a", F(1, 4)), ("b", F(1, 4))])
    assert merged == dist([("a", F(3, 4)), ("b", F(1, 4))])
    assert len(merged) == 2
    scaled = dist([("x", 2), ("y", 6)])
    assert (scaled.weight("x"), scaled.weight("y")) == (F(1, 4), F(3, 4))


@pytest.mark.parametrize("pairs", [[("a", -1), ("b", 2)], [("a", 0)], []])
def test_dist_rejects_bad_weights(pairs):
    with pytest.raises(ValueError):
        dist(pairs)


def test_dist_equality_ignores_order():
    assert dist([("a", 1), ("b", 3)]) == dist([("b", 3), ("a", 1)])


def test_prob_examples():
    assert prob(SEXES, two_boys) == F(1, 4)
    assert prob(SEXES, Event.always()) == 1
    assert prob(SEXES, Event.never()) == 0


def test_cond_prob_two_child():
    assert cond_prob(SEXES, two_boys, some_boy) == F(1, 3)
    assert cond_prob(SEXES, some_boy, some_boy) == 1


def test_cond_prob_zero_condition():
    with pytest.raises(ZeroProbabilityError):
        cond_prob(SEXES, two_boys, Event.never())
    with pytest.raises(ZeroProbabilityError):
        condition(SEXES, Event.never())


def test_condition_examples():
    assert condition(SEXES, some_boy) == uniform(["BB", "BG", "GB"])
    assert condition(SEXES, Event.always()) == SEXES
    assert condition(SEXES, two_boys) == point_mass("BB")


def test_product_examples():
    coin = uniform("HT")
    assert product(coin, coin) == uniform([(a, b) for a in "HT" for b in "HT"])
    assert pushforward(product(SEXES, point_mass(0)), lambda ab: ab[0]) == SEXES
    d = product(dist([("a", F(1, 3)), ("b", F(2, 3))]), uniform("xy"))
    assert d.weight(("a", "x")) == F(1, 6)
    assert d.weight(("b", "y")) == F(1, 3)


def test_pushforward_examples():
    boys = pushforward(SEXES, lambda s: s.count("B"))
    assert boys == dist([(2, 1), (1, 2), (0, 1)])
    assert SEXES.map(lambda s: s) == SEXES
    assert SEXES.map(lambda s: 0) == point_mass(0)


def test_partition_check_trivial_part():
    report = partition_check(SEXES, two_boys, [Event.always()])
    assert report.disjoint and report.covering
    assert report.per_part == ((F(1), F(1, 4)),)
    assert report.constant_conditional == report.p_of_e == F(1, 4)


def test_partition_check_needs_parts():
    with pytest.raises(ValueError):
        partition_check(SEXES, two_boys, [])


def test_partition_zero_probability_part_is_undefined():
    d = dist([("x", 1), ("y", 0)])
    report = partition_check(d, Event(lambda w: w == "x"), [Event(lambda w: w == "x"), Event(lambda w: w == "y")])
    assert report.per_part[1] == (0, None)
    assert report.constant_conditional == 1


# --- property tests over random small distributions -------------------------

weights = st.integers(min_value=0, max_value=12)


@st.composite
def small_dists(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    ws = draw(st.lists(weights, min_size=n, max_size=n).filter(lambda ws: sum(ws) > 0))
    return dist(list(enumerate(ws)))


@st.composite
def dist_and_event(draw):
    d = draw(small_dists())
    members = draw(st.sets(st.integers(0, 7)))
    return d, Event(lambda w, m=frozenset(members): w in m, "E")


@st.composite
def dist_event_partition(draw):
    d, e = draw(dist_and_event())
    k = draw(st.integers(min_value=1, max_value=4))
    # assigning each outcome a block yields a disjoint covering partition
    blocks = {w: draw(st.integers(0, k - 1)) for w in range(8)}
    parts = [Event(lambda w, i=i: blocks[w] == i, f"F{i}") for i in range(k)]
    return d, e, parts


@given(dist_and_event(), dist_and_event())
def test_product_rule(a, b):
    d, e = a
    _, f = b
    pf = prob(d, f)
    if pf == 0:
        return
    assert cond_prob(d, e, f) * pf == prob(d, e & f)
    assert prob(condition(d, f), e) == cond_prob(d, e, f)


@given(small_dists())
def test_weights_are_exact_and_sum_to_one(d):
    assert sum(w for _, w in d.items()) == 1
    assert all(isinstance(w, F) and w > 0 for _, w in d.items())


@settings(max_examples=100)
@given(dist_event_partition())
def test_total_probability_law(case):
    d, e, parts = case
    report = partition_check(d, e, parts)
    assert report.disjoint and report.covering
    assert report.total_prob_identity == prob(d, e)


@settings(max_examples=100)
@given(small_dists(), small_dists(), st.sets(st.integers(0, 7)))
def test_constant_conditional_law(outer, inner, members):
    # E reads only the inner coordinate and the parts only the outer one, so
    # every defined P(E | F_k) equals the same q
    d = product(outer, inner)
    e = Event(lambda w: w[1] in members, "E")
    parts = [Event(lambda w, k=k: w[0] == k, f"F{k}") for k in range(8)]
    report = partition_check(d, e, parts)
    assert report.disjoint and report.covering
    assert report.constant_conditional is not None
    assert report.p_of_e == report.constant_conditional == prob(inner, lambda w: w in members)


@settings(max_examples=100)
@given(dist_event_partition())
def test_constant_conditional_implies_p_of_e(case):
    d, e, parts = case
    report = partition_check(d, e, parts)
    if report.law_applies:
        assert report.p_of_e == report.constant_conditional
