from fractions import Fraction as F

import pytest

import oracles
from twochild.family import (
    ADAM,
    BOY,
    GIRL,
    OTHER,
    BernoulliDupAllowed,
    BernoulliNoDup,
    Child,
    Family,
    NameAlphabet,
    UniformWithoutReplacement,
    WeightedBoost,
    at_least_one_boy,
    exactly_one_boy,
    family_dist,
    firstborn_boy_named,
    has_named_boy,
    rename_duplicates,
    two_boys,
)
from twochild.prob import cond_prob, prob, pushforward

P_GRID = [F(1, 100), F(1, 50), F(1, 10), F(1, 5), F(1, 2), F(1)]
G = Child(GIRL)
ADAM_BOY = Child(BOY, ADAM)
OTHER_BOY = Child(BOY, OTHER)

MODELS = [
    BernoulliNoDup(F(1, 50)),
    BernoulliDupAllowed(F(1, 5)),
    UniformWithoutReplacement(5),
    WeightedBoost((F(1, 2), F(1, 4), F(1, 8), F(1, 8))),
]


@pytest.mark.parametrize("model", MODELS, ids=repr)
def test_sex_marginals_ignore_names(model):
    d = family_dist(model)
    assert sum(w for _, w in d.items()) == 1
    assert prob(d, two_boys()) == F(1, 4)
    assert prob(d, at_least_one_boy()) == F(3, 4)
    assert cond_prob(d, two_boys(), at_least_one_boy()) == F(1, 3)


@pytest.mark.parametrize("model", MODELS, ids=repr)
def test_girls_unnamed_boys_named(model):
    for f in family_dist(model):
        for c in f.children:
            assert (c.name is None) == (c.sex is GIRL)


@pytest.mark.parametrize("p", P_GRID)
def test_named_and_two_boys_joint(p):
    d = family_dist(BernoulliNoDup(p))
    assert prob(d, has_named_boy() & two_boys()) == (2 * p - p * p) / 4
    assert cond_prob(d, has_named_boy(), two_boys()) == 2 * p - p * p


def test_half_named_two_boys_against_enumeration():
    # oracle: count raw coin outcomes directly
    num = den = F(0)
    for boys, adams, w in oracles.bernoulli_outcomes(F(1, 2)):
        if all(boys):
            den += w
            num += w * any(adams)
    assert num / den == F(3, 4)
    d = family_dist(BernoulliNoDup(F(1, 2)))
    assert cond_prob(d, has_named_boy(), two_boys()) == F(3, 4)


@pytest.mark.parametrize("p", P_GRID)
@pytest.mark.parametrize("model_cls", [BernoulliNoDup, BernoulliDupAllowed])
def test_single_boy_named_with_p(model_cls, p):
    d = family_dist(model_cls(p))
    assert cond_prob(d, has_named_boy(), exactly_one_boy()) == p


@pytest.mark.parametrize("p", P_GRID)
def test_adam_posterior_closed_form(p):
    d = family_dist(BernoulliNoDup(p))
    assert cond_prob(d, two_boys(), has_named_boy()) == (1 - p / 2) / (2 - p / 2)


@pytest.mark.parametrize("p", P_GRID)
def test_firstborn_named_is_a_third(p):
    d = family_dist(BernoulliNoDup(p))
    assert cond_prob(d, two_boys(), firstborn_boy_named()) == F(1, 3)


@pytest.mark.parametrize("n", [2, 3, 5, 10, 100])
def test_without_replacement(n):
    d = family_dist(UniformWithoutReplacement(n))
    assert cond_prob(d, has_named_boy(), two_boys()) == F(2, n)
    assert cond_prob(d, two_boys(), has_named_boy()) == F(1, 2)


@pytest.mark.parametrize("n", [2, 5, 10])
def test_uniform_weighted_boost_gives_half(n):
    d = family_dist(WeightedBoost((F(1, n),) * n))
    assert cond_prob(d, two_boys(), has_named_boy()) == F(1, 2)


@pytest.mark.parametrize("p", [F(1, 50), F(1, 5), F(1, 2), F(1)])
def test_rename_duplicates_equivalence(p):
    renamed = pushforward(family_dist(BernoulliDupAllowed(p)), rename_duplicates)
    nodup = family_dist(BernoulliNoDup(p))
    for event in (has_named_boy(), two_boys(), has_named_boy() & two_boys()):
        assert prob(renamed, event) == prob(nodup, event)
    assert renamed == nodup


def test_rename_duplicates_examples():
    assert rename_duplicates(Family(ADAM_BOY, ADAM_BOY)) == Family(ADAM_BOY, OTHER_BOY)
    assert rename_duplicates(Family(ADAM_BOY, OTHER_BOY)) == Family(ADAM_BOY, OTHER_BOY)
    assert rename_duplicates(Family(G, G)) == Family(G, G)


@pytest.mark.parametrize(
    "family, expected",
    [
        (Family(ADAM_BOY, G), (True, False, True, True)),
        (Family(OTHER_BOY, OTHER_BOY), (True, True, False, False)),
        (Family(G, ADAM_BOY), (True, False, True, True)),
        (Family(OTHER_BOY, ADAM_BOY), (True, True, True, False)),
        (Family(G, G), (False, False, False, False)),
    ],
)
def test_predicates(family, expected):
    got = (
        at_least_one_boy()(family),
        two_boys()(family),
        has_named_boy()(family),
        firstborn_boy_named()(family),
    )
    assert got == expected


@pytest.mark.parametrize(
    "make",
    [
        lambda: BernoulliNoDup(0),
        lambda: BernoulliNoDup(F(3, 2)),
        lambda: BernoulliDupAllowed(-1),
        lambda: UniformWithoutReplacement(1),
        lambda: WeightedBoost((F(1, 2), F(1, 4))),
        lambda: WeightedBoost((F(1),)),
        lambda: WeightedBoost((F(1), F(0))),
        lambda: NameAlphabet(()),
        lambda: NameAlphabet(("a", "a")),
        lambda: NameAlphabet(("a",), 3),
    ],
)
def test_invalid_parameters(make):
    with pytest.raises(ValueError):
        make()


def test_bernoulli_support_is_small():
    assert len(family_dist(BernoulliNoDup(F(1, 3)))) <= 36
