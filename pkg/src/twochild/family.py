"""Two-child families: fair independent sexes plus a naming model for boys."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .prob import Event, FiniteDist, as_rational, dist

__all__ = [
    "Sex",
    "BOY",
    "GIRL",
    "Child",
    "Family",
    "NameAlphabet",
    "ADAM",
    "OTHER",
    "BINARY_ALPHABET",
    "BernoulliNoDup",
    "BernoulliDupAllowed",
    "UniformWithoutReplacement",
    "WeightedBoost",
    "NamingModel",
    "family_dist",
    "at_least_one_boy",
    "exactly_one_boy",
    "two_boys",
    "has_named_boy",
    "firstborn_boy_named",
    "rename_duplicates",
]


class Sex(Enum):
    BOY = "B"
    GIRL = "G"

    def __repr__(self) -> str:
        return self.value


BOY = Sex.BOY
GIRL = Sex.GIRL

# name symbols are indices into the model's alphabet; girls carry None
ADAM = 0
OTHER = 1


class Child(NamedTuple):
    sex: Sex
    name: Optional[int] = None

    @property
    def is_boy(self) -> bool:
        return self.sex is BOY

    def __repr__(self) -> str:
        return "G" if self.sex is GIRL else f"B:{self.name}"


class Family(NamedTuple):
    """Two children in birth order; ``first`` is the older."""

    first: Child
    second: Child

    @property
    def children(self) -> tuple:
        return (self.first, self.second)

    @property
    def boys(self) -> int:
        return self.first.is_boy + self.second.is_boy

    @property
    def sexes(self) -> str:
        return self.first.sex.value + self.second.sex.value

    def __repr__(self) -> str:
        return f"({self.first!r}, {self.second!r})"


@dataclass(frozen=True)
class NameAlphabet:
    names: tuple
    target: int = 0

    def __post_init__(self):
        if not self.names:
            raise ValueError("name alphabet must be non-empty")
        if len(set(self.names)) != len(self.names):
            raise ValueError("name labels must be distinct")
        if not 0 <= self.target < len(self.names):
            raise ValueError(f"target index {self.target} out of range")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, label: str) -> int:
        return self.names.index(label)

    def label(self, symbol: Optional[int]) -> str:
        return "-" if symbol is None else self.names[symbol]


BINARY_ALPHABET = NameAlphabet(("Adam", "Other"), ADAM)


def _check_p(p) -> Fraction:
    p = as_rational(p)
    if not 0 < p <= 1:
        raise ValueError(f"naming probability p must satisfy 0 < p <= 1, got {p}")
    return p


@dataclass(frozen=True)
class BernoulliNoDup:
    """Each boy is the target with probability ``p`` unless an older brother already is."""

    p: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", _check_p(self.p))

    @property
    def alphabet(self) -> NameAlphabet:
        return BINARY_ALPHABET


@dataclass(frozen=True)
class BernoulliDupAllowed:
    """Each boy is independently the target with probability ``p``."""

    p: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", _check_p(self.p))

    @property
    def alphabet(self) -> NameAlphabet:
        return BINARY_ALPHABET


@dataclass(frozen=True)
class UniformWithoutReplacement:
    """First boy uniform over ``n`` names, a younger brother uniform over the other ``n - 1``."""

    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"without-replacement naming needs an integer n >= 2, got {self.n!r}")

    @property
    def alphabet(self) -> NameAlphabet:
        return NameAlphabet(("Adam",) + tuple(f"name{k}" for k in range(1, self.n)), 0)


@dataclass(frozen=True)
class WeightedBoost:
    """Names drawn with fixed weights; a younger brother's weights are renormalised
    over the names his older brother does not carry."""

    weights: tuple
    labels: tuple = field(default=())
    target: int = 0

    def __post_init__(self):
        weights = tuple(as_rational(w) for w in self.weights)
        if len(weights) < 2:
            raise ValueError("weighted naming needs at least two names")
        if any(w <= 0 or w >= 1 for w in weights):
            raise ValueError("every name weight must lie strictly between 0 and 1")
        if sum(weights) != 1:
            raise ValueError(f"name weights must sum to exactly 1, got {sum(weights)}")
        labels = tuple(self.labels) or ("Adam",) + tuple(f"name{k}" for k in range(1, len(weights)))
        if len(labels) != len(weights):
            raise ValueError("one label per weight required")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "labels", labels)
        NameAlphabet(labels, self.target)

    @property
    def alphabet(self) -> NameAlphabet:
        return NameAlphabet(self.labels, self.target)


NamingModel = Union[BernoulliNoDup, BernoulliDupAllowed, UniformWithoutReplacement, WeightedBoost]


def _first_boy_names(model) -> list:
    """Name distribution of a boy with no older brother, as ``(symbol, weight)``."""
    if isinstance(model, (BernoulliNoDup, BernoulliDupAllowed)):
        return [(ADAM, model.p), (OTHER, 1 - model.p)]
    if isinstance(model, UniformWithoutReplacement):
        return [(k, Fraction(1, model.n)) for k in range(model.n)]
    if isinstance(model, WeightedBoost):
        return list(enumerate(model.weights))
    raise TypeError(f"unknown naming model {model!r}")


def _younger_brother_names(model, older: int) -> list:
    """Name distribution of a boy whose older brother is called ``older``."""
    if isinstance(model, BernoulliNoDup):
        if older == ADAM:
            return [(OTHER, Fraction(1))]
        return _first_boy_names(model)
    if isinstance(model, BernoulliDupAllowed):
        return _first_boy_names(model)
    if isinstance(model, UniformWithoutReplacement):
        return [(k, Fraction(1, model.n - 1)) for k in range(model.n) if k != older]
    if isinstance(model, WeightedBoost):
        boost = 1 / (1 - model.weights[older])
        return [(k, w * boost) for k, w in enumerate(model.weights) if k != older]
    raise TypeError(f"unknown naming model {model!r}")


def family_dist(model) -> FiniteDist:
    """Exact distribution over families under ``model``."""
    quarter = Fraction(1, 4)
    girl = Child(GIRL)
    pairs = [(Family(girl, girl), quarter)]
    for k, w in _first_boy_names(model):
        pairs.append((Family(Child(BOY, k), girl), quarter * w))
        pairs.append((Family(girl, Child(BOY, k)), quarter * w))
        for j, v in _younger_brother_names(model, k):
            pairs.append((Family(Child(BOY, k), Child(BOY, j)), quarter * w * v))
    return dist(pairs)


def at_least_one_boy() -> Event:
    return Event(lambda f: f.first.is_boy or f.second.is_boy, "at_least_one_boy")


def exactly_one_boy() -> Event:
    return Event(lambda f: f.boys == 1, "exactly_one_boy")


def two_boys() -> Event:
    return Event(lambda f: f.first.is_boy and f.second.is_boy, "two_boys")


def has_named_boy(target: int = ADAM) -> Event:
    return Event(
        lambda f: any(c.is_boy and c.name == target for c in f.children),
        f"has_named_boy[{target}]",
    )


def firstborn_boy_named(target: int = ADAM) -> Event:
    def test(f: Family) -> bool:
        for c in f.children:
            if c.is_boy:
                return c.name == target
        return False

    return Event(test, f"firstborn_boy_named[{target}]")


def rename_duplicates(f: Family, target: int = ADAM, other: int = OTHER) -> Family:
    """Give the younger of two same-named target boys the ``other`` name."""
    if f.first.is_boy and f.second.is_boy and f.first.name == target and f.second.name == target:
        return Family(f.first, Child(BOY, other))
    return f
