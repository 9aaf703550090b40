"""How the observer learns about the family.

Each protocol extends the family space with its own randomness (which child
goes on the walk, which boy registers for the draft) and names the event the
observer actually witnesses. Posteriors come from conditioning that extended
space.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from . import family as fam
from .family import Family
from .prob import Event, FiniteDist, as_rational, cond_prob, dist

__all__ = [
    "OracleAtLeastOneBoy",
    "OracleNamedBoy",
    "OracleFirstbornBoyNamed",
    "SchoolMeeting",
    "Walk",
    "WalkNamed",
    "Draft",
    "Protocol",
    "Episode",
    "episode_dist",
    "observed",
    "posterior_two_boys",
]


@dataclass(frozen=True)
class OracleAtLeastOneBoy:
    pass


@dataclass(frozen=True)
class OracleNamedBoy:
    pass


@dataclass(frozen=True)
class OracleFirstbornBoyNamed:
    pass


@dataclass(frozen=True)
class SchoolMeeting:
    """The principal asks families with a boy to leave; the answer is truthful."""


def _check_girl_weight(w) -> Fraction:
    w = as_rational(w)
    if not 0 <= w <= 1:
        raise ValueError(f"girl_weight must lie in [0, 1], got {w}")
    return w


@dataclass(frozen=True)
class Walk:
    """One child joins the walk: weight 1 per boy, ``girl_weight`` per girl."""

    girl_weight: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "girl_weight", _check_girl_weight(self.girl_weight))


@dataclass(frozen=True)
class WalkNamed:
    girl_weight: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "girl_weight", _check_girl_weight(self.girl_weight))


@dataclass(frozen=True)
class Draft:
    """Families with a boy send one; two-boy families flip a fair coin."""


Protocol = Union[
    OracleAtLeastOneBoy, OracleNamedBoy, OracleFirstbornBoyNamed, SchoolMeeting, Walk, WalkNamed, Draft
]

_ORACLES = (OracleAtLeastOneBoy, OracleNamedBoy, OracleFirstbornBoyNamed, SchoolMeeting)


class Episode(NamedTuple):
    """A family plus the index (0 older, 1 younger) of the child the protocol picked."""

    family: Family
    aux: Optional[int] = None

    @property
    def selected(self):
        return None if self.aux is None else self.family.children[self.aux]


def _selection(f: Family, protocol) -> list:
    """``(aux, weight)`` pairs for one family, weights summing to 1."""
    if isinstance(protocol, _ORACLES):
        return [(None, Fraction(1))]
    if isinstance(protocol, (Walk, WalkNamed)):
        raw = [Fraction(1) if c.is_boy else protocol.girl_weight for c in f.children]
        total = sum(raw)
        if total == 0:
            return [(None, Fraction(1))]
        return [(i, w / total) for i, w in enumerate(raw) if w != 0]
    if isinstance(protocol, Draft):
        boys = [i for i, c in enumerate(f.children) if c.is_boy]
        if not boys:
            return [(None, Fraction(1))]
        return [(i, Fraction(1, len(boys))) for i in boys]
    raise TypeError(f"unknown protocol {protocol!r}")


def episode_dist(model, protocol) -> FiniteDist:
    families = fam.family_dist(model)
    return dist(
        (Episode(f, aux), w * s) for f, w in families.items() for aux, s in _selection(f, protocol)
    )


def observed(protocol, target: int = fam.ADAM) -> Event:
    """The event the observer witnesses under ``protocol``."""
    if isinstance(protocol, (OracleAtLeastOneBoy, SchoolMeeting)):
        return fam.at_least_one_boy().on(_family)
    if isinstance(protocol, OracleNamedBoy):
        return fam.has_named_boy(target).on(_family)
    if isinstance(protocol, OracleFirstbornBoyNamed):
        return fam.firstborn_boy_named(target).on(_family)
    if isinstance(protocol, Walk):
        return Event(lambda e: e.aux is not None and e.selected.is_boy, "walks_with_boy")
    if isinstance(protocol, (WalkNamed, Draft)):
        label = "walks_with_named_boy" if isinstance(protocol, WalkNamed) else "registers_named_boy"
        return Event(
            lambda e: e.aux is not None and e.selected.is_boy and e.selected.name == target, label
        )
    raise TypeError(f"unknown protocol {protocol!r}")


def _family(e: Episode) -> Family:
    return e.family


def posterior_two_boys(model, protocol) -> Fraction:
    """P(two boys | observation) over the episode space."""
    target = model.alphabet.target
    return cond_prob(
        episode_dist(model, protocol), fam.two_boys().on(_family), observed(protocol, target)
    )
