"""Exact finite probability over hashable outcomes.

Weights are :class:`fractions.Fraction` values throughout; nothing in this
module ever touches a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Generic, Hashable, Iterable, Iterator, Optional, TypeVar

__all__ = [
    "Rational",
    "ZeroProbabilityError",
    "rational",
    "as_rational",
    "Event",
    "FiniteDist",
    "dist",
    "uniform",
    "point_mass",
    "prob",
    "cond_prob",
    "condition",
    "product",
    "pushforward",
    "PartitionReport",
    "partition_check",
]

Rational = Fraction

T = TypeVar("T", bound=Hashable)
U = TypeVar("U", bound=Hashable)


class ZeroProbabilityError(ValueError):
    """Raised when conditioning on an event of probability zero."""


def rational(num: int, den: int = 1) -> Fraction:
    """Return the reduced fraction ``num/den`` with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError(f"rational with zero denominator: {num}/0")
    return Fraction(num, den)


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction.

    Floats and decimal strings are refused so exactness cannot leak out.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not probabilities")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"malformed rational {value!r}; expected 'num/den' or an integer") from None
        return rational(n, d)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


class Event(Generic[T]):
    """A labelled total predicate over outcomes.

    Events compose with ``&``, ``|`` and ``~``.
    """

    __slots__ = ("_fn", "label")

    def __init__(self, fn: Callable[[T], bool], label: str = "event"):
        self._fn = fn
        self.label = label

    def __call__(self, outcome: T) -> bool:
        return bool(self._fn(outcome))

    def __and__(self, other: "Event[T]") -> "Event[T]":
        return Event(lambda w: self(w) and other(w), f"({self.label} & {other.label})")

    def __or__(self, other: "Event[T]") -> "Event[T]":
        return Event(lambda w: self(w) or other(w), f"({self.label} | {other.label})")

    def __invert__(self) -> "Event[T]":
        return Event(lambda w: not self(w), f"~{self.label}")

    def on(self, f: Callable[[U], T]) -> "Event[U]":
        """Pull this event back along ``f``."""
        return Event(lambda w: self(f(w)), self.label)

    def __repr__(self) -> str:
        return f"Event({self.label})"

    @classmethod
    def always(cls) -> "Event":
        return cls(lambda _w: True, "always")

    @classmethod
    def never(cls) -> "Event":
        return cls(lambda _w: False, "never")


class FiniteDist(Generic[T]):
    """Immutable distribution with finite support and exact weights summing to 1.

    Build instances with :func:`dist`; the constructor trusts its input.
    """

    __slots__ = ("_weights",)

    def __init__(self, weights: dict):
        self._weights = weights

    @property
    def support(self) -> tuple:
        return tuple(self._weights.items())

    def outcomes(self) -> tuple:
        return tuple(self._weights)

    def weight(self, outcome: T) -> Fraction:
        return self._weights.get(outcome, Fraction(0))

    def items(self) -> Iterator[tuple]:
        return iter(self._weights.items())

    def __len__(self) -> int:
        return len(self._weights)

    def __iter__(self) -> Iterator[T]:
        return iter(self._weights)

    def __contains__(self, outcome) -> bool:
        return outcome in self._weights

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteDist):
            return NotImplemented
        return self._weights == other._weights

    def __hash__(self) -> int:
        return hash(frozenset(self._weights.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{k!r}: {v}" for k, v in self._weights.items())
        return f"FiniteDist({{{body}}})"

    def map(self, f: Callable[[T], U]) -> "FiniteDist[U]":
        return pushforward(self, f)


def _merge(pairs: Iterable[tuple]) -> dict:
    merged: dict = {}
    for outcome, w in pairs:
        w = as_rational(w)
        if w < 0:
            raise ValueError(f"negative weight {w} for outcome {outcome!r}")
        merged[outcome] = merged.get(outcome, Fraction(0)) + w
    return merged


def dist(pairs: Iterable[tuple]) -> FiniteDist:
    """Build a distribution from ``(outcome, weight)`` pairs.

    Duplicate outcomes are merged and the weights normalised. Zero-weight
    outcomes are dropped from the support.
    """
    merged = _merge(pairs)
    total = sum(merged.values(), Fraction(0))
    if total == 0:
        raise ValueError("total weight must be positive")
    return FiniteDist({k: w / total for k, w in merged.items() if w != 0})


def uniform(outcomes: Iterable) -> FiniteDist:
    return dist((o, 1) for o in outcomes)


def point_mass(outcome) -> FiniteDist:
    return FiniteDist({outcome: Fraction(1)})


def prob(d: FiniteDist, event: Callable) -> Fraction:
    return sum((w for o, w in d.items() if event(o)), Fraction(0))


def cond_prob(d: FiniteDist, event: Callable, given: Callable) -> Fraction:
    """P(event | given) as an exact fraction."""
    denom = prob(d, given)
    if denom == 0:
        raise ZeroProbabilityError(f"conditioning event {_label(given)} has probability zero")
    joint = sum((w for o, w in d.items() if given(o) and event(o)), Fraction(0))
    return joint / denom


def condition(d: FiniteDist, given: Callable) -> FiniteDist:
    kept = [(o, w) for o, w in d.items() if given(o)]
    if not kept:
        raise ZeroProbabilityError(f"conditioning event {_label(given)} has probability zero")
    return dist(kept)


def product(d1: FiniteDist, d2: FiniteDist) -> FiniteDist:
    return FiniteDist({(a, b): wa * wb for a, wa in d1.items() for b, wb in d2.items()})


def pushforward(d: FiniteDist, f: Callable) -> FiniteDist:
    out: dict = {}
    for o, w in d.items():
        key = f(o)
        out[key] = out.get(key, Fraction(0)) + w
    return FiniteDist(out)


def _label(event) -> str:
    return getattr(event, "label", repr(event))


@dataclass(frozen=True)
class PartitionReport:
    """Outcome of checking a candidate partition against an event.

    ``per_part`` holds ``(P(F_k), P(E | F_k))`` with ``None`` for parts of
    probability zero.
    """

    disjoint: bool
    covering: bool
    per_part: tuple
    total_prob_identity: Fraction
    p_of_e: Fraction
    constant_conditional: Optional[Fraction]
    labels: tuple = ()

    @property
    def law_applies(self) -> bool:
        """True when the parts are disjoint, covering and share one conditional."""
        return self.disjoint and self.covering and self.constant_conditional is not None


def partition_check(d: FiniteDist, event: Callable, parts: list) -> PartitionReport:
    """Check whether ``parts`` partition the space and how ``event`` splits across them.

    Overlaps of probability zero still count as disjoint.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("partition_check needs at least one part")

    disjoint = all(
        prob(d, lambda w, a=fa, b=fb: a(w) and b(w)) == 0 for fa, fb in combinations(parts, 2)
    )
    covering = prob(d, lambda w: not any(f(w) for f in parts)) == 0

    per_part = []
    for f in parts:
        pf = prob(d, f)
        per_part.append((pf, cond_prob(d, event, f) if pf > 0 else None))

    defined = [c for _, c in per_part if c is not None]
    constant = defined[0] if defined and all(c == defined[0] for c in defined) else None
    total = sum((pf * c for pf, c in per_part if c is not None), Fraction(0))
    p_of_e = prob(d, event)

    if disjoint and covering:
        # law of total probability; failing here means a bug in prob()
        assert total == p_of_e, (total, p_of_e)
        if constant is not None:
            assert p_of_e == constant, (p_of_e, constant)

    return PartitionReport(
        disjoint=disjoint,
        covering=covering,
        per_part=tuple(per_part),
        total_prob_identity=total,
        p_of_e=p_of_e,
        constant_conditional=constant,
        labels=tuple(_label(f) for f in parts),
    )
