"""Named puzzle variants, their known closed forms, and the darts counterexample."""
from __future__ import annotations

import decimal
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from . import family as fam
from . import protocols as proto
from .prob import Event, PartitionReport, as_rational, partition_check, uniform

__all__ = [
    "ScenarioId",
    "ScenarioParams",
    "Report",
    "POSTERIOR_SCENARIOS",
    "DARTS_SCENARIOS",
    "scenario_id",
    "wiring",
    "closed_form",
    "run",
    "darts_demo",
    "darts_space",
    "render_decimal",
]


class ScenarioId(str, Enum):
    TWO_CHILD = "two_child"
    ADAM = "adam"
    ADAM_WITHOUT_REPLACEMENT = "adam_without_replacement"
    ADAM_WEIGHTED = "adam_weighted"
    SCHOOL_MEETING = "school_meeting"
    WALK = "walk"
    WALK_BIASED = "walk_biased"
    WALK_NAMED = "walk_named"
    DRAFT = "draft"
    FIRSTBORN_NAMED = "firstborn_named"
    DARTS_OVERLAPPING = "darts_overlapping"
    DARTS_DISJOINT = "darts_disjoint"

    def __str__(self) -> str:
        return self.value


DARTS_SCENARIOS = frozenset({ScenarioId.DARTS_OVERLAPPING, ScenarioId.DARTS_DISJOINT})
POSTERIOR_SCENARIOS = tuple(s for s in ScenarioId if s not in DARTS_SCENARIOS)

_DEFAULT_GIRL_WEIGHT = {
    ScenarioId.WALK: Fraction(1),
    ScenarioId.WALK_BIASED: Fraction(0),
    ScenarioId.WALK_NAMED: Fraction(1),
}


def scenario_id(value) -> ScenarioId:
    try:
        return ScenarioId(str(value))
    except ValueError:
        known = ", ".join(s.value for s in ScenarioId)
        raise ValueError(f"unknown scenario {value!r} (known: {known})") from None


@dataclass(frozen=True)
class ScenarioParams:
    """Knobs shared by the presets. Unused fields are ignored by a scenario.

    ``weights`` defaults to ten equally likely names; ``girl_weight`` of
    ``None`` means the scenario's own default (1 for walks, 0 for the biased walk).
    """

    p: Fraction = Fraction(1, 50)
    n: int = 10
    weights: tuple = ()
    labels: tuple = ()
    target: Optional[str] = None
    girl_weight: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "p", as_rational(self.p))
        if self.girl_weight is not None:
            object.__setattr__(self, "girl_weight", as_rational(self.girl_weight))
        object.__setattr__(self, "weights", tuple(as_rational(w) for w in self.weights))
        object.__setattr__(self, "labels", tuple(self.labels))

    def weighted_model(self) -> fam.WeightedBoost:
        weights = self.weights or (Fraction(1, 10),) * 10
        labels = self.labels or ("Adam",) + tuple(f"name{k}" for k in range(1, len(weights)))
        target = labels.index(self.target) if self.target is not None else 0
        return fam.WeightedBoost(weights, labels, target)

    def girl_weight_for(self, s: ScenarioId) -> Fraction:
        if self.girl_weight is not None:
            return self.girl_weight
        return _DEFAULT_GIRL_WEIGHT.get(s, Fraction(1))


def wiring(s: ScenarioId, params: ScenarioParams = ScenarioParams()):
    """Return the ``(naming model, protocol)`` pair a posterior scenario uses."""
    s = scenario_id(s)
    if s in DARTS_SCENARIOS:
        raise ValueError(f"{s} is a partition demo, not a posterior scenario")
    if s is ScenarioId.ADAM_WITHOUT_REPLACEMENT:
        return fam.UniformWithoutReplacement(params.n), proto.OracleNamedBoy()
    if s is ScenarioId.ADAM_WEIGHTED:
        return params.weighted_model(), proto.OracleNamedBoy()

    model = fam.BernoulliNoDup(params.p)
    protocol = {
        ScenarioId.TWO_CHILD: proto.OracleAtLeastOneBoy,
        ScenarioId.ADAM: proto.OracleNamedBoy,
        ScenarioId.SCHOOL_MEETING: proto.SchoolMeeting,
        ScenarioId.DRAFT: proto.Draft,
        ScenarioId.FIRSTBORN_NAMED: proto.OracleFirstbornBoyNamed,
    }.get(s)
    if protocol is not None:
        return model, protocol()
    gw = params.girl_weight_for(s)
    if s is ScenarioId.WALK_NAMED:
        return model, proto.WalkNamed(gw)
    return model, proto.Walk(gw)


def closed_form(s: ScenarioId, params: ScenarioParams = ScenarioParams()) -> Optional[Fraction]:
    """The textbook answer where one is known in closed form, else ``None``."""
    s = scenario_id(s)
    if s in DARTS_SCENARIOS:
        return None
    wiring(s, params)  # validates params
    p = params.p
    third, half = Fraction(1, 3), Fraction(1, 2)
    if s in (ScenarioId.TWO_CHILD, ScenarioId.SCHOOL_MEETING, ScenarioId.FIRSTBORN_NAMED):
        return third
    if s in (ScenarioId.WALK, ScenarioId.WALK_BIASED):
        gw = params.girl_weight_for(s)
        return {Fraction(1): half, Fraction(0): third}.get(gw)
    if s is ScenarioId.ADAM:
        return (1 - p / 2) / (2 - p / 2)
    if s is ScenarioId.WALK_NAMED:
        return (1 - p / 2) / (2 - p / 2) if params.girl_weight_for(s) == 1 else None
    if s is ScenarioId.ADAM_WITHOUT_REPLACEMENT:
        return half
    if s is ScenarioId.DRAFT:
        return (1 - p / 2) / (3 - p / 2)
    return None


def render_decimal(q: Fraction, digits: int = 10) -> str:
    """Round ``q`` to ``digits`` significant digits, half-even, in plain notation."""
    q = Fraction(q)
    if q == 0:
        return "0"
    ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN)
    d = ctx.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator))
    d = d.quantize(decimal.Decimal(1).scaleb(d.adjusted() - digits + 1), context=ctx)
    return format(d, "f")


@dataclass(frozen=True)
class Report:
    scenario: ScenarioId
    exact: Fraction
    closed_form: Optional[Fraction]
    match: bool
    decimal: str
    partition: Optional[PartitionReport] = field(default=None, compare=False)


def run(s: ScenarioId, params: ScenarioParams = ScenarioParams()) -> Report:
    """Solve a scenario by exhaustive enumeration and compare with its closed form.

    Darts scenarios report P(E) from the partition check.
    """
    s = scenario_id(s)
    if s in DARTS_SCENARIOS:
        report = darts_demo("overlapping" if s is ScenarioId.DARTS_OVERLAPPING else "disjoint")
        return Report(s, report.p_of_e, None, True, render_decimal(report.p_of_e), report)
    model, protocol = wiring(s, params)
    exact = proto.posterior_two_boys(model, protocol)
    cf = closed_form(s, params)
    return Report(s, exact, cf, cf is None or cf == exact, render_decimal(exact))


GRID = 4


def darts_space():
    """The unit square as a 4x4 grid of equal cells ``(column, row)``, row 0 at the bottom."""
    return uniform((i, j) for i in range(GRID) for j in range(GRID))


def _region(label: str, test) -> Event:
    return Event(lambda c: test(*c), label)


def darts_demo(variant: str) -> PartitionReport:
    """Run the partition check on one of the two dartboard set-ups.

    ``overlapping``: E is the upper-right quadrant, F1 misses only the
    lower-left quadrant and F2 only the lower-right one. ``disjoint``: E is
    the centred square of area 1/4, F1 and F2 the left and right halves.
    """
    half = GRID // 2
    if variant == "overlapping":
        target = _region("E", lambda i, j: i >= half and j >= half)
        parts = [
            _region("F1", lambda i, j: not (i < half and j < half)),
            _region("F2", lambda i, j: not (i >= half and j < half)),
        ]
    elif variant == "disjoint":
        target = _region("E", lambda i, j: 1 <= i <= 2 and 1 <= j <= 2)
        parts = [
            _region("F1", lambda i, j: i < half),
            _region("F2", lambda i, j: i >= half),
        ]
    else:
        raise ValueError(f"unknown darts variant {variant!r}")
    return partition_check(darts_space(), target, parts)
