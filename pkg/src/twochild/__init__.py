"""Exact posteriors and Monte Carlo checks for the two-child puzzle and its variants."""
from .prob import (
    Event,
    FiniteDist,
    PartitionReport,
    ZeroProbabilityError,
    cond_prob,
    condition,
    dist,
    partition_check,
    prob,
    product,
    pushforward,
    rational,
)
from .scenarios import ScenarioId, ScenarioParams, closed_form, darts_demo, run

__version__ = "0.1.0"
