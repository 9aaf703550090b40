"""Seeded, chunked Monte Carlo estimates of the same posteriors.

Trials are grouped into fixed blocks of ``BLOCK`` families. Block ``k`` is
driven by its own PCG64 stream seeded from ``SeedSequence(seed, spawn_key=(k,))``,
so the counters depend only on ``(seed, trials)`` and never on how many
workers share the blocks. Workers take contiguous runs of blocks.

Bernoulli and categorical draws compare a uniform integer on ``[0, den)``
against exact numerators, so a probability such as 1/50 is hit with
probability exactly 1/50.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import family as fam
from . import protocols as proto
from .prob import as_rational
from .scenarios import DARTS_SCENARIOS, ScenarioParams, scenario_id, wiring

__all__ = [
    "BLOCK",
    "McConfig",
    "McEstimate",
    "EmptyConditionError",
    "UnsupportedScenarioError",
    "block_stream",
    "bernoulli_draw",
    "bernoulli_draws",
    "categorical_draws",
    "merge",
    "simulate",
    "simulate_model",
]

BLOCK = 1 << 16
_INT64_SAFE = 1 << 62


class EmptyConditionError(ArithmeticError):
    """No trial satisfied the observation, so the ratio is undefined."""

    def __init__(self, estimate: "McEstimate"):
        super().__init__(f"observation never occurred in {estimate.trials} trials; ratio undefined")
        self.estimate = estimate


class UnsupportedScenarioError(ValueError):
    pass


@dataclass(frozen=True)
class McConfig:
    trials: int
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class McEstimate:
    """Counters: ``a`` trials with observation and two boys, ``b`` with the observation."""

    a: int = 0
    b: int = 0
    trials: int = 0

    def __post_init__(self):
        if not 0 <= self.a <= self.b <= self.trials:
            raise ValueError(f"inconsistent counters a={self.a} b={self.b} trials={self.trials}")

    @property
    def ratio(self) -> Optional[float]:
        return self.a / self.b if self.b else None

    @property
    def stderr(self) -> Optional[float]:
        r = self.ratio
        return None if r is None else math.sqrt(r * (1 - r) / self.b)

    def sigma_distance(self, exact: Fraction) -> float:
        """``|ratio - exact| / stderr``; infinite if the stderr is zero and they differ."""
        if self.b == 0:
            raise EmptyConditionError(self)
        diff = abs(Fraction(self.a, self.b) - exact)
        if diff == 0:
            return 0.0
        se = self.stderr
        return float(diff) / se if se else math.inf

    def __add__(self, other: "McEstimate") -> "McEstimate":
        return merge(self, other)


def merge(e1: McEstimate, e2: McEstimate) -> McEstimate:
    return McEstimate(e1.a + e2.a, e1.b + e2.b, e1.trials + e2.trials)


def block_stream(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))


def _exact_below(rng: np.random.Generator, den: int) -> int:
    """Uniform integer on ``[0, den)`` for any size of ``den``, by rejection on random bits."""
    bits = den.bit_length()
    nbytes = (bits + 7) // 8
    while True:
        x = int.from_bytes(rng.bytes(nbytes), "little") >> (8 * nbytes - bits)
        if x < den:
            return x


def bernoulli_draw(rng: np.random.Generator, p) -> bool:
    p = as_rational(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability out of range: {p}")
    if p == 0 or p == 1:
        return p == 1
    if p.denominator < _INT64_SAFE:
        return int(rng.integers(0, p.denominator)) < p.numerator
    return _exact_below(rng, p.denominator) < p.numerator


def bernoulli_draws(rng: np.random.Generator, p, size: int) -> np.ndarray:
    p = as_rational(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability out of range: {p}")
    if p == 0 or p == 1:
        return np.full(size, p == 1, dtype=bool)
    if p.denominator < _INT64_SAFE:
        return rng.integers(0, p.denominator, size=size, dtype=np.int64) < p.numerator
    return np.fromiter((bernoulli_draw(rng, p) for _ in range(size)), dtype=bool, count=size)


def categorical_draws(rng: np.random.Generator, weights, size: int) -> np.ndarray:
    """Indices drawn with exact rational ``weights`` (summing to 1)."""
    weights = [as_rational(w) for w in weights]
    den = math.lcm(*(w.denominator for w in weights))
    cum = np.cumsum([int(w * den) for w in weights], dtype=object)
    if den < _INT64_SAFE:
        u = rng.integers(0, den, size=size, dtype=np.int64)
        return np.searchsorted(cum.astype(np.int64), u, side="right")
    u = [_exact_below(rng, den) for _ in range(size)]
    return np.array([int(np.searchsorted(cum, x, side="right")) for x in u], dtype=np.int64)


def _names(rng, model, boy1, boy2, m):
    """Name arrays for both children; girls get -1."""
    if isinstance(model, (fam.BernoulliNoDup, fam.BernoulliDupAllowed)):
        u1 = bernoulli_draws(rng, model.p, m)
        u2 = bernoulli_draws(rng, model.p, m)
        adam1 = boy1 & u1
        adam2 = boy2 & u2
        if isinstance(model, fam.BernoulliNoDup):
            adam2 &= ~adam1
        k1 = np.where(adam1, fam.ADAM, fam.OTHER)
        k2 = np.where(adam2, fam.ADAM, fam.OTHER)
    elif isinstance(model, fam.UniformWithoutReplacement):
        first = rng.integers(0, model.n, size=m)
        rest = rng.integers(0, model.n - 1, size=m)
        rest += rest >= first
        k1 = first
        # a boy with an older sister is his family's first boy
        k2 = np.where(boy1, rest, first)
    elif isinstance(model, fam.WeightedBoost):
        first = categorical_draws(rng, model.weights, m)
        second = categorical_draws(rng, model.weights, m)
        clash = np.flatnonzero(boy1 & boy2 & (second == first))
        while clash.size:
            second[clash] = categorical_draws(rng, model.weights, clash.size)
            clash = clash[second[clash] == first[clash]]
        k1 = first
        k2 = np.where(boy1, second, first)
    else:
        raise TypeError(f"unknown naming model {model!r}")
    return np.where(boy1, k1, -1), np.where(boy2, k2, -1)


def _observation(rng, protocol, target, boy1, boy2, name1, name2, m):
    if isinstance(protocol, (proto.OracleAtLeastOneBoy, proto.SchoolMeeting)):
        return boy1 | boy2
    if isinstance(protocol, proto.OracleNamedBoy):
        return (name1 == target) | (name2 == target)
    if isinstance(protocol, proto.OracleFirstbornBoyNamed):
        return np.where(boy1, name1 == target, name2 == target)
    coin = rng.integers(0, 2, size=m, dtype=np.int8).astype(bool)
    mixed = boy1 != boy2
    boy_is_second = ~boy1
    if isinstance(protocol, (proto.Walk, proto.WalkNamed)):
        takes_boy = bernoulli_draws(rng, 1 / (1 + protocol.girl_weight), m)
        second = np.where(mixed, takes_boy == boy_is_second, coin)
        walked = ~(~boy1 & ~boy2) | (protocol.girl_weight > 0)
    elif isinstance(protocol, proto.Draft):
        second = np.where(mixed, boy_is_second, coin)
        walked = boy1 | boy2
    else:
        raise TypeError(f"unknown protocol {protocol!r}")
    sel_boy = np.where(second, boy2, boy1) & walked
    if isinstance(protocol, proto.Walk):
        return sel_boy
    return sel_boy & (np.where(second, name2, name1) == target)


def _run_block(model, protocol, seed: int, block: int, m: int) -> McEstimate:
    rng = block_stream(seed, block)
    boy1 = rng.integers(0, 2, size=m, dtype=np.int8).astype(bool)
    boy2 = rng.integers(0, 2, size=m, dtype=np.int8).astype(bool)
    name1, name2 = _names(rng, model, boy1, boy2, m)
    obs = _observation(rng, protocol, model.alphabet.target, boy1, boy2, name1, name2, m)
    hits = obs & boy1 & boy2
    return McEstimate(int(hits.sum()), int(obs.sum()), m)


def _run_blocks(model, protocol, cfg: McConfig, blocks) -> McEstimate:
    total = McEstimate()
    for k in map(int, blocks):
        m = min(BLOCK, cfg.trials - k * BLOCK)
        total = merge(total, _run_block(model, protocol, cfg.seed, k, m))
    return total


def simulate_model(model, protocol, cfg: McConfig, *, allow_empty: bool = False) -> McEstimate:
    """Estimate P(two boys | observation) for an explicit model and protocol."""
    nblocks = -(-cfg.trials // BLOCK)
    chunks = [c for c in np.array_split(np.arange(nblocks), cfg.workers) if c.size]
    if len(chunks) == 1:
        parts = [_run_blocks(model, protocol, cfg, chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(lambda c: _run_blocks(model, protocol, cfg, c), chunks))
    est = McEstimate()
    for part in parts:
        est = merge(est, part)
    if est.b == 0 and not allow_empty:
        raise EmptyConditionError(est)
    return est


def simulate(s, params: ScenarioParams = ScenarioParams(), cfg: McConfig = McConfig(10**6)) -> McEstimate:
    s = scenario_id(s)
    if s in DARTS_SCENARIOS:
        raise UnsupportedScenarioError(f"{s} has no Monte Carlo form")
    model, protocol = wiring(s, params)
    return simulate_model(model, protocol, cfg)
