"""Task-sampling schedules for multi-task training over the generators.

A TaskDistribution assigns each task its share of every training batch.
Three strategies are provided:

- uniform: every task equally likely;
- error: probability proportional to (ceiling - latest accuracy), so tasks
  with high error are over-sampled;
- momentum: probability proportional to the absolute accuracy change across
  a sliding window of checkpoints, floored at eps, with uniform sampling
  during the first `window` checkpoints.

Distributions update only at checkpoint boundaries; batch composition reads
an immutable snapshot, so batches may be composed concurrently with the next
update.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

REPLAY_TASK = "replay"


class Strategy(Enum):
    UNIFORM = "uniform"
    ERROR = "error"
    MOMENTUM = "momentum"


@dataclass(frozen=True)
class SamplerConfig:
    strategy: Strategy = Strategy.UNIFORM
    window: int = 4
    smoothing: int = 2
    eps: float = 0.002
    replay_lambda: float = 0.5
    ceiling: float | Mapping[str, float] = 1.0

    def __post_init__(self) -> None:
        if self.smoothing > self.window:
            raise ValueError("smoothing must not exceed the window")
        if self.smoothing < 1 or self.window < 1:
            raise ValueError("window and smoothing must be positive")
        if self.eps < 0:
            raise ValueError("eps must be non-negative")
        if not 0.0 <= self.replay_lambda <= 1.0:
            raise ValueError("replay probability must be in [0, 1]")


@dataclass(frozen=True)
class TaskDistribution:
    """Probability over tasks; entries non-negative and summing to one."""

    probs: tuple[tuple[str, float], ...]

    def __post_init__(self) -> None:
        if any(p < 0 for _, p in self.probs):
            raise ValueError("negative probability")
        total = sum(p for _, p in self.probs)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"probabilities sum to {total}")

    @property
    def tasks(self) -> tuple[str, ...]:
        return tuple(task for task, _ in self.probs)

    def prob(self, task: str) -> float:
        for name, p in self.probs:
            if name == task:
                return p
        raise KeyError(task)

    def as_dict(self) -> dict[str, float]:
        return dict(self.probs)

    def entropy(self) -> float:
        """Shannon entropy in nats."""
        return -sum(p * math.log(p) for _, p in self.probs if p > 0)


def _normalized(weights: Mapping[str, float]) -> TaskDistribution:
    total = sum(weights.values())
    return TaskDistribution(tuple((task, w / total) for task, w in weights.items()))


def uniform(tasks: Sequence[str]) -> TaskDistribution:
    if not tasks:
        raise ValueError("at least one task required")
    share = 1.0 / len(tasks)
    return TaskDistribution(tuple((task, share) for task in tasks))


def error_sampling(latest_acc: Mapping[str, float],
                   ceiling: float | Mapping[str, float] = 1.0) -> TaskDistribution:
    """P(s) proportional to Ceil(s) - Acc(s); uniform when no task has any
    headroom left."""
    deltas = {}
    for task, acc in latest_acc.items():
        ceil = ceiling[task] if isinstance(ceiling, Mapping) else ceiling
        if not 0.0 <= acc <= 1.0:
            raise ValueError(f"accuracy out of range for {task}: {acc}")
        deltas[task] = ceil - acc
    if any(d < 0 for d in deltas.values()):
        raise ValueError("accuracy above ceiling")
    if sum(deltas.values()) == 0:
        return uniform(list(latest_acc))
    return _normalized(deltas)


class AccuracyHistory:
    """Aligned per-task held-out accuracy series, one entry per checkpoint."""

    def __init__(self, tasks: Sequence[str]):
        if not tasks:
            raise ValueError("at least one task required")
        self.tasks = tuple(tasks)
        self._series: dict[str, list[float]] = {task: [] for task in self.tasks}

    def append(self, accuracies: Mapping[str, float]) -> None:
        if set(accuracies) != set(self.tasks):
            raise ValueError("checkpoint must report every task exactly once")
        for task in self.tasks:
            value = accuracies[task]
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"accuracy out of range for {task}: {value}")
            self._series[task].append(value)

    def __len__(self) -> int:
        return len(self._series[self.tasks[0]])

    def series(self, task: str) -> tuple[float, ...]:
        return tuple(self._series[task])

    def latest(self) -> dict[str, float]:
        if len(self) == 0:
            raise ValueError("no checkpoints recorded")
        return {task: self._series[task][-1] for task in self.tasks}


def momentum_sampling(history: AccuracyHistory, config: SamplerConfig) -> TaskDistribution:
    """Sample in proportion to the absolute accuracy change over the last
    `window` checkpoints, comparing the mean of the `smoothing` newest
    entries against the mean of the `smoothing` oldest entries in the
    window. Uniform during the first `window` checkpoints; every task keeps
    at least the eps floor, so plateaued runs return exactly uniform."""
    t = len(history)
    if config.eps >= 1.0 / len(history.tasks):
        raise ValueError("eps must stay below 1/num_tasks")
    if t < config.window:
        return uniform(history.tasks)
    weights = {}
    k = config.smoothing
    for task in history.tasks:
        window = history.series(task)[t - config.window:]
        head = sum(window[-k:]) / k
        tail = sum(window[:k]) / k
        weights[task] = max(abs(head - tail), config.eps)
    if all(w <= config.eps for w in weights.values()) or sum(weights.values()) == 0:
        # plateaued run: every task clamps to the floor, which is exactly
        # uniform (avoid float noise from dividing equal weights)
        return uniform(history.tasks)
    return _normalized(weights)


def on_checkpoint(history: AccuracyHistory, config: SamplerConfig) -> TaskDistribution:
    """Recompute the task distribution after a checkpoint evaluation."""
    if config.strategy is Strategy.UNIFORM:
        return uniform(history.tasks)
    if config.strategy is Strategy.ERROR:
        return error_sampling(history.latest(), config.ceiling)
    return momentum_sampling(history, config)


def compose_batch(dist: TaskDistribution, batch_size: int, replay_lambda: float,
                  seed: int, replay_task: str = REPLAY_TASK) -> tuple[str, ...]:
    """Plan one batch as a list of task slots.

    With probability `replay_lambda` the whole batch is the replay task
    (whose content is a caller-provided stream). Otherwise every task gets
    floor(batch_size * P(s)) slots and the leftover slots are awarded by a
    seeded systematic draw on the fractional remainders, so each task's
    chance of an extra slot equals its remainder and expected slot counts
    stay exactly batch_size * P(s). Ties between equal remainders are
    thereby broken by the seed. The final slot order is shuffled.
    """
    if batch_size < 1:
        raise ValueError("batch_size must be positive")
    rng = random.Random(seed)
    if rng.random() < replay_lambda:
        return (replay_task,) * batch_size

    quotas = [(task, batch_size * p) for task, p in dist.probs]
    counts = {task: int(quota) for task, quota in quotas}
    leftover = batch_size - sum(counts.values())
    if leftover:
        remainders = [(task, quota - int(quota)) for task, quota in quotas]
        total = sum(r for _, r in remainders)
        mark = rng.random() * total / leftover
        step = total / leftover
        cumulative = 0.0
        for task, remainder in remainders:
            cumulative += remainder
            while mark < cumulative and leftover:
                counts[task] += 1
                leftover -= 1
                mark += step
        # float shortfall can leave a slot unawarded; give it to the largest
        # remainders
        if leftover:
            for task, _r in sorted(remainders, key=lambda item: -item[1])[:leftover]:
                counts[task] += 1
    slots = [task for task, n in counts.items() for _ in range(n)]
    rng.shuffle(slots)
    return tuple(slots)


def read_accuracy_feed(lines: Iterable[str]) -> AccuracyHistory:
    """Parse a checkpoint feed of tab-separated (checkpoint, task, accuracy)
    records, grouped by checkpoint index in ascending order."""
    grouped: dict[int, dict[str, float]] = {}
    for line in lines:
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        fields = text.split("\t")
        if len(fields) != 3:
            raise ValueError(f"expected 3 tab-separated fields: {text!r}")
        index, task, acc = int(fields[0]), fields[1], float(fields[2])
        grouped.setdefault(index, {})[task] = acc
    if not grouped:
        raise ValueError("empty accuracy feed")
    first = min(grouped)
    history = AccuracyHistory(sorted(grouped[first]))
    for index in sorted(grouped):
        history.append(grouped[index])
    return history


def replay_feed(history: AccuracyHistory, config: SamplerConfig) -> list[tuple[int, TaskDistribution]]:
    """Drive the configured strategy over a recorded accuracy feed,
    returning the distribution after each checkpoint."""
    out = []
    partial = AccuracyHistory(history.tasks)
    for i in range(len(history)):
        partial.append({task: history.series(task)[i] for task in history.tasks})
        out.append((i + 1, on_checkpoint(partial, config)))
    return out


def format_distribution_trace(checkpoint: int, dist: TaskDistribution) -> list[str]:
    """Tab-separated (checkpoint, task, probability) lines."""
    return [f"{checkpoint}\t{task}\t{p:.10g}" for task, p in dist.probs]
