"""Pseudo-language fact rendering and context assembly.

A fact verbalizes the relation between a subject column and a key column for
the rows sharing one key value:

    The Attendance when the Round was QF was 34,178
    The attendances when the opponent was Walsall were 5,666 and 10,037

Singular facts keep column names as they appear in the header; aggregated
(plural) facts lowercase them and pluralize the subject. A fact always lists
the complete set of subject values for its key value, in row order and with
duplicates preserved, so every rendered fact is a true, complete statement
about the table.

A context is a seed-shuffled mix of the gold facts required by one question
and distractor facts drawn from cells the question does not touch, prefixed
with the table and page titles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .tables import TypedTable

# Distractor count is drawn uniformly from this range; the resulting corpus
# mean of 5.0 tracks the target distribution.
DISTRACTORS_MIN = 2
DISTRACTORS_MAX = 8
CONTEXT_WORD_CAP = 200

_IRREGULAR_PLURALS = {
    "person": "people",
    "child": "children",
    "man": "men",
    "woman": "women",
    "foot": "feet",
}


def pluralize(word: str) -> str:
    """Naive pluralization with a small irregular table. Words already ending
    in "s" are left alone (most header names arrive singular)."""
    if not word:
        return word
    lowered = word.lower()
    if lowered in _IRREGULAR_PLURALS:
        return _IRREGULAR_PLURALS[lowered]
    if lowered.endswith("s"):
        return word
    if lowered.endswith(("x", "z", "ch", "sh")):
        return word + "es"
    if lowered.endswith("y") and len(lowered) > 1 and lowered[-2] not in "aeiou":
        return word[:-1] + "ies"
    return word + "s"


class FactKind(Enum):
    GOLD = "gold"
    DISTRACTOR = "distractor"


@dataclass(frozen=True)
class FactPlan:
    """One fact to verbalize: subject column, one or two key columns, and the
    rows whose subject values the fact lists. Key values are read from the
    first row. Two key columns produce the combined conjunctive form."""

    subject: int
    keys: tuple[int, ...]
    rows: tuple[int, ...]


@dataclass(frozen=True)
class GoldSpec:
    """The cells a question needs and the plan for verbalizing them.

    The verbalized plan facts alone suffice to answer the question; `cells`
    is the union of every (row, column) the plans touch, and distractors must
    avoid all of them.
    """

    cells: frozenset[tuple[int, int]]
    plans: tuple[FactPlan, ...]


def gold_spec(plans: list[FactPlan] | tuple[FactPlan, ...]) -> GoldSpec:
    cells = set()
    for plan in plans:
        for r in plan.rows:
            cells.add((r, plan.subject))
            for key in plan.keys:
                cells.add((r, key))
    return GoldSpec(frozenset(cells), tuple(plans))


@dataclass(frozen=True)
class Fact:
    text: str
    kind: FactKind
    cells: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class Context:
    prefix: str
    facts: tuple[Fact, ...]
    rendered: str


@dataclass(frozen=True)
class ContextConfig:
    distractors_min: int = DISTRACTORS_MIN
    distractors_max: int = DISTRACTORS_MAX
    word_cap: int = CONTEXT_WORD_CAP


def _join_values(values: list[str]) -> str:
    if len(values) == 1:
        return values[0]
    return ", ".join(values[:-1]) + " and " + values[-1]


def _plan_cells(plan: FactPlan) -> frozenset[tuple[int, int]]:
    cells = set()
    for r in plan.rows:
        cells.add((r, plan.subject))
        for key in plan.keys:
            cells.add((r, key))
    return frozenset(cells)


def _render_plan(table: TypedTable, plan: FactPlan, kind: FactKind) -> Fact:
    subject_name = table.column_name(plan.subject)
    values = [table.raw(r, plan.subject) for r in plan.rows]
    first = plan.rows[0]
    plural = len(plan.rows) > 1
    if plural:
        subject_surface = pluralize(subject_name.lower())
        key_surfaces = [table.column_name(k).lower() for k in plan.keys]
        verb = "were"
    else:
        subject_surface = subject_name
        key_surfaces = [table.column_name(k) for k in plan.keys]
        verb = "was"
    conditions = " and ".join(
        f"the {surface} was {table.raw(first, key)}"
        for surface, key in zip(key_surfaces, plan.keys)
    )
    text = f"The {subject_surface} when {conditions} {verb} {_join_values(values)}"
    return Fact(text, kind, _plan_cells(plan))


def render_fact(table: TypedTable, subject_col: int, key_col: int,
                key_rows: tuple[int, ...]) -> Fact:
    """Verbalize the subject column over `key_rows`, keyed by the value the
    key column holds in those rows. Singular for one row, aggregated plural
    for several."""
    return _render_plan(table, FactPlan(subject_col, (key_col,), tuple(key_rows)), FactKind.GOLD)


def _fact_pool(table: TypedTable) -> list[tuple[FactPlan, frozenset]]:
    """Every complete single-key fact the table can express, with its cell
    footprint. Cached on the table; the distractor picker filters it per
    example."""
    pool = getattr(table, "_fact_pool", None)
    if pool is None:
        pool = []
        for key_col in range(table.n_cols):
            for subject_col in range(table.n_cols):
                if subject_col == key_col:
                    continue
                for _value, rows in table.groups(key_col).items():
                    if any(not table.raw(r, subject_col) for r in rows):
                        continue
                    plan = FactPlan(subject_col, (key_col,), rows)
                    pool.append((plan, _plan_cells(plan)))
        table._fact_pool = pool
    return pool


def _distractor_plans(table: TypedTable, gold: GoldSpec) -> tuple[list[FactPlan], list[FactPlan]]:
    """Candidate distractor facts, split into a preferred tier reusing the
    gold facts' column pairs (other rows) and a fallback tier over other
    column pairs. Every candidate is a complete, true fact whose cells are
    disjoint from the gold cells."""
    gold_pairs = {(plan.subject, plan.keys[0]) for plan in gold.plans if len(plan.keys) == 1}
    preferred: list[FactPlan] = []
    fallback: list[FactPlan] = []
    for plan, cells in _fact_pool(table):
        if cells & gold.cells:
            continue
        tier = preferred if (plan.subject, plan.keys[0]) in gold_pairs else fallback
        tier.append(plan)
    return preferred, fallback


def build_context(table: TypedTable, gold: GoldSpec, seed: int,
                  config: ContextConfig = ContextConfig()) -> Context:
    """Assemble the context for one example.

    Gold facts are always all present; the distractor count is drawn from the
    configured range, trimmed when the table runs out of disjoint material or
    the word cap is reached. The final order is a seed-determined shuffle.
    """
    rng = random.Random(seed)
    gold_facts = [_render_plan(table, plan, FactKind.GOLD) for plan in gold.plans]

    wanted = rng.randint(config.distractors_min, config.distractors_max)
    preferred, fallback = _distractor_plans(table, gold)
    rng.shuffle(preferred)
    rng.shuffle(fallback)

    prefix = f"In {table.meta.table_title} of {table.meta.page_title}: "
    words = len(prefix.split()) + sum(len(f.text.split()) for f in gold_facts)
    distractors: list[Fact] = []
    for plan in preferred + fallback:
        if len(distractors) >= wanted:
            break
        fact = _render_plan(table, plan, FactKind.DISTRACTOR)
        cost = len(fact.text.split())
        if words + cost > config.word_cap:
            continue
        words += cost
        distractors.append(fact)

    facts = gold_facts + distractors
    rng.shuffle(facts)
    rendered = prefix + ". ".join(f.text for f in facts) + "."
    return Context(prefix, tuple(facts), rendered)
