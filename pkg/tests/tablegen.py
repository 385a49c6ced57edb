"""Seeded synthetic table dumps for tests and the acceptance corpus.

The schemas are chosen so every generator can fire: a unique name column for
anchors, a repeating group column for filters and quantifiers, two numeric
columns, and a full-precision date column with distinct values. Cell values
avoid ", ", " and ", " or " and " was " so that rendered facts and questions
parse back unambiguously.
"""

from __future__ import annotations

import json
import random

_NAMES = [
    "Arden", "Basel", "Corin", "Dorset", "Elgin", "Fenwick", "Galway", "Harlow",
    "Ibiza", "Jutland", "Kendal", "Lisbon", "Malmo", "Nantes", "Orebro", "Pavia",
    "Quimper", "Rostock", "Seville", "Tromso", "Utrecht", "Verona", "Weimar",
    "Xanthi", "Ypres", "Zagreb",
]
_GROUPS = ["North", "South", "East", "West", "Central", "Coastal", "Highland", "Valley"]
_STATUSES = ["Open", "Closed", "Planned", "Paused"]


def make_table(index: int, seed: int = 0, min_rows: int = 10, max_rows: int = 16) -> dict:
    """One synthetic table record, deterministic in (index, seed)."""
    rng = random.Random((seed << 20) ^ index)
    n_rows = rng.randint(min_rows, max_rows)

    group_pool = rng.sample(_GROUPS, rng.randint(2, 4))
    # A heavily skewed group column makes some most/every questions true.
    skew = rng.random() < 0.5
    status_pool = [rng.choice(_STATUSES)] if rng.random() < 0.15 else rng.sample(
        _STATUSES, rng.randint(2, 3))

    names = rng.sample(_NAMES, min(n_rows, len(_NAMES)))
    while len(names) < n_rows:
        names.append(f"{rng.choice(_NAMES)}-{len(names):02d}")

    scores = rng.sample(range(120, 99000), n_rows)
    amounts = [rng.randint(0, 90) for _ in range(n_rows)]

    day_numbers = rng.sample(range(0, 36500), n_rows)
    base_year = 1925
    dates = []
    for number in day_numbers:
        year = base_year + number // 366
        month = 1 + (number // 31) % 12
        day = 1 + number % 28
        dates.append((year, month, day))
    months = ["January", "February", "March", "April", "May", "June", "July",
              "August", "September", "October", "November", "December"]

    rows = []
    for r in range(n_rows):
        if skew and r < (2 * n_rows) // 3:
            group = group_pool[0]
        else:
            group = rng.choice(group_pool)
        year, month, day = dates[r]
        score = scores[r]
        score_text = f"{score:,}" if score >= 10000 and rng.random() < 0.7 else str(score)
        rows.append([
            names[r],
            group,
            rng.choice(status_pool),
            score_text,
            str(amounts[r]),
            f"{day} {months[month - 1]} {year}",
        ])

    return {
        "id": f"synth-{seed}-{index:05d}",
        "page_title": f"Register of {rng.choice(_GROUPS)} Stations",
        "table_title": f"Survey {index:04d}",
        "header": ["Station", "Region", "Status", "Score", "Samples", "Visited"],
        "rows": rows,
        "category": rng.choice(["Geography", "Science", "Transport", "Sport"]),
    }


def write_dump(path: str, count: int, seed: int = 0, min_rows: int = 10,
               max_rows: int = 16) -> None:
    with open(path, "w", encoding="utf-8") as out:
        for index in range(count):
            out.write(json.dumps(make_table(index, seed, min_rows, max_rows),
                                 ensure_ascii=False) + "\n")
