"""Adversarial synthetic tables: blank cells, unparseable values in typed
columns, duplicate values, cross-column string collisions, second date
columns, coarse date precision, and tables missing whole column kinds."""

from __future__ import annotations

import random

_WORDS = ["North", "South", "East", "West", "Delta", "Echo", "Foxtrot", "Gamma",
          "Harbor", "Island", "Apex", "Borrow", "Cedar", "Dune"]
_MONTHS = ["January", "February", "March", "April", "May", "June", "July",
           "August", "September", "October", "November", "December"]


def rough_table(index: int, seed: int = 0) -> dict:
    rng = random.Random((seed << 24) ^ (index * 2654435761))
    n_rows = rng.randint(10, 25)

    header = ["Station", "Region"]
    has_code = rng.random() < 0.7
    if has_code:
        header.append("Code")
    header.append("Score")
    has_samples = rng.random() < 0.8
    if has_samples:
        header.append("Samples")
    date_mode = rng.choice(["none", "full", "full", "month", "two"])
    if date_mode != "none":
        header.append("Visited")
    if date_mode == "two":
        header.append("Checked")

    region_pool = rng.sample(_WORDS, rng.randint(2, 4))
    # sometimes Code collides with Region values on purpose
    code_pool = region_pool if (has_code and rng.random() < 0.3) else rng.sample(_WORDS, 4)

    rows = []
    day_numbers = rng.sample(range(20000), n_rows)
    for r in range(n_rows):
        row = [f"{rng.choice(_WORDS)}-{index:03d}-{r:02d}", rng.choice(region_pool)]
        if has_code:
            row.append("" if rng.random() < 0.08 else rng.choice(code_pool))
        if rng.random() < 0.06:
            score = ""
        elif rng.random() < 0.08:
            score = "n/a"
        else:
            value = rng.randint(0, 80000)
            score = f"{value:,}" if value >= 10000 and rng.random() < 0.5 else str(value)
        row.append(score)
        if has_samples:
            row.append(str(rng.randint(0, 6)))
        if date_mode != "none":
            number = day_numbers[r]
            year = 1950 + number // 365
            month = 1 + (number // 31) % 12
            day = 1 + number % 28
            if rng.random() < 0.05:
                row.append("")
            elif date_mode == "month":
                row.append(f"{_MONTHS[month - 1]} {year}")
            else:
                row.append(f"{day} {_MONTHS[month - 1]} {year}")
        if date_mode == "two":
            row.append(f"{1 + (number * 7) % 28} {_MONTHS[(month + 2) % 12]} {year + 1}")
        rows.append(row)

    return {
        "id": f"rough-{seed}-{index:04d}",
        "page_title": f"Atlas of {rng.choice(_WORDS)} Lines",
        "table_title": f"Sheet {index:03d}",
        "header": header,
        "rows": rows,
    }
