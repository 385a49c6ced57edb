import random

from fixtures import chelsea
from tabrc.facts import (
    ContextConfig,
    FactKind,
    FactPlan,
    build_context,
    gold_spec,
    pluralize,
    render_fact,
)


def table():
    return chelsea()


class TestPluralize:
    def test_naive(self):
        assert pluralize("attendance") == "attendances"
        assert pluralize("opponent") == "opponents"

    def test_rules(self):
        assert pluralize("box") == "boxes"
        assert pluralize("category") == "categories"
        assert pluralize("person") == "people"

    def test_already_plural_left_alone(self):
        assert pluralize("successes") == "successes"


class TestRenderFact:
    def test_singular_keeps_header_casing(self):
        t = table()
        fact = render_fact(t, t.column_index("Attendance"), t.column_index("Round"), (9,))
        assert fact.text == "The Attendance when the Round was QF was 34,178"

    def test_plural_lowercases_and_aggregates(self):
        t = table()
        fact = render_fact(t, t.column_index("Attendance"), t.column_index("Opponent"), (4, 5))
        assert fact.text == "The attendances when the opponent was Walsall were 5,666 and 10,037"

    def test_zero_value(self):
        t = table()
        fact = render_fact(t, t.column_index("Result"), t.column_index("Round"), (8,))
        assert fact.text.endswith("was 2-1")

    def test_cells_provenance(self):
        t = table()
        fact = render_fact(t, t.column_index("Attendance"), t.column_index("Opponent"), (4, 5))
        opp, att = t.column_index("Opponent"), t.column_index("Attendance")
        assert fact.cells == frozenset({(4, att), (5, att), (4, opp), (5, opp)})


def _gold():
    t = table()
    att, rnd = t.column_index("Attendance"), t.column_index("Round")
    return t, gold_spec([FactPlan(att, (rnd,), (9,)), FactPlan(att, (rnd,), (10,))])


class TestBuildContext:
    def test_prefix_and_terminal(self):
        t, gold = _gold()
        ctx = build_context(t, gold, seed=1)
        assert ctx.rendered.startswith("In League Cup of 1990-91 Chelsea F.C. season: ")
        assert ctx.rendered.endswith(".")

    def test_gold_facts_all_present_once(self):
        t, gold = _gold()
        ctx = build_context(t, gold, seed=1)
        gold_texts = [f.text for f in ctx.facts if f.kind is FactKind.GOLD]
        assert sorted(gold_texts) == sorted([
            "The Attendance when the Round was QF was 34,178",
            "The Attendance when the Round was QFR was 33,861",
        ])
        assert ctx.rendered.count("The Attendance when the Round was QF was 34,178") == 1

    def test_seeded_shuffle_deterministic(self):
        t, gold = _gold()
        assert build_context(t, gold, seed=5) == build_context(t, gold, seed=5)
        orders = {tuple(f.text for f in build_context(t, gold, seed=s).facts) for s in range(8)}
        assert len(orders) > 1

    def test_distractors_avoid_gold_cells(self):
        t, gold = _gold()
        for seed in range(20):
            ctx = build_context(t, gold, seed=seed)
            for fact in ctx.facts:
                if fact.kind is FactKind.DISTRACTOR:
                    assert not (fact.cells & gold.cells)

    def test_zero_distractors_config(self):
        t, gold = _gold()
        ctx = build_context(t, gold, seed=3, config=ContextConfig(0, 0))
        assert all(f.kind is FactKind.GOLD for f in ctx.facts)
        assert len(ctx.facts) == 2

    def test_distractor_count_within_range(self):
        t, gold = _gold()
        for seed in range(30):
            ctx = build_context(t, gold, seed=seed)
            count = sum(1 for f in ctx.facts if f.kind is FactKind.DISTRACTOR)
            assert 2 <= count <= 8

    def test_mean_distractors_tracks_uniform_two_to_eight(self):
        t, gold = _gold()
        rng = random.Random(99)
        total = 0
        builds = 10_000
        for _ in range(builds):
            ctx = build_context(t, gold, seed=rng.getrandbits(48))
            total += sum(1 for f in ctx.facts if f.kind is FactKind.DISTRACTOR)
        assert abs(total / builds - 5.0) < 0.1

    def test_word_cap_trims_distractors_only(self):
        t, gold = _gold()
        tight = ContextConfig(distractors_min=8, distractors_max=8, word_cap=40)
        ctx = build_context(t, gold, seed=2, config=tight)
        gold_count = sum(1 for f in ctx.facts if f.kind is FactKind.GOLD)
        assert gold_count == 2
        assert len(ctx.rendered.split()) <= 40 + 10  # gold facts are never dropped
        distractors = sum(1 for f in ctx.facts if f.kind is FactKind.DISTRACTOR)
        assert distractors < 8
