"""Axiom checkers, bounded search, and verification.

Checker logic is exercised against tiny rules defined here with known
axiom status (a fixed-order maximizer, a table-driven choice function, a
deliberately perverse fewest-firsts rule), then against library procedures
whose violations are classical.  Every witness is replayed against the
rule that produced it.
"""

import pytest

from twostage import (
    Counterexample,
    MajorityRelation,
    Profile,
    SearchConfig,
    Verdict,
    all_profiles,
    check_axiom,
    check_axiom_mu,
    contract,
    enumerate_majority_relations,
    first_place_counts,
    generate_profile,
    grade_table,
    improve,
    majority_relation,
    make_procedure,
    normalize_axiom,
    realizing_profile,
    search_counterexample,
    threshold_order,
    verify_bounded,
)
from twostage.axioms import AXIOMS
from twostage.procedures import Procedure


class FixedOrderRule:
    """Chooses the earliest-alphabet alternative of the presented subset.

    A single fixed preference order satisfies heredity, concordance,
    outcast, and Arrow's choice axiom by construction.
    """

    def choose(self, p, subset=None):
        pool = sorted(subset) if subset is not None else sorted(p.labels)
        return frozenset(pool[:1])

    choose_mu = None  # not relation-driven


class TableRule:
    """Choice function given extensionally, keyed by presented subset."""

    def __init__(self, universe, table):
        self.universe = frozenset(universe)
        self.table = {frozenset(k): frozenset(v) for k, v in table.items()}

    def choose(self, p, subset=None):
        key = self.universe if subset is None else frozenset(subset)
        return self.table.get(key, key)


class FewestFirstsRule:
    """Perverse on purpose: keeps the alternatives with the FEWEST first
    places, so improving a winner can immediately dethrone it."""

    def choose(self, p, subset=None):
        pc = contract(p, subset) if subset is not None else p
        counts = first_place_counts(pc)
        fewest = min(counts.values())
        return frozenset(x for x, c in counts.items() if c == fewest)


WIDE = Profile(
    [("b", "a", "c", "d"), ("a", "c", "b", "d"), ("d", "a", "b", "c")]
)
CYCLE = Profile([("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b")])
# Plurality picks all three here, but the pair {a, b} flips to b alone.
SPLIT = Profile([("a", "b", "c"), ("c", "b", "a"), ("b", "c", "a")])


# ---------------------------------------------------------------------------
# names
# ---------------------------------------------------------------------------

def test_normalize_axiom_accepts_aliases():
    assert normalize_axiom("H") == "H"
    assert normalize_axiom("heredity") == "H"
    assert normalize_axiom("Heritage") == "H"
    assert normalize_axiom("concordance") == "C"
    assert normalize_axiom("Outcast") == "O"
    assert normalize_axiom("aca") == "ACA"
    assert normalize_axiom("Mon1") == "MON1"
    assert normalize_axiom("monotonicity2") == "MON2"
    assert normalize_axiom("strictmono") == "SM"
    assert normalize_axiom("strict_monotonicity") == "SM"
    assert normalize_axiom("non-compensatory") == "NC"
    assert normalize_axiom("noncomp") == "NC"
    with pytest.raises(ValueError):
        normalize_axiom("fairness")


def test_verdict_invariant():
    w = Counterexample(axiom="H", kind="subset")
    with pytest.raises(ValueError):
        Verdict("H", True, w)
    with pytest.raises(ValueError):
        Verdict("H", False, None)
    assert Verdict("H", True).holds
    with pytest.raises(KeyError):
        w.observation("missing")


# ---------------------------------------------------------------------------
# rational rules pass the subset axioms
# ---------------------------------------------------------------------------

def test_fixed_order_rule_satisfies_rationality_axioms():
    rule = FixedOrderRule()
    for p in (WIDE, CYCLE, SPLIT):
        for axiom in ("H", "C", "O", "ACA", "MON2"):
            verdict = check_axiom(rule, p, axiom)
            assert verdict.holds, (axiom, verdict.witness)
    # a single winner makes the removal condition vacuous
    verdict = check_axiom(rule, WIDE, "MON2")
    assert verdict.holds and "vacuous" in verdict.detail


def test_aca_implies_heredity_and_outcast():
    # Any table satisfying Arrow's choice axiom also passes H and O; probe
    # with a rule whose choice is the fixed-order maximum (ACA by design).
    rule = FixedOrderRule()
    for p in all_profiles(3, 1):
        if check_axiom(rule, p, "ACA").holds:
            assert check_axiom(rule, p, "H").holds
            assert check_axiom(rule, p, "O").holds


def test_constant_rules_pass_the_improvement_axioms():
    # A choice that ignores the profile can never react to an improvement.
    rule = TableRule("abcd", {})
    assert check_axiom(rule, WIDE, "MON1").holds
    assert check_axiom(rule, WIDE, "SM").holds


# ---------------------------------------------------------------------------
# table-driven violations, one axiom at a time
# ---------------------------------------------------------------------------

def test_heredity_violation_is_caught_and_replays():
    rule = make_procedure(2)  # plurality
    verdict = check_axiom(rule, SPLIT, "H")
    assert not verdict.holds
    w = verdict.witness
    assert w.kind == "subset"
    (sub,) = w.subsets
    kept = w.observation("choice_full") & sub
    assert kept and not kept <= w.observation("choice_subset")
    # replay: the recorded observations must be reproducible
    assert rule.choose(SPLIT) == w.observation("choice_full")
    assert rule.choose(SPLIT, sub) == w.observation("choice_subset")


def test_concordance_violation_is_caught():
    rule = TableRule(
        "abc",
        {
            "abc": {"a"},
            "ab": {"b"},
            "bc": {"b"},
            "ac": {"a"},
            "a": {"a"},
            "b": {"b"},
            "c": {"c"},
        },
    )
    verdict = check_axiom(rule, CYCLE, "C")
    assert not verdict.holds
    w = verdict.witness
    left, right = w.subsets
    assert left | right == frozenset("abc")
    common = rule.choose(CYCLE, left) & rule.choose(CYCLE, right)
    assert not common <= rule.choose(CYCLE)


def test_outcast_violation_is_caught():
    rule = TableRule(
        "abc",
        {"abc": {"a"}, "ab": {"b"}, "ac": {"a"}, "a": {"a"}},
    )
    verdict = check_axiom(rule, CYCLE, "O")
    assert not verdict.holds
    (sub,) = verdict.witness.subsets
    assert rule.choose(CYCLE) <= sub
    assert rule.choose(CYCLE, sub) != rule.choose(CYCLE)


def test_aca_violation_is_caught():
    rule = TableRule(
        "abc",
        {"abc": {"a", "b"}, "ab": {"a"}, "ac": {"a"}, "bc": {"b"}},
    )
    verdict = check_axiom(rule, CYCLE, "ACA")
    assert not verdict.holds
    (sub,) = verdict.witness.subsets
    kept = rule.choose(CYCLE) & sub
    assert kept and rule.choose(CYCLE, sub) != kept


def test_mon2_default_needs_one_survivor_strict_needs_both():
    rule = TableRule(
        "abc",
        {"abc": {"a", "b"}, "ab": {"a"}, "ac": {"a"}, "bc": {"c"}},
    )
    # dropping b keeps a; dropping a kills b -> one survivor suffices
    assert check_axiom(rule, CYCLE, "MON2").holds
    strict = check_axiom(rule, CYCLE, "MON2", mon2_strict=True)
    assert not strict.holds
    assert strict.witness.kind == "subset-pair"

    neither = TableRule(
        "abc",
        {"abc": {"a", "b"}, "ab": {"c"}, "ac": {"c"}, "bc": {"c"}},
    )
    assert not check_axiom(neither, CYCLE, "MON2").holds


def test_mon1_violation_is_caught_and_replays():
    rule = FewestFirstsRule()
    verdict = check_axiom(rule, WIDE, "MON1")
    assert not verdict.holds
    w = verdict.witness
    assert w.kind == "improvement"
    target = w.improvement.target
    assert target in w.observation("choice_before")
    improved = improve(WIDE, w.improvement)
    after = rule.choose(improved)
    assert after == w.observation("choice_after")
    assert target not in after


def test_sm_violation_is_caught_and_replays():
    rule = FewestFirstsRule()
    verdict = check_axiom(rule, WIDE, "SM")
    assert not verdict.holds
    w = verdict.witness
    before = w.observation("choice_before")
    after = rule.choose(improve(WIDE, w.improvement))
    assert after == w.observation("choice_after")
    c = w.improvement.target
    assert after not in (before, frozenset({c}), before | {c})


def test_nc_compares_against_the_threshold_order():
    # The threshold procedure *is* the best grade class: NC holds.
    assert check_axiom(make_procedure(22), WIDE, "NC").holds
    # Plurality keeps {a, b, d} here while the grade signature favors a.
    verdict = check_axiom(make_procedure(2), WIDE, "NC")
    assert not verdict.holds
    w = verdict.witness
    assert w.kind == "grade-order"
    assert w.observation("best_grade_class") == threshold_order(grade_table(WIDE))[0]
    assert w.observation("choice_full") == frozenset({"a", "b", "d"})


# ---------------------------------------------------------------------------
# majority-relation level
# ---------------------------------------------------------------------------

def test_mu_level_nc_is_not_applicable():
    mu = majority_relation(WIDE)
    verdict = check_axiom_mu(Procedure(20), mu, "NC")
    assert verdict.holds
    assert "not-applicable" in verdict.detail


def test_mu_level_core_is_improvement_monotone():
    for mu in enumerate_majority_relations(3):
        assert check_axiom_mu(Procedure(20), mu, "MON1").holds
        assert check_axiom_mu(Procedure(24), mu, "MON1").holds


def test_mu_level_fishburn_heredity_violation_replays():
    found = False
    for mu in enumerate_majority_relations(4):
        verdict = check_axiom_mu(Procedure(15), mu, "H")
        if verdict.holds:
            continue
        found = True
        w = verdict.witness
        (sub,) = w.subsets
        rule = Procedure(15)
        assert rule.choose_mu(mu) == w.observation("choice_full")
        assert rule.choose_mu(mu, sub) == w.observation("choice_subset")
        kept = w.observation("choice_full") & sub
        assert kept and not kept <= w.observation("choice_subset")
        break
    assert found


def test_mu_level_edge_flip_witness_replays():
    # The Condorcet rule can empty out when a rival gets strengthened,
    # which strict monotonicity forbids.
    found = False
    for mu in enumerate_majority_relations(3):
        verdict = check_axiom_mu(Procedure(19), mu, "SM")
        if verdict.holds:
            continue
        found = True
        w = verdict.witness
        assert w.kind == "edge-flip"
        from twostage import perturb_majority

        after = Procedure(19).choose_mu(perturb_majority(mu, *w.edge))
        assert after == w.observation("choice_after")
        break
    assert found


def test_realizing_profile_round_trips_every_relation():
    for m in range(1, 5):
        for mu in enumerate_majority_relations(m):
            p = realizing_profile(mu)
            assert majority_relation(p) == mu
            assert p.n == max(2, 2 * len(mu.edges()))
            assert p.n % 2 == 0


# ---------------------------------------------------------------------------
# bounded search
# ---------------------------------------------------------------------------

def test_search_finds_plurality_heredity_violation():
    cfg = SearchConfig(m_values=(3,), n_values=(3,))
    result = search_counterexample(make_procedure(2), "H", cfg)
    assert result.found and result.status == "found"
    assert result.profile is not None and result.witness is not None
    w = result.witness
    (sub,) = w.subsets
    rule = make_procedure(2)
    assert rule.choose(result.profile) == w.observation("choice_full")
    assert rule.choose(result.profile, sub) == w.observation("choice_subset")


def test_search_is_deterministic():
    cfg = SearchConfig(m_values=(3,), n_values=(3,))
    a = search_counterexample(make_procedure(2), "H", cfg)
    b = search_counterexample(make_procedure(2), "H", cfg)
    assert a.examined == b.examined
    assert a.witness == b.witness
    assert a.profile == b.profile


def test_search_exhausts_a_clean_space():
    result = search_counterexample(
        FixedOrderRule(), "H", SearchConfig(m_values=(2,), n_values=(2,))
    )
    assert result.status == "exhausted"
    assert result.examined == 4  # (2!)^2 profiles
    assert result.witness is None


def test_search_respects_its_budget():
    cfg = SearchConfig(m_values=(3,), n_values=(3,), budget=10)
    result = search_counterexample(make_procedure(7), "H", cfg)
    assert result.status in ("budget-exceeded", "found")
    assert result.examined <= 10


def test_search_random_mode_is_seeded():
    cfg = SearchConfig(
        m_values=(3, 4), n_values=(3, 5), mode="random", samples=60, seed=11
    )
    a = search_counterexample(FewestFirstsRule(), "MON1", cfg)
    b = search_counterexample(FewestFirstsRule(), "MON1", cfg)
    assert a.status == b.status == "found"
    assert a.examined == b.examined
    assert a.profile == b.profile


def test_search_deletion_strategy_still_finds_subset_violations():
    cfg = SearchConfig(m_values=(3,), n_values=(3,), subset_strategy="deletions")
    result = search_counterexample(make_procedure(2), "H", cfg)
    assert result.found
    (sub,) = result.witness.subsets
    assert len(sub) >= result.profile.m - 2


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(mode="clever")
    with pytest.raises(ValueError):
        SearchConfig(subset_strategy="columns")
    with pytest.raises(ValueError):
        SearchConfig(budget=0)
    with pytest.raises(ValueError):
        SearchConfig(m_values=())
    with pytest.raises(ValueError):
        SearchConfig(n_values=(0,))


# ---------------------------------------------------------------------------
# bounded verification
# ---------------------------------------------------------------------------

def test_verify_bounded_confirms_borda_improvement_monotonicity():
    outcome = verify_bounded(make_procedure(7), "MON1", 3, 2)
    assert outcome.status == "verified"
    assert outcome.checked == 36  # (3!)^2
    assert outcome.witness is None


def test_verify_bounded_refutes_with_a_profile():
    outcome = verify_bounded(make_procedure(2), "H", 3, 3)
    assert outcome.status == "refuted"
    assert outcome.profile is not None
    verdict = check_axiom(make_procedure(2), outcome.profile, "H")
    assert not verdict.holds


def test_verify_bounded_refuses_oversized_spaces():
    outcome = verify_bounded(make_procedure(7), "H", 4, 4, budget=1000)
    assert outcome.status == "budget-exceeded"
    assert outcome.checked == 0


def test_axiom_names_are_the_eight_documented_conditions():
    assert AXIOMS == ("H", "C", "O", "ACA", "MON1", "MON2", "SM", "NC")
