"""Procedure semantics checked against independent brute-force oracles.

The relation-based rules are compared over every asymmetric relation up to
four alternatives and a random sample at five; the order-based rules over
seeded random profiles, with a few frozen hand-worked cases.
"""

import numpy as np
import pytest

import oracles
from twostage import (
    GradeTable,
    MajorityRelation,
    Profile,
    enumerate_majority_relations,
    generate_profile,
    grade_table,
    majority_relation,
    make_procedure,
    tournament_matrix,
)
from twostage.procedures import (
    Procedure,
    QParetoRule,
    black,
    borda,
    condorcet_winner,
    coombs,
    copeland,
    core,
    fishburn,
    hare,
    inverse_borda,
    inverse_plurality,
    k_stable_sets,
    minimal_dominant_sets,
    minimal_undominated_sets,
    minimax,
    nanson,
    plurality,
    q_approval,
    q_pareto,
    richelson,
    run_off,
    simple_majority,
    simpson,
    super_threshold,
    threshold_order,
    threshold_rule,
    uncovered_1,
    uncovered_2,
    weakly_stable_sets,
)


def orders_of(p: Profile):
    return [
        tuple(sorted(p.labels, key=lambda lab: p.rank_of(lab, i)))
        for i in range(p.n)
    ]


def random_relations(m, count, seed):
    rng = np.random.default_rng(seed)
    labels = tuple("abcdefgh"[:m])
    for _ in range(count):
        beats = np.zeros((m, m), dtype=bool)
        for i in range(m):
            for j in range(i + 1, m):
                state = rng.integers(0, 3)
                if state == 1:
                    beats[i, j] = True
                elif state == 2:
                    beats[j, i] = True
        yield MajorityRelation(labels, beats)


def random_profiles(cases, base_seed):
    for idx, (m, n) in enumerate(cases):
        yield generate_profile(m, n, base_seed + idx)


PROFILE_CASES = [
    (m, n) for m in (1, 2, 3, 4, 5) for n in (1, 2, 3, 4, 5, 6, 7) for _ in range(4)
]


# ---------------------------------------------------------------------------
# relation-based rules vs. subset-enumeration oracles
# ---------------------------------------------------------------------------

def assert_relation_rules_match(mu):
    labels = mu.labels
    edges = oracles.edge_set(mu)

    assert minimal_dominant_sets(mu) == oracles.brute_dominant_sets(labels, edges)
    assert minimal_undominated_sets(mu) == oracles.brute_undominated_sets(labels, edges)
    assert sorted(weakly_stable_sets(mu), key=sorted) == oracles.brute_weakly_stable_sets(labels, edges)
    for k in (2, 3):
        assert sorted(k_stable_sets(mu, k), key=sorted) == oracles.brute_k_stable_sets(labels, edges, k)
    assert fishburn(mu) == oracles.brute_fishburn(labels, edges)
    assert uncovered_1(mu) == oracles.brute_uncovered_1(labels, edges)
    assert uncovered_2(mu) == oracles.brute_uncovered_2(labels, edges)
    assert richelson(mu) == oracles.brute_richelson(labels, edges)
    assert condorcet_winner(mu) == oracles.brute_condorcet(labels, edges)
    assert core(mu) == oracles.brute_core(labels, edges)
    for variant in (1, 2, 3):
        assert copeland(mu, variant) == oracles.brute_copeland(labels, edges, variant)


def test_relation_rules_match_oracles_exhaustive_to_m4():
    count = 0
    for m in range(1, 5):
        for mu in enumerate_majority_relations(m):
            assert_relation_rules_match(mu)
            count += 1
    assert count == 1 + 3 + 27 + 729


def test_relation_rules_match_oracles_random_m5():
    for mu in random_relations(5, 250, seed=20260818):
        assert_relation_rules_match(mu)


def test_minimal_dominant_set_is_unique_and_nested_rules_nonempty():
    for mu in enumerate_majority_relations(4):
        assert len(minimal_dominant_sets(mu)) == 1
        assert minimal_undominated_sets(mu)
        assert weakly_stable_sets(mu)
        assert fishburn(mu)


def test_condorcet_winner_pins_down_relation_rules():
    seen_winner = False
    for mu in enumerate_majority_relations(4):
        cw = condorcet_winner(mu)
        if not cw:
            continue
        seen_winner = True
        assert len(cw) == 1
        assert minimal_dominant_sets(mu) == [cw]
        assert cw <= core(mu)
        assert weakly_stable_sets(mu) == [cw]
    assert seen_winner


# ---------------------------------------------------------------------------
# support-matrix rules
# ---------------------------------------------------------------------------

def test_support_rules_match_oracles():
    for p in random_profiles(PROFILE_CASES, base_seed=100):
        if p.m == 1:
            continue
        t = tournament_matrix(p)
        support = {
            x: {y: t.support(x, y) for y in t.labels if y != x}
            for x in t.labels
        }
        assert minimax(t) == oracles.brute_minimax(t.labels, support)
        assert simpson(t) == oracles.brute_simpson(t.labels, support)


def test_support_rules_single_alternative():
    p = generate_profile(1, 3, seed=7)
    t = tournament_matrix(p)
    assert minimax(t) == frozenset({"a"})
    assert simpson(t) == frozenset({"a"})


# ---------------------------------------------------------------------------
# order-based rules vs. plain-python oracles
# ---------------------------------------------------------------------------

def test_scoring_rules_match_oracles():
    for p in random_profiles(PROFILE_CASES, base_seed=300):
        orders = orders_of(p)
        assert simple_majority(p) == oracles.brute_simple_majority(orders)
        assert plurality(p) == oracles.brute_plurality(orders)
        assert inverse_plurality(p) == oracles.brute_inverse_plurality(orders)
        assert borda(p) == oracles.brute_borda_rule(orders)
        for q in range(1, p.m + 1):
            assert q_approval(p, q) == oracles.brute_q_approval(orders, q)


def test_elimination_rules_match_oracles():
    for p in random_profiles(PROFILE_CASES, base_seed=500):
        orders = orders_of(p)
        assert run_off(p) == oracles.brute_run_off(orders)
        assert hare(p) == oracles.brute_hare(orders)
        assert coombs(p) == oracles.brute_coombs(orders)
        assert inverse_borda(p) == oracles.brute_inverse_borda(orders)
        assert nanson(p) == oracles.brute_nanson(orders)


def test_black_is_condorcet_else_borda():
    for p in random_profiles(PROFILE_CASES, base_seed=700):
        cw = condorcet_winner(majority_relation(p))
        assert black(p) == (cw if cw else borda(p))


def test_cyclic_hand_case():
    # Three criteria rotating a > b > c: a perfect cycle, everything ties.
    p = Profile([("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b")])
    mu = majority_relation(p)
    everyone = frozenset({"a", "b", "c"})

    assert set(mu.edges()) == {("a", "b"), ("b", "c"), ("c", "a")}
    assert simple_majority(p) == frozenset()
    assert plurality(p) == everyone
    assert borda(p) == everyone
    assert run_off(p) == frozenset()
    assert hare(p) == everyone
    assert coombs(p) == everyone
    assert nanson(p) == everyone
    assert inverse_borda(p) == everyone
    assert condorcet_winner(mu) == frozenset()
    assert core(mu) == frozenset()
    assert minimal_dominant_sets(mu) == [everyone]
    assert minimal_undominated_sets(mu) == [everyone]
    assert weakly_stable_sets(mu) == [
        frozenset({"a", "b"}),
        frozenset({"a", "c"}),
        frozenset({"b", "c"}),
    ]
    assert k_stable_sets(mu, 2) == [
        frozenset({"a"}),
        frozenset({"b"}),
        frozenset({"c"}),
    ]
    assert fishburn(mu) == everyone
    assert uncovered_1(mu) == everyone
    for variant in (1, 2, 3):
        assert copeland(mu, variant) == everyone
    t = tournament_matrix(p)
    assert minimax(t) == everyone
    assert simpson(t) == everyone


def test_transitive_hand_case():
    # Majority relation is the transitive tournament a > b > c > d, but the
    # first-place counts three-way tie between a, b and d.
    p = Profile([("b", "a", "c", "d"), ("a", "c", "b", "d"), ("d", "a", "b", "c")])
    mu = majority_relation(p)
    a = frozenset({"a"})

    assert plurality(p) == frozenset({"a", "b", "d"})
    assert inverse_plurality(p) == frozenset({"a", "b"})
    assert q_approval(p, 2) == a
    assert borda(p) == a
    assert simple_majority(p) == frozenset()
    assert run_off(p) == frozenset()
    assert hare(p) == frozenset({"a", "b", "d"})
    assert coombs(p) == a
    assert nanson(p) == a
    assert inverse_borda(p) == a
    assert black(p) == a
    assert condorcet_winner(mu) == a
    assert core(mu) == a
    assert minimal_dominant_sets(mu) == [a]
    assert copeland(mu, 1) == a
    t = tournament_matrix(p)
    assert minimax(t) == a
    assert simpson(t) == a


def test_single_alternative_profile():
    p = Profile([("a",), ("a",), ("a",)])
    assert run_off(p) == frozenset({"a"})
    assert hare(p) == frozenset({"a"})
    assert coombs(p) == frozenset({"a"})
    assert simple_majority(p) == frozenset({"a"})
    assert nanson(p) == frozenset({"a"})
    assert inverse_borda(p) == frozenset({"a"})


def test_single_winner_shapes():
    for p in random_profiles(PROFILE_CASES, base_seed=900):
        assert len(simple_majority(p)) <= 1
        assert len(run_off(p)) <= 1
        assert len(condorcet_winner(majority_relation(p))) <= 1
        assert hare(p)
        assert coombs(p)
        assert nanson(p)
        assert inverse_borda(p)


# ---------------------------------------------------------------------------
# grade-based rules
# ---------------------------------------------------------------------------

THRESHOLD_TABLE = GradeTable(
    ("a", "b", "c"), np.array([[3, 1, 2], [3, 1, 2], [1, 3, 2]])
)


def test_threshold_hand_case():
    assert threshold_order(THRESHOLD_TABLE) == [
        frozenset({"c"}),
        frozenset({"a"}),
        frozenset({"b"}),
    ]
    assert threshold_rule(THRESHOLD_TABLE) == frozenset({"c"})


def test_super_threshold_hand_case():
    # Grade sums a=7, b=5, c=6 against the mean cutoff 6.
    assert super_threshold(THRESHOLD_TABLE) == frozenset({"a", "c"})
    assert super_threshold(THRESHOLD_TABLE, threshold=lambda g: 5.0) == frozenset(
        {"a", "b", "c"}
    )
    assert super_threshold(THRESHOLD_TABLE, threshold=lambda g: 7.5) == frozenset()


def test_threshold_rules_match_oracles_random():
    rng = np.random.default_rng(20260819)
    for _ in range(200):
        m = int(rng.integers(1, 6))
        n = int(rng.integers(1, 6))
        labels = tuple("abcdefgh"[:m])
        g = GradeTable(labels, rng.integers(1, 5, size=(n, m)))
        columns = {lab: g.column(lab) for lab in labels}
        assert threshold_order(g) == oracles.brute_threshold_order(labels, columns)
        for q in range(0, m + 1):
            assert q_pareto(g, q) == oracles.brute_q_pareto(labels, columns, q)


def test_q_pareto_hand_case():
    g = GradeTable(("a", "b", "c"), np.array([[2, 2, 1], [1, 2, 2]]))
    assert q_pareto(g, 0) == frozenset({"b"})
    assert q_pareto(g, 1) == frozenset({"a", "b", "c"})


def test_q_pareto_grows_with_q_and_accepts_profiles():
    for p in random_profiles([(4, 3), (5, 5), (3, 7)], base_seed=1100):
        g = grade_table(p)
        previous = frozenset()
        for q in range(0, p.m + 1):
            current = q_pareto(g, q)
            assert previous <= current
            previous = current
        assert q_pareto(g, p.m - 1) == frozenset(p.labels)
        assert q_pareto(p, 1) == q_pareto(g, 1)
    with pytest.raises(ValueError):
        q_pareto(grade_table(generate_profile(3, 3, 1)), -1)


# ---------------------------------------------------------------------------
# the registry surface
# ---------------------------------------------------------------------------

def test_make_procedure_accepts_index_name_and_instance():
    by_index = make_procedure(7)
    by_name = make_procedure("borda")
    assert by_index == by_name == Procedure(7)
    assert make_procedure(by_index) is by_index

    qa = make_procedure(4, q=3)
    assert qa.label() == "q_approval(q=3)"
    ks = make_procedure("k_stable", k=2)
    assert ks.index == 21 and ks.label() == "k_stable(k=2)"

    qp = make_procedure("qpareto")
    assert isinstance(qp, QParetoRule) and qp.q == 2
    assert make_procedure("qpareto", q=0).q == 0
    assert make_procedure(qp) is qp


def test_make_procedure_rejects_bad_requests():
    with pytest.raises(ValueError):
        make_procedure(0)
    with pytest.raises(ValueError):
        make_procedure(29)
    with pytest.raises(ValueError):
        make_procedure("waterfall")
    assert make_procedure(4).q == 2  # parameters default to 2 when omitted
    assert make_procedure(21).k == 2
    with pytest.raises(ValueError):
        Procedure(4)  # ... but the bare constructor insists on one
    with pytest.raises(ValueError):
        make_procedure(4, q=0)
    with pytest.raises(ValueError):
        make_procedure(21, k=1)
    with pytest.raises(ValueError):
        make_procedure(7, q=2)  # borda takes no parameter
    with pytest.raises(ValueError):
        make_procedure("qpareto", k=2)
    with pytest.raises(ValueError):
        make_procedure("qpareto", q=-1)


def test_choose_contracts_to_subset():
    p = Profile([("b", "a", "c", "d"), ("a", "c", "b", "d"), ("d", "a", "b", "c")])
    assert Procedure(7).choose(p, {"b", "c", "d"}) == frozenset({"b"})
    assert Procedure(19).choose(p, {"b", "c", "d"}) == frozenset({"b"})
    assert QParetoRule(0).choose(p, {"c", "d"}) == q_pareto(
        grade_table(p).restrict({"c", "d"}), 0
    )


def test_kind_mismatch_raises():
    p = generate_profile(3, 3, seed=5)
    mu = majority_relation(p)
    g = grade_table(p)
    t = tournament_matrix(p)
    with pytest.raises(TypeError):
        Procedure(7).choose_mu(mu)
    with pytest.raises(TypeError):
        Procedure(12).choose_grades(g)
    with pytest.raises(TypeError):
        Procedure(22).choose_support(t)
    assert Procedure(12).choose_mu(mu) or True  # mu-capable path works
    assert Procedure(22).choose_grades(g)
    assert Procedure(27).choose_support(t)


def test_k_stable_rejects_k_of_one():
    mu = majority_relation(generate_profile(3, 3, seed=11))
    with pytest.raises(ValueError):
        k_stable_sets(mu, 1)


def test_plurality_is_one_approval():
    for p in random_profiles([(3, 3), (4, 5), (5, 7), (2, 2)], base_seed=1300):
        assert plurality(p) == q_approval(p, 1)
