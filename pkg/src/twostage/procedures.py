"""The choice procedures usable on either stage of a two-stage rule.

Twenty-eight procedures are indexed 1..28; the same numbering is used to
form two-stage ids in :mod:`twostage.catalog`.  Each procedure maps a
profile (restricted to a feasible subset) to a set of chosen alternatives.
Depending on the procedure, the choice is really a function of different
derived data:

* positional scores (first places, last places, top-q, Borda) -- need the
  full profile;
* the strict-majority relation mu -- tournament-style solutions;
* the pairwise support matrix -- minimax / Simpson;
* a grade table -- threshold and super-threshold rules.

Procedures defined on mu or on grades can also be evaluated directly from a
:class:`MajorityRelation` / :class:`GradeTable`, which the fixture corpus and
counterexample search use.

Empty choices: only the simple majority rule, the Condorcet winner, and the
run-off procedure can return an empty set; everything else always chooses at
least one alternative on a non-empty input.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .profiles import (
    GradeTable,
    MajorityRelation,
    Profile,
    TournamentMatrix,
    contract,
    grade_table,
    majority_relation,
    tournament_matrix,
)

__all__ = [
    "Procedure",
    "PROCEDURE_NAMES",
    "NAME_TO_INDEX",
    "make_procedure",
    "apply_procedure",
    "simple_majority",
    "plurality",
    "inverse_plurality",
    "q_approval",
    "run_off",
    "hare",
    "borda",
    "black",
    "inverse_borda",
    "nanson",
    "coombs",
    "condorcet_winner",
    "core",
    "copeland",
    "fishburn",
    "uncovered_1",
    "uncovered_2",
    "richelson",
    "minimal_dominant_sets",
    "minimal_dominant",
    "minimal_undominated_sets",
    "minimal_undominated",
    "weakly_stable_sets",
    "minimal_weakly_stable",
    "k_stable_sets",
    "k_stable",
    "threshold_order",
    "threshold_rule",
    "super_threshold",
    "minimax",
    "simpson",
    "q_pareto",
]


# ---------------------------------------------------------------------------
# positional-score rules (need the profile)
# ---------------------------------------------------------------------------

def _first_counts(p: Profile) -> np.ndarray:
    return (p.ranks == 0).sum(axis=0)


def _last_counts(p: Profile) -> np.ndarray:
    return (p.ranks == p.m - 1).sum(axis=0)


def _borda_scores(p: Profile) -> np.ndarray:
    return (p.m - 1 - p.ranks).sum(axis=0)


def _argmax_set(p: Profile, scores: np.ndarray) -> frozenset[str]:
    best = scores.max()
    return frozenset(lab for lab, s in zip(p.labels, scores) if s == best)


def _argmin_set(p: Profile, scores: np.ndarray) -> frozenset[str]:
    worst = scores.min()
    return frozenset(lab for lab, s in zip(p.labels, scores) if s == worst)


def simple_majority(p: Profile) -> frozenset[str]:
    """Alternatives ranked first by a strict majority of criteria (0 or 1 of them)."""
    counts = _first_counts(p)
    return frozenset(
        lab for lab, c in zip(p.labels, counts) if 2 * int(c) > p.n
    )


def plurality(p: Profile) -> frozenset[str]:
    return _argmax_set(p, _first_counts(p))


def inverse_plurality(p: Profile) -> frozenset[str]:
    """Alternatives named worst by the fewest criteria."""
    return _argmin_set(p, _last_counts(p))


def q_approval(p: Profile, q: int) -> frozenset[str]:
    if q < 1:
        raise ValueError("q-approval needs q >= 1")
    counts = (p.ranks < q).sum(axis=0)
    return _argmax_set(p, counts)


def run_off(p: Profile) -> frozenset[str]:
    """Top-two (or tied-top) runoff decided by simple majority; an exactly
    tied final gives the empty choice."""
    if p.m == 1:
        return frozenset(p.labels)
    counts = _first_counts(p)
    top_score = counts.max()
    top = [lab for lab, c in zip(p.labels, counts) if c == top_score]
    if len(top) >= 2:
        finalists = top
    else:
        rest = counts[counts != top_score]
        second = rest.max()
        finalists = top + [
            lab for lab, c in zip(p.labels, counts) if c == second
        ]
    return simple_majority(contract(p, finalists))


def hare(p: Profile) -> frozenset[str]:
    """Iteratively drop the alternatives with the fewest first places until
    one holds a strict majority of first places (or all remaining tie)."""
    current = p
    while True:
        counts = _first_counts(current)
        for lab, c in zip(current.labels, counts):
            if 2 * int(c) > current.n:
                return frozenset({lab})
        if counts.min() == counts.max():
            return frozenset(current.labels)
        worst = counts.min()
        keep = [lab for lab, c in zip(current.labels, counts) if c != worst]
        current = contract(current, keep)


def coombs(p: Profile) -> frozenset[str]:
    """Like Hare, but eliminate the alternatives named worst by the most
    criteria."""
    current = p
    while True:
        firsts = _first_counts(current)
        for lab, c in zip(current.labels, firsts):
            if 2 * int(c) > current.n:
                return frozenset({lab})
        lasts = _last_counts(current)
        if lasts.min() == lasts.max():
            return frozenset(current.labels)
        most = lasts.max()
        keep = [lab for lab, c in zip(current.labels, lasts) if c != most]
        current = contract(current, keep)


def borda(p: Profile) -> frozenset[str]:
    return _argmax_set(p, _borda_scores(p))


def black(p: Profile) -> frozenset[str]:
    """The Condorcet winner when one exists, the Borda winners otherwise."""
    winner = condorcet_winner(majority_relation(p))
    return winner if winner else borda(p)


def inverse_borda(p: Profile) -> frozenset[str]:
    """Delete the lowest Borda scorers (recomputing after each round) until
    all remaining alternatives tie."""
    current = p
    while True:
        scores = _borda_scores(current)
        if scores.min() == scores.max():
            return frozenset(current.labels)
        worst = scores.min()
        keep = [lab for lab, s in zip(current.labels, scores) if s != worst]
        current = contract(current, keep)


def nanson(p: Profile) -> frozenset[str]:
    """Delete everything with a strictly below-average Borda score, repeat
    until no deletion applies."""
    current = p
    while True:
        scores = _borda_scores(current)
        mean = scores.sum() / len(scores)
        keep = [lab for lab, s in zip(current.labels, scores) if s >= mean]
        if len(keep) == current.m:
            return frozenset(current.labels)
        current = contract(current, keep)


# ---------------------------------------------------------------------------
# majority-relation solutions
# ---------------------------------------------------------------------------

def condorcet_winner(mu: MajorityRelation) -> frozenset[str]:
    mat = mu.matrix
    wins = mat.sum(axis=1)
    idx = np.nonzero(wins == mu.m - 1)[0]
    return frozenset(mu.labels[i] for i in idx)


def core(mu: MajorityRelation) -> frozenset[str]:
    """Undominated alternatives: empty upper contour set."""
    dominated = mu.matrix.any(axis=0)
    return frozenset(lab for lab, d in zip(mu.labels, dominated) if not d)


def copeland(mu: MajorityRelation, variant: int) -> frozenset[str]:
    """Copeland winners.  Variant 1 scores wins minus losses, variant 2
    wins alone, variant 3 (negated) losses alone."""
    wins = mu.matrix.sum(axis=1).astype(np.int64)
    losses = mu.matrix.sum(axis=0).astype(np.int64)
    if variant == 1:
        scores = wins - losses
    elif variant == 2:
        scores = wins
    elif variant == 3:
        scores = -losses
    else:
        raise ValueError(f"no Copeland variant {variant}")
    best = scores.max()
    return frozenset(lab for lab, s in zip(mu.labels, scores) if s == best)


def _subset_rows(A: np.ndarray) -> np.ndarray:
    """B[x, y] = True iff row-set x is contained in row-set y.

    Rows of ``A`` are indicator vectors.  The containment test counts, via a
    float32 matrix product, the elements of x's set missing from y's set;
    exact for universes far beyond any size used here.
    """
    Af = A.astype(np.float32)
    missing = Af @ (1.0 - Af).T
    return missing < 0.5


def fishburn(mu: MajorityRelation) -> frozenset[str]:
    """Alternatives whose upper contour set is not a strict superset of any
    other's (undominated in the Fishburn auxiliary relation)."""
    upper = mu.matrix.T  # row x = indicator of D(x)
    sub = _subset_rows(upper)
    sizes = upper.sum(axis=1)
    gamma = sub & (sizes[:, None] < sizes[None, :])
    chosen = ~gamma.any(axis=0)
    return frozenset(lab for lab, c in zip(mu.labels, chosen) if c)


def uncovered_1(mu: MajorityRelation) -> frozenset[str]:
    """Covering = beating plus upper-contour containment (D(x) within D(y))."""
    upper = mu.matrix.T
    cover = mu.matrix & _subset_rows(upper)
    chosen = ~cover.any(axis=0)
    return frozenset(lab for lab, c in zip(mu.labels, chosen) if c)


def uncovered_2(mu: MajorityRelation) -> frozenset[str]:
    """Covering = beating plus lower-contour containment (L(y) within L(x))."""
    lower = mu.matrix
    cover = mu.matrix & _subset_rows(lower).T
    chosen = ~cover.any(axis=0)
    return frozenset(lab for lab, c in zip(mu.labels, chosen) if c)


def richelson(mu: MajorityRelation) -> frozenset[str]:
    """Covering needs the beat and both contour containments at once."""
    upper = mu.matrix.T
    lower = mu.matrix
    cover = mu.matrix & _subset_rows(upper) & _subset_rows(lower).T
    chosen = ~cover.any(axis=0)
    return frozenset(lab for lab, c in zip(mu.labels, chosen) if c)


def _sink_component_union(adj: np.ndarray, labels: tuple[str, ...]) -> list[frozenset[str]]:
    """Strongly connected components of ``adj`` with no outgoing edges,
    as label sets (each such component is one inclusion-minimal closed set)."""
    m = adj.shape[0]
    n_comp, comp = connected_components(
        csr_matrix(adj), directed=True, connection="strong"
    )
    outgoing = np.zeros(n_comp, dtype=bool)
    xs, ys = np.nonzero(adj)
    cross = comp[xs] != comp[ys]
    outgoing[comp[xs[cross]]] = True
    sets = []
    for c in range(n_comp):
        if not outgoing[c]:
            members = np.nonzero(comp == c)[0]
            sets.append(frozenset(labels[i] for i in members))
    sets.sort(key=lambda s: sorted(s))
    return sets


def minimal_dominant_sets(mu: MajorityRelation) -> list[frozenset[str]]:
    """All inclusion-minimal sets whose every member beats every outsider.

    A set is dominant exactly when it is closed under the relation
    "fails to beat", so the minimal ones are the sink components of that
    relation's digraph.
    """
    m = mu.m
    fails = ~mu.matrix & ~np.eye(m, dtype=bool)
    return _sink_component_union(fails, mu.labels)


def minimal_dominant(mu: MajorityRelation) -> frozenset[str]:
    return frozenset().union(*minimal_dominant_sets(mu))


def minimal_undominated_sets(mu: MajorityRelation) -> list[frozenset[str]]:
    """All inclusion-minimal sets no outsider beats into (closed under
    "is beaten by", i.e. sink components of the reversed majority digraph)."""
    return _sink_component_union(mu.matrix.T.copy(), mu.labels)


def minimal_undominated(mu: MajorityRelation) -> frozenset[str]:
    return frozenset().union(*minimal_undominated_sets(mu))


def _attacker_masks(mu: MajorityRelation) -> list[int]:
    """Per alternative, the bitmask of alternatives that beat it."""
    masks = []
    for j in range(mu.m):
        mask = 0
        for i in np.nonzero(mu.matrix[:, j])[0]:
            mask |= 1 << int(i)
        masks.append(mask)
    return masks


def _smallest_masks(m: int, qualifies: Callable[[int], bool]) -> list[int]:
    """All qualifying subsets of minimum cardinality: scan sizes upward and
    stop at the first size that admits any qualifying set."""
    for size in range(1, m + 1):
        found = []
        for combo in combinations(range(m), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if qualifies(mask):
                found.append(mask)
        if found:
            return found
    return []


def _masks_to_sets(masks: list[int], labels: tuple[str, ...]) -> list[frozenset[str]]:
    sets = [
        frozenset(labels[i] for i in range(len(labels)) if mask >> i & 1)
        for mask in masks
    ]
    sets.sort(key=lambda s: (len(s), sorted(s)))
    return sets


def weakly_stable_sets(mu: MajorityRelation) -> list[frozenset[str]]:
    """All minimal (smallest-cardinality) weakly stable sets.

    Q is weakly stable when every outside alternative that beats some member
    is itself beaten by some member; threats entirely inside Q don't count.
    Minimality is by cardinality: the search scans set sizes upward and keeps
    every stable set of the first size that admits one.
    """
    m = mu.m
    att = _attacker_masks(mu)
    full = (1 << m) - 1

    def qualifies(mask: int) -> bool:
        rest = full & ~mask
        threats = 0
        probe = mask
        while probe:
            low = probe & -probe
            threats |= att[low.bit_length() - 1]
            probe ^= low
        threats &= rest
        while threats:
            low = threats & -threats
            if not att[low.bit_length() - 1] & mask:
                return False
            threats ^= low
        return True

    return _masks_to_sets(_smallest_masks(m, qualifies), mu.labels)


def minimal_weakly_stable(mu: MajorityRelation) -> frozenset[str]:
    return frozenset().union(*weakly_stable_sets(mu))


def k_stable_sets(mu: MajorityRelation, k: int) -> list[frozenset[str]]:
    """All minimal (smallest-cardinality) sets from which every outsider is
    reachable by a majority path of length at most ``k``."""
    if k <= 1:
        raise ValueError("k-stability needs k > 1")
    m = mu.m
    adj = mu.matrix
    reach = adj.copy()
    power = adj.copy()
    for _ in range(k - 1):
        power = (power.astype(np.uint8) @ adj.astype(np.uint8)) > 0
        reach |= power
    reach_masks = []
    for i in range(m):
        mask = 0
        for j in np.nonzero(reach[i])[0]:
            mask |= 1 << int(j)
        reach_masks.append(mask)
    full = (1 << m) - 1

    def qualifies(mask: int) -> bool:
        covered = mask
        probe = mask
        while probe:
            low = probe & -probe
            covered |= reach_masks[low.bit_length() - 1]
            probe ^= low
        return covered == full

    return _masks_to_sets(_smallest_masks(m, qualifies), mu.labels)


def k_stable(mu: MajorityRelation, k: int) -> frozenset[str]:
    return frozenset().union(*k_stable_sets(mu, k))


# ---------------------------------------------------------------------------
# grade-based rules
# ---------------------------------------------------------------------------

def threshold_order(g: GradeTable) -> list[frozenset[str]]:
    """Equivalence classes best-first under the threshold comparison.

    An alternative's signature counts its worst grades first: fewer bottom
    grades wins; ties move to the next grade up, and so on (lexicographic
    comparison of grade-count vectors from worst grade to best).
    """
    scale = g.scale()
    signatures: dict[str, tuple[int, ...]] = {}
    for lab in g.labels:
        column = g.column(lab)
        signatures[lab] = tuple(sum(1 for v in column if v == s) for s in scale)
    classes: dict[tuple[int, ...], list[str]] = {}
    for lab, sig in signatures.items():
        classes.setdefault(sig, []).append(lab)
    ordered = sorted(classes.items(), key=lambda kv: kv[0])
    return [frozenset(labs) for _, labs in ordered]


def threshold_rule(g: GradeTable) -> frozenset[str]:
    return threshold_order(g)[0]


def super_threshold(
    g: GradeTable, threshold: Callable[[GradeTable], float] | None = None
) -> frozenset[str]:
    """Alternatives whose grade sum meets a threshold; by default the mean
    grade sum of the presented alternatives."""
    sums = g.grades.sum(axis=0)
    t = float(sums.mean()) if threshold is None else float(threshold(g))
    return frozenset(lab for lab, s in zip(g.labels, sums) if float(s) >= t)


def q_pareto(g: GradeTable | Profile, q: int) -> frozenset[str]:
    """Alternatives weakly dominated by at most ``q`` others.

    y weakly dominates x when y scores at least as well as x on every
    criterion (y itself excluded).  q = 0 keeps exactly the alternatives
    nothing else weakly dominates.
    """
    if q < 0:
        raise ValueError("q-Pareto needs q >= 0")
    if isinstance(g, Profile):
        g = grade_table(g)
    m = g.m
    dominates = np.ones((m, m), dtype=bool)
    for i in range(g.n):
        row = g.grades[i]
        dominates &= row[:, None] >= row[None, :]
    np.fill_diagonal(dominates, False)
    counts = dominates.sum(axis=0)
    return frozenset(lab for lab, c in zip(g.labels, counts) if int(c) <= q)


# ---------------------------------------------------------------------------
# support-matrix rules
# ---------------------------------------------------------------------------

def minimax(t: TournamentMatrix) -> frozenset[str]:
    """Minimise the strongest support any rival musters against you."""
    if t.m == 1:
        return frozenset(t.labels)
    counts = t.counts.copy()
    np.fill_diagonal(counts, -1)  # exclude self from the column max
    worst_against = counts.max(axis=0)
    best = worst_against.min()
    return frozenset(
        lab for lab, w in zip(t.labels, worst_against) if w == best
    )


def simpson(t: TournamentMatrix) -> frozenset[str]:
    """Maximise your weakest pairwise support (maximin)."""
    if t.m == 1:
        return frozenset(t.labels)
    counts = t.counts.copy()
    np.fill_diagonal(counts, t.voters + 1)  # exclude self from the row min
    weakest = counts.min(axis=1)
    best = weakest.max()
    return frozenset(lab for lab, w in zip(t.labels, weakest) if w == best)


# ---------------------------------------------------------------------------
# the indexed registry
# ---------------------------------------------------------------------------

# index -> (mnemonic, input kind, parameter, single winner?)
_TABLE: dict[int, tuple[str, str, str | None, bool]] = {
    1: ("simple_majority", "profile", None, True),
    2: ("plurality", "profile", None, False),
    3: ("inverse_plurality", "profile", None, False),
    4: ("q_approval", "profile", "q", False),
    5: ("run_off", "profile", None, True),
    6: ("hare", "profile", None, True),
    7: ("borda", "profile", None, False),
    8: ("black", "profile", None, False),
    9: ("inverse_borda", "profile", None, False),
    10: ("nanson", "profile", None, False),
    11: ("coombs", "profile", None, True),
    12: ("minimal_dominant", "mu", None, False),
    13: ("minimal_undominated", "mu", None, False),
    14: ("minimal_weakly_stable", "mu", None, False),
    15: ("fishburn", "mu", None, False),
    16: ("uncovered_1", "mu", None, False),
    17: ("uncovered_2", "mu", None, False),
    18: ("richelson", "mu", None, False),
    19: ("condorcet_winner", "mu", None, True),
    20: ("core", "mu", None, False),
    21: ("k_stable", "mu", "k", False),
    22: ("threshold", "grades", None, False),
    23: ("copeland_1", "mu", None, False),
    24: ("copeland_2", "mu", None, False),
    25: ("copeland_3", "mu", None, False),
    26: ("super_threshold", "grades", "threshold", False),
    27: ("minimax", "support", None, False),
    28: ("simpson", "support", None, False),
}

PROCEDURE_NAMES: dict[int, str] = {i: row[0] for i, row in _TABLE.items()}
NAME_TO_INDEX: dict[str, int] = {row[0]: i for i, row in _TABLE.items()}


@dataclass(frozen=True)
class Procedure:
    """One of the 28 indexed procedures, with its parameter if it takes one.

    ``q`` belongs to the q-approval rule (default 2 in the two-stage
    catalog), ``k`` to the k-stable rule (default 2), and ``threshold`` is
    an optional replacement cutoff function for the super-threshold rule.
    """

    index: int
    q: int | None = None
    k: int | None = None
    threshold: Callable[[GradeTable], float] | None = None

    def __post_init__(self):
        if self.index not in _TABLE:
            raise ValueError(f"no procedure with index {self.index}")
        name, _, param, _ = _TABLE[self.index]
        if self.q is not None and param != "q":
            raise ValueError(f"{name} takes no q parameter")
        if self.k is not None and param != "k":
            raise ValueError(f"{name} takes no k parameter")
        if self.threshold is not None and param != "threshold":
            raise ValueError(f"{name} takes no threshold parameter")
        if param == "q" and (self.q is None or self.q < 1):
            raise ValueError("q-approval needs q >= 1")
        if param == "k" and (self.k is None or self.k <= 1):
            raise ValueError("k-stable needs k > 1")

    @property
    def name(self) -> str:
        return _TABLE[self.index][0]

    @property
    def kind(self) -> str:
        return _TABLE[self.index][1]

    @property
    def single_winner(self) -> bool:
        return _TABLE[self.index][3]

    @property
    def mu_capable(self) -> bool:
        return self.kind == "mu"

    def label(self) -> str:
        if self.index == 4:
            return f"q_approval(q={self.q})"
        if self.index == 21:
            return f"k_stable(k={self.k})"
        return self.name

    # -- evaluation ----------------------------------------------------

    def choose(self, p: Profile, subset: Iterable[str] | None = None) -> frozenset[str]:
        pc = contract(p, subset) if subset is not None else p
        kind = self.kind
        if kind == "profile":
            return self._profile_choice(pc)
        if kind == "mu":
            return self.choose_mu(majority_relation(pc))
        if kind == "grades":
            return self.choose_grades(grade_table(pc))
        return self.choose_support(tournament_matrix(pc))

    def _profile_choice(self, pc: Profile) -> frozenset[str]:
        i = self.index
        if i == 1:
            return simple_majority(pc)
        if i == 2:
            return plurality(pc)
        if i == 3:
            return inverse_plurality(pc)
        if i == 4:
            return q_approval(pc, self.q)
        if i == 5:
            return run_off(pc)
        if i == 6:
            return hare(pc)
        if i == 7:
            return borda(pc)
        if i == 8:
            return black(pc)
        if i == 9:
            return inverse_borda(pc)
        if i == 10:
            return nanson(pc)
        return coombs(pc)

    def choose_mu(
        self, mu: MajorityRelation, subset: Iterable[str] | None = None
    ) -> frozenset[str]:
        if not self.mu_capable:
            raise TypeError(f"{self.name} cannot be evaluated from a majority relation alone")
        if subset is not None:
            mu = mu.restrict(subset)
        i = self.index
        if i == 12:
            return minimal_dominant(mu)
        if i == 13:
            return minimal_undominated(mu)
        if i == 14:
            return minimal_weakly_stable(mu)
        if i == 15:
            return fishburn(mu)
        if i == 16:
            return uncovered_1(mu)
        if i == 17:
            return uncovered_2(mu)
        if i == 18:
            return richelson(mu)
        if i == 19:
            return condorcet_winner(mu)
        if i == 20:
            return core(mu)
        if i == 21:
            return k_stable(mu, self.k)
        if i == 23:
            return copeland(mu, 1)
        if i == 24:
            return copeland(mu, 2)
        return copeland(mu, 3)

    def choose_grades(
        self, g: GradeTable, subset: Iterable[str] | None = None
    ) -> frozenset[str]:
        if self.kind != "grades":
            raise TypeError(f"{self.name} cannot be evaluated from a grade table alone")
        if subset is not None:
            g = g.restrict(subset)
        if self.index == 22:
            return threshold_rule(g)
        return super_threshold(g, self.threshold)

    def choose_support(
        self, t: TournamentMatrix, subset: Iterable[str] | None = None
    ) -> frozenset[str]:
        if self.kind != "support":
            raise TypeError(f"{self.name} cannot be evaluated from a support matrix alone")
        if subset is not None:
            t = t.restrict(subset)
        if self.index == 27:
            return minimax(t)
        return simpson(t)


@dataclass(frozen=True)
class QParetoRule:
    """The q-Pareto rule as a standalone choice rule.

    Not one of the 28 indexed procedures, but it shares their calling
    surface so the axiom checkers and the command line can drive it.
    Keeps every alternative weakly dominated by at most ``q`` others.
    """

    q: int

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("q-Pareto needs q >= 0")

    @property
    def name(self) -> str:
        return "qpareto"

    @property
    def kind(self) -> str:
        return "grades"

    @property
    def single_winner(self) -> bool:
        return False

    @property
    def mu_capable(self) -> bool:
        return False

    def label(self) -> str:
        return f"qpareto(q={self.q})"

    def choose(self, p: Profile, subset: Iterable[str] | None = None) -> frozenset[str]:
        pc = contract(p, subset) if subset is not None else p
        return q_pareto(grade_table(pc), self.q)

    def choose_grades(
        self, g: GradeTable, subset: Iterable[str] | None = None
    ) -> frozenset[str]:
        if subset is not None:
            g = g.restrict(subset)
        return q_pareto(g, self.q)


def make_procedure(
    spec: int | str | Procedure,
    q: int | None = None,
    k: int | None = None,
    threshold: Callable[[GradeTable], float] | None = None,
) -> "Procedure | QParetoRule":
    """Build a :class:`Procedure` from an index, a mnemonic name, or pass an
    existing one through (parameters must then be omitted).  The name
    ``"qpareto"`` (or ``"q_pareto"``) builds the standalone q-Pareto rule,
    with ``q`` defaulting to 2 like the other parameterized rules."""
    if isinstance(spec, (Procedure, QParetoRule)):
        if q is not None or k is not None or threshold is not None:
            raise ValueError("cannot re-parameterize an existing Procedure")
        return spec
    if isinstance(spec, str):
        key = spec.strip().lower()
        if key in ("qpareto", "q_pareto"):
            if k is not None or threshold is not None:
                raise ValueError("q-Pareto takes only the q parameter")
            return QParetoRule(2 if q is None else q)
        if key.isdigit():
            index = int(key)
        elif key in NAME_TO_INDEX:
            index = NAME_TO_INDEX[key]
        else:
            raise ValueError(
                f"unknown procedure {spec!r}; known names: "
                + ", ".join(sorted(NAME_TO_INDEX)) + ", qpareto"
            )
    else:
        index = spec
    if index in _TABLE and _TABLE[index][2] == "q" and q is None:
        q = 2
    if index in _TABLE and _TABLE[index][2] == "k" and k is None:
        k = 2
    return Procedure(index, q=q, k=k, threshold=threshold)


def apply_procedure(
    spec: int | str | Procedure,
    p: Profile,
    subset: Iterable[str] | None = None,
    *,
    q: int | None = None,
    k: int | None = None,
    threshold: Callable[[GradeTable], float] | None = None,
) -> frozenset[str]:
    """Evaluate one procedure on the contraction of ``p`` to ``subset``."""
    if isinstance(spec, Procedure):
        proc = spec
    else:
        proc = make_procedure(spec, q=q, k=k, threshold=threshold)
    return proc.choose(p, subset)
