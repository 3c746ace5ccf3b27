"""Normative conditions: check one input, then hunt for violations.

A condition checker gives a verdict with a replayable witness; the search
engine sweeps profile space until it finds one; bounded verification sweeps
a whole size class to certify that none exists.
"""

from twostage import (
    SearchConfig,
    check_axiom,
    compose,
    format_profile,
    improve,
    search_counterexample,
    verify_bounded,
)


def main():
    rule = compose(2, 1)  # plurality shortlist, simple-majority decision
    print("rule:", rule.label())

    cfg = SearchConfig(m_values=(2, 3), n_values=(1, 2, 3, 4, 5), mode="exhaustive")
    for axiom in ("H", "SM"):
        result = search_counterexample(rule, axiom, cfg)
        print(f"\nsearch {axiom}: {result.status} after {result.examined} profiles")
        print("witness profile:")
        print("  " + format_profile(result.profile).replace("\n", "\n  ").rstrip())
        print("explanation:", result.witness.description)

        # replay the witness by hand
        verdict = check_axiom(rule, result.profile, axiom)
        assert not verdict.holds
        if axiom == "SM":
            before = result.witness.observation("choice_before")
            after = rule.choose(improve(result.profile, result.witness.improvement))
            print(f"replayed: {sorted(before)} -> {sorted(after)} after the improvement")

    print("\nexhaustive verification, all 216 profiles at m=3, n=3:")
    outcome = verify_bounded(rule, "MON1", 3, 3)
    print(f"  improving a winner never unseats it: {outcome.status} "
          f"({outcome.checked} profiles)")
    outcome = verify_bounded(rule, "H", 3, 3)
    print(f"  heredity: {outcome.status} -- no three-criteria counterexample exists")

    outcome = verify_bounded(rule, "H", 3, 4)
    print(f"\nat m=3, n=4 heredity is {outcome.status} "
          f"(profile {outcome.checked} of 1296):")
    print("  " + outcome.witness.description)


if __name__ == "__main__":
    main()
