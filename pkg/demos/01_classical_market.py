"""A first look: scores, the induced strict profile, and deferred acceptance.

Two men, two women. Everyone hands out integer scores; higher means more
wanted. Run with `python demos/01_classical_market.py`.
"""

import smq

market = smq.validate(
    2,
    men_scores=[[9, 1], [3, 2]],
    women_scores=[[1, 2], [3, 1]],
)

print("men's scores over women:  ", market.men_scores)
print("women's scores over men:  ", market.women_scores)

# Keeping only the orderings the scores induce gives the classical problem.
profile = smq.derive_classical(market)
for i, prefs in enumerate(profile.men_prefs):
    print(f"  {smq.man_name(i)} ranks:", " > ".join(smq.woman_name(w) for w in prefs))
for j, prefs in enumerate(profile.women_prefs):
    print(f"  {smq.woman_name(j)} ranks:", " > ".join(smq.man_name(m) for m in prefs))

# Watch the proposal rounds: m1 grabs w1 first, m2 bumps him, m1 settles.
print("\nproposal trace (men proposing):")
for event in smq.step_trace(profile, "men"):
    line = f"  {smq.man_name(event.proposer)} -> {smq.woman_name(event.proposee)}: {event.outcome}"
    if event.displaced is not None:
        line += f" {smq.man_name(event.displaced)}"
    print(line)

male_optimal = smq.gs(profile, "men")
female_optimal = smq.gs(profile, "women")
print("\nmale-optimal:  ", [f"{smq.man_name(m)}-{smq.woman_name(w)}" for m, w in male_optimal.pairs()])
print("female-optimal:", [f"{smq.man_name(m)}-{smq.woman_name(w)}" for m, w in female_optimal.pairs()])
print("they coincide here, so this market has a single stable marriage:")
print("  enumerated stable set:", [m.partner_of_man for m in smq.enumerate_stable(market, "classical").marriages()])
