"""Link stability: judge the pair, not the person.

Classical stability maximizes each side's happiness separately. Judging a
pair by its combined strength (the sum, or the max, of the two scores it
exchanges) can stabilize a very different marriage. Run with
`python demos/03_link_strength.py`.
"""

import smq

market = smq.validate(
    2,
    men_scores=[[30, 3], [4, 3]],
    women_scores=[[5, 6], [10, 2]],
)

print("additive pair strengths:")
for m in range(market.n):
    row = [smq.link_value(market, m, w, "add") for w in range(market.n)]
    print(f"  {smq.man_name(m)}: {row}")

# m1 and w1 form an overwhelmingly strong pair (30 + 5 = 35), yet w1
# slightly prefers m2, so classical stability tears that pair apart:
classical = smq.gs(smq.derive_classical(market), "men")
print("classical male-optimal:", classical.partner_of_man,
      "strength", smq.marriage_link(market, classical, "add"))

# Replacing every score by the pair strength and rerunning deferred
# acceptance keeps the strong pair together:
strong = smq.link_stable_gs(market, "add")
print("link solver:           ", strong.partner_of_man,
      "strength", smq.marriage_link(market, strong, "add"))

stable = smq.enumerate_stable(market, "link-add")
print("all link-stable matches:", [m.partner_of_man for m in stable.marriages()])
print("highest-strength match: ", [m.partner_of_man for m in smq.highest_link(market, "add")])

# The transformed profile is symmetric (both members of a pair see the same
# value) and tie-free here, which is exactly when the solver's output is
# guaranteed to be the unique strongest link-stable marriage.
profile = smq.link_transform(market, "add")
print("ties in the transformed profile:", smq.has_ties(profile))

# The max-strength variant works the same way:
print("max-strength solver:", smq.link_stable_gs(market, "max").partner_of_man,
      "strength", smq.marriage_link(market, smq.link_stable_gs(market, "max"), "max"))
