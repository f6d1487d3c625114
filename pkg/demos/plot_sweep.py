"""
How often is a constant 2?
==========================

Every comparable pair with ``v`` positive gets a clan, and every ``w`` of the
right length gets a predicted constant.  Here the predictions are tallied
for small ranks and checked against the oracle along the way.
"""

from collections import Counter

from schubert_bd import expand_richardson_class, longest_element, multiply, valid_pairs
from schubert_bd.oracle import get_oracle

# %%
# Tally
# -----
for t, n in [("B", 2), ("B", 3), ("D", 3), ("D", 4)]:
    w0 = longest_element(n, t)
    oracle = get_oracle(n, t)
    counts, wrong = Counter(), 0
    for u, v in valid_pairs(n, t):
        truth = oracle.expansion(multiply(w0, u), v)
        for row in expand_richardson_class(u, v).rows:
            counts[row.coefficient] += 1
            wrong += truth[row.w] != row.coefficient
    print(f"{t}{n}: {len(valid_pairs(n, t)):3d} pairs, coefficients {dict(sorted(counts.items()))}, "
          f"{wrong} disagreements")

# %%
# In type D the rule has no doubling step, so 2 never shows up there.
