"""
A B4 product, one orbit at a time
=================================

We expand ``S_{w0 u} * S_v`` for ``u = -2,-3,-4,1`` and ``v = 2,3,4,1`` in
type B4 by pushing the clan of the Richardson variety ``X_u^v`` up the weak
order, and then ask the divided-difference oracle whether it agrees.
"""

# %%
# The pair and its clan
# ---------------------
from schubert_bd import (
    act_word,
    expand_richardson_class,
    gamma_of_pair,
    longest_element,
    multiply,
    parse_signed_perm,
    reduced_word,
    target_clan,
)
from schubert_bd.oracle import get_oracle

u = parse_signed_perm("-2,-3,-4,1", "B")
v = parse_signed_perm("2,3,4,1", "B")
gamma = gamma_of_pair(u, v)
print("gamma(u, v) =", gamma)
print("dense orbit =", target_clan(4, "B"))

# %%
# Acting with one element
# -----------------------
# Words act from the right end: the last letter moves the clan first.  Rule 7
# is the step that doubles the constant.
out = act_word((2, 1, 3, 2, 4, 3, 4), gamma, "B")
for step in out.trace:
    print(f"s_{step.letter}  {step.rule.value:>5}  {step.clan}")
print("rule 7 fired:", out.rule7_fired)

# %%
# The whole expansion
# -------------------
# Only two of the 44 elements of length 7 carry the dense orbit.
expansion = expand_richardson_class(u, v)
for w, c in expansion.coefficients.items():
    print(reduced_word(w), c)

# %%
# Against the oracle
# ------------------
w0 = longest_element(4, "B")
truth = get_oracle(4, "B").expansion(multiply(w0, u), v)
same = all(truth[row.w] == row.coefficient for row in expansion.rows)
print("oracle agrees on all", len(expansion.rows), "elements:", same)
