"""
EKOR closure at Klingen level
=============================

The EKOR order ``≤_{K,σ}`` allows conjugating by ``W_K`` before comparing
in the Bruhat order.  At Klingen level that produces one edge the Bruhat
order alone does not see.
"""

from strata_atlas import admissible_set, ekor_poset, ekor_set, gsp_context, ksigma_leq, to_dot
from strata_atlas.orders import poset_from_relation
from strata_atlas.siegel import level_to_parahoric

ctx = gsp_context(2)
adm = admissible_set(ctx)
K = level_to_parahoric(ctx, (0, 1))

###############################################################################
# Compare the two relations on the eight EKOR strata.

ekor = ekor_poset(adm, K)
bruhat = poset_from_relation(ekor_set(adm, K), ctx.bruhat_leq)
extra = ekor.cover_pairs() - bruhat.cover_pairs()
for a, b in sorted(extra, key=lambda e: (ctx.sort_key(e[0]), ctx.sort_key(e[1]))):
    print(f"{a} -> {b} holds only after conjugation")

###############################################################################
# The witness: conjugating ``s0 tau`` by ``s2`` lands below ``s1 s2 tau``.

x1, x2 = ctx.parse("s0 tau"), ctx.parse("s1 s2 tau")
s2 = ctx.generator(2)
print(s2 * x1 * s2, "<=", x2, ctx.bruhat_leq(s2 * x1 * s2, x2))
print("K-sigma comparable:", ksigma_leq(K, x1, x2))

###############################################################################
# Graphviz source of the Hasse diagram.

print(to_dot(ekor))
