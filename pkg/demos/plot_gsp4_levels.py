"""
Strata of the Siegel threefold at five parahoric levels
========================================================

For GSp4 with the Siegel cocharacter the admissible set has 13 elements.
Each parahoric level groups them into KR strata, and each KR stratum is cut
into EKOR strata indexed by minimal coset representatives.
"""

from strata_atlas import admissible_set, gsp_context, kr_fiber, kr_set, level_to_parahoric
from strata_atlas.siegel import NAMED_LEVELS_G2

ctx = gsp_context(2)
adm = admissible_set(ctx)
print(len(adm), "admissible elements")

###############################################################################
# Every element carries a p-rank, read off from the fixed points of its
# affine permutation window.

for x in adm:
    print(f"{str(x):>14}  length {x.length}  p-rank {ctx.model.p_rank(x.canonical)}")

###############################################################################
# At each level, list the KR types with their EKOR fibers and dimensions.

for name, J in NAMED_LEVELS_G2.items():
    K = level_to_parahoric(ctx, J)
    print(f"\n{name} (J = {set(J)}), W_K of order {len(K)}")
    for w in kr_set(adm, K):
        fiber = kr_fiber(adm, K, w)
        dims = ", ".join(str(x.length) for x in fiber)
        print(f"  [{w}]: {', '.join(map(str, fiber))}   dims {dims}")
