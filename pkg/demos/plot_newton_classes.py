"""
Newton classes and Hodge-Newton decomposability
================================================

σ-straight admissible elements reach every Newton class.  For GSp4 every
non-basic class is Hodge-Newton decomposable; for GSp6 that fails.
"""

from strata_atlas import admissible_set, b_set, fully_hn_decomposable, gsp_context, leaf_dimension

for g in (2, 3):
    ctx = gsp_context(g)
    adm = admissible_set(ctx)
    print(f"\nGSp{2 * g}: {len(adm)} admissible elements")
    for b in b_set(adm):
        nu = ", ".join(str(v) for v in b.nu.nu)
        print(f"  nu = ({nu})  rep {b.straight_rep}  leaf dim {leaf_dimension(b)}")

    ###########################################################################
    # A class is HN decomposable when ``μ - ν`` misses some simple coroot.
    ok, rows = fully_hn_decomposable(adm)
    for r in rows:
        print("   coroot coefficients", [str(c) for c in r["coefficients"]], r["decomposable"])
    print("  fully HN decomposable:", ok)
