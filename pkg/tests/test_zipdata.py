import pytest

from strata_atlas import (
    MembershipError,
    admissible_set,
    eo_poset_in_fiber,
    gsp_context,
    kr_set,
    level_to_parahoric,
    min_double_rep,
    ordinary_and_superspecial,
    ordinary_section,
    superspecial_section,
    zip_datum,
)
from strata_atlas.siegel import NAMED_LEVELS_G2
from strata_atlas.zipdata import fiber_coordinate_lengths


def test_klingen_datum_over_tau(adm, levels, w):
    z = zip_datum(adm, levels["klingen"], w("tau"))
    assert z.Jw == set() and z.sigma_prime_Jw == set()
    assert [str(x) for x in z.fiber] == ["tau", "s0 tau"]


def test_hyperspecial_datum(adm, levels, w):
    z = zip_datum(adm, levels["hyperspecial"], w("tau"))
    assert z.Jw == {1} and z.sigma_prime_Jw == {1}
    assert len(z.fiber) == 4


def test_iwahori_datum(adm, levels):
    K = levels["iwahori"]
    for x in adm:
        z = zip_datum(adm, K, x)
        assert z.Jw == set() and z.fiber == (x,)
        assert ordinary_and_superspecial(z) == (x, x)


def test_membership(adm, levels, w):
    with pytest.raises(MembershipError):
        zip_datum(adm, levels["klingen"], w("s0 tau"))


def test_eo_chains(adm, levels, w):
    p = eo_poset_in_fiber(zip_datum(adm, levels["klingen"], w("tau")))
    assert [(str(p.nodes[i]), str(p.nodes[j])) for i, j in p.covers] == [("tau", "s0 tau")]
    assert [a["dim"] for a in p.attrs] == [0, 1]
    p = eo_poset_in_fiber(zip_datum(adm, levels["hyperspecial"], w("tau")))
    assert len(p.covers) == 3 and [a["dim"] for a in p.attrs] == [0, 1, 2, 3]


def test_siegel_sections(adm, levels, w):
    z = zip_datum(adm, levels["siegel"], w("s0 s2 tau"))
    assert ordinary_and_superspecial(z) == (w("s0 s2 s1 tau"), w("s0 s2 tau"))


@pytest.mark.parametrize("sigma", [None, "tau"])
def test_fiber_properties_every_level(sigma):
    c = gsp_context(2, sigma=sigma)
    a = admissible_set(c)
    for J in NAMED_LEVELS_G2.values():
        try:
            K = level_to_parahoric(c, J)
        except Exception:
            continue  # level not stable under the twisted Frobenius
        for wk in kr_set(a, K):
            z = zip_datum(a, K, wk)
            assert len(z.fiber) * len(K.subgroup(z.Jw)) == len(K)
            assert z.sigma_prime_Jw <= set(K.gens)
            p = eo_poset_in_fiber(z)  # cross-checked against the EKOR order
            for i, j in p.covers:
                assert p.nodes[i].length < p.nodes[j].length
            top, bottom = ordinary_and_superspecial(z)
            assert top == ordinary_section(a, K, wk)
            assert bottom == superspecial_section(a, K, wk)
            assert all(l == m for _, l, m in fiber_coordinate_lengths(z))
            for x in z.fiber:
                assert zip_datum(a, K, min_double_rep(K, x)).Jw == z.Jw
