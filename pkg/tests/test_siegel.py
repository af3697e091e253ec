from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strata_atlas import DomainError, LatticeError, SiegelLevel, SiegelModel, component_count
from strata_atlas.siegel import AffSimPerm, default_cap, from_pair, kappa, level_generators, p_rank


def coroots(g):
    n = 2 * g
    out = []
    for i in range(1, g):
        v = [0] * n
        v[i - 1], v[i], v[n - i - 1], v[n - i] = 1, -1, 1, -1
        out.append(v)
    v = [0] * n
    v[g - 1], v[g] = 1, -1
    out.append(v)
    return out


def test_window_evaluation_is_periodic():
    x = AffSimPerm((0, 2, 3, 5))
    assert x.g == 2
    assert x(5) == x(1) + 4
    assert x(-3) == x(1) - 4
    assert x.is_valid()
    assert not AffSimPerm((1, 1, 3, 4)).is_valid()


def test_kappa_and_p_rank(ctx, w):
    assert kappa(ctx.tau) == 1
    assert kappa(ctx.identity) == 0
    assert p_rank(ctx.identity) == 4
    assert p_rank(ctx.tau) == 0
    assert p_rank((5, 6, 3, 4)) == 2
    assert p_rank(w("s0 s1 tau")) == 1


def test_from_pair():
    assert from_pair((1, 0), (2, 1)) == AffSimPerm((4, 1))


def test_translation_lattice_checks():
    m = SiegelModel(2)
    with pytest.raises(LatticeError):
        m.translation((1, 0, 0, 0))
    with pytest.raises(LatticeError):
        m.translation((F(1, 2), F(1, 2), F(1, 2), F(1, 2)))
    assert m.translation((1, 1, 1, 1)) == AffSimPerm((5, 6, 7, 8))


def test_positive_roots_and_two_rho():
    m = SiegelModel(2)
    assert len(m.positive_roots) == 4
    assert m.pair_2rho((1, 1, 0, 0)) == 3
    assert SiegelModel(3).pair_2rho((1, 1, 1, 0, 0, 0)) == 6


def test_dominance_and_orbit():
    m = SiegelModel(2)
    assert m.is_dominant((1, 1, 0, 0))
    assert not m.is_dominant((0, 1, 0, 1))
    assert m.dominant((0, 1, 0, 1)) == (1, 1, 0, 0)
    assert m.weyl_orbit((1, 1, 0, 0)) == [(1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1)]
    assert len(SiegelModel(3).weyl_orbit((1, 1, 1, 0, 0, 0))) == 8


def test_coroot_coefficients_frozen():
    m = SiegelModel(2)
    half = F(1, 2)
    assert m.coroot_coefficients((half, half, -half, -half)) == (half, 1)
    assert m.coroot_coefficients((0, half, -half, 0)) == (0, half)
    with pytest.raises(DomainError):
        m.coroot_coefficients((1, 0, 0, 0))


@given(st.lists(st.fractions(max_denominator=6), min_size=3, max_size=3))
def test_coroot_coefficients_invert_the_basis(cs):
    m = SiegelModel(3)
    vec = [sum(c * r[k] for c, r in zip(cs, coroots(3))) for k in range(6)]
    assert list(m.coroot_coefficients(vec)) == cs


def test_level_parsing():
    assert SiegelLevel.parse("1,0") == (0, 1)
    assert str(SiegelLevel((2, 0))) == "0,2"
    with pytest.raises(ValueError):
        SiegelLevel(())
    with pytest.raises(ValueError):
        SiegelLevel((0, 3), g=2)
    assert level_generators(2, (0, 1)) == (2,)


def test_component_counts():
    assert component_count((0,)) == 1
    assert component_count((1,)) == 1
    assert component_count((0, 1)) == 2
    assert component_count((0, 2)) == 3
    assert component_count((0, 1, 2)) == 4


def test_default_cap():
    assert default_cap(2) == 5
    assert default_cap(3) == 9
    assert default_cap(4) == 16
