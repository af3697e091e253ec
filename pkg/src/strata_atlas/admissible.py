"""Admissible sets and the EKOR / KR index sets attached to a parahoric."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .affweyl import Elt, GroupCtx
from .errors import DomainError, MembershipError
from .parabolic import (
    Parahoric,
    is_left_min,
    jw_min_reps,
    max_section_rep,
    min_double_rep,
    min_in_left_coset,
    type_Jw,
)


@dataclass(frozen=True)
class AdmissibleSet:
    """``Adm({μ})``: the elements below some ``t^{μ'}``, μ' ∈ W₀μ."""

    ctx: GroupCtx
    mu: tuple[int, ...]
    elements: tuple[Elt, ...]
    maximals: tuple[Elt, ...]
    _index: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __contains__(self, x: Elt) -> bool:
        return x in self._index

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _check_mu(ctx: GroupCtx, mu) -> tuple[int, ...]:
    mu = ctx.mu if mu is None else tuple(mu)
    ctx.model.check_coweight(mu)
    if not ctx.model.is_dominant(mu):
        raise DomainError(f"{mu} is not dominant")
    return mu


def _maximal_translations(ctx: GroupCtx, mu) -> list[Elt]:
    return ctx.sorted(ctx.translation(m) for m in ctx.model.weyl_orbit(mu))


def admissible_set(ctx: GroupCtx, mu: Sequence[int] | None = None) -> AdmissibleSet:
    """Subword closure of reduced words of the translations ``t^{μ'}``."""
    mu = _check_mu(ctx, mu)
    maximals = _maximal_translations(ctx, mu)
    out: set[Elt] = set()
    for t in maximals:
        word = t.word
        layer = {ctx.omega_element(word.omega)}
        for i in reversed(word.letters):
            s = ctx.generators[i]
            layer |= {s * x for x in layer}
        out |= layer
    elements = tuple(ctx.sorted(out))
    return AdmissibleSet(ctx, mu, elements, tuple(maximals), frozenset(elements))


def admissible_set_by_ball(ctx: GroupCtx, mu: Sequence[int] | None = None) -> AdmissibleSet:
    """Same set, by filtering the length ball with the Bruhat order."""
    mu = _check_mu(ctx, mu)
    maximals = _maximal_translations(ctx, mu)
    top = max(t.length for t in maximals)
    ball = ctx.ball_elements(maximals[0].omega, top)
    elements = tuple(x for x in ball if any(ctx.bruhat_leq(x, t) for t in maximals))
    return AdmissibleSet(ctx, mu, elements, tuple(maximals), frozenset(elements))


def ekor_set(adm: AdmissibleSet, K: Parahoric) -> list[Elt]:
    """``^K Adm({μ}) = Adm({μ}) ∩ ^K W̃``."""
    return [x for x in adm.elements if is_left_min(K, x)]


def ekor_set_from_double_cosets(adm: AdmissibleSet, K: Parahoric) -> frozenset[Elt]:
    """``Adm({μ})^K ∩ ^K W̃``, where ``Adm^K = W_K Adm W_K``."""
    return frozenset(
        min_in_left_coset(K, x * y) for x in adm.elements for y in K.elements
    )


def kr_set(adm: AdmissibleSet, K: Parahoric) -> list[Elt]:
    """``Adm({μ})_K`` as minimal double-coset representatives."""
    return adm.ctx.sorted(min_double_rep(K, x) for x in adm.elements)


def _require_ekor(adm, K, x):
    if x not in adm or not is_left_min(K, x):
        raise MembershipError(f"{x!r} is not in ^K Adm")


def _require_kr(adm, K, w):
    if w not in adm or min_double_rep(K, w) != w:
        raise MembershipError(f"{w!r} is not a KR type of Adm_K")


def ekor_to_kr(adm: AdmissibleSet, K: Parahoric, x: Elt) -> Elt:
    _require_ekor(adm, K, x)
    return min_double_rep(K, x)


def kr_fiber(adm: AdmissibleSet, K: Parahoric, w: Elt) -> list[Elt]:
    """``W_K w W_K ∩ ^K W̃ = w · ^{J_w}W_K``, sorted."""
    _require_kr(adm, K, w)
    return adm.ctx.sorted(w * v for v in jw_min_reps(K, type_Jw(K, w)))


def ordinary_section(adm: AdmissibleSet, K: Parahoric, w: Elt) -> Elt:
    """``^K w_K``, the open stratum of the KR stratum."""
    _require_kr(adm, K, w)
    return max_section_rep(K, w)


def superspecial_section(adm: AdmissibleSet, K: Parahoric, w: Elt) -> Elt:
    """``x_w = w``, the closed stratum of the KR stratum."""
    _require_kr(adm, K, w)
    return w


@dataclass(frozen=True)
class StratumRecord:
    elt: Elt
    dim: int
    p_rank: int | None
    kr_type: Elt
    sigma_straight: bool
    newton: object | None = None


def _p_rank(ctx, x):
    f = getattr(ctx.model, "p_rank", None)
    return None if f is None else f(x.canonical)


def _newton_lookup(adm, K):
    from .newton import b_set, newton_point

    try:
        classes = {b.nu: b for b in b_set(adm, K)}
    except DomainError:
        classes = {}

    def lookup(x):
        return classes.get(newton_point(x))

    return lookup


def decorate(adm: AdmissibleSet, K: Parahoric) -> list[StratumRecord]:
    """One record per EKOR stratum: dimension ``ℓ(x)``, p-rank, KR type, Newton class."""
    from .newton import is_sigma_straight

    ctx = adm.ctx
    lookup = _newton_lookup(adm, K)
    return [
        StratumRecord(
            elt=x,
            dim=x.length,
            p_rank=_p_rank(ctx, x),
            kr_type=min_double_rep(K, x),
            sigma_straight=is_sigma_straight(x),
            newton=lookup(x),
        )
        for x in ekor_set(adm, K)
    ]


def kr_records(adm: AdmissibleSet, K: Parahoric) -> list[StratumRecord]:
    """One record per KR stratum, with invariants read off ``^K w_K``."""
    from .newton import is_sigma_straight

    ctx = adm.ctx
    lookup = _newton_lookup(adm, K)
    out = []
    for w in kr_set(adm, K):
        top = max_section_rep(K, w)
        out.append(
            StratumRecord(
                elt=w,
                dim=top.length,
                p_rank=_p_rank(ctx, top),
                kr_type=w,
                sigma_straight=is_sigma_straight(top),
                newton=lookup(top),
            )
        )
    return out
