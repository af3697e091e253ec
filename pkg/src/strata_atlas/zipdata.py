"""Weyl-group shadow of the algebraic zip datum attached to a KR type.

For ``w ∈ ^K W̃^K`` the datum is ``(J_w, σ'(J_w), σ')`` with
``σ' = σ ∘ Ad(w)``.  The KR fiber ``w · ^{J_w}W_K`` carries the EO order:
``w v1 ⪯ w v2`` iff some ``y ∈ W_{J_w}`` has ``y v1 σ'(y)⁻¹ ≤ v2`` in W_K.
"""

from __future__ import annotations

from dataclasses import dataclass

from .admissible import AdmissibleSet, kr_fiber
from .affweyl import Elt
from .errors import ConsistencyError
from .orders import Poset, ksigma_leq, maximal_elements, minimal_elements, poset_from_relation
from .parabolic import Parahoric, double_coset, is_left_min, jw_min_reps, type_Jw


@dataclass(frozen=True)
class ZipDatum:
    K: Parahoric
    w: Elt
    Jw: frozenset[int]
    sigma_prime_Jw: frozenset[int]
    fiber: tuple[Elt, ...]
    coords: tuple[Elt, ...]

    def sigma_prime(self, y: Elt) -> Elt:
        """``σ(w y w⁻¹)``."""
        ctx = self.w.ctx
        return ctx.sigma_apply(self.w * y * self.w.inverse())


def _simple_index(K: Parahoric, z: Elt) -> int:
    for i in K.gens:
        if K.ctx.generators[i] == z:
            return i
    raise ConsistencyError(f"{z!r} is not a simple reflection of W_K")


def zip_datum(adm: AdmissibleSet, K: Parahoric, w: Elt) -> ZipDatum:
    ctx = adm.ctx
    fiber = tuple(kr_fiber(adm, K, w))
    Jw = type_Jw(K, w)
    w_inv = w.inverse()
    image = frozenset(
        _simple_index(K, ctx.sigma_apply(w * ctx.generators[i] * w_inv)) for i in Jw
    )
    brute = ctx.sorted(x for x in double_coset(K, w) if is_left_min(K, x))
    if list(fiber) != brute:
        raise ConsistencyError(f"fiber identity fails over {w}")
    coords = tuple(w_inv * x for x in fiber)
    return ZipDatum(K, w, Jw, image, fiber, coords)


def eo_poset_in_fiber(z: ZipDatum, check: bool = True) -> Poset:
    """EO order on the fiber, labelled with ``dim = ℓ(x)``.

    With ``check`` the result is compared against ``≤_{K,σ}`` restricted
    to the fiber.
    """
    K = z.K
    WJ = K.subgroup(z.Jw)
    conj = [(y, z.sigma_prime(y).inverse()) for y in WJ]
    coord = dict(zip(z.fiber, z.coords))

    def rel(a, b):
        va, vb = coord[a], coord[b]
        return any(K.bruhat_leq(y * va * t, vb) for y, t in conj)

    p = poset_from_relation(list(z.fiber), rel, [{"dim": x.length} for x in z.fiber])
    if check:
        ref = poset_from_relation(list(z.fiber), lambda a, b: ksigma_leq(K, a, b))
        if not (p.leq == ref.leq).all():
            raise ConsistencyError(f"EO order disagrees with the EKOR order over {z.w}")
    return p


def ordinary_and_superspecial(z: ZipDatum) -> tuple[Elt, Elt]:
    """``(^K w_K, x_w)``: the unique maximal and minimal EO strata."""
    p = eo_poset_in_fiber(z, check=False)
    top, bottom = maximal_elements(p), minimal_elements(p)
    if len(top) != 1 or len(bottom) != 1:
        raise ConsistencyError(f"fiber over {z.w} lacks a unique max/min")
    return top[0], bottom[0]


def fiber_coordinate_lengths(z: ZipDatum) -> list[tuple[Elt, int, int]]:
    """``(x, ℓ(x), ℓ(w) + ℓ(x̄))`` for each fiber element."""
    K = z.K
    return [(x, x.length, z.w.length + K.length(v)) for x, v in zip(z.fiber, z.coords)]


__all__ = [
    "ZipDatum",
    "zip_datum",
    "eo_poset_in_fiber",
    "ordinary_and_superspecial",
    "fiber_coordinate_lengths",
    "jw_min_reps",
]
