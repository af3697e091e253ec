"""Parahoric subgroups ``W_K`` and their coset representatives.

Notation: ``^K W̃`` are the minimal representatives of ``W_K \\ W̃``,
``^K W̃^K`` those of ``W_K \\ W̃ / W_K``.  For ``w ∈ ^K W̃^K`` the type
``J_w = {s ∈ K : w s w⁻¹ ∈ K}`` governs the fiber ``w · ^{J_w}W_K``.
"""

from __future__ import annotations

from typing import Iterable

from .affweyl import Elt, GroupCtx
from .errors import DomainError, InvalidRepresentativeError

MAX_PARAHORIC_ORDER = 200_000


class Parahoric:
    """The finite subgroup ``W_K`` generated by ``{s_i : i ∈ gens}``.

    Elements are materialized eagerly with their own length table, so
    ``W_K`` never depends on the context's length cap.
    """

    def __init__(self, ctx: GroupCtx, gens: Iterable[int]):
        self.ctx = ctx
        self.gens = tuple(sorted(set(gens)))
        if any(i < 0 or i >= ctx.n_affine_gens for i in self.gens):
            raise ValueError(f"generator indices {self.gens} out of range")
        if {ctx.sigma[i] for i in self.gens} != set(self.gens):
            raise DomainError(f"K = {self.gens} is not stable under sigma")

        model = ctx.model
        table = {model.identity: (0, ())}
        level = [model.identity]
        d = 0
        while level:
            nxt = []
            for i in self.gens:
                s = model.generators[i]
                for w in level:
                    v = model.compose(s, w)
                    if v not in table:
                        table[v] = (d + 1, (i,) + table[w][1])
                        nxt.append(v)
            if len(table) > MAX_PARAHORIC_ORDER:
                raise DomainError(f"W_K for K = {self.gens} is not finite")
            nxt.sort(key=lambda v: table[v][1])
            level = nxt
            d += 1
        self._table = table
        self.elements = sorted((Elt(ctx, c) for c in table), key=self.sort_key)
        self.longest = self.elements[-1]

    def __repr__(self):
        return f"Parahoric(gens={self.gens}, order={len(self.elements)})"

    def __len__(self):
        return len(self.elements)

    def __contains__(self, v: Elt) -> bool:
        return v.canonical in self._table

    def length(self, v: Elt) -> int:
        return self._table[v.canonical][0]

    def word(self, v: Elt) -> tuple[int, ...]:
        return self._table[v.canonical][1]

    def sort_key(self, v: Elt):
        return self._table[v.canonical]

    def bruhat_leq(self, a: Elt, b: Elt) -> bool:
        """Bruhat order inside ``W_K``."""
        table, model = self._table, self.ctx.model
        x, y = a.canonical, b.canonical
        while True:
            lx, _ = table[x]
            ly, wy = table[y]
            if lx > ly:
                return False
            if lx == ly:
                return x == y
            if lx == 0:
                return True
            s = model.generators[wy[0]]
            sx = model.compose(s, x)
            y = model.compose(s, y)
            if table[sx][0] < lx:
                x = sx

    def subgroup(self, sub: Iterable[int]) -> list[Elt]:
        sub = set(sub)
        return [v for v in self.elements if set(self.word(v)) <= sub]


def _descent_free(ctx, w, gens, side):
    test = ctx.is_left_descent if side == "left" else ctx.is_right_descent
    return not any(test(w, i) for i in gens)


def is_left_min(K: Parahoric, w: Elt) -> bool:
    """``w ∈ ^K W̃``."""
    return _descent_free(K.ctx, w, K.gens, "left")


def is_right_min(K: Parahoric, w: Elt) -> bool:
    return _descent_free(K.ctx, w, K.gens, "right")


def min_in_left_coset(K: Parahoric, w: Elt) -> Elt:
    """``^K w``, the minimal element of ``W_K w``."""
    ctx, gens = K.ctx, ctx_gens(K)
    while True:
        i = next((i for i in K.gens if ctx.is_left_descent(w, i)), None)
        if i is None:
            return w
        w = gens[i] * w


def min_in_right_coset(K: Parahoric, w: Elt) -> Elt:
    """``w^K``, the minimal element of ``w W_K``."""
    ctx, gens = K.ctx, ctx_gens(K)
    while True:
        i = next((i for i in K.gens if ctx.is_right_descent(w, i)), None)
        if i is None:
            return w
        w = w * gens[i]


def ctx_gens(K: Parahoric) -> tuple[Elt, ...]:
    return K.ctx.generators


def min_double_rep(K: Parahoric, w: Elt) -> Elt:
    """The minimal element ``x_w`` of ``W_K w W_K``."""
    while True:
        v = min_in_right_coset(K, min_in_left_coset(K, w))
        if v == w:
            return w
        w = v


def is_min_double_rep(K: Parahoric, w: Elt) -> bool:
    return is_left_min(K, w) and is_right_min(K, w)


def double_coset(K: Parahoric, w: Elt) -> set[Elt]:
    return {y * w * z for y in K.elements for z in K.elements}


def _require_double_min(K: Parahoric, w: Elt) -> None:
    if not is_min_double_rep(K, w):
        raise InvalidRepresentativeError(f"{w!r} is not in ^K W^K for K = {K.gens}")


def type_Jw(K: Parahoric, w: Elt) -> frozenset[int]:
    """``J_w = J_K ∩ Ad(w⁻¹)(J_K)``: the ``s ∈ K`` with ``w s w⁻¹ ∈ K``."""
    _require_double_min(K, w)
    gens = ctx_gens(K)
    simple = {gens[j]: j for j in K.gens}
    w_inv = w.inverse()
    return frozenset(i for i in K.gens if w * gens[i] * w_inv in simple)


def jw_min_reps(K: Parahoric, J: Iterable[int]) -> list[Elt]:
    """``^J W_K``: minimal representatives of ``W_J \\ W_K``."""
    J = tuple(J)
    if not set(J) <= set(K.gens):
        raise ValueError(f"J = {J} is not a subset of K = {K.gens}")
    ctx = K.ctx
    return [v for v in K.elements if not any(ctx.is_left_descent(v, i) for i in J)]


def max_section_rep(K: Parahoric, w: Elt) -> Elt:
    """``^K w_K = w · x_0`` with ``x_0`` the longest element of ``^{J_w}W_K``."""
    _require_double_min(K, w)
    x0 = jw_min_reps(K, type_Jw(K, w))[-1]
    return w * x0


def max_left_rep_by_definition(K: Parahoric, w: Elt) -> Elt:
    """``^K w_K`` straight from its definition: the longest ``^K(wv)``, v ∈ W_K."""
    ctx = K.ctx
    cands = {min_in_left_coset(K, w * v) for v in K.elements}
    return max(cands, key=ctx.sort_key)


def max_right_rep_by_definition(K: Parahoric, w: Elt) -> Elt:
    """``_K w^K``: the longest ``(vw)^K`` for v ∈ W_K."""
    ctx = K.ctx
    cands = {min_in_right_coset(K, v * w) for v in K.elements}
    return max(cands, key=ctx.sort_key)


def length_lemma_check(K: Parahoric, w: Elt) -> bool:
    """``ℓ(_K w^K) == ℓ(^K w_K)``, both computed from their definitions."""
    _require_double_min(K, w)
    return max_right_rep_by_definition(K, w).length == max_left_rep_by_definition(K, w).length
