"""Newton points, Kottwitz invariants and the set ``B(G, {μ})``.

All arithmetic on Newton points is exact (:class:`fractions.Fraction`).
Leaf dimensions are reported as ``ℓ(x)`` for a σ-straight ``x``, which is
``⟨ν(x), 2ρ⟩``.  The other common normalization ``⟨ν, ρ⟩`` is half of that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable

from .affweyl import Elt, GroupCtx
from .errors import ConsistencyError, DomainError


@dataclass(frozen=True, order=True)
class NewtonPoint:
    """Dominant rational coweight."""

    nu: tuple[Fraction, ...]

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.nu) + ")"


@dataclass(frozen=True)
class BClass:
    """A σ-conjugacy class ``[b]``, determined by ``(ν, κ)``."""

    nu: NewtonPoint
    kappa: Hashable
    basic: bool
    straight_rep: Elt | None = None

    def __str__(self):
        tag = "basic" if self.basic else "non-basic"
        return f"[b] nu={self.nu} kappa={self.kappa} ({tag})"


def _unpack(a, b):
    return a if b is None else b


def newton_point(ctx_or_w, w: Elt | None = None) -> NewtonPoint:
    """``ν(w)``: accepts ``newton_point(w)`` or ``newton_point(ctx, w)``."""
    w = _unpack(ctx_or_w, w)
    ctx = w.ctx
    model = ctx.model
    r = ctx.sigma_order
    p = ctx.identity
    cur = w
    for _ in range(r):
        p = p * cur
        cur = ctx.sigma_apply(cur)
    n = model.finite_order(p.canonical)
    lam = model.translation_part(ctx.power(p, n).canonical)
    if lam is None:
        raise ConsistencyError("power of w is not a translation")
    scaled = tuple(Fraction(v, n * r) for v in lam)
    return NewtonPoint(tuple(model.dominant(scaled)))


def kottwitz(w: Elt) -> Hashable:
    return w.omega


def is_basic_point(ctx: GroupCtx, nu: NewtonPoint) -> bool:
    return all(v == 0 for v in ctx.model.simple_root_values(nu.nu))


def is_sigma_straight(ctx_or_w, w: Elt | None = None) -> bool:
    """``ℓ(w) = ⟨ν(w), 2ρ⟩``."""
    w = _unpack(ctx_or_w, w)
    return w.length == w.ctx.model.pair_2rho(newton_point(w).nu)


def b_set(adm, K=None) -> list[BClass]:
    """``B(G, {μ})`` from the σ-straight elements of ``Adm({μ})``.

    Each class carries a σ-straight representative from ``^K Adm`` (the
    shortest in sort order).  A class with no such representative raises
    :class:`ConsistencyError`.
    """
    from .admissible import ekor_set

    ctx = adm.ctx
    classes: dict[tuple, list[Elt]] = {}
    for x in adm.elements:
        if is_sigma_straight(x):
            classes.setdefault((newton_point(x), kottwitz(x)), []).append(x)
    pool = set(adm.elements) if K is None else set(ekor_set(adm, K))
    out = []
    for (nu, kap), members in classes.items():
        reps = [x for x in members if x in pool]
        if not reps:
            raise ConsistencyError(f"class nu={nu} has no sigma-straight rep in ^K Adm")
        rep = min(reps, key=ctx.sort_key)
        out.append(BClass(nu, kap, is_basic_point(ctx, nu), rep))
    return sorted(out, key=lambda b: (b.nu, str(b.kappa)))


def b_leq(b1: BClass, b2: BClass) -> bool:
    """``[b1] ≤ [b2]``: equal κ and ``ν2 − ν1`` a nonnegative sum of coroots."""
    if b1.kappa != b2.kappa:
        return False
    model = _model_of(b1, b2)
    diff = [y - x for x, y in zip(b1.nu.nu, b2.nu.nu)]
    try:
        coeffs = model.coroot_coefficients(diff)
    except DomainError:
        return False
    return all(c >= 0 for c in coeffs)


def _model_of(*classes):
    for b in classes:
        if b.straight_rep is not None:
            return b.straight_rep.ctx.model
    raise DomainError("BClass without a representative carries no root data")


def leaf_dimension(b) -> int:
    """Central leaf dimension ``ℓ(x)`` for σ-straight ``x`` (or a class's rep)."""
    x = b.straight_rep if isinstance(b, BClass) else b
    if x is None or not is_sigma_straight(x):
        raise DomainError(f"{x!r} is not sigma-straight")
    return x.length


def fully_hn_decomposable(adm, ctx: GroupCtx | None = None) -> tuple[bool, list[dict]]:
    """Check that every non-basic class is Hodge-Newton decomposable.

    A class is decomposable when ``μ_dom − ν_b`` has a zero coefficient on
    some simple coroot.  Only the split case is supported.
    """
    ctx = adm.ctx if ctx is None else ctx
    if not ctx.is_split:
        raise DomainError("fully HN check is only implemented for split sigma")
    model = ctx.model
    mu = model.dominant(adm.mu)
    report = []
    ok = True
    for b in b_set(adm):
        if b.basic:
            continue
        coeffs = model.coroot_coefficients([Fraction(m) - v for m, v in zip(mu, b.nu.nu)])
        dec = any(c == 0 for c in coeffs)
        ok = ok and dec
        report.append({"nu": b.nu, "coefficients": coeffs, "decomposable": dec})
    return ok, report
