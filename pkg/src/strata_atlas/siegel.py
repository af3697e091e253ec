"""GSp(2g) realized as affine similitude permutations of the integers.

An element is stored by its window ``(x(1), ..., x(2g))`` and extended by
``x(i + 2g) = x(i) + 2g``.  The similitude condition
``x(i) + x(2g+1-i) = 2g+1 + 2g·c`` holds for a single integer ``c``, the
Kottwitz component.  A pair ``(λ, w)`` of a coweight and a finite
permutation denotes the map ``i ↦ w(i) + 2g·λ_i``.

>>> m = SiegelModel(2)
>>> m.generators[0]
AffSimPerm(0, 2, 3, 5)
>>> m.tau
AffSimPerm(3, 4, 5, 6)
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .affweyl import DEFAULT_CAP_PADDING, Elt, GroupCtx
from .errors import DomainError, LatticeError


class AffSimPerm(tuple):
    """Window of an affine similitude permutation."""

    __slots__ = ()

    def __new__(cls, window: Iterable[int]):
        return tuple.__new__(cls, window)

    def __repr__(self):
        return f"AffSimPerm{tuple.__repr__(self)}"

    @property
    def g(self) -> int:
        return len(self) // 2

    def __call__(self, i: int) -> int:
        n = len(self)
        r = (i - 1) % n
        return self[r] + (i - 1 - r)

    @property
    def kappa(self) -> int:
        n = len(self)
        return (self[0] + self[n - 1] - (n + 1)) // n

    def is_valid(self) -> bool:
        n = len(self)
        if n == 0 or n % 2:
            return False
        if len({v % n for v in self}) != n:
            return False
        total = self[0] + self[n - 1]
        if (total - (n + 1)) % n:
            return False
        return all(self[i] + self[n - 1 - i] == total for i in range(n))


def from_pair(lam: Sequence[int], perm: Sequence[int]) -> AffSimPerm:
    """The element ``i ↦ perm(i) + 2g·lam_i`` (``perm`` given as a window)."""
    n = len(perm)
    return AffSimPerm(perm[i] + n * lam[i] for i in range(n))


def _transpositions(n: int, pairs) -> list[int]:
    w = list(range(1, n + 1))
    for a, b in pairs:
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return w


def compose(a: AffSimPerm, b: AffSimPerm) -> AffSimPerm:
    n = len(a)
    out = []
    for v in b:
        r = (v - 1) % n
        out.append(a[r] + (v - 1 - r))
    return AffSimPerm(out)


def inverse(a: AffSimPerm) -> AffSimPerm:
    n = len(a)
    out = [0] * n
    for i, v in enumerate(a, start=1):
        r = (v - 1) % n
        out[r] = i - (v - 1 - r)
    return AffSimPerm(out)


def kappa(x) -> int:
    """Kottwitz component; a homomorphism onto ℤ with κ(τ) = 1."""
    return _window(x).kappa


def p_rank(x) -> int:
    """Number of fixed points of ``x`` in one period ``1..2g``.

    Only meaningful for admissible ``x``; the caller is responsible for that.
    """
    w = _window(x)
    return sum(1 for i, v in enumerate(w, start=1) if v == i)


def _window(x) -> AffSimPerm:
    if isinstance(x, Elt):
        return x.canonical
    return x if isinstance(x, AffSimPerm) else AffSimPerm(x)


class SiegelModel:
    """Model provider for :class:`~strata_atlas.affweyl.GroupCtx`."""

    def __init__(self, g: int):
        if g < 1:
            raise ValueError("genus must be at least 1")
        self.g = g
        n = self.n = 2 * g
        self.n_gens = g + 1
        self.identity = AffSimPerm(range(1, n + 1))

        gens = [from_pair([-1] + [0] * (n - 2) + [1], _transpositions(n, [(1, n)]))]
        for i in range(1, g):
            gens.append(AffSimPerm(_transpositions(n, [(i, i + 1), (n + 1 - i, n - i)])))
        gens.append(AffSimPerm(_transpositions(n, [(g, g + 1)])))
        self.generators = gens

        tau_perm = _transpositions(n, [(i, g + i) for i in range(1, g + 1)])
        self.tau = from_pair([0] * g + [1] * g, tau_perm)
        self.mu = tuple([1] * g + [0] * g)
        # positive roots λ ↦ λ_i - λ_j, one functional per root of type C_g
        self.positive_roots = tuple(
            (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if i + j <= n + 1
        )

    compose = staticmethod(compose)
    inverse = staticmethod(inverse)

    # -- Ω ---------------------------------------------------------------------

    def omega_label(self, a: AffSimPerm) -> int:
        return a.kappa

    def omega_rep(self, label: int) -> AffSimPerm:
        return AffSimPerm(i + self.g * label for i in range(1, self.n + 1))

    def omega_name(self, label: int) -> str:
        if label == 0:
            return ""
        return "tau" if label == 1 else f"tau^{label}"

    def render(self, a: AffSimPerm) -> str:
        return "[" + ",".join(str(v) for v in a) + "]"

    # -- descents ----------------------------------------------------------------

    def is_left_descent(self, a: AffSimPerm, i: int) -> bool:
        """``ℓ(s_i a) < ℓ(a)``, read off the inverse window."""
        inv = inverse(a)
        if i == 0:
            return inv(0) > inv(1)
        return inv(i) > inv(i + 1)

    # -- lattice -----------------------------------------------------------------

    def check_coweight(self, vec: Sequence) -> None:
        n = self.n
        if len(vec) != n:
            raise LatticeError(f"coweight must have {n} entries, got {len(vec)}")
        total = vec[0] + vec[n - 1]
        if any(vec[i] + vec[n - 1 - i] != total for i in range(n)):
            raise LatticeError(f"{tuple(vec)} violates u_i + u_(2g+1-i) = const")

    def translation(self, vec: Sequence[int]) -> AffSimPerm:
        if any(not isinstance(v, int) for v in vec):
            raise LatticeError("translation coweights must be integral")
        self.check_coweight(vec)
        return AffSimPerm(i + self.n * v for i, v in enumerate(vec, start=1))

    def split(self, a: AffSimPerm) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Decompose ``a`` as a pair ``(λ, w)`` with ``a(i) = w(i) + 2g·λ_i``."""
        n = self.n
        perm = tuple((v - 1) % n + 1 for v in a)
        lam = tuple((v - p) // n for v, p in zip(a, perm))
        return lam, perm

    def finite_order(self, a: AffSimPerm) -> int:
        _, perm = self.split(a)
        seen, order = set(), 1
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            k, j = 0, start
            while j not in seen:
                seen.add(j)
                j = perm[j - 1]
                k += 1
            order = lcm(order, k)
        return order

    def translation_part(self, a: AffSimPerm) -> tuple[int, ...] | None:
        lam, perm = self.split(a)
        if perm != tuple(range(1, self.n + 1)):
            return None
        return lam

    # -- finite Weyl group action on coweights ------------------------------------

    def _reflect(self, vec: tuple, i: int) -> tuple:
        v = list(vec)
        n, g = self.n, self.g
        if i < g:
            v[i - 1], v[i] = v[i], v[i - 1]
            v[n - i], v[n - i - 1] = v[n - i - 1], v[n - i]
        else:
            v[g - 1], v[g] = v[g], v[g - 1]
        return tuple(v)

    def simple_root_values(self, vec: Sequence) -> tuple:
        return tuple(vec[i - 1] - vec[i] for i in range(1, self.g + 1))

    def is_dominant(self, vec: Sequence) -> bool:
        return all(v >= 0 for v in self.simple_root_values(vec))

    def dominant(self, vec: Sequence) -> tuple:
        """Dominant representative, by sorting with simple reflections."""
        v = tuple(vec)
        while True:
            values = self.simple_root_values(v)
            bad = next((i for i, x in enumerate(values, start=1) if x < 0), None)
            if bad is None:
                return v
            v = self._reflect(v, bad)

    def weyl_orbit(self, vec: Sequence) -> list[tuple]:
        start = tuple(vec)
        orbit, frontier = {start}, [start]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(1, self.g + 1):
                    u = self._reflect(v, i)
                    if u not in orbit:
                        orbit.add(u)
                        nxt.append(u)
            frontier = nxt
        return sorted(orbit, reverse=True)

    def pair_2rho(self, vec: Sequence) -> Fraction:
        return sum((Fraction(vec[i - 1]) - vec[j - 1] for i, j in self.positive_roots), Fraction(0))

    def coroot_coefficients(self, diff: Sequence) -> tuple[Fraction, ...]:
        """Coefficients of ``diff`` in the simple coroot basis.

        Simple coroots: ``e_i - e_{i+1} + e_{2g-i} - e_{2g+1-i}`` for i < g and
        ``e_g - e_{g+1}``.  Raises :class:`DomainError` if ``diff`` is not in
        their rational span.
        """
        n, g = self.n, self.g
        d = [Fraction(x) for x in diff]
        coeffs, running = [], Fraction(0)
        for k in range(g):
            running += d[k]
            coeffs.append(running)
        rebuilt = [Fraction(0)] * n
        for k, c in enumerate(coeffs, start=1):
            if k < g:
                rebuilt[k - 1] += c
                rebuilt[k] -= c
                rebuilt[n - k - 1] += c
                rebuilt[n - k] -= c
            else:
                rebuilt[g - 1] += c
                rebuilt[g] -= c
        if rebuilt != d:
            raise DomainError(f"{tuple(diff)} is not in the coroot span")
        return tuple(coeffs)

    def p_rank(self, a: AffSimPerm) -> int:
        return p_rank(a)


class SiegelLevel(tuple):
    """A nonempty subset ``J ⊆ {0, ..., g}`` naming a parahoric level."""

    __slots__ = ()

    def __new__(cls, indices: Iterable[int], g: int | None = None):
        idx = tuple(sorted(set(int(i) for i in indices)))
        if not idx:
            raise ValueError("level J must be nonempty")
        if idx[0] < 0 or (g is not None and idx[-1] > g):
            raise ValueError(f"level indices must lie in 0..{g}")
        return tuple.__new__(cls, idx)

    @classmethod
    def parse(cls, text: str, g: int | None = None) -> "SiegelLevel":
        return cls((int(t) for t in text.split(",") if t.strip()), g)

    def __str__(self):
        return ",".join(map(str, self))


NAMED_LEVELS_G2 = {
    "hyperspecial": (0,),
    "paramodular": (1,),
    "klingen": (0, 1),
    "siegel": (0, 2),
    "iwahori": (0, 1, 2),
}


def default_cap(g: int) -> int:
    """``ℓ(t^μ) + 2``, raised to ``g²`` so every finite ``W_K`` fits."""
    return max(g * (g + 1) // 2 + DEFAULT_CAP_PADDING, g * g)


def gsp_context(g: int, length_cap: int | None = None, sigma=None) -> GroupCtx:
    """Group context for GSp(2g) with generators ``s_0..s_g``.

    ``sigma`` is ``None`` (split) or a length-0 element to conjugate by; the
    string ``"tau"`` selects conjugation by τ, which swaps the ends of the
    Dynkin diagram.
    """
    model = SiegelModel(g)
    if isinstance(sigma, str) and sigma == "tau":
        sigma = model.tau
    cap = default_cap(g) if length_cap is None else length_cap
    ctx = GroupCtx(model, length_cap=cap, sigma=sigma)
    ctx.mu = model.mu
    ctx.tau = ctx.elt(model.tau)
    return ctx


def level_generators(g: int, J) -> tuple[int, ...]:
    """Generator indices ``{0..g} ∖ J`` of the parahoric of type ``J``."""
    level = J if isinstance(J, SiegelLevel) else SiegelLevel(J, g)
    if level[-1] > g:
        raise ValueError(f"level indices must lie in 0..{g}")
    return tuple(i for i in range(g + 1) if i not in level)


def level_to_parahoric(ctx: GroupCtx, J):
    from .parabolic import Parahoric

    return Parahoric(ctx, level_generators(ctx.model.g, J))


def component_count(J) -> int:
    """Number of irreducible components of the level-``J`` moduli space."""
    idx = sorted(J)
    count = 1
    for a, b in zip(idx, idx[1:]):
        count *= b - a + 1
    return count
