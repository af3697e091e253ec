"""Extended affine Weyl groups ``W_a ⋊ Ω`` realized through a model provider.

A :class:`GroupCtx` wraps a *model*: an object that knows how to compose,
invert and canonicalize concrete elements (for GSp these are affine
similitude permutations, see :mod:`strata_atlas.siegel`).  The context adds
everything that only depends on the Coxeter structure: lengths and
lexicographically least reduced words from a breadth-first ball, the Bruhat
order, the Ω-component and the Frobenius twist σ.

The model interface is duck-typed.  A model must provide::

    n_gens                      number of affine simple reflections s_0..s_n
    identity                    canonical identity
    generators                  list of canonical s_0..s_n
    compose(a, b)               canonical a∘b (b applied first)
    inverse(a)
    omega_label(a)              hashable label of the Ω-component
    omega_rep(label)            canonical length-0 element with that label
    omega_name(label)           text for the Ω-part ("tau", "tau^2", "")
    is_left_descent(a, i)       exact test ℓ(s_i a) < ℓ(a)
    translation(vec)            canonical t^vec (raises LatticeError)
    render(a)                   short text form of the canonical element

Composition convention: ``a * b`` applies ``b`` first.
"""

from __future__ import annotations

import os
import re
from typing import Hashable, Iterable, NamedTuple, Sequence

from .errors import CapExceededError, ContextMismatchError, DomainError

DEFAULT_CAP_PADDING = 2
CAP_ENV_VAR = "STRATA_ATLAS_CAP"


class Word(NamedTuple):
    """A reduced word ``s_{i_1} ... s_{i_k}`` followed by an Ω-part."""

    letters: tuple[int, ...]
    omega: Hashable
    omega_name: str = ""

    def __str__(self) -> str:
        parts = [f"s{i}" for i in self.letters]
        if self.omega_name:
            parts.append(self.omega_name)
        return " ".join(parts) if parts else "e"


class Elt:
    """An element of ``W̃`` in the canonical form of its context's model."""

    __slots__ = ("ctx", "canonical", "_hash")

    def __init__(self, ctx: "GroupCtx", canonical):
        self.ctx = ctx
        self.canonical = canonical
        self._hash = hash(canonical)

    def __eq__(self, other):
        if not isinstance(other, Elt):
            return NotImplemented
        return self.ctx is other.ctx and self.canonical == other.canonical

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Elt") -> "Elt":
        return self.ctx.multiply(self, other)

    def __repr__(self):
        try:
            return f"Elt({self.word})"
        except CapExceededError:
            return f"Elt({self.ctx.model.render(self.canonical)})"

    def __str__(self):
        return str(self.word)

    def inverse(self) -> "Elt":
        return self.ctx.invert(self)

    @property
    def length(self) -> int:
        return self.ctx.length(self)

    @property
    def word(self) -> Word:
        return self.ctx.reduced_word(self)

    @property
    def omega(self) -> Hashable:
        return self.ctx.model.omega_label(self.canonical)


class GroupCtx:
    """Ambient extended affine Weyl group.

    Parameters
    ----------
    model:
        Concrete realization of the group (see module docstring).
    length_cap:
        Radius of the breadth-first ball used for lengths, reduced words and
        the Bruhat order.  ``STRATA_ATLAS_CAP`` in the environment overrides
        the value passed here.
    sigma:
        A length-0 element ``δ``; the Frobenius acts as ``x ↦ δ x δ⁻¹``.
        ``None`` means the split case (σ = id).
    """

    def __init__(self, model, length_cap: int = 8, sigma: "Elt | None" = None):
        self.model = model
        env = os.environ.get(CAP_ENV_VAR)
        self.length_cap = int(env) if env else int(length_cap)
        self.n_affine_gens = model.n_gens
        self.identity = Elt(self, model.identity)
        self.generators = tuple(Elt(self, s) for s in model.generators)
        self._balls: dict[Hashable, dict] = {}
        self._bruhat_cache: dict = {}

        if sigma is None:
            self._sigma_elt = None
            self.sigma = tuple(range(self.n_affine_gens))
        else:
            delta = sigma.canonical if isinstance(sigma, Elt) else sigma
            if self._ball_entry(delta) is None or self._ball_entry(delta)[0] != 0:
                raise DomainError("sigma must be conjugation by a length-0 element")
            self._sigma_elt = Elt(self, delta)
            self._sigma_inv = Elt(self, model.inverse(delta))
            perm = []
            for s in self.generators:
                image = self.sigma_apply(s)
                perm.append(self.generators.index(image))
            self.sigma = tuple(perm)

    # -- construction helpers -------------------------------------------------

    def elt(self, value) -> Elt:
        """Build an element from a word string (``"s0 s1 tau"``) or canonical."""
        if isinstance(value, Elt):
            self._check(value)
            return value
        if isinstance(value, str):
            return self.parse(value)
        return Elt(self, value)

    def generator(self, i: int) -> Elt:
        return self.generators[i]

    def omega_element(self, label) -> Elt:
        return Elt(self, self.model.omega_rep(label))

    def from_word(self, letters: Iterable[int], omega=0) -> Elt:
        x = self.omega_element(omega)
        for i in reversed(tuple(letters)):
            x = self.generators[i] * x
        return x

    _TOKEN = re.compile(r"^s_?(\d+)$")

    def parse(self, text: str) -> Elt:
        """Parse word notation such as ``"s0 s1 s0 tau"`` or ``"tau^2"``."""
        letters = []
        omega = 0
        for tok in text.replace("*", " ").split():
            m = self._TOKEN.match(tok)
            if m:
                letters.append(int(m.group(1)))
            elif tok == "e":
                continue
            elif tok.startswith("tau"):
                rest = tok[3:]
                omega += int(rest[1:]) if rest.startswith("^") else 1
            else:
                raise ValueError(f"cannot parse token {tok!r} in {text!r}")
        if any(i >= self.n_affine_gens for i in letters):
            raise ValueError(f"generator index out of range in {text!r}")
        return self.from_word(letters, omega)

    # -- group law ------------------------------------------------------------

    def _check(self, *elts: Elt) -> None:
        for e in elts:
            if e.ctx is not self:
                raise ContextMismatchError("element belongs to a different GroupCtx")

    def multiply(self, a: Elt, b: Elt) -> Elt:
        self._check(a, b)
        return Elt(self, self.model.compose(a.canonical, b.canonical))

    def invert(self, a: Elt) -> Elt:
        self._check(a)
        return Elt(self, self.model.inverse(a.canonical))

    def power(self, a: Elt, n: int) -> Elt:
        x = self.identity
        for _ in range(n):
            x = x * a
        return x

    def translation(self, vec: Sequence[int]) -> Elt:
        return Elt(self, self.model.translation(tuple(vec)))

    def omega_part(self, a: Elt) -> Elt:
        return self.omega_element(a.omega)

    # -- length ball ----------------------------------------------------------

    def _ball(self, label) -> dict:
        ball = self._balls.get(label)
        if ball is not None:
            return ball
        model = self.model
        root = model.omega_rep(label)
        ball = {root: (0, ())}
        level = [root]
        gens = model.generators
        for d in range(self.length_cap):
            nxt = []
            # i-major, then words in lex order: first discovery is lex-least.
            for i, s in enumerate(gens):
                for w in level:
                    v = model.compose(s, w)
                    if v not in ball:
                        ball[v] = (d + 1, (i,) + ball[w][1])
                        nxt.append(v)
            nxt.sort(key=lambda v: ball[v][1])
            level = nxt
        self._balls[label] = ball
        return ball

    def _ball_entry(self, canonical):
        return self._ball(self.model.omega_label(canonical)).get(canonical)

    def in_ball(self, a: Elt) -> bool:
        self._check(a)
        return self._ball_entry(a.canonical) is not None

    def _entry(self, a: Elt):
        self._check(a)
        entry = self._ball_entry(a.canonical)
        if entry is None:
            raise CapExceededError(
                f"{self.model.render(a.canonical)} has length > cap {self.length_cap}"
            )
        return entry

    def length(self, a: Elt) -> int:
        return self._entry(a)[0]

    def reduced_word(self, a: Elt) -> Word:
        letters = self._entry(a)[1]
        label = a.omega
        return Word(letters, label, self.model.omega_name(label))

    def ball_elements(self, label=0, max_length: int | None = None) -> list[Elt]:
        """All elements of the Ω-coset ``label`` with length ≤ ``max_length``."""
        cap = self.length_cap if max_length is None else max_length
        ball = self._ball(label)
        out = [Elt(self, c) for c, (l, _) in ball.items() if l <= cap]
        return sorted(out, key=self.sort_key)

    def sort_key(self, a: Elt):
        length, letters = self._entry(a)
        return (length, letters, str(a.omega))

    def sorted(self, elts: Iterable[Elt]) -> list[Elt]:
        return sorted(set(elts), key=self.sort_key)

    def is_left_descent(self, a: Elt, i: int) -> bool:
        self._check(a)
        return self.model.is_left_descent(a.canonical, i)

    def is_right_descent(self, a: Elt, i: int) -> bool:
        self._check(a)
        return self.model.is_left_descent(self.model.inverse(a.canonical), i)

    # -- Bruhat order ---------------------------------------------------------

    def bruhat_leq(self, a: Elt, b: Elt) -> bool:
        """Bruhat order: equal Ω-parts and ``W_a``-parts comparable."""
        self._check(a, b)
        if a.omega != b.omega:
            return False
        self._entry(a)
        self._entry(b)
        return self._leq(a.canonical, b.canonical)

    def _leq(self, a, b) -> bool:
        key = (a, b)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        ball = self._ball(self.model.omega_label(b))
        la, wa = ball[a]
        lb, wb = ball[b]
        if la > lb:
            result = False
        elif la == lb:
            result = a == b
        elif la == 0:
            result = True
        else:
            # lifting property with the left descent s = first letter of b
            s = self.model.generators[wb[0]]
            sb = self.model.compose(s, b)
            sa = self.model.compose(s, a)
            sa_entry = ball.get(sa)
            if sa_entry is not None and sa_entry[0] < la:
                result = self._leq(sa, sb)
            else:
                result = self._leq(a, sb)
        self._bruhat_cache[key] = result
        return result

    # -- Frobenius ------------------------------------------------------------

    def sigma_apply(self, a: Elt) -> Elt:
        self._check(a)
        if self._sigma_elt is None:
            return a
        return self._sigma_elt * a * self._sigma_inv

    @property
    def sigma_order(self) -> int:
        perm = self.sigma
        r, cur = 1, perm
        while cur != tuple(range(len(perm))):
            cur = tuple(perm[j] for j in cur)
            r += 1
        return r

    @property
    def is_split(self) -> bool:
        return self._sigma_elt is None


def tau_element(ctx: GroupCtx, mu: Sequence[int]) -> Elt:
    """The length-0 element with the same Ω-component as ``t^mu``."""
    if not ctx.model.is_dominant(mu):
        raise DomainError(f"{tuple(mu)} is not dominant")
    return ctx.omega_element(ctx.translation(mu).omega)
