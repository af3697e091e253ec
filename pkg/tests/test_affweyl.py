import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strata_atlas import CapExceededError, ContextMismatchError, DomainError, gsp_context
from strata_atlas.affweyl import Word, tau_element

words = st.lists(st.integers(0, 2), max_size=5)
omegas = st.integers(0, 1)


def strip_length(x):
    """Length by peeling left descents one at a time (no ball lookups)."""
    ctx, n = x.ctx, 0
    while True:
        i = next((i for i in range(ctx.n_affine_gens) if ctx.is_left_descent(x, i)), None)
        if i is None:
            return n
        x = ctx.generators[i] * x
        n += 1


def subword_products(x):
    ctx = x.ctx
    word = x.word
    layer = {ctx.omega_element(word.omega)}
    for i in reversed(word.letters):
        layer |= {ctx.generators[i] * y for y in layer}
    return layer


def test_generator_windows(ctx):
    assert tuple(ctx.generator(0).canonical) == (0, 2, 3, 5)
    assert tuple(ctx.tau.canonical) == (3, 4, 5, 6)


def test_translation_word(ctx):
    t = ctx.translation((1, 1, 0, 0))
    assert tuple(t.canonical) == (5, 6, 3, 4)
    assert str(t) == "s0 s1 s0 tau"
    assert t.length == 3


def test_tau_conjugation(ctx, w):
    tau = ctx.tau
    assert tau * w("s2") == w("s0") * tau
    assert tau * w("s0") == w("s2") * tau
    assert tau * w("s1") == w("s1") * tau


def test_tau_element(ctx):
    assert tau_element(ctx, (1, 1, 0, 0)) == ctx.tau
    with pytest.raises(DomainError):
        tau_element(ctx, (0, 1, 0, 1))


def test_parse_and_render(ctx, w):
    assert str(w("e")) == "e"
    assert w("s_0 s_1 tau") == w("s0 s1 tau")
    assert str(w("tau^2")) == "tau^2"
    assert w("tau tau") == w("tau^2")
    assert Word((0, 1), 1, "tau").__str__() == "s0 s1 tau"
    with pytest.raises(ValueError):
        w("s7")
    with pytest.raises(ValueError):
        w("x1")


def test_identity_and_generators(ctx):
    e = ctx.identity
    assert e.length == 0
    for s in ctx.generators:
        assert s * s == e
        assert s.length == 1


def test_context_mismatch(ctx):
    other = gsp_context(2)
    with pytest.raises(ContextMismatchError):
        ctx.tau * other.tau


def test_cap_exceeded():
    small = gsp_context(2, length_cap=2)
    t = small.translation((1, 1, 0, 0))
    with pytest.raises(CapExceededError):
        t.length
    assert not small.in_ball(t)
    assert "Elt(" in repr(t)


def test_env_cap_override(monkeypatch):
    monkeypatch.setenv("STRATA_ATLAS_CAP", "3")
    assert gsp_context(2).length_cap == 3


def test_sigma_tau_permutes_generators():
    c = gsp_context(2, sigma="tau")
    assert c.sigma == (2, 1, 0)
    assert c.sigma_order == 2
    assert not c.is_split
    assert c.sigma_apply(c.generator(0)) == c.generator(2)


def test_sigma_must_have_length_zero(ctx):
    with pytest.raises(DomainError):
        gsp_context(2, sigma=ctx.generator(1).canonical)


def test_ball_sizes_match_descent_stripping(ctx):
    for x in ctx.ball_elements(1):
        assert x.length == strip_length(x)


def test_reduced_words_are_lex_least(ctx):
    # among all reduced words of length l, the stored one is lexicographically least
    for x in ctx.ball_elements(1, 3):
        letters = x.word.letters
        found = []

        def search(y, acc):
            if y.length == 0:
                found.append(tuple(acc))
                return
            for i in range(3):
                if ctx.is_left_descent(y, i):
                    search(ctx.generators[i] * y, acc + [i])

        search(x, [])
        assert letters == min(found)


@settings(max_examples=60, deadline=None)
@given(words, omegas)
def test_word_roundtrip(letters, om):
    ctx = _CTX
    x = ctx.from_word(letters, om)
    assert ctx.from_word(x.word.letters, x.omega) == x
    assert x.length <= len(letters)
    assert x.length % 2 == len(letters) % 2
    assert ctx.parse(str(x)) == x


@settings(max_examples=60, deadline=None)
@given(words, omegas, words, omegas)
def test_length_subadditive_and_inverse(a, oa, b, ob):
    ctx = _CTX
    x, y = ctx.from_word(a, oa), ctx.from_word(b, ob)
    assert (x * y).length <= x.length + y.length
    assert x.inverse().length == x.length
    assert (x * y).inverse() == y.inverse() * x.inverse()


@settings(max_examples=60, deadline=None)
@given(words, st.integers(0, 2))
def test_descents_agree_with_lengths(letters, i):
    ctx = _CTX
    x = ctx.from_word(letters, 1)
    s = ctx.generators[i]
    assert ctx.is_left_descent(x, i) == ((s * x).length < x.length)
    assert ctx.is_right_descent(x, i) == ((x * s).length < x.length)


def test_bruhat_matches_subword_property(ctx):
    elts = ctx.ball_elements(1, 4)
    for y in elts:
        below = subword_products(y)
        for x in elts:
            assert ctx.bruhat_leq(x, y) == (x in below)


def test_bruhat_separates_omega(ctx):
    assert not ctx.bruhat_leq(ctx.identity, ctx.tau)
    assert ctx.bruhat_leq(ctx.tau, ctx.parse("s0 tau"))


# wide enough for products of two generated words
_CTX = gsp_context(2, length_cap=10)
