"""Partial orders on strata index sets and their Hasse diagrams.

Three orders live here: the Bruhat order on KR types, the EKOR order
``≤_{K,σ}`` on ``^K Adm``, and the zip order ``⪯`` on ``^J W`` for a finite
Weyl group.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .admissible import AdmissibleSet, ekor_set, kr_set
from .affweyl import Elt
from .errors import MembershipError
from .parabolic import Parahoric, is_left_min, jw_min_reps

JSON_SCHEMA_VERSION = 1


@dataclass
class Poset:
    """Finite poset given by its full relation matrix ``leq[i, j] ⇔ i ≤ j``."""

    nodes: list
    leq: np.ndarray
    attrs: list[dict] = field(default_factory=list)

    def __post_init__(self):
        self.leq = np.asarray(self.leq, dtype=bool).reshape(len(self.nodes), len(self.nodes))
        if not self.attrs:
            self.attrs = [{} for _ in self.nodes]

    def __len__(self):
        return len(self.nodes)

    def index(self, node) -> int:
        return self.nodes.index(node)

    def le(self, a, b) -> bool:
        return bool(self.leq[self.index(a), self.index(b)])

    @property
    def strict(self) -> np.ndarray:
        return self.leq & ~np.eye(len(self.nodes), dtype=bool)

    @property
    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges ``(i, j)`` with ``i < j`` and nothing in between."""
        s = self.strict
        if not len(s):
            return []
        two_step = (s.astype(np.int64) @ s.astype(np.int64)) > 0
        cov = s & ~two_step
        return [tuple(map(int, e)) for e in np.argwhere(cov)]

    def cover_pairs(self) -> set[tuple]:
        return {(self.nodes[i], self.nodes[j]) for i, j in self.covers}

    def is_partial_order(self) -> bool:
        m = self.leq
        n = len(m)
        if n == 0:
            return True
        refl = bool(np.all(np.diag(m)))
        antisym = not np.any(m & m.T & ~np.eye(n, dtype=bool))
        closure = (m.astype(np.int64) @ m.astype(np.int64)) > 0
        trans = not np.any(closure & ~m)
        return refl and antisym and trans

    def closure_of_covers(self) -> np.ndarray:
        """Reflexive-transitive closure of the cover edges."""
        n = len(self.nodes)
        r = np.eye(n, dtype=bool)
        for i, j in self.covers:
            r[i, j] = True
        while True:
            nxt = r | ((r.astype(np.int64) @ r.astype(np.int64)) > 0)
            if np.array_equal(nxt, r):
                return r
            r = nxt


def poset_from_relation(nodes: Sequence, rel: Callable, attrs=None) -> Poset:
    nodes = list(nodes)
    n = len(nodes)
    m = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            m[i, j] = i == j or rel(a, b)
    return Poset(nodes, m, list(attrs) if attrs is not None else [])


def maximal_elements(p: Poset) -> list:
    s = p.strict
    return [p.nodes[i] for i in range(len(p)) if not s[i].any()]


def minimal_elements(p: Poset) -> list:
    s = p.strict
    return [p.nodes[j] for j in range(len(p)) if not s[:, j].any()]


def _attrs(x: Elt) -> dict:
    model = x.ctx.model
    d = {"dim": x.length}
    if hasattr(model, "p_rank"):
        d["p_rank"] = model.p_rank(x.canonical)
    return d


def bruhat_poset(adm: AdmissibleSet, K: Parahoric) -> Poset:
    """KR types ``Adm_K`` under the Bruhat order of minimal representatives."""
    ctx = adm.ctx
    nodes = kr_set(adm, K)
    return poset_from_relation(nodes, ctx.bruhat_leq)


def ksigma_leq(K: Parahoric, x1: Elt, x2: Elt) -> bool:
    """``x1 ≤_{K,σ} x2``: some ``y ∈ W_K`` has ``y·x1·σ(y)⁻¹ ≤ x2``."""
    if not (is_left_min(K, x1) and is_left_min(K, x2)):
        raise MembershipError("ksigma_leq needs elements of ^K W")
    ctx = K.ctx
    if x1.omega != x2.omega:
        return False
    top = x2.length
    for y in K.elements:
        z = y * x1 * ctx.sigma_apply(y).inverse()
        # outside the ball means ℓ(z) > cap ≥ ℓ(x2)
        if ctx.in_ball(z) and z.length <= top and ctx.bruhat_leq(z, x2):
            return True
    return False


def ekor_poset(adm: AdmissibleSet, K: Parahoric) -> Poset:
    """``^K Adm`` under ``≤_{K,σ}``, with dimension and p-rank labels."""
    nodes = ekor_set(adm, K)
    return poset_from_relation(
        nodes, lambda a, b: ksigma_leq(K, a, b), [_attrs(x) for x in nodes]
    )


def kr_poset(adm: AdmissibleSet, K: Parahoric) -> Poset:
    """Like :func:`bruhat_poset`, labelled by the ordinary stratum ``^K w_K``."""
    from .parabolic import max_section_rep

    p = bruhat_poset(adm, K)
    p.attrs = [_attrs(max_section_rep(K, w)) for w in p.nodes]
    return p


# -- finite zip order ---------------------------------------------------------


def twist_element(W: Parahoric, twist: Mapping[int, int], y: Elt) -> Elt:
    """Apply a diagram automorphism, given on generator indices, to ``y ∈ W``."""
    ctx = W.ctx
    return ctx.from_word([twist[i] for i in W.word(y)], 0) * ctx.omega_part(y)


def _simple_index(W: Parahoric, z: Elt) -> int:
    for i in W.gens:
        if W.ctx.generators[i] == z:
            return i
    raise ValueError("conjugate of a simple reflection is not simple")


def zip_special_element(W: Parahoric, J, twist: Mapping[int, int]) -> Elt:
    """Minimal element of ``W_{K'} ω₀ W_{φ(J)}``, with ``K' = ω₀ φ(J) ω₀⁻¹``."""
    ctx = W.ctx
    w0 = W.longest
    phiJ = sorted(twist[j] for j in J)
    Kp = [_simple_index(W, w0 * ctx.generators[j] * w0.inverse()) for j in phiJ]
    left, right = W.subgroup(Kp), W.subgroup(phiJ)
    return min({a * w0 * b for a in left for b in right}, key=W.sort_key)


def zip_order(W: Parahoric, J: Iterable[int], twist: Mapping[int, int] | None = None,
              dim_p: int = 0) -> Poset:
    """The order ``⪯`` on ``^J W``.

    ``w' ⪯ w`` iff some ``y ∈ W_J`` has ``y w' x φ(y)⁻¹ x⁻¹ ≤ w``.  Nodes are
    labelled with the orbit dimension ``dim_p + ℓ(w)``.
    """
    J = tuple(sorted(set(J)))
    twist = {i: i for i in W.gens} if twist is None else dict(twist)
    x = zip_special_element(W, J, twist)
    x_inv = x.inverse()
    WJ = W.subgroup(J)
    nodes = jw_min_reps(W, J)
    conj = [(y, twist_element(W, twist, y).inverse()) for y in WJ]

    def rel(a, b):
        return any(W.bruhat_leq(y * a * x * t * x_inv, b) for y, t in conj)

    attrs = [{"dim": dim_p + W.length(w)} for w in nodes]
    return poset_from_relation(nodes, rel, attrs)


# -- serialization ------------------------------------------------------------


def _label(node, labels) -> str:
    if labels is None:
        return str(node)
    if callable(labels):
        return labels(node)
    return labels[node]


def to_dot(p: Poset, labels=None, name: str = "hasse") -> str:
    """Graphviz digraph with edges from smaller to larger."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, node in enumerate(p.nodes):
        text = _label(node, labels)
        dim = p.attrs[i].get("dim")
        if dim is not None:
            text = f"{text}\\ndim {dim}"
        lines.append(f'  n{i} [label="{text}"];')
    for i, j in p.covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_dict(p: Poset, labels=None) -> dict:
    nodes = []
    for i, node in enumerate(p.nodes):
        entry = {"index": i, "label": _label(node, labels)}
        entry.update(p.attrs[i])
        nodes.append(entry)
    return {
        "schema_version": JSON_SCHEMA_VERSION,
        "nodes": nodes,
        "covers": [list(e) for e in p.covers],
    }


def to_json(p: Poset, labels=None) -> str:
    return json.dumps(poset_dict(p, labels), indent=2, sort_keys=True) + "\n"
