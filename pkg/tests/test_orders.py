import json

import numpy as np
import pytest

from strata_atlas import (
    MembershipError,
    Poset,
    bruhat_poset,
    ekor_poset,
    ekor_set,
    gsp_context,
    ksigma_leq,
    level_to_parahoric,
    maximal_elements,
    minimal_elements,
    to_dot,
    to_json,
    zip_order,
)
from strata_atlas.orders import kr_poset, poset_from_relation
from strata_atlas.parabolic import is_left_min

EKOR_COVERS = {
    "hyperspecial": [("tau", "s0 tau"), ("s0 tau", "s0 s1 tau"), ("s0 s1 tau", "s0 s1 s0 tau")],
    "klingen": [
        ("tau", "s0 tau"), ("tau", "s1 tau"),
        ("s0 tau", "s0 s1 tau"), ("s0 tau", "s1 s0 tau"), ("s0 tau", "s1 s2 tau"),
        ("s0 s1 tau", "s0 s1 s0 tau"),
        ("s1 tau", "s1 s2 tau"), ("s1 tau", "s0 s1 tau"), ("s1 tau", "s1 s0 tau"),
        ("s1 s0 tau", "s0 s1 s0 tau"), ("s1 s0 tau", "s1 s2 s0 tau"),
        ("s1 s2 tau", "s1 s2 s0 tau"),
    ],
    "siegel": [
        ("tau", "s0 tau"), ("tau", "s2 tau"),
        ("s0 tau", "s0 s1 tau"), ("s0 tau", "s0 s2 tau"),
        ("s0 s1 tau", "s0 s1 s0 tau"), ("s0 s1 tau", "s0 s2 s1 tau"),
        ("s0 s2 tau", "s0 s2 s1 tau"),
        ("s2 tau", "s0 s2 tau"), ("s2 tau", "s2 s1 tau"),
        ("s2 s1 tau", "s2 s1 s2 tau"), ("s2 s1 tau", "s0 s2 s1 tau"),
    ],
    "paramodular": [
        ("tau", "s1 tau"), ("s1 tau", "s1 s0 tau"), ("s1 tau", "s1 s2 tau"),
        ("s1 s0 tau", "s1 s2 s0 tau"), ("s1 s2 tau", "s1 s2 s0 tau"),
    ],
}

# KR diagrams label nodes by any representative; compare via minimal ones
KR_COVERS = {
    "klingen": [("s0 tau", "s1 s0 tau"), ("s1 s0 tau", "s1 s2 s0 tau"), ("s1 s0 tau", "s0 s1 s0 tau")],
    "siegel": [
        ("tau", "s0 s1 tau"), ("tau", "s2 s1 tau"),
        ("s0 s1 tau", "s0 s1 s0 tau"), ("s0 s1 tau", "s0 s2 s1 tau"),
        ("s2 s1 tau", "s0 s2 s1 tau"), ("s2 s1 tau", "s2 s1 s2 tau"),
    ],
    "paramodular": [("tau", "s1 s2 s0 tau")],
}


def edge_set(p):
    return {(p.nodes[i], p.nodes[j]) for i, j in p.covers}


@pytest.mark.parametrize("name", EKOR_COVERS)
def test_ekor_diagrams(adm, levels, w, name):
    p = ekor_poset(adm, levels[name])
    assert edge_set(p) == {(w(a), w(b)) for a, b in EKOR_COVERS[name]}


@pytest.mark.parametrize("name", KR_COVERS)
def test_kr_diagrams(adm, levels, w, name):
    from strata_atlas import min_double_rep

    K = levels[name]
    expected = {(min_double_rep(K, w(a)), min_double_rep(K, w(b))) for a, b in KR_COVERS[name]}
    assert edge_set(bruhat_poset(adm, K)) == expected


def test_hyperspecial_kr_is_single_node(adm, levels):
    p = bruhat_poset(adm, levels["hyperspecial"])
    assert len(p) == 1 and p.covers == []


def test_ksigma_examples(levels, w):
    K = levels["klingen"]
    assert ksigma_leq(K, w("s0 tau"), w("s1 s2 tau"))
    assert not w("s0 tau").ctx.bruhat_leq(w("s0 tau"), w("s1 s2 tau"))
    assert not ksigma_leq(K, w("s1 s2 tau"), w("s0 tau"))
    assert ksigma_leq(K, w("s1 tau"), w("s1 tau"))
    with pytest.raises(MembershipError):
        ksigma_leq(K, w("s2 tau"), w("s1 tau"))


ALL = ["hyperspecial", "klingen", "siegel", "paramodular", "iwahori"]


@pytest.mark.parametrize("name", ALL)
def test_ekor_order_properties(ctx, adm, levels, name):
    K = levels[name]
    p = ekor_poset(adm, K)
    assert p.is_partial_order()
    assert np.array_equal(p.closure_of_covers(), p.leq)
    assert minimal_elements(p) == [ctx.tau]
    expected_max = {t for t in adm.maximals if is_left_min(K, t)}
    assert set(maximal_elements(p)) == expected_max
    for a in p.nodes:
        for b in p.nodes:
            if ctx.bruhat_leq(a, b):
                assert p.le(a, b)


def test_iwahori_orders_coincide(adm, levels):
    K = levels["iwahori"]
    assert np.array_equal(ekor_poset(adm, K).leq, bruhat_poset(adm, K).leq)
    assert len(maximal_elements(ekor_poset(adm, K))) == 4


def test_twisted_frobenius_levels():
    c = gsp_context(2, sigma="tau")
    from strata_atlas import admissible_set

    a = admissible_set(c)
    for J in [(0, 2), (1,), (0, 1, 2)]:
        K = level_to_parahoric(c, J)
        p = ekor_poset(a, K)
        assert p.is_partial_order()
        assert minimal_elements(p) == [c.tau]


def test_zip_order_examples(levels, w):
    W = levels["hyperspecial"]
    assert len(zip_order(W, [1, 2])) == 1
    p = zip_order(W, [1])
    assert len(p) == 4
    assert p.is_partial_order()
    assert [(str(p.nodes[i]), str(p.nodes[j])) for i, j in p.covers] == [
        ("e", "s2"), ("s2", "s2 s1"), ("s2 s1", "s2 s1 s2")
    ]
    assert [a["dim"] for a in zip_order(W, [1], dim_p=3).attrs] == [3, 4, 5, 6]
    full = zip_order(W, [])
    assert len(full) == 8
    assert minimal_elements(full) == [w("e")]
    for i, j in full.covers:
        assert W.length(full.nodes[i]) < W.length(full.nodes[j])


def test_zip_order_with_diagram_twist(levels):
    W = levels["paramodular"]
    p = zip_order(W, [0], twist={0: 2, 2: 0})
    assert len(p) == 2 and p.is_partial_order()


def test_poset_helpers():
    p = poset_from_relation([1, 2, 3], lambda a, b: a <= b)
    assert p.covers == [(0, 1), (1, 2)]
    assert maximal_elements(p) == [3] and minimal_elements(p) == [1]
    single = Poset(["x"], np.ones((1, 1), dtype=bool))
    assert maximal_elements(single) == minimal_elements(single) == ["x"]
    empty = Poset([], np.zeros((0, 0), dtype=bool))
    assert empty.covers == [] and empty.is_partial_order()
    assert not Poset([1, 2], np.ones((2, 2), dtype=bool)).is_partial_order()


def test_dot_and_json():
    chain = poset_from_relation(["a", "b"], lambda x, y: x <= y)
    dot = to_dot(chain)
    assert dot.count("->") == 1 and "n0 -> n1" in dot
    empty = to_dot(Poset([], np.zeros((0, 0), dtype=bool)))
    assert empty.startswith("digraph") and "->" not in empty
    data = json.loads(to_json(chain))
    assert data["schema_version"] == 1
    assert data["covers"] == [[0, 1]]


def test_klingen_json_export(adm, levels):
    p = ekor_poset(adm, levels["klingen"])
    data = json.loads(to_json(p))
    assert len(data["nodes"]) == 8 and len(data["covers"]) == 12
    assert {n["dim"] for n in data["nodes"]} == {0, 1, 2, 3}
    assert to_json(p) == to_json(ekor_poset(adm, levels["klingen"]))


def test_kr_poset_labels_use_ordinary_dimension(adm, levels):
    p = kr_poset(adm, levels["klingen"])
    assert [a["dim"] for a in p.attrs] == [1, 2, 3, 3]
