from __future__ import annotations

import json
from fractions import Fraction

import pytest

from betagamma import matrices as mx
from betagamma.rep import (
    RepError,
    builtin_rep,
    direct_sum,
    dual_action,
    dual_rep,
    killing_form,
    load_rep,
    to_document,
    trace_form,
    weight_multiset,
)

SL2_QUADS = [[0, 1, 2, 1], [2, 0, 0, 2], [2, 1, 1, -2]]


def test_killing_form_adjoint():
    rep = builtin_rep("sl2-adjoint")
    k = killing_form(rep).matrix
    assert k == mx.to_matrix([[0, 4, 0], [4, 0, 0], [0, 0, 8]])
    assert trace_form(rep).matrix == mx.scale(-1, k)  # B = -Tr(rho rho) = -K
    assert rep.bform == k


def test_adjoint_weights():
    rep = builtin_rep("sl2-adjoint")
    assert weight_multiset(rep) == [2, 0, -2]
    assert weight_multiset(direct_sum(rep, dual_rep(rep))) == [2, 2, 0, 0, -2, -2]


def test_standard_rep():
    rep = builtin_rep("sl2-standard")
    assert weight_multiset(rep) == [1, -1]
    assert trace_form(rep).matrix == mx.to_matrix([[0, -1, 0], [-1, 0, 0], [0, 0, -2]])
    assert rep.bform is None


def test_dual_action_is_minus_transpose():
    rep = builtin_rep("sl2-adjoint")
    for i in range(3):
        assert dual_action(rep, i) == mx.scale(-1, mx.transpose(rep.rho[i]))
    dual = dual_rep(rep)
    assert dual.v_dim == 3


def test_round_trip_document():
    rep = builtin_rep("sl2-adjoint")
    again = load_rep(json.dumps(to_document(rep)))
    assert again.structure == rep.structure
    assert again.rho == rep.rho
    assert again.bform == rep.bform


def test_jacobi_failure_has_witness():
    quads = [[0, 1, 2, 1], [2, 0, 0, 2], [2, 1, 1, 1]]
    doc = {"g_dim": 3, "basis": ["e", "f", "h"], "structure": quads, "v_dim": 1, "rho": [[[0]]] * 3}
    with pytest.raises(RepError) as info:
        load_rep(doc)
    assert info.value.identity == "jacobi"
    assert info.value.witness == (0, 1, 2)


def test_homomorphism_failure():
    doc = {
        "g_dim": 3,
        "structure": SL2_QUADS,
        "v_dim": 2,
        "rho": [[[0, 1], [0, 0]], [[0, 0], [1, 0]], [[2, 0], [0, -2]]],
    }
    with pytest.raises(RepError) as info:
        load_rep(doc)
    assert info.value.identity == "homomorphism"


def test_noninvariant_bform_rejected():
    doc = to_document(builtin_rep("sl2-adjoint"))
    doc["bform"] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    with pytest.raises(RepError) as info:
        load_rep(doc)
    assert info.value.identity == "bform-invariance"


def test_trivial_rep_has_zero_form():
    doc = {"g_dim": 3, "structure": SL2_QUADS, "v_dim": 1, "rho": [[[0]]] * 3}
    rep = load_rep(doc)
    assert mx.is_zero(trace_form(rep).matrix)


def test_malformed_documents():
    with pytest.raises(RepError):
        load_rep("{not json")
    with pytest.raises(RepError):
        load_rep({"g_dim": 3})
    with pytest.raises(RepError):
        load_rep({"g_dim": 1, "v_dim": 1, "rho": [[[0, 0]]]})


def test_rational_entries_accepted():
    doc = {"g_dim": 1, "v_dim": 1, "rho": [[["1/2"]]]}
    rep = load_rep(doc)
    assert rep.rho[0][0][0] == Fraction(1, 2)


def test_unknown_builtin():
    with pytest.raises(RepError):
        builtin_rep("so3")


def test_dual_cartan_eigenvalues():
    rep = builtin_rep("sl2-adjoint")
    h = dual_action(rep, rep.g_index("h"))
    assert sorted(mx.integer_roots(mx.charpoly(h))) == [-2, 0, 2]
    assert killing_form(rep)(0, 0) == 0
