from __future__ import annotations

import pytest

from betagamma.chiral import build_conformal, build_currents, build_sl2_triple, l_s
from betagamma.commutant import (
    is_in_commutant,
    verify_commutant_membership,
    verify_current_ope,
    verify_howe_inclusion,
    verify_level,
)
from betagamma.fock import beta, gamma, vacuum, wick
from betagamma.rep import builtin_rep

E, F, H = 0, 1, 2


@pytest.fixture(scope="module")
def rep():
    return builtin_rep("sl2-adjoint")


@pytest.fixture(scope="module")
def cs(rep):
    return build_currents(rep)


@pytest.fixture(scope="module")
def tr(rep):
    return build_sl2_triple(rep)


def test_current_ope_report(cs):
    report = verify_current_ope(cs)
    assert report.passed
    assert report.count("pass") == 36


def test_level_report(tr, rep):
    report = verify_level(tr, rep.v_basis)
    assert report.passed
    assert report.count("pass") == 18


def test_triple_in_commutant(cs, tr):
    for _, v in tr.items():
        assert is_in_commutant(v, list(cs.hat)).member


def test_vacuum_in_commutant(cs):
    assert is_in_commutant(vacuum(), list(cs.hat)).member


def test_coset_vector_in_commutant(rep, cs):
    assert is_in_commutant(build_conformal(rep, "total").state, list(cs.hat)).member


def test_l_s_not_in_commutant(rep, cs):
    assert not is_in_commutant(l_s(rep), list(cs.hat)).member


def test_beta_fails_with_witness(cs, rep):
    res = is_in_commutant(beta(E), {"e^": cs["e"], "f^": cs["f"], "h^": cs["h"]})
    assert not res.member
    witnesses = {g: (n, s) for g, n, s in res.witnesses}
    assert witnesses["h^"] == (0, 2 * beta(E))
    report = verify_commutant_membership(beta(E), cs)
    assert report.exit_code() == 1
    assert "h^ o_0 v" in report.checks[0].witness


def test_perturbed_generator_fails(cs, tr):
    perturbed = tr["e"] + wick(gamma(E), gamma(E))
    res = is_in_commutant(perturbed, list(cs.hat))
    assert not res.member
    assert all(n == 0 for _, n, _ in res.witnesses)


def test_howe_inclusion(cs, tr):
    report = verify_howe_inclusion(cs, tr)
    assert report.passed
    assert report.count("pass") == 18
    assert "cited" in report.config
