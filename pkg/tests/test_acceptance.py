"""The ten acceptance criteria, each checked exactly and logged as a single line."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from _acceptance_log import record
from _states import commutator_sides, random_state, skew_rhs

from betagamma.algebra import series_inv_geom
from betagamma.chiral import build_currents, build_sl2_triple, verify_conformal
from betagamma.commutant import verify_current_ope, verify_howe_inclusion, verify_level
from betagamma.fock import FockState, derivative, nth_product, vacuum
from betagamma.grring import (
    DEFAULT_SEED,
    invariant_dimension,
    jacobian_independence,
    p0_ring,
    triple_symbols,
    verify_compatibility,
    verify_generators_P0,
    verify_weight_zero_generator,
)
from betagamma.hilbert import invariant_series
from betagamma.rep import builtin_rep

REP = builtin_rep("sl2-adjoint")
DMAX = 8


@pytest.fixture(scope="module")
def currents():
    return build_currents(REP)


@pytest.fixture(scope="module")
def triple():
    return build_sl2_triple(REP)


def _summary(report) -> str:
    fails = report.failures()
    if not fails:
        return f"{report.count('pass')} checks exact"
    return f"{len(fails)} failing, first {fails[0].id}: {fails[0].witness}"


def test_criterion_01_current_ope(currents):
    report = verify_current_ope(currents, nmax=3)
    spot = (
        nth_product(currents["e"], 1, currents["f"]) == -4 * vacuum()
        and nth_product(currents["h"], 1, currents["h"]) == -8 * vacuum()
    )
    ok = report.passed and report.count("pass") == 36 and spot
    record(1, "current OPE", ok, _summary(report) + "; e^ o_1 f^ = -4, h^ o_1 h^ = -8")
    assert ok


def test_criterion_02_level(triple):
    report = verify_level(triple, REP.v_basis)
    spot = (
        nth_product(triple["h"], 1, triple["h"]) == -3 * vacuum()
        and nth_product(triple["e"], 1, triple["f"]) == Fraction(-3, 2) * vacuum()
    )
    ok = report.passed and report.count("pass") == 18 and spot
    record(2, "sl(2) triple at level -3/8 K", ok, _summary(report) + "; vh o_1 vh = -3, ve o_1 vf = -3/2")
    assert ok


def test_criterion_03_commutation(currents, triple):
    report = verify_howe_inclusion(currents, triple, nmax=3)
    ok = report.passed and report.count("pass") == 18
    record(3, "currents and triple commute both ways", ok, _summary(report))
    assert ok


def test_criterion_04_hilbert_series():
    series = invariant_series([2, 2, 0, 0, -2, -2], DMAX)
    coeffs = [series[d] for d in range(DMAX + 1)]
    g = series_inv_geom(2, DMAX)
    closed = g * g * g
    oracle = [invariant_dimension(REP, "P0-full", d) for d in range(DMAX + 1)]
    expected = [1, 0, 3, 0, 6, 0, 10, 0, 15]
    ok = coeffs == expected and list(closed.coeffs) == expected and oracle == expected
    record(4, "invariant Hilbert series of V + V*", ok, f"series {list(map(int, coeffs))}, kernel oracle {oracle}")
    assert ok


def test_criterion_05_weight_zero():
    dims = [invariant_dimension(REP, "SymV*", d) for d in range(DMAX + 1)]
    report = verify_weight_zero_generator(REP, DMAX)
    ok = dims == [1, 0, 1, 0, 1, 0, 1, 0, 1] and report.passed
    record(5, "Sym(V*) invariants are powers of one quadratic", ok, f"dims {dims}; {_summary(report)}")
    assert ok


def test_criterion_06_jacobian(triple):
    syms = triple_symbols(triple, p0_ring(REP))
    polys = [syms["e"], syms["f"], syms["h"]]
    seeds = [DEFAULT_SEED + s for s in range(5)]
    ranks = [jacobian_independence(polys, seed=s).config["max_rank"] for s in seeds]
    control = [jacobian_independence([syms["e"], syms["e"], syms["h"]], seed=s) for s in seeds]
    control_ranks = [r.config["max_rank"] for r in control]
    ok = ranks == [3] * 5 and max(control_ranks) <= 2 and all(r.exit_code() == 3 for r in control)
    record(6, "Jacobian rank of the three symbols", ok, f"ranks {ranks}; repeated-polynomial control {control_ranks}")
    assert ok


def test_criterion_07_generation(triple):
    report = verify_generators_P0(REP, triple, DMAX)
    degree_checks = [c for c in report.checks if c.id.startswith("generators.degree-")]
    ok = report.passed and len(degree_checks) == DMAX + 1
    record(7, "degreewise generation by ve, vf, vh", ok, _summary(report))
    assert ok


def test_criterion_08_compatibility(currents):
    report = verify_compatibility(REP, nmax=3, currents=currents)
    ok = report.passed
    record(8, "symbol map intertwines the derivation action", ok, report.checks[0].description)
    assert ok


def test_criterion_09_engine_identities():
    rng = random.Random(DEFAULT_SEED)
    pairs = [(-1, 0), (0, 0), (1, 0), (0, 1), (1, 1), (-1, 1), (2, 0), (0, -1)]
    failures: list[str] = []
    instances = 0
    count = 200
    for trial in range(count):
        a, b = random_state(rng), random_state(rng)
        wa, wb = a.max_weight(), b.max_weight()
        for n in range(-3, 4):
            instances += 1
            if nth_product(vacuum(), n, a) != (a if n == -1 else FockState.zero()):
                failures.append(f"vacuum, trial {trial}, n={n}")
        for n in range(wa + wb, wa + wb + 2):
            instances += 1
            if nth_product(a, n, b):
                failures.append(f"grading bound, trial {trial}, n={n}")
        for n in range(-2, 3):
            instances += 1
            if nth_product(derivative(a), n, b) != -n * nth_product(a, n - 1, b):
                failures.append(f"translation, trial {trial}, n={n}")
        for n in range(-1, 3):
            instances += 1
            if nth_product(b, n, a) != skew_rhs(a, b, n):
                failures.append(f"skew symmetry, trial {trial}, n={n}")
        # single-term states keep the nested products of the commutator formula small
        m, k = pairs[trial % len(pairs)]
        a1, b1, c1 = (random_state(rng, max_terms=1) for _ in range(3))
        instances += 1
        lhs, rhs = commutator_sides(a1, b1, c1, m, k)
        if lhs != rhs:
            failures.append(f"commutator, trial {trial}, m={m}, k={k}")
    ok = not failures
    detail = f"{count} trials, {5 * count} random states, {instances} identity instances" + (f"; first failure {failures[0]}" if failures else "")
    record(9, "vertex algebra identities", ok, detail)
    assert ok


def test_criterion_10_conformal():
    report = verify_conformal(REP)
    labels = {c.id.rsplit(".", 1)[0] for c in report.checks}
    ok = report.passed and {"conformal.ve", "conformal.vf", "conformal.vh"} <= labels
    record(10, "L_S acts as translation and weight", ok, _summary(report))
    assert ok
