from __future__ import annotations

from fractions import Fraction

import pytest
from _states import commutator_sides, skew_rhs, states
from hypothesis import given, settings
from hypothesis import strategies as st

from betagamma.fock import (
    BETA,
    GAMMA,
    FockState,
    GenMode,
    beta,
    derivative,
    gamma,
    mode_action,
    nth_product,
    ope_singular,
    vacuum,
    wick,
    wick_all,
)

E, F, H = 0, 1, 2
SETTINGS = settings(max_examples=50, deadline=None)


def test_basic_contractions():
    assert nth_product(beta(E), 0, gamma(E)) == vacuum()
    assert nth_product(gamma(E), 0, beta(E)) == -vacuum()
    assert ope_singular(beta(E), beta(F)) == {}
    assert ope_singular(beta(E), gamma(F)) == {}


def test_weights():
    assert beta(E).weight() == 1
    assert gamma(E).weight() == 0
    assert beta(E, 2).weight() == 3
    assert gamma(E, 2).weight() == 2
    assert wick(beta(E), gamma(F, 1)).weight() == 2
    assert vacuum().weight() == 0


def test_derivative_normalisation():
    # beta(i, k) is the field d^k beta, i.e. k! beta(-k-1)|0>
    assert beta(E, 2) == FockState.from_modes([(BETA, E, -3)], 2)
    assert derivative(beta(E)) == beta(E, 1)
    assert derivative(gamma(H), 3) == gamma(H, 3)


def test_mode_action_signs():
    s = FockState.from_modes([(GAMMA, E, -1), (GAMMA, E, -1)])
    assert mode_action(GenMode(BETA, E, 0), s) == 2 * gamma(E)
    assert mode_action(GenMode(GAMMA, E, 0), beta(E)) == -vacuum()
    assert not mode_action(GenMode(BETA, E, 0), vacuum())
    assert not mode_action(GenMode(GAMMA, F, 5), vacuum())


def test_higher_contractions():
    # d^j beta o_n d^k gamma' has a single pole of order j + k + 1
    for j in range(3):
        for k in range(3):
            products = ope_singular(beta(E, j), gamma(E, k))
            n = j + k
            assert set(products) == {n}
            # d_z^j d_w^k (z-w)^-1 = (-1)^j (j+k)! (z-w)^(-j-k-1)
            assert products[n] == (-1) ** j * _fact(n) * vacuum()


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_wick_of_creation_modes_is_monomial():
    s = wick_all([beta(E), gamma(F), gamma(H, 1)])
    assert s == FockState.from_modes([(BETA, E, -1), (GAMMA, F, -1), (GAMMA, H, -2)])


def test_wick_with_contraction():
    # :beta gamma: o_0 beta = -beta, since gamma o_0 beta = -1
    j = wick(beta(E), gamma(E))
    assert nth_product(j, 0, beta(E)) == -beta(E)
    assert nth_product(j, 0, gamma(E)) == gamma(E)
    # the double contraction pairs beta-gamma (+1) with gamma-beta (-1)
    assert nth_product(j, 1, j) == -vacuum()


def test_single_generator_oracle():
    """A generator's field acts by (-1)^m C(n, m) G(n - m): a direct mode-formula oracle."""
    target = wick_all([beta(F), gamma(E, 2), gamma(E)])
    for kind in (BETA, GAMMA):
        for m in range(3):
            a = FockState.from_modes([(kind, E, -m - 1)])
            for n in range(-3, 5):
                coef = (-1) ** m * _gbinom(n, m)
                want = coef * mode_action(GenMode(kind, E, n - m), target)
                assert nth_product(a, n, target) == want


def _gbinom(n: int, m: int) -> Fraction:
    num = 1
    for i in range(m):
        num *= n - i
    return Fraction(num, _fact(m))


def test_inhomogeneous_weight_raises():
    assert (beta(E) + gamma(E, 1)).weight() == 1
    with pytest.raises(ValueError):
        (beta(E) + gamma(E)).weight()
    assert (beta(E) + gamma(E)).homogeneous_parts() == {1: beta(E), 0: gamma(E)}


@given(states())
@SETTINGS
def test_vacuum_axioms(u):
    one = vacuum()
    for n in range(-3, 4):
        assert nth_product(one, n, u) == (u if n == -1 else FockState.zero())
    assert nth_product(u, -1, one) == u
    for n in range(0, 4):
        assert not nth_product(u, n, one)
    assert nth_product(u, -2, one) == derivative(u)


@given(states(), states())
@SETTINGS
def test_grading_bound(a, b):
    top = a.max_weight() + b.max_weight()
    for n in range(top, top + 3):
        assert not nth_product(a, n, b)
    for n in range(-2, top):
        r = nth_product(a, n, b)
        if r and a.is_homogeneous() and b.is_homogeneous():
            assert r.weights() == {a.weight() + b.weight() - n - 1}


@given(states(), states(), st.integers(-2, 3))
@SETTINGS
def test_translation(a, b, n):
    assert nth_product(derivative(a), n, b) == -n * nth_product(a, n - 1, b)
    # d is a derivation of every circle product
    lhs = derivative(nth_product(a, n, b))
    assert lhs == nth_product(derivative(a), n, b) + nth_product(a, n, derivative(b))


@given(states(), states(), st.integers(-2, 3))
@SETTINGS
def test_skew_symmetry(a, b, n):
    assert nth_product(b, n, a) == skew_rhs(a, b, n)


@given(states(max_terms=1), states(max_terms=1), states(max_terms=1), st.integers(-1, 2), st.integers(-1, 2))
@settings(max_examples=40, deadline=None)
def test_commutator_formula(a, b, c, m, k):
    lhs, rhs = commutator_sides(a, b, c, m, k)
    assert lhs == rhs


@given(states(), states())
@SETTINGS
def test_bilinearity(a, b):
    c = beta(H) + 2 * gamma(E, 1)
    for n in (-1, 0, 1):
        assert nth_product(a + c, n, b) == nth_product(a, n, b) + nth_product(c, n, b)
        assert nth_product(a, n, 3 * b) == 3 * nth_product(a, n, b)


def test_derivative_leibniz_example():
    s = wick(gamma(H), gamma(H))
    assert derivative(s) == FockState.from_modes([(GAMMA, H, -2), (GAMMA, H, -1)], 2)
    assert derivative(s) == nth_product(s, -2, vacuum())


def test_vacuum_is_wick_unit():
    b = wick(beta(E, 1), gamma(F))
    assert wick(vacuum(), b) == b
    assert not nth_product(vacuum(), 0, b)
