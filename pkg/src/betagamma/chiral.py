"""Distinguished vertex operators inside the beta-gamma system S(V).

* currents  u^ = -sum_i :beta^{rho(u) x_i} gamma^{x'_i}:
* the sl(2) triple v_e, v_f, v_h built from an invariant form B' on V
* conformal vectors L_S, the Sugawara image rho^(L_O) and the coset vector L

The triple is written with Gram matrices instead of an orthonormal basis, which
keeps every coefficient rational:
    sum_i u'_i (x) u'_i = sum_ab B'_ab x'_a (x) x'_b,
    sum_i u_i (x) u_i  = sum_ab (B'^-1)_ab x_a (x) x_b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import matrices as mx
from .fock import FockState, beta, derivative, gamma, nth_product, wick
from .rep import (
    BilinearForm,
    LieRepData,
    RepError,
    invariant_form,
    killing_form,
    trace_form,
)
from .report import VerificationReport, check

SL2_LABELS = ("e", "f", "h")
# sl(2) structure on the triple in the order (e, f, h)
SL2_BRACKET = {
    ("e", "f"): {"h": 1},
    ("f", "e"): {"h": -1},
    ("h", "e"): {"e": 2},
    ("e", "h"): {"e": -2},
    ("h", "f"): {"f": -2},
    ("f", "h"): {"f": 2},
}
SL2_KILLING = {("e", "f"): 4, ("f", "e"): 4, ("h", "h"): 8}


@dataclass(frozen=True)
class CurrentSet:
    rep: LieRepData
    hat: tuple[FockState, ...]
    level_form: BilinearForm

    def __getitem__(self, label: str | int) -> FockState:
        i = label if isinstance(label, int) else self.rep.g_index(label)
        return self.hat[i]

    @property
    def labels(self) -> tuple[str, ...]:
        return self.rep.basis_names

    def combination(self, coords) -> FockState:
        """The current of sum_k coords[k] u_k."""
        out = FockState.zero()
        for c, s in zip(coords, self.hat):
            if c:
                out = out + c * s
        return out


@dataclass(frozen=True)
class Sl2Triple:
    v_e: FockState
    v_f: FockState
    v_h: FockState
    expected_level: Fraction  # the level is expected_level * K

    def __getitem__(self, label: str) -> FockState:
        return {"e": self.v_e, "f": self.v_f, "h": self.v_h}[label]

    def items(self) -> list[tuple[str, FockState]]:
        return [("e", self.v_e), ("f", self.v_f), ("h", self.v_h)]


@dataclass(frozen=True)
class ConformalElement:
    state: FockState
    kind: str
    lam: Fraction | None = None


def build_currents(rep: LieRepData) -> CurrentSet:
    n = rep.v_dim
    hats = []
    for u in range(rep.g_dim):
        r = rep.rho[u]
        acc = FockState.zero()
        for j in range(n):
            # rho(u) x_j = sum_k r[k][j] x_k
            for k in range(n):
                if r[k][j]:
                    acc = acc - r[k][j] * wick(beta(k), gamma(j))
        hats.append(acc)
    return CurrentSet(rep, tuple(hats), trace_form(rep))


def build_sl2_triple(rep: LieRepData, bprime: BilinearForm | None = None) -> Sl2Triple:
    b = (bprime or invariant_form(rep)).matrix
    if not mx.is_symmetric(b):
        raise RepError("B' must be symmetric", "bform-symmetry")
    try:
        binv = mx.inverse(b)
    except ZeroDivisionError:
        raise RepError("B' is degenerate", "bform-degenerate") from None
    n = rep.v_dim
    half = Fraction(1, 2)
    v_h = FockState.zero()
    v_e = FockState.zero()
    v_f = FockState.zero()
    for a in range(n):
        v_h = v_h + wick(beta(a), gamma(a))
        for c in range(n):
            if b[a][c]:
                v_e = v_e + half * b[a][c] * wick(gamma(a), gamma(c))
            if binv[a][c]:
                v_f = v_f - half * binv[a][c] * wick(beta(a), beta(c))
    return Sl2Triple(v_e, v_f, v_h, Fraction(-n, 8))


def l_s(rep: LieRepData) -> FockState:
    """L_S = sum_i :beta^{x_i} d gamma^{x'_i}:."""
    out = FockState.zero()
    for i in range(rep.v_dim):
        out = out + wick(beta(i), gamma(i, 1))
    return out


def level_ratio(rep: LieRepData) -> Fraction:
    """The scalar lambda with B = lambda K, where B is the trace form."""
    k = killing_form(rep).matrix
    b = trace_form(rep).matrix
    ratio = None
    for rk, rb in zip(k, b):
        for x, y in zip(rk, rb):
            if x:
                r = y / x
                if ratio is not None and r != ratio:
                    raise RepError("trace form is not a multiple of the Killing form", "level")
                ratio = r
            elif y:
                raise RepError("trace form is not a multiple of the Killing form", "level")
    if ratio is None:
        raise RepError("Killing form vanishes; g is not simple", "level")
    return ratio


def sugawara_image(rep: LieRepData, lam: Fraction | None = None, currents: CurrentSet | None = None) -> FockState:
    """rho^(L_O) = 1/(2 lambda + 1) sum_ab (K^-1)_ab :u^_a u^_b:, re-normal-ordered in S(V)."""
    lam = level_ratio(rep) if lam is None else Fraction(lam)
    if lam == Fraction(-1, 2):
        raise ValueError("lambda = -1/2 admits no conformal element")
    try:
        kinv = mx.inverse(killing_form(rep).matrix)
    except ZeroDivisionError:
        raise RepError("Killing form is degenerate; g is not simple", "killing") from None
    cs = currents or build_currents(rep)
    out = FockState.zero()
    for a in range(rep.g_dim):
        for b in range(rep.g_dim):
            if kinv[a][b]:
                out = out + kinv[a][b] * wick(cs.hat[a], cs.hat[b])
    return out / (2 * lam + 1)


def build_conformal(rep: LieRepData, which: str = "S", lam=None) -> ConformalElement:
    """which is "S", "O" (the image rho^(L_O)) or "total" (L_S - rho^(L_O))."""
    if which == "S":
        return ConformalElement(l_s(rep), "S")
    lam = level_ratio(rep) if lam is None else Fraction(lam)
    if which == "O":
        return ConformalElement(sugawara_image(rep, lam), "O", lam)
    if which == "total":
        return ConformalElement(l_s(rep) - sugawara_image(rep, lam), "total", lam)
    raise ValueError(f"unknown conformal element {which!r}")


CONFORMAL_REF = "L o_0 a = d a, L o_1 a = wt(a) a"


def conformal_test_states(rep: LieRepData, kmax: int = 1) -> list[tuple[str, FockState]]:
    """Generator fields d^k beta^x, d^k gamma^x' for k <= kmax, then the sl(2) triple if it exists."""
    names = rep.v_basis
    out = []
    for k in range(kmax + 1):
        for i, x in enumerate(names):
            out.append((f"beta{k}.{x}", beta(i, k)))
            out.append((f"gamma{k}.{x}'", gamma(i, k)))
    try:
        tr = build_sl2_triple(rep)
    except RepError:
        return out
    return out + [(f"v{x}", v) for x, v in tr.items()]


def verify_conformal(rep: LieRepData, element: FockState | None = None, kmax: int = 1) -> VerificationReport:
    """Translation and weight axioms of L_S (or of ``element``) on generators and the triple."""
    L = l_s(rep) if element is None else element
    names = rep.v_basis
    report = VerificationReport("conformal")
    for label, a in conformal_test_states(rep, kmax):
        got0, want0 = nth_product(L, 0, a), derivative(a)
        report.add(
            check(f"conformal.{label}.n0", got0 == want0, CONFORMAL_REF,
                  f"got {got0.format(names)}, expected {want0.format(names)}", f"L o_0 {label} = d {label}")
        )
        got1, want1 = nth_product(L, 1, a), a.weight() * a
        report.add(
            check(f"conformal.{label}.n1", got1 == want1, CONFORMAL_REF,
                  f"got {got1.format(names)}, expected {want1.format(names)}",
                  f"L o_1 {label} = {a.weight()} {label}")
        )
    return report
