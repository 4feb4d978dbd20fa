"""The associated graded d-ring P = gr(S(V)) and classical invariant theory on it.

P is the polynomial ring on beta_k^{x_i}, gamma_k^{x'_i} (images of d^k beta, d^k gamma).
A current u^ has filtration degree 2, so each u^ o_n induces a degree-0 derivation

    u(n)(beta_k^x)   = C(k, n) beta_{k-n}^{rho(u) x}
    u(n)(gamma_k^x') = C(k, n) gamma_{k-n}^{rho*(u) x'}

with falling factorials C(k, n) = k (k-1) ... (k-n+1), zero for n > k.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial, perm
from typing import Sequence

from . import matrices as mx
from .algebra import MultiPoly, PolyRing, poly_eval, poly_partial
from .chiral import CurrentSet, Sl2Triple, build_currents
from .fock import BETA, GAMMA, FockState, nth_product
from .rep import LieRepData
from .report import INCONCLUSIVE, PASS, Check, VerificationReport, check

DEFAULT_KMAX = 4
DEFAULT_DMAX = 8
DEFAULT_SEED = 20240001
FILTRATION_K = 2  # deg(u^) = k(S(V), deg)

SPACES = ("P0-full", "SymV*")


class GrRing:
    """Polynomial ring on beta_k / gamma_k variables, 0 <= k <= kmax."""

    def __init__(self, rep: LieRepData, kmax: int = DEFAULT_KMAX, kinds: Sequence[int] = (BETA, GAMMA)):
        self.rep = rep
        self.kmax = kmax
        self.kinds = tuple(kinds)
        self._vars: list[tuple[int, int, int]] = [
            (kind, i, k) for kind in self.kinds for i in range(rep.v_dim) for k in range(kmax + 1)
        ]
        self._pos = {v: p for p, v in enumerate(self._vars)}
        self.ring = PolyRing([self._name(*v) for v in self._vars])

    def _name(self, kind: int, i: int, k: int) -> str:
        label = self.rep.v_basis[i]
        return f"beta{k}^{label}" if kind == BETA else f"gamma{k}^{label}'"

    @property
    def variables(self) -> list[tuple[int, int, int]]:
        return list(self._vars)

    def var_index(self, kind: int, i: int, k: int) -> int:
        try:
            return self._pos[(kind, i, k)]
        except KeyError:
            raise ValueError(
                f"variable {self._name(kind, i, k)} is outside this ring (kmax={self.kmax})"
            ) from None

    def var(self, kind: int, i: int, k: int = 0) -> MultiPoly:
        return self.ring.gen(self.var_index(kind, i, k))

    def name(self, kind: int, i: int, k: int = 0) -> str:
        return self.ring.names[self.var_index(kind, i, k)]

    def linear(self, kind: int, vec: Sequence, k: int) -> MultiPoly:
        """beta_k^{sum vec_i x_i} (or gamma), linear in the label."""
        out = self.ring.zero()
        for i, c in enumerate(vec):
            if c:
                out = out + self.var(kind, i, k) * c
        return out


def p0_ring(rep: LieRepData, space: str = "P0-full") -> GrRing:
    if space == "P0-full":
        return GrRing(rep, 0)
    if space == "SymV*":
        return GrRing(rep, 0, kinds=(GAMMA,))
    raise ValueError(f"unknown space {space!r}; expected one of {SPACES}")


def symbol(a: FockState, d: int, gr: GrRing) -> MultiPoly:
    """Top-degree symbol phi_d(a): keep monomials with exactly d modes.

    beta_i(-k-1) maps to beta_k^{x_i} / k!, gamma likewise.
    """
    if a.degree() > d:
        raise ValueError(f"state has filtration degree {a.degree()} > {d}")
    terms: dict[tuple[int, ...], Fraction] = {}
    width = gr.ring.ngens
    for mono, c in a.terms.items():
        if len(mono) != d:
            continue
        exp = [0] * width
        coef = c
        for g in mono:
            k = -g.mode - 1
            exp[gr.var_index(g.kind, g.index, k)] += 1
            coef /= factorial(k)
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + coef
    return MultiPoly(gr.ring, terms)


def apply_derivation(p: MultiPoly, images: dict[int, MultiPoly]) -> MultiPoly:
    """Extend a map on variables (index -> image) to a derivation; unlisted variables map to 0."""
    ring = p.ring
    out: dict[tuple[int, ...], Fraction] = {}
    for exp, c in p.terms.items():
        for v, e in enumerate(exp):
            img = images.get(v)
            if not e or img is None or not img.terms:
                continue
            lowered = exp[:v] + (e - 1,) + exp[v + 1 :]
            for iexp, ic in img.terms.items():
                key = tuple(a + b for a, b in zip(lowered, iexp))
                out[key] = out.get(key, 0) + c * e * ic
    return MultiPoly(ring, out)


class DerivationAction:
    """The action of g (x) C[t] on P by the degree-0 derivations u(n)."""

    def __init__(self, gr: GrRing):
        self.gr = gr
        self.rep = gr.rep
        self._cache: dict[tuple, dict[int, MultiPoly]] = {}

    def images(self, coords: Sequence, n: int) -> dict[int, MultiPoly]:
        """Images of every variable under (sum coords[u] u)(n)."""
        key = (tuple(Fraction(c) for c in coords), n)
        if key in self._cache:
            return self._cache[key]
        rep, gr = self.rep, self.gr
        d, nv = rep.g_dim, rep.v_dim
        rho = mx.zeros(nv)
        for u in range(d):
            if coords[u]:
                rho = mx.add(rho, mx.scale(coords[u], rep.rho[u]))
        dual = mx.scale(-1, mx.transpose(rho))
        out: dict[int, MultiPoly] = {}
        for kind, i, k in gr.variables:
            if n > k:
                continue
            mat = rho if kind == BETA else dual
            col = [mat[r][i] for r in range(nv)]
            img = gr.linear(kind, col, k - n) * perm(k, n)
            if img:
                out[gr.var_index(kind, i, k)] = img
        self._cache[key] = out
        return out

    def basis_coords(self, u: int) -> tuple[int, ...]:
        return tuple(int(j == u) for j in range(self.rep.g_dim))

    def apply(self, u: int, n: int, p: MultiPoly) -> MultiPoly:
        return apply_derivation(p, self.images(self.basis_coords(u), n))

    def apply_combination(self, coords: Sequence, n: int, p: MultiPoly) -> MultiPoly:
        return apply_derivation(p, self.images(coords, n))


def partial_d(p: MultiPoly, gr: GrRing) -> MultiPoly:
    """The d-ring derivation: beta_k -> beta_{k+1}, gamma_k -> gamma_{k+1}."""
    images = {}
    for kind, i, k in gr.variables:
        if any(e[gr.var_index(kind, i, k)] for e in p.terms):
            images[gr.var_index(kind, i, k)] = gr.var(kind, i, k + 1)
    return apply_derivation(p, images)


# -- compatibility between the Fock action and the induced derivations --------------


def single_mode_states(rep: LieRepData, kmax: int = 3) -> list[FockState]:
    out = []
    for kind in (BETA, GAMMA):
        for i in range(rep.v_dim):
            for k in range(kmax + 1):
                out.append(FockState.from_modes([(kind, i, -k - 1)]))
    return out


def default_samples(rep: LieRepData, kmax: int = 3) -> list[FockState]:
    """All single-mode states with k <= kmax and all their pairwise Wick products."""
    singles = single_mode_states(rep, kmax)
    pairs = []
    for a in range(len(singles)):
        for b in range(a, len(singles)):
            # two creation modes never contract, so the Wick product is the joint monomial
            (ma,), (mb,) = singles[a].terms, singles[b].terms
            pairs.append(FockState({ma + mb: 1}))
    return [FockState.vacuum()] + singles + pairs


def verify_compatibility(
    rep: LieRepData,
    samples: Sequence[FockState] | None = None,
    nmax: int = 3,
    kmax: int = DEFAULT_KMAX,
    currents: CurrentSet | None = None,
) -> VerificationReport:
    """u(n)_Der phi_r(w) == phi_r(u^ o_n w) for every sample w, basis u and 0 <= n <= nmax."""
    samples = default_samples(rep, min(kmax, 3)) if samples is None else list(samples)
    cs = currents or build_currents(rep)
    gr = GrRing(rep, kmax)
    der = DerivationAction(gr)
    report = VerificationReport("compat", config={"kmax": kmax, "nmax": nmax})
    ref = "u(n)_Der phi_r(w) = phi_r(u o_n w); u(n)(beta_k) = C(k,n) beta_{k-n}, u(n)(gamma_k) = C(k,n) gamma_{k-n}"
    bad: list[str] = []
    count = 0
    for w in samples:
        r = w.degree()
        sym = symbol(w, r, gr)
        for u in range(rep.g_dim):
            for n in range(nmax + 1):
                lhs = der.apply(u, n, sym)
                rhs = symbol(nth_product(cs.hat[u], n, w), r, gr)
                count += 1
                if lhs != rhs:
                    bad.append(
                        f"w={w.format(rep.v_basis)}, u={rep.basis_names[u]}, n={n}: "
                        f"derivation gives {lhs}, Fock side gives {rhs}"
                    )
    report.add(
        check(
            "compat.symbol-intertwines",
            not bad,
            ref,
            "; ".join(bad[:3]) if bad else None,
            f"{count} (sample, u, n) triples on {len(samples)} samples",
        )
    )
    return report


# -- invariants -----------------------------------------------------------------------


def _variable_weights(gr: GrRing) -> list[Fraction] | None:
    """Cartan eigenvalue of each variable, or None when the Cartan matrix is not diagonal."""
    rep = gr.rep
    if rep.cartan is None:
        return None
    h = rep.rho[rep.g_index(rep.cartan)]
    if not mx.is_diagonal(h):
        return None
    return [h[i][i] if kind == BETA else -h[i][i] for kind, i, _ in gr.variables]


def invariant_basis_problem(gr: GrRing, d: int) -> tuple[list[tuple[int, ...]], list[dict]]:
    """Domain monomials of degree d and the sparse rows of all stacked g-derivations."""
    weights = _variable_weights(gr)
    domain = gr.ring.monomials(d)
    if weights is not None:
        # restrict to the Cartan kernel; its rows are still stacked below
        domain = [e for e in domain if sum(w * k for w, k in zip(weights, e)) == 0]
    der = DerivationAction(gr)
    rows: dict[tuple, dict[int, Fraction]] = {}
    for u in range(gr.rep.g_dim):
        images = der.images(der.basis_coords(u), 0)
        for col, exp in enumerate(domain):
            img = apply_derivation(MultiPoly(gr.ring, {exp: 1}), images)
            for oexp, c in img.terms.items():
                rows.setdefault((u, oexp), {})[col] = c
    return domain, list(rows.values())


def invariant_dimension(rep: LieRepData, space: str, d: int) -> int:
    """dim of the degree-d g-invariants, by brute-force kernel computation."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    gr = p0_ring(rep, space)
    domain, rows = invariant_basis_problem(gr, d)
    return len(domain) - mx.sparse_rank(rows)


def is_invariant(p: MultiPoly, gr: GrRing) -> bool:
    der = DerivationAction(gr)
    return all(der.apply(u, 0, p).is_zero() for u in range(gr.rep.g_dim))


def span_dimension(polys: Sequence[MultiPoly]) -> int:
    return mx.sparse_rank(dict(p.terms) for p in polys)


def _products(gens: Sequence[MultiPoly], count: int) -> list[MultiPoly]:
    """All products of ``count`` generators (multisets)."""
    out = []

    def rec(start: int, left: int, acc: MultiPoly) -> None:
        if left == 0:
            out.append(acc)
            return
        for i in range(start, len(gens)):
            rec(i, left - 1, acc * gens[i])

    rec(0, count, gens[0].ring.one())
    return out


def triple_symbols(tr: Sl2Triple, gr: GrRing) -> dict[str, MultiPoly]:
    return {label: symbol(v, 2, gr) for label, v in tr.items()}


def verify_generators_P0(rep: LieRepData, tr: Sl2Triple, dmax: int = DEFAULT_DMAX) -> VerificationReport:
    gr = p0_ring(rep, "P0-full")
    syms = triple_symbols(tr, gr)
    report = VerificationReport("generators", config={"dmax": dmax})
    der = DerivationAction(gr)
    for label, s in syms.items():
        for u in range(rep.g_dim):
            img = der.apply(u, 0, s)
            report.add(
                check(
                    f"generators.invariance.v{label}.{rep.basis_names[u]}",
                    img.is_zero(),
                    "symbols of v_e, v_f, v_h lie in the invariant ring P_0^g",
                    f"{rep.basis_names[u]}(v{label}) = {img}",
                    f"{rep.basis_names[u]}-derivation kills the symbol of v{label}",
                )
            )
    gens = [syms["e"], syms["f"], syms["h"]]
    for d in range(dmax + 1):
        inv = invariant_dimension(rep, "P0-full", d)
        span = span_dimension(_products(gens, d // 2)) if d % 2 == 0 else 0
        report.add(
            check(
                f"generators.degree-{d}",
                span == inv,
                "P_0^g is generated by v_e, v_f, v_h",
                f"span of generator monomials {span} != invariant dimension {inv}",
                f"degree {d}: generator span {span}, invariant dimension {inv}",
            )
        )
    return report


def jacobian_rank_at(polys: Sequence[MultiPoly], variables: Sequence[str], point: dict) -> int:
    rows = [[poly_eval(poly_partial(p, v), point) for v in variables] for p in polys]
    return mx.rank(rows)


def jacobian_independence(
    polys: Sequence[MultiPoly],
    variables: Sequence[str] | None = None,
    trials: int = 1,
    seed: int = DEFAULT_SEED,
    max_redraws: int = 20,
    label: str = "jacobian",
) -> VerificationReport:
    """Jacobian criterion for algebraic independence at random integer points in [-10, 10].

    A rank-deficient draw is redrawn up to ``max_redraws`` times. Full rank somewhere
    certifies independence; otherwise the result is inconclusive, never a failure.
    """
    ring = polys[0].ring
    variables = list(ring.names if variables is None else variables)
    rng = random.Random(seed)
    target = len(polys)
    best, best_point, draws = -1, None, 0
    for _ in range(trials):
        for _ in range(max_redraws + 1):
            point = {v: rng.randint(-10, 10) for v in variables}
            draws += 1
            r = jacobian_rank_at(polys, variables, point)
            if r > best:
                best, best_point = r, point
            if r == target:
                break
    status = PASS if best == target else INCONCLUSIVE
    witness = f"max rank {best} of {target} over {draws} points; best point {best_point}"
    report = VerificationReport(label, config={"seed": seed, "trials": trials})
    report.add(
        Check(
            f"{label}.rank",
            "algebraic independence of the generators via the Jacobian criterion",
            status,
            witness if status != PASS else None,
            f"rank {best} of {target} (seed {seed}, {draws} points)",
        )
    )
    report.config["max_rank"] = best
    return report


def weight_zero_quadratic(rep: LieRepData) -> MultiPoly:
    """gamma^{e'} gamma^{f'} + gamma^{h'} gamma^{h'} in Sym(V*) for the adjoint labels."""
    gr = p0_ring(rep, "SymV*")
    e, f, h = (rep.v_index(x) for x in ("e", "f", "h"))
    ge, gf, gh = gr.var(GAMMA, e), gr.var(GAMMA, f), gr.var(GAMMA, h)
    return ge * gf + gh * gh


def verify_weight_zero_generator(
    rep: LieRepData, dmax: int = DEFAULT_DMAX, quadratic: MultiPoly | None = None
) -> VerificationReport:
    gr = p0_ring(rep, "SymV*")
    c = weight_zero_quadratic(rep) if quadratic is None else quadratic
    report = VerificationReport("weight-zero", config={"dmax": dmax})
    report.add(
        check(
            "weight-zero.invariance",
            is_invariant(c, gr),
            "the weight-zero commutant is generated by :g^e' g^f': + :g^h' g^h':",
            f"{c} is not invariant",
            f"{c} is g-invariant",
        )
    )
    for d in range(dmax + 1):
        inv = invariant_dimension(rep, "SymV*", d)
        if d % 2:
            ok, detail = inv == 0, f"degree {d}: invariant dimension {inv}, expected 0"
        else:
            power = c ** (d // 2)
            ok = inv == 1 and not power.is_zero() and is_invariant(power, gr)
            detail = f"degree {d}: invariant dimension {inv}, spanned by c^{d // 2}"
        report.add(
            check(
                f"weight-zero.degree-{d}",
                ok,
                "Sym(V*)^g has Hilbert series 1/(1-t^2)",
                detail,
                detail,
            )
        )
    return report
