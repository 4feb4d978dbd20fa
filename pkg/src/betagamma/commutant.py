"""Commutant membership and the operator identities behind the Howe pair."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chiral import SL2_BRACKET, SL2_KILLING, CurrentSet, Sl2Triple
from .fock import FockState, nth_product
from .report import VerificationReport, check

CURRENT_OPE_REF = "u(z)v(w) ~ B(u,v)(z-w)^-2 + [u,v](w)(z-w)^-1"
LEVEL_REF = "psi-hat: O(sl2, -(n/8)K) -> S(V)^Theta+"
COMMUTANT_REF = "Com(U,W) = {v : u o_n v = 0 for all u in U, n >= 0}"


@dataclass
class MembershipResult:
    member: bool
    witnesses: list[tuple[str, int, FockState]] = field(default_factory=list)


def _labelled(gens) -> list[tuple[str, FockState]]:
    if isinstance(gens, dict):
        return list(gens.items())
    return [(f"g{i}", g) for i, g in enumerate(gens)]


def is_in_commutant(v: FockState, gens: Sequence[FockState] | dict[str, FockState]) -> MembershipResult:
    """Is u o_n v = 0 for every generator u and every n >= 0?

    Only 0 <= n < wt(u) + wt(v) can be nonzero. Each failing generator contributes
    one witness at its smallest failing n.
    """
    witnesses = []
    for label, u in sorted(_labelled(gens), key=lambda p: p[0]):
        for n in range(u.max_weight() + v.max_weight()):
            r = nth_product(u, n, v)
            if r:
                witnesses.append((label, n, r))
                break
    return MembershipResult(not witnesses, witnesses)


def _diff(got: FockState, want: FockState, names) -> str:
    return f"got {got.format(names)}, expected {want.format(names)}"


def verify_current_ope(cs: CurrentSet, nmax: int = 3) -> VerificationReport:
    rep = cs.rep
    names = rep.v_basis
    report = VerificationReport("current-ope")
    vac = FockState.vacuum()
    for i, a in enumerate(rep.basis_names):
        for j, b in enumerate(rep.basis_names):
            ua, ub = cs.hat[i], cs.hat[j]
            got0 = nth_product(ua, 0, ub)
            want0 = cs.combination(rep.bracket(i, j))
            report.add(
                check(f"current-ope.{a}.{b}.n0", got0 == want0, CURRENT_OPE_REF, _diff(got0, want0, names),
                      f"{a}^ o_0 {b}^ = [{a},{b}]^")
            )
            got1 = nth_product(ua, 1, ub)
            want1 = cs.level_form(i, j) * vac
            report.add(
                check(f"current-ope.{a}.{b}.n1", got1 == want1, CURRENT_OPE_REF, _diff(got1, want1, names),
                      f"{a}^ o_1 {b}^ = B({a},{b}) = {cs.level_form(i, j)}")
            )
            for n in range(2, nmax + 1):
                got = nth_product(ua, n, ub)
                report.add(
                    check(f"current-ope.{a}.{b}.n{n}", not got, CURRENT_OPE_REF, f"got {got.format(names)}",
                          f"{a}^ o_{n} {b}^ = 0")
                )
    return report


def verify_level(tr: Sl2Triple, names=None) -> VerificationReport:
    report = VerificationReport("level")
    vac = FockState.vacuum()
    for x, vx in tr.items():
        for y, vy in tr.items():
            got0 = nth_product(vx, 0, vy)
            want0 = FockState.zero()
            for z, c in SL2_BRACKET.get((x, y), {}).items():
                want0 = want0 + c * tr[z]
            report.add(
                check(f"level.{x}.{y}.n0", got0 == want0, LEVEL_REF, _diff(got0, want0, names),
                      f"v{x} o_0 v{y} = v[{x},{y}]")
            )
            k = Fraction(SL2_KILLING.get((x, y), 0))
            got1 = nth_product(vx, 1, vy)
            want1 = tr.expected_level * k * vac
            report.add(
                check(f"level.{x}.{y}.n1", got1 == want1, LEVEL_REF, _diff(got1, want1, names),
                      f"v{x} o_1 v{y} = {tr.expected_level}*K({x},{y}) = {tr.expected_level * k}")
            )
    return report


def _pair_checks(report, prefix, lefts, rights, nmax, names, ref, description) -> None:
    for a, ua in lefts:
        for b, vb in rights:
            bad = None
            top = max(nmax, ua.max_weight() + vb.max_weight() - 1)
            for n in range(top + 1):
                r = nth_product(ua, n, vb)
                if r:
                    bad = f"n={n}: {r.format(names)}"
                    break
            report.add(check(f"{prefix}.{a}.{b}", bad is None, ref, bad, description.format(a=a, b=b, top=top)))


def verify_howe_inclusion(cs: CurrentSet, tr: Sl2Triple, nmax: int = 3) -> VerificationReport:
    """(a) each v_x commutes with every current; (b) each current commutes with every v_x."""
    names = cs.rep.v_basis
    currents = [(f"{a}^", cs.hat[i]) for i, a in enumerate(cs.rep.basis_names)]
    triple = [(f"v{x}", v) for x, v in tr.items()]
    report = VerificationReport("howe")
    _pair_checks(report, "howe.a", currents, triple, nmax, names,
                 "S(V)^Theta+ contains A = <v_e, v_f, v_h>", "{a} o_n {b} = 0 for 0 <= n <= {top}")
    _pair_checks(report, "howe.b", triple, currents, nmax, names,
                 "Theta is contained in S(V)^A+", "{a} o_n {b} = 0 for 0 <= n <= {top}")
    report.config["cited"] = (
        "A = Com(S(V)^A+, S(V)) follows from S(V)^Theta+ = A; the generation half of that "
        "equality is checked degreewise by the generators suite, the rest is not computed"
    )
    return report


def verify_commutant_membership(v: FockState, cs: CurrentSet, label: str = "v") -> VerificationReport:
    names = cs.rep.v_basis
    gens = {f"{a}^": cs.hat[i] for i, a in enumerate(cs.rep.basis_names)}
    res = is_in_commutant(v, gens)
    report = VerificationReport("commutant")
    witness = "; ".join(f"{g} o_{n} {label} = {s.format(names)}" for g, n, s in res.witnesses)
    report.add(
        check(f"commutant.{label}", res.member, COMMUTANT_REF, witness or None,
              f"{label} is annihilated by all nonnegative products with the currents")
    )
    return report
