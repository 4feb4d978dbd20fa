"""q-refined Hilbert series of sl(2)-modules and their invariant parts."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import (
    DEFAULT_TRUNC,
    MultiPoly,
    PolyRing,
    TSeries,
    one_minus_t_pow,
    series_inv_geom,
)
from .report import VerificationReport, check

T_RING = PolyRing(["t"])


class QTSeries:
    """Laurent polynomial in q whose coefficients are power series in t truncated at ``trunc``."""

    __slots__ = ("slots", "trunc")

    def __init__(self, slots: Mapping[int, TSeries], trunc: int = DEFAULT_TRUNC):
        self.trunc = trunc
        self.slots = {
            q: s.truncate(trunc) for q, s in sorted(slots.items()) if any(s.coeffs[: trunc + 1])
        }

    def __getitem__(self, q: int) -> TSeries:
        return self.slots.get(q, TSeries.zero(self.trunc))

    def __mul__(self, other: QTSeries) -> QTSeries:
        trunc = min(self.trunc, other.trunc)
        out: dict[int, TSeries] = {}
        for qa, sa in self.slots.items():
            for qb, sb in other.slots.items():
                prod = sa.truncate(trunc) * sb.truncate(trunc)
                out[qa + qb] = out[qa + qb] + prod if qa + qb in out else prod
        return QTSeries(out, trunc)

    def __eq__(self, other) -> bool:
        return isinstance(other, QTSeries) and self.trunc == other.trunc and self.slots == other.slots

    def coefficient(self, q: int, k: int) -> Fraction:
        return self[q][k]

    def exponents(self) -> list[int]:
        return sorted(self.slots)

    def __repr__(self) -> str:
        return f"QTSeries({ {q: list(map(str, s.coeffs)) for q, s in self.slots.items()} })"


def q_hilbert(weights: Iterable[int], trunc: int = DEFAULT_TRUNC) -> QTSeries:
    """prod over weights a of sum_k q^{a k} t^k, truncated at t^trunc."""
    if trunc < 0:
        raise ValueError("truncation order must be >= 0")
    result = QTSeries({0: TSeries.one(trunc)}, trunc)
    for a in weights:
        factor: dict[int, list[int]] = {}
        for k in range(trunc + 1):
            factor.setdefault(a * k, [0] * (trunc + 1))[k] += 1
        result = result * QTSeries({q: TSeries(cs) for q, cs in factor.items()}, trunc)
    return result


def residue_extract(s: QTSeries) -> TSeries:
    """Invariant Hilbert series of an sl(2)-module: c_(0)(t) - c_(-2)(t)."""
    return s[0] - s[-2]


def invariant_series(weights: Iterable[int], trunc: int = DEFAULT_TRUNC) -> TSeries:
    return residue_extract(q_hilbert(weights, trunc))


def closed_form_series(numerator: MultiPoly, denom_degrees: Sequence[int], trunc: int = DEFAULT_TRUNC) -> TSeries:
    series = TSeries.from_poly(numerator, trunc)
    for d in denom_degrees:
        series = series * series_inv_geom(d, trunc)
    return series


def compare_closed_form(
    p: TSeries, numerator: MultiPoly, denom_degrees: Sequence[int], label: str = "hilbert"
) -> VerificationReport:
    """Coefficientwise comparison of p with numerator / prod (1 - t^d_i) up to p's truncation."""
    expected = closed_form_series(numerator, denom_degrees, p.trunc)
    mismatch = next((k for k in range(p.trunc + 1) if p[k] != expected[k]), None)
    form = format_closed_form(numerator, denom_degrees)
    report = VerificationReport(label, config={"trunc": p.trunc, "closed_form": form})
    report.add(
        check(
            f"{label}.closed-form",
            mismatch is None,
            "P(t) = F(t) / prod (1 - t^d_i)",
            None if mismatch is None
            else f"first mismatch at t^{mismatch}: series {p[mismatch]} vs closed form {expected[mismatch]}",
            f"series against {form} up to t^{p.trunc}",
        )
    )
    return report


def fit_denominator(p: TSeries, degrees: Sequence[int], max_num_degree: int) -> MultiPoly | None:
    """Numerator F with p = F / prod(1 - t^d), if F has degree <= max_num_degree up to truncation.

    A truncated check: it cannot prove rationality, only fail to refute it.
    """
    f = p
    for d in degrees:
        f = f * one_minus_t_pow(d, p.trunc)
    if any(f[k] for k in range(max_num_degree + 1, f.trunc + 1)):
        return None
    return MultiPoly(T_RING, {(k,): f[k] for k in range(min(max_num_degree, f.trunc) + 1)})


# -- closed-form syntax:  "F / (d1, d2, ...)" with F a polynomial in t ------------------

_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(t(?:\s*\^\s*(\d+))?)?\s*"
)


def parse_t_poly(text: str) -> MultiPoly:
    """Parse sums like ``1 + 2*t^2 - 3/4 t^3``."""
    src = text.strip()
    if not src:
        raise ValueError("empty polynomial")
    pos, out, first = 0, T_RING.zero(), True
    while pos < len(src):
        m = _TERM.match(src, pos)
        sign, coef, tpart, power = m.groups()
        if m.end() == pos or (coef is None and tpart is None):
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at position {pos}")
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        k = 0 if tpart is None else int(power or 1)
        out = out + MultiPoly(T_RING, {(k,): c})
        pos, first = m.end(), False
    return out


def parse_closed_form(text: str) -> tuple[MultiPoly, tuple[int, ...]]:
    if "/" not in text or "(" not in text:
        raise ValueError(f"closed form must look like 'F / (d1, d2, ...)', got {text!r}")
    head, _, tail = text.rpartition("(")
    head = head.strip()
    if not head.endswith("/"):
        raise ValueError(f"closed form must look like 'F / (d1, d2, ...)', got {text!r}")
    tail = tail.strip()
    if not tail.endswith(")"):
        raise ValueError(f"unbalanced parentheses in {text!r}")
    inner = tail[:-1].strip()
    degrees = tuple(int(x) for x in inner.split(",") if x.strip()) if inner else ()
    if any(d <= 0 for d in degrees):
        raise ValueError("denominator degrees must be positive")
    return parse_t_poly(head[:-1]), degrees


def format_closed_form(numerator: MultiPoly, degrees: Sequence[int]) -> str:
    num = str(numerator).replace("*", "")
    return f"{num}/({','.join(str(d) for d in degrees)})"


def parse_weights(text: str) -> list[int]:
    text = text.strip()
    return [int(x) for x in text.split(",") if x.strip()] if text else []
