"""The beta-gamma system as a vacuum Fock module with exact circle products.

Modes satisfy ``[beta_i(m), gamma_j(k)] = delta_ij delta_{m+k+1,0}`` and all other
brackets vanish; ``beta_i(m)`` and ``gamma_i(m)`` kill the vacuum for ``m >= 0``.
A state is a rational combination of sorted tuples of creation modes, and by the
state-field correspondence it is also a vertex operator, so ``a o_n b`` is computed
directly on states.

Conformal weight: ``beta_i(-k-1)`` contributes ``k + 1`` and ``gamma_i(-k-1)``
contributes ``k``. No state has negative weight, which bounds every recursion.
"""

from __future__ import annotations

from bisect import insort
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, NamedTuple, Sequence

BETA = 0
GAMMA = 1


class GenMode(NamedTuple):
    kind: int  # BETA or GAMMA
    index: int
    mode: int

    @property
    def weight(self) -> int:
        """Weight shift of this mode as an operator."""
        return -self.mode if self.kind == BETA else -self.mode - 1


Monomial = tuple[GenMode, ...]
VACUUM_MONO: Monomial = ()


def mono_weight(mono: Monomial) -> int:
    return sum(g.weight for g in mono)


def _insert(mono: Monomial, g: GenMode) -> Monomial:
    lst = list(mono)
    insort(lst, g)
    return tuple(lst)


class FockState:
    """Finite rational combination of canonical creation monomials.

    Treated as immutable; arithmetic returns new states.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = tuple(sorted(mono))
                if any(g.mode >= 0 for g in key):
                    raise ValueError("monomials may only contain creation modes (mode <= -1)")
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> FockState:
        st = cls.__new__(cls)
        st.terms = {k: v for k, v in terms.items() if v}
        return st

    @classmethod
    def vacuum(cls) -> FockState:
        return cls._raw({VACUUM_MONO: Fraction(1)})

    @classmethod
    def zero(cls) -> FockState:
        return cls._raw({})

    @classmethod
    def from_modes(cls, modes: Iterable[GenMode | tuple[int, int, int]], coeff=1) -> FockState:
        return cls({tuple(GenMode(*g) for g in modes): coeff})

    def __add__(self, other: FockState) -> FockState:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FockState._raw(out)

    def __neg__(self) -> FockState:
        return FockState._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: FockState) -> FockState:
        return self + (-other)

    def __mul__(self, c) -> FockState:
        c = Fraction(c)
        return FockState._raw({k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c) -> FockState:
        return self * (1 / Fraction(c))

    def __eq__(self, other) -> bool:
        if isinstance(other, FockState):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Iterable) -> Fraction:
        return self.terms.get(tuple(sorted(GenMode(*g) for g in mono)), Fraction(0))

    def weights(self) -> set[int]:
        return {mono_weight(m) for m in self.terms}

    def max_weight(self) -> int:
        return max((mono_weight(m) for m in self.terms), default=0)

    def weight(self) -> int:
        """Weight of a homogeneous nonzero state."""
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError(f"state is not weight-homogeneous (weights {sorted(ws)})")
        return ws.pop()

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def homogeneous_parts(self) -> dict[int, FockState]:
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            parts.setdefault(mono_weight(m), {})[m] = c
        return {w: FockState._raw(t) for w, t in sorted(parts.items())}

    def degree(self) -> int:
        """Filtration degree: the maximal number of modes in a monomial."""
        return max((len(m) for m in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def format(self, names: Sequence[str] | None = None) -> str:
        return format_state(self, names)

    def __str__(self) -> str:
        return format_state(self)

    def __repr__(self) -> str:
        return f"FockState({format_state(self)})"


def format_mode(g: GenMode, names: Sequence[str] | None = None) -> str:
    label = names[g.index] if names is not None else str(g.index)
    if g.kind == BETA:
        return f"beta[{label}]({g.mode})"
    return f"gamma[{label}'](" + str(g.mode) + ")"


def format_state(state: FockState, names: Sequence[str] | None = None) -> str:
    if not state.terms:
        return "0"
    parts = []
    for mono, c in state.sorted_terms():
        body = " ".join(format_mode(g, names) for g in mono)
        if not body:
            text = str(abs(c))
        elif abs(c) == 1:
            text = body
        else:
            text = f"{abs(c)} {body}"
        parts.append(("- " if c < 0 else "+ ") + text)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


# -- constructors ----------------------------------------------------------------


def vacuum() -> FockState:
    return FockState.vacuum()


def beta(i: int, k: int = 0) -> FockState:
    """State of the field d^k beta^{x_i}, i.e. k! beta_i(-k-1)|0>."""
    return FockState._raw({(GenMode(BETA, i, -k - 1),): Fraction(factorial(k))})


def gamma(i: int, k: int = 0) -> FockState:
    """State of the field d^k gamma^{x'_i}, i.e. k! gamma_i(-k-1)|0>."""
    return FockState._raw({(GenMode(GAMMA, i, -k - 1),): Fraction(factorial(k))})


def beta_vec(vec: Sequence, k: int = 0) -> FockState:
    """beta of the vector sum_i vec[i] x_i (beta is linear in its label)."""
    out = FockState.zero()
    for i, c in enumerate(vec):
        if c:
            out = out + Fraction(c) * beta(i, k)
    return out


def gamma_vec(vec: Sequence, k: int = 0) -> FockState:
    out = FockState.zero()
    for i, c in enumerate(vec):
        if c:
            out = out + Fraction(c) * gamma(i, k)
    return out


# -- mode action -----------------------------------------------------------------


def _mode_on_mono(g: GenMode, mono: Monomial) -> dict[Monomial, int]:
    """Single mode on a monomial; the coefficient is always an integer."""
    if g.mode <= -1:
        return {_insert(mono, g): 1}
    partner = GenMode(1 - g.kind, g.index, -g.mode - 1)
    count = mono.count(partner)
    if not count:
        return {}
    pos = mono.index(partner)
    rest = mono[:pos] + mono[pos + 1 :]
    sign = 1 if g.kind == BETA else -1
    return {rest: sign * count}


def mode_action(g: GenMode | tuple[int, int, int], s: FockState) -> FockState:
    """Apply a single mode operator to a state."""
    g = GenMode(*g)
    out: dict[Monomial, Fraction] = {}
    for mono, c in s.terms.items():
        for m, v in _mode_on_mono(g, mono).items():
            out[m] = out.get(m, 0) + c * v
    return FockState._raw(out)


# -- circle products ---------------------------------------------------------------


def _signed_binom(j: int, m: int) -> int:
    """(-1)^m * C(j, m) with the generalized binomial C(j, m) = j(j-1)...(j-m+1)/m!."""
    if j >= 0:
        return (-1) ** m * comb(j, m)
    return comb(m - j - 1, m)


def _accumulate(out: dict, items, scale) -> None:
    for mono, v in items:
        out[mono] = out.get(mono, 0) + scale * v


@lru_cache(maxsize=None)
def _nprod(a: Monomial, n: int, b: Monomial) -> tuple[tuple[Monomial, int], ...]:
    # integer arithmetic throughout: monomial-level products have integer coefficients
    if not a:
        return ((b, 1),) if n == -1 else ()
    wa_full = mono_weight(a)
    wb = mono_weight(b)
    if n >= wa_full + wb:
        return ()
    head, rest = a[0], a[1:]
    m = -head.mode - 1
    wr = wa_full - head.weight
    out: dict[Monomial, int] = {}

    # Y(a) = :u Y(rest): with u the field of head(-m-1)|0>, so
    # a o_n b = sum_{j<=-1} u(j) (rest o_{n-1-j} b) + sum_{j>=0} rest o_{n-1-j} (u(j) b),
    # u(j) = (-1)^m C(j, m) G(j - m).
    j = -1
    while n - 1 - j < wr + wb:
        inner = _nprod(rest, n - 1 - j, b)
        if inner:
            coef = _signed_binom(j, m)
            g = GenMode(head.kind, head.index, j - m)
            for mono, v in inner:
                key = _insert(mono, g)
                out[key] = out.get(key, 0) + coef * v
        j -= 1

    # annihilation part: G(p) with p = j - m >= 0 lowers weight by at least p
    for p in range(0, wb + 1):
        j = p + m
        acted = _mode_on_mono(GenMode(head.kind, head.index, p), b)
        if not acted:
            continue
        coef = _signed_binom(j, m)
        for mono, v in acted.items():
            _accumulate(out, _nprod(rest, n - 1 - j, mono), coef * v)

    return tuple((k, v) for k, v in out.items() if v)


def nth_product(a: FockState, n: int, b: FockState) -> FockState:
    """The circle product a o_n b, for any integer n."""
    out: dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            _accumulate(out, _nprod(ma, n, mb), ca * cb)
    return FockState._raw(out)


def wick(a: FockState, b: FockState) -> FockState:
    """Normally ordered product :ab: = a o_{-1} b."""
    return nth_product(a, -1, b)


def wick_all(states: Sequence[FockState]) -> FockState:
    """Right-nested Wick product :s1 :s2 ... sk::."""
    if not states:
        return vacuum()
    acc = states[-1]
    for s in reversed(states[:-1]):
        acc = wick(s, acc)
    return acc


def derivative(a: FockState, times: int = 1) -> FockState:
    """Translation operator: G(-m-1) -> (m+1) G(-m-2), extended as a derivation."""
    for _ in range(times):
        out: dict[Monomial, Fraction] = {}
        for mono, c in a.terms.items():
            for pos, g in enumerate(mono):
                m = -g.mode - 1
                new = _insert(mono[:pos] + mono[pos + 1 :], GenMode(g.kind, g.index, g.mode - 1))
                out[new] = out.get(new, 0) + c * (m + 1)
        a = FockState._raw(out)
    return a


def ope_singular(a: FockState, b: FockState) -> dict[int, FockState]:
    """All nonzero a o_n b with n >= 0."""
    bound = a.max_weight() + b.max_weight()
    out = {}
    for n in range(bound):
        r = nth_product(a, n, b)
        if r:
            out[n] = r
    return out


def clear_cache() -> None:
    _nprod.cache_clear()
