"""Exact multivariate polynomials and truncated power series over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .matrices import as_fraction

DEFAULT_TRUNC = 20

Exponent = tuple[int, ...]


class PolyRing:
    """A polynomial ring Q[x_1, ..., x_n] with a fixed, named variable set.

    Exponent vectors are dense tuples of length n.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Sequence[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        self._index = {name: i for i, name in enumerate(self.names)}

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of this ring") from None

    def gen(self, name_or_index) -> MultiPoly:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        exp = tuple(int(j == i) for j in range(self.ngens))
        return MultiPoly(self, {exp: Fraction(1)})

    def gens(self) -> tuple[MultiPoly, ...]:
        return tuple(self.gen(i) for i in range(self.ngens))

    def zero(self) -> MultiPoly:
        return MultiPoly(self, {})

    def one(self) -> MultiPoly:
        return self.const(1)

    def const(self, c) -> MultiPoly:
        return MultiPoly(self, {(0,) * self.ngens: as_fraction(c)})

    def monomials(self, degree: int, variables: Sequence[int] | None = None) -> list[Exponent]:
        """All exponent vectors of total degree ``degree`` supported on ``variables``."""
        idx = list(range(self.ngens)) if variables is None else list(variables)
        out: list[Exponent] = []

        def rec(pos: int, left: int, acc: list[int]) -> None:
            if pos == len(idx) - 1:
                acc[idx[pos]] = left
                out.append(tuple(acc))
                acc[idx[pos]] = 0
                return
            for e in range(left, -1, -1):
                acc[idx[pos]] = e
                rec(pos + 1, left - e, acc)
            acc[idx[pos]] = 0

        if not idx:
            return [(0,) * self.ngens] if degree == 0 else []
        rec(0, degree, [0] * self.ngens)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"PolyRing({', '.join(self.names)})"


class MultiPoly:
    """Immutable polynomial: a mapping exponent vector -> nonzero Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponent, object] | None = None):
        self.ring = ring
        clean: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != ring.ngens:
                raise ValueError("exponent vector does not match ring")
            c = as_fraction(c)
            if c:
                clean[tuple(exp)] = c
        self.terms = clean

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MultiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            c = as_fraction(other)
            return MultiPoly(self.ring, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def variables(self) -> set[str]:
        return {self.ring.names[i] for e in self.terms for i, k in enumerate(e) if k}

    def __call__(self, point: Mapping[str, object]) -> Fraction:
        return poly_eval(self, point)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(self.ring.names, exp) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def poly_eval(p: MultiPoly, point: Mapping[str, object]) -> Fraction:
    """Evaluate ``p`` exactly; ``point`` must assign every variable that occurs in ``p``."""
    values = []
    for i, name in enumerate(p.ring.names):
        if name in point:
            values.append(as_fraction(point[name]))
        elif any(e[i] for e in p.terms):
            raise KeyError(f"no value assigned to variable {name!r}")
        else:
            values.append(Fraction(0))
    total = Fraction(0)
    for exp, c in p.terms.items():
        term = c
        for v, k in zip(values, exp):
            if k:
                term *= v**k
        total += term
    return total


def poly_partial(p: MultiPoly, var) -> MultiPoly:
    """Formal partial derivative with respect to a variable (name or index)."""
    i = var if isinstance(var, int) else p.ring.index(var)
    out: dict[Exponent, Fraction] = {}
    for exp, c in p.terms.items():
        k = exp[i]
        if k:
            e = exp[:i] + (k - 1,) + exp[i + 1 :]
            out[e] = out.get(e, 0) + c * k
    return MultiPoly(p.ring, out)


class TSeries:
    """Power series in t truncated at order ``trunc`` (coefficients of t^0..t^trunc)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[object], trunc: int | None = None):
        cs = [as_fraction(c) for c in coeffs]
        if trunc is not None:
            if trunc < 0:
                raise ValueError("truncation order must be >= 0")
            cs = (cs + [Fraction(0)] * (trunc + 1))[: trunc + 1]
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = tuple(cs)

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, trunc: int = DEFAULT_TRUNC) -> TSeries:
        return cls([1], trunc)

    @classmethod
    def zero(cls, trunc: int = DEFAULT_TRUNC) -> TSeries:
        return cls([0], trunc)

    @classmethod
    def from_poly(cls, p: MultiPoly | Sequence[object], trunc: int = DEFAULT_TRUNC) -> TSeries:
        """From a univariate MultiPoly or a plain coefficient list (low to high)."""
        if isinstance(p, MultiPoly):
            if p.ring.ngens != 1:
                raise ValueError("need a univariate polynomial")
            cs = [Fraction(0)] * (trunc + 1)
            for (k,), c in p.terms.items():
                if k <= trunc:
                    cs[k] += c
            return cls(cs, trunc)
        return cls(p, trunc)

    def _common(self, other: TSeries) -> int:
        return min(self.trunc, other.trunc)

    def __add__(self, other) -> TSeries:
        if not isinstance(other, TSeries):
            other = TSeries([other], self.trunc)
        t = self._common(other)
        return TSeries([a + b for a, b in zip(self.coeffs[: t + 1], other.coeffs[: t + 1])], t)

    __radd__ = __add__

    def __neg__(self) -> TSeries:
        return TSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> TSeries:
        if not isinstance(other, TSeries):
            other = TSeries([other], self.trunc)
        return self + (-other)

    def __mul__(self, other) -> TSeries:
        if not isinstance(other, TSeries):
            c = as_fraction(other)
            return TSeries([c * x for x in self.coeffs])
        t = self._common(other)
        a, b = self.coeffs, other.coeffs
        return TSeries(
            [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(t + 1)], t
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, trunc: int) -> TSeries:
        return TSeries(self.coeffs, trunc)

    def __repr__(self) -> str:
        return f"TSeries({', '.join(str(c) for c in self.coeffs)})"


def series_inv_geom(d: int, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """Expansion of 1/(1 - t^d) to order ``trunc``."""
    if d <= 0:
        raise ValueError(f"exponent must be positive, got {d}")
    if trunc < 0:
        raise ValueError("truncation order must be >= 0")
    return TSeries([int(k % d == 0) for k in range(trunc + 1)])


def one_minus_t_pow(d: int, trunc: int = DEFAULT_TRUNC) -> TSeries:
    """The polynomial 1 - t^d as a truncated series."""
    if d <= 0:
        raise ValueError(f"exponent must be positive, got {d}")
    cs = [Fraction(0)] * (trunc + 1)
    cs[0] += 1
    if d <= trunc:
        cs[d] -= 1
    return TSeries(cs)
