"""Small exact linear algebra over the rationals.

Matrices are tuples of row tuples of :class:`~fractions.Fraction`. Everything here
is written for the tiny sizes that occur in representation data (a handful of
rows) except :func:`sparse_rank`, which handles the larger but very sparse
derivation matrices of the invariant-theory oracles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


def as_fraction(x) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError(f"floats are not accepted as exact rationals: {x!r}")
    raise TypeError(f"not a rational: {x!r}")


def to_matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(as_fraction(x) for x in row) for row in rows)


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple(tuple(Fraction(0) for _ in range(m)) for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b)) if b else []
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols) for row in a)


def matvec(a: Matrix, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(c, a: Matrix) -> Matrix:
    c = as_fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def is_symmetric(a: Matrix) -> bool:
    return a == transpose(a)


def is_diagonal(a: Matrix) -> bool:
    return all(x == 0 for i, row in enumerate(a) for j, x in enumerate(row) if i != j)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return sub(matmul(a, b), matmul(b, a))


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises ``ZeroDivisionError`` for singular input."""
    n = len(a)
    work = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def sparse_rank(rows: Iterable[Mapping[object, Fraction]]) -> int:
    """Rank of a matrix given as sparse rows ``{column_key: value}``.

    Column keys only need to be mutually comparable. Rows are reduced one at a
    time against a growing echelon basis keyed by leading column.
    """
    pivots: dict[object, dict[object, Fraction]] = {}
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v != 0}
        while r:
            lead = min(r)
            basis = pivots.get(lead)
            if basis is None:
                inv = 1 / r[lead]
                pivots[lead] = {k: v * inv for k, v in r.items()}
                break
            f = r[lead]
            for k, v in basis.items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)


def rank(a: Sequence[Sequence]) -> int:
    return sparse_rank({j: as_fraction(x) for j, x in enumerate(row)} for row in a)


def nullity(a: Matrix) -> int:
    return (len(a[0]) if a else 0) - rank(a)


def charpoly(a: Matrix) -> list[Fraction]:
    """Characteristic polynomial det(xI - a), coefficients from x^n down to x^0.

    Faddeev-LeVerrier recursion; exact over Q.
    """
    n = len(a)
    coeffs = [Fraction(1)]
    m = zeros(n)
    for k in range(1, n + 1):
        m = add(matmul(a, m), scale(coeffs[-1], identity(n)))
        coeffs.append(-trace(matmul(a, m)) / k)
    return coeffs


def integer_roots(coeffs: Sequence[Fraction]) -> list[int]:
    """Integer roots of a monic polynomial, repeated by multiplicity."""
    poly = [Fraction(c) for c in coeffs]
    roots: list[int] = []
    while len(poly) > 1 and poly[-1] == 0:
        roots.append(0)
        poly.pop()
    if len(poly) == 1:
        return sorted(roots, reverse=True)
    bound = 1 + int(max(abs(c) for c in poly[1:]))
    for r in range(-bound, bound + 1):
        if r == 0:
            continue
        while len(poly) > 1:
            quot, acc = [], Fraction(0)
            for c in poly:
                acc = acc * r + c
                quot.append(acc)
            if acc != 0:
                break
            poly = quot[:-1]
            roots.append(r)
    return sorted(roots, reverse=True)
