"""Finite-dimensional Lie algebra representations with exact rational data.

A representation document is a JSON object::

    {
      "name": "my-rep",                      # optional
      "g_dim": 3,
      "basis": ["e", "f", "h"],
      "structure": [[0, 1, 2, "1"], ...],    # (i, j, k, c): [u_i, u_j] has c on u_k
      "v_dim": 3,
      "v_basis": ["e", "f", "h"],            # optional, default x1..xn
      "rho": [[["0", "0", "-2"], ...], ...], # d matrices, row-major, "p/q" strings
      "bform": [[...], ...],                 # optional symmetric invariant form on V
      "cartan": "h"                          # optional, default "h" when present
    }

Only the pairs (i, j) that are listed are set; the antisymmetric partner must
either be listed consistently or omitted (it is then filled in).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from . import matrices as mx
from .matrices import Matrix, as_fraction


class RepError(ValueError):
    """Invalid representation data. ``identity`` names the failing check."""

    def __init__(self, message: str, identity: str = "parse", witness: tuple | None = None):
        super().__init__(message)
        self.identity = identity
        self.witness = witness


@dataclass(frozen=True)
class BilinearForm:
    matrix: Matrix
    label: str

    def __call__(self, i: int, j: int) -> Fraction:
        return self.matrix[i][j]

    def is_symmetric(self) -> bool:
        return mx.is_symmetric(self.matrix)


@dataclass(frozen=True)
class LieRepData:
    g_dim: int
    basis_names: tuple[str, ...]
    structure: tuple[tuple[tuple[Fraction, ...], ...], ...]  # structure[i][j][k]
    v_dim: int
    rho: tuple[Matrix, ...]
    bform: Matrix | None = None
    v_basis: tuple[str, ...] = ()
    cartan: str | None = None
    name: str = "custom"

    def g_index(self, label: str) -> int:
        try:
            return self.basis_names.index(label)
        except ValueError:
            raise KeyError(f"unknown Lie algebra basis label {label!r}") from None

    def v_index(self, label: str) -> int:
        label = label.strip()
        if label.endswith("'"):
            label = label[:-1]
        try:
            return self.v_basis.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r} of V") from None

    def bracket(self, i: int, j: int) -> tuple[Fraction, ...]:
        """Coordinates of [u_i, u_j] in the basis of g."""
        return self.structure[i][j]

    def ad(self, i: int) -> Matrix:
        """Matrix of ad u_i; column j holds [u_i, u_j]."""
        d = self.g_dim
        return tuple(tuple(self.structure[i][j][k] for j in range(d)) for k in range(d))


def _validate(rep: LieRepData) -> None:
    d, n = rep.g_dim, rep.v_dim
    c = rep.structure
    for i in range(d):
        for j in range(d):
            for k in range(d):
                if c[i][j][k] != -c[j][i][k]:
                    raise RepError(
                        f"antisymmetry fails: c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]",
                        "antisymmetry",
                        (i, j, k),
                    )
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                for m in range(d):
                    total = sum(
                        c[i][j][l] * c[l][k][m] + c[j][k][l] * c[l][i][m] + c[k][i][l] * c[l][j][m]
                        for l in range(d)
                    )
                    if total != 0:
                        raise RepError(
                            f"Jacobi identity fails for basis triple (i,j,k)=({i},{j},{k}) "
                            f"in component {m}",
                            "jacobi",
                            (i, j, k),
                        )
    for i in range(d):
        for j in range(d):
            lhs = mx.commutator(rep.rho[i], rep.rho[j])
            rhs = mx.zeros(n)
            for k in range(d):
                if c[i][j][k]:
                    rhs = mx.add(rhs, mx.scale(c[i][j][k], rep.rho[k]))
            if lhs != rhs:
                raise RepError(
                    f"rho is not a homomorphism on the pair ({i},{j})", "homomorphism", (i, j)
                )
    if rep.bform is not None:
        b = rep.bform
        if mx.shape(b) != (n, n):
            raise RepError("bform has the wrong shape", "parse")
        if not mx.is_symmetric(b):
            raise RepError("bform is not symmetric", "bform-symmetry")
        for i in range(d):
            # B'(rho x, y) + B'(x, rho y) = 0  <=>  rho^T B' + B' rho = 0
            r = rep.rho[i]
            if not mx.is_zero(mx.add(mx.matmul(mx.transpose(r), b), mx.matmul(b, r))):
                raise RepError(f"bform is not invariant under u_{i}", "bform-invariance", (i,))


def _structure_from_quads(d: int, quads: Sequence[Sequence]) -> tuple:
    c = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    given: set[tuple[int, int, int]] = set()
    for q in quads:
        if len(q) != 4:
            raise RepError(f"structure entry must be (i, j, k, c), got {q!r}")
        i, j, k = (int(x) for x in q[:3])
        if not all(0 <= x < d for x in (i, j, k)):
            raise RepError(f"structure index out of range in {q!r}")
        c[i][j][k] = as_fraction(q[3])
        given.add((i, j, k))
    for i, j, k in list(given):
        if (j, i, k) not in given:
            c[j][i][k] = -c[i][j][k]
    return tuple(tuple(tuple(row) for row in plane) for plane in c)


def load_rep(source: Mapping | str) -> LieRepData:
    """Build and validate a representation from a document (mapping or JSON text)."""
    if isinstance(source, str):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise RepError(f"representation document is not valid JSON: {exc}") from exc
    else:
        doc = source
    try:
        d = int(doc["g_dim"])
        n = int(doc["v_dim"])
        basis = tuple(str(b) for b in doc.get("basis", [f"u{i + 1}" for i in range(d)]))
        v_basis = tuple(str(b) for b in doc.get("v_basis", [f"x{i + 1}" for i in range(n)]))
        structure = _structure_from_quads(d, doc.get("structure", []))
        rho = tuple(mx.to_matrix(m) for m in doc["rho"])
        bform = mx.to_matrix(doc["bform"]) if doc.get("bform") is not None else None
    except RepError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise RepError(f"malformed representation document: {exc!r}") from exc
    if len(basis) != d or len(v_basis) != n:
        raise RepError("basis label count does not match the declared dimension")
    if len(rho) != d or any(mx.shape(m) != (n, n) for m in rho):
        raise RepError("rho must hold g_dim matrices of size v_dim x v_dim")
    cartan = doc.get("cartan", "h" if "h" in basis else None)
    rep = LieRepData(
        g_dim=d,
        basis_names=basis,
        structure=structure,
        v_dim=n,
        rho=rho,
        bform=bform,
        v_basis=v_basis,
        cartan=cartan,
        name=str(doc.get("name", "custom")),
    )
    _validate(rep)
    return rep


def load_rep_file(path: str | Path) -> LieRepData:
    return load_rep(Path(path).read_text(encoding="utf-8"))


def to_document(rep: LieRepData) -> dict:
    """Inverse of :func:`load_rep`."""
    d = rep.g_dim
    quads = [
        [i, j, k, str(rep.structure[i][j][k])]
        for i in range(d)
        for j in range(d)
        for k in range(d)
        if rep.structure[i][j][k]
    ]
    doc = {
        "name": rep.name,
        "g_dim": d,
        "basis": list(rep.basis_names),
        "structure": quads,
        "v_dim": rep.v_dim,
        "v_basis": list(rep.v_basis),
        "rho": [[[str(x) for x in row] for row in m] for m in rep.rho],
    }
    if rep.bform is not None:
        doc["bform"] = [[str(x) for x in row] for row in rep.bform]
    if rep.cartan is not None:
        doc["cartan"] = rep.cartan
    return doc


_SL2_STRUCTURE = [(0, 1, 2, 1), (2, 0, 0, 2), (2, 1, 1, -2)]  # [e,f]=h, [h,e]=2e, [h,f]=-2f


def _sl2_adjoint() -> LieRepData:
    base = {
        "g_dim": 3,
        "basis": ["e", "f", "h"],
        "structure": _SL2_STRUCTURE,
        "v_dim": 3,
        "v_basis": ["e", "f", "h"],
        "rho": [[[0] * 3] * 3] * 3,
    }
    skeleton = load_rep(base)
    ad = tuple(skeleton.ad(i) for i in range(3))
    base["rho"] = [[[str(x) for x in row] for row in m] for m in ad]
    base["bform"] = [[str(x) for x in row] for row in killing_form(skeleton).matrix]
    base["name"] = "sl2-adjoint"
    return load_rep(base)


def _sl2_standard() -> LieRepData:
    return load_rep(
        {
            "name": "sl2-standard",
            "g_dim": 3,
            "basis": ["e", "f", "h"],
            "structure": _SL2_STRUCTURE,
            "v_dim": 2,
            "v_basis": ["x", "y"],
            "rho": [[[0, 1], [0, 0]], [[0, 0], [1, 0]], [[1, 0], [0, -1]]],
        }
    )


BUILTINS = {"sl2-adjoint": _sl2_adjoint, "sl2-standard": _sl2_standard}


def builtin_rep(name: str) -> LieRepData:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise RepError(f"unknown built-in representation {name!r}; known: {sorted(BUILTINS)}") from None


def killing_form(rep: LieRepData) -> BilinearForm:
    ads = [rep.ad(i) for i in range(rep.g_dim)]
    return BilinearForm(
        tuple(tuple(mx.trace(mx.matmul(a, b)) for b in ads) for a in ads), "K"
    )


def trace_form(rep: LieRepData) -> BilinearForm:
    """B(u, v) = -Tr(rho(u) rho(v))."""
    return BilinearForm(
        tuple(tuple(-mx.trace(mx.matmul(a, b)) for b in rep.rho) for a in rep.rho), "B"
    )


def invariant_form(rep: LieRepData) -> BilinearForm:
    """The stored form B' on V."""
    if rep.bform is None:
        raise RepError(f"representation {rep.name!r} carries no invariant form on V", "bform")
    return BilinearForm(rep.bform, "B'")


def dual_action(rep: LieRepData, u: int) -> Matrix:
    """Matrix of u on V* in the dual basis: -rho(u)^T."""
    return mx.scale(-1, mx.transpose(rep.rho[u]))


def dual_rep(rep: LieRepData) -> LieRepData:
    bform = mx.inverse(rep.bform) if rep.bform is not None else None
    return LieRepData(
        g_dim=rep.g_dim,
        basis_names=rep.basis_names,
        structure=rep.structure,
        v_dim=rep.v_dim,
        rho=tuple(dual_action(rep, i) for i in range(rep.g_dim)),
        bform=bform,
        v_basis=tuple(f"{x}'" for x in rep.v_basis),
        cartan=rep.cartan,
        name=f"{rep.name}*",
    )


def direct_sum(a: LieRepData, b: LieRepData) -> LieRepData:
    if a.structure != b.structure:
        raise RepError("direct sum needs the same Lie algebra on both summands")
    n, m = a.v_dim, b.v_dim

    def block(x: Matrix | None, y: Matrix | None) -> Matrix | None:
        if x is None or y is None:
            return None
        rows = [list(r) + [Fraction(0)] * m for r in x] + [[Fraction(0)] * n + list(r) for r in y]
        return tuple(tuple(r) for r in rows)

    return LieRepData(
        g_dim=a.g_dim,
        basis_names=a.basis_names,
        structure=a.structure,
        v_dim=n + m,
        rho=tuple(block(x, y) for x, y in zip(a.rho, b.rho)),
        bform=block(a.bform, b.bform),
        v_basis=tuple(f"{s}@1" for s in a.v_basis) + tuple(f"{s}@2" for s in b.v_basis),
        cartan=a.cartan,
        name=f"{a.name}+{b.name}",
    )


def weight_multiset(rep: LieRepData) -> list[int]:
    """Eigenvalues of the Cartan element on V, descending, with multiplicity."""
    if rep.cartan is None:
        raise RepError("representation has no designated Cartan element", "weights")
    h = rep.rho[rep.g_index(rep.cartan)]
    roots = mx.integer_roots(mx.charpoly(h))
    if len(roots) != rep.v_dim:
        raise RepError("Cartan element has non-integer eigenvalues", "weights")
    n = rep.v_dim
    for lam in set(roots):
        shifted = mx.sub(h, mx.scale(lam, mx.identity(n)))
        if mx.nullity(shifted) != roots.count(lam):
            raise RepError("Cartan element is not diagonalizable", "weights")
    return roots
