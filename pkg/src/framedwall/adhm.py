"""Exact linear algebra on ADHM data and blow-up quiver representations.

Matrices are sympy ``DomainMatrix`` objects over ``QQ``; ranks are exact.

Blow-up quiver (vertices 0, 1, infinity): ``d: V0 -> V1``, ``B1, B2: V1 -> V0``,
``i: Vinf -> V0``, ``j: V1 -> Vinf`` with the relation
``B1 d B2 - B2 d B1 + i j = 0``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .lattice import DimensionVector, class_cm, to_dim_vector


class RepresentationFormatError(ValueError):
    pass


def qq(x: Any):
    """Coerce an int, Fraction or ``"p/q"`` string to an element of ``QQ``."""
    if isinstance(x, str):
        f = Fraction(x.strip())
    elif isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    else:
        f = Fraction(x)
    return QQ(f.numerator, f.denominator)


def qmatrix(rows: Sequence[Sequence[Any]], shape: tuple[int, int] | None = None) -> DomainMatrix:
    rows = [list(r) for r in rows]
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    nrows, ncols = shape
    if len(rows) != nrows and not (nrows == 0 and rows == []):
        raise ValueError(f"expected {nrows} rows, got {len(rows)}")
    if nrows == 0 or ncols == 0:
        if any(len(r) != ncols for r in rows):
            raise ValueError(f"rows must have length {ncols}")
        return DomainMatrix.zeros(shape, QQ)
    if any(len(r) != ncols for r in rows):
        raise ValueError(f"rows must have length {ncols}")
    return DomainMatrix([[qq(x) for x in r] for r in rows], shape, QQ)


def zeros(nrows: int, ncols: int) -> DomainMatrix:
    return DomainMatrix.zeros((nrows, ncols), QQ)


def eye(n: int) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ)


def is_zero(M: DomainMatrix) -> bool:
    return M.is_zero_matrix


def rank(M: DomainMatrix) -> int:
    if 0 in M.shape:
        return 0
    return M.rank()


def to_fractions(M: DomainMatrix) -> list[list[Fraction]]:
    if M.shape[1] == 0:
        return [[] for _ in range(M.shape[0])]
    return [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in M.to_list()]


def _block_diag(A: DomainMatrix, B: DomainMatrix) -> DomainMatrix:
    (a0, a1), (b0, b1) = A.shape, B.shape
    top = [to_fractions(A)[r] + [0] * b1 for r in range(a0)]
    bottom = [[0] * a1 + to_fractions(B)[r] for r in range(b0)]
    return qmatrix(top + bottom, (a0 + b0, a1 + b1))


@dataclass(frozen=True)
class ADHMDataP2:
    """``(B1, B2, i, j)`` with ``B_a in End(V)``, ``i: W -> V``, ``j: V -> W``."""

    B1: DomainMatrix
    B2: DomainMatrix
    i_map: DomainMatrix
    j_map: DomainMatrix

    def __post_init__(self) -> None:
        n = self.B1.shape[0]
        r = self.i_map.shape[1]
        expected = {"B1": (n, n), "B2": (n, n), "i": (n, r), "j": (r, n)}
        actual = {"B1": self.B1.shape, "B2": self.B2.shape, "i": self.i_map.shape, "j": self.j_map.shape}
        if expected != actual:
            raise ValueError(f"inconsistent ADHM shapes: {actual}")

    @property
    def n(self) -> int:
        return self.B1.shape[0]

    @property
    def r(self) -> int:
        return self.i_map.shape[1]

    def residual(self) -> DomainMatrix:
        return self.B1 * self.B2 - self.B2 * self.B1 + self.i_map * self.j_map


@dataclass(frozen=True)
class BlowupQuiverRep:
    B1: DomainMatrix
    B2: DomainMatrix
    d: DomainMatrix
    i_map: DomainMatrix
    j_map: DomainMatrix

    def __post_init__(self) -> None:
        d0, d1 = self.B1.shape
        dinf = self.i_map.shape[1]
        expected = {
            "B1": (d0, d1),
            "B2": (d0, d1),
            "d": (d1, d0),
            "i": (d0, dinf),
            "j": (dinf, d1),
        }
        if self.shapes() != expected:
            raise ValueError(f"inconsistent quiver shapes: {self.shapes()}")

    def shapes(self) -> dict[str, tuple[int, int]]:
        return {
            "B1": self.B1.shape,
            "B2": self.B2.shape,
            "d": self.d.shape,
            "i": self.i_map.shape,
            "j": self.j_map.shape,
        }

    @property
    def dims(self) -> DimensionVector:
        d0, d1 = self.B1.shape
        return DimensionVector(d0, d1, self.i_map.shape[1])

    @classmethod
    def zero(cls, d0: int, d1: int, dinf: int) -> "BlowupQuiverRep":
        return cls(
            zeros(d0, d1), zeros(d0, d1), zeros(d1, d0), zeros(d0, dinf), zeros(dinf, d1)
        )

    @classmethod
    def from_lists(cls, dims: tuple[int, int, int], B1, B2, d, i, j) -> "BlowupQuiverRep":
        d0, d1, dinf = dims
        return cls(
            qmatrix(B1, (d0, d1)),
            qmatrix(B2, (d0, d1)),
            qmatrix(d, (d1, d0)),
            qmatrix(i, (d0, dinf)),
            qmatrix(j, (dinf, d1)),
        )

    def residual(self) -> DomainMatrix:
        B1, B2, d = self.B1, self.B2, self.d
        return B1 * d * B2 - B2 * d * B1 + self.i_map * self.j_map

    def direct_sum(self, other: "BlowupQuiverRep") -> "BlowupQuiverRep":
        return BlowupQuiverRep(
            _block_diag(self.B1, other.B1),
            _block_diag(self.B2, other.B2),
            _block_diag(self.d, other.d),
            _block_diag(self.i_map, other.i_map),
            _block_diag(self.j_map, other.j_map),
        )


def check_relation_p2(a: ADHMDataP2) -> bool:
    return is_zero(a.residual())


def check_relation_blowup(rep: BlowupQuiverRep) -> bool:
    return is_zero(rep.residual())


def krylov_closure(generators: DomainMatrix, operators: Iterable[DomainMatrix]) -> DomainMatrix:
    """Column basis of the smallest subspace containing ``generators`` and stable under ``operators``."""
    operators = list(operators)
    n = generators.shape[0]
    basis = _column_basis(generators)
    while True:
        if basis.shape[1] == 0:
            return basis
        grown = basis.hstack(*[op * basis for op in operators]) if operators else basis
        new_basis = _column_basis(grown)
        if new_basis.shape[1] == basis.shape[1]:
            return basis
        assert new_basis.shape[1] > basis.shape[1] <= n
        basis = new_basis


def _column_basis(M: DomainMatrix) -> DomainMatrix:
    if 0 in M.shape:
        return zeros(M.shape[0], 0)
    return M.columnspace()


def is_stable_p2(a: ADHMDataP2) -> bool:
    """No proper ``B1, B2``-invariant subspace of ``V`` contains ``Im(i)``."""
    closure = krylov_closure(a.i_map, [a.B1, a.B2])
    return closure.shape[1] == a.n


def collapse_to_p2(rep: BlowupQuiverRep) -> ADHMDataP2:
    """``(B1, B2, d, i, j) -> (d B1, d B2, d i, j)`` on ``V = V1``."""
    dims = rep.dims
    if dims.d0 != dims.d1:
        raise ValueError(f"collapse needs d0 == d1, got dims {dims.as_tuple()}")
    return ADHMDataP2(rep.d * rep.B1, rep.d * rep.B2, rep.d * rep.i_map, rep.j_map)


def ocm_rep(m: int) -> BlowupQuiverRep:
    """Representation of ``O_C(-m-1)``: dims ``(m, m+1, 0)``, ``B1 = (1_m | 0)``, ``B2 = (0 | 1_m)``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    B1 = [[1 if c == r else 0 for c in range(m + 1)] for r in range(m)]
    B2 = [[1 if c == r + 1 else 0 for c in range(m + 1)] for r in range(m)]
    rep = BlowupQuiverRep.from_lists(
        (m, m + 1, 0), B1, B2, [[0] * m for _ in range(m + 1)], [[] for _ in range(m)], []
    )
    assert rep.dims == to_dim_vector(class_cm(m))
    return rep


def _intertwiner_system(src: BlowupQuiverRep, dst: BlowupQuiverRep, framed: bool) -> tuple[DomainMatrix, int]:
    """Coefficient matrix of ``phi o a_src = a_dst o phi`` over all five arrows."""
    s, t = src.dims, dst.dims
    blocks = {"0": (t.d0, s.d0), "1": (t.d1, s.d1)}
    if not framed:
        blocks["inf"] = (t.dinf, s.dinf)
    offsets = {}
    total = 0
    for name, (p, q) in blocks.items():
        offsets[name] = total
        total += p * q

    def var(vertex: str, a: int, b: int) -> int | None:
        if vertex not in offsets:
            return None
        return offsets[vertex] + a * blocks[vertex][1] + b

    arrows = [
        # (source vertex, target vertex, src matrix, dst matrix)
        ("0", "1", src.d, dst.d),
        ("1", "0", src.B1, dst.B1),
        ("1", "0", src.B2, dst.B2),
        ("inf", "0", src.i_map, dst.i_map),
        ("1", "inf", src.j_map, dst.j_map),
    ]
    rows: list[list[Fraction]] = []
    for head, tail, a_src, a_dst in arrows:
        A = to_fractions(a_src)
        D = to_fractions(a_dst)
        # phi_tail (t_tail x s_tail) * A (s_tail x s_head) - D (t_tail x t_head) * phi_head (t_head x s_head)
        t_tail, s_head = a_dst.shape[0], a_src.shape[1]
        t_head = a_dst.shape[1]
        s_tail = a_src.shape[0]
        for x in range(t_tail):
            for y in range(s_head):
                row = [Fraction(0)] * total
                for z in range(s_tail):
                    idx = var(tail, x, z)
                    if idx is not None and A[z][y]:
                        row[idx] += A[z][y]
                for z in range(t_head):
                    idx = var(head, z, y)
                    if idx is not None and D[x][z]:
                        row[idx] -= D[x][z]
                if any(row):
                    rows.append(row)
    if not rows or total == 0:
        return zeros(0, total), total
    return qmatrix(rows, (len(rows), total)), total


def hom_dim(src: BlowupQuiverRep, dst: BlowupQuiverRep, framed: bool = True) -> int:
    """Dimension of the space of morphisms ``(phi0, phi1, phiinf)``; ``framed`` forces ``phiinf = 0``."""
    system, unknowns = _intertwiner_system(src, dst, framed)
    return unknowns - rank(system)


def bn_index(rep: BlowupQuiverRep, m: int) -> int:
    """``hom(O_C(-m-1), E)``."""
    return hom_dim(ocm_rep(m), rep, framed=True)


def m_stability_test(rep: BlowupQuiverRep, m: int) -> tuple[bool, bool]:
    """Conditions (1) ``Hom(E, O_C(-m-1)) = 0`` and (2) ``Hom(O_C(-m), E) = 0``.

    Torsion-freeness away from ``C`` is not tested.  For ``m = 0`` condition
    (2) involves ``O_C``, which has no representation; use
    :func:`m_stability_cond1` there.
    """
    if m < 1:
        raise ValueError(
            "m_stability_test needs m >= 1; at m = 0 only condition (1) is available "
            "(see m_stability_cond1)"
        )
    return m_stability_cond1(rep, m), hom_dim(ocm_rep(m - 1), rep, framed=True) == 0


def m_stability_cond1(rep: BlowupQuiverRep, m: int) -> bool:
    return hom_dim(rep, ocm_rep(m), framed=True) == 0


# -- representation files -------------------------------------------------

MATRIX_KEYS = ("B1", "B2", "d", "i", "j")


def _entry_str(x: Fraction) -> str:
    return str(x)


def rep_to_dict(rep: BlowupQuiverRep) -> dict:
    d = rep.dims
    mats = {"B1": rep.B1, "B2": rep.B2, "d": rep.d, "i": rep.i_map, "j": rep.j_map}
    out: dict[str, Any] = {"dims": {"d0": d.d0, "d1": d.d1, "dinf": d.dinf}}
    for key in MATRIX_KEYS:
        out[key] = [[_entry_str(x) for x in row] for row in to_fractions(mats[key])]
    return out


def rep_from_dict(doc: Any) -> BlowupQuiverRep:
    if not isinstance(doc, dict):
        raise RepresentationFormatError("representation document must be a JSON object")
    try:
        dims = doc["dims"]
        d0, d1, dinf = (int(dims[k]) for k in ("d0", "d1", "dinf"))
    except (KeyError, TypeError, ValueError) as exc:
        raise RepresentationFormatError(f"bad or missing 'dims': {exc}") from exc
    if min(d0, d1, dinf) < 0:
        raise RepresentationFormatError("dimensions must be non-negative")
    shapes = {"B1": (d0, d1), "B2": (d0, d1), "d": (d1, d0), "i": (d0, dinf), "j": (dinf, d1)}
    mats = {}
    for key in MATRIX_KEYS:
        rows = doc.get(key)
        if rows is None:
            raise RepresentationFormatError(f"missing matrix '{key}'")
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise RepresentationFormatError(f"matrix '{key}' must be a list of rows")
        if any(not isinstance(x, (str, int)) or isinstance(x, bool) for r in rows for x in r):
            raise RepresentationFormatError(f"matrix '{key}' entries must be strings 'p/q'")
        try:
            mats[key] = qmatrix(rows, shapes[key])
        except (ValueError, ZeroDivisionError) as exc:
            raise RepresentationFormatError(f"matrix '{key}': {exc}") from exc
    return BlowupQuiverRep(mats["B1"], mats["B2"], mats["d"], mats["i"], mats["j"])


def dumps_rep(rep: BlowupQuiverRep) -> str:
    return json.dumps(rep_to_dict(rep), indent=2, sort_keys=True) + "\n"


def loads_rep(text: str) -> BlowupQuiverRep:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RepresentationFormatError(f"invalid JSON: {exc}") from exc
    return rep_from_dict(doc)


def load_rep(path) -> BlowupQuiverRep:
    with open(path, encoding="utf-8") as fh:
        return loads_rep(fh.read())


def save_rep(rep: BlowupQuiverRep, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_rep(rep))
