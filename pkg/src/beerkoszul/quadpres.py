"""Quadratic presentations T(V)/<R>, their Lambda-parts, duals and graded dimensions."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .exactla import (
    QQ,
    Echelon,
    Field,
    SparseMatrix,
    Subspace,
    annihilator,
    contains,
    intersect,
    kernel,
)
from .reflgroups import Label
from .ydbraid import BraidedSpace, braiding_matrix

# A noncommutative polynomial: word (tuple of labels) -> coefficient.
Poly = dict


class PairingConvention(enum.Enum):
    STRAIGHT = "straight"
    REVERSED = "reversed"

    def permutation(self, n: int) -> list[int] | None:
        """Column permutation realising the pairing on V (x) V, ``n = dim V``."""
        if self is PairingConvention.STRAIGHT:
            return None
        return [(c % n) * n + c // n for c in range(n * n)]


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class QuadraticPresentation:
    labels: list
    relations: Subspace
    provenance: str
    convention: PairingConvention | None = None

    def __post_init__(self):
        n = len(self.labels)
        if self.relations.ambient != n * n:
            raise ValueError(f"relation ambient {self.relations.ambient} != {n}^2")

    @cached_property
    def index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @property
    def ngens(self) -> int:
        return len(self.labels)

    @property
    def field(self) -> Field:
        return self.relations.field

    def word_index(self, a: Label, b: Label) -> int:
        return self.index[a] * self.ngens + self.index[b]

    def word_of(self, col: int) -> tuple:
        return self.labels[col // self.ngens], self.labels[col % self.ngens]

    def vector(self, poly: Mapping[tuple, object]) -> dict:
        """Degree-2 polynomial -> coordinate vector in V (x) V."""
        out: dict = {}
        for word, c in poly.items():
            if len(word) != 2:
                raise ValueError(f"relation term {word} is not quadratic")
            for lab in word:
                if lab not in self.index:
                    raise KeyError(f"unknown label {lab} in relation")
            k = self.word_index(*word)
            out[k] = out.get(k, 0) + c
        return {k: v for k, v in out.items() if v != 0}

    def poly(self, vec: Mapping[int, object]) -> Poly:
        return {self.word_of(c): v for c, v in sorted(vec.items())}

    def relation_polys(self) -> list[Poly]:
        return [self.poly(v) for v in self.relations.vectors()]

    def to_json(self) -> dict:
        return {
            "generators": [str(l) for l in self.labels],
            "relations": [
                [[str(c), [str(a), str(b)]] for (a, b), c in p.items()] for p in self.relation_polys()
            ],
            "provenance": self.provenance,
            "convention": self.convention.value if self.convention else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuadraticPresentation":
        labels = [Label.parse(s) for s in data["generators"]]
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        vecs = []
        for rel in data["relations"]:
            v: dict = {}
            for coeff, (a, b) in rel:
                k = index[Label.parse(a)] * n + index[Label.parse(b)]
                v[k] = v.get(k, 0) + QQ(coeff)
            vecs.append(v)
        conv = data.get("convention")
        return cls(
            labels,
            Subspace.span(vecs, n * n),
            data["provenance"],
            PairingConvention(conv) if conv else None,
        )


def antisymmetric_subspace(n: int, fld: Field = QQ) -> Subspace:
    """Lambda^2 V inside V (x) V: span of a(x)b - b(x)a."""
    vecs = [{a * n + b: 1, b * n + a: -1} for a in range(n) for b in range(a + 1, n)]
    return Subspace.span(vecs, n * n, fld)


def symmetric_subspace(n: int, fld: Field = QQ) -> Subspace:
    vecs = [{a * n + b: 1, b * n + a: 1} if a != b else {a * n + a: 1} for a in range(n) for b in range(a, n)]
    return Subspace.span(vecs, n * n, fld)


def quad_kernel_presentation(y: BraidedSpace) -> QuadraticPresentation:
    n = y.dim
    psi = braiding_matrix(y)
    rel = kernel(SparseMatrix.identity(n * n) + psi)
    return QuadraticPresentation(list(y.labels), rel, "quad-kernel")


def lambda_part(p: QuadraticPresentation) -> QuadraticPresentation:
    if p.provenance != "quad-kernel":
        raise ValueError(f"lambda_part expects a quad-kernel presentation, got {p.provenance}")
    rel = intersect(p.relations, antisymmetric_subspace(p.ngens, p.field))
    return QuadraticPresentation(list(p.labels), rel, "lambda-part")


def quadratic_dual(
    p: QuadraticPresentation, c: PairingConvention = PairingConvention.STRAIGHT
) -> QuadraticPresentation:
    rel = annihilator(p.relations, c.permutation(p.ngens))
    return QuadraticPresentation(list(p.labels), rel, f"dual-of({p.provenance})", c)


def explicit_presentation(labels: Sequence[Label], relations: Iterable[Poly]) -> QuadraticPresentation:
    n = len(labels)
    tmp = QuadraticPresentation(list(labels), Subspace.zero(n * n), "explicit-list")
    vecs = [tmp.vector(r) for r in relations]
    return QuadraticPresentation(list(labels), Subspace.span(vecs, n * n), "explicit-list")


@dataclass
class RelationCheck:
    contained: list  # one bool per listed relation
    independent_count: int
    span_equal: bool
    relation_dim: int

    @property
    def all_contained(self) -> bool:
        return all(self.contained)


def relation_list_check(p: QuadraticPresentation, relations: Sequence[Poly]) -> RelationCheck:
    vecs = [p.vector(r) for r in relations]
    ech = p.relations.echelon()
    contained = [not ech.reduce(v) for v in vecs]
    span = Subspace.span(vecs, p.ngens**2, p.field)
    return RelationCheck(contained, span.dim, span == p.relations, p.relations.dim)


@dataclass
class HilbertData:
    dims: list
    fields: list  # per-degree backend name

    def __post_init__(self):
        if self.dims and self.dims[0] != 1:
            raise ValueError("dim A_0 must be 1")

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "fields": list(self.fields)}


class GradedQuotient:
    """Degree-by-degree construction of A = T(V)/<R> by linear algebra.

    ``A_m`` is realised as ``(A_{m-1} (x) V) / (A_{m-2} (x) R)``; a basis of
    ``A_m`` is the set of non-pivot columns of the reduced echelon form of the
    image, and multiplication ``A_{m-1} (x) V -> A_m`` is read off the
    echelon rows.  No rewriting rules are involved.
    """

    def __init__(self, p: QuadraticPresentation, fld: Field = QQ, max_columns: int | None = 400_000):
        self.p = p
        self.field = fld
        self.max_columns = max_columns
        n = p.ngens
        self.rels = [{c: fld(v) for c, v in vec.items()} for vec in p.relations.vectors()]
        # level m: (echelon over A_{m-1} (x) V, list of basis columns)
        self._levels: list[tuple[Echelon | None, list[int]]] = [(None, [0])]
        if n:
            self._levels.append((Echelon(n, fld), list(range(n))))
        else:
            self._levels.append((Echelon(0, fld), []))
        self._pos: list[dict] = [{c: i for i, c in enumerate(b)} for _, b in self._levels]

    def _multiply(self, m: int, col: int) -> dict:
        """Image in A_m coordinates of the column ``col`` of A_{m-1} (x) V."""
        ech, _ = self._levels[m]
        pos = self._pos[m]
        if col in ech.rows:
            row = ech.rows[col]
            if self.field.p is None:
                return {pos[k]: -v for k, v in row.items() if k != col}
            p = self.field.p
            return {pos[k]: (-v) % p for k, v in row.items() if k != col}
        return {pos[col]: self.field(1)}

    def _extend(self):
        m = len(self._levels)
        n = self.p.ngens
        prev_dim = len(self._levels[m - 1][1])
        ncols = prev_dim * n
        if self.max_columns is not None and ncols > self.max_columns:
            raise BudgetExceeded(
                f"degree {m} needs {ncols} columns (> {self.max_columns}); "
                "use a prime field backend or raise the budget"
            )
        ech = Echelon(ncols, self.field)
        pfield = self.field.p
        cache: dict = {}
        for beta in range(len(self._levels[m - 2][1])):
            for rel in self.rels:
                vec: dict = {}
                for c, coeff in rel.items():
                    x, yy = divmod(c, n)
                    key = beta * n + x
                    img = cache.get(key)
                    if img is None:
                        img = cache[key] = self._multiply(m - 1, key)
                    for pos, w in img.items():
                        k = pos * n + yy
                        nv = vec.get(k, 0) + coeff * w
                        if pfield is not None:
                            nv %= pfield
                        if nv == 0:
                            vec.pop(k, None)
                        else:
                            vec[k] = nv
                ech.add(vec)
        basis = [c for c in range(ncols) if c not in ech.rows]
        self._levels.append((ech, basis))
        self._pos.append({c: i for i, c in enumerate(basis)})

    def dim(self, m: int) -> int:
        if m < 0:
            raise ValueError("degree must be nonnegative")
        while len(self._levels) <= m:
            self._extend()
        return len(self._levels[m][1])

    def basis_words(self, m: int) -> list[tuple]:
        """Words whose images form the computed basis of A_m (as label tuples)."""
        self.dim(m)
        words: list[tuple] = [()]
        n = self.p.ngens
        for k in range(1, m + 1):
            prev = words
            words = [prev[c // n] + (self.p.labels[c % n],) for c in self._levels[k][1]]
        return words


_QUOTIENTS: dict = {}


def quotient_for(p: QuadraticPresentation, fld: Field = QQ) -> GradedQuotient:
    key = (id(p), fld)
    q = _QUOTIENTS.get(key)
    if q is None or q.p is not p:
        q = _QUOTIENTS[key] = GradedQuotient(p, fld)
    return q


def graded_dimension(p: QuadraticPresentation, m: int, fld: Field = QQ) -> int:
    """dim A_m.  Over a prime field the value is the mod-p dimension."""
    return quotient_for(p, fld).dim(m)


def hilbert_data(p: QuadraticPresentation, maxdeg: int, fld: Field = QQ, rational_upto: int = 4) -> HilbertData:
    """Graded dimensions through ``maxdeg``; degrees above ``rational_upto`` use ``fld``."""
    dims, tags = [], []
    for m in range(maxdeg + 1):
        f = QQ if m <= rational_upto else fld
        dims.append(graded_dimension(p, m, f))
        tags.append(f.name)
    return HilbertData(dims, tags)


def spanning_dimension_oracle(p: QuadraticPresentation, m: int) -> int:
    """dim V^m - dim sum_i V^i (x) R (x) V^(m-2-i), by brute-force elimination.

    Exponential in ``m``; used only to cross-check :class:`GradedQuotient`.
    """
    n = p.ngens
    if m < 2:
        return 1 if m == 0 else n
    ech = Echelon(n**m, p.field)
    rels = p.relations.vectors()
    for i in range(m - 1):
        left, right = n**i, n ** (m - 2 - i)
        for a in range(left):
            for b in range(right):
                for rel in rels:
                    ech.add({(a * n * n + c) * right + b: v for c, v in rel.items()})
    return n**m - len(ech)


def polynomial_product(p: Poly, q: Poly) -> Poly:
    out: dict = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            w = w1 + w2
            out[w] = out.get(w, 0) + c1 * c2
    return {w: c for w, c in out.items() if c != 0}


def commutator(a: Label, b: Label, coeff=1) -> Poly:
    if a == b:
        return {}
    return {(a, b): coeff, (b, a): -coeff}


def add_polys(*ps: Poly) -> Poly:
    out: dict = {}
    for p in ps:
        for w, c in p.items():
            out[w] = out.get(w, 0) + c
    return {w: c for w, c in out.items() if c != 0}


def scale(p: Poly, c) -> Poly:
    return {w: c * v for w, v in p.items() if c * v != 0}


def all_words(labels: Sequence[Label], m: int) -> Iterable[tuple]:
    return itertools.product(labels, repeat=m)
