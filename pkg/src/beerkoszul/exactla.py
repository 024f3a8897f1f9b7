"""Exact sparse linear algebra over Q (and Z/p for dimension counts).

Vectors and matrix rows are ``dict[int, scalar]`` mappings from column index
to a nonzero entry.  Rational entries are ``gmpy2.mpq``; prime-field entries
are plain ints in ``range(p)``.

Every reduction pivots on the leftmost nonzero column, and subspaces are kept
in fully reduced row echelon form, so two subspaces are equal exactly when
their basis lists are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import gmpy2
from gmpy2 import mpq

DEFAULT_PRIME = 2147483647

Vector = dict  # column -> nonzero scalar


class Field:
    """Arithmetic backend.  ``p is None`` selects the rationals."""

    def __init__(self, p: int | None = None):
        self.p = p

    @property
    def name(self) -> str:
        return "rational" if self.p is None else f"prime:{self.p}"

    @property
    def exact(self) -> bool:
        return self.p is None

    def __call__(self, x):
        if self.p is None:
            return mpq(x)
        if isinstance(x, int):
            return x % self.p
        x = mpq(x)
        return int(x.numerator) * pow(int(x.denominator), -1, self.p) % self.p

    def inv(self, x):
        if self.p is None:
            return 1 / x
        return pow(x, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"Field({self.name})"

    @classmethod
    def parse(cls, text: str) -> "Field":
        if text == "rational":
            return cls()
        if text.startswith("prime:"):
            p = int(text.split(":", 1)[1])
            if not gmpy2.is_prime(p):
                raise ValueError(f"not a prime modulus: {p}")
            return cls(p)
        raise ValueError(f"unknown field backend {text!r}")


QQ = Field()


@dataclass
class SparseMatrix:
    nrows: int
    ncols: int
    entries: dict = field(default_factory=dict)  # (row, col) -> nonzero scalar

    def __post_init__(self):
        for (r, c), v in list(self.entries.items()):
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise IndexError(f"entry ({r}, {c}) outside {self.nrows}x{self.ncols}")
            if v == 0:
                del self.entries[(r, c)]

    @classmethod
    def from_rows(cls, rows: Sequence[Mapping[int, object]], ncols: int) -> "SparseMatrix":
        entries = {}
        for r, row in enumerate(rows):
            for c, v in row.items():
                if v != 0:
                    entries[(r, c)] = v
        return cls(len(rows), ncols, entries)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[object]]) -> "SparseMatrix":
        ncols = len(dense[0]) if dense else 0
        return cls.from_rows([dict(enumerate(row)) for row in dense], ncols)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def rows(self) -> list[dict]:
        out = [dict() for _ in range(self.nrows)]
        for (r, c) in sorted(self.entries):
            out[r][c] = self.entries[(r, c)]
        return out

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        entries = dict(self.entries)
        for k, v in other.entries.items():
            entries[k] = entries.get(k, 0) + v
        return SparseMatrix(self.nrows, self.ncols, entries)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        entries = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                entries[(r, c)] = entries.get((r, c), 0) + v * w
        return SparseMatrix(self.nrows, other.ncols, entries)

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrix)
            and (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and self.entries == other.entries
        )

    def apply(self, vec: Mapping[int, object]) -> dict:
        """Matrix times column vector, both sparse."""
        by_col = {}
        for (r, c), v in self.entries.items():
            by_col.setdefault(c, []).append((r, v))
        out: dict = {}
        for c, x in vec.items():
            for r, v in by_col.get(c, ()):
                out[r] = out.get(r, 0) + v * x
        return {r: v for r, v in out.items() if v != 0}


class Echelon:
    """Incrementally built reduced row echelon form.

    ``rows[pivot]`` is a row whose leftmost entry sits at ``pivot`` and equals
    one; no row has a nonzero entry in another row's pivot column.
    """

    def __init__(self, ncols: int, fld: Field = QQ):
        self.ncols = ncols
        self.field = fld
        self.rows: dict[int, dict] = {}
        # column -> set of pivots whose row has a nonzero there (non-pivot columns only)
        self._occ: dict[int, set] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Mapping[int, object]) -> dict:
        """Residue of ``vec`` modulo the span; it has no pivot-column entries."""
        p = self.field.p
        out = {c: self.field(v) for c, v in vec.items() if v != 0}
        if p is None:
            hits = [c for c in out if c in self.rows]
            for c in hits:
                a = out.pop(c, 0)
                if a == 0:
                    continue
                for k, w in self.rows[c].items():
                    if k == c:
                        continue
                    nv = out.get(k, 0) - a * w
                    if nv == 0:
                        out.pop(k, None)
                    else:
                        out[k] = nv
        else:
            hits = [c for c in out if c in self.rows]
            for c in hits:
                a = out.pop(c, 0)
                if a == 0:
                    continue
                for k, w in self.rows[c].items():
                    if k == c:
                        continue
                    nv = (out.get(k, 0) - a * w) % p
                    if nv == 0:
                        out.pop(k, None)
                    else:
                        out[k] = nv
        return out

    def add(self, vec: Mapping[int, object]) -> bool:
        """Insert ``vec``; returns True when the rank grew."""
        res = self.reduce(vec)
        if not res:
            return False
        piv = min(res)
        inv = self.field.inv(res[piv])
        p = self.field.p
        if p is None:
            row = {k: v * inv for k, v in res.items()}
        else:
            row = {k: v * inv % p for k, v in res.items()}
        # clear the new pivot column from existing rows
        for other in sorted(self._occ.pop(piv, ())):
            orow = self.rows[other]
            a = orow.pop(piv)
            for k, w in row.items():
                if k == piv:
                    continue
                nv = orow.get(k, 0) - a * w
                if p is not None:
                    nv %= p
                if nv == 0:
                    if k in orow:
                        del orow[k]
                        self._occ[k].discard(other)
                else:
                    if k not in orow:
                        self._occ.setdefault(k, set()).add(other)
                    orow[k] = nv
        self.rows[piv] = row
        for k in row:
            if k != piv:
                self._occ.setdefault(k, set()).add(piv)
        return True

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[dict]:
        return [dict(sorted(self.rows[c].items())) for c in sorted(self.rows)]


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field^ambient`` stored as its canonical RREF basis."""

    ambient: int
    basis: tuple  # tuple of tuple((col, value), ...) sorted by pivot
    field: Field = QQ

    @classmethod
    def span(cls, vectors: Iterable[Mapping[int, object]], ambient: int, fld: Field = QQ) -> "Subspace":
        ech = Echelon(ambient, fld)
        for v in vectors:
            for c in v:
                if not 0 <= c < ambient:
                    raise IndexError(f"column {c} outside ambient dimension {ambient}")
            ech.add(v)
        return cls._from_echelon(ech)

    @classmethod
    def _from_echelon(cls, ech: Echelon) -> "Subspace":
        return cls(ech.ncols, tuple(tuple(sorted(r.items())) for r in ech.basis()), ech.field)

    @classmethod
    def zero(cls, ambient: int, fld: Field = QQ) -> "Subspace":
        return cls(ambient, (), fld)

    @classmethod
    def full(cls, ambient: int, fld: Field = QQ) -> "Subspace":
        one = fld(1)
        return cls(ambient, tuple(((i, one),) for i in range(ambient)), fld)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[dict]:
        return [dict(b) for b in self.basis]

    def pivots(self) -> list[int]:
        return [b[0][0] for b in self.basis]

    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient, self.field)
        for b in self.basis:
            row = dict(b)
            ech.rows[b[0][0]] = row
            for k in row:
                if k != b[0][0]:
                    ech._occ.setdefault(k, set()).add(b[0][0])
        return ech

    def __contains__(self, vec) -> bool:
        return contains(self, vec)

    def __le__(self, other: "Subspace") -> bool:
        return all(contains(other, v) for v in self.vectors())


def rank(m: SparseMatrix, fld: Field = QQ) -> int:
    ech = Echelon(m.ncols, fld)
    for row in m.rows():
        ech.add(row)
    return len(ech)


def row_space(m: SparseMatrix, fld: Field = QQ) -> Subspace:
    return Subspace.span(m.rows(), m.ncols, fld)


def kernel(m: SparseMatrix, fld: Field = QQ) -> Subspace:
    """Null space ``{x : m x = 0}`` as a canonical subspace of ``fld^ncols``."""
    ech = Echelon(m.ncols, fld)
    for row in m.rows():
        ech.add(row)
    return _kernel_of_echelon(ech)


def _kernel_of_echelon(ech: Echelon) -> Subspace:
    fld = ech.field
    pivots = set(ech.rows)
    free = [c for c in range(ech.ncols) if c not in pivots]
    # x_f = e_f - sum over pivot rows of row[f] * e_pivot
    coeffs: dict[int, dict] = {f: {f: fld(1)} for f in free}
    for piv, row in ech.rows.items():
        for k, v in row.items():
            if k != piv:
                coeffs[k][piv] = fld(-v)
    return Subspace.span(coeffs.values(), ech.ncols, fld)


def contains(a: Subspace, vec: Mapping[int, object]) -> bool:
    for c in vec:
        if not 0 <= c < a.ambient:
            raise ValueError(f"vector index {c} outside ambient dimension {a.ambient}")
    return not a.echelon().reduce(vec)


def sum_spaces(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient:
        raise ValueError("ambient dimension mismatch")
    return Subspace.span(a.vectors() + b.vectors(), a.ambient, a.field)


def annihilator(a: Subspace, pairing: Sequence[int] | None = None) -> Subspace:
    """Functionals vanishing on ``a``.

    The dual space is identified with ``field^ambient`` through the pairing
    ``<f, v> = sum_c f[c] * v[pairing[c]]``; ``pairing=None`` is the identity
    (straight Kronecker pairing).  ``pairing`` must be a permutation of the
    column indices so the form is nondegenerate.
    """
    if pairing is not None:
        if sorted(pairing) != list(range(a.ambient)):
            raise ValueError("pairing must permute the ambient basis")
        inverse = [0] * a.ambient
        for c, d in enumerate(pairing):
            inverse[d] = c
        rows = [{inverse[k]: v for k, v in vec.items()} for vec in a.vectors()]
    else:
        rows = a.vectors()
    return kernel(SparseMatrix.from_rows(rows, a.ambient), a.field)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient:
        raise ValueError("ambient dimension mismatch")
    ann = annihilator(a).vectors() + annihilator(b).vectors()
    return kernel(SparseMatrix.from_rows(ann, a.ambient), a.field)


def dense_rank_oracle(dense: Sequence[Sequence[object]]) -> int:
    """Plain Gaussian elimination on a dense list-of-lists over Q.

    Deliberately independent of :class:`Echelon`; used to cross-check it.
    """
    from fractions import Fraction

    m = [[Fraction(int(mpq(x).numerator), int(mpq(x).denominator)) for x in row] for row in dense]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r
