"""Signed permutation groups S_n, D_n, B_n and their reflections."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Iterator

SERIES = ("A", "B", "D")


class ReducibleGroupWarning(UserWarning):
    pass


@dataclass(frozen=True, order=True)
class GroupSpec:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise ValueError(f"unknown series {self.series!r}; expected one of {SERIES}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")

    @property
    def reducible(self) -> bool:
        return self.series == "D" and self.rank < 3

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        try:
            series, rank = text.split(":")
            return cls(series.strip().upper(), int(rank))
        except ValueError as exc:
            raise ValueError(f"bad group spec {text!r}; expected e.g. 'D:4'") from exc

    def __str__(self):
        return f"{self.series}:{self.rank}"

    def order(self) -> int:
        n = self.rank
        return {"A": factorial(n), "B": 2**n * factorial(n), "D": 2 ** (n - 1) * factorial(n)}[self.series]


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """``g(e_i) = signs[i] * e_{perm[i]}`` on 0-based coordinates."""

    perm: tuple
    signs: tuple

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "SignedPermutation":
        """The transposition (ij), 1-based indices."""
        perm = list(range(n))
        perm[i - 1], perm[j - 1] = j - 1, i - 1
        return cls(tuple(perm), (1,) * n)

    @classmethod
    def sign_flip(cls, n: int, *ks: int) -> "SignedPermutation":
        """The product s_k1 s_k2 ... of coordinate sign changes, 1-based."""
        signs = [1] * n
        for k in ks:
            signs[k - 1] = -signs[k - 1]
        return cls(tuple(range(n)), tuple(signs))

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if self.n != other.n:
            raise ValueError("size mismatch")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.n))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        perm = [0] * self.n
        signs = [1] * self.n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = i
            signs[p] = s
        return SignedPermutation(tuple(perm), tuple(signs))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and all(s == 1 for s in self.signs)

    def matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            m[p][i] = s
        return m

    def apply(self, v):
        out = [0] * self.n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] += s * v[i]
        return tuple(out)

    def in_series(self, series: str) -> bool:
        neg = sum(1 for s in self.signs if s < 0)
        if series == "A":
            return neg == 0
        if series == "D":
            return neg % 2 == 0
        return True

    def fixed_codim(self) -> int:
        """rank(1 - g), computed by exact elimination."""
        from .exactla import SparseMatrix, rank

        m = self.matrix()
        dense = [[(1 if r == c else 0) - m[r][c] for c in range(self.n)] for r in range(self.n)]
        return rank(SparseMatrix.from_dense(dense)) if self.n else 0


@dataclass(frozen=True, order=True)
class Label:
    """Generator label: ``u(i,j)`` for e_i - e_j, ``uu(i,j)`` for e_i + e_j, ``r(k)`` for e_k."""

    kind: str  # "u", "uu" or "r"
    idx: tuple  # (i, j) with i < j, or (k,)

    def __post_init__(self):
        if self.kind in ("u", "uu"):
            if len(self.idx) != 2 or not 1 <= self.idx[0] < self.idx[1]:
                raise ValueError(f"bad index pair for {self.kind}: {self.idx}")
        elif self.kind == "r":
            if len(self.idx) != 1 or self.idx[0] < 1:
                raise ValueError(f"bad index for r: {self.idx}")
        else:
            raise ValueError(f"unknown label kind {self.kind!r}")

    @classmethod
    def u(cls, i: int, j: int) -> "Label":
        return cls("u", (i, j))

    @classmethod
    def uu(cls, i: int, j: int) -> "Label":
        return cls("uu", (i, j))

    @classmethod
    def r(cls, k: int) -> "Label":
        return cls("r", (k,))

    @property
    def support(self) -> frozenset:
        return frozenset(self.idx)

    def __str__(self):
        return f"{self.kind}({','.join(map(str, self.idx))})"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "Label":
        text = text.strip()
        head, _, rest = text.partition("(")
        if not rest.endswith(")"):
            raise ValueError(f"cannot parse label {text!r}")
        try:
            idx = tuple(int(t) for t in rest[:-1].split(","))
            return cls(head.strip(), idx)
        except ValueError as exc:
            raise ValueError(f"cannot parse label {text!r}") from exc


@dataclass(frozen=True)
class Reflection:
    element: SignedPermutation
    label: Label

    @property
    def root(self) -> tuple:
        n = self.element.n
        v = [0] * n
        if self.label.kind == "r":
            v[self.label.idx[0] - 1] = 1
        else:
            i, j = self.label.idx
            v[i - 1] = 1
            v[j - 1] = -1 if self.label.kind == "u" else 1
        return tuple(v)

    @property
    def coroot(self) -> tuple:
        # <coroot, root> = 2
        from gmpy2 import mpq

        a = self.root
        norm = sum(x * x for x in a)
        return tuple(mpq(2 * x, norm) for x in a)

    def reflect(self, v) -> tuple:
        """v - <coroot, v> root."""
        c = sum(x * y for x, y in zip(self.coroot, v))
        return tuple(x - c * a for x, a in zip(v, self.root))


def reflection_element(n: int, label: Label) -> SignedPermutation:
    if label.kind == "r":
        return SignedPermutation.sign_flip(n, label.idx[0])
    i, j = label.idx
    t = SignedPermutation.transposition(n, i, j)
    if label.kind == "u":
        return t
    return SignedPermutation.sign_flip(n, i, j) * t


def label_of(g: SignedPermutation) -> Label | None:
    """The label of ``g`` when it is a reflection of B_n, else None."""
    moved = [i for i in range(g.n) if g.perm[i] != i]
    if not moved:
        neg = [i for i in range(g.n) if g.signs[i] < 0]
        if len(neg) == 1:
            return Label.r(neg[0] + 1)
        return None
    if len(moved) != 2:
        return None
    a, b = moved
    if any(g.signs[i] < 0 for i in range(g.n) if i not in moved):
        return None
    if g.signs[a] != g.signs[b]:
        return None
    return Label("u" if g.signs[a] > 0 else "uu", (a + 1, b + 1))


def labels_for(spec: GroupSpec) -> list[Label]:
    n = spec.rank
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    out = [Label.u(i, j) for i, j in pairs]
    if spec.series in ("B", "D"):
        out += [Label.uu(i, j) for i, j in pairs]
    if spec.series == "B":
        out += [Label.r(k) for k in range(1, n + 1)]
    return out


def enumerate_reflections(spec: GroupSpec) -> list[Reflection]:
    """All reflections in canonical order: u(i,j) lex, then uu(i,j) lex, then r(1..n)."""
    if spec.reducible:
        warnings.warn(f"{spec}: D_n with n < 3 is reducible", ReducibleGroupWarning, stacklevel=2)
    return [Reflection(reflection_element(spec.rank, lab), lab) for lab in labels_for(spec)]


def group_elements(spec: GroupSpec) -> Iterator[SignedPermutation]:
    n = spec.rank
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            g = SignedPermutation(perm, signs)
            if g.in_series(spec.series):
                yield g


def reflections_by_brute_force(spec: GroupSpec) -> list[SignedPermutation]:
    """Every group element whose fixed space has codimension one."""
    return [g for g in group_elements(spec) if g.fixed_codim() == 1]


def closure(gens: list[SignedPermutation]) -> set:
    """The group generated by ``gens`` (breadth-first)."""
    if not gens:
        return set()
    ident = SignedPermutation.identity(gens[0].n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def multiply(g: SignedPermutation, h: SignedPermutation) -> SignedPermutation:
    return g * h


def inverse(g: SignedPermutation) -> SignedPermutation:
    return g.inverse()


def conjugate(g: SignedPermutation, s: Reflection) -> Reflection:
    h = g * s.element * g.inverse()
    lab = label_of(h)
    if lab is None:
        raise AssertionError(f"conjugate of a reflection is not a reflection: {h}")
    return Reflection(h, lab)


@dataclass(frozen=True)
class Group:
    """A spec together with its reflection list, cached for reuse."""

    spec: GroupSpec

    @cached_property
    def reflections(self) -> list[Reflection]:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ReducibleGroupWarning)
            return enumerate_reflections(self.spec)

    @cached_property
    def elements(self) -> list[SignedPermutation]:
        return list(group_elements(self.spec))
