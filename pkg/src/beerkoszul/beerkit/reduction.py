"""Reduction of a monomial in the dual generators to a signed reduced monomial.

The dual algebra is antisymmetric, so any two distinct generators
anticommute and squares vanish.  Beyond that, every degree-2 monomial is,
in the dual, a signed multiple of every other monomial in its class.  The
reduction only ever replaces an adjacent pair by another pair of the same
class, with the ratio read off from the dual relation space itself.

Per connected component of the index graph (vertices = indices, one edge per
u/uu letter):

1. more edges than a spanning tree, or two r letters: zero;
2. triangle moves turn the tree into a star at the smallest vertex;
3. with an r letter, the r moves to the root and every uu edge becomes u (bn);
4. without one, an all-uu star becomes the shifted form (dn3); any other star
   is already reduced.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from ..quadpres import PairingConvention, QuadraticPresentation
from ..reflgroups import GroupSpec, Label, labels_for
from .algebra import build_beer
from .monomials import Block, ReducedMonomial


class ReductionError(AssertionError):
    """A move the reduction relies on is missing from the dual relations."""


class PairTable:
    """Degree-2 monomials of a dual presentation, modulo its relations."""

    def __init__(self, dual: QuadraticPresentation):
        self.p = dual
        self._ech = dual.relations.echelon()
        self._cache: dict = {}

    def image(self, a: Label, b: Label) -> dict:
        key = (a, b)
        if key not in self._cache:
            self._cache[key] = self._ech.reduce({self.p.word_index(a, b): 1})
        return self._cache[key]

    def is_zero(self, a: Label, b: Label) -> bool:
        return not self.image(a, b)

    def ratio(self, w1: tuple, w2: tuple):
        """``c`` with ``w1 = c * w2`` in the dual, or None."""
        v1, v2 = self.image(*w1), self.image(*w2)
        if not v2 or v1.keys() != v2.keys():
            return None
        k = next(iter(v2))
        c = v1[k] * self.p.field.inv(v2[k])
        if all(v1[j] == c * v2[j] for j in v2):
            return c
        return None


@lru_cache(maxsize=None)
def pair_table(spec: GroupSpec, convention: PairingConvention = PairingConvention.STRAIGHT) -> PairTable:
    return PairTable(build_beer(spec).dual(convention))


@dataclass
class Reduction:
    coeff: int  # 0, 1 or -1
    monomial: ReducedMonomial | None
    steps: list = field(default_factory=list)

    @property
    def zero(self) -> bool:
        return self.coeff == 0

    def __str__(self):
        if self.zero:
            return "0"
        return ("-" if self.coeff < 0 else "") + str(self.monomial)


def _edge(kind: str, a: int, b: int) -> Label:
    return Label(kind, (min(a, b), max(a, b)))


class _Word:
    """A signed list of distinct letters, rewritten in place."""

    def __init__(self, letters, table: PairTable):
        self.letters = list(letters)
        self.sign = 1
        self.table = table
        self.steps: list = []

    def move(self, x: Label, y: Label, target: tuple):
        """Bring ``y`` right after ``x``, then replace ``x y`` by a multiple of ``target``."""
        i, j = self.letters.index(x), self.letters.index(y)
        passes = j - i - 1 if j > i else i - j
        self.sign *= (-1) ** passes
        del self.letters[j]
        i = self.letters.index(x)
        c = self.table.ratio((x, y), target)
        if c is None:
            raise ReductionError(f"{x} {y} is not a multiple of {target[0]} {target[1]}")
        if c not in (1, -1) and c != self.table.p.field(-1):
            raise ReductionError(f"unexpected ratio {c} for {x} {y}")
        c = 1 if c == 1 else -1
        self.sign *= c
        self.letters[i : i + 1] = list(target)
        self.steps.append(f"{x} {y} = {'-' if c < 0 else ''}{target[0]} {target[1]}")

    def sort_to(self, target: tuple):
        """Reorder the letters into ``target`` (a permutation of them), tracking the sign."""
        pos = {lab: k for k, lab in enumerate(target)}
        seq = [pos[lab] for lab in self.letters]
        inversions = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
        self.sign *= (-1) ** inversions
        self.letters = list(target)


def _components(letters) -> list[tuple]:
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lab in letters:
        find(lab.idx[0])
        if lab.kind != "r":
            a, b = find(lab.idx[0]), find(lab.idx[1])
            if a != b:
                parent[max(a, b)] = min(a, b)
    comps: dict = {}
    for v in list(parent):
        comps.setdefault(find(v), set()).add(v)
    out = []
    for verts in sorted(comps.values(), key=min):
        members = [lab for lab in letters if lab.idx[0] in verts]
        out.append((frozenset(verts), members))
    return out


def _star_pair(table: PairTable, w: tuple, a: int, x: int, y: int) -> tuple:
    for k1 in ("u", "uu"):
        for k2 in ("u", "uu"):
            target = (_edge(k1, a, x), _edge(k2, a, y))
            if table.ratio(w, target) is not None:
                return target
    raise ReductionError(f"no star form at {a} for {w[0]} {w[1]}")


def _reduce_component(word: _Word, verts: frozenset, members: list) -> Block | None:
    table = word.table
    edges = [lab for lab in members if lab.kind != "r"]
    rs = [lab for lab in members if lab.kind == "r"]
    if len(edges) != len(verts) - 1 or len(rs) > 1:
        return None
    a = min(verts)
    current = set(edges)
    while True:
        nbrs = {lab.idx[0] + lab.idx[1] - a: lab for lab in current if a in lab.idx}
        outer = sorted((lab for lab in current if a not in lab.idx), key=lambda l: (l.idx, l.kind))
        pick = next(((e, x) for e in outer for x in e.idx if x in nbrs), None)
        if pick is None:
            break
        e, x = pick
        f = nbrs[x]
        y = e.idx[0] + e.idx[1] - x
        target = _star_pair(table, (f, e), a, x, y)
        word.move(f, e, target)
        current -= {f, e}
        current |= set(target)
    star = {lab.idx[0] + lab.idx[1] - a: lab for lab in current}
    leaves = tuple(sorted(star))
    if rs:
        r = rs[0]
        v = r.idx[0]
        if v != a:
            e = star[v]
            new_e = _edge("u", a, v)
            word.move(r, e, (Label.r(a), new_e))
            star[v] = new_e
            r = Label.r(a)
        for b in leaves:
            if star[b].kind == "uu":
                new_e = _edge("u", a, b)
                word.move(r, star[b], (r, new_e))
                star[b] = new_e
        return Block(a, leaves, "bn")
    P = tuple(b for b in leaves if star[b].kind == "uu")
    if len(P) < len(leaves):
        return Block(a, leaves, "star", P)
    i1 = leaves[0]
    pivot = star[i1]
    for b in leaves[1:]:
        word.move(pivot, star[b], (_edge("u", i1, b), pivot))
    return Block(a, leaves, "shifted")


def algorithm_reduce(
    spec: GroupSpec, letters, convention: PairingConvention = PairingConvention.STRAIGHT
) -> Reduction:
    """Reduce a word over the dual generators of ``spec`` (series B or D)."""
    if spec.series not in ("B", "D"):
        raise ValueError("algorithm_reduce handles the B and D series")
    letters = tuple(letters)
    allowed = set(labels_for(spec))
    for lab in letters:
        if lab not in allowed:
            raise ValueError(f"{lab} is not a generator for {spec}")
    if len(set(letters)) != len(letters):
        return Reduction(0, None, ["repeated generator"])
    table = pair_table(spec, convention)
    word = _Word(letters, table)
    blocks = []
    for verts, members in _components(letters):
        block = _reduce_component(word, verts, members)
        if block is None:
            word.steps.append(f"component {sorted(verts)} vanishes")
            return Reduction(0, None, word.steps)
        blocks.append(block)
    mono = ReducedMonomial(tuple(blocks))
    word.sort_to(mono.word())
    return Reduction(word.sign, mono, word.steps)


def random_words(spec: GroupSpec, m: int, count: int, seed: int = 0) -> list[tuple]:
    rng = random.Random(seed)
    labels = labels_for(spec)
    return [tuple(rng.choice(labels) for _ in range(m)) for _ in range(count)]
