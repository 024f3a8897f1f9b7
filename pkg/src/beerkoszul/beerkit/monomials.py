"""Reduced monomials of the dual algebras: products of disjoint-support blocks.

A block lives on an index set ``j < i_1 < ... < i_k`` and is one of

* a star ``u(j,i)`` over the leaves outside ``P`` followed by ``uu(j,i)`` over
  the leaves in ``P``, with ``P`` a proper subset of the leaves
  (``P`` empty gives dn1, ``P = {i_p}`` with ``p >= 2`` gives dn2);
* the shifted form ``u(i_1,i_2)...u(i_1,i_k) uu(j,i_1)`` (dn3);
* for type B, ``u(j,i_1)...u(j,i_k) r(j)`` with ``k >= 0`` (bn).

The "printed" family allows only dn1, dn2 with a single uu-leaf other than
``i_1``, dn3 and bn.  The "complete" family allows every proper subset ``P``;
it has ``2^k`` D-type blocks on ``k + 1`` indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from ..reflgroups import GroupSpec, Label

FAMILIES = ("printed", "complete")


@dataclass(frozen=True, order=True)
class Block:
    root: int
    leaves: tuple
    shape: str  # "star", "shifted" or "bn"
    uu_leaves: tuple = ()  # star only

    def __post_init__(self):
        if list(self.leaves) != sorted(set(self.leaves)) or (self.leaves and self.leaves[0] <= self.root):
            raise ValueError(f"block indices must increase from the root: {self}")
        if self.shape == "star":
            if not set(self.uu_leaves) < set(self.leaves) and self.leaves:
                raise ValueError("star uu-leaves must be a proper subset of the leaves")
            if not self.leaves:
                raise ValueError("a D-type block needs at least one edge")
        elif self.shape == "shifted":
            if not self.leaves or self.uu_leaves:
                raise ValueError("shifted block needs leaves and no uu-leaves")
        elif self.shape == "bn":
            if self.uu_leaves:
                raise ValueError("bn block has no uu-leaves")
        else:
            raise ValueError(f"unknown block shape {self.shape!r}")

    @property
    def support(self) -> frozenset:
        return frozenset((self.root,) + self.leaves)

    @property
    def degree(self) -> int:
        return len(self.leaves) + (self.shape == "bn")

    @property
    def family(self) -> str:
        if self.shape == "bn":
            return "bn"
        if self.shape == "shifted":
            return "dn3"
        if not self.uu_leaves:
            return "dn1"
        if len(self.uu_leaves) == 1 and self.uu_leaves[0] != self.leaves[0]:
            return "dn2"
        return "dn2-general"

    @property
    def printed(self) -> bool:
        return self.family != "dn2-general"

    def word(self) -> tuple:
        j = self.root
        if self.shape == "star":
            plain = [Label.u(j, i) for i in self.leaves if i not in self.uu_leaves]
            return tuple(plain + [Label.uu(j, i) for i in self.uu_leaves])
        if self.shape == "shifted":
            i1 = self.leaves[0]
            return tuple(Label.u(i1, i) for i in self.leaves[1:]) + (Label.uu(j, i1),)
        return tuple(Label.u(j, i) for i in self.leaves) + (Label.r(j),)


@dataclass(frozen=True)
class ReducedMonomial:
    blocks: tuple

    def __post_init__(self):
        roots = [b.root for b in self.blocks]
        if roots != sorted(roots):
            raise ValueError("blocks must be ordered by their smallest index")
        seen: set = set()
        for b in self.blocks:
            if seen & b.support:
                raise ValueError("block supports must be disjoint")
            seen |= b.support

    def word(self) -> tuple:
        return tuple(lab for b in self.blocks for lab in b.word())

    @property
    def degree(self) -> int:
        return sum(b.degree for b in self.blocks)

    @property
    def printed(self) -> bool:
        return all(b.printed for b in self.blocks)

    def __str__(self):
        return " ".join(map(str, self.word())) or "1"


def block_shapes(series: str, root: int, leaves: tuple, family: str = "complete") -> Iterator[Block]:
    """All blocks on the index set ``{root} + leaves`` for the given series."""
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if leaves:
        yield Block(root, leaves, "star")
        if series != "A":
            k = len(leaves)
            for size in range(1, k):
                for P in itertools.combinations(leaves, size):
                    b = Block(root, leaves, "star", P)
                    if family == "complete" or b.printed:
                        yield b
            yield Block(root, leaves, "shifted")
    if series == "B":
        yield Block(root, leaves, "bn")


def _set_partitions(items: list) -> Iterator[list]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def reduced_monomials(spec: GroupSpec, m: int, family: str = "printed") -> list[ReducedMonomial]:
    """Every reduced monomial of degree ``m``, sorted by word."""
    out = []
    for part in _set_partitions(list(range(1, spec.rank + 1))):
        blocks = sorted((sorted(p) for p in part), key=lambda p: p[0])
        choices = []
        for p in blocks:
            opts = list(block_shapes(spec.series, p[0], tuple(p[1:]), family))
            if len(p) == 1:
                opts = [None] + opts  # an isolated index may carry nothing
            choices.append(opts)
        for combo in itertools.product(*choices):
            chosen = tuple(b for b in combo if b is not None)
            if sum(b.degree for b in chosen) == m:
                out.append(ReducedMonomial(chosen))
    return sorted(out, key=ReducedMonomial.word)


def block_series(series: str, t: int) -> dict:
    """Degree -> number of complete-family blocks on ``t`` indices."""
    if t == 1:
        return {0: 1, 1: 1} if series == "B" else {0: 1}
    out = {t - 1: 1 if series == "A" else 2 ** (t - 1)}
    if series == "B":
        out[t] = 1
    return out
