"""The Yetter-Drinfeld module Y_G spanned by reflection labels, and its braiding.

The action of the generating reflections on labels is tabulated case by case
(transpositions, the sign-twisted transpositions ``s_k s_l (kl)``, and single
sign changes ``s_k``).  Arbitrary group elements act through a factorisation
into those generators; the tests check the result does not depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .exactla import SparseMatrix
from .reflgroups import (
    GroupSpec,
    Group,
    Label,
    SignedPermutation,
    label_of,
    reflection_element,
)

Signed = tuple  # (sign, Label)


def _ordered(kind: str, a: int, b: int) -> Signed:
    """``kind(a,b)`` written with increasing indices; reversing costs a sign."""
    if a < b:
        return 1, Label(kind, (a, b))
    return -1, Label(kind, (b, a))


def _other(kind: str) -> str:
    return "uu" if kind == "u" else "u"


def generator_action(gen: Label, v: Label) -> Signed:
    """Action of the reflection labelled ``gen`` on the basis label ``v``."""
    if gen.kind == "r":
        k = gen.idx[0]
        if v.kind == "r":
            return 1, v
        return 1, (v if k not in v.idx else Label(_other(v.kind), v.idx))

    k, l = gen.idx
    sigma = {k: l, l: k}

    if v.kind == "r":
        m = v.idx[0]
        return 1, Label.r(sigma.get(m, m))

    i, j = v.idx
    si, sj = sigma.get(i, i), sigma.get(j, j)
    if gen.kind == "u":
        return _ordered(v.kind, si, sj)

    # gen = s_k s_l (kl)
    common = len({k, l} & {i, j})
    if common == 2:
        return -1, v
    if common == 0:
        return 1, v
    return _ordered(_other(v.kind), si, sj)


def factorize(g: SignedPermutation, series: str) -> list[Label]:
    """Reflection labels whose product, left to right, equals ``g``."""
    n = g.n
    # g = F * P with P the plain permutation and F a diagonal sign change
    flips = [g.perm[i] + 1 for i in range(n) if g.signs[i] < 0]
    flips.sort()
    word: list[Label] = []
    if series == "B":
        word += [Label.r(k) for k in flips]
    else:
        if len(flips) % 2:
            raise ValueError(f"{g} has an odd number of sign changes; not in {series}_{n}")
        if flips and series == "A":
            raise ValueError(f"{g} is not a permutation")
        for a, b in zip(flips[::2], flips[1::2]):
            # s_a s_b = [s_a s_b (ab)] (ab)
            word += [Label.uu(a, b), Label.u(a, b)]
    q = list(g.perm)
    taus: list[Label] = []
    for i in range(n):
        j = q[i]
        if j != i:
            # left-multiply by (i j): fixes i, keeps smaller points fixed
            for m in range(n):
                if q[m] == i:
                    q[m] = j
            q[i] = i
            taus.append(Label.u(i + 1, j + 1))
    return word + taus


@dataclass
class BraidedSpace:
    spec: GroupSpec
    labels: list
    action: dict = field(repr=False)  # (generator label, label) -> (sign, label)
    coaction_table: dict = field(repr=False)  # label -> SignedPermutation

    @cached_property
    def index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def act_generator(self, gen: Label, v: Label) -> Signed:
        return self.action[(gen, v)]

    def act(self, g: SignedPermutation, v: Label) -> Signed:
        sign = 1
        for gen in reversed(factorize(g, self.spec.series)):
            s, v = self.action[(gen, v)]
            sign *= s
        return sign, v

    def coaction(self, v: Label) -> SignedPermutation:
        try:
            return self.coaction_table[v]
        except KeyError:
            raise KeyError(f"{v} is not a basis label of Y_{self.spec}") from None


def build_yd(spec: GroupSpec) -> BraidedSpace:
    group = Group(spec)
    labels = [s.label for s in group.reflections]
    action = {}
    for gen in labels:
        for v in labels:
            action[(gen, v)] = generator_action(gen, v)
    coaction = {s.label: s.element for s in group.reflections}
    return BraidedSpace(spec, labels, action, coaction)


def coaction(y: BraidedSpace, label: Label) -> SignedPermutation:
    return y.coaction(label)


def braiding(y: BraidedSpace, a: Label, b: Label) -> tuple:
    """Psi(a (x) b) = (deg(a) |> b) (x) a, returned as (sign, b', a)."""
    s, b2 = y.act_generator(a, b)
    return s, b2, a


def braiding_matrix(y: BraidedSpace) -> SparseMatrix:
    n = y.dim
    idx = y.index
    entries = {}
    for a in y.labels:
        for b in y.labels:
            s, b2, a2 = braiding(y, a, b)
            entries[(idx[b2] * n + idx[a2], idx[a] * n + idx[b])] = s
    return SparseMatrix(n * n, n * n, entries)


def _braid_on_triple(y: BraidedSpace, word: tuple, pos: int) -> tuple:
    sign, a, b = braiding(y, word[pos], word[pos + 1])
    return sign, word[:pos] + (a, b) + word[pos + 2 :]


def check_braid_relation(y: BraidedSpace) -> bool:
    """Psi12 Psi23 Psi12 == Psi23 Psi12 Psi23 on every basis triple."""
    for a in y.labels:
        for b in y.labels:
            for c in y.labels:
                lhs_sign, lhs = 1, (a, b, c)
                for pos in (0, 1, 0):
                    s, lhs = _braid_on_triple(y, lhs, pos)
                    lhs_sign *= s
                rhs_sign, rhs = 1, (a, b, c)
                for pos in (1, 0, 1):
                    s, rhs = _braid_on_triple(y, rhs, pos)
                    rhs_sign *= s
                if (lhs_sign, lhs) != (rhs_sign, rhs):
                    return False
    return True


def check_yd_condition(y: BraidedSpace, elements=None) -> bool:
    """deg(g |> v) == g deg(v) g^-1 for the given elements (default: generators)."""
    if elements is None:
        elements = [y.coaction(lab) for lab in y.labels]
    for g in elements:
        ginv = g.inverse()
        for v in y.labels:
            _, w = y.act(g, v)
            if y.coaction(w) != g * y.coaction(v) * ginv:
                return False
    return True


def check_display_consistency(y: BraidedSpace) -> bool:
    """Each generator acts on labels as a signed permutation matching its conjugation."""
    for gen in y.labels:
        g = reflection_element(y.spec.rank, gen)
        images = set()
        for v in y.labels:
            s, w = y.act_generator(gen, v)
            if label_of(g * y.coaction(v) * g.inverse()) != w:
                return False
            images.add(w)
        if len(images) != y.dim:
            return False
    return True
