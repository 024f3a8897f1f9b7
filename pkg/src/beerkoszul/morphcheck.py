"""Generator-level maps between BEER algebras and their degree-2 checks.

Maps send labels to labels of the target (``u(ij) -> u(ij)``, and for a rank
step also ``uu(ij) -> uu(ij)``, ``r(k) -> r(k)``), together with the group
embedding ``j`` that makes them compatible with the coactions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .beerkit.algebra import BeerAlgebra, build_beer
from .exactla import Subspace, intersect
from .reflgroups import GroupSpec, Label, SignedPermutation

KINDS = ("AtoD", "AtoB", "step", "identity")


@dataclass(frozen=True)
class GeneratorMap:
    kind: str
    source: GroupSpec
    target: GroupSpec
    images: tuple  # ((source label, sign, target label), ...)

    @property
    def table(self) -> dict:
        return {a: (s, b) for a, s, b in self.images}

    def embed(self, g: SignedPermutation) -> SignedPermutation:
        """The group homomorphism j: pad with fixed coordinates."""
        extra = self.target.rank - g.n
        return SignedPermutation(g.perm + tuple(range(g.n, g.n + extra)), g.signs + (1,) * extra)

    def __str__(self):
        if self.kind == "step":
            return f"step:{self.source.series}:{self.source.rank}"
        if self.kind == "identity":
            return f"identity:{self.source}"
        return f"{self.kind}:{self.source.rank}"


def parse_kind(text: str) -> tuple[str, GroupSpec, GroupSpec]:
    parts = text.split(":")
    try:
        if parts[0] in ("AtoD", "AtoB") and len(parts) == 2:
            n = int(parts[1])
            return parts[0], GroupSpec("A", n), GroupSpec(parts[0][-1], n)
        if parts[0] == "step" and len(parts) == 3:
            s = GroupSpec(parts[1].upper(), int(parts[2]))
            return "step", s, GroupSpec(s.series, s.rank + 1)
        if parts[0] == "identity" and len(parts) == 3:
            s = GroupSpec(parts[1].upper(), int(parts[2]))
            return "identity", s, s
    except ValueError as exc:
        raise ValueError(f"bad map kind {text!r}: {exc}") from exc
    raise ValueError(f"bad map kind {text!r}; expected AtoD:n, AtoB:n, step:S:n or identity:S:n")


def build_map(kind: str) -> GeneratorMap:
    name, source, target = parse_kind(kind)
    src = build_beer(source)
    tgt_labels = set(build_beer(target).labels)
    images = []
    for lab in src.labels:
        if lab not in tgt_labels:
            raise ValueError(f"{lab} has no image in {target}")
        images.append((lab, 1, lab))
    return GeneratorMap(name, source, target, tuple(images))


def _image_vector(m: GeneratorMap, src: BeerAlgebra, tgt: BeerAlgebra, vec: dict) -> dict:
    n_s, n_t = src.lam.ngens, tgt.lam.ngens
    table = m.table
    out = {}
    for c, v in vec.items():
        a, b = divmod(c, n_s)
        sa, la = table[src.labels[a]]
        sb, lb = table[src.labels[b]]
        out[tgt.lam.index[la] * n_t + tgt.lam.index[lb]] = sa * sb * v
    return out


def coaction_compatible(m: GeneratorMap) -> list[Label]:
    """Labels whose image has the wrong degree; empty when compatible."""
    src, tgt = build_beer(m.source), build_beer(m.target)
    bad = []
    for lab, (_, img) in m.table.items():
        if tgt.y.coaction(img) != m.embed(src.y.coaction(lab)):
            bad.append(lab)
    return bad


def equivariant(m: GeneratorMap) -> list[tuple]:
    """(generator, label) pairs where the map fails to intertwine the actions."""
    src, tgt = build_beer(m.source), build_beer(m.target)
    table = m.table
    bad = []
    for gen in src.labels:
        for v in src.labels:
            s1, w = src.y.act_generator(gen, v)
            sw, w_img = table[w]
            sv, v_img = table[v]
            s2, w2 = tgt.y.act(m.embed(src.y.coaction(gen)), v_img)
            if (s1 * sw, w_img) != (s2 * sv, w2):
                bad.append((gen, v))
    return bad


def _relations(b: BeerAlgebra, which: str) -> Subspace:
    return (b.lam if which == "lambda" else b.quad).relations


def relations_preserved(m: GeneratorMap, which: str = "lambda") -> tuple[bool, list]:
    """Every basis relation of the source maps into the target relations."""
    src, tgt = build_beer(m.source), build_beer(m.target)
    target = _relations(tgt, which).echelon()
    failing = []
    for vec in _relations(src, which).vectors():
        img = _image_vector(m, src, tgt, vec)
        if target.reduce(img):
            failing.append(src.lam.poly(vec))
    return not failing, failing


def perfect_subquotient_degree2(m: GeneratorMap, which: str = "lambda") -> bool:
    """R_target intersected with the image of V (x) V equals the image of R_source."""
    src, tgt = build_beer(m.source), build_beer(m.target)
    n_s = src.lam.ngens
    ambient = tgt.lam.ngens ** 2
    square = Subspace.span(
        [_image_vector(m, src, tgt, {c: 1}) for c in range(n_s * n_s)],
        ambient,
    )
    pulled = intersect(_relations(tgt, which), square)
    pushed = Subspace.span(
        [_image_vector(m, src, tgt, vec) for vec in _relations(src, which).vectors()],
        ambient,
    )
    return pulled == pushed
