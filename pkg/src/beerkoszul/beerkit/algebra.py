"""U(yb_G), its quadratic cover and both duals, assembled from the YD module."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache

from ..quadpres import (
    PairingConvention,
    QuadraticPresentation,
    explicit_presentation,
    lambda_part,
    quad_kernel_presentation,
    quadratic_dual,
)
from ..reflgroups import GroupSpec, ReducibleGroupWarning
from ..ydbraid import BraidedSpace, build_yd
from .relations import tr_relations


@dataclass
class BeerAlgebra:
    spec: GroupSpec
    y: BraidedSpace
    quad: QuadraticPresentation  # B^quad(Y_G)
    lam: QuadraticPresentation  # U(yb_G)
    duals: dict = field(default_factory=dict)  # PairingConvention -> presentation
    tr_span_equal: bool | None = None  # A series only
    summands: list = field(default_factory=list)  # orbits of labels under the action

    @property
    def labels(self) -> list:
        return self.lam.labels

    def dual(self, c: PairingConvention = PairingConvention.STRAIGHT) -> QuadraticPresentation:
        return self.duals[c]


def action_orbits(y: BraidedSpace) -> list[list]:
    """Labels grouped by the orbits of the generators' action (ignoring signs)."""
    parent = {lab: lab for lab in y.labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (gen, v), (_, w) in y.action.items():
        a, b = find(v), find(w)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict = {}
    for lab in y.labels:
        groups.setdefault(find(lab), []).append(lab)
    return sorted(groups.values(), key=lambda g: y.labels.index(g[0]))


@lru_cache(maxsize=None)
def build_beer(spec: GroupSpec) -> BeerAlgebra:
    with warnings.catch_warnings():
        if not spec.reducible:
            warnings.simplefilter("ignore", ReducibleGroupWarning)
        y = build_yd(spec)
    if spec.reducible:
        warnings.warn(f"{spec}: D_n with n < 3 is reducible", ReducibleGroupWarning, stacklevel=2)
    quad = quad_kernel_presentation(y)
    lam = lambda_part(quad)
    duals = {c: quadratic_dual(lam, c) for c in PairingConvention}
    tr_equal = None
    if spec.series == "A":
        tr = explicit_presentation(lam.labels, [r.poly for r in tr_relations(spec.rank)])
        tr_equal = tr.relations == lam.relations
        if not tr_equal:
            raise AssertionError(f"{spec}: Lambda-part differs from the tr_n relation span")
    return BeerAlgebra(spec, y, quad, lam, duals, tr_equal, action_orbits(y))
