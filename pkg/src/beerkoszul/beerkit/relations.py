"""Explicit relation lists for U(yb_G), B^quad(Y_G) and their quadratic duals.

Each list is fully expanded over admissible index tuples in a fixed order.
A relation is a degree-2 polynomial ``{(a, b): coeff}`` tagged with the name
of the schema it instantiates.  Dual relations use the same labels, read as
the dual basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..quadpres import add_polys, commutator
from ..reflgroups import GroupSpec, Label

u, uu, r = Label.u, Label.uu, Label.r

LEMMAS = ("L2.5", "L2.7", "L2.9", "L2.10", "L3.1", "L3.3dual", "quadrel1")

_APPLICABLE = {
    "L2.5": ("D", "B"),
    "L2.7": ("D", "B"),
    "L2.9": ("B",),
    "L2.10": ("B",),
    "L3.1": ("D", "B"),
    "L3.3dual": ("B",),
    "quadrel1": ("A", "D", "B"),
}


class InapplicableLemma(ValueError):
    pass


@dataclass(frozen=True)
class NamedRelation:
    name: str
    poly: dict

    def __str__(self):
        return self.name


def _mono(a: Label, b: Label, c=1) -> dict:
    return {(a, b): c}


def _eq(lhs: dict, *rhs: dict) -> dict:
    """lhs - sum(rhs)."""
    neg = [{w: -c for w, c in p.items()} for p in rhs]
    return add_polys(lhs, *neg)


def _chain(*terms: dict) -> list[dict]:
    """t0 = t1 = t2 = ... as consecutive differences."""
    return [add_polys(a, {w: -c for w, c in b.items()}) for a, b in zip(terms, terms[1:])]


def _disjoint_pairs(n: int):
    """Unordered pairs {(i,j), (k,l)} of disjoint index pairs, in lex order."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for p, q in itertools.combinations(pairs, 2):
        if not set(p) & set(q):
            yield p, q


def _triples(n: int):
    return itertools.combinations(range(1, n + 1), 3)


def _pairs(n: int):
    return itertools.combinations(range(1, n + 1), 2)


def lemma_2_5(n: int) -> list[NamedRelation]:
    out = []
    for (i, j), (k, l) in _disjoint_pairs(n):
        tag = f"(ij)=({i},{j}),(kl)=({k},{l})"
        out.append(NamedRelation(f"relduo1{tag}", commutator(u(i, j), u(k, l))))
        out.append(NamedRelation(f"relduo2{tag}", commutator(uu(i, j), uu(k, l))))
        out.append(NamedRelation(f"relduo3{tag}", commutator(u(i, j), uu(k, l))))
        out.append(NamedRelation(f"relduo3'{tag}", commutator(u(k, l), uu(i, j))))
    for i, j in _pairs(n):
        tag = f"(ij)=({i},{j})"
        out.append(NamedRelation(f"relduo4{tag}", _mono(u(i, j), u(i, j))))
        out.append(NamedRelation(f"relduo5{tag}", _mono(uu(i, j), uu(i, j))))
        out.append(NamedRelation(f"relduo6{tag}", add_polys(_mono(u(i, j), uu(i, j)), _mono(uu(i, j), u(i, j)))))
    for k, j, l in _triples(n):
        tag = f"(k,j,l)=({k},{j},{l})"
        kj, jl, kl = (k, j), (j, l), (k, l)
        U = lambda p: u(*p)
        W = lambda p: uu(*p)
        out += [
            NamedRelation(f"reltri1{tag}", _eq(_mono(U(jl), U(kj)), _mono(U(kj), U(kl)), _mono(U(kl), U(jl)))),
            NamedRelation(f"reltri2{tag}", _eq(_mono(U(kj), U(jl)), _mono(U(jl), U(kl)), _mono(U(kl), U(kj)))),
            NamedRelation(f"reltri3{tag}", _eq(_mono(W(jl), W(kj)), _mono(W(kj), U(kl)), _mono(U(kl), W(jl)))),
            NamedRelation(f"reltri4{tag}", _eq(_mono(W(kj), W(jl)), _mono(U(jl), W(kl)), _mono(W(kl), U(kj)))),
            NamedRelation(f"reltri5{tag}", _eq(_mono(W(jl), U(kj)), _mono(U(kj), W(kl)), _mono(W(kl), W(jl)))),
            NamedRelation(f"reltri6{tag}", _eq(_mono(W(kj), U(jl)), _mono(W(jl), W(kl)), _mono(W(kl), U(kj)))),
            NamedRelation(f"reltri7{tag}", _eq(_mono(U(jl), W(kj)), _mono(W(kj), W(kl)), _mono(W(kl), U(jl)))),
            NamedRelation(f"reltri8{tag}", _eq(_mono(W(kj), U(jl)), _mono(U(jl), W(kl)), _mono(W(kl), W(kj)))),
        ]
    return out


def lemma_2_7(n: int) -> list[NamedRelation]:
    out = []
    for (i, j), (k, l) in _disjoint_pairs(n):
        tag = f"(ij)=({i},{j}),(kl)=({k},{l})"
        out.append(NamedRelation(f"antirelduo1{tag}", commutator(u(i, j), u(k, l))))
        out.append(NamedRelation(f"antirelduo2{tag}", commutator(uu(i, j), uu(k, l))))
        out.append(NamedRelation(f"antirelduo3{tag}", commutator(u(i, j), uu(k, l))))
        out.append(NamedRelation(f"antirelduo3'{tag}", commutator(u(k, l), uu(i, j))))
    for k, j, l in _triples(n):
        tag = f"(k,j,l)=({k},{j},{l})"
        kj, jl, kl = (k, j), (j, l), (k, l)
        C = commutator
        out += [
            NamedRelation(f"antireltri1{tag}", _eq(C(u(*jl), u(*kj)), C(u(*kj), u(*kl)), C(u(*kl), u(*jl)))),
            NamedRelation(f"antireltri2{tag}", _eq(C(uu(*jl), uu(*kj)), C(uu(*kj), u(*kl)), C(u(*kl), uu(*jl)))),
            NamedRelation(f"antireltri3{tag}", _eq(C(uu(*jl), u(*kj)), C(u(*kj), uu(*kl)), C(uu(*kl), uu(*jl)))),
            NamedRelation(f"antireltri4{tag}", _eq(C(u(*jl), uu(*kj)), C(uu(*kj), uu(*kl)), C(uu(*kl), u(*jl)))),
        ]
    return out


def lemma_2_9_extra(n: int) -> list[NamedRelation]:
    """Extra B_n relations on top of the D-type quadratic-kernel list."""
    out = []
    for i, j in _pairs(n):
        for k in range(1, n + 1):
            if k in (i, j):
                continue
            tag = f"(k)=({k}),(ij)=({i},{j})"
            out.append(NamedRelation(f"bnrel1{tag}", commutator(r(k), u(i, j))))
            out.append(NamedRelation(f"bnrel2{tag}", commutator(r(k), uu(i, j))))
    for j, k in _pairs(n):
        out.append(NamedRelation(f"rcomm(j,k)=({j},{k})", commutator(r(j), r(k))))
    for i, j in _pairs(n):
        tag = f"(ij)=({i},{j})"
        out.append(
            NamedRelation(
                f"bnrel3{tag}",
                add_polys(
                    _mono(r(i), u(i, j)), _mono(uu(i, j), r(i), -1), _mono(r(j), uu(i, j)), _mono(u(i, j), r(j), -1)
                ),
            )
        )
        out.append(
            NamedRelation(
                f"bnrel4{tag}",
                add_polys(
                    _mono(r(j), u(i, j)), _mono(uu(i, j), r(j), -1), _mono(r(i), uu(i, j)), _mono(u(i, j), r(i), -1)
                ),
            )
        )
    return out


def lemma_2_10_extra(n: int) -> list[NamedRelation]:
    """Extra B_n relations on top of the D-type Lambda-part list."""
    out = []
    for i, j in _pairs(n):
        for k in range(1, n + 1):
            if k in (i, j):
                continue
            tag = f"(k)=({k}),(ij)=({i},{j})"
            out.append(NamedRelation(f"bnrel1{tag}", commutator(r(k), u(i, j))))
            out.append(NamedRelation(f"bnrel2{tag}", commutator(r(k), uu(i, j))))
    for i, j in _pairs(n):
        poly = {}
        for a in (r(i), r(j)):
            for b in (u(i, j), uu(i, j)):
                poly = add_polys(poly, commutator(a, b))
        out.append(NamedRelation(f"bnrel5(ij)=({i},{j})", poly))
    return out


def quadrel1(n: int) -> list[NamedRelation]:
    out = []
    for i, j, k in _triples(n):
        terms = [_mono(u(i, j), u(j, k)), _mono(u(i, k), u(j, k)), _mono(u(j, k), u(i, j)), _mono(u(i, j), u(i, k))]
        for s, p in enumerate(_chain(*terms)):
            out.append(NamedRelation(f"quadrel1[{s}](i,j,k)=({i},{j},{k})", p))
    return out


def lemma_3_1(n: int) -> list[NamedRelation]:
    out = list(quadrel1(n))
    for k, j, l in _triples(n):
        tag = f"(k,j,l)=({k},{j},{l})"
        kj, jl, kl = (k, j), (j, l), (k, l)
        chains = {
            "quadrel2": [
                _mono(uu(*jl), uu(*kl)),
                _mono(u(*kj), uu(*jl), -1),
                _mono(u(*kj), uu(*kl), -1),
            ],
            "quadrel3": [
                _mono(uu(*kl), uu(*kj)),
                _mono(u(*jl), uu(*kl)),
                _mono(u(*jl), uu(*kj), -1),
            ],
            "quadrel4": [
                _mono(uu(*kj), uu(*jl)),
                _mono(u(*kl), uu(*jl)),
                _mono(u(*kl), uu(*kj), -1),
            ],
        }
        for name, terms in chains.items():
            for s, p in enumerate(_chain(*terms)):
                out.append(NamedRelation(f"{name}[{s}]{tag}", p))
    for i, j in _pairs(n):
        out.append(NamedRelation(f"quadrel5(ij)=({i},{j})", _mono(u(i, j), uu(i, j))))
    return out


def lemma_3_3_dual(n: int) -> list[NamedRelation]:
    out = []
    for i, j in _pairs(n):
        terms = [_mono(r(i), u(i, j)), _mono(r(i), uu(i, j)), _mono(r(j), u(i, j)), _mono(r(j), uu(i, j))]
        for s, p in enumerate(_chain(*terms)):
            out.append(NamedRelation(f"quadreln6[{s}](ij)=({i},{j})", p))
    return out


def paper_relations(spec: GroupSpec, lemma: str) -> list[NamedRelation]:
    if lemma not in _APPLICABLE:
        raise InapplicableLemma(f"unknown lemma {lemma!r}; expected one of {LEMMAS}")
    if spec.series not in _APPLICABLE[lemma]:
        raise InapplicableLemma(f"{lemma} does not apply to series {spec.series}")
    n = spec.rank
    return {
        "L2.5": lemma_2_5,
        "L2.7": lemma_2_7,
        "L2.9": lemma_2_9_extra,
        "L2.10": lemma_2_10_extra,
        "L3.1": lemma_3_1,
        "L3.3dual": lemma_3_3_dual,
        "quadrel1": quadrel1,
    }[lemma](n)


def tr_relations(n: int) -> list[NamedRelation]:
    """The tr_n presentation: classical Yang-Baxter per triple, commutators for disjoint pairs."""
    out = []
    for i, j, k in _triples(n):
        out.append(
            NamedRelation(
                f"cybe(i,j,k)=({i},{j},{k})",
                add_polys(commutator(u(i, j), u(i, k)), commutator(u(i, j), u(j, k)), commutator(u(i, k), u(j, k))),
            )
        )
    for (i, j), (k, l) in _disjoint_pairs(n):
        out.append(NamedRelation(f"comm(ij)=({i},{j}),(kl)=({k},{l})", commutator(u(i, j), u(k, l))))
    return out
