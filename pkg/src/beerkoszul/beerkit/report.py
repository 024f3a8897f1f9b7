"""Cross-checks of computed data against printed values, as a JSON-ready report."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from ..exactla import DEFAULT_PRIME, QQ, Field, Subspace
from ..quadpres import PairingConvention, graded_dimension, relation_list_check
from ..reflgroups import GroupSpec, Label, labels_for
from ..rewrite import (
    MonomialOrder,
    build_rewriting_system,
    count_normal_words,
    koszul_defect,
    normal_form,
    pbw_confluent,
    series_inverse,
    truncated_completion,
)
from .algebra import build_beer
from .monomials import reduced_monomials
from .reduction import algorithm_reduce, random_words
from .relations import InapplicableLemma, paper_relations

PASS, MISMATCH, UNPRINTED = "PASS", "MISMATCH", "UNPRINTED"

u, uu, r = Label.u, Label.uu, Label.r

PRINTED_DUAL = {
    GroupSpec("D", 4): [1, 12, 21, 4],
    GroupSpec("B", 4): [1, 72, 51, 5],
}
PRINTED_SERIES = {
    GroupSpec("D", 4): [1, 12, 123, 1228, 12201, 121116],
    GroupSpec("B", 4): [1, 72, 5133, 365909, 26084025, 1859414106],
}
PRINTED_TOTAL = {GroupSpec("D", 4): 38}


def _w(*labs):
    return tuple(labs)


PRINTED_D4_MONOMIALS = {
    2: [
        _w(u(2, 3), uu(1, 2)), _w(u(2, 4), uu(1, 2)), _w(u(3, 4), uu(2, 3)),
        _w(u(1, 2), u(3, 4)), _w(u(1, 3), u(2, 4)), _w(u(1, 4), u(2, 3)),
        _w(u(1, 2), uu(3, 4)), _w(u(1, 3), uu(2, 4)), _w(u(1, 4), uu(2, 3)),
        _w(uu(1, 2), u(3, 4)), _w(uu(1, 3), u(2, 4)), _w(uu(1, 4), u(2, 3)),
        _w(uu(1, 2), uu(3, 4)), _w(uu(1, 3), uu(2, 4)), _w(uu(1, 4), uu(2, 3)),
        _w(u(1, 2), u(1, 3)), _w(u(1, 2), u(1, 4)), _w(u(1, 2), uu(1, 3)),
        _w(u(1, 2), uu(1, 4)), _w(u(2, 3), u(2, 4)), _w(u(2, 3), uu(2, 4)),
    ],
    3: [
        _w(u(1, 2), u(1, 3), u(1, 4)), _w(u(1, 2), u(1, 4), uu(1, 3)),
        _w(u(1, 2), u(1, 3), uu(1, 4)), _w(u(2, 3), u(2, 4), uu(1, 2)),
    ],
}  # fmt: skip


def printed_t_set(spec: GroupSpec) -> set:
    """The admissible-pair list as printed, read with the smaller pair first where types agree."""
    n = spec.rank
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    out = set()
    for p, q in itertools.permutations(pairs, 2):
        if set(p) & set(q):
            continue
        if p < q:
            out.add((u(*p), u(*q)))
            out.add((uu(*p), uu(*q)))
        out.add((u(*p), uu(*q)))
    for k, j, l in itertools.combinations(range(1, n + 1), 3):
        out |= {(u(k, j), u(k, l)), (u(k, j), uu(k, l)), (u(j, l), uu(k, j))}
    if spec.series == "B":
        for i, j in pairs:
            for k in range(1, n + 1):
                if k not in (i, j):
                    out |= {(u(i, j), r(k)), (uu(i, j), r(k))}
            out.add((u(i, j), r(i)))
    return out


@dataclass
class Check:
    id: str
    anchor: str
    computed: object
    printed: object = None
    status: str = UNPRINTED

    def to_json(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "computed": self.computed, "printed": self.printed, "status": self.status}


@dataclass
class VerificationReport:
    spec: GroupSpec
    conventions: dict
    checks: list = field(default_factory=list)
    internal_errors: list = field(default_factory=list)

    def add(self, id: str, anchor: str, computed, printed=None, status: str | None = None):
        if status is None:
            status = UNPRINTED if printed is None else (PASS if computed == printed else MISMATCH)
        self.checks.append(Check(id, anchor, computed, printed, status))

    def invariant(self, id: str, anchor: str, computed: dict, holds: bool):
        """An internal consistency check; a failure is an internal error, not a mismatch."""
        computed = dict(computed, holds=holds)
        self.checks.append(Check(id, anchor, computed, None, UNPRINTED))
        if not holds:
            self.internal_errors.append(id)

    @property
    def summary(self) -> dict:
        counts = {s: sum(1 for c in self.checks if c.status == s) for s in (PASS, MISMATCH, UNPRINTED)}
        return {
            "pass": counts[PASS],
            "mismatch": counts[MISMATCH],
            "unprinted": counts[UNPRINTED],
            "internal_errors": sorted(self.internal_errors),
        }

    @property
    def mismatches(self) -> list:
        return [c for c in self.checks if c.status == MISMATCH]

    def to_json(self) -> dict:
        return {
            "spec": str(self.spec),
            "conventions": self.conventions,
            "checks": [c.to_json() for c in self.checks],
            "summary": self.summary,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def _word_str(w) -> str:
    return " ".join(map(str, w))


def _relation_checks(rep: VerificationReport, beer, spec: GroupSpec):
    groups = {"quad-kernel": (beer.quad, ("L2.5", "L2.9")), "lambda-part": (beer.lam, ("L2.7", "L2.10"))}
    for target, (pres, lemmas) in groups.items():
        union = []
        for lemma in lemmas:
            try:
                rels = paper_relations(spec, lemma)
            except InapplicableLemma:
                continue
            check = relation_list_check(pres, [x.poly for x in rels])
            failing = [x.name for x, ok in zip(rels, check.contained) if not ok]
            rep.add(
                f"relations.{lemma}.contained",
                f"printed relation list {lemma} inside the {target} relations",
                {"listed": len(rels), "contained": len(rels) - len(failing), "failing": failing},
                {"listed": len(rels), "contained": len(rels), "failing": []},
            )
            union += rels
        if not union:
            continue
        check = relation_list_check(pres, [x.poly for x in union])
        rep.add(
            f"relations.{target}.span",
            f"printed relation lists span the {target} relations",
            {"span_equal": check.span_equal, "independent": check.independent_count, "dim_R": check.relation_dim},
            {"span_equal": True},
            PASS if check.span_equal else MISMATCH,
        )


def _dual_relation_checks(rep: VerificationReport, beer, spec: GroupSpec):
    for lemma in ("quadrel1", "L3.1", "L3.3dual"):
        try:
            rels = paper_relations(spec, lemma)
        except InapplicableLemma:
            continue
        if not rels:
            continue
        per_conv = {}
        for c in PairingConvention:
            check = relation_list_check(beer.dual(c), [x.poly for x in rels])
            per_conv[c.value] = [x.name for x, ok in zip(rels, check.contained) if not ok]
        ok = [c for c, bad in per_conv.items() if not bad]
        rep.add(
            f"dual-relations.{lemma}",
            f"printed dual relations {lemma} inside the dual relation space",
            {"failing_by_convention": per_conv, "conventions_reproducing": ok},
            {"conventions_reproducing": "at least one"},
            PASS if ok else MISMATCH,
        )


def verification_report(
    spec: GroupSpec,
    maxdeg: int = 4,
    convention: PairingConvention = PairingConvention.STRAIGHT,
    order: str | None = None,
    fld: Field | None = None,
    agreement_samples: int = 1000,
) -> VerificationReport:
    """Run every cross-check for ``spec``; mismatches are recorded, never raised."""
    fld = fld or Field(DEFAULT_PRIME)
    order = order or ("paperB" if spec.series == "B" else "paperD")
    beer = build_beer(spec)
    dual = beer.dual(convention)
    N = len(beer.labels)
    backends = {m: (QQ.name if m <= 4 else fld.name) for m in range(maxdeg + 1)}
    rep = VerificationReport(
        spec,
        {
            "pairing": convention.value,
            "lambda_on_r": "r(k) acts with sign +1 on every label",
            "order": order,
            "fields_by_degree": {str(m): name for m, name in backends.items()},
        },
    )

    # degree-1 and degree-2 sanity
    rep.invariant("generators", "one generator per reflection", {"count": N}, N == len(labels_for(spec)))
    for c in PairingConvention:
        d2 = graded_dimension(beer.dual(c), 2)
        rep.invariant(
            f"duality.{c.value}",
            "dim of dual degree 2 equals dim R",
            {"dual_deg2": d2, "dim_R": beer.lam.relations.dim},
            d2 == beer.lam.relations.dim,
        )
    same = beer.dual(PairingConvention.STRAIGHT).relations == beer.dual(PairingConvention.REVERSED).relations
    rep.add("duality.conventions-agree", "both pairings give the same dual", same)
    if spec.series == "A":
        rep.invariant("lambda.tr-span", "Lambda-part equals the tr_n relation span", {}, bool(beer.tr_span_equal))

    _relation_checks(rep, beer, spec)
    _dual_relation_checks(rep, beer, spec)

    # dual Hilbert data
    dual_dims = []
    m = 0
    while True:
        d = graded_dimension(dual, m)
        if d == 0:
            break
        dual_dims.append(d)
        m += 1
    printed_dual = PRINTED_DUAL.get(spec)
    top = max(len(dual_dims), len(printed_dual or []))
    for m in range(top):
        computed = {"linear_algebra": dual_dims[m] if m < len(dual_dims) else 0}
        if spec.series != "A":
            computed["pattern"] = len(reduced_monomials(spec, m, "printed"))
            computed["complete_pattern"] = len(reduced_monomials(spec, m, "complete"))
        printed = printed_dual[m] if printed_dual and m < len(printed_dual) else None
        status = None if printed is None else (PASS if computed["linear_algebra"] == printed else MISMATCH)
        rep.add(f"dual-hilbert.deg{m}", "dual Hilbert polynomial coefficient", computed, printed, status)
    if spec.series != "A":
        complete_ok = all(
            len(reduced_monomials(spec, m, "complete")) == (dual_dims[m] if m < len(dual_dims) else 0)
            for m in range(len(dual_dims) + 1)
        )
        rep.invariant("dual-hilbert.complete-pattern", "complete block family counts the dual", {}, complete_ok)
    total = sum(dual_dims)
    rep.add("dual-total-dimension", "total dimension of the dual", total, PRINTED_TOTAL.get(spec))

    # the algebra itself
    u_dims = [graded_dimension(beer.lam, m, QQ if m <= 4 else fld) for m in range(maxdeg + 1)]
    predicted = series_inverse(dual_dims, max(maxdeg, 5))
    printed_series = PRINTED_SERIES.get(spec)
    for m in range(max(maxdeg + 1, len(printed_series or []))):
        if m <= maxdeg:
            computed = {"value": u_dims[m], "method": f"linear algebra over {backends[m]}"}
        else:
            computed = {"value": predicted[m], "method": "inversion of the computed dual polynomial"}
        printed = printed_series[m] if printed_series and m < len(printed_series) else None
        status = None if printed is None else (PASS if computed["value"] == printed else MISMATCH)
        rep.add(f"hilbert.deg{m}", "Hilbert series coefficient", computed, printed, status)
    defect = koszul_defect(u_dims, dual_dims, maxdeg)
    rep.add(
        "koszul.numerical",
        "P(t) P^!(-t) = 1 through the computed degrees",
        {"coefficients": defect},
        {"coefficients": [1] + [0] * maxdeg},
    )
    if printed_dual:
        inv = series_inverse(printed_dual, len(printed_series) - 1)
        rep.add("printed-series-inversion", "printed series is the inverse of the printed dual polynomial", inv, printed_series)

    # printed monomial lists
    if spec == GroupSpec("D", 4):
        rs_full = truncated_completion(build_rewriting_system(dual, MonomialOrder.parse(order, dual.labels)), 4)
        for m, words in PRINTED_D4_MONOMIALS.items():
            pattern = {mono.word() for mono in reduced_monomials(spec, m, "printed")}
            nfs = [normal_form(rs_full, {rs_full.word(w): 1}) for w in words]
            cols = sorted({w for nf in nfs for w in nf})
            idx = {w: i for i, w in enumerate(cols)}
            rank = Subspace.span([{idx[w]: c for w, c in nf.items()} for nf in nfs], max(len(cols), 1)).dim
            rep.add(
                f"printed-monomials.deg{m}",
                "printed list of dual basis monomials",
                {
                    "listed": len(words),
                    "independent_in_dual": rank,
                    "dual_dimension": dual_dims[m],
                    "missing_from_pattern": sorted(_word_str(w) for w in pattern - set(words)),
                    "outside_pattern": sorted(_word_str(w) for w in set(words) - pattern),
                },
                {"listed": len(words), "independent_in_dual": len(words), "dual_dimension": len(words)},
            )

    # PBW data
    if spec.series != "A":
        rs = build_rewriting_system(dual, MonomialOrder.parse(order, dual.labels))
        t_computed = rs.t_labels()
        t_printed = printed_t_set(spec)
        rep.add(
            f"t-set.{order}",
            "admissible pairs for the stated order",
            {
                "size": len(t_computed),
                "missing_from_printed": sorted(_word_str(w) for w in t_computed - t_printed),
                "printed_but_not_admissible": sorted(_word_str(w) for w in t_printed - t_computed),
            },
            {"size": len(t_printed), "missing_from_printed": [], "printed_but_not_admissible": []},
        )
    for name in sorted({order, "lex"}):
        rs = build_rewriting_system(dual, MonomialOrder.parse(name, dual.labels))
        conf = pbw_confluent(rs)
        printed = True if name == order and spec.series != "A" else None
        rep.add(
            f"pbw.{name}",
            "quadratic rewriting system of the dual is confluent",
            {
                "confluent": conf.confluent,
                "overlaps_checked": conf.checked,
                "failing_overlaps": len(conf.failing),
                "first_failing": [_word_str(rs.spell(w)) for w, _ in conf.failing[:5]],
            },
            None if printed is None else {"confluent": True},
            None if printed is None else (PASS if conf.confluent else MISMATCH),
        )
        counts = [count_normal_words(rs, m) for m in range(min(maxdeg, 4) + 1)]
        dims = [dual_dims[m] if m < len(dual_dims) else 0 for m in range(len(counts))]
        if conf.confluent:
            rep.invariant(f"pbw.{name}.counts", "normal words count the dual when confluent", {"counts": counts}, counts == dims)
        else:
            rep.add(f"pbw.{name}.counts", "normal words of the quadratic system (upper bound)", {"counts": counts, "dims": dims})
        done = truncated_completion(rs, 4)
        done_counts = [count_normal_words(done, m) for m in range(5)]
        dims4 = [dual_dims[m] if m < len(dual_dims) else 0 for m in range(5)]
        rep.invariant(
            f"pbw.{name}.completed-counts",
            "normal words after completion count the dual",
            {"counts": done_counts, "added_rules": len(done.rules) - len(rs.rules)},
            done_counts == dims4,
        )

    # reduction algorithm against normal forms
    if spec.series != "A":
        rs = truncated_completion(build_rewriting_system(dual, MonomialOrder.parse(order, dual.labels)), 4)
        labels = labels_for(spec)
        words = [w for m in range(4) for w in itertools.product(labels, repeat=m)]
        words += random_words(spec, 4, agreement_samples, seed=1)
        bad = []
        nonzero = 0
        for w in words:
            red = algorithm_reduce(spec, w, convention)
            lhs = normal_form(rs, {rs.word(w): 1})
            rhs = {} if red.zero else normal_form(rs, {rs.word(red.monomial.word()): red.coeff})
            nonzero += not red.zero
            if lhs != rhs:
                bad.append(_word_str(w))
        rep.invariant(
            "reduction.agreement",
            "reduction algorithm agrees with normal forms",
            {"words": len(words), "nonzero": nonzero, "disagreements": bad[:10]},
            not bad,
        )
    return rep
