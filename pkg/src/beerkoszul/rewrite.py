"""Deglex rewriting systems over the free algebra on a finite label set.

Words are tuples of generator positions (0..N-1 in the presentation's label
list); polynomials are ``dict[word, coefficient]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Sequence

from .exactla import QQ, Echelon, Field
from .quadpres import QuadraticPresentation
from .reflgroups import Label

_LABEL_RE = re.compile(r"(uu|u|r)\(\s*\d+\s*(?:,\s*\d+\s*)?\)")


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on labels, smallest first; words compare by length then lexicographically."""

    labels: tuple

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("order lists a label twice")

    def rank(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @classmethod
    def parse(cls, text: str, labels: Sequence[Label]) -> "MonomialOrder":
        """``paperD``, ``paperB``, ``lex`` or ``custom:<label list>``."""
        labels = list(labels)
        if text in ("paperD", "paperB"):
            kinds = {"u": 0, "uu": 1, "r": 2}
            return cls(tuple(sorted(labels, key=lambda l: (kinds[l.kind], l.idx))))
        if text == "lex":
            return cls(tuple(sorted(labels, key=str)))
        if text.startswith("custom:"):
            body = text[len("custom:") :]
            found = [Label.parse(m.group(0).replace(" ", "")) for m in _LABEL_RE.finditer(body)]
            if sorted(found) != sorted(labels):
                raise ValueError("custom order must list every generator exactly once")
            return cls(tuple(found))
        raise ValueError(f"unknown order {text!r}")


def deglex_key(word: Sequence[int], rank: Sequence[int]) -> tuple:
    return (len(word), tuple(rank[x] for x in word))


@dataclass
class RewritingSystem:
    labels: list
    order: MonomialOrder
    rules: dict  # lead word -> polynomial (dict word -> coeff), every word smaller than lead
    field: Field = QQ
    completed_to: int = 2
    _nf_cache: dict = dc_field(default_factory=dict, repr=False)

    @property
    def ngens(self) -> int:
        return len(self.labels)

    @property
    def rank(self) -> list:
        r = self.order.rank()
        return [r[lab] for lab in self.labels]

    @property
    def leads(self) -> set:
        return set(self.rules)

    @property
    def max_lead(self) -> int:
        return max((len(w) for w in self.rules), default=2)

    def t_set(self) -> set:
        """Pairs (a, b) of positions such that ab is not a leading word."""
        n = self.ngens
        return {(a, b) for a in range(n) for b in range(n) if (a, b) not in self.rules}

    def t_labels(self) -> set:
        return {(self.labels[a], self.labels[b]) for a, b in self.t_set()}

    def word(self, labels: Iterable[Label]) -> tuple:
        idx = {lab: i for i, lab in enumerate(self.labels)}
        return tuple(idx[l] for l in labels)

    def spell(self, word: Sequence[int]) -> tuple:
        return tuple(self.labels[i] for i in word)

    def _find(self, word: tuple) -> tuple | None:
        lengths = sorted({len(w) for w in self.rules})
        for i in range(len(word)):
            for L in lengths:
                if i + L <= len(word) and word[i : i + L] in self.rules:
                    return i, L
        return None

    def word_normal_form(self, word: tuple) -> dict:
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        hit = self._find(word)
        if hit is None:
            result = {word: self.field(1)}
        else:
            i, L = hit
            result = {}
            p = self.field.p
            for w, c in self.rules[word[i : i + L]].items():
                for w2, c2 in self.word_normal_form(word[:i] + w + word[i + L :]).items():
                    nv = result.get(w2, 0) + c * c2
                    if p is not None:
                        nv %= p
                    if nv == 0:
                        result.pop(w2, None)
                    else:
                        result[w2] = nv
        self._nf_cache[word] = result
        return result

    def is_normal(self, word: Sequence[int]) -> bool:
        return self._find(tuple(word)) is None


def normal_form(rs: RewritingSystem, element: Mapping[tuple, object]) -> dict:
    out: dict = {}
    p = rs.field.p
    for w, c in element.items():
        for w2, c2 in rs.word_normal_form(tuple(w)).items():
            nv = out.get(w2, 0) + rs.field(c) * c2
            if p is not None:
                nv %= p
            if nv == 0:
                out.pop(w2, None)
            else:
                out[w2] = nv
    return out


def build_rewriting_system(p: QuadraticPresentation, o: MonomialOrder) -> RewritingSystem:
    """Rules from R: each relation's deglex-largest word leads."""
    n = p.ngens
    r = o.rank()
    rank = [r[lab] for lab in p.labels]
    words = sorted(range(n * n), key=lambda c: (rank[c // n], rank[c % n]), reverse=True)
    col_of = {c: k for k, c in enumerate(words)}  # word column -> position (largest first)
    ech = Echelon(n * n, p.field)
    for vec in p.relations.vectors():
        ech.add({col_of[c]: v for c, v in vec.items()})
    rules = {}
    for piv, row in ech.rows.items():
        lead = divmod(words[piv], n)
        rhs = {divmod(words[k], n): -v for k, v in row.items() if k != piv}
        rules[lead] = rhs
    return RewritingSystem(list(p.labels), o, rules, p.field)


@dataclass
class ConfluenceResult:
    confluent: bool
    failing: list  # (overlap word, difference polynomial)
    checked: int


def _overlap_difference(rs: RewritingSystem, l1: tuple, l2: tuple, k: int) -> tuple:
    """Both one-step reductions of the overlap l1[:-k] + l2, normalised and subtracted."""
    word = l1 + l2[k:]
    left = {w + l2[k:]: c for w, c in rs.rules[l1].items()}
    right = {l1[: len(l1) - k] + w: c for w, c in rs.rules[l2].items()}
    a = normal_form(rs, left)
    b = normal_form(rs, right)
    diff = dict(a)
    p = rs.field.p
    for w, c in b.items():
        nv = diff.get(w, 0) - c
        if p is not None:
            nv %= p
        if nv == 0:
            diff.pop(w, None)
        else:
            diff[w] = nv
    return word, diff


def pbw_confluent(rs: RewritingSystem) -> ConfluenceResult:
    """Diamond-lemma check of every degree-3 overlap abc with ab and bc leading."""
    failing = []
    checked = 0
    leads = sorted(w for w in rs.rules if len(w) == 2)
    by_first: dict = {}
    for w in leads:
        by_first.setdefault(w[0], []).append(w)
    for l1 in leads:
        for l2 in by_first.get(l1[1], ()):
            checked += 1
            word, diff = _overlap_difference(rs, l1, l2, 1)
            if diff:
                failing.append((word, diff))
    return ConfluenceResult(not failing, failing, checked)


def count_normal_words(rs: RewritingSystem, m: int) -> int:
    """Number of degree-m words containing no leading word."""
    n = rs.ngens
    if m == 0:
        return 1
    L = rs.max_lead
    if L <= 2:
        t = rs.t_set()
        succ = [[b for b in range(n) if (a, b) in t] for a in range(n)]
        counts = [1] * n
        for _ in range(m - 1):
            nxt = [0] * n
            for a in range(n):
                if counts[a]:
                    for b in succ[a]:
                        nxt[b] += counts[a]
            counts = nxt
        return sum(counts)
    # states: the last (L-1) letters of a normal word
    states: dict = {(): 1}
    for _ in range(m):
        nxt: dict = {}
        for suffix, cnt in states.items():
            for a in range(n):
                w = suffix + (a,)
                if any(w[len(w) - k :] in rs.rules for k in range(2, min(L, len(w)) + 1)):
                    continue
                key = w[-(L - 1) :]
                nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
    return sum(states.values())


def enumerate_normal_words(rs: RewritingSystem, m: int) -> list[tuple]:
    words: list[tuple] = [()]
    for _ in range(m):
        words = [w + (a,) for w in words for a in range(rs.ngens) if rs.is_normal(w + (a,))]
    return words


def series_inverse(p: Sequence[int], N: int) -> list[int]:
    """Coefficients c_0..c_N of 1 / p(-t); requires p[0] == 1."""
    if not p or p[0] != 1:
        raise ValueError("constant term must be 1")
    q = [(-1) ** j * a for j, a in enumerate(p)]
    c = [0] * (N + 1)
    c[0] = 1
    for m in range(1, N + 1):
        c[m] = -sum(q[j] * c[m - j] for j in range(1, min(m, len(q) - 1) + 1))
    return c


def series_product(p: Sequence[int], q: Sequence[int], N: int) -> list[int]:
    return [sum(p[j] * q[m - j] for j in range(m + 1) if j < len(p) and m - j < len(q)) for m in range(N + 1)]


def koszul_defect(p: Sequence[int], pdual: Sequence[int], N: int) -> list[int]:
    """Coefficients 0..N of P(t) * P^!(-t); a Koszul pair gives 1, 0, 0, ..."""
    signed = [(-1) ** j * a for j, a in enumerate(pdual)]
    return series_product(p, signed, N)


class CompletionBudgetExceeded(RuntimeError):
    pass


def truncated_completion(rs: RewritingSystem, maxdeg: int, max_rules: int = 200_000) -> RewritingSystem:
    """Adjoin reduced S-polynomials of overlaps, degree by degree, up to ``maxdeg``.

    All relations are homogeneous, so after processing every overlap of length
    at most ``maxdeg`` the normal words of degree <= ``maxdeg`` form a basis.
    """
    if maxdeg < 3:
        raise ValueError("maxdeg must be at least 3")
    out = RewritingSystem(list(rs.labels), rs.order, dict(rs.rules), rs.field, rs.completed_to)
    rank = out.rank
    for d in range(max(3, rs.completed_to + 1), maxdeg + 1):
        leads = sorted(out.rules)
        by_prefix: dict = {}
        for w in leads:
            for k in range(1, len(w)):
                by_prefix.setdefault(w[:k], []).append(w)
        diffs = []
        for l1 in leads:
            for k in range(1, len(l1)):
                for l2 in by_prefix.get(l1[len(l1) - k :], ()):
                    if len(l1) + len(l2) - k != d:
                        continue
                    _, diff = _overlap_difference(out, l1, l2, k)
                    if diff:
                        diffs.append(diff)
        if not diffs:
            out.completed_to = d
            continue
        words = sorted({w for diff in diffs for w in diff}, key=lambda w: deglex_key(w, rank), reverse=True)
        col = {w: i for i, w in enumerate(words)}
        ech = Echelon(len(words), out.field)
        for diff in diffs:
            ech.add({col[w]: c for w, c in diff.items()})
        for piv, row in ech.rows.items():
            out.rules[words[piv]] = {words[k]: -v for k, v in row.items() if k != piv}
        if len(out.rules) > max_rules:
            raise CompletionBudgetExceeded(f"more than {max_rules} rules at degree {d}")
        out._nf_cache = {}
        out.completed_to = d
    return out
