"""Command-line front end.  JSON goes to stdout, a one-line summary to stderr.

Exit codes: 0 all checks pass, 1 a computed value disagrees with printed data,
2 an internal invariant failed, 3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .beerkit import algorithm_reduce, build_beer, verification_report
from .beerkit.report import PRINTED_DUAL
from .exactla import QQ, Field
from .morphcheck import (
    build_map,
    coaction_compatible,
    equivariant,
    perfect_subquotient_degree2,
    relations_preserved,
)
from .quadpres import PairingConvention, graded_dimension
from .reflgroups import GroupSpec, Label, ReducibleGroupWarning
from .rewrite import (
    MonomialOrder,
    build_rewriting_system,
    count_normal_words,
    normal_form,
    pbw_confluent,
    series_inverse,
    truncated_completion,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INTERNAL, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def _poly_str(poly) -> list:
    return [[str(c), [str(l) for l in w]] for w, c in sorted(poly.items(), key=lambda t: [str(l) for l in t[0]])]


def _spec(args) -> GroupSpec:
    if args.group is None or args.rank is None:
        raise InputError("--group and --rank are required")
    try:
        return GroupSpec(args.group.upper(), args.rank)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _field(args) -> Field:
    try:
        return Field.parse(args.field)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _order(args, spec: GroupSpec, labels) -> tuple[str, MonomialOrder]:
    name = args.order or ("paperB" if spec.series == "B" else "paperD")
    try:
        return name, MonomialOrder.parse(name, labels)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _parse_word(text: str) -> tuple:
    try:
        return tuple(Label.parse(tok) for tok in text.replace(")", ") ").split())
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_present(args):
    spec = _spec(args)
    b = build_beer(spec)
    return {"spec": str(spec), "lambda_part": b.lam.to_json(), "relation_dim": b.lam.relations.dim}, EXIT_OK


def cmd_kernel(args):
    spec = _spec(args)
    b = build_beer(spec)
    return {"spec": str(spec), "quad_kernel": b.quad.to_json(), "relation_dim": b.quad.relations.dim}, EXIT_OK


def cmd_dual(args):
    spec = _spec(args)
    conv = PairingConvention(args.pairing)
    d = build_beer(spec).dual(conv)
    return {"spec": str(spec), "dual": d.to_json(), "relation_dim": d.relations.dim}, EXIT_OK


def cmd_hilbert(args):
    spec = _spec(args)
    N = args.degree
    if args.from_dual is not None:
        if args.from_dual == "printed":
            if spec not in PRINTED_DUAL:
                raise InputError(f"no printed dual polynomial for {spec}")
            poly, source = PRINTED_DUAL[spec], "printed"
        elif args.from_dual == "computed":
            d = build_beer(spec).dual()
            poly, m = [], 0
            while (x := graded_dimension(d, m)) != 0:
                poly.append(x)
                m += 1
            source = "computed"
        else:
            try:
                poly = [int(t) for t in args.from_dual.split(",")]
            except ValueError as exc:
                raise InputError(f"bad coefficient list {args.from_dual!r}") from exc
            source = "given"
        try:
            series = series_inverse(poly, N)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return {"spec": str(spec), "dual_polynomial": poly, "source": source, "series": series}, EXIT_OK
    fld = _field(args)
    b = build_beer(spec)
    p = b.dual(PairingConvention(args.pairing)) if args.dual else b.lam
    dims = [graded_dimension(p, m, QQ if m <= 4 else fld) for m in range(N + 1)]
    tags = [QQ.name if m <= 4 else fld.name for m in range(N + 1)]
    return {"spec": str(spec), "algebra": "dual" if args.dual else "U", "dims": dims, "fields": tags}, EXIT_OK


def cmd_pbw(args):
    spec = _spec(args)
    d = build_beer(spec).dual(PairingConvention(args.pairing))
    name, order = _order(args, spec, d.labels)
    rs = build_rewriting_system(d, order)
    conf = pbw_confluent(rs)
    out = {
        "spec": str(spec),
        "order": name,
        "confluent": conf.confluent,
        "overlaps_checked": conf.checked,
        "t_set": sorted(f"{a} {b}" for a, b in rs.t_labels()),
        "failing_overlaps": [
            {"word": " ".join(map(str, rs.spell(w))), "difference": _poly_str({rs.spell(k): v for k, v in diff.items()})}
            for w, diff in conf.failing
        ],
        "normal_word_counts": [count_normal_words(rs, m) for m in range(args.degree + 1)],
        "dual_dims": [graded_dimension(d, m) for m in range(args.degree + 1)],
    }
    return out, EXIT_OK


def cmd_reduce(args):
    spec = _spec(args)
    word = _parse_word(args.word)
    b = build_beer(spec)
    for lab in word:
        if lab not in b.lam.index:
            raise InputError(f"{lab} is not a generator for {spec}")
    conv = PairingConvention(args.pairing)
    red = algorithm_reduce(spec, word, conv)
    d = b.dual(conv)
    _, order = _order(args, spec, d.labels)
    rs = build_rewriting_system(d, order)
    if len(word) >= 3:
        rs = truncated_completion(rs, max(len(word), 3))
    lhs = normal_form(rs, {rs.word(word): 1})
    rhs = {} if red.zero else normal_form(rs, {rs.word(red.monomial.word()): red.coeff})
    out = {
        "input": " ".join(map(str, word)),
        "zero": red.zero,
        "sign": red.coeff,
        "reduced": None if red.zero else str(red.monomial),
        "steps": red.steps,
        "normal_form": _poly_str({rs.spell(w): c for w, c in lhs.items()}),
        "agreement": lhs == rhs,
    }
    return out, EXIT_OK if lhs == rhs else EXIT_INTERNAL


def cmd_morphism(args):
    try:
        m = build_map(args.kind)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    ok, failing = relations_preserved(m)
    perfect = perfect_subquotient_degree2(m)
    bad_coaction = coaction_compatible(m)
    bad_action = equivariant(m)
    out = {
        "map": str(m),
        "source": str(m.source),
        "target": str(m.target),
        "images": {str(a): f"{'-' if s < 0 else ''}{b}" for a, s, b in m.images},
        "relations_preserved": ok,
        "failing_relations": [_poly_str(p) for p in failing],
        "perfect_subquotient_degree2": perfect,
        "coaction_compatible": not bad_coaction,
        "equivariant": not bad_action,
    }
    if bad_coaction or bad_action:
        return out, EXIT_INTERNAL
    return out, EXIT_OK if ok and perfect else EXIT_MISMATCH


def cmd_verify(args):
    spec = _spec(args)
    fld = _field(args)
    conv = PairingConvention(args.pairing)
    order = args.order or ("paperB" if spec.series == "B" else "paperD")
    b = build_beer(spec)
    _order(args, spec, b.labels)
    rep = verification_report(spec, args.degree, conv, order, None if fld.exact else fld)
    out = rep.to_json()
    if rep.internal_errors:
        return out, EXIT_INTERNAL
    return out, EXIT_MISMATCH if rep.mismatches else EXIT_OK


COMMANDS = {
    "present": cmd_present,
    "kernel": cmd_kernel,
    "dual": cmd_dual,
    "hilbert": cmd_hilbert,
    "pbw": cmd_pbw,
    "reduce": cmd_reduce,
    "morphism": cmd_morphism,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", choices=["A", "B", "D", "a", "b", "d"])
    common.add_argument("--rank", type=int)
    common.add_argument("--degree", type=int, default=4)
    common.add_argument("--order")
    common.add_argument("--pairing", choices=[c.value for c in PairingConvention], default="straight")
    common.add_argument("--field", default="rational")
    common.add_argument("--out")
    parser = _Parser(prog="beerkoszul", description="Exact checks for BEER algebras and their quadratic duals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "hilbert":
            p.add_argument("--from-dual", nargs="?", const="printed", default=None)
            p.add_argument("--dual", action="store_true", help="dimensions of the dual instead of U")
        elif name == "reduce":
            p.add_argument("word")
        elif name == "morphism":
            p.add_argument("kind")
    return parser


def _summary(command: str, out: dict, code: int) -> str:
    if command == "verify":
        s = out["summary"]
        return f"{out['spec']}: {s['pass']} pass, {s['mismatch']} mismatch, {s['unprinted']} unprinted (exit {code})"
    return f"{command}: exit {code}"


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.degree < 0:
        print("error: --degree must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ReducibleGroupWarning)
            out, code = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # any escape here is a bug, not bad input
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    text = json.dumps(out, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    print(_summary(args.command, out, code), file=sys.stderr)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
