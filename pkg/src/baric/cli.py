"""baric: check polynomial identities, Peirce-decompose, and classify train
equations of algebras given by .alg files.

Subcommands: check | peirce | train | idempotents | linearize.
Reports are line oriented and deterministic: "CHECK <name>: <verdict> - <detail>"
with verdict PASS/FAIL/ERROR/N/A, or tab-separated rows under --porcelain.
Exit status: 0 all checks pass, 1 some check failed, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import sys

from baric import algfile
from baric.algebra import WeightFunction, format_element, verify_idempotent, verify_weight
from baric.identities import (
    DEG6_DEFECT,
    ExprParseError,
    check_bernstein,
    check_deg6,
    check_jordan,
    check_power_associative,
    expr_format,
    expr_parse,
    linearize,
    mixed_linearize,
)
from baric.numberfield import FieldParseError, parse_field_element
from baric.peirce import (
    SUITES,
    TAGS,
    DecompositionError,
    InvalidIdempotent,
    applicable_suites,
    check_lemma_suite,
    check_product_rules,
    minimal_polynomial,
    peirce_decompose,
)
from baric.solvers import SolverStuck, UnsupportedDimension, find_idempotents, find_weights
from baric.trains import (
    classify_rank3,
    classify_rank4,
    factor_train_poly,
    find_train_equation,
    format_factorization,
    satisfies_train_identity,
    train_defect_expr,
    train_poly,
    train_root_profile,
)

PASS, FAIL, ERROR, NA = "PASS", "FAIL", "ERROR", "N/A"


class Report:
    def __init__(self, porcelain: bool = False):
        self.porcelain = porcelain
        self.rows = []

    def check(self, name: str, verdict: str, detail: str = ""):
        self.rows.append(("check", name, verdict, detail))

    def info(self, name: str, detail: str):
        self.rows.append(("info", name, "", detail))

    def render(self) -> str:
        out = []
        for kind, name, verdict, detail in self.rows:
            if self.porcelain:
                out.append(f"{kind}\t{name}\t{verdict}\t{detail}")
            elif kind == "info":
                out.append(f"INFO {name}: {detail}")
            else:
                line = f"CHECK {name}: {verdict}"
                if detail:
                    line += f" - {detail}"
                out.append(line)
        return "\n".join(out)

    def exit_code(self) -> int:
        verdicts = {v for kind, _, v, _ in self.rows if kind == "check"}
        if ERROR in verdicts:
            return 2
        if FAIL in verdicts:
            return 1
        return 0


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _load(path: str):
    try:
        return algfile.load(path)
    except FileNotFoundError:
        raise algfile.AlgebraFileError(f"no such file: {path}") from None


def _resolve_weight(loaded, weight_arg):
    if weight_arg is not None:
        parts = [p.strip() for p in weight_arg.split(",")]
        w = WeightFunction([parse_field_element(p) for p in parts])
        if len(w.weights) != loaded.algebra.dim:
            raise algfile.AlgebraFileError(
                f"--weight needs {loaded.algebra.dim} comma-separated values"
            )
        ok, violations = verify_weight(loaded.algebra, w)
        if not ok:
            raise algfile.AlgebraFileError(
                f"--weight is not multiplicative; violating pairs: {violations}"
            )
        return w
    return loaded.weight


def cmd_check(args) -> int:
    loaded = _load(args.file)
    if args.dump:
        sys.stdout.write(algfile.dumps(loaded))
        return 0
    if args.which is None:
        return _fail("check needs one of: deg6, bernstein, jordan, pa:<d>")
    report = Report(args.porcelain)
    which = args.which
    if which in ("deg6", "bernstein"):
        w = _resolve_weight(loaded, args.weight)
        if w is None:
            return _fail(f"{which} needs a weight (declare one in the file or pass --weight)")
        ok = check_deg6(loaded.algebra, w) if which == "deg6" else check_bernstein(loaded.algebra, w)
        report.check(which, PASS if ok else FAIL, "identity holds" if ok else "defect is nonzero on generic elements")
    elif which == "jordan":
        ok = check_jordan(loaded.algebra)
        report.check(which, PASS if ok else FAIL, "identity holds" if ok else "defect is nonzero on generic elements")
    elif which.startswith("pa"):
        _, _, dtext = which.partition(":")
        try:
            d = int(dtext) if dtext else 6
        except ValueError:
            return _fail(f"bad power-associativity bound {dtext!r}")
        if d < 4:
            return _fail("power-associativity bound must be >= 4")
        ok = check_power_associative(loaded.algebra, d)
        report.check(which, PASS if ok else FAIL,
                     f"x^i*x^j = x^(i+j) for i,j >= 2, i+j <= {d}" if ok else "some power pair differs")
    else:
        return _fail(f"unknown check {which!r}")
    print(report.render())
    return report.exit_code()


def cmd_peirce(args) -> int:
    loaded = _load(args.file)
    w = _resolve_weight(loaded, args.weight)
    if w is None:
        return _fail("peirce needs a weight (declare one in the file or pass --weight)")
    expr = args.idempotent
    if expr in loaded.elements:
        e = loaded.elements[expr]
    else:
        e = algfile.parse_element_expr(expr, loaded.algebra)
    report = Report(args.porcelain)
    algebra = loaded.algebra
    if not verify_idempotent(algebra, w, e):
        report.check("idempotent", ERROR,
                     f"{format_element(algebra, e)} is not a weight-1 idempotent")
        print(report.render())
        return report.exit_code()
    report.info("idempotent", format_element(algebra, e))
    try:
        D = peirce_decompose(algebra, w, e)
    except DecompositionError as exc:
        report.check("decomposition", ERROR, str(exc))
        print(report.render())
        return report.exit_code()
    report.info("minimal-polynomial", str(minimal_polynomial(D.operator)))
    for tag in TAGS:
        vectors = D.components[tag]
        detail = "; ".join(format_element(algebra, v) for v in vectors) if vectors else "(empty)"
        report.info(f"A_{tag}", detail)
    for rule in check_product_rules(algebra, D):
        target = "+".join(f"A_{t}" for t in rule.targets) if rule.targets else "0"
        if rule.passed:
            report.check(f"rule-{rule.name}", PASS, f"A_{rule.left}*A_{rule.right} in {target}")
        else:
            u, v, p = rule.witnesses[0]
            report.check(f"rule-{rule.name}", FAIL,
                         f"A_{rule.left}*A_{rule.right} not in {target}; witness ({u})*({v}) = {p}")
    live = set(applicable_suites(D))
    for suite in SUITES:
        if suite not in live:
            blockers = [t for t in SUITES[suite] if not D.empty(t)]
            report.check(f"suite-{suite}", NA,
                         "requires " + ", ".join(f"A_{t} = 0" for t in SUITES[suite])
                         + f"; nonzero: {', '.join('A_' + t for t in blockers)}")
            continue
        sr = check_lemma_suite(algebra, D, suite)
        if sr.passed:
            report.check(f"suite-{suite}", PASS, f"{len(sr.items)} identities hold on generic elements")
        else:
            bad = ", ".join(item.label for item in sr.items if not item.passed)
            report.check(f"suite-{suite}", FAIL, f"failing items: {bad}")
    print(report.render())
    return report.exit_code()


def cmd_train(args) -> int:
    loaded = _load(args.file)
    w = _resolve_weight(loaded, args.weight)
    if w is None:
        return _fail("train needs a weight (declare one in the file or pass --weight)")
    if args.max_rank < 2:
        return _fail("--max-rank must be >= 2")
    report = Report(args.porcelain)
    algebra = loaded.algebra
    eq = find_train_equation(algebra, w, args.max_rank)
    if eq is None:
        report.info("train-equation", f"none at rank <= {args.max_rank}")
        print(report.render())
        return report.exit_code()
    defect = train_defect_expr(eq.rank, eq.gammas)
    report.info("train-equation", f"rank {eq.rank}: {expr_format(defect)} = 0")
    poly = train_poly(eq)
    report.info("train-polynomial", str(poly))
    factored = factor_train_poly(poly)
    report.info("factorization", format_factorization(factored))
    ok = satisfies_train_identity(algebra, w, eq.rank, eq.gammas)
    report.check("train-reverify", PASS if ok else FAIL,
                 "defect vanishes identically" if ok else "defect does not vanish (internal inconsistency)")
    if eq.rank == 3:
        res = classify_rank3(eq)
        if res.matched:
            report.check("rank3-form", PASS, f"gamma = {res.gamma}")
        else:
            report.check("rank3-form", FAIL, "matches no admissible rank-3 coefficient family")
    else:
        report.check("rank3-form", NA, f"rank is {eq.rank}")
    if eq.rank == 4:
        res = classify_rank4(eq)
        if res.matched:
            detail = "; ".join(
                f"form {f.form}" + (f" (gamma = {f.gamma})" if f.gamma is not None else "")
                for f in res.forms
            )
            report.check("rank4-form", PASS, detail)
        else:
            report.check("rank4-form", FAIL, "matches no admissible rank-4 coefficient family")
    else:
        report.check("rank4-form", NA, f"rank is {eq.rank}")
    profile = train_root_profile(eq)
    if profile.matched:
        report.check("root-profile", PASS,
                     f"X(X-1)(X-1/2)^{profile.r}(X-l)^{profile.s}(X-lbar)^{profile.t}")
    else:
        report.check("root-profile", NA,
                     "polynomial is not X(X-1)(X-1/2)^r(X-l)^s(X-lbar)^t")
    print(report.render())
    return report.exit_code()


def cmd_idempotents(args) -> int:
    loaded = _load(args.file)
    report = Report(args.porcelain)
    algebra = loaded.algebra
    w = _resolve_weight(loaded, args.weight)
    weights = [w] if w is not None else find_weights(algebra)
    if not weights:
        report.info("weights", "no nonzero weight function exists")
        print(report.render())
        return report.exit_code()
    for w in weights:
        wtext = ", ".join(str(c) for c in w.weights)
        report.info("weight", f"({wtext})")
        families = find_idempotents(algebra, w)
        if not families:
            report.info("idempotents", "none")
            continue
        for fam in families:
            report.info("idempotents", fam.describe(algebra.basis_names))
        verified = all(
            verify_idempotent(algebra, w, fam.instantiate([parse_field_element(str(k))
                                                           for _ in fam.params]))
            for fam in families
            for k in (0, 1, -2)
        )
        report.check("idempotent-verify", PASS if verified else FAIL,
                     "sampled family members square to themselves"
                     if verified else "a sampled member is not idempotent")
    print(report.render())
    return report.exit_code()


def cmd_linearize(args) -> int:
    try:
        expr = expr_parse(args.expr) if args.expr else DEG6_DEFECT
    except ExprParseError as exc:
        return _fail(f"bad --expr: {exc}")
    if args.order == 1:
        out = linearize(expr, args.var, args.first, 1)
    else:
        out = mixed_linearize(expr, args.var, args.first, args.second)
    print(expr_format(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="baric",
        description="exact identity checks, Peirce decompositions and train "
        "equations for commutative baric algebras over Q(l)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run one identity check")
    p.add_argument("file")
    p.add_argument("which", nargs="?", help="deg6 | bernstein | jordan | pa:<d>")
    p.add_argument("--weight", help="comma-separated weight values, e.g. '1,0,0'")
    p.add_argument("--porcelain", action="store_true")
    p.add_argument("--dump", action="store_true", help="re-emit the file canonically and exit")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("peirce", help="Peirce decomposition and component checks")
    p.add_argument("file")
    p.add_argument("--idempotent", required=True,
                   help="element label from the file, or an inline element expression")
    p.add_argument("--weight")
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_peirce)

    p = sub.add_parser("train", help="minimal principal train equation and classification")
    p.add_argument("file")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--weight")
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("idempotents", help="solve for weight-1 idempotents (dim <= 3)")
    p.add_argument("file")
    p.add_argument("--weight")
    p.add_argument("--porcelain", action="store_true")
    p.set_defaults(func=cmd_idempotents)

    p = sub.add_parser("linearize", help="partial linearization of an identity expression")
    p.add_argument("--order", type=int, choices=(1, 2), default=1)
    p.add_argument("--expr", help="expression to linearize (default: the degree-6 defect)")
    p.add_argument("--var", default="x", help="variable being perturbed")
    p.add_argument("--first", default="y", help="fresh variable for order 1")
    p.add_argument("--second", default="z", help="second fresh variable for order 2")
    p.set_defaults(func=cmd_linearize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        algfile.AlgebraFileError,
        FieldParseError,
        ExprParseError,
        InvalidIdempotent,
        DecompositionError,
        UnsupportedDimension,
        SolverStuck,
    ) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
