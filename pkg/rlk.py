#!/usr/bin/env python3

#------------------------------------------------------------------------------#
#
#    rlk: checks, constructions, enumeration and verification for
#    Reynolds Leibniz algebras and bialgebras.
#
#------------------------------------------------------------------------------#

import argparse
import sys
import time
from pathlib import Path

import numpy as np

from fields import (RlkError, IdentityViolated, InputError, to_text,
                    prime_field)
from leibniz_module import (OK, LeibnizAlgebra, ReynoldsContext, check_leibniz,
                            check_reynolds, induced_bracket, operator_to_json,
                            operator_from_json, first_violation)
from representations_module import (Representation, check_representation,
                                     check_reynolds_representation,
                                     check_adjoint_admissible,
                                     dual_representation, semidirect_product)
from bialgebra_module import (Coproduct, BialgebraBundle, BilinearForm,
                              check_coleibniz, check_leibniz_bialgebra,
                              check_reynolds_bialgebra, check_matched_pair,
                              check_quadratic_invariance, check_manin_triple,
                              build_double, adjoint_operator)
from yangbaxter_module import (RMatrix, clybe_defect, coboundary_coproduct,
                               admissible_clybe_conditions,
                               o_operator_conditions, check_O_operator,
                               lift_O_operator, PiForm, PI_VARIANTS,
                               check_pi_admissible)
from classify2d_module import (ALGEBRAS, R_CASES, CRITERIA,
                               CRITERION_TRIANGULAR, RInstance,
                               builtin_algebra, family, verify_family,
                               enumerate_reynolds, enumerate_triangular_pairs,
                               case_algebra)
from verify_module import SUITES, run_suite, summary_lines
from latex_table import MakeLatexTable
from rlklib import (load_config, load_config_for_command_line_help,
                    effective_settings, write_config, field_from_settings,
                    read_json, write_report, stdout_list, append_log,
                    EXIT_OK, EXIT_ERROR, EXIT_VIOLATED, EXIT_FINDING)

CHECK_KINDS = ("leibniz", "reynolds", "rep", "reynolds-rep",
               "adjoint-admissible", "coleibniz", "bialgebra",
               "reynolds-bialgebra", "quadratic", "manin", "matched-pair",
               "clybe", "admissible-clybe", "o-operator", "pi-admissible")

CONSTRUCT_KINDS = ("induced", "dual-rep", "semidirect", "double", "coboundary",
                   "adjoint-op", "lift-o-operator")

#------------------------------------------------------------------------------#

class RlkArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        sys.exit("{}: usage error: {}".format(self.prog, message))


def makeArgParser(configfilename="config.json"):

    _, configtext = load_config_for_command_line_help(configfilename)

    common = RlkArgumentParser(add_help=False)
    common.add_argument("--config", help="configuration filename",
                        type=str, default=configfilename)
    common.add_argument("--field", help="Q or Fp", type=str, default=None)
    common.add_argument("--p", help="prime modulus", type=int, default=None)
    common.add_argument("--lambda", dest="lam", help="weight of the operator",
                        type=str, default=None)
    common.add_argument("--seed", help="random seed (RLK_SEED overrides "
                        "this flag and the configuration file)",
                        type=int, default=None)
    common.add_argument("--height", help="height bound of sampled rationals",
                        type=int, default=None)
    common.add_argument("--trials", help="random trials per property",
                        type=int, default=None)
    common.add_argument("--out", help="output file (default stdout)",
                        type=str, default=None)
    common.add_argument("--quiet", help="no progress lines",
                        action="store_true")
    common.add_argument("--logfile", help="run log", type=str,
                        default="rlk_log.txt")
    common.add_argument("--save-config", help="write the effective settings "
                        "to the configuration file", action="store_true")

    parser = RlkArgumentParser(
        prog="rlk",
        description="This program checks and constructs Reynolds Leibniz "
                    "algebras and bialgebras.\n\n{}".format(configtext),
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text,
                              formatter_class=argparse.
                              ArgumentDefaultsHelpFormatter)

    inputs = (("--alg", "algebra file"), ("--op", "operator file (R)"),
              ("--rep", "representation file, optionally with alpha"),
              ("--delta", "coproduct file"), ("--r", "r-matrix file"),
              ("--S", "operator file (S)"), ("--form", "bilinear form file"),
              ("--T", "operator file (T: V -> g)"),
              ("--beta", "operator file (beta)"),
              ("--alg2", "second algebra file"),
              ("--op2", "second operator file"),
              ("--rep2", "representation of the second algebra"))

    check = add("check", "check one identity family")
    check.add_argument("kind", choices=CHECK_KINDS)
    construct = add("construct", "construct a derived object")
    construct.add_argument("kind", choices=CONSTRUCT_KINDS)
    for p in (check, construct):
        for flag, help_text in inputs:
            p.add_argument(flag, help=help_text, type=str, default=None)
    for p in (check, construct):
        p.add_argument("--pi", help="Pi variant", choices=PI_VARIANTS,
                       default=None)
        p.add_argument("--theta", help="theta of the Pi variant", type=str,
                       default=None)

    clybe = add("clybe", "defect of the classical Leibniz Yang-Baxter equation")
    clybe.add_argument("--alg", help="algebra file", type=str, default=None)
    clybe.add_argument("--r", help="r-matrix file", type=str, default=None)

    enum = add("enumerate", "every Reynolds operator over F_p")
    enum.add_argument("--algebra", choices=ALGEBRAS, default="A1")
    classify = add("classify", "every triangular (R, S) pair over F_p")
    classify.add_argument("--case", choices=R_CASES, default="A1")
    classify.add_argument("--r-params", help="eta,gamma", type=str,
                          default=None)
    classify.add_argument("--criterion", choices=CRITERIA,
                          default=CRITERION_TRIANGULAR)
    for p in (enum, classify):
        p.add_argument("--chunks", help="disjoint index ranges", type=int,
                       default=1)
        p.add_argument("--workers", help="worker processes", type=int,
                       default=None)

    verify = add("verify", "golden values and property sweeps; each sweep runs "
                 "at least its own minimum number of fixtures")
    verify.add_argument("--suite", choices=("all",) + SUITES, default="all")
    verify.add_argument("--family", help="verify one parametric family",
                        type=str, default=None)
    verify.add_argument("--latex", help="write the summary as a LaTeX table",
                        type=str, default=None)
    return parser

#------------------------------------------------------------------------------#
#    loading inputs
#------------------------------------------------------------------------------#

def require(args, *names):
    missing = ["--" + n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError("{} {} needs {}".format(args.command, args.kind,
                                                  ", ".join(missing)))


def load_algebra(path, validate=True):
    return LeibnizAlgebra.from_json(read_json(path), validate=validate)


def load_operator(path, field):
    return operator_from_json(read_json(path), field)


def load_context(args, settings, validate=True):
    alg = load_algebra(args.alg)
    R = load_operator(args.op, alg.field)
    return ReynoldsContext(alg, alg.field.convert(str(settings["lambda"])), R,
                           validate=validate)


def load_rep(path, alg, need_alpha=False):
    rep, alpha = Representation.from_json(read_json(path), alg)
    if need_alpha and alpha is None:
        raise InputError("representation file {} carries no alpha".format(path))
    return rep, alpha


def load_pi(args, field):
    if args.pi is None:
        raise InputError("pi-admissible needs --pi")
    return PiForm(args.pi, args.theta, field)

#------------------------------------------------------------------------------#
#    check
#------------------------------------------------------------------------------#

def first_of(items):
    for witness in items.values():
        if witness is not OK:
            return witness
    return OK


def run_check(args, settings):
    """(identities evaluated, witness or OK, extra report fields)"""
    kind = args.kind
    extra = {}
    if kind == "leibniz":
        require(args, "alg")
        alg = load_algebra(args.alg, validate=False)
        return ["leibniz"], check_leibniz(alg.c, alg.field), extra
    if kind == "coleibniz":
        require(args, "delta")
        delta = Coproduct.from_json(read_json(args.delta), validate=False)
        return ["co-leibniz"], check_coleibniz(delta.d, delta.field), extra
    if kind == "rep":
        require(args, "alg", "rep")
        alg = load_algebra(args.alg)
        obj = read_json(args.rep)
        rhoL = [operator_from_json(M, alg.field) for M in obj.get("rhoL", [])]
        rhoR = [operator_from_json(M, alg.field) for M in obj.get("rhoR", [])]
        witness = check_representation(alg, int(obj.get("vdim", 0)), rhoL, rhoR)
        return (["representation-left", "representation-right",
                 "representation-mixed"], witness, extra)
    if kind == "bialgebra":
        require(args, "alg", "delta")
        alg = load_algebra(args.alg)
        delta = Coproduct.from_json(read_json(args.delta), validate=False)
        return (["bialgebra-flip", "bialgebra-bracket"],
                check_leibniz_bialgebra(alg, delta), extra)
    if kind == "quadratic":
        require(args, "alg", "form")
        alg = load_algebra(args.alg)
        form = BilinearForm(alg.field, load_operator(args.form, alg.field))
        return (["quadratic-invariance", "quadratic-swap"],
                check_quadratic_invariance(alg, form), extra)
    if kind == "clybe":
        require(args, "alg", "r")
        return clybe_report(args)
    if kind == "matched-pair":
        require(args, "alg", "op", "alg2", "op2", "rep", "rep2")
        ctx1 = load_context(args, settings)
        alg2 = load_algebra(args.alg2)
        ctx2 = ReynoldsContext(alg2, ctx1.lam,
                               load_operator(args.op2, alg2.field))
        rep1, _ = load_rep(args.rep, ctx1.alg)
        rep2, _ = load_rep(args.rep2, alg2)
        return (["leibniz", "reynolds"],
                check_matched_pair(ctx1, ctx2, rep1.rhoL, rep1.rhoR,
                                   rep2.rhoL, rep2.rhoR), extra)

    require(args, "alg", "op")
    if kind == "reynolds":
        alg = load_algebra(args.alg)
        R = load_operator(args.op, alg.field)
        lam = alg.field.convert(str(settings["lambda"]))
        return ["reynolds"], check_reynolds(alg, lam, R), extra
    if kind == "reynolds-bialgebra":
        require(args, "delta", "S")
        ctx = load_context(args, settings, validate=False)
        delta = Coproduct.from_json(read_json(args.delta), validate=False)
        bundle = BialgebraBundle(ctx.alg, delta, ctx.lam, ctx.R,
                                 load_operator(args.S, ctx.field),
                                 validate=False)
        report = check_reynolds_bialgebra(bundle)
        extra["items"] = report.to_json()["items"]
        return list(report.items), report.first_witness(), extra

    ctx = load_context(args, settings)
    field = ctx.field
    if kind == "reynolds-rep":
        require(args, "rep")
        rep, alpha = load_rep(args.rep, ctx.alg, need_alpha=True)
        return (["reynolds-rep-left", "reynolds-rep-right"],
                check_reynolds_representation(rep, ctx, alpha), extra)
    if kind == "adjoint-admissible":
        require(args, "S")
        return (["adjoint-admissible-left", "adjoint-admissible-right"],
                check_adjoint_admissible(ctx, load_operator(args.S, field)),
                extra)
    if kind == "manin":
        require(args, "delta", "S")
        delta = Coproduct.from_json(read_json(args.delta), validate=False)
        return (["leibniz", "quadratic-invariance", "subalgebra", "reynolds"],
                check_manin_triple(ctx, delta, load_operator(args.S, field)),
                extra)
    if kind == "admissible-clybe":
        require(args, "r", "S")
        r = RMatrix.from_json(read_json(args.r))
        items = admissible_clybe_conditions(ctx, load_operator(args.S, field),
                                            r.r)
        return list(items), first_of(items), extra
    if kind == "o-operator":
        require(args, "rep", "T")
        rep, alpha = load_rep(args.rep, ctx.alg, need_alpha=True)
        T = load_operator(args.T, field)
        items = o_operator_conditions(T, rep, ctx, alpha)
        extra["status"] = check_O_operator(T, rep, ctx, alpha)
        return list(items), first_of(items), extra
    if kind == "pi-admissible":
        require(args, "rep")
        rep, alpha = load_rep(args.rep, ctx.alg, need_alpha=True)
        pi = load_pi(args, field)
        extra["pi"] = pi.to_json()
        return (["reynolds-rep", "pi-algebra", "pi-module"],
                check_pi_admissible(ctx, rep, alpha, pi), extra)
    raise InputError("unknown check {!r}".format(kind))


def clybe_report(args):
    alg = load_algebra(args.alg)
    r = RMatrix.from_json(read_json(args.r))
    if r.field != alg.field:
        raise InputError("r-matrix and algebra live over different fields")
    defect = clybe_defect(alg, r.r)
    witness = first_violation("clybe", defect, alg.field.zeros(defect.shape),
                              alg.field, 3)
    terms = ["{} e{}⊗e{}⊗e{}".format(to_text(v, alg.field), a + 1, b + 1, c + 1)
             for (a, b, c), v in np.ndenumerate(defect) if v]
    return ["clybe"], witness, {"defect": terms}


def cmd_check(args, settings):
    identities, witness, extra = run_check(args, settings)
    report = {"check": args.kind, "ok": witness is OK,
              "identities": identities,
              "witness": None if witness is OK else witness.to_json()}
    report.update(extra)
    write_report(report, args.out)
    return EXIT_OK if witness is OK else EXIT_VIOLATED


def cmd_clybe(args, settings):
    if args.alg is None or args.r is None:
        raise InputError("clybe needs --alg and --r")
    identities, witness, extra = clybe_report(args)
    report = {"check": "clybe", "ok": witness is OK, "identities": identities,
              "witness": None if witness is OK else witness.to_json()}
    report.update(extra)
    write_report(report, args.out)
    return EXIT_OK if witness is OK else EXIT_VIOLATED

#------------------------------------------------------------------------------#
#    construct
#------------------------------------------------------------------------------#

def build(args, settings):
    kind = args.kind
    if kind == "coboundary":
        require(args, "alg", "r")
        alg = load_algebra(args.alg)
        r = RMatrix.from_json(read_json(args.r))
        d = coboundary_coproduct(alg, r.r)
        return Coproduct(alg.field, d, validate=False).to_json()
    if kind == "double":
        require(args, "alg", "delta")
        alg = load_algebra(args.alg)
        delta = Coproduct.from_json(read_json(args.delta), validate=False)
        double, form = build_double(alg, delta)
        return {"algebra": double.to_json(), "form": form.to_json()}
    if kind == "dual-rep":
        require(args, "alg", "rep")
        alg = load_algebra(args.alg)
        rep, alpha = load_rep(args.rep, alg)
        dual = dual_representation(rep)
        return dual.to_json(None if alpha is None else alpha.T.copy())
    if kind == "adjoint-op":
        require(args, "alg", "form", "op")
        alg = load_algebra(args.alg)
        form = BilinearForm(alg.field, load_operator(args.form, alg.field))
        R = load_operator(args.op, alg.field)
        return operator_to_json(adjoint_operator(alg, form, R), alg.field)

    require(args, "alg", "op")
    ctx = load_context(args, settings)
    field = ctx.field
    if kind == "induced":
        return induced_bracket(ctx).to_json()
    if kind == "semidirect":
        require(args, "rep")
        rep, alpha = load_rep(args.rep, ctx.alg, need_alpha=True)
        alg, op = semidirect_product(rep, ctx, alpha)
        return {"algebra": alg.to_json(), "operator": operator_to_json(op, field)}
    if kind == "lift-o-operator":
        require(args, "rep", "T", "beta", "S")
        rep, alpha = load_rep(args.rep, ctx.alg, need_alpha=True)
        double, lifted, S = lift_O_operator(
            load_operator(args.T, field), rep, ctx, alpha,
            load_operator(args.beta, field), load_operator(args.S, field))
        return {"algebra": double.alg.to_json(),
                "operator": operator_to_json(double.R, field),
                "r": RMatrix(field, lifted).to_json(),
                "S": operator_to_json(S, field)}
    raise InputError("unknown construction {!r}".format(kind))


def cmd_construct(args, settings):
    write_report(build(args, settings), args.out)
    return EXIT_OK

#------------------------------------------------------------------------------#
#    enumerate, classify, verify
#------------------------------------------------------------------------------#

def progress_printer(args, label):
    if args.quiet or args.out is None:
        return None

    def show(done, total):
        print("{}: chunk {} of {} done".format(label, done, total), flush=True)
    return show


def cmd_enumerate(args, settings):
    p = int(settings["p"])
    field = prime_field(p)
    alg = builtin_algebra(args.algebra, field)
    lam = field.convert(str(settings["lambda"]))
    report = enumerate_reynolds(alg, p, lam, chunks=args.chunks,
                                workers=args.workers,
                                progress=progress_printer(args, "enumerate"))
    if not args.quiet and args.out is not None:
        stdout_list("Reynolds operators on {} over F_{}:".format(args.algebra, p),
                    "found: {}".format(len(report.solutions)),
                    "unmatched: {}".format(len(report.unmatched)))
    write_report(report.to_json(), args.out)
    return EXIT_FINDING if report.unmatched else EXIT_OK


def parse_r_params(text, case):
    if text is None:
        return (1, 0) if case == "A2-II" else (0, 1)
    try:
        eta, gamma = (item.strip() for item in text.split(","))
    except ValueError:
        raise InputError("--r-params takes eta,gamma; got {!r}".format(text))
    return eta, gamma


def cmd_classify(args, settings):
    p = int(settings["p"])
    field = prime_field(p)
    eta, gamma = parse_r_params(args.r_params, args.case)
    r = RInstance(args.case, field, field.convert(str(eta)),
                  field.convert(str(gamma)))
    alg = builtin_algebra(case_algebra(args.case), field)
    lam = field.convert(str(settings["lambda"]))
    report = enumerate_triangular_pairs(
        alg, r, p, lam, criterion=args.criterion, chunks=args.chunks,
        workers=args.workers, progress=progress_printer(args, "classify"))
    if not args.quiet and args.out is not None:
        stdout_list("Triangular pairs for case {} over F_{}:".format(args.case, p),
                    "found: {}".format(len(report.solutions)),
                    "unmatched: {}".format(len(report.unmatched)),
                    "unexplained: {}".format(len(report.unexplained)))
    write_report(report.to_json(), args.out)
    return EXIT_FINDING if report.unmatched else EXIT_OK


def cmd_verify(args, settings):
    seed, trials = int(settings["seed"]), int(settings["trials"])
    if args.family is not None:
        field = field_from_settings(settings)
        outcome = verify_family(family(args.family), trials, seed, field,
                                height=int(settings["height"]))
        report = {"family": args.family, "trials": trials, "seed": seed,
                  "ok": outcome is OK,
                  "counterexample": None if outcome is OK else outcome.to_json()}
        write_report(report, args.out)
        return EXIT_OK if outcome is OK else EXIT_FINDING

    results = run_suite(args.suite, seed, trials)
    if not args.quiet:
        stdout_list("Verification summary (seed {}):".format(seed),
                    *("{:16} {:28} {}  {}".format(res.suite, res.anchor,
                                                  "pass" if res.passed
                                                  else "FAIL", res.detail)
                      for res in results))
    if args.latex:
        with Path(args.latex).open("w") as outfile:
            MakeLatexTable(summary_lines(results), outfile)
    report = {"suite": args.suite, "seed": seed, "trials": trials,
              "ok": all(res.passed for res in results),
              "anchors": [res._asdict() for res in results]}
    if args.out is not None or args.quiet:
        write_report(report, args.out)
    return EXIT_OK if report["ok"] else EXIT_VIOLATED

#------------------------------------------------------------------------------#

COMMANDS = {"check": cmd_check, "construct": cmd_construct,
            "clybe": cmd_clybe, "enumerate": cmd_enumerate,
            "classify": cmd_classify, "verify": cmd_verify}


def main(argv=None):
    configfilename = "config.json"
    if argv is None:
        argv = sys.argv[1:]
    if "--config" in argv[:-1]:
        configfilename = argv[argv.index("--config") + 1]
    args = makeArgParser(configfilename).parse_args(argv)

    start = time.time()
    try:
        settings = effective_settings(
            {"field": args.field, "p": args.p, "lambda": args.lam,
             "seed": args.seed, "height": args.height, "trials": args.trials},
            load_config(args.config))
        if args.save_config:
            path = write_config(settings, args.config)
            if not args.quiet:
                print('New configuration file "{}" written.'.format(path),
                      flush=True)
        code = COMMANDS[args.command](args, settings)
    except IdentityViolated as error:
        write_report({"command": args.command, "ok": False,
                      "witness": error.witness.to_json()}, args.out)
        code = EXIT_VIOLATED
    except RlkError as error:
        append_log(args.logfile, args.command, EXIT_ERROR, time.time() - start)
        sys.exit("rlk {}: {}: {}".format(args.command, type(error).__name__,
                                         error))
    append_log(args.logfile, args.command, code, time.time() - start)
    return code


if __name__ == "__main__":
    sys.exit(main())
