#!/usr/bin/env python3

#------------------------------------------------------------------------------#
#
#    Verification harness: golden values and randomized property sweeps,
#    grouped into suites and reported anchor by anchor.
#
#------------------------------------------------------------------------------#

from collections import OrderedDict, namedtuple
from functools import partial

from fields import (RlkError, IdentityViolated, NotInvertible,
                    PreconditionFailed, DualNotLeibniz, rationals,
                    prime_field, make_rng, sample, sample_nonzero, equal)
from leibniz_module import (OK, ReynoldsContext, bracket, check_leibniz,
                            check_reynolds, induced_bracket, check_homomorphism)
from representations_module import (adjoint_representation,
                                     dual_representation,
                                     check_reynolds_representation,
                                     check_adjoint_admissible,
                                     check_beta_admissible,
                                     semidirect_product, block_diag)
from bialgebra_module import (check_reynolds_bialgebra, bialgebra_matched_pair,
                              check_matched_pair, check_manin_triple,
                              build_double, adjoint_operator,
                              check_quadratic_invariance,
                              check_reynolds_coalgebra, tensor_condition_items)
from yangbaxter_module import (clybe_defect, coboundary_coproduct,
                               coboundary_bundle, admissible_clybe_conditions,
                               tensor_admissibility_conditions,
                               check_O_operator, lift_O_operator, O_NONE,
                               O_FULL, PiForm, PI_VARIANTS, PI_SHIFT,
                               PI_INVERSE, check_pi_admissible)
from classify2d_module import (FAMILIES, OPERATOR, RInstance, builtin_algebra,
                               family, instantiate, sample_values,
                               r_instance_for, verify_family,
                               enumerate_reynolds, enumerate_triangular_pairs,
                               Counterexample)

SUITES = ("operators", "bialgebras", "yang-baxter", "classification")

# published pair families that hold generically under the triangular criterion,
# plus the supplementary families
SOUND_PAIR_FAMILIES = ("A1-pair-a", "A1-pair-b", "A1-pair-c",
                       "A1-pair-c-weighted", "A2-I-e", "A2-I-balanced",
                       "A2-II-a", "A2-II-weighted")

# published pair families with a generic counterexample
UNSOUND_PAIR_FAMILIES = ("A2-I-a", "A2-I-b", "A2-I-c", "A2-I-d", "A2-I-f",
                         "A2-I-g", "A2-I-h", "A2-I-i", "A2-I-j")

SWEEP_PRIME = 5

AnchorResult = namedtuple("AnchorResult", "suite anchor passed detail")

_ANCHORS = OrderedDict((suite, []) for suite in SUITES)

# fewest fixtures an anchor sweeps in a full run
MINIMUM_TRIALS = {}

WEIGHT_ZERO = "-weight-zero"


def anchor(suite, name, minimum=1, weight_zero=False):
    """register a check; weight_zero adds a rerun pinned to lambda = 0"""
    def register(func):
        _ANCHORS[suite].append((name, func))
        MINIMUM_TRIALS[name] = minimum
        if weight_zero:
            _ANCHORS[suite].append((name + WEIGHT_ZERO,
                                    partial(func, lam_value=0)))
            MINIMUM_TRIALS[name + WEIGHT_ZERO] = minimum
        return func
    return register


def anchor_names(suite):
    return [name for name, _ in _ANCHORS[suite]]

#------------------------------------------------------------------------------#
#    fixtures
#------------------------------------------------------------------------------#

def random_matrix(field, rng, n, height=5):
    return field.array([[sample(field, rng, height) for _ in range(n)]
                        for _ in range(n)])


def random_context(field, rng, lam_value=None, algebra=None):
    """a Reynolds operator drawn from the operator families"""
    fams = [fam for fam in FAMILIES if fam.kind == OPERATOR and
            (algebra is None or fam.algebra == algebra) and
            (lam_value is None or fam.admits_weight(field.convert(lam_value)))]
    fam = fams[int(rng.integers(len(fams)))]
    fixed = {} if lam_value is None else {"lam": lam_value}
    values = sample_values(fam, field, rng, fixed=fixed)
    R, _ = instantiate(fam, values, field)
    return ReynoldsContext(builtin_algebra(fam.algebra, field), values["lam"], R)


def random_triangular(field, rng, lam_value=None):
    """(ctx, S, r): r a symmetric solution of the S-admissible cLYBe"""
    fams = [family(name) for name in SOUND_PAIR_FAMILIES]
    if lam_value is not None:
        fams = [fam for fam in fams
                if fam.admits_weight(field.convert(lam_value))]
    fam = fams[int(rng.integers(len(fams)))]
    fixed = {} if lam_value is None else {"lam": lam_value}
    values = sample_values(fam, field, rng, fixed=fixed)
    R, S = instantiate(fam, values, field)
    ctx = ReynoldsContext(builtin_algebra(fam.algebra, field), values["lam"], R)
    return ctx, S, r_instance_for(fam, values, field).r


def mutate(field, rng, M):
    """M plus a nonzero multiple of one matrix unit"""
    out = M.copy()
    i, j = (int(v) for v in rng.integers(0, M.shape[0], size=2))
    out[i, j] = out[i, j] + sample_nonzero(field, rng, excluded=(0,))
    return out

#------------------------------------------------------------------------------#
#    operators
#------------------------------------------------------------------------------#

@anchor("operators", "bracket")
def _bracket(seed, trials):
    field = rationals()
    A1, A2 = builtin_algebra("A1", field), builtin_algebra("A2", field)
    e1, e2 = field.basis_vector(2, 0), field.basis_vector(2, 1)
    ok = (equal(bracket(A1, e2, e2), e1) and
          equal(bracket(A2, e2, field.norm(e1 + e2)), field.scale(2, e1)))
    return ok, "[e2,e2] = e1 on A1, [e2,e1+e2] = 2e1 on A2"


@anchor("operators", "leibniz")
def _leibniz(seed, trials):
    field = rationals()
    A2 = builtin_algebra("A2", field)
    opposite = A2.c.transpose(1, 0, 2)
    ok = (check_leibniz(builtin_algebra("A1", field).c, field) is OK and
          check_leibniz(A2.c, field) is OK and
          check_leibniz(opposite, field) is not OK)
    return ok, "A1, A2 Leibniz; opposite of A2 is not"


@anchor("operators", "reynolds-families", minimum=20)
def _reynolds_families(seed, trials):
    failed = [fam.name for fam in FAMILIES if fam.kind == OPERATOR and
              verify_family(fam, trials, seed) is not OK]
    return not failed, ", ".join(failed) or "all operator families hold"


@anchor("operators", "induced-bracket", minimum=100, weight_zero=True)
def _induced(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    for _ in range(trials):
        ctx = random_context(field, rng, lam_value)
        try:
            induced = induced_bracket(ctx)
        except IdentityViolated as error:
            return False, "induced bracket not Leibniz: {}".format(error)
        src = ReynoldsContext(induced, ctx.lam, ctx.R, validate=False)
        if check_homomorphism(ctx.R, src, ctx) is not OK:
            return False, "R is not a homomorphism from the induced bracket"
    return True, "{} fixtures".format(trials)


@anchor("operators", "dual-representation", minimum=100, weight_zero=True)
def _dual_rep(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    for _ in range(trials):
        ctx = random_context(field, rng, lam_value)
        for alg in (ctx.alg, induced_bracket(ctx)):
            try:
                dual_representation(adjoint_representation(alg))
            except IdentityViolated as error:
                return False, str(error)
    return True, "{} fixtures".format(trials)


@anchor("operators", "beta-admissible-dual", minimum=100, weight_zero=True)
def _beta_dual(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    for k in range(trials):
        ctx = random_context(field, rng, lam_value)
        rep = adjoint_representation(ctx.alg)
        if k % 3 == 2:
            rep = dual_representation(rep)
        beta = field.norm(-ctx.R) if k % 2 else random_matrix(field, rng,
                                                               ctx.dim)
        direct = check_beta_admissible(rep, ctx, beta) is OK
        via_dual = check_reynolds_representation(
            dual_representation(rep), ctx, beta.T.copy()) is OK
        if direct != via_dual:
            return False, "disagreement at fixture {}".format(k)
    return True, "{} fixtures".format(trials)


@anchor("operators", "adjoint-admissible-dual", minimum=100, weight_zero=True)
def _admissible_dual(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    for k in range(trials):
        if k % 2:
            ctx = random_context(field, rng, lam_value)
            S = random_matrix(field, rng, ctx.dim)
        else:
            ctx, S, _ = random_triangular(field, rng, lam_value)
        direct = check_adjoint_admissible(ctx, S) is OK
        dual = dual_representation(adjoint_representation(ctx.alg))
        via_dual = check_reynolds_representation(dual, ctx, S.T.copy()) is OK
        if direct != via_dual:
            return False, "disagreement at fixture {}".format(k)
    return True, "{} fixtures".format(trials)


@anchor("operators", "semidirect-reynolds", minimum=100, weight_zero=True)
def _semidirect(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    for k in range(trials):
        ctx = random_context(field, rng, lam_value)
        rep = adjoint_representation(ctx.alg)
        if k % 3 == 2:
            rep = dual_representation(rep)
        alpha = ctx.R if k % 2 else random_matrix(field, rng, ctx.dim)
        direct = check_reynolds_representation(rep, ctx, alpha) is OK
        alg, op = semidirect_product(rep, ctx, alpha)
        if direct != (check_reynolds(alg, ctx.lam, op) is OK):
            return False, "disagreement at fixture {}".format(k)
    return True, "{} fixtures".format(trials)

#------------------------------------------------------------------------------#
#    bialgebras
#------------------------------------------------------------------------------#

def _bundle_fixture(field, rng, k, lam_value=None):
    ctx, S, r = random_triangular(field, rng, lam_value)
    R = ctx.R
    if k % 3 == 1:
        S = mutate(field, rng, S)
    elif k % 3 == 2:
        R = mutate(field, rng, R)
    raw = ReynoldsContext(ctx.alg, ctx.lam, R, validate=False)
    return coboundary_bundle(raw, S, r)


def bialgebra_agreement(bundle):
    """(bundle, matched pair, Manin triple) verdicts"""
    as_bundle = check_reynolds_bialgebra(bundle).ok
    as_pair = check_matched_pair(*bialgebra_matched_pair(bundle)) is OK
    try:
        as_triple = check_manin_triple(bundle.context(), bundle.delta,
                                       bundle.S) is OK
    except DualNotLeibniz:
        as_triple = False
    return as_bundle, as_pair, as_triple


@anchor("bialgebras", "bialgebra-equivalence", minimum=200, weight_zero=True)
def _bialgebra_equivalence(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    for k in range(trials):
        verdicts = bialgebra_agreement(_bundle_fixture(field, rng, k,
                                                       lam_value))
        if len(set(verdicts)) != 1:
            return False, "verdicts {} at fixture {}".format(verdicts, k)
    return True, "{} fixtures".format(trials)


@anchor("bialgebras", "double-adjoint", minimum=100, weight_zero=True)
def _double_adjoint(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    for k in range(trials):
        ctx, S, r = random_triangular(field, rng, lam_value)
        double, form = build_double(ctx.alg, coboundary_coproduct(ctx.alg, r))
        op = block_diag(field, ctx.R, S.T.copy())
        adjoint = adjoint_operator(double, form, op)
        if not equal(adjoint, block_diag(field, S, ctx.R.T.copy())):
            return False, "adjoint differs from S + R* at fixture {}".format(k)
        total = ReynoldsContext(double, ctx.lam, op, validate=False)
        if check_adjoint_admissible(total, adjoint) is not OK:
            return False, "adjoint not admissible at fixture {}".format(k)
    return True, "{} fixtures".format(trials)


@anchor("bialgebras", "quadratic-swap", minimum=100, weight_zero=True)
def _quadratic_swap(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    for k in range(trials):
        ctx, S, r = random_triangular(field, rng, lam_value)
        double, form = build_double(ctx.alg, coboundary_coproduct(ctx.alg, r))
        witness = check_quadratic_invariance(double, form)
        if witness is not OK:
            return False, "{} at fixture {}".format(witness, k)
    return True, "{} fixtures".format(trials)

#------------------------------------------------------------------------------#
#    Yang-Baxter
#------------------------------------------------------------------------------#

def coproduct_golden(case, field, eta, gamma):
    """the expected delta_r tensor of a built-in r-matrix"""
    d = field.zeros((2, 2, 2))
    if case == "A1":
        d[1, 0, 0] = gamma
    elif case == "A2-I":
        d[1, 0, 0] = eta + gamma
        d[1, 0, 1] = gamma
    else:
        for i in range(2):
            d[i, 0, 1] = eta
            d[i, 1, 0] = -eta
    return d


@anchor("yang-baxter", "coproduct-goldens")
def _coproduct_goldens(seed, trials):
    field, rng = rationals(), make_rng(seed)
    for _ in range(5):
        eta = sample_nonzero(field, rng, excluded=(0,))
        gamma = sample_nonzero(field, rng, excluded=(0,))
        for case in ("A1", "A2-I", "A2-II"):
            r = RInstance(case, field, eta, gamma)
            alg = builtin_algebra("A1" if case == "A1" else "A2", field)
            if not equal(coboundary_coproduct(alg, r.r),
                         coproduct_golden(case, field, eta, gamma)):
                return False, "delta_r table of case {}".format(case)
    return True, "three cases, five parameter draws"


def clybe_golden(field):
    """defect of r = e2 (x) e2 on A1"""
    d = field.zeros((2, 2, 2))
    d[1, 0, 1] = field.one
    d[1, 1, 0] = field.one
    d[0, 1, 1] = field.convert(-2)
    return d


@anchor("yang-baxter", "clybe-defect")
def _clybe_defect(seed, trials):
    field = rationals()
    r = field.zeros((2, 2))
    r[1, 1] = field.one
    ok = equal(clybe_defect(builtin_algebra("A1", field), r), clybe_golden(field))
    return ok, "e2e1e2 + e2e2e1 - 2 e1e2e2"


@anchor("yang-baxter", "coboundary-equivalence", minimum=100, weight_zero=True)
def _coboundary_equivalence(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    for k in range(trials):
        ctx, S, _ = random_triangular(field, rng, lam_value)
        r = random_matrix(field, rng, ctx.dim)
        flags = tensor_admissibility_conditions(ctx, S, r)
        d = coboundary_coproduct(ctx.alg, r)
        direct = tensor_condition_items(ctx, d, S)
        coalgebra = check_reynolds_coalgebra(d, ctx.lam, S, field) is OK
        if ((flags["tensor-coalgebra"] is OK) != coalgebra or
                (flags["tensor-left"] is OK) !=
                (direct["tensor-left"] is OK) or
                (flags["tensor-right"] is OK) !=
                (direct["tensor-right"] is OK)):
            return False, "disagreement at fixture {}".format(k)
    return True, "{} fixtures".format(trials)


def intertwining_flags(ctx, S, r):
    """(S r = r R^T, r S^T = R r)"""
    flags = admissible_clybe_conditions(ctx, S, r)
    return (flags["intertwine-first"] is OK,
            flags["intertwine-second"] is OK)


@anchor("yang-baxter", "intertwining-transpose", minimum=100, weight_zero=True)
def _intertwining_transpose(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    for k in range(trials):
        ctx, S, r = random_triangular(field, rng, lam_value)
        if k % 2:
            S = mutate(field, rng, S)
        if k % 3 == 1:
            r = random_matrix(field, rng, ctx.dim)
        elif k % 3 == 2:
            M = random_matrix(field, rng, ctx.dim)
            r = field.norm(M + M.T)
        first, second = intertwining_flags(ctx, S, r)
        if intertwining_flags(ctx, S, r.T.copy()) != (second, first):
            return False, "transpose swap fails at fixture {}".format(k)
        if equal(r, r.T) and first != second:
            return False, "symmetric r splits at fixture {}".format(k)
    return True, "{} fixtures".format(trials)


def lift_agreement(ctx, T, alpha, beta, S):
    """(admissible cLYBe on the double, weak O-operator with T beta = S T)"""
    field = ctx.field
    rep = adjoint_representation(ctx.alg)
    double, lifted, S_lift = lift_O_operator(T, rep, ctx, alpha, beta, S)
    on_double = all(w is OK for w in
                    admissible_clybe_conditions(double, S_lift, lifted).values())
    weak = (check_O_operator(T, rep, ctx, alpha) != O_NONE and
            equal(field.dot(T, beta), field.dot(S, T)))
    return on_double, weak


@anchor("yang-baxter", "o-operator-lift", minimum=50, weight_zero=True)
def _o_operator_lift(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    for k in range(trials):
        lam = k % 2 if lam_value is None else lam_value
        ctx = random_context(field, rng, lam_value=lam)
        R = ctx.R
        T = R if k % 4 < 2 else mutate(field, rng, R)
        minus = field.norm(-R)
        on_double, weak = lift_agreement(ctx, T, R, minus, field.norm(-T))
        if on_double != weak:
            return False, "disagreement at fixture {}".format(k)
    return True, "{} fixtures".format(trials)


@anchor("yang-baxter", "o-operator-bialgebra", minimum=50, weight_zero=True)
def _o_operator_bialgebra(seed, trials, lam_value=None):
    field, rng = prime_field(SWEEP_PRIME), make_rng(seed)
    checked = 0
    for k in range(trials):
        # each round of the four variants at weight 0, then at weight 1
        lam = (k // len(PI_VARIANTS)) % 2 if lam_value is None else lam_value
        ctx = random_context(field, rng, lam_value=lam)
        rep = adjoint_representation(ctx.alg)
        variant = PI_VARIANTS[k % len(PI_VARIANTS)]
        theta = None
        if variant in (PI_SHIFT, PI_INVERSE):
            theta = sample_nonzero(field, rng, excluded=(0,))
        pi = PiForm(variant, theta, field)
        try:
            if check_pi_admissible(ctx, rep, ctx.R, pi) is not OK:
                continue
            S, beta = pi.apply(ctx.R, field), pi.apply(ctx.R, field)
        except NotInvertible:
            continue
        if check_O_operator(ctx.R, rep, ctx, ctx.R) != O_FULL:
            continue
        try:
            double, lifted, S_lift = lift_O_operator(ctx.R, rep, ctx, ctx.R,
                                                     beta, S)
        except PreconditionFailed as error:
            return False, "{} at fixture {}".format(error, k)
        if not check_reynolds_bialgebra(
                coboundary_bundle(double, S_lift, lifted)).ok:
            return False, "lifted bundle fails at fixture {}".format(k)
        checked += 1
    if not checked:
        return False, "no admissible fixture among {}".format(trials)
    return True, "{} admissible fixtures of {}".format(checked, trials)

#------------------------------------------------------------------------------#
#    classification
#------------------------------------------------------------------------------#

@anchor("classification", "reynolds-count-A1")
def _count_a1(seed, trials):
    p = 3
    field = prime_field(p)
    alg = builtin_algebra("A1", field)
    details = []
    for lam_value, expected in ((1, p * p + p * (p - 2)), (0, p * p + p * (p - 1))):
        report = enumerate_reynolds(alg, p, lam_value)
        if len(report.solutions) != expected or report.unmatched:
            return False, "lambda {}: {} found, {} unmatched".format(
                lam_value, len(report.solutions), len(report.unmatched))
        details.append("lambda {}: {}".format(lam_value, expected))
    return True, ", ".join(details)


@anchor("classification", "reynolds-unmatched-A2")
def _unmatched_a2(seed, trials):
    p = 3
    alg = builtin_algebra("A2", prime_field(p))
    for lam_value in (0, 1, 2):
        report = enumerate_reynolds(alg, p, lam_value)
        if report.unmatched:
            return False, "lambda {}: {} unmatched".format(
                lam_value, len(report.unmatched))
    return True, "p = 3, lambda in 0, 1, 2"


@anchor("classification", "pair-families-sound", minimum=20)
def _pairs_sound(seed, trials):
    failed = [name for name in SOUND_PAIR_FAMILIES
              if verify_family(family(name), trials, seed) is not OK]
    return not failed, ", ".join(failed) or "all hold"


@anchor("classification", "pair-families-findings", minimum=20)
def _pairs_findings(seed, trials):
    held = [name for name in UNSOUND_PAIR_FAMILIES
            if not isinstance(verify_family(family(name), trials, seed),
                              Counterexample)]
    return not held, ("counterexamples reproduced" if not held
                      else "no counterexample for " + ", ".join(held))


@anchor("classification", "pair-enumeration")
def _pair_enumeration(seed, trials):
    p = 3
    field = prime_field(p)
    runs = (("A1", 0, 0, 1), ("A2-II", 1, 1, 0), ("A2-I", 0, 0, 1))
    for case, lam_value, eta, gamma in runs:
        alg = builtin_algebra("A1" if case == "A1" else "A2", field)
        report = enumerate_triangular_pairs(alg, RInstance(case, field, eta,
                                                           gamma),
                                            p, lam_value)
        zero = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
        if report.unexplained or zero not in report.solutions:
            return False, "case {}: {} unexplained".format(
                case, len(report.unexplained))
    return True, "three r-matrix cases over F_3"

#------------------------------------------------------------------------------#
#    running
#------------------------------------------------------------------------------#

def run_suite(suite="all", seed=0, trials=None, enforce_minimum=True):
    """trials=None runs every anchor at its minimum; enforce_minimum=False
    takes trials as given"""
    suites = SUITES if suite == "all" else (suite,)
    results = []
    for name in suites:
        for anchor_name, func in _ANCHORS[name]:
            minimum = MINIMUM_TRIALS[anchor_name]
            if trials is None:
                count = minimum
            elif enforce_minimum:
                count = max(trials, minimum)
            else:
                count = trials
            try:
                passed, detail = func(seed, count)
            except RlkError as error:
                passed, detail = False, "{}: {}".format(type(error).__name__,
                                                        error)
            results.append(AnchorResult(name, anchor_name, bool(passed), detail))
    return results


def summary_lines(results):
    """whitespace-separated rows for the LaTeX table"""
    lines = ["suite anchor result"]
    for res in results:
        lines.append("{} {} {}".format(res.suite, res.anchor,
                                       "pass" if res.passed else "FAIL"))
    return lines
