#!/usr/bin/env python3

#------------------------------------------------------------------------------#
#
#    Two-dimensional Reynolds Leibniz algebras and triangular bialgebras:
#    built-in algebras and r-matrices, parametric family descriptors,
#    exhaustive enumeration over F_p and randomized family verification.
#
#------------------------------------------------------------------------------#

from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
import itertools

from sympy import Symbol, symbols

from fields import (RlkError, DivisionByZero, FieldMismatch, InputError,
                    PreconditionFailed, prime_field, rationals, fdiv, finv,
                    to_text, make_rng, sample, equal, DEFAULT_HEIGHT)
from leibniz_module import OK, LeibnizAlgebra, ReynoldsContext, check_reynolds
from yangbaxter_module import RMatrix, check_triangular, coboundary_bundle
from bialgebra_module import check_reynolds_bialgebra

#------------------------------------------------------------------------------#
#    built-in algebras and r-matrices
#------------------------------------------------------------------------------#

ALGEBRAS = ("A1", "A2")
R_CASES = ("A1", "A2-I", "A2-II")

CRITERION_TRIANGULAR = "triangular"
CRITERION_BUNDLE = "bundle"
CRITERIA = (CRITERION_TRIANGULAR, CRITERION_BUNDLE)


class ConstraintViolated(RlkError, ValueError):
    pass


def builtin_algebra(name, field):
    """A1: [e2,e2] = e1.  A2: [e2,e1] = [e2,e2] = e1."""
    if name == "A1":
        return LeibnizAlgebra.from_brackets(field, 2, {(1, 1): [1, 0]})
    if name == "A2":
        return LeibnizAlgebra.from_brackets(field, 2, {(1, 0): [1, 0],
                                                       (1, 1): [1, 0]})
    raise InputError("unknown algebra {!r}; expected one of {}"
                     .format(name, ", ".join(ALGEBRAS)))


def identify_algebra(alg):
    if alg.dim != 2:
        return None
    for name in ALGEBRAS:
        if equal(builtin_algebra(name, alg.field).c, alg.c):
            return name
    return None


def case_algebra(case):
    return "A1" if case == "A1" else "A2"


class RInstance:
    """a built-in symmetric r-matrix with its parameters eta, gamma"""

    def __init__(self, case, field, eta=0, gamma=1):
        if case not in R_CASES:
            raise InputError("unknown r-matrix case {!r}; expected one of {}"
                             .format(case, ", ".join(R_CASES)))
        self.case = case
        self.field = field
        self.eta = field.convert(eta)
        self.gamma = field.convert(gamma)
        e, g = self.eta, self.gamma
        if case == "A2-II":
            if not e:
                raise PreconditionFailed("eta must be nonzero, or delta_r = 0")
            entries = [[e, -e], [-e, e]]
        else:
            if not g:
                raise PreconditionFailed("gamma must be nonzero, or delta_r = 0")
            entries = [[e, g], [g, field.zero]]
        self.rmatrix = RMatrix(field, entries)

    @property
    def r(self):
        return self.rmatrix.r

    def params(self):
        return {"eta": self.eta, "gamma": self.gamma}

    def to_json(self):
        return {"case": self.case, "eta": to_text(self.eta, self.field),
                "gamma": to_text(self.gamma, self.field)}

#------------------------------------------------------------------------------#
#    family descriptors
#------------------------------------------------------------------------------#

k1, l1, n1, n2, eta, gamma, lam = symbols("k1 l1 n1 n2 eta gamma lam")

OPERATOR = "operator"
PAIR = "pair"

# entries are read from these positions of R and S
PIVOTS = {"k1": ("R", 0, 0), "l1": ("R", 0, 1),
          "n1": ("S", 0, 1), "n2": ("S", 1, 1)}


class FamilyDescriptor:

    def __init__(self, name, algebra, R, S=None, case=None, slots=(),
                 constraints=(), ties=None, supplementary=False):
        self.name = name
        self.algebra = algebra
        self.case = case
        self.kind = OPERATOR if S is None else PAIR
        self.R = R
        self.S = S
        self.slots = tuple(slots)
        self.constraints = tuple(constraints)
        self.ties = dict(ties or {})
        self.supplementary = supplementary

    def __repr__(self):
        return "FamilyDescriptor({})".format(self.name)

    def parameters(self):
        """the symbols a caller supplies: slots, lam, and eta/gamma for pairs"""
        names = list(self.slots) + ["lam"]
        if self.kind == PAIR:
            names += ["eta", "gamma"]
        return names

    def admits_weight(self, value):
        tie = self.ties.get(lam)
        if tie is not None:
            return not value if tie == 0 else True
        return bool(value) or lam not in self.constraints

    def without_constraints(self):
        return FamilyDescriptor(self.name, self.algebra, self.R, self.S,
                                self.case, self.slots, (), self.ties,
                                self.supplementary)

    def to_json(self):
        out = OrderedDict([("name", self.name), ("algebra", self.algebra),
                           ("kind", self.kind), ("slots", list(self.slots)),
                           ("R", [[str(v) for v in row] for row in self.R]),
                           ("constraints", [str(c) + " != 0"
                                            for c in self.constraints]),
                           ("ties", {str(k): str(v)
                                     for k, v in self.ties.items()}),
                           ("supplementary", self.supplementary)])
        if self.case is not None:
            out["case"] = self.case
        if self.S is not None:
            out["S"] = [[str(v) for v in row] for row in self.S]
        return out


def _families():
    mu = 1 / lam
    out = []

    def op(name, algebra, R, **kw):
        out.append(FamilyDescriptor(name, algebra, R, **kw))

    def pair(name, case, R, S, **kw):
        out.append(FamilyDescriptor(name, case_algebra(case), R, S, case=case,
                                    **kw))

    one_plus = 1 + lam * k1
    op("A1-R1", "A1", [[k1, l1], [0, 0]], slots=("k1", "l1"))
    op("A1-R2", "A1", [[k1, l1], [0, 2 * k1 / one_plus]], slots=("k1", "l1"),
       constraints=(lam, one_plus))
    op("A1-R3", "A1", [[k1, l1], [0, 2 * k1]], slots=("k1", "l1"),
       ties={lam: 0})

    op("A2-R1", "A2", [[0, l1], [0, -l1]], slots=("l1",))
    op("A2-R2", "A2", [[0, l1], [0, 0]], slots=("l1",))
    op("A2-R3", "A2", [[k1, k1 - mu], [0, mu]], slots=("k1",),
       constraints=(lam,))

    pair("A1-pair-a", "A1", [[k1, l1], [0, 0]],
         [[0, l1 + k1 * eta / gamma], [0, k1]], slots=("k1", "l1"),
         constraints=(gamma,))
    pair("A1-pair-b", "A1", [[0, l1], [0, 0]], [[0, l1], [0, 0]],
         slots=("l1",), constraints=(gamma,))
    pair("A1-pair-c", "A1", [[k1, l1], [0, 2 * k1]],
         [[2 * k1, l1 - k1 * eta / gamma], [0, k1]], slots=("k1", "l1"),
         constraints=(gamma,), ties={lam: 0})
    kappa = 2 * k1 / one_plus
    pair("A1-pair-c-weighted", "A1", [[k1, l1], [0, kappa]],
         [[kappa, l1 + (k1 - kappa) * eta / gamma], [0, k1]],
         slots=("k1", "l1"), constraints=(gamma, lam, one_plus),
         supplementary=True)

    pair("A2-I-a", "A2-I", [[0, 0], [0, 0]], [[0, n1], [0, n2]],
         slots=("n1", "n2"), constraints=(gamma,))
    pair("A2-I-b", "A2-I", [[0, l1], [0, -l1]], [[0, n1], [0, -n1]],
         slots=("l1", "n1"), constraints=(gamma,))
    pair("A2-I-c", "A2-I", [[0, -mu], [0, mu]], [[mu, mu], [0, 0]],
         constraints=(gamma, lam))
    pair("A2-I-d", "A2-I", [[0, l1], [0, 0]], [[0, n1], [0, 0]],
         slots=("l1", "n1"), constraints=(gamma,))
    pair("A2-I-e", "A2-I", [[0, l1], [0, 0]], [[0, l1], [0, 0]],
         slots=("l1",), constraints=(gamma,))
    pair("A2-I-f", "A2-I", [[0, l1], [0, 0]], [[0, n1], [0, n2]],
         slots=("l1", "n1", "n2"), constraints=(gamma,))
    one_plus_n = 1 + lam * n2
    kappa = 2 * n2 / one_plus_n
    pair("A2-I-g", "A2-I", [[kappa, kappa - mu], [0, mu]],
         [[kappa, kappa - n2], [0, n2]], slots=("n2",),
         constraints=(gamma, lam, one_plus_n))
    pair("A2-I-h", "A2-I", [[2 * mu, mu], [0, mu]], [[mu, -mu], [0, 2 * mu]],
         constraints=(gamma, lam))
    pair("A2-I-i", "A2-I", [[0, -mu], [0, mu]], [[0, 0], [0, 0]],
         constraints=(gamma, lam))
    pair("A2-I-j", "A2-I", [[0, -mu], [0, mu]], [[mu, mu], [0, 0]],
         constraints=(gamma, lam))
    pair("A2-I-balanced", "A2-I", [[k1, k1 - mu], [0, mu]],
         [[mu, mu - k1], [0, k1]], slots=("k1",), constraints=(gamma, lam),
         ties={eta: -2 * gamma}, supplementary=True)

    pair("A2-II-a", "A2-II", [[0, l1], [0, -l1]], [[0, l1], [0, -l1]],
         slots=("l1",), constraints=(eta,))
    weighted = 2 * lam * k1 - 1
    s = k1 / weighted
    pair("A2-II-weighted", "A2-II", [[k1, k1 - mu], [0, mu]],
         [[s, s - mu], [0, mu]], slots=("k1",),
         constraints=(eta, lam, weighted), supplementary=True)
    return tuple(out)


FAMILIES = _families()


def family(name):
    for fam in FAMILIES:
        if fam.name == name:
            return fam
    raise InputError("unknown family {!r}".format(name))


def families_for(algebra, kind, case=None, supplementary=True):
    return [fam for fam in FAMILIES
            if fam.algebra == algebra and fam.kind == kind and
            (case is None or fam.case == case) and
            (supplementary or not fam.supplementary)]

#------------------------------------------------------------------------------#
#    evaluating family formulas
#------------------------------------------------------------------------------#

def evaluate(expr, values, field):
    """exact value of a rational expression in the family symbols"""
    if isinstance(expr, int):
        return field.convert(expr)
    if isinstance(expr, Symbol):
        try:
            return values[expr.name]
        except KeyError:
            raise InputError("no value for parameter {}".format(expr.name))
    if expr.is_Integer:
        return field.convert(int(expr))
    if expr.is_Rational:
        return fdiv(field.convert(int(expr.p)), field.convert(int(expr.q)),
                    field)
    if expr.is_Add:
        total = field.zero
        for arg in expr.args:
            total = total + evaluate(arg, values, field)
        return total
    if expr.is_Mul:
        total = field.one
        for arg in expr.args:
            total = total * evaluate(arg, values, field)
        return total
    if expr.is_Pow and expr.exp.is_Integer:
        base = evaluate(expr.base, values, field)
        exponent = int(expr.exp)
        if exponent < 0:
            base = finv(base, field)
            exponent = -exponent
        result = field.one
        for _ in range(exponent):
            result = result * base
        return result
    raise InputError("unsupported family expression {}".format(expr))


def denominators(expr):
    """bases of negative integer powers in expr"""
    if isinstance(expr, int):
        return set()
    found = set()
    for node in _walk(expr):
        if node.is_Pow and node.exp.is_Integer and node.exp < 0:
            found.add(node.base)
    return found


def _walk(expr):
    yield expr
    for arg in expr.args:
        yield from _walk(arg)


def _matrix(rows, values, field):
    return field.array([[evaluate(v, values, field) for v in row]
                        for row in rows])


def _with_ties(fam, values, field):
    out = dict(values)
    for sym, expr in fam.ties.items():
        out[sym.name] = evaluate(expr, out, field)
    return out


def instantiate(fam, values, field):
    """(R, S) for the parameter values; S is None for operator families"""
    values = _with_ties(fam, values, field)
    for constraint in fam.constraints:
        if not evaluate(constraint, values, field):
            raise ConstraintViolated("{}: {} vanishes".format(fam.name,
                                                             constraint))
    try:
        R = _matrix(fam.R, values, field)
        S = None if fam.S is None else _matrix(fam.S, values, field)
    except DivisionByZero as error:
        raise ConstraintViolated("{}: {}".format(fam.name, error))
    return R, S


def match_family(op_or_pair, fam, lam_value, field, r_params=None):
    """slot values reproducing the operator (or pair), or None"""
    if fam.kind == PAIR:
        R, S = op_or_pair
    else:
        R, S = op_or_pair, None
    mats = {"R": R, "S": S}
    values = {"lam": field.convert(lam_value)}
    if r_params:
        values.update(r_params)
    for slot in fam.slots:
        which, i, j = PIVOTS[slot]
        values[slot] = mats[which][i][j]
    for sym, expr in fam.ties.items():
        if evaluate(expr, values, field) != values[sym.name]:
            return None
    try:
        R_fam, S_fam = instantiate(fam, values, field)
    except (ConstraintViolated, DivisionByZero):
        return None
    if not equal(R_fam, R):
        return None
    if S is not None and not equal(S_fam, S):
        return None
    return {slot: values[slot] for slot in fam.slots}

#------------------------------------------------------------------------------#
#    verifying families
#------------------------------------------------------------------------------#

class Counterexample:

    def __init__(self, family, values, failing, field):
        self.family = family
        self.values = values
        self.failing = failing
        self.field = field

    def __repr__(self):
        return "Counterexample({}, {})".format(self.family, self.failing)

    def to_json(self):
        return {"family": self.family,
                "values": {k: to_text(v, self.field)
                           for k, v in sorted(self.values.items())},
                "failing": list(self.failing)}


def r_instance_for(fam, values, field):
    return RInstance(fam.case, field, values["eta"], values["gamma"])


def check_instance(fam, values, field, criterion=CRITERION_TRIANGULAR):
    """names of the failed checks for one instance (empty when it passes)"""
    values = _with_ties(fam, values, field)
    R, S = instantiate(fam, values, field)
    alg = builtin_algebra(fam.algebra, field)
    lam_value = values["lam"]
    if fam.kind == OPERATOR:
        return [] if check_reynolds(alg, lam_value, R) is OK else ["reynolds"]
    ctx = ReynoldsContext(alg, lam_value, R, validate=False)
    r = r_instance_for(fam, values, field).r
    if criterion == CRITERION_BUNDLE:
        report = check_reynolds_bialgebra(coboundary_bundle(ctx, S, r))
        return [name for name, ok in report.flags().items() if not ok]
    report = check_triangular(ctx, S, r)
    return [name for name, ok in report.flags.items()
            if name != "bundle" and not ok]


def sample_values(fam, field, rng, height=DEFAULT_HEIGHT, max_draws=1000,
                  fixed=None):
    """random parameter values honoring the family's ties and constraints;
    `fixed` pins some parameters"""
    fixed = {k: field.convert(v) for k, v in (fixed or {}).items()}
    tied = {sym.name for sym in fam.ties}
    free = [name for name in fam.parameters()
            if name not in tied and name not in fixed]
    for _ in range(max_draws):
        values = {name: sample(field, rng, height) for name in free}
        values.update(fixed)
        values = _with_ties(fam, values, field)
        try:
            if all(evaluate(c, values, field) for c in fam.constraints):
                return values
        except DivisionByZero:
            continue
    raise ConstraintViolated("no admissible parameters for {} after {} draws"
                             .format(fam.name, max_draws))


def verify_family(fam, trials=20, seed=0, field=None,
                  criterion=CRITERION_TRIANGULAR, height=DEFAULT_HEIGHT):
    if isinstance(fam, str):
        fam = family(fam)
    if field is None:
        field = rationals()
    rng = make_rng(seed)
    for _ in range(trials):
        values = sample_values(fam, field, rng, height)
        failing = check_instance(fam, values, field, criterion)
        if failing:
            return Counterexample(fam.name, values, failing, field)
    return OK


def family_instances(fam, field, lam_value, r_params=None):
    """every admissible slot assignment over a finite field"""
    base = {"lam": field.convert(lam_value)}
    if r_params:
        base.update(r_params)
    for combo in itertools.product(field.elements(), repeat=len(fam.slots)):
        values = dict(base)
        values.update(zip(fam.slots, combo))
        try:
            for sym, expr in fam.ties.items():
                if evaluate(expr, values, field) != values[sym.name]:
                    raise ConstraintViolated(fam.name)
            instantiate(fam, values, field)
        except (ConstraintViolated, DivisionByZero):
            continue
        yield values

#------------------------------------------------------------------------------#
#    enumeration over F_p
#------------------------------------------------------------------------------#

class EnumerationReport:

    def __init__(self, p, lam, algebra, scanned, solutions, matches,
                 unmatched, unexplained, case=None, r_params=None,
                 criterion=None):
        self.p = p
        self.lam = lam
        self.algebra = algebra
        self.scanned = scanned
        self.solutions = solutions
        self.matches = matches
        self.unmatched = unmatched
        self.unexplained = unexplained
        self.case = case
        self.r_params = r_params
        self.criterion = criterion

    @property
    def finding(self):
        return bool(self.unmatched)

    def to_json(self):
        out = OrderedDict([("p", self.p), ("lambda", self.lam),
                           ("algebra", self.algebra),
                           ("scanned", self.scanned),
                           ("found", len(self.solutions)),
                           ("solutions", self.solutions),
                           ("matches", self.matches),
                           ("unmatched", self.unmatched),
                           ("unexplained", self.unexplained)])
        if self.case is not None:
            out["case"] = self.case
            out["r_params"] = self.r_params
            out["criterion"] = self.criterion
        return out


def _matrix_from_index(field, p, index):
    digits = []
    for _ in range(4):
        index, digit = divmod(index, p)
        digits.append(digit)
    return field.array([[digits[3], digits[2]], [digits[1], digits[0]]])


def _residues(mat, field):
    return [[field.residue(v) for v in row] for row in mat]


def _ranges(total, chunks):
    chunks = max(1, min(chunks, total)) if total else 1
    step, extra = divmod(total, chunks)
    start = 0
    for k in range(chunks):
        stop = start + step + (1 if k < extra else 0)
        yield start, stop
        start = stop


def _run_chunks(worker, args, total, chunks, workers, progress):
    ranges = list(_ranges(total, chunks))
    found = []
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            jobs = [pool.submit(worker, *args, start, stop)
                    for start, stop in ranges]
            for done, job in enumerate(jobs, 1):
                found.extend(job.result())
                if progress:
                    progress(done, len(ranges))
    else:
        for done, (start, stop) in enumerate(ranges, 1):
            found.extend(worker(*args, start, stop))
            if progress:
                progress(done, len(ranges))
    return sorted(found)


def _check_field(alg, p):
    field = prime_field(p)
    if alg.field != field:
        raise FieldMismatch("enumeration over F_{} needs an algebra over F_{}, "
                            "got {!r}".format(p, p, alg.field))
    return field


def _reynolds_chunk(c, p, lam_value, start, stop):
    """plain-int worker: residues of the Reynolds operators in [start, stop)"""
    field = prime_field(p)
    alg = LeibnizAlgebra(field, field.array(c), validate=False)
    lam_value = field.convert(lam_value)
    out = []
    for index in range(start, stop):
        R = _matrix_from_index(field, p, index)
        if check_reynolds(alg, lam_value, R) is OK:
            out.append(_residues(R, field))
    return out


def _reynolds_list(alg, p, lam_value, chunks=1, workers=None, progress=None):
    c = [[[alg.field.residue(v) for v in row] for row in plane]
         for plane in alg.c]
    return _run_chunks(_reynolds_chunk, (c, p, int(lam_value)), p ** 4,
                       chunks, workers, progress)


def _match_counts(solutions, fams, field, lam_value, pairs, r_params=None):
    matches = OrderedDict((fam.name, 0) for fam in fams)
    unmatched, unexplained = [], []
    for sol in solutions:
        if pairs:
            target = (field.array(sol[0]), field.array(sol[1]))
        else:
            target = field.array(sol)
        published = explained = False
        for fam in fams:
            if match_family(target, fam, lam_value, field, r_params) is None:
                continue
            matches[fam.name] += 1
            explained = True
            if not fam.supplementary:
                published = True
        if not published:
            unmatched.append(sol)
        if not explained:
            unexplained.append(sol)
    return matches, unmatched, unexplained


def enumerate_reynolds(alg, p, lam_value, chunks=1, workers=None,
                       progress=None):
    """every Reynolds operator on a 2-dimensional algebra over F_p"""
    field = _check_field(alg, p)
    if alg.dim != 2:
        raise InputError("enumeration is limited to dimension 2")
    lam_value = field.residue(field.convert(lam_value))
    solutions = _reynolds_list(alg, p, lam_value, chunks, workers, progress)
    name = identify_algebra(alg)
    fams = families_for(name, OPERATOR) if name else []
    matches, unmatched, unexplained = _match_counts(solutions, fams, field,
                                                    lam_value, False)
    return EnumerationReport(p, lam_value, name, p ** 4, solutions, matches,
                             unmatched, unexplained)


def _pair_chunk(c, p, lam_value, r, reynolds, criterion, start, stop):
    """plain-int worker: residues of the admissible (R, S) pairs"""
    field = prime_field(p)
    alg = LeibnizAlgebra(field, field.array(c), validate=False)
    lam_value = field.convert(lam_value)
    r = field.array(r)
    out = []
    per = p ** 4
    for index in range(start, stop):
        R = field.array(reynolds[index // per])
        S = _matrix_from_index(field, p, index % per)
        ctx = ReynoldsContext(alg, lam_value, R, validate=False)
        if criterion == CRITERION_BUNDLE:
            ok = check_reynolds_bialgebra(coboundary_bundle(ctx, S, r)).ok
        elif not (equal(field.dot(S, r), field.dot(r, R.T)) and
                  equal(field.dot(r, S.T), field.dot(R, r))):
            continue
        else:
            ok = check_triangular(ctx, S, r).ok
        if ok:
            out.append([_residues(R, field), _residues(S, field)])
    return out


def enumerate_triangular_pairs(alg, r_instance, p, lam_value,
                               criterion=CRITERION_TRIANGULAR, chunks=1,
                               workers=None, progress=None):
    """every (R, S) with R Reynolds making (g, delta_r, R, S) admissible"""
    field = _check_field(alg, p)
    if criterion not in CRITERIA:
        raise InputError("unknown criterion {!r}".format(criterion))
    if r_instance.field != field:
        raise FieldMismatch("r-matrix lives over {!r}".format(r_instance.field))
    if case_algebra(r_instance.case) != identify_algebra(alg):
        raise InputError("r-matrix case {} does not belong to this algebra"
                         .format(r_instance.case))
    lam_value = field.residue(field.convert(lam_value))
    reynolds = _reynolds_list(alg, p, lam_value)
    c = [[[field.residue(v) for v in row] for row in plane] for plane in alg.c]
    r = _residues(r_instance.r, field)
    total = len(reynolds) * p ** 4
    solutions = _run_chunks(_pair_chunk,
                            (c, p, lam_value, r, reynolds, criterion),
                            total, chunks, workers, progress)
    fams = families_for(case_algebra(r_instance.case), PAIR,
                        case=r_instance.case)
    r_params = r_instance.params()
    matches, unmatched, unexplained = _match_counts(
        solutions, fams, field, lam_value, True, r_params)
    return EnumerationReport(
        p, lam_value, identify_algebra(alg), total, solutions, matches,
        unmatched, unexplained, case=r_instance.case,
        r_params={k: to_text(v, field) for k, v in r_params.items()},
        criterion=criterion)
