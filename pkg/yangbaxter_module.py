#!/usr/bin/env python3

#------------------------------------------------------------------------------#
#
#    r-matrices, the classical Leibniz Yang-Baxter equation (cLYBe) and its
#    S-admissible refinement, coboundary coproducts, O-operators and the
#    Pi-admissible equations.
#
#    r = sum r[j][k] e_j (x) e_k is an n x n matrix; r^tau is its transpose.
#    Elements of g (x) g (x) g are n x n x n arrays.
#
#------------------------------------------------------------------------------#

from collections import OrderedDict

from fields import (DimensionMismatch, InputError, PreconditionFailed,
                    FieldSpec, det, inverse, to_text, equal,
                    array_to_text, array_from_text)
from leibniz_module import (OK, ReynoldsContext, first_violation,
                            check_reynolds, check_square, left_matrices,
                            right_matrices, left_mult, right_mult,
                            pair_brackets, apply_to_stack)
from representations_module import (check_reynolds_representation,
                                     check_beta_admissible,
                                     check_adjoint_admissible,
                                     dual_representation, semidirect_product,
                                     block_diag, act_columns, mult,
                                     mult_right, matrix_violation)
from bialgebra_module import (BialgebraBundle, check_reynolds_bialgebra)

#------------------------------------------------------------------------------#
#    r-matrices
#------------------------------------------------------------------------------#

class RMatrix:

    def __init__(self, field, r):
        r = field.norm(r)
        if r.ndim != 2 or r.shape[0] != r.shape[1]:
            raise DimensionMismatch("an r-matrix must be square, got {}"
                                    .format(r.shape))
        self.field = field
        self.r = r
        self.r.setflags(write=False)

    @property
    def dim(self):
        return self.r.shape[0]

    def is_symmetric(self):
        return equal(self.r, self.r.T)

    def flipped(self):
        return RMatrix(self.field, self.r.T.copy())

    def __repr__(self):
        return "RMatrix(dim={}, {!r})".format(self.dim, self.field)

    def to_json(self):
        out = dict(self.field.to_json())
        out["dim"] = self.dim
        out["r"] = array_to_text(self.r, self.field)
        return out

    @classmethod
    def from_json(cls, obj):
        field = FieldSpec.from_json(obj)
        try:
            n = int(obj["dim"])
            return cls(field, array_from_text(obj["r"], field, shape=(n, n)))
        except (KeyError, TypeError, ValueError) as error:
            raise InputError("malformed r-matrix: {}".format(error))


def r_array(r, alg):
    if isinstance(r, RMatrix):
        r = r.r
    r = alg.field.norm(r)
    check_square(alg, r, "r")
    return r


def is_symmetric(r):
    return equal(r, r.T)

#------------------------------------------------------------------------------#
#    products r_ab r_cd in g (x) g (x) g
#------------------------------------------------------------------------------#

SLOT_LABELS = {1: "u", 2: "v", 3: "w"}


def r_product(alg, X, slots_x, Y, slots_y):
    """X placed at slots_x, Y at slots_y; the shared slot gets [X leg, Y leg]"""
    shared = set(slots_x) & set(slots_y)
    if len(shared) != 1:
        raise DimensionMismatch("factors must share exactly one slot")
    shared = shared.pop()
    sub_x = "".join("x" if s == shared else SLOT_LABELS[s] for s in slots_x)
    sub_y = "".join("y" if s == shared else SLOT_LABELS[s] for s in slots_y)
    subscripts = "{},{},xy{}->uvw".format(sub_x, sub_y, SLOT_LABELS[shared])
    return alg.field.einsum(subscripts, X, Y, alg.c)


def clybe_defect(alg, r):
    """r12 r23 + r13 r23 - r12^tau r13 - r13^tau r12"""
    field = alg.field
    r = r_array(r, alg)
    t = r.T.copy()
    return field.norm(r_product(alg, r, (1, 2), r, (2, 3)) +
                      r_product(alg, r, (1, 3), r, (2, 3)) -
                      r_product(alg, t, (1, 2), r, (1, 3)) -
                      r_product(alg, t, (1, 3), r, (1, 2)))


def on_slot(field, M, T, slot):
    """apply the operator M to one slot of a three-fold tensor"""
    if slot == 1:
        return field.einsum("au,uvw->avw", M, T)
    if slot == 2:
        return field.einsum("bv,uvw->ubw", M, T)
    return field.einsum("cw,uvw->uvc", M, T)

#------------------------------------------------------------------------------#
#    coboundary coproducts
#------------------------------------------------------------------------------#

def coboundary_coproduct(alg, r):
    """delta_r(x) = -r1 (x) [r2, x] + [r2, x] (x) r1 + [x, r2] (x) r1"""
    field = alg.field
    r = r_array(r, alg)
    c = alg.c
    return field.norm(-field.einsum("ak,kib->iab", r, c) +
                      field.einsum("bk,kia->iab", r, c) +
                      field.einsum("bk,ika->iab", r, c))


def _stacked(alg, mats):
    field = alg.field
    if alg.dim == 0:
        return field.zeros((0, 0, 0))
    return field.array(mats)


def coboundary_conditions(alg, r):
    """the three conditions under which delta_r is a Leibniz bialgebra"""
    field = alg.field
    r = r_array(r, alg)
    D = field.norm(r.T - r)
    Lm = _stacked(alg, left_matrices(alg))
    Rm = _stacked(alg, right_matrices(alg))
    zeros = field.zeros((alg.dim,) * 4)
    out = OrderedDict()

    # (R_x (x) R_y)(r^tau - r)
    stack = field.einsum("xab,bc,ydc->xyad", Rm, D, Rm)
    out["coboundary-right"] = first_violation("coboundary-right", stack,
                                              zeros, field, 2)

    # (L_x (x) R_y + R_y (x) L_x + L_y (x) L_x)(r^tau - r)
    stack = field.norm(field.einsum("xab,bc,ydc->xyad", Lm, D, Rm) +
                       field.einsum("yab,bc,xdc->xyad", Rm, D, Lm) +
                       field.einsum("yab,bc,xdc->xyad", Lm, D, Lm))
    out["coboundary-mixed"] = first_violation("coboundary-mixed", stack,
                                              zeros, field, 2)

    residuals = field.zeros((alg.dim,) * 4)
    for x in range(alg.dim):
        residuals[x] = cubic_residual(alg, r, x)
    out["coboundary-cubic"] = first_violation(
        "coboundary-cubic", residuals, field.zeros(residuals.shape), field, 1)
    return out


def cubic_residual(alg, r, x):
    """the three-fold condition on delta_r at the basis element e_x"""
    field = alg.field
    e = field.basis_vector(alg.dim, x)
    Lx, Rx = left_mult(alg, e), right_mult(alg, e)
    P = field.norm(Lx + Rx)
    t = r.T.copy()

    def prod(X, sx, Y, sy):
        return r_product(alg, X, sx, Y, sy)

    first = field.norm(prod(r, (1, 2), t, (2, 3)) + prod(r, (1, 3), t, (2, 3)) -
                       prod(r, (1, 2), t, (1, 3)) - prod(t, (1, 3), r, (1, 2)))
    second = field.norm(prod(r, (1, 2), r, (2, 3)) + prod(r, (1, 3), r, (2, 3)) -
                        prod(t, (1, 2), r, (1, 3)) - prod(t, (1, 3), t, (1, 2)))
    third = field.norm(prod(r, (2, 3), t, (1, 3)) + prod(t, (1, 2), t, (1, 3)) -
                       prod(t, (2, 3), t, (1, 2)) - prod(t, (1, 2), t, (2, 3)))
    return field.norm(on_slot(field, P, first, 2) -
                      on_slot(field, Rx, second, 3) -
                      on_slot(field, P, third, 1))


def check_coboundary_conditions(alg, r):
    return tuple(w is OK for w in coboundary_conditions(alg, r).values())

#------------------------------------------------------------------------------#
#    S-admissible cLYBe
#------------------------------------------------------------------------------#

def admissible_clybe_conditions(ctx, S, r):
    alg, field = ctx.alg, ctx.field
    r = r_array(r, alg)
    S = field.norm(S)
    check_square(alg, S, "S")
    R = ctx.R
    defect = clybe_defect(alg, r)
    out = OrderedDict()
    out["clybe"] = first_violation("clybe", defect, field.zeros(defect.shape),
                                   field, 3)
    # (S (x) id - id (x) R) r = 0
    out["intertwine-first"] = first_violation(
        "intertwine-first", field.dot(S, r), field.dot(r, R.T.copy()), field, 2)
    # (id (x) S - R (x) id) r = 0
    out["intertwine-second"] = first_violation(
        "intertwine-second", field.dot(r, S.T.copy()), field.dot(R, r), field, 2)
    return out


def check_admissible_clybe(ctx, S, r):
    return tuple(w is OK for w in admissible_clybe_conditions(ctx, S, r).values())


def _tensor_residuals(ctx, S, r):
    """per x, the residual u A^T + B v of each tensor-admissibility condition"""
    alg, field, R, lam = ctx.alg, ctx.field, ctx.R, ctx.lam
    n = alg.dim
    t = r.T.copy()
    St, Rt = S.T.copy(), R.T.copy()
    u_first = field.norm(field.dot(S, r) - field.dot(r, Rt))
    u_second = field.norm(field.dot(r, St) - field.dot(R, r))
    out = [field.zeros((n, n, n)) for _ in range(3)]
    for x in range(n):
        e = field.basis_vector(n, x)
        Sx = field.dot(S, e.reshape(n, 1)).reshape(n)
        Rx = field.dot(R, e.reshape(n, 1)).reshape(n)
        L_x, R_x = left_mult(alg, e), right_mult(alg, e)
        L_Sx, R_Sx = left_mult(alg, Sx), right_mult(alg, Sx)
        L_Rx, R_Rx = left_mult(alg, Rx), right_mult(alg, Rx)
        SR_x, SL_x = field.dot(S, R_x), field.dot(S, L_x)

        A = field.norm(R_Sx - field.dot(S, R_Sx) * lam - SR_x)
        B = field.norm(R_Sx + L_Sx - SR_x - SL_x -
                       field.dot(S, R_Sx) * lam - field.dot(S, L_Sx) * lam)
        v = field.norm(field.dot(R, t) - field.dot(t, St))
        out[0][x] = field.norm(field.dot(u_first, A.T.copy()) + field.dot(B, v))

        A = field.norm(R_Rx - field.dot(R, R_x) + field.dot(R, R_Rx) * lam)
        B = field.norm(field.dot(S, R_Rx) * lam + field.dot(S, L_Rx) * lam -
                       SR_x - R_Rx - L_Rx - SL_x)
        v = field.norm(field.dot(S, t) - field.dot(t, Rt))
        out[1][x] = field.norm(field.dot(u_first, A.T.copy()) + field.dot(B, v))

        A = field.norm(R_Rx + SR_x - field.dot(S, R_Rx) * lam)
        B = field.norm(field.dot(R, L_x) + field.dot(R, R_x) - R_Rx - L_Rx -
                       field.dot(R, R_Rx) * lam - field.dot(R, L_Rx) * lam)
        v = field.norm(field.dot(t, St) - field.dot(R, t))
        out[2][x] = field.norm(field.dot(u_second, A.T.copy()) + field.dot(B, v))
    return out


def tensor_admissibility_conditions(ctx, S, r):
    alg, field = ctx.alg, ctx.field
    r = r_array(r, alg)
    S = field.norm(S)
    check_square(alg, S, "S")
    if check_adjoint_admissible(ctx, S) is not OK:
        raise PreconditionFailed("S is not adjoint admissible to the "
                                 "Reynolds algebra")
    names = ("tensor-coalgebra", "tensor-left", "tensor-right")
    out = OrderedDict()
    for name, residual in zip(names, _tensor_residuals(ctx, S, r)):
        out[name] = first_violation(name, residual,
                                    field.zeros(residual.shape), field, 1)
    return out


def check_tensor_admissibility(ctx, S, r):
    return tuple(w is OK
                 for w in tensor_admissibility_conditions(ctx, S, r).values())


def coboundary_bundle(ctx, S, r):
    """the raw bundle (g, delta_r, lambda, R, S)"""
    alg = ctx.alg
    return BialgebraBundle(alg, coboundary_coproduct(alg, r), ctx.lam, ctx.R,
                           S, validate=False)


def check_coboundary_bialgebra(ctx, S, r):
    """admissibility of S, the coboundary conditions and the tensor
    conditions; together they make delta_r a Reynolds Leibniz bialgebra"""
    alg, field = ctx.alg, ctx.field
    S = field.norm(S)
    out = OrderedDict()
    out["adjoint-admissible"] = check_adjoint_admissible(ctx, S) is OK
    for name, witness in coboundary_conditions(alg, r).items():
        out[name] = witness is OK
    if out["adjoint-admissible"]:
        for name, witness in tensor_admissibility_conditions(ctx, S, r).items():
            out[name] = witness is OK
    else:
        for name in ("tensor-coalgebra", "tensor-left", "tensor-right"):
            out[name] = None
    return out


class TriangularReport:

    def __init__(self, flags):
        self.flags = OrderedDict(flags)

    @property
    def ok(self):
        return all(self.flags[name] for name in TRIANGULAR_ITEMS)

    def to_json(self):
        return {"triangular": self.ok, "items": dict(self.flags)}


TRIANGULAR_ITEMS = ("reynolds", "adjoint-admissible", "symmetric", "clybe",
                    "intertwine-first", "intertwine-second")


def check_triangular(ctx, S, r):
    """R Reynolds, S adjoint admissible, r symmetric and solving the
    S-admissible cLYBe; the bundle check on delta_r is reported alongside"""
    alg, field = ctx.alg, ctx.field
    r = r_array(r, alg)
    S = field.norm(S)
    check_square(alg, S, "S")
    flags = [("reynolds", check_reynolds(alg, ctx.lam, ctx.R) is OK),
             ("adjoint-admissible", check_adjoint_admissible(ctx, S) is OK),
             ("symmetric", is_symmetric(r))]
    for name, witness in admissible_clybe_conditions(ctx, S, r).items():
        flags.append((name, witness is OK))
    flags.append(("bundle",
                  check_reynolds_bialgebra(coboundary_bundle(ctx, S, r)).ok))
    return TriangularReport(flags)

#------------------------------------------------------------------------------#
#    O-operators
#------------------------------------------------------------------------------#

O_NONE = "none"
O_WEAK = "weak"
O_FULL = "full"


def r_sharp(r, field=None):
    """r read as the map e^j -> sum_k r[j][k] e_k"""
    if isinstance(r, RMatrix):
        field, r = r.field, r.r
    return field.norm(r).T.copy()


def is_nondegenerate(r, field=None):
    if isinstance(r, RMatrix):
        field, r = r.field, r.r
    return bool(det(field.norm(r), field))


def o_operator_conditions(T, rep, ctx, alpha):
    field, alg = ctx.field, ctx.alg
    T = field.norm(T)
    alpha = field.norm(alpha)
    if T.shape != (alg.dim, rep.vdim):
        raise DimensionMismatch("T must be {}x{}, got {}"
                                .format(alg.dim, rep.vdim, T.shape))
    if alpha.shape != (rep.vdim, rep.vdim):
        raise DimensionMismatch("alpha must be {0}x{0}".format(rep.vdim))
    out = OrderedDict()
    # [Tu, Tv] = T(rhoL(Tu)v + rhoR(Tv)u)
    left = field.einsum("iu,jv,ijk->uvk", T, T, alg.c)
    inner = field.norm(field.einsum("iu,iav->uva", T, rep.rhoL) +
                       field.einsum("iv,iau->uva", T, rep.rhoR))
    out["o-operator"] = first_violation("o-operator", left,
                                        apply_to_stack(field, T, inner),
                                        field, 2)
    out["o-operator-commutes"] = first_violation(
        "o-operator-commutes", field.dot(ctx.R, T), field.dot(T, alpha),
        field, 2)
    return out


def check_O_operator(T, rep, ctx, alpha):
    if any(w is not OK for w in o_operator_conditions(T, rep, ctx, alpha).values()):
        return O_NONE
    if check_reynolds_representation(rep, ctx, alpha) is OK:
        return O_FULL
    return O_WEAK


def lift_O_operator(T, rep, ctx, alpha, beta, S):
    """(g + V*, R + beta^T), r = T + tau(T) and S + alpha^T"""
    field = ctx.field
    T, alpha = field.norm(T), field.norm(alpha)
    beta, S = field.norm(beta), field.norm(S)
    n, m = ctx.dim, rep.vdim
    if T.shape != (n, m):
        raise DimensionMismatch("T must be {}x{}, got {}".format(n, m, T.shape))
    if check_beta_admissible(rep, ctx, beta) is not OK:
        raise PreconditionFailed("beta is not admissible to the Reynolds "
                                 "algebra on this representation")
    check_square(ctx.alg, S, "S")
    alg, op = semidirect_product(dual_representation(rep), ctx,
                                 beta.T.copy())
    double = ReynoldsContext(alg, ctx.lam, op)
    lifted = field.zeros((n + m, n + m))
    lifted[:n, n:] = T
    lifted[n:, :n] = T.T
    return double, lifted, block_diag(field, S, alpha.T.copy())

#------------------------------------------------------------------------------#
#    cross admissibility and the semidirect equivalence
#------------------------------------------------------------------------------#

def cross_admissibility_conditions(ctx, S, rep, alpha, beta):
    """b rho(Sx) + rho(Sx) a = b rho(x) a + lam b rho(Sx) a, for rhoL, rhoR"""
    field = ctx.field
    S, alpha, beta = field.norm(S), field.norm(alpha), field.norm(beta)
    out = OrderedDict()
    for name, stack in (("cross-left", rep.rhoL), ("cross-right", rep.rhoR)):
        PS = act_columns(field, stack, S)
        PSa = mult_right(field, PS, alpha)
        left = field.norm(mult(field, beta, PS) + PSa)
        right = field.norm(mult(field, beta, mult_right(field, stack, alpha)) +
                           mult(field, beta, PSa) * ctx.lam)
        out[name] = matrix_violation(name, left, right, field)
    return out


def check_cross_admissibility(ctx, S, rep, alpha, beta):
    return tuple(w is OK for w in
                 cross_admissibility_conditions(ctx, S, rep, alpha, beta).values())


def check_dual_cross_admissibility(ctx, S, rep, alpha, beta):
    """the cross conditions restated on V* with beta^T and alpha^T"""
    field = ctx.field
    alpha, beta = field.norm(alpha), field.norm(beta)
    return check_cross_admissibility(ctx, S, dual_representation(rep),
                                     beta.T.copy(), alpha.T.copy())


def semidirect_admissibility(ctx, S, rep, alpha, beta):
    """(on V, on V*, itemized) forms of one compatibility system"""
    field = ctx.field
    S, alpha, beta = field.norm(S), field.norm(alpha), field.norm(beta)

    def on(module, op_block, map_block):
        alg, op = semidirect_product(module, ctx, op_block)
        if check_reynolds(alg, ctx.lam, op) is not OK:
            return False
        total = ReynoldsContext(alg, ctx.lam, op, validate=False)
        return check_adjoint_admissible(
            total, block_diag(field, S, map_block)) is OK

    on_module = on(rep, alpha, beta)
    on_dual = on(dual_representation(rep), beta.T.copy(), alpha.T.copy())
    itemized = (check_reynolds_representation(rep, ctx, alpha) is OK and
                check_adjoint_admissible(ctx, S) is OK and
                check_beta_admissible(rep, ctx, beta) is OK and
                all(check_cross_admissibility(ctx, S, rep, alpha, beta)))
    return on_module, on_dual, itemized

#------------------------------------------------------------------------------#
#    Pi-admissible equations
#------------------------------------------------------------------------------#

PI_PLUS = "x"
PI_MINUS = "-x"
PI_SHIFT = "-x+theta"
PI_INVERSE = "theta/x"
PI_VARIANTS = (PI_PLUS, PI_MINUS, PI_SHIFT, PI_INVERSE)


class PiForm:
    """x, -x, -x + theta or theta x^-1"""

    def __init__(self, variant, theta=None, field=None):
        if variant not in PI_VARIANTS:
            raise InputError("unknown Pi variant {!r}".format(variant))
        if variant in (PI_SHIFT, PI_INVERSE):
            if theta is None or field is None:
                raise InputError("variant {} needs theta".format(variant))
            theta = field.convert(theta)
            if not theta:
                raise InputError("theta must be nonzero")
        else:
            theta = None
        self.variant = variant
        self.theta = theta
        self.field = field

    def __repr__(self):
        if self.theta is None:
            return "PiForm({})".format(self.variant)
        return "PiForm({}, theta={})".format(self.variant,
                                             to_text(self.theta, self.field))

    def apply(self, M, field):
        M = field.norm(M)
        if self.variant == PI_PLUS:
            return M
        if self.variant == PI_MINUS:
            return field.norm(-M)
        if self.variant == PI_SHIFT:
            return field.norm(field.eye(M.shape[0]) * self.theta - M)
        return field.scale(self.theta, inverse(M, field))

    def to_json(self):
        out = {"pi": self.variant}
        if self.theta is not None:
            out["theta"] = to_text(self.theta, self.field)
        return out

    @classmethod
    def from_json(cls, obj, field):
        try:
            return cls(obj["pi"], obj.get("theta"), field)
        except (KeyError, TypeError) as error:
            raise InputError("malformed Pi form: {}".format(error))


def _brackets(ctx):
    """[x,y], [x,Ry], [Rx,y], [Rx,Ry] as stacks"""
    alg, field, R = ctx.alg, ctx.field, ctx.R
    eye = field.eye(alg.dim)
    return (pair_brackets(alg, eye, eye), pair_brackets(alg, eye, R),
            pair_brackets(alg, R, eye), pair_brackets(alg, R, R))


def _first(*checks):
    for witness in checks:
        if witness is not OK:
            return witness
    return OK


def _algebra_equations(ctx, variant, theta, lam):
    field, R = ctx.field, ctx.R
    xy, xRy, Rxy, RxRy = _brackets(ctx)

    def Rof(stack):
        return apply_to_stack(field, R, stack)

    def eq(name, left, right):
        return first_violation(name, field.norm(left), field.norm(right),
                               field, 2)

    if variant == PI_PLUS:
        return _first(eq("pi-algebra-first", Rof(xRy), Rof(Rxy)),
                      eq("pi-algebra-second", Rof(Rxy), Rof(RxRy) * lam))
    if variant == PI_SHIFT:
        return _first(
            eq("pi-algebra-first", xy * theta - xRy - Rof(xy),
               (Rxy * theta - RxRy - Rof(Rxy)) * lam),
            eq("pi-algebra-second", xy * theta - Rxy - Rof(xy),
               (xRy * theta - RxRy - Rof(xRy)) * lam))
    if variant == PI_INVERSE:
        return _first(
            eq("pi-algebra-first", xy * theta - Rof(xRy),
               (Rxy * theta - Rof(RxRy)) * lam),
            eq("pi-algebra-second", xy * theta - Rof(Rxy),
               (xRy * theta - Rof(RxRy)) * lam))
    return OK


def _module_equations(ctx, rep, alpha, variant, theta, lam):
    field = ctx.field
    for side, stack in (("left", rep.rhoL), ("right", rep.rhoR)):
        P = stack
        Q = act_columns(field, stack, ctx.R)
        aQ = mult(field, alpha, Q)
        Pa = mult_right(field, P, alpha)
        Qa = mult_right(field, Q, alpha)
        aP = mult(field, alpha, P)
        aPa = mult(field, alpha, Pa)
        aQa = mult(field, alpha, Qa)

        def eq(name, left, right):
            return matrix_violation("{}-{}".format(name, side),
                                    field.norm(left), field.norm(right), field)

        if variant == PI_PLUS:
            witness = _first(eq("pi-module-first", aQ, aPa),
                             eq("pi-module-second", aPa, aQa * lam))
        elif variant == PI_SHIFT:
            witness = _first(
                eq("pi-module-first", P * theta - Pa - aP,
                   (Q * theta - Qa - aQ) * lam),
                eq("pi-module-second", P * theta - Q - aP,
                   (Pa * theta - Qa - aPa) * lam))
        elif variant == PI_INVERSE:
            witness = _first(
                eq("pi-module-first", P * theta - aPa,
                   (Q * theta - aQa) * lam),
                eq("pi-module-second", P * theta - aQ,
                   (Pa * theta - aQa) * lam))
        else:
            witness = OK
        if witness is not OK:
            return witness
    return OK


def _require_invertible(ctx, alpha, pi):
    if pi.variant == PI_INVERSE:
        inverse(ctx.R, ctx.field)
        inverse(alpha, ctx.field)


def check_pi_admissible(ctx, rep, alpha, pi):
    """the Pi-specialized compatibility system with beta = Pi(alpha) and
    S = Pi(R), on top of (rep, alpha) being a Reynolds representation"""
    field = ctx.field
    alpha = field.norm(alpha)
    _require_invertible(ctx, alpha, pi)
    witness = check_reynolds_representation(rep, ctx, alpha)
    if witness is not OK:
        return witness
    witness = _algebra_equations(ctx, pi.variant, pi.theta, ctx.lam)
    if witness is not OK:
        return witness
    return _module_equations(ctx, rep, alpha, pi.variant, pi.theta, ctx.lam)


def check_pi_admissible_weight_zero(ctx, rep, alpha, pi):
    """the same system with the weight-zero simplifications written out"""
    field = ctx.field
    if ctx.lam:
        raise PreconditionFailed("weight-zero equations need lambda = 0")
    alpha = field.norm(alpha)
    _require_invertible(ctx, alpha, pi)
    witness = check_reynolds_representation(rep, ctx, alpha)
    if witness is not OK or pi.variant == PI_MINUS:
        return witness

    R, theta = ctx.R, pi.theta
    xy, xRy, Rxy, _ = _brackets(ctx)
    zero2 = field.zeros(xy.shape)

    def Rof(stack):
        return apply_to_stack(field, R, stack)

    def eq(name, left, right):
        return first_violation(name, field.norm(left), field.norm(right),
                               field, 2)

    if pi.variant == PI_PLUS:
        witness = _first(eq("pi-zero-algebra-first", Rof(xRy), zero2),
                         eq("pi-zero-algebra-second", Rof(Rxy), zero2))
    elif pi.variant == PI_SHIFT:
        witness = _first(eq("pi-zero-algebra-first", xy * theta,
                            xRy + Rof(xy)),
                         eq("pi-zero-algebra-second", xy * theta,
                            Rxy + Rof(xy)))
    else:
        witness = _first(eq("pi-zero-algebra-first", xy * theta, Rof(xRy)),
                         eq("pi-zero-algebra-second", xy * theta, Rof(Rxy)))
    if witness is not OK:
        return witness

    for side, stack in (("left", rep.rhoL), ("right", rep.rhoR)):
        P = stack
        Q = act_columns(field, stack, R)
        zero3 = field.zeros(P.shape)
        aP = mult(field, alpha, P)
        aPa = mult_right(field, aP, alpha)

        def meq(name, left, right):
            return matrix_violation("{}-{}".format(name, side),
                                    field.norm(left), field.norm(right), field)

        if pi.variant == PI_PLUS:
            witness = _first(meq("pi-zero-module-first", mult(field, alpha, Q),
                                 zero3),
                             meq("pi-zero-module-second", aPa, zero3))
        elif pi.variant == PI_SHIFT:
            witness = _first(meq("pi-zero-module-first", P * theta,
                                 mult_right(field, P, alpha) + aP),
                             meq("pi-zero-module-second", P * theta, Q + aP))
        else:
            witness = _first(meq("pi-zero-module-first", P * theta, aPa),
                             meq("pi-zero-module-second", P * theta,
                                 mult(field, alpha, Q)))
        if witness is not OK:
            return witness
    return OK


def pi_semidirect_status(ctx, rep, alpha, pi):
    """the semidirect dual algebra with R + Pi(alpha)^T is a Reynolds algebra
    to which Pi(R) + alpha^T is adjoint admissible"""
    field = ctx.field
    alpha = field.norm(alpha)
    return semidirect_admissibility(ctx, pi.apply(ctx.R, field), rep, alpha,
                                    pi.apply(alpha, field))[1]
