#!/usr/bin/env python3

#------------------------------------------------------------------------------#
#
#    Leibniz coalgebras and bialgebras, Reynolds Leibniz bialgebras,
#    matched pairs, the double g + g* and Manin triples with the canonical
#    skew form.
#
#    A coproduct is a tensor d with delta(e_i) = sum_jk d[i][j][k] e_j (x) e_k.
#    An element of g (x) g is held as the n x n matrix of its coefficients, so
#    (phi (x) psi) M = phi M psi^T and the flip tau is the transpose.
#    The dual bracket has [e^j, e^k] = sum_i d[i][j][k] e^i.
#
#------------------------------------------------------------------------------#

from collections import OrderedDict

from fields import (DimensionMismatch, FieldMismatch, IdentityViolated,
                    InputError, NotSkew, Degenerate, DualNotLeibniz, FieldSpec,
                    det, inverse, to_text)
from leibniz_module import (OK, LeibnizAlgebra, ReynoldsContext,
                            first_violation, check_leibniz, check_reynolds,
                            check_tensor_shape, check_square, left_matrices,
                            right_matrices, operator_to_json,
                            operator_from_json)
from representations_module import (as_stack, check_adjoint_admissible,
                                     matched_pair_tensor, block_diag)

#------------------------------------------------------------------------------#
#    coproducts
#------------------------------------------------------------------------------#

def check_coleibniz(raw, field):
    """(id(x)delta)delta = (delta(x)id)delta + (tau(x)id)(id(x)delta)delta"""
    d = field.norm(raw)
    check_tensor_shape(d)
    A = field.einsum("ijk,klm->ijlm", d, d)
    B = field.einsum("ijk,jlm->ilmk", d, d)
    right = field.norm(B + A.transpose(0, 2, 1, 3))
    return first_violation("co-leibniz", A, right, field, 1)


class Coproduct:

    def __init__(self, field, d, validate=True):
        d = field.norm(d)
        check_tensor_shape(d)
        if validate:
            witness = check_coleibniz(d, field)
            if witness is not OK:
                raise IdentityViolated(witness)
        self.field = field
        self.d = d
        self.d.setflags(write=False)

    @property
    def dim(self):
        return self.d.shape[0]

    def __repr__(self):
        return "Coproduct(dim={}, {!r})".format(self.dim, self.field)

    @classmethod
    def zero(cls, field, n):
        return cls(field, field.zeros((n, n, n)))

    def to_json(self):
        out = dict(self.field.to_json())
        out["dim"] = self.dim
        out["delta"] = []
        for i in range(self.dim):
            terms = [{"j": j, "k": k, "v": to_text(self.d[i, j, k], self.field)}
                     for j in range(self.dim) for k in range(self.dim)
                     if self.d[i, j, k]]
            if terms:
                out["delta"].append({"i": i, "terms": terms})
        return out

    @classmethod
    def from_json(cls, obj, validate=True):
        field = FieldSpec.from_json(obj)
        try:
            n = int(obj["dim"])
            d = field.zeros((n, n, n))
            for row in obj.get("delta", []):
                i = int(row["i"])
                for term in row["terms"]:
                    d[i, int(term["j"]), int(term["k"])] = field.convert(term["v"])
        except (KeyError, TypeError, ValueError, IndexError) as error:
            raise InputError("malformed coproduct: {}".format(error))
        return cls(field, d, validate=validate)


def coproduct_tensor(delta, field):
    if isinstance(delta, Coproduct):
        return delta.d
    return field.norm(delta)


def dual_algebra(delta, field, validate=True):
    d = coproduct_tensor(delta, field)
    return LeibnizAlgebra(field, d.transpose(1, 2, 0), validate=validate)


def sandwich(field, A, stack, B):
    """stack of A M B^T"""
    return field.einsum("ab,xbc,dc->xad", A, stack, B)


def mixed(field, S, d):
    """d_S[x] = delta(S e_x)"""
    return field.einsum("ix,ijk->xjk", S, d)

#------------------------------------------------------------------------------#
#    Leibniz bialgebras
#------------------------------------------------------------------------------#

def check_leibniz_bialgebra(alg, delta):
    """(R_x (x) id) delta(y) = tau (R_y (x) id) delta(x), and
    delta([x,y]) = (D_x + D_x^T) R_y^T - (L_y + R_y)(D_x + D_x^T)
                   + D_y L_x^T + L_x D_y"""
    field = alg.field
    d = coproduct_tensor(delta, field)
    if d.shape != alg.c.shape:
        raise DimensionMismatch("coproduct of dim {} on algebra of dim {}"
                                .format(d.shape[0], alg.dim))
    n = alg.dim
    L = field.array(left_matrices(alg)) if n else field.zeros((0, 0, 0))
    R = field.array(right_matrices(alg)) if n else field.zeros((0, 0, 0))

    left = field.einsum("xaj,yjk->xyak", R, d)
    right = field.einsum("ykj,xja->xyak", R, d)
    witness = first_violation("bialgebra-flip", left, right, field, 2)
    if witness is not OK:
        return witness

    E = field.norm(d + d.transpose(0, 2, 1))
    left = field.einsum("xyk,kab->xyab", alg.c, d)
    right = field.norm(field.einsum("xab,ycb->xyac", E, R) -
                       field.einsum("yab,xbc->xyac", L, E) -
                       field.einsum("yab,xbc->xyac", R, E) +
                       field.einsum("yab,xcb->xyac", d, L) +
                       field.einsum("xab,ybc->xyac", L, d))
    return first_violation("bialgebra-bracket", left, right, field, 2)


def check_reynolds_coalgebra(delta, lam, S, field=None):
    """(S(x)S)delta + lam (S(x)S)delta S = (S(x)id)delta S + (id(x)S)delta S"""
    if field is None:
        field = delta.field
    d = coproduct_tensor(delta, field)
    S = field.norm(S)
    lam = field.convert(lam)
    if S.shape != d.shape[:2]:
        raise DimensionMismatch("S must be {0}x{0}, got {1}"
                                .format(d.shape[0], S.shape))
    eye = field.eye(d.shape[0])
    dS = mixed(field, S, d)
    left = field.norm(sandwich(field, S, d, S) +
                      sandwich(field, S, dS, S) * lam)
    right = field.norm(sandwich(field, S, dS, eye) + sandwich(field, eye, dS, S))
    return first_violation("reynolds-coalgebra", left, right, field, 1)


def tensor_condition_items(ctx, delta, S):
    """the two mixed conditions linking delta, R and S, per basis element"""
    field, R, lam = ctx.field, ctx.R, ctx.lam
    d = coproduct_tensor(delta, field)
    S = field.norm(S)
    eye = field.eye(ctx.dim)
    dR = mixed(field, R, d)

    # (id(x)R)delta R + (S(x)R)delta = (S(x)id)delta R + lam (S(x)R)delta R
    left = field.norm(sandwich(field, eye, dR, R) + sandwich(field, S, d, R))
    right = field.norm(sandwich(field, S, dR, eye) +
                       sandwich(field, S, dR, R) * lam)
    out = OrderedDict()
    out["tensor-left"] = first_violation("tensor-left", left, right, field, 1)

    # (R(x)id)delta R + (R(x)S)delta = (id(x)S)delta R + lam (R(x)S)delta R
    left = field.norm(sandwich(field, R, dR, eye) + sandwich(field, R, d, S))
    right = field.norm(sandwich(field, eye, dR, S) +
                       sandwich(field, R, dR, S) * lam)
    out["tensor-right"] = first_violation("tensor-right", left, right, field, 1)
    return out


def check_tensor_conditions(ctx, delta, S):
    for witness in tensor_condition_items(ctx, delta, S).values():
        if witness is not OK:
            return witness
    return OK

#------------------------------------------------------------------------------#
#    Reynolds Leibniz bialgebras
#------------------------------------------------------------------------------#

BIALGEBRA_ITEMS = ("leibniz-bialgebra", "reynolds-algebra",
                   "reynolds-coalgebra", "adjoint-admissible",
                   "tensor-conditions")


class BialgebraBundle:
    """(g, delta, lambda, R, S); validate=False gives the raw form"""

    def __init__(self, alg, delta, lam, R, S, validate=True):
        field = alg.field
        if not isinstance(delta, Coproduct):
            delta = Coproduct(field, delta, validate=False)
        if delta.field != field or delta.dim != alg.dim:
            raise DimensionMismatch("coproduct does not match the algebra")
        self.alg = alg
        self.delta = delta
        self.lam = field.convert(lam)
        self.R = field.norm(R)
        self.S = field.norm(S)
        check_square(alg, self.R, "R")
        check_square(alg, self.S, "S")
        if validate:
            report = check_reynolds_bialgebra(self)
            if not report.ok:
                raise IdentityViolated(report.first_witness())

    @property
    def field(self):
        return self.alg.field

    def context(self):
        return ReynoldsContext(self.alg, self.lam, self.R, validate=False)

    def to_json(self):
        field = self.field
        return {"algebra": self.alg.to_json(),
                "coproduct": self.delta.to_json(),
                "lambda": to_text(self.lam, field),
                "R": operator_to_json(self.R, field),
                "S": operator_to_json(self.S, field)}

    @classmethod
    def from_json(cls, obj, validate=False):
        try:
            alg = LeibnizAlgebra.from_json(obj["algebra"])
            delta = Coproduct.from_json(obj["coproduct"], validate=False)
            field = alg.field
            return cls(alg, delta, field.convert(obj["lambda"]),
                       operator_from_json(obj["R"], field),
                       operator_from_json(obj["S"], field), validate=validate)
        except (KeyError, TypeError) as error:
            raise InputError("malformed bialgebra bundle: {}".format(error))


class BialgebraReport:

    def __init__(self, items):
        self.items = OrderedDict(items)

    @property
    def ok(self):
        return all(w is OK for w in self.items.values())

    def first_witness(self):
        for witness in self.items.values():
            if witness is not OK:
                return witness
        return OK

    def flags(self):
        return OrderedDict((name, w is OK) for name, w in self.items.items())

    def to_json(self):
        return {"ok": self.ok,
                "items": [{"item": name, "ok": w is OK,
                           "witness": None if w is OK else w.to_json()}
                          for name, w in self.items.items()]}


def check_reynolds_bialgebra(bundle):
    """all five items, evaluated without short-circuiting"""
    alg, field, d = bundle.alg, bundle.field, bundle.delta.d
    ctx = bundle.context()

    first = check_coleibniz(d, field)
    if first is OK:
        first = check_leibniz_bialgebra(alg, d)
    items = [("leibniz-bialgebra", first),
             ("reynolds-algebra", check_reynolds(alg, bundle.lam, bundle.R)),
             ("reynolds-coalgebra",
              check_reynolds_coalgebra(d, bundle.lam, bundle.S, field)),
             ("adjoint-admissible", check_adjoint_admissible(ctx, bundle.S)),
             ("tensor-conditions", check_tensor_conditions(ctx, d, bundle.S))]
    return BialgebraReport(items)

#------------------------------------------------------------------------------#
#    matched pairs
#------------------------------------------------------------------------------#

def _stacks(field, mats, n, m):
    return as_stack(field, mats, n, m)


def check_matched_pair(ctx1, ctx2, rho1L, rho1R, rho2L, rho2R):
    """OK iff g1 + g2 with the matched-pair bracket and R1 + R2 is a
    Reynolds Leibniz algebra"""
    field = ctx1.field
    if ctx2.field != field:
        raise FieldMismatch("the two algebras live over different fields")
    if ctx2.lam != ctx1.lam:
        raise DimensionMismatch("the two operators have different weights")
    n1, n2 = ctx1.dim, ctx2.dim
    c = matched_pair_tensor(field, ctx1.alg.c, ctx2.alg.c,
                            _stacks(field, rho1L, n1, n2),
                            _stacks(field, rho1R, n1, n2),
                            _stacks(field, rho2L, n2, n1),
                            _stacks(field, rho2R, n2, n1))
    witness = check_leibniz(c, field)
    if witness is not OK:
        return witness
    total = LeibnizAlgebra(field, c, validate=False)
    return check_reynolds(total, ctx1.lam, block_diag(field, ctx1.R, ctx2.R))


def coadjoint_actions(alg):
    """(L*, -L* - R*) as transposed matrices"""
    field, n = alg.field, alg.dim
    if n == 0:
        empty = field.zeros((0, 0, 0))
        return empty, empty
    Lt = field.array(left_matrices(alg)).transpose(0, 2, 1)
    Rt = field.array(right_matrices(alg)).transpose(0, 2, 1)
    return field.norm(-Lt), field.norm(Lt + Rt)


def bialgebra_matched_pair(bundle):
    """the two Reynolds algebras (g, R), (g*, S^T) and their coadjoint actions"""
    field = bundle.field
    ctx1 = bundle.context()
    dual = dual_algebra(bundle.delta, field, validate=False)
    ctx2 = ReynoldsContext(dual, bundle.lam, bundle.S.T.copy(), validate=False)
    rho1L, rho1R = coadjoint_actions(bundle.alg)
    rho2L, rho2R = coadjoint_actions(dual)
    return ctx1, ctx2, rho1L, rho1R, rho2L, rho2R

#------------------------------------------------------------------------------#
#    bilinear forms and the double
#------------------------------------------------------------------------------#

class BilinearForm:
    """B(e_i, e_j) = B[i][j]"""

    def __init__(self, field, B):
        B = field.norm(B)
        if B.ndim != 2 or B.shape[0] != B.shape[1]:
            raise DimensionMismatch("a bilinear form needs a square matrix")
        self.field = field
        self.B = B

    @property
    def dim(self):
        return self.B.shape[0]

    def is_skew(self):
        return all(not v for v in self.field.norm(self.B + self.B.T).flat)

    def determinant(self):
        return det(self.B, self.field)

    def require_quadratic(self):
        if not self.is_skew():
            raise NotSkew("bilinear form is not skew-symmetric")
        if not self.determinant():
            raise Degenerate("bilinear form is degenerate")

    def __call__(self, u, v):
        return self.field.einsum("a,ab,b->", u, self.B, v)[()]

    @classmethod
    def canonical(cls, field, n):
        """[[0, -I], [I, 0]] on g + g*"""
        B = field.zeros((2 * n, 2 * n))
        for i in range(n):
            B[i, n + i] = -field.one
            B[n + i, i] = field.one
        return cls(field, B)

    def to_json(self):
        return operator_to_json(self.B, self.field)


def build_double(alg, delta):
    """g + g* with the coadjoint matched-pair bracket, and the canonical form;
    the bracket is Leibniz exactly when (g, delta) is a Leibniz bialgebra"""
    field = alg.field
    d = coproduct_tensor(delta, field)
    if d.shape != alg.c.shape:
        raise DimensionMismatch("coproduct of dim {} on algebra of dim {}"
                                .format(d.shape[0], alg.dim))
    dual = dual_algebra(d, field, validate=False)
    witness = check_leibniz(dual.c, field)
    if witness is not OK:
        raise DualNotLeibniz("dual bracket fails the Leibniz identity at {}"
                             .format(witness.where))
    rho1L, rho1R = coadjoint_actions(alg)
    rho2L, rho2R = coadjoint_actions(dual)
    c = matched_pair_tensor(field, alg.c, dual.c, rho1L, rho1R, rho2L, rho2R)
    return (LeibnizAlgebra(field, c, validate=False),
            BilinearForm.canonical(field, alg.dim))


def check_quadratic_invariance(alg, form):
    """B(x,[y,z]) = B([x,z],y) + B([z,x],y), then B(x,[y,z]) = -B([y,x],z)"""
    field = alg.field
    if form.dim != alg.dim:
        raise DimensionMismatch("form of dim {} on algebra of dim {}"
                                .format(form.dim, alg.dim))
    form.require_quadratic()
    B, c = form.B, alg.c
    left = field.einsum("xk,yzk->xyz", B, c)
    right = field.norm(field.einsum("xzk,ky->xyz", c, B) +
                       field.einsum("zxk,ky->xyz", c, B))
    witness = first_violation("quadratic-invariance", left, right, field, 3)
    if witness is not OK:
        return witness
    right = field.norm(-field.einsum("yxk,kz->xyz", c, B))
    return first_violation("quadratic-swap", left, right, field, 3)


def adjoint_operator(alg, form, R):
    """R^ with B(Rx, y) = B(x, R^y): B^-1 R^T B"""
    field = alg.field
    R = field.norm(R)
    if form.dim != R.shape[0] or R.shape[0] != R.shape[1]:
        raise DimensionMismatch("operator and form dimensions disagree")
    if not form.determinant():
        raise Degenerate("bilinear form is degenerate")
    return field.dot(inverse(form.B, field), R.T.copy(), form.B)


def check_subalgebras(double, n):
    """both g and g* are closed under the double's bracket"""
    field = double.field
    c = double.c
    zero_g = field.zeros((n, n, n))
    witness = first_violation("subalgebra-first", c[:n, :n, n:], zero_g, field, 2)
    if witness is not OK:
        return witness
    return first_violation("subalgebra-second", c[n:, n:, :n], zero_g, field, 2)


def check_manin_triple(ctx, dual_delta, S):
    """(g + g*, R + S*, B_d) is a Manin triple of Reynolds Leibniz algebras"""
    field = ctx.field
    S = field.norm(S)
    check_square(ctx.alg, S, "S")
    double, form = build_double(ctx.alg, dual_delta)
    witness = check_leibniz(double.c, field)
    if witness is not OK:
        return witness
    witness = check_quadratic_invariance(double, form)
    if witness is not OK:
        return witness
    witness = check_subalgebras(double, ctx.dim)
    if witness is not OK:
        return witness
    return check_reynolds(double, ctx.lam, block_diag(field, ctx.R, S.T.copy()))
