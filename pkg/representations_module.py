#!/usr/bin/env python3

#------------------------------------------------------------------------------#
#
#    Representations (V, rhoL, rhoR) of a Leibniz algebra, Reynolds
#    representations (V, rhoL, rhoR, alpha), duals, the admissibility
#    conditions and semidirect products.
#
#    An action is stored as a stack of shape (n, m, m): rho[i] is the matrix
#    of rho(e_i) on V in the column convention.
#
#------------------------------------------------------------------------------#

import numpy as np

from fields import DimensionMismatch, IdentityViolated, InputError
from leibniz_module import (OK, LeibnizAlgebra, first_violation,
                            left_matrices, right_matrices, pair_brackets,
                            apply_to_stack, check_square, check_dim,
                            operator_to_json, operator_from_json)

#------------------------------------------------------------------------------#
#    helpers
#------------------------------------------------------------------------------#

def as_stack(field, mats, n, m):
    if isinstance(mats, np.ndarray) and mats.shape == (n, m, m):
        return field.norm(mats)
    if len(mats) != n:
        raise DimensionMismatch("expected {} action matrices, got {}"
                                .format(n, len(mats)))
    stack = field.zeros((n, m, m))
    for i, mat in enumerate(mats):
        mat = field.norm(mat)
        if mat.shape != (m, m):
            raise DimensionMismatch("action matrix {} must be {}x{}, got {}"
                                    .format(i, m, m, mat.shape))
        stack[i] = mat
    return stack


def act_columns(field, stack, M):
    """stack whose x-th matrix is rho(M e_x)"""
    return field.einsum("ix,iab->xab", M, stack)


def compose_stacks(field, A, B):
    """pairwise products A[x] B[y] as a stack indexed (x, y)"""
    return field.einsum("xac,ycb->xyab", A, B)


def mult(field, A, stack):
    return field.einsum("ac,xcb->xab", A, stack)


def mult_right(field, stack, B):
    return field.einsum("xac,cb->xab", stack, B)


def matrix_violation(identity, left, right, field):
    """stacks indexed (x, a, v); instances are (x, v), sides are columns"""
    return first_violation(identity, left.transpose(0, 2, 1),
                           right.transpose(0, 2, 1), field, 2)

#------------------------------------------------------------------------------#
#    representations
#------------------------------------------------------------------------------#

def check_representation(alg, vdim, rhoL, rhoR):
    field = alg.field
    n, m = alg.dim, vdim
    L = as_stack(field, rhoL, n, m)
    R = as_stack(field, rhoR, n, m)

    # rhoL([x,y]) = rhoL(x)rhoL(y) - rhoL(y)rhoL(x)
    left = field.einsum("xyk,kab->xyab", alg.c, L)
    LL = compose_stacks(field, L, L)
    right = field.norm(LL - LL.transpose(1, 0, 2, 3))
    witness = first_violation("representation-left", left, right, field, 2)
    if witness is not OK:
        return witness

    # rhoR([x,y]) = rhoL(x)rhoR(y) - rhoR(y)rhoL(x)
    left = field.einsum("xyk,kab->xyab", alg.c, R)
    right = field.norm(compose_stacks(field, L, R) -
                       compose_stacks(field, R, L).transpose(1, 0, 2, 3))
    witness = first_violation("representation-right", left, right, field, 2)
    if witness is not OK:
        return witness

    # -rhoR(y)rhoL(x) = rhoR(y)rhoR(x)
    left = field.norm(-compose_stacks(field, R, L).transpose(1, 0, 2, 3))
    right = compose_stacks(field, R, R).transpose(1, 0, 2, 3)
    return first_violation("representation-mixed", left, right, field, 2)


class Representation:

    def __init__(self, alg, vdim, rhoL, rhoR, validate=True):
        check_dim(vdim)
        field = alg.field
        self.alg = alg
        self.vdim = vdim
        self.rhoL = as_stack(field, rhoL, alg.dim, vdim)
        self.rhoR = as_stack(field, rhoR, alg.dim, vdim)
        if validate:
            witness = check_representation(alg, vdim, self.rhoL, self.rhoR)
            if witness is not OK:
                raise IdentityViolated(witness)

    @property
    def field(self):
        return self.alg.field

    def __repr__(self):
        return "Representation(dim={}, vdim={})".format(self.alg.dim, self.vdim)

    def to_json(self, alpha=None):
        out = {"vdim": self.vdim,
               "rhoL": [operator_to_json(M, self.field) for M in self.rhoL],
               "rhoR": [operator_to_json(M, self.field) for M in self.rhoR]}
        if alpha is not None:
            out["alpha"] = operator_to_json(alpha, self.field)
        return out

    @classmethod
    def from_json(cls, obj, alg):
        """returns (rep, alpha or None)"""
        field = alg.field
        try:
            vdim = int(obj["vdim"])
            rhoL = [operator_from_json(M, field) for M in obj["rhoL"]]
            rhoR = [operator_from_json(M, field) for M in obj["rhoR"]]
        except (KeyError, TypeError, ValueError) as error:
            raise InputError("malformed representation: {}".format(error))
        alpha = obj.get("alpha")
        if alpha is not None:
            alpha = operator_from_json(alpha, field)
        return cls(alg, vdim, rhoL, rhoR), alpha


def zero_representation(alg, vdim):
    field = alg.field
    zeros = field.zeros((alg.dim, vdim, vdim))
    return Representation(alg, vdim, zeros, zeros)


def adjoint_representation(alg):
    return Representation(alg, alg.dim, left_matrices(alg), right_matrices(alg))


def dual_representation(rep):
    """(V*, rhoL*, -rhoL* - rhoR*) realized by transposes"""
    field = rep.field
    Lt = rep.rhoL.transpose(0, 2, 1)
    Rt = rep.rhoR.transpose(0, 2, 1)
    return Representation(rep.alg, rep.vdim, field.norm(-Lt),
                          field.norm(Lt + Rt))

#------------------------------------------------------------------------------#
#    Reynolds representations and admissibility
#------------------------------------------------------------------------------#

def _check_operator_shape(M, m, name):
    if M.shape != (m, m):
        raise DimensionMismatch("{} must be {}x{}, got {}"
                                .format(name, m, m, M.shape))


def check_reynolds_representation(rep, ctx, alpha):
    """rho(Rx)a + lam a rho(Rx) a = a rho(Rx) + a rho(x) a, for rhoL and rhoR"""
    field = ctx.field
    alpha = field.norm(alpha)
    _check_operator_shape(alpha, rep.vdim, "alpha")
    for name, stack in (("reynolds-rep-left", rep.rhoL),
                        ("reynolds-rep-right", rep.rhoR)):
        P = stack
        PR = act_columns(field, stack, ctx.R)
        PRa = mult_right(field, PR, alpha)
        left = field.norm(PRa + mult(field, alpha, PRa) * ctx.lam)
        right = field.norm(mult(field, alpha, PR) +
                           mult(field, alpha, mult_right(field, P, alpha)))
        witness = matrix_violation(name, left, right, field)
        if witness is not OK:
            return witness
    return OK


class ReynoldsRepresentation:

    def __init__(self, rep, ctx, alpha, validate=True):
        if rep.alg is not ctx.alg and not np.array_equal(rep.alg.c, ctx.alg.c):
            raise DimensionMismatch("representation and context use "
                                    "different algebras")
        alpha = ctx.field.norm(alpha)
        if validate:
            witness = check_reynolds_representation(rep, ctx, alpha)
            if witness is not OK:
                raise IdentityViolated(witness)
        self.rep = rep
        self.ctx = ctx
        self.alpha = alpha


def check_beta_admissible(rep, ctx, beta):
    """b rho(x) b + rho(Rx) b = b rho(Rx) + lam b rho(Rx) b, for rhoL and rhoR"""
    field = ctx.field
    beta = field.norm(beta)
    _check_operator_shape(beta, rep.vdim, "beta")
    for name, stack in (("beta-admissible-left", rep.rhoL),
                        ("beta-admissible-right", rep.rhoR)):
        PR = act_columns(field, stack, ctx.R)
        bPRb = mult(field, beta, mult_right(field, PR, beta))
        left = field.norm(mult(field, beta, mult_right(field, stack, beta)) +
                          mult_right(field, PR, beta))
        right = field.norm(mult(field, beta, PR) + bPRb * ctx.lam)
        witness = matrix_violation(name, left, right, field)
        if witness is not OK:
            return witness
    return OK


def check_adjoint_admissible(ctx, S):
    """S[x,Sy] + [Rx,Sy] = S[Rx,y] + lam S[Rx,Sy]
    S[Sx,y] + [Sx,Ry] = S[x,Ry] + lam S[Sx,Ry]"""
    alg, field, R = ctx.alg, ctx.field, ctx.R
    S = field.norm(S)
    check_square(alg, S, "S")
    eye = field.eye(alg.dim)
    lam = ctx.lam

    left = field.norm(apply_to_stack(field, S, pair_brackets(alg, eye, S)) +
                      pair_brackets(alg, R, S))
    right = field.norm(apply_to_stack(field, S, pair_brackets(alg, R, eye)) +
                       apply_to_stack(field, S, pair_brackets(alg, R, S)) * lam)
    witness = first_violation("adjoint-admissible-left", left, right, field, 2)
    if witness is not OK:
        return witness

    left = field.norm(apply_to_stack(field, S, pair_brackets(alg, S, eye)) +
                      pair_brackets(alg, S, R))
    right = field.norm(apply_to_stack(field, S, pair_brackets(alg, eye, R)) +
                       apply_to_stack(field, S, pair_brackets(alg, S, R)) * lam)
    return first_violation("adjoint-admissible-right", left, right, field, 2)

#------------------------------------------------------------------------------#
#    matched-pair brackets and semidirect products
#------------------------------------------------------------------------------#

def matched_pair_tensor(field, c1, c2, rho1L, rho1R, rho2L, rho2R):
    """bracket on g1 + g2 where g1 acts on g2 by rho1 and g2 on g1 by rho2

    [x+a, y+b] = [x,y] + rho2L(a)y + rho2R(b)x + [a,b] + rho1L(x)b + rho1R(y)a
    """
    n1, n2 = c1.shape[0], c2.shape[0]
    N = n1 + n2
    c = field.zeros((N, N, N))
    c[:n1, :n1, :n1] = c1
    c[n1:, n1:, n1:] = c2
    for i in range(n1):
        for b in range(n2):
            c[i, n1 + b, :n1] = rho2R[b][:, i]
            c[i, n1 + b, n1:] = rho1L[i][:, b]
    for a in range(n2):
        for j in range(n1):
            c[n1 + a, j, :n1] = rho2L[a][:, j]
            c[n1 + a, j, n1:] = rho1R[j][:, a]
    return c


def block_diag(field, A, B):
    n1, n2 = A.shape[0], B.shape[0]
    out = field.zeros((n1 + n2, n1 + n2))
    out[:n1, :n1] = A
    out[n1:, n1:] = B
    return out


def semidirect_product(rep, ctx, alpha):
    """g + V with [x+u, y+v] = [x,y] + rhoL(x)v + rhoR(y)u, and R + alpha"""
    field = ctx.field
    alpha = field.norm(alpha)
    _check_operator_shape(alpha, rep.vdim, "alpha")
    n, m = ctx.dim, rep.vdim
    c = matched_pair_tensor(field, ctx.alg.c, field.zeros((m, m, m)),
                            rep.rhoL, rep.rhoR,
                            field.zeros((m, n, n)), field.zeros((m, n, n)))
    return LeibnizAlgebra(field, c), block_diag(field, ctx.R, alpha)
