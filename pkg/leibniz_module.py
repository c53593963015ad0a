#!/usr/bin/env python3

#------------------------------------------------------------------------------#
#
#    Leibniz algebras as structure-constant tensors.
#
#    c[i][j][k] is the coefficient of e_k in [e_i, e_j].
#    Operators are matrices in the column convention: M[i][j] is the
#    coefficient of e_i in M(e_j).
#
#------------------------------------------------------------------------------#

import numpy as np

from fields import (DimensionMismatch, FieldMismatch, IdentityViolated,
                    InputError, FieldSpec, first_nonzero, array_to_text,
                    array_from_text, to_text)

MAX_DIM = 16

OK = None   # checkers return OK or a Witness

#------------------------------------------------------------------------------#
#    witnesses
#------------------------------------------------------------------------------#

class Witness:
    """the first violated instance of an identity: where, and both sides"""

    def __init__(self, identity, where, left, right, field=None):
        self.identity = identity
        self.where = tuple(int(i) for i in where)
        self.left = left
        self.right = right
        self.field = field

    def __repr__(self):
        return "Witness({}, at {})".format(self.identity, self.where)

    def to_json(self):
        def text(side):
            if self.field is None:
                return str(side)
            return array_to_text(side, self.field)
        return {"identity": self.identity, "where": list(self.where),
                "left": text(self.left), "right": text(self.right)}


def first_violation(identity, left, right, field, depth):
    """compare two stacked arrays; the first `depth` axes index the instance"""
    residual = field.norm(left - right) if left.size else left
    hit = first_nonzero(residual)
    if hit is None:
        return OK
    where = hit[:depth]
    return Witness(identity, where, left[where], right[where], field)

#------------------------------------------------------------------------------#
#    algebras
#------------------------------------------------------------------------------#

def check_dim(n):
    if not 0 <= n <= MAX_DIM:
        raise InputError("dimension {} outside 0..{}".format(n, MAX_DIM))


def check_tensor_shape(c):
    if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
        raise DimensionMismatch("structure constants must be n x n x n, "
                                "got {}".format(c.shape))
    check_dim(c.shape[0])


class LeibnizAlgebra:

    def __init__(self, field: FieldSpec, c, validate=True):
        c = field.norm(c)
        check_tensor_shape(c)
        if validate:
            witness = check_leibniz(c, field)
            if witness is not OK:
                raise IdentityViolated(witness)
        self.field = field
        self.c = c
        self.c.setflags(write=False)

    @property
    def dim(self):
        return self.c.shape[0]

    def __repr__(self):
        return "LeibnizAlgebra(dim={}, {!r})".format(self.dim, self.field)

    @classmethod
    def zero(cls, field, n):
        return cls(field, field.zeros((n, n, n)))

    @classmethod
    def from_brackets(cls, field, n, brackets, validate=True):
        """brackets maps (i, j) to the coefficient list of [e_i, e_j]"""
        c = field.zeros((n, n, n))
        for (i, j), coeffs in brackets.items():
            if len(coeffs) != n:
                raise DimensionMismatch("bracket [e{}, e{}] has {} coefficients"
                                        .format(i, j, len(coeffs)))
            c[i, j, :] = [field.convert(v) for v in coeffs]
        return cls(field, c, validate=validate)

    def to_json(self):
        out = dict(self.field.to_json())
        out["dim"] = self.dim
        out["brackets"] = [{"i": i, "j": j,
                            "v": [to_text(v, self.field) for v in self.c[i, j]]}
                           for i in range(self.dim) for j in range(self.dim)
                           if any(self.c[i, j])]
        return out

    @classmethod
    def from_json(cls, obj, validate=True):
        field = FieldSpec.from_json(obj)
        try:
            n = int(obj["dim"])
            rows = obj.get("brackets", [])
            brackets = {(int(row["i"]), int(row["j"])):
                        [field.convert(v) for v in row["v"]] for row in rows}
        except (KeyError, TypeError, ValueError) as error:
            raise InputError("malformed algebra: {}".format(error))
        check_dim(n)
        return cls.from_brackets(field, n, brackets, validate=validate)


def check_vector(alg, x):
    if np.shape(x) != (alg.dim,):
        raise DimensionMismatch("expected a vector of length {}, got shape {}"
                                .format(alg.dim, np.shape(x)))


def bracket(alg, x, y):
    check_vector(alg, x)
    check_vector(alg, y)
    return alg.field.einsum("i,j,ijk->k", x, y, alg.c)


def left_mult(alg, x):
    """matrix of L_x: z -> [x, z]"""
    check_vector(alg, x)
    return alg.field.einsum("i,ijk->kj", x, alg.c)


def right_mult(alg, x):
    """matrix of R_x: z -> [z, x]"""
    check_vector(alg, x)
    return alg.field.einsum("i,jik->kj", x, alg.c)


def left_matrices(alg):
    return [left_mult(alg, alg.field.basis_vector(alg.dim, i))
            for i in range(alg.dim)]


def right_matrices(alg):
    return [right_mult(alg, alg.field.basis_vector(alg.dim, i))
            for i in range(alg.dim)]


def check_leibniz(raw, field):
    """[e_i,[e_j,e_k]] = [[e_i,e_j],e_k] + [e_j,[e_i,e_k]] on every triple"""
    c = field.norm(raw)
    check_tensor_shape(c)
    left = field.einsum("jkm,imo->ijko", c, c)
    right = field.norm(field.einsum("ijm,mko->ijko", c, c) +
                       field.einsum("ikm,jmo->ijko", c, c))
    return first_violation("leibniz", left, right, field, 3)

#------------------------------------------------------------------------------#
#    Reynolds operators
#------------------------------------------------------------------------------#

def check_square(alg, M, name="operator"):
    if M.shape != (alg.dim, alg.dim):
        raise DimensionMismatch("{} must be {}x{}, got {}"
                                .format(name, alg.dim, alg.dim, M.shape))


def apply_to_stack(field, M, stack):
    """apply M to the last axis of a stack of vectors"""
    shape = stack.shape[:-1] + (M.shape[0],)
    if stack.shape[-1] == 0 or M.size == 0:
        return field.zeros(shape)
    return field.norm(np.tensordot(stack, M, axes=([-1], [1])))


def pair_brackets(alg, A, B):
    """stack T[x][y] = [A e_x, B e_y]"""
    return alg.field.einsum("ix,jy,ijk->xyk", A, B, alg.c)


def check_reynolds(alg, lam, R):
    """[Rx,Ry] + lam R[Rx,Ry] = R[x,Ry] + R[Rx,y] on every basis pair"""
    check_square(alg, R)
    field = alg.field
    lam = field.convert(lam)
    eye = field.eye(alg.dim)
    both = pair_brackets(alg, R, R)
    left = field.norm(both + apply_to_stack(field, R, both) * lam)
    right = apply_to_stack(field, R, field.norm(pair_brackets(alg, eye, R) +
                                                pair_brackets(alg, R, eye)))
    return first_violation("reynolds", left, right, field, 2)


class ReynoldsContext:
    """a Leibniz algebra with a Reynolds operator R of weight lam"""

    def __init__(self, alg, lam, R, validate=True):
        R = alg.field.norm(R)
        check_square(alg, R)
        lam = alg.field.convert(lam)
        if validate:
            witness = check_reynolds(alg, lam, R)
            if witness is not OK:
                raise IdentityViolated(witness)
        self.alg = alg
        self.lam = lam
        self.R = R
        self.R.setflags(write=False)

    @property
    def field(self):
        return self.alg.field

    @property
    def dim(self):
        return self.alg.dim

    def __repr__(self):
        return "ReynoldsContext(dim={}, lambda={})".format(
            self.dim, to_text(self.lam, self.field))


def induced_bracket(ctx):
    """[x,y]_R = [x,Ry] + [Rx,y] - lam [Rx,Ry]"""
    alg, field, R = ctx.alg, ctx.field, ctx.R
    eye = field.eye(alg.dim)
    c = field.norm(pair_brackets(alg, eye, R) + pair_brackets(alg, R, eye) -
                   pair_brackets(alg, R, R) * ctx.lam)
    return LeibnizAlgebra(field, c)


def check_homomorphism(phi, src, dst):
    """phi [x,y]_src = [phi x, phi y]_dst and phi R_src = R_dst phi"""
    field = src.field
    if dst.field != field:
        raise FieldMismatch("source and target live over different fields")
    phi = field.norm(phi)
    if phi.shape != (dst.dim, src.dim):
        raise DimensionMismatch("phi must be {}x{}, got {}"
                                .format(dst.dim, src.dim, phi.shape))
    left = apply_to_stack(field, phi, src.alg.c)
    right = field.einsum("ix,jy,ijk->xyk", phi, phi, dst.alg.c)
    witness = first_violation("homomorphism-bracket", left, right, field, 2)
    if witness is not OK:
        return witness
    return first_violation("homomorphism-operator", field.dot(phi, src.R),
                           field.dot(dst.R, phi), field, 2)

#------------------------------------------------------------------------------#
#    operators as json
#------------------------------------------------------------------------------#

def operator_to_json(M, field):
    return {"rows": int(M.shape[0]), "cols": int(M.shape[1]),
            "entries": array_to_text(M, field)}


def operator_from_json(obj, field):
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        return array_from_text(obj["entries"], field, shape=(rows, cols))
    except (KeyError, TypeError, ValueError) as error:
        raise InputError("malformed operator: {}".format(error))
