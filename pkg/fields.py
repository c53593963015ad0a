#!/usr/bin/env python3

#------------------------------------------------------------------------------#
#
#    Exact scalars for rlk: the rationals and odd prime fields F_p.
#
#    Field elements are sympy domain elements (QQ, GF(p)); vectors, matrices
#    and structure-constant tensors are numpy arrays of dtype=object holding
#    such elements.  Every array leaving this module is normalized, so that
#    stray python ints produced by numpy reductions never escape.
#
#------------------------------------------------------------------------------#

from functools import lru_cache
import numbers

import numpy as np
from sympy import QQ, GF
from sympy.ntheory import isprime
from sympy.polys.matrices import DomainMatrix

#------------------------------------------------------------------------------#
#    errors
#------------------------------------------------------------------------------#

class RlkError(Exception):
    pass

class DivisionByZero(RlkError, ZeroDivisionError):
    pass

class FieldMismatch(RlkError, ValueError):
    pass

class ExhaustedField(RlkError, ValueError):
    pass

class DimensionMismatch(RlkError, ValueError):
    pass

class NotSkew(RlkError, ValueError):
    pass

class Degenerate(RlkError, ValueError):
    pass

class DualNotLeibniz(RlkError, ValueError):
    pass

class PreconditionFailed(RlkError, ValueError):
    pass

class NotInvertible(RlkError, ValueError):
    pass

class InputError(RlkError, ValueError):
    pass

class IdentityViolated(RlkError, ValueError):
    """raised by validating constructors; carries the witness"""

    def __init__(self, witness):
        super().__init__(str(witness))
        self.witness = witness

#------------------------------------------------------------------------------#
#    constants
#------------------------------------------------------------------------------#

DEFAULT_HEIGHT = 100       # bound on |numerator|, denominator of sampled rationals
MAX_PRIME = 2 ** 31

RATIONALS = "Q"
PRIME_FIELD = "Fp"


@lru_cache(maxsize=None)
def _domain(kind, p):
    if kind == RATIONALS:
        return QQ
    return GF(p, symmetric=False)


def _modulus_of(a):
    mod = getattr(a, "mod", None)
    if mod is None and hasattr(a, "modulus"):
        mod = a.modulus()
    return None if mod is None else int(mod)

#------------------------------------------------------------------------------#
#    FieldSpec
#------------------------------------------------------------------------------#

class FieldSpec:
    """The ground field: QQ, or F_p for an odd prime 3 <= p < 2**31."""

    __slots__ = ("kind", "p", "domain")

    def __init__(self, kind=RATIONALS, p=None):
        if kind == RATIONALS:
            p = None
        elif kind == PRIME_FIELD:
            try:
                p = int(p)
            except (TypeError, ValueError):
                raise InputError("prime field needs an integer modulus, "
                                 "got {!r}".format(p))
            if p < 3 or p >= MAX_PRIME or not isprime(p):
                raise InputError("modulus must be an odd prime below 2**31, "
                                 "got {}".format(p))
        else:
            raise InputError("unknown field kind {!r}".format(kind))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "domain", _domain(kind, p))

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and
                (self.kind, self.p) == (other.kind, other.p))

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        if self.kind == RATIONALS:
            return "FieldSpec(Q)"
        return "FieldSpec(F_{})".format(self.p)

    @property
    def is_finite(self):
        return self.kind == PRIME_FIELD

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    # -------------------------------------------------------------------------#
    # scalars

    def owns(self, a):
        if not self.domain.of_type(a):
            return False
        if self.is_finite:
            mod = _modulus_of(a)
            return mod is None or mod == self.p
        return True

    def check(self, a):
        if not self.owns(a):
            raise FieldMismatch("{!r} is not an element of {!r}".format(a, self))
        return a

    def convert(self, x):
        """field element from an int, a "num/den" string or an element"""
        if isinstance(x, str):
            return from_text(x, self)
        if isinstance(x, (numbers.Integral, np.integer, np.bool_)):
            return self.domain.convert(int(x))
        if self.owns(x):
            return x
        raise FieldMismatch("cannot read {!r} in {!r}".format(x, self))

    def residue(self, a):
        return int(a) % self.p

    def elements(self):
        if not self.is_finite:
            raise ExhaustedField("the rationals cannot be listed")
        return [self.domain.convert(v) for v in range(self.p)]

    # -------------------------------------------------------------------------#
    # arrays

    def array(self, data, shape=None):
        arr = np.array(data, dtype=object)
        if shape is not None:
            arr = arr.reshape(shape)
        return self.norm(arr)

    def norm(self, arr):
        arr = np.asarray(arr, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        for index, value in np.ndenumerate(arr):
            out[index] = self.convert(value)
        return out

    def zeros(self, shape):
        return np.full(shape, self.zero, dtype=object)

    def eye(self, n):
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def basis_vector(self, n, i):
        out = self.zeros(n)
        out[i] = self.one
        return out

    def einsum(self, subscripts, *operands):
        if any(op.size == 0 for op in operands):
            shape = _einsum_shape(subscripts, operands)
            return self.zeros(shape)
        return self.norm(np.einsum(subscripts, *operands))

    def dot(self, *mats):
        out = mats[0]
        for m in mats[1:]:
            if out.shape[-1] != m.shape[0]:
                raise DimensionMismatch("cannot compose shapes {} and {}"
                                        .format(out.shape, m.shape))
            if out.shape[-1] == 0:
                out = self.zeros(out.shape[:-1] + m.shape[1:])
            else:
                out = self.norm(out @ m)
        return out

    def scale(self, c, arr):
        return self.norm(np.asarray(arr, dtype=object) * c)

    # -------------------------------------------------------------------------#
    # json

    def to_json(self):
        if self.is_finite:
            return {"field": PRIME_FIELD, "p": self.p}
        return {"field": RATIONALS}

    @classmethod
    def from_json(cls, obj):
        try:
            kind = obj["field"]
        except (KeyError, TypeError):
            raise InputError("field description needs a \"field\" key")
        return cls(kind, obj.get("p"))


def _einsum_shape(subscripts, operands):
    inputs, output = subscripts.replace(" ", "").split("->")
    sizes = dict()
    for labels, op in zip(inputs.split(","), operands):
        for label, size in zip(labels, op.shape):
            sizes[label] = size
    return tuple(sizes[label] for label in output)


def rationals():
    return FieldSpec(RATIONALS)


def prime_field(p):
    return FieldSpec(PRIME_FIELD, p)

#------------------------------------------------------------------------------#
#    scalar arithmetic
#------------------------------------------------------------------------------#

ARITH_OPS = ("add", "sub", "mul", "div", "neg", "inv", "eq")


def field_arith(a, b, op, spec):
    """exact arithmetic; b is ignored by neg and inv"""
    spec.check(a)
    if op not in ("neg", "inv"):
        spec.check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return fdiv(a, b, spec)
    if op == "neg":
        return -a
    if op == "inv":
        return finv(a, spec)
    if op == "eq":
        return a == b
    raise InputError("unknown operation {!r}".format(op))


def finv(a, spec):
    if not a:
        raise DivisionByZero("inverse of zero in {!r}".format(spec))
    return spec.one / a


def fdiv(a, b, spec):
    if not b:
        raise DivisionByZero("division by zero in {!r}".format(spec))
    return a / b

#------------------------------------------------------------------------------#
#    text form: "num/den" for rationals, residues for F_p
#------------------------------------------------------------------------------#

def to_text(a, spec):
    if spec.is_finite:
        return str(spec.residue(a))
    num = int(QQ.numer(a))
    den = int(QQ.denom(a))
    if den == 1:
        return str(num)
    return "{}/{}".format(num, den)


def from_text(text, spec):
    text = str(text).strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            num, den = int(num), int(den)
        else:
            num, den = int(text), 1
    except ValueError:
        raise InputError("not an exact number: {!r}".format(text))
    return fdiv(spec.domain.convert(num), spec.domain.convert(den), spec)


def array_to_text(arr, spec):
    """nested lists of strings with the shape of arr"""
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 0:
        return to_text(arr[()], spec)
    return [array_to_text(sub, spec) for sub in arr]


def array_from_text(data, spec, shape=None):
    def walk(item):
        if isinstance(item, list):
            return [walk(x) for x in item]
        return from_text(item, spec)
    return spec.array(walk(data), shape=shape)

#------------------------------------------------------------------------------#
#    sampling
#------------------------------------------------------------------------------#

def make_rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def sample(spec, rng, height=DEFAULT_HEIGHT):
    if spec.is_finite:
        return spec.domain.convert(int(rng.integers(0, spec.p)))
    num = int(rng.integers(-height, height + 1))
    den = int(rng.integers(1, height + 1))
    return QQ(num, den)


def sample_nonzero(spec, seed, excluded=(), height=DEFAULT_HEIGHT,
                   max_draws=100000):
    """first sample outside `excluded`; reproducible from the seed"""
    excluded = [spec.convert(v) for v in excluded]
    if spec.is_finite and len({spec.residue(v) for v in excluded}) >= spec.p:
        raise ExhaustedField("every residue of F_{} is excluded".format(spec.p))
    rng = make_rng(seed)
    for _ in range(max_draws):
        value = sample(spec, rng, height)
        if not any(value == v for v in excluded):
            return value
    raise ExhaustedField("no admissible value after {} draws".format(max_draws))

#------------------------------------------------------------------------------#
#    arrays
#------------------------------------------------------------------------------#

def is_zero(arr):
    return all(not v for v in np.asarray(arr, dtype=object).flat)


def equal(a, b):
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def first_nonzero(arr):
    """lexicographically first index with a nonzero entry, or None"""
    for index, value in np.ndenumerate(np.asarray(arr, dtype=object)):
        if value:
            return index
    return None


def _domain_matrix(mat, spec):
    m, n = mat.shape
    return DomainMatrix([[spec.convert(v) for v in row] for row in mat.tolist()],
                        (m, n), spec.domain)


def det(mat, spec):
    if mat.shape[0] != mat.shape[1]:
        raise DimensionMismatch("determinant of a {}x{} matrix".format(*mat.shape))
    if mat.shape[0] == 0:
        return spec.one
    return spec.convert(_domain_matrix(mat, spec).det())


def rank(mat, spec):
    if mat.size == 0:
        return 0
    return int(_domain_matrix(mat, spec).rank())


def inverse(mat, spec):
    if not det(mat, spec):
        raise NotInvertible("matrix is singular over {!r}".format(spec))
    if mat.shape[0] == 0:
        return spec.zeros((0, 0))
    return spec.array(_domain_matrix(mat, spec).inv().to_list())
