import pytest
from hypothesis import given, settings, strategies as st

from fields import (FieldSpec, DivisionByZero, ExhaustedField, FieldMismatch,
                    InputError, NotInvertible, rationals, prime_field,
                    field_arith, finv, fdiv, to_text, from_text, array_to_text,
                    array_from_text, make_rng, sample, sample_nonzero, is_zero,
                    equal, first_nonzero, det, rank, inverse)


@pytest.mark.parametrize("p", [0, 1, 2, 4, 9, 2 ** 31 + 11, "x"])
def test_prime_field_rejects_bad_moduli(p):
    with pytest.raises(InputError):
        prime_field(p)


def test_unknown_field_kind():
    with pytest.raises(InputError):
        FieldSpec("R")


def test_field_identity():
    assert rationals() == rationals()
    assert prime_field(5) == prime_field(5)
    assert prime_field(5) != prime_field(7)
    assert prime_field(5) != rationals()
    assert FieldSpec.from_json(prime_field(7).to_json()) == prime_field(7)
    assert rationals().to_json() == {"field": "Q"}


def test_field_is_immutable(Q):
    with pytest.raises(AttributeError):
        Q.p = 3


@pytest.mark.parametrize("text, expected", [
    ("3", "3"), ("-6/8", "-3/4"), ("10/5", "2"), (" 1/3 ", "1/3")])
def test_rational_text(Q, text, expected):
    assert to_text(from_text(text, Q), Q) == expected


def test_residue_text(F5):
    assert to_text(F5.convert(-1), F5) == "4"
    assert to_text(from_text("1/2", F5), F5) == "3"


@pytest.mark.parametrize("text", ["", "1.5", "a/b", "1/2/3"])
def test_bad_text(Q, text):
    with pytest.raises(InputError):
        from_text(text, Q)


def test_zero_denominator_text(Q):
    with pytest.raises(DivisionByZero):
        from_text("1/0", Q)


def test_division_by_zero(Q, F5):
    for spec in (Q, F5):
        with pytest.raises(DivisionByZero):
            finv(spec.zero, spec)
        with pytest.raises(DivisionByZero):
            fdiv(spec.one, spec.zero, spec)
        with pytest.raises(DivisionByZero):
            field_arith(spec.one, spec.zero, "div", spec)


def test_field_mismatch(Q, F5):
    with pytest.raises(FieldMismatch):
        field_arith(F5.one, Q.convert("1/2"), "add", F5)


def test_unknown_operation(Q):
    with pytest.raises(InputError):
        field_arith(Q.one, Q.one, "pow", Q)


@given(st.integers(1, 6), st.integers(0, 6))
@settings(max_examples=40, deadline=None)
def test_prime_field_arithmetic(a, b):
    F7 = prime_field(7)
    a, b = F7.convert(a), F7.convert(b)
    assert field_arith(field_arith(a, None, "inv", F7), a, "mul", F7) == F7.one
    assert field_arith(field_arith(b, a, "div", F7), a, "mul", F7) == b
    assert field_arith(field_arith(b, a, "sub", F7), a, "add", F7) == b
    assert field_arith(a, field_arith(a, None, "neg", F7), "add", F7) == F7.zero


@given(st.integers(-50, 50), st.integers(1, 50), st.integers(-50, 50),
       st.integers(1, 50))
@settings(max_examples=40, deadline=None)
def test_rational_arithmetic_is_exact(a, b, c, d):
    Q = rationals()
    x = from_text("{}/{}".format(a, b), Q)
    y = from_text("{}/{}".format(c, d), Q)
    total = field_arith(x, y, "add", Q)
    assert field_arith(total, y, "sub", Q) == x
    assert field_arith(x, y, "eq", Q) == (a * d == b * c)


def test_array_text(Q):
    arr = array_from_text([["1", "-1/2"], ["0", "3"]], Q)
    assert arr.shape == (2, 2)
    assert array_to_text(arr, Q) == [["1", "-1/2"], ["0", "3"]]
    assert array_from_text(["1", "2", "3", "4"], Q, shape=(2, 2))[1, 0] == 3


def test_sampling_is_reproducible(Q, F5):
    for spec in (Q, F5):
        first = [sample(spec, make_rng(11), 20) for _ in range(5)]
        second = [sample(spec, make_rng(11), 20) for _ in range(5)]
        assert first == second


def test_sample_nonzero(F3):
    value = sample_nonzero(F3, 4, excluded=(0, 1))
    assert value == F3.convert(2)
    with pytest.raises(ExhaustedField):
        sample_nonzero(F3, 4, excluded=(0, 1, 2))


def test_rationals_cannot_be_listed(Q, F3):
    with pytest.raises(ExhaustedField):
        Q.elements()
    assert [F3.residue(v) for v in F3.elements()] == [0, 1, 2]


def test_array_predicates(Q):
    zero = Q.zeros((2, 2))
    assert is_zero(zero)
    assert first_nonzero(zero) is None
    one = Q.eye(2)
    assert first_nonzero(one) == (0, 0)
    assert equal(one, Q.dot(one, one))
    assert not equal(one, zero)
    assert not equal(one, Q.eye(3))


def test_linear_algebra(Q):
    M = Q.array([[1, 2], [3, 4]])
    assert det(M, Q) == -2
    assert equal(inverse(M, Q), Q.array([[-2, 1], ["3/2", "-1/2"]]))
    singular = Q.array([[1, 2], [2, 4]])
    assert rank(singular, Q) == 1
    with pytest.raises(NotInvertible):
        inverse(singular, Q)
    assert det(Q.zeros((0, 0)), Q) == Q.one


def test_inverse_mod_p(F5):
    M = F5.array([[2, 1], [1, 1]])
    assert equal(F5.dot(M, inverse(M, F5)), F5.eye(2))
