import pytest
from hypothesis import given, settings, strategies as st

from fields import (DimensionMismatch, Degenerate, DualNotLeibniz,
                    FieldMismatch, IdentityViolated, InputError, NotSkew,
                    equal, prime_field, make_rng)
from leibniz_module import OK, ReynoldsContext
from representations_module import block_diag
from bialgebra_module import (Coproduct, BialgebraBundle, BilinearForm,
                              check_coleibniz, check_leibniz_bialgebra,
                              check_reynolds_coalgebra,
                              check_reynolds_bialgebra, check_matched_pair,
                              bialgebra_matched_pair, build_double,
                              check_quadratic_invariance, adjoint_operator,
                              check_subalgebras, check_manin_triple,
                              dual_algebra)
from yangbaxter_module import coboundary_coproduct, coboundary_bundle
from classify2d_module import builtin_algebra
from verify_module import random_triangular, bialgebra_agreement, mutate


def test_coleibniz_is_dual_leibniz(Q, A2):
    d = A2.c.transpose(2, 0, 1)
    assert check_coleibniz(d, Q) is OK
    assert equal(dual_algebra(d, Q).c, A2.c)
    opposite = A2.c.transpose(1, 0, 2).transpose(2, 0, 1)
    assert check_coleibniz(opposite, Q).identity == "co-leibniz"
    with pytest.raises(IdentityViolated):
        Coproduct(Q, opposite)


def test_coproduct_json(Q, A2):
    delta = Coproduct(Q, A2.c.transpose(2, 0, 1))
    obj = delta.to_json()
    assert obj["dim"] == 2
    assert equal(Coproduct.from_json(obj).d, delta.d)
    assert Coproduct.from_json({"field": "Q", "dim": 1}).dim == 1


@pytest.mark.parametrize("obj", [
    {"field": "Q"},
    {"field": "Q", "dim": 2, "delta": [{"i": 0}]},
    {"field": "Q", "dim": 2, "delta": [{"i": 5, "terms": [
        {"j": 0, "k": 0, "v": "1"}]}]}])
def test_malformed_coproduct(obj):
    with pytest.raises(InputError):
        Coproduct.from_json(obj)


def test_zero_coproduct_bundle(Q, A1):
    zero = Q.zeros((2, 2))
    bundle = BialgebraBundle(A1, Coproduct.zero(Q, 2), 0, zero, zero)
    assert check_reynolds_bialgebra(bundle).ok
    assert check_leibniz_bialgebra(A1, bundle.delta) is OK
    assert check_reynolds_coalgebra(bundle.delta, 0, Q.eye(2)) is OK


def test_bundle_report_lists_every_item(Q, A1):
    zero = Q.zeros((2, 2))
    with pytest.raises(IdentityViolated):
        BialgebraBundle(A1, Coproduct.zero(Q, 2), 0, zero, Q.eye(2))
    bundle = BialgebraBundle(A1, Coproduct.zero(Q, 2), 0, zero, Q.eye(2),
                             validate=False)
    report = check_reynolds_bialgebra(bundle)
    assert not report.ok
    assert list(report.flags().items()) == [
        ("leibniz-bialgebra", True), ("reynolds-algebra", True),
        ("reynolds-coalgebra", True), ("adjoint-admissible", False),
        ("tensor-conditions", True)]
    assert report.first_witness().identity == "adjoint-admissible-left"
    items = report.to_json()["items"]
    assert [item["ok"] for item in items] == [True, True, True, False, True]


def test_bundle_shapes(Q, A1):
    with pytest.raises(DimensionMismatch):
        BialgebraBundle(A1, Coproduct.zero(Q, 3), 0, Q.eye(2), Q.eye(2),
                        validate=False)
    with pytest.raises(DimensionMismatch):
        BialgebraBundle(A1, Coproduct.zero(Q, 2), 0, Q.eye(3), Q.eye(2),
                        validate=False)


def test_bundle_json(F5):
    ctx, S, r = random_triangular(F5, make_rng(1))
    bundle = coboundary_bundle(ctx, S, r)
    loaded = BialgebraBundle.from_json(bundle.to_json())
    assert equal(loaded.delta.d, bundle.delta.d)
    assert equal(loaded.S, bundle.S) and loaded.lam == bundle.lam
    with pytest.raises(InputError):
        BialgebraBundle.from_json({"algebra": bundle.alg.to_json()})


def test_bilinear_forms(Q, A1):
    form = BilinearForm.canonical(Q, 2)
    assert form.dim == 4
    assert form.is_skew() and form.determinant()
    form.require_quadratic()
    with pytest.raises(NotSkew):
        BilinearForm(Q, Q.eye(2)).require_quadratic()
    with pytest.raises(Degenerate):
        BilinearForm(Q, Q.zeros((2, 2))).require_quadratic()
    with pytest.raises(DimensionMismatch):
        BilinearForm(Q, Q.zeros((2, 3)))
    with pytest.raises(DimensionMismatch):
        check_quadratic_invariance(A1, form)
    u, v = Q.basis_vector(4, 2), Q.basis_vector(4, 0)
    assert form(u, v) == 1 and form(v, u) == -1


def test_double_needs_leibniz_dual(Q, A1, A2):
    opposite = A2.c.transpose(1, 0, 2).transpose(2, 0, 1)
    with pytest.raises(DualNotLeibniz):
        build_double(A1, opposite)
    with pytest.raises(DimensionMismatch):
        build_double(A1, Q.zeros((3, 3, 3)))


def test_double_of_zero_coproduct(Q, A1):
    double, form = build_double(A1, Q.zeros((2, 2, 2)))
    assert double.dim == 4
    assert equal(double.c[:2, :2, :2], A1.c)
    assert check_subalgebras(double, 2) is OK
    assert check_quadratic_invariance(double, form) is OK


def test_matched_pair_weights(Q, A1):
    ctx1 = ReynoldsContext(A1, 1, Q.eye(2))
    ctx2 = ReynoldsContext(A1, 0, Q.zeros((2, 2)))
    empty = Q.zeros((2, 2, 2))
    with pytest.raises(DimensionMismatch):
        check_matched_pair(ctx1, ctx2, empty, empty, empty, empty)


def test_matched_pair_fields(Q, F5, A1):
    ctx1 = ReynoldsContext(A1, 1, Q.eye(2))
    ctx2 = ReynoldsContext(builtin_algebra("A1", F5), 1, F5.eye(2))
    with pytest.raises(FieldMismatch):
        check_matched_pair(ctx1, ctx2, Q.zeros((2, 2, 2)), Q.zeros((2, 2, 2)),
                           F5.zeros((2, 2, 2)), F5.zeros((2, 2, 2)))


def test_trivial_matched_pair(Q, A1, A2):
    ctx1 = ReynoldsContext(A1, 1, Q.eye(2))
    ctx2 = ReynoldsContext(A2, 1, Q.eye(2))
    empty = Q.zeros((2, 2, 2))
    assert check_matched_pair(ctx1, ctx2, empty, empty, empty, empty) is OK


def test_adjoint_operator_needs_nondegenerate_form(Q, A1):
    with pytest.raises(Degenerate):
        adjoint_operator(A1, BilinearForm(Q, Q.zeros((2, 2))), Q.eye(2))


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=15, deadline=None)
def test_triangular_fixtures_are_bialgebras(seed):
    F5 = prime_field(5)
    ctx, S, r = random_triangular(F5, make_rng(seed))
    bundle = coboundary_bundle(ctx, S, r)
    assert check_reynolds_bialgebra(bundle).ok
    assert bialgebra_agreement(bundle) == (True, True, True)
    assert check_manin_triple(ctx, bundle.delta, S) is OK


@given(st.integers(0, 2 ** 32 - 1), st.sampled_from(["R", "S"]))
@settings(max_examples=15, deadline=None)
def test_three_characterizations_agree(seed, which):
    F5 = prime_field(5)
    rng = make_rng(seed)
    ctx, S, r = random_triangular(F5, rng)
    R = ctx.R
    if which == "R":
        R = mutate(F5, rng, R)
    else:
        S = mutate(F5, rng, S)
    raw = ReynoldsContext(ctx.alg, ctx.lam, R, validate=False)
    verdicts = bialgebra_agreement(coboundary_bundle(raw, S, r))
    assert len(set(verdicts)) == 1


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=15, deadline=None)
def test_double_adjoint(seed):
    F5 = prime_field(5)
    ctx, S, r = random_triangular(F5, make_rng(seed))
    double, form = build_double(ctx.alg, coboundary_coproduct(ctx.alg, r))
    op = block_diag(F5, ctx.R, S.T.copy())
    assert equal(adjoint_operator(double, form, op),
                 block_diag(F5, S, ctx.R.T.copy()))


def test_matched_pair_of_bundle(F5):
    ctx, S, r = random_triangular(F5, make_rng(7))
    ctx1, ctx2, *actions = bialgebra_matched_pair(coboundary_bundle(ctx, S, r))
    assert ctx1.dim == ctx2.dim == 2
    assert equal(ctx2.R, S.T)
    assert check_matched_pair(ctx1, ctx2, *actions) is OK
