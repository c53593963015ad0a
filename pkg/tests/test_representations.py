import pytest
from hypothesis import given, settings, strategies as st

from fields import (DimensionMismatch, IdentityViolated, equal, prime_field,
                    make_rng, sample)
from leibniz_module import OK, ReynoldsContext, check_reynolds, left_matrices
from representations_module import (Representation, ReynoldsRepresentation,
                                     zero_representation,
                                     adjoint_representation,
                                     dual_representation,
                                     check_representation,
                                     check_reynolds_representation,
                                     check_beta_admissible,
                                     check_adjoint_admissible, block_diag,
                                     semidirect_product)
from classify2d_module import builtin_algebra
from verify_module import random_context


def random_matrix(field, rng, n):
    return field.array([[sample(field, rng) for _ in range(n)]
                        for _ in range(n)])


def family_operator(field, rng, name):
    """a Reynolds operator of weight 1 on A1 or A2"""
    a, b = sample(field, rng), sample(field, rng)
    if name == "A1":
        return field.array([[a, b], [0, 0]])
    return field.array([[0, b], [0, -b]])


@pytest.mark.parametrize("name", ["A1", "A2"])
def test_adjoint_and_dual(Q, name):
    alg = builtin_algebra(name, Q)
    adj = adjoint_representation(alg)
    assert adj.vdim == 2
    dual = dual_representation(adj)
    assert equal(dual.rhoL[1], Q.norm(-adj.rhoL[1].T))
    assert check_representation(alg, 2, dual.rhoL, dual.rhoR) is OK


def test_bad_representation(Q, A1):
    rhoL = [Q.zeros((1, 1)), Q.zeros((1, 1))]
    rhoR = [Q.eye(1), Q.zeros((1, 1))]
    witness = check_representation(A1, 1, rhoL, rhoR)
    assert witness.identity == "representation-right"
    with pytest.raises(IdentityViolated):
        Representation(A1, 1, rhoL, rhoR)


def test_action_matrix_count(Q, A1):
    with pytest.raises(DimensionMismatch):
        Representation(A1, 1, [Q.zeros((1, 1))], [Q.zeros((1, 1))] * 2)
    with pytest.raises(DimensionMismatch):
        Representation(A1, 1, [Q.zeros((2, 2))] * 2, [Q.zeros((1, 1))] * 2)


def test_representation_json(Q, A2):
    adj = adjoint_representation(A2)
    alpha = Q.array([[1, "1/2"], [0, 3]])
    rep, loaded = Representation.from_json(adj.to_json(alpha), A2)
    assert equal(rep.rhoL, adj.rhoL) and equal(rep.rhoR, adj.rhoR)
    assert equal(loaded, alpha)
    _, missing = Representation.from_json(adj.to_json(), A2)
    assert missing is None


def test_zero_representation(Q, A2):
    rep = zero_representation(A2, 3)
    ctx = ReynoldsContext(A2, 1, Q.eye(2))
    assert check_reynolds_representation(rep, ctx, Q.eye(3)) is OK


@pytest.mark.parametrize("name", ["A1", "A2"])
def test_adjoint_representation_with_R(F5, name):
    rng = make_rng(3)
    alg = builtin_algebra(name, F5)
    ctx = ReynoldsContext(alg, 1, family_operator(F5, rng, name))
    adj = adjoint_representation(alg)
    assert check_reynolds_representation(adj, ctx, ctx.R) is OK
    assert check_beta_admissible(adj, ctx, F5.norm(-ctx.R)) is OK
    ReynoldsRepresentation(adj, ctx, ctx.R)


def test_adjoint_representation_with_non_reynolds(Q, A1):
    ctx = ReynoldsContext(A1, 0, Q.eye(2), validate=False)
    adj = adjoint_representation(A1)
    assert check_reynolds_representation(adj, ctx, Q.eye(2)) is not OK
    assert check_beta_admissible(adj, ctx, Q.norm(-Q.eye(2))) is not OK
    with pytest.raises(IdentityViolated):
        ReynoldsRepresentation(adj, ctx, Q.eye(2))


def test_alpha_shape(Q, A1):
    ctx = ReynoldsContext(A1, 1, Q.eye(2))
    with pytest.raises(DimensionMismatch):
        check_reynolds_representation(adjoint_representation(A1), ctx, Q.eye(3))


def test_adjoint_admissibility_golden(Q, A1):
    ctx = ReynoldsContext(A1, 0, Q.zeros((2, 2)))
    assert check_adjoint_admissible(ctx, Q.zeros((2, 2))) is OK
    witness = check_adjoint_admissible(ctx, Q.eye(2))
    assert witness.identity == "adjoint-admissible-left"
    assert witness.where == (1, 1)


@given(st.integers(0, 2 ** 32 - 1), st.sampled_from(["A1", "A2"]))
@settings(max_examples=25, deadline=None)
def test_adjoint_admissible_as_dual_representation(seed, name):
    F5 = prime_field(5)
    rng = make_rng(seed)
    alg = builtin_algebra(name, F5)
    ctx = ReynoldsContext(alg, 1, family_operator(F5, rng, name))
    S = random_matrix(F5, rng, 2)
    dual = dual_representation(adjoint_representation(alg))
    assert ((check_adjoint_admissible(ctx, S) is OK) ==
            (check_reynolds_representation(dual, ctx, S.T.copy()) is OK))


@given(st.integers(0, 2 ** 32 - 1), st.integers(0, 1), st.booleans(),
       st.booleans())
@settings(max_examples=40, deadline=None)
def test_beta_admissible_as_dual_representation(seed, lam_value, use_dual,
                                                minus_R):
    F5 = prime_field(5)
    rng = make_rng(seed)
    ctx = random_context(F5, rng, lam_value=lam_value)
    rep = adjoint_representation(ctx.alg)
    if use_dual:
        rep = dual_representation(rep)
    beta = F5.norm(-ctx.R) if minus_R else random_matrix(F5, rng, 2)
    dual = dual_representation(rep)
    assert ((check_beta_admissible(rep, ctx, beta) is OK) ==
            (check_reynolds_representation(dual, ctx, beta.T.copy()) is OK))


@given(st.integers(0, 2 ** 32 - 1), st.integers(0, 1))
@settings(max_examples=20, deadline=None)
def test_minus_R_is_admissible_to_the_adjoint(seed, lam_value):
    F5 = prime_field(5)
    ctx = random_context(F5, make_rng(seed), lam_value=lam_value)
    rep = adjoint_representation(ctx.alg)
    assert check_beta_admissible(rep, ctx, F5.norm(-ctx.R)) is OK


@given(st.integers(0, 2 ** 32 - 1), st.sampled_from(["A1", "A2"]),
       st.booleans())
@settings(max_examples=25, deadline=None)
def test_semidirect_product(seed, name, use_dual):
    F5 = prime_field(5)
    rng = make_rng(seed)
    alg = builtin_algebra(name, F5)
    ctx = ReynoldsContext(alg, 1, family_operator(F5, rng, name))
    rep = adjoint_representation(alg)
    if use_dual:
        rep = dual_representation(rep)
    alpha = random_matrix(F5, rng, 2)
    total, op = semidirect_product(rep, ctx, alpha)
    assert total.dim == 4
    assert equal(op, block_diag(F5, ctx.R, alpha))
    assert ((check_reynolds_representation(rep, ctx, alpha) is OK) ==
            (check_reynolds(total, ctx.lam, op) is OK))


def test_semidirect_with_R(Q, A2):
    ctx = ReynoldsContext(A2, 1, Q.eye(2))
    total, op = semidirect_product(adjoint_representation(A2), ctx, ctx.R)
    assert check_reynolds(total, 1, op) is OK
    assert equal(total.c[:2, :2, :2], A2.c)
    # [e2, v2] = rhoL(e2) v2
    assert equal(total.c[1, 3, 2:], left_matrices(A2)[1][:, 1])


def test_block_diag(Q):
    out = block_diag(Q, Q.eye(1), Q.scale(2, Q.eye(2)))
    assert out.shape == (3, 3)
    assert out[2, 2] == 2 and out[0, 1] == 0
