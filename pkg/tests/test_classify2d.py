import pytest

from fields import (DivisionByZero, FieldMismatch, InputError, equal,
                    prime_field, rationals)
from leibniz_module import OK, LeibnizAlgebra
from classify2d_module import (ALGEBRAS, FAMILIES, OPERATOR, PAIR,
                               CRITERION_BUNDLE, ConstraintViolated,
                               RInstance, builtin_algebra, identify_algebra,
                               case_algebra, family, families_for, evaluate,
                               denominators, instantiate, match_family,
                               check_instance, verify_family, family_instances,
                               Counterexample, enumerate_reynolds,
                               enumerate_triangular_pairs, lam, k1)
from verify_module import SOUND_PAIR_FAMILIES, UNSOUND_PAIR_FAMILIES


def test_builtin_algebras(Q):
    for name in ALGEBRAS:
        assert identify_algebra(builtin_algebra(name, Q)) == name
    assert identify_algebra(LeibnizAlgebra.zero(Q, 2)) is None
    assert identify_algebra(LeibnizAlgebra.zero(Q, 3)) is None
    with pytest.raises(InputError):
        builtin_algebra("A3", Q)
    assert case_algebra("A1") == "A1"
    assert case_algebra("A2-II") == "A2"


def test_r_instance(Q):
    r = RInstance("A2-I", Q, 1, 2)
    assert equal(r.r, Q.array([[1, 2], [2, 0]]))
    assert r.to_json() == {"case": "A2-I", "eta": "1", "gamma": "2"}
    r = RInstance("A2-II", Q, 3)
    assert equal(r.r, Q.array([[3, -3], [-3, 3]]))


def test_family_table():
    names = [fam.name for fam in FAMILIES]
    assert len(names) == len(set(names))
    assert len(families_for("A1", OPERATOR)) == 3
    assert len(families_for("A2", OPERATOR)) == 3
    assert len(families_for("A2", PAIR, case="A2-I", supplementary=False)) == 10
    assert [fam.name for fam in families_for("A2", PAIR, case="A2-II")] == [
        "A2-II-a", "A2-II-weighted"]
    with pytest.raises(InputError):
        family("A9-R1")


def test_family_json():
    obj = family("A1-pair-a").to_json()
    assert obj["kind"] == PAIR and obj["case"] == "A1"
    assert obj["slots"] == ["k1", "l1"]
    assert obj["constraints"] == ["gamma != 0"]
    assert family("A1-R3").to_json()["ties"] == {"lam": "0"}


def test_parameters_and_weights():
    assert family("A1-R1").parameters() == ["k1", "l1", "lam"]
    assert family("A2-I-g").parameters() == ["n2", "lam", "eta", "gamma"]
    assert family("A1-R3").admits_weight(0)
    assert not family("A1-R3").admits_weight(1)
    assert not family("A2-R3").admits_weight(0)
    assert family("A1-R1").admits_weight(0)


def test_evaluate(Q):
    values = {"lam": Q.convert(2), "k1": Q.convert(3)}
    assert evaluate(1 / lam, values, Q) == Q.convert("1/2")
    assert evaluate(2 * k1 / (1 + lam * k1), values, Q) == Q.convert("6/7")
    assert evaluate(0, values, Q) == 0
    with pytest.raises(DivisionByZero):
        evaluate(1 / lam, {"lam": Q.zero}, Q)
    with pytest.raises(InputError):
        evaluate(k1, {}, Q)
    assert denominators(2 * k1 / (1 + lam * k1)) == {1 + lam * k1}
    assert denominators(0) == set()


def test_instantiate(Q):
    R, S = instantiate(family("A1-R2"), {"k1": 1, "l1": 0, "lam": 1}, Q)
    assert S is None
    assert equal(R, Q.array([[1, 0], [0, 1]]))
    with pytest.raises(ConstraintViolated):
        instantiate(family("A1-R2"), {"k1": -1, "l1": 0, "lam": 1}, Q)
    with pytest.raises(ConstraintViolated):
        instantiate(family("A2-R3"), {"k1": 1, "lam": 0}, Q)


def test_ties_fill_parameters(Q):
    fam = family("A2-I-balanced")
    values = {"k1": Q.convert(1), "lam": Q.convert(1), "gamma": Q.convert(1),
              "eta": Q.convert(5)}
    instantiate(fam, values, Q)
    assert check_instance(fam, values, Q) == []


def test_match_family(Q):
    fam = family("A1-R1")
    R = Q.array([[2, 5], [0, 0]])
    assert match_family(R, fam, 1, Q) == {"k1": 2, "l1": 5}
    assert match_family(Q.eye(2), fam, 1, Q) is None
    assert match_family(Q.eye(2), family("A1-R2"), 1, Q) == {"k1": 1, "l1": 0}
    pair = instantiate(family("A1-pair-a"),
                       {"k1": 1, "l1": 2, "lam": 1, "eta": 3, "gamma": 1}, Q)
    found = match_family(pair, family("A1-pair-a"), 1, Q,
                         {"eta": Q.convert(3), "gamma": Q.one})
    assert found == {"k1": 1, "l1": 2}


@pytest.mark.parametrize("name", [fam.name for fam in FAMILIES
                                  if fam.kind == OPERATOR])
def test_operator_families_hold(name):
    assert verify_family(name, trials=8, seed=2) is OK


@pytest.mark.parametrize("name", SOUND_PAIR_FAMILIES)
def test_sound_pair_families(name):
    assert verify_family(name, trials=6, seed=3) is OK


@pytest.mark.parametrize("name", UNSOUND_PAIR_FAMILIES)
def test_unsound_pair_families(name):
    outcome = verify_family(name, trials=6, seed=3)
    assert isinstance(outcome, Counterexample)
    assert outcome.failing
    obj = outcome.to_json()
    assert obj["family"] == name and "lam" in obj["values"]


def test_unsound_families_hold_on_their_special_lines(Q):
    values = {"lam": Q.one, "gamma": Q.one, "eta": Q.convert(-2)}
    for name in ("A2-I-h", "A2-I-c", "A2-I-j"):
        assert check_instance(family(name), values, Q) == []
    values = {"lam": Q.convert(2), "gamma": Q.one, "eta": Q.convert(-2),
              "n2": Q.convert("1/2")}
    assert check_instance(family("A2-I-g"), values, Q) == []


def test_verify_family_is_reproducible():
    first = verify_family("A2-I-a", trials=4, seed=9)
    second = verify_family("A2-I-a", trials=4, seed=9)
    assert first.to_json() == second.to_json()


def test_family_instances(F3):
    found = list(family_instances(family("A1-R1"), F3, 1))
    assert len(found) == 9
    found = list(family_instances(family("A1-R2"), F3, 1))
    # 1 + k1 must not vanish
    assert len(found) == 6


def test_reynolds_counts_over_F3():
    F3 = prime_field(3)
    A1 = builtin_algebra("A1", F3)
    assert len(enumerate_reynolds(A1, 3, 1).solutions) == 12
    report = enumerate_reynolds(A1, 3, 0)
    assert len(report.solutions) == 15
    assert report.unmatched == [] and report.scanned == 81
    A2 = builtin_algebra("A2", F3)
    for lam_value in (0, 1, 2):
        assert enumerate_reynolds(A2, 3, lam_value).unmatched == []


def test_chunked_enumeration_agrees():
    F3 = prime_field(3)
    A2 = builtin_algebra("A2", F3)
    single = enumerate_reynolds(A2, 3, 1)
    seen = []
    chunked = enumerate_reynolds(A2, 3, 1, chunks=5,
                                 progress=lambda done, total: seen.append(done))
    assert chunked.solutions == single.solutions
    assert seen == [1, 2, 3, 4, 5]


def test_enumeration_field_checks(Q):
    with pytest.raises(FieldMismatch):
        enumerate_reynolds(builtin_algebra("A1", Q), 3, 1)
    F3 = prime_field(3)
    with pytest.raises(InputError):
        enumerate_reynolds(LeibnizAlgebra.zero(F3, 3), 3, 1)
    with pytest.raises(InputError):
        enumerate_triangular_pairs(builtin_algebra("A1", F3),
                                   RInstance("A2-I", F3), 3, 1)
    with pytest.raises(FieldMismatch):
        enumerate_triangular_pairs(builtin_algebra("A1", F3),
                                   RInstance("A1", rationals()), 3, 1)


@pytest.mark.parametrize("case, lam_value, eta, gamma, found, unmatched", [
    ("A1", 0, 0, 1, 15, 0),
    ("A1", 1, 0, 1, 12, 3),
    ("A2-II", 0, 1, 0, 3, 0),
    ("A2-II", 1, 1, 0, 4, 1),
    ("A2-I", 0, 0, 1, 3, 0),
    ("A2-I", 1, 0, 1, 4, 0)])
def test_pair_enumeration_over_F3(case, lam_value, eta, gamma, found,
                                  unmatched):
    F3 = prime_field(3)
    alg = builtin_algebra(case_algebra(case), F3)
    report = enumerate_triangular_pairs(alg, RInstance(case, F3, eta, gamma),
                                        3, lam_value)
    assert len(report.solutions) == found
    assert len(report.unmatched) == unmatched
    assert report.unexplained == []
    assert report.finding == bool(unmatched)
    obj = report.to_json()
    assert obj["case"] == case and obj["criterion"] == "triangular"


def test_unmatched_identity_pair_on_A2_II():
    F3 = prime_field(3)
    report = enumerate_triangular_pairs(builtin_algebra("A2", F3),
                                        RInstance("A2-II", F3, 1, 0), 3, 1)
    identity = [[1, 0], [0, 1]]
    assert report.unmatched == [[identity, identity]]
    assert report.matches["A2-II-weighted"] >= 1


def test_bundle_criterion_contains_triangular_pairs():
    F3 = prime_field(3)
    alg = builtin_algebra("A1", F3)
    r = RInstance("A1", F3, 0, 1)
    triangular = enumerate_triangular_pairs(alg, r, 3, 1)
    bundle = enumerate_triangular_pairs(alg, r, 3, 1,
                                        criterion=CRITERION_BUNDLE)
    assert set(map(repr, triangular.solutions)) <= \
        set(map(repr, bundle.solutions))
    assert set(map(repr, triangular.unmatched)) <= \
        set(map(repr, bundle.unmatched))
    assert bundle.finding and bundle.to_json()["criterion"] == "bundle"


@pytest.mark.slow
def test_reynolds_counts_over_F5():
    F5 = prime_field(5)
    A1 = builtin_algebra("A1", F5)
    assert len(enumerate_reynolds(A1, 5, 1, chunks=4).solutions) == 40
    assert len(enumerate_reynolds(A1, 5, 0, chunks=4).solutions) == 45
    assert len(enumerate_reynolds(A1, 5, 2, chunks=4).solutions) == 40
    report = enumerate_reynolds(builtin_algebra("A2", F5), 5, 1, chunks=4,
                                workers=2)
    assert report.unmatched == []


@pytest.mark.slow
@pytest.mark.parametrize("lam_value, expected", [(0, 91), (1, 84), (2, 84)])
def test_reynolds_counts_over_F7(lam_value, expected):
    # p^2 + p(p - 1) at weight 0, p^2 + p(p - 2) otherwise
    A1 = builtin_algebra("A1", prime_field(7))
    report = enumerate_reynolds(A1, 7, lam_value, chunks=4, workers=2)
    assert len(report.solutions) == expected
    assert report.scanned == 7 ** 4
