"""
Step 6 Validation: column determinants, leading monomials and the
highest weight vector verification pipeline.

Uses the worked example F=(5,4,3,3,3,3,2), D=(3,3,2,2,1), n=7,
p=q=4, r=s=2, alpha=(2,3), beta=(3,4).
"""

import sys

import pytest

from src.algebra.lie_action import Subalgebra, Target, assemble_m_weight, gl_n_raising, is_annihilated, weight_of
from src.algebra.superalgebra import Ambient, leading_monomial, leading_monomial_of_product
from src.combinatorics.partitions import Partition, in_hook, partitions_of
from src.combinatorics.tableaux import Content, Tableau, TableauPair, enumerate_pairs, star_compose
from src.logic.hwv import (
    ColumnProfile,
    VerificationSettings,
    column_leading_monomial,
    column_profile,
    delta_column,
    delta_factors,
    delta_pair,
    hw_basis_union,
    irrep_basis,
    monomial_of_pair,
    profiles_of,
    verify_basis,
)
from src.logic.multiplicities import branch_Ntilde, branch_to_m, dim_irrep

F = Partition.of(5, 4, 3, 3, 3, 3, 2)
D = Partition.of(3, 3, 2, 2, 1)
E = Partition.of(3, 3, 3, 3, 2, 1, 1)
ALPHA = Content.of(2, 3)
BETA = Content.of(3, 4)
R, S = 2, 2
AMBIENT = Ambient(7, 4, 4)
EXPECTED_LM = (
    "e11^3 e22^3 f31 f41 f51 f32 f42 e'31 e'61 e'42 e'52 e'72 "
    "f'11 f'51 f'61 f'12 f'22 f'62 f'72"
)


@pytest.fixture(scope="module")
def pair():
    t1 = Tableau.from_rows(E, D, [
        [None, None, None],
        [None, None, None],
        [None, None, 1],
        [None, None, 2],
        [None, 2],
        [1],
        [2],
    ])
    t2 = Tableau.from_rows(Partition.of(7, 7, 6, 2, 1), Partition.of(7, 5, 4), [
        [None] * 7,
        [None] * 5 + [1, 2],
        [None] * 4 + [1, 2],
        [1, 2],
        [2],
    ])
    return TableauPair(t1, t2, F, D, E)


@pytest.fixture(scope="module")
def profiles(pair):
    return profiles_of(pair, R, S)


def test_column_profiles(profiles):
    assert profiles[0] == ColumnProfile(1, 1, 2, 3, (1, 2), ())
    assert profiles[1] == ColumnProfile(2, 2, 2, 2, (2,), (1, 2))
    assert profiles[2] == ColumnProfile(3, 0, 2, 0, (1, 2), (1, 2))
    assert profiles[3] == ColumnProfile(4, 0, 0, 0, (), (1, 2))
    assert profiles[4] == ColumnProfile(5, 0, 0, 0, (), (2,))
    assert [profile.height for profile in profiles] == [7, 7, 6, 2, 1]


def test_column_profile_rejects_columns_outside_shape(pair):
    with pytest.raises(ValueError):
        column_profile(star_compose(pair, R), 6, R, S)


def test_small_column_determinants(profiles):
    A = AMBIENT
    assert delta_column(profiles[3], A, R, S) == A.f(1, 3) * A.f(2, 4) - A.f(2, 3) * A.f(1, 4)
    assert delta_column(profiles[4], A, R, S) == A.f(1, 4)


def test_column_leading_monomials(profiles):
    assert column_leading_monomial(profiles[0], R, S).render(R, S) == "e11 e22 f31 f41 f51 e'61 e'72"
    assert column_leading_monomial(profiles[1], R, S).render(R, S) == "e11 e22 f32 f42 e'52 f'61 f'72"
    for profile in profiles:
        x = delta_column(profile, AMBIENT, R, S)
        assert leading_monomial(x, R, S) == column_leading_monomial(profile, R, S)


def test_column_determinants_are_gl_n_highest(profiles):
    raising = gl_n_raising(AMBIENT.n)
    for profile in profiles:
        assert is_annihilated(delta_column(profile, AMBIENT, R, S), raising)


def test_worked_example_leading_monomial(pair):
    factors = delta_factors(pair, AMBIENT, R, S)
    lm = leading_monomial_of_product(factors, R, S)
    assert lm.render(R, S) == EXPECTED_LM
    assert lm == monomial_of_pair(pair, R, S)


def test_worked_example_weights_add_up(pair):
    factors = delta_factors(pair, AMBIENT, R, S)
    rows = [sum(values) for values in zip(*(weight_of(x, Target.H_N).entries for x in factors))]
    cols = [sum(values) for values in zip(*(weight_of(x, Target.H_PQ).entries for x in factors))]
    assert tuple(rows) == (5, 4, 3, 3, 3, 3, 2)
    assert tuple(cols) == assemble_m_weight(D, ALPHA, BETA, Subalgebra.split(4, 4, R, S))


def test_delta_pair_of_trivial_pair():
    X = Partition.of(1)
    (only,) = enumerate_pairs(X, X, Content(()), Content(()))
    ambient = Ambient(1, 1, 0)
    assert delta_pair(only, ambient, 1, 0) == ambient.e(1, 1)


def test_irrep_basis_sizes():
    for shape, p, q in [((1,), 2, 1), ((2, 1), 1, 1), ((2,), 1, 1), ((2, 1), 2, 1)]:
        X = Partition(shape)
        basis = irrep_basis(X, p, q)
        assert sum(len(vectors) for vectors in basis.values()) == dim_irrep(X, p, q)
    with pytest.raises(ValueError):
        irrep_basis(Partition.of(2, 2), 1, 1)


def test_irrep_basis_of_natural_module():
    ambient = Ambient(1, 2, 1)
    basis = irrep_basis(Partition.of(1), 2, 1)
    vectors = [x for group in basis.values() for x in group]
    assert {x.render() for x in vectors} == {"e11", "e12", "f11"}
    assert all(x.ambient == ambient for x in vectors)


def test_hw_basis_union_matches_Ntilde():
    X, Y = Partition.of(2, 1), Partition.of(1)
    union = hw_basis_union(X, Y, 2, 1, 1)
    assert sum(len(vectors) for vectors in union.values()) == branch_Ntilde(X, Y, 1, 1)


@pytest.mark.parametrize("shape,inner,alpha,beta,p,q,r,s", [
    ((2, 1), (1,), (1,), (1,), 2, 1, 1, 0),
    ((2, 1), (1,), (), (2,), 1, 2, 1, 1),
    ((2, 2), (1,), (1,), (2,), 2, 1, 1, 0),
    ((3, 1), (1, 1), (1,), (1,), 1, 2, 0, 1),
])
def test_verify_basis_highest_weight_mode(shape, inner, alpha, beta, p, q, r, s):
    report = verify_basis(Partition(shape), Partition(inner), Content(alpha), Content(beta), None, p, q, r, s)
    assert report.mode == "highest-weight"
    assert report.failures == []
    assert report.passed
    assert report.basis_size == report.predicted == report.oracle
    assert report.distinct_lms
    assert all(check.lm == check.monomial for check in report.pairs)


def test_factorwise_path_agrees_with_expansion():
    args = (Partition.of(2, 2), Partition.of(1), Content.of(1), Content.of(2), None, 2, 1, 1, 0)
    expanded = verify_basis(*args)
    factorwise = verify_basis(*args, settings=VerificationSettings(expand_limit=0))
    assert {check.method for check in factorwise.pairs} == {"factorwise"}
    assert [check.lm for check in factorwise.pairs] == [check.lm for check in expanded.pairs]
    assert factorwise.passed


def test_threaded_checks_match_serial():
    args = (Partition.of(3, 1), Partition.of(1, 1), Content.of(1), Content.of(1), None, 1, 2, 0, 1)
    serial = verify_basis(*args)
    threaded = verify_basis(*args, settings=VerificationSettings(workers=2))
    assert threaded.to_dict() == serial.to_dict()


def test_weight_vector_mode_for_larger_s():
    report = verify_basis(Partition.of(2, 1), Partition.of(1, 1), Content.of(1), Content(()), None, 1, 2, 0, 2)
    assert report.mode == "weight-vector"
    assert report.oracle is None
    assert any("weight-vector" in note for note in report.notes)
    assert report.basis_size == report.predicted


def test_verify_basis_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_basis(Partition.of(2, 1), Partition.of(1), Content.of(1, 1), Content.of(1), None, 2, 1, 1, 0)
    with pytest.raises(ValueError):
        verify_basis(Partition.of(2, 2), Partition(()), Content.of(2), Content.of(2), None, 1, 1, 0, 0)


def test_verify_basis_rejects_inconsistent_shapes():
    # without D the sizes cannot add up to |F|
    with pytest.raises(ValueError, match=r"\|F\|"):
        verify_basis(F, Partition(()), ALPHA, BETA, 7, 4, 4, R, S)
    with pytest.raises(ValueError, match="inside"):
        verify_basis(Partition.of(2, 1), Partition.of(3), Content.of(0), Content(()), None, 2, 1, 1, 1)
    with pytest.raises(ValueError, match="hook"):
        verify_basis(Partition.of(2, 2), Partition.of(2, 2), Content.of(0), Content.of(0), None, 2, 1, 1, 0)


def test_each_pair_reports_its_own_outcome():
    report = verify_basis(Partition.of(2, 1), Partition.of(1), Content.of(1), Content.of(1), None, 2, 1, 1, 0)
    pairs = report.to_dict()["pairs"]
    assert len(pairs) == 2
    assert all(pair["passed"] is True and pair["failures"] == [] for pair in pairs)


def highest_weight_window():
    for p in range(1, 4):
        for q in range(1, 4):
            for size in range(1, 6):
                for shape in partitions_of(size):
                    if not in_hook(shape, p, q):
                        continue
                    for r in range(p + 1):
                        for s in (0, 1):
                            table = branch_to_m(shape, p, q, r, s, shape.depth())
                            for inner, alpha, beta in table.entries:
                                yield shape, inner, alpha, beta, p, q, r, s


def test_verify_basis_over_highest_weight_window():
    checked = 0
    for shape, inner, alpha, beta, p, q, r, s in highest_weight_window():
        report = verify_basis(shape, inner, alpha, beta, None, p, q, r, s)
        case = (str(shape), str(inner), str(alpha), str(beta), p, q, r, s)
        assert report.mode == "highest-weight"
        assert report.passed, (case, report.failures)
        assert report.basis_size == report.predicted > 0
        assert report.distinct_lms
        assert all(check.passed and check.m_annihilated for check in report.pairs)
        if report.oracle is None:
            assert any("kernel oracle skipped" in note for note in report.notes)
        else:
            assert report.oracle == report.predicted
        checked += 1
    assert checked > 100


def test_settings_from_config():
    settings = VerificationSettings.from_config({"verification": {"expand_limit": 5, "workers": 3}})
    assert settings.expand_limit == 5
    assert settings.workers == 3
    assert settings.oracle_max_monomials == 2000


def main():
    sys.exit(pytest.main([__file__, "-q"]))


if __name__ == "__main__":
    main()
