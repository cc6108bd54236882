"""
Step 5 Validation: gl_n and gl(p|q) acting on R by superderivations,
weights, graded components and the kernel oracle.

The oracle sweeps compare exact kernel dimensions against the tableau
formulas on every small case.
"""

import sys

import numpy as np
import pytest

from src.algebra.lie_action import (
    Algebra,
    BasisOperator,
    Flavor,
    Subalgebra,
    Target,
    Weight,
    act,
    assemble_m_weight,
    assemble_q_weight,
    gl_n_raising,
    graded_component,
    is_annihilated,
    joint_kernel_dim,
    oracle_branch_N,
    oracle_lr,
    oracle_weight_mult,
    raising_generators,
    weight_of,
)
from src.algebra.superalgebra import Ambient, SuperPolynomial
from src.combinatorics.partitions import Partition, in_hook, in_hook_depth, partitions_between, partitions_of
from src.combinatorics.tableaux import Content
from src.logic.multiplicities import branch_N, branch_to_m, branch_to_pair, compositions, lr_coefficient, weight_mult

A = Ambient(2, 1, 2)


def gl_pq(a, b):
    return BasisOperator(Algebra.GL_PQ, a, b)


def gl_n(i, j):
    return BasisOperator(Algebra.GL_N, i, j)


def random_polynomial(rng, ambient=A, terms=3, degree=3):
    gens = ambient.generators()
    total = SuperPolynomial.zero(ambient)
    for _ in range(terms):
        monomial = SuperPolynomial.one(ambient)
        for _ in range(degree):
            g = gens[int(rng.integers(0, len(gens)))]
            monomial = monomial * SuperPolynomial.from_generator(ambient, g)
        total = total + monomial * int(rng.choice([-1, 1, 2]))
    return total


def test_act_examples():
    B = Ambient(2, 1, 1)
    assert act(gl_n(1, 2), B.e(2, 1)) == B.e(1, 1)
    assert act(gl_n(1, 2), B.e(1, 1)) == 0
    assert act(gl_pq(1, 2), B.f(1, 1)) == B.e(1, 1)
    assert act(gl_pq(2, 1), B.e(1, 1)) == B.f(1, 1)
    assert act(gl_pq(1, 1), B.e(1, 1) * B.e(2, 1)) == 2 * (B.e(1, 1) * B.e(2, 1))


def test_odd_operator_picks_up_koszul_sign():
    B = Ambient(2, 1, 1)
    x = B.f(1, 1) * B.f(2, 1)
    assert act(gl_pq(1, 2), x) == B.e(1, 1) * B.f(2, 1) - B.f(1, 1) * B.e(2, 1)


def test_act_rejects_foreign_operators():
    with pytest.raises(ValueError):
        act(gl_n(3, 1), A.e(1, 1))
    with pytest.raises(ValueError):
        act(gl_pq(1, 4), A.e(1, 1))


def test_bracket_is_respected():
    rng = np.random.default_rng(8)
    size = A.p + A.q
    for _ in range(40):
        a, b, c, d = (int(v) for v in rng.integers(1, size + 1, size=4))
        X, Y = gl_pq(a, b), gl_pq(c, d)
        sign = -1 if X.parity(A.p) and Y.parity(A.p) else 1
        x = random_polynomial(rng)
        left = act(X, act(Y, x)) - act(Y, act(X, x)) * sign
        right = SuperPolynomial.zero(A)
        if b == c:
            right = right + act(gl_pq(a, d), x)
        if d == a:
            right = right - act(gl_pq(c, b), x) * sign
        assert left == right


def test_gl_n_and_gl_pq_commute():
    rng = np.random.default_rng(9)
    for _ in range(20):
        x = random_polynomial(rng)
        X = gl_n(int(rng.integers(1, 3)), int(rng.integers(1, 3)))
        Y = gl_pq(int(rng.integers(1, 4)), int(rng.integers(1, 4)))
        assert act(X, act(Y, x)) == act(Y, act(X, x))


def test_cartan_elements_read_the_weight():
    rng = np.random.default_rng(10)
    for _ in range(20):
        x = random_polynomial(rng, terms=1)
        if x.is_zero():
            continue
        rows = weight_of(x, Target.H_N).entries
        cols = weight_of(x, Target.H_PQ).entries
        for i in range(1, A.n + 1):
            assert act(gl_n(i, i), x) == x * rows[i - 1]
        for a in range(1, A.p + A.q + 1):
            assert act(gl_pq(a, a), x) == x * cols[a - 1]


def test_action_preserves_degree_and_shifts_parity():
    rng = np.random.default_rng(11)
    for _ in range(20):
        x = random_polynomial(rng, terms=1)
        if x.is_zero():
            continue
        (m,) = x.terms
        X = gl_pq(int(rng.integers(1, 4)), int(rng.integers(1, 4)))
        for target in act(X, x).terms:
            assert target.degree() == m.degree()
            assert target.parity == (m.parity + X.parity(A.p)) % 2


def test_weight_of_examples_and_errors():
    B = Ambient(2, 1, 1)
    assert weight_of(B.e(1, 1) * B.f(2, 1), Target.H_PQ) == Weight(Target.H_PQ, (1, 1))
    assert weight_of(B.e(1, 1) * B.f(2, 1), Target.H_N) == Weight(Target.H_N, (1, 1))
    with pytest.raises(ValueError):
        weight_of(B.e(1, 1) + B.e(2, 1), Target.H_N)
    with pytest.raises(ValueError):
        weight_of(SuperPolynomial.zero(B), Target.H_PQ)


def test_raising_generators_examples():
    sub = Subalgebra.split(4, 4, 2, 2)
    assert [str(op) for op in raising_generators(sub)] == ["E12", "E25", "E56"]
    sub_q = Subalgebra.split(4, 4, 2, 2, Flavor.Q)
    assert [str(op) for op in raising_generators(sub_q)] == ["E12", "E25", "E56", "E34", "E47", "E78"]
    assert raising_generators(Subalgebra.split(2, 2, 0, 0)) == []
    assert [str(op) for op in gl_n_raising(3)] == ["E12", "E23"]
    with pytest.raises(ValueError):
        Subalgebra.split(2, 2, 3, 0)


def test_index_maps():
    sub = Subalgebra.split(4, 4, 2, 2)
    assert [sub.iota(a) for a in range(1, 5)] == [1, 2, 5, 6]
    assert [sub.kappa(b) for b in range(1, 5)] == [3, 4, 7, 8]


def test_assembled_weights():
    sub = Subalgebra.split(4, 4, 2, 2)
    D = Partition.of(3, 3, 2, 2, 1)
    assert assemble_m_weight(D, Content.of(2, 3), Content.of(3, 4), sub) == (3, 3, 2, 3, 3, 2, 3, 4)
    sub_q = Subalgebra.split(2, 1, 1, 0, Flavor.Q)
    assert assemble_q_weight(Partition.of(2), Partition.of(1, 1), sub_q) == (2, 1, 1)
    with pytest.raises(ValueError):
        assemble_m_weight(D, Content.of(2), Content.of(3, 4), sub)


def test_graded_component_examples():
    B = Ambient(2, 1, 1)
    assert len(graded_component(B, Weight(Target.H_N, (1, 1)), Weight(Target.H_PQ, (1, 1)))) == 2
    assert len(graded_component(B, Weight(Target.H_N, (1, 1)), Weight(Target.H_PQ, (0, 2)))) == 1
    assert graded_component(B, Weight(Target.H_N, (2, 0)), Weight(Target.H_PQ, (0, 2))) == []
    assert len(graded_component(B, Weight(Target.H_N, (2, 0)), Weight(Target.H_PQ, (2, 0)))) == 1
    assert len(graded_component(Ambient(2, 2, 0), Weight(Target.H_N, (1, 1)), Weight(Target.H_PQ, (1, 1)))) == 2
    with pytest.raises(ValueError):
        graded_component(B, Weight(Target.H_N, (1,)), Weight(Target.H_PQ, (1, 0)))


def test_joint_kernel_dim_small_cases():
    B = Ambient(2, 1, 1)
    component = graded_component(B, Weight(Target.H_N, (1, 1)), Weight(Target.H_PQ, (1, 1)))
    # only e11 f21 - e21 f11 survives E12 of gl_2
    assert joint_kernel_dim(gl_n_raising(2), component, B) == 1
    assert joint_kernel_dim([], component, B) == 2
    assert joint_kernel_dim(gl_n_raising(2), [], B) == 0
    x = B.e(1, 1) * B.f(2, 1) - B.e(2, 1) * B.f(1, 1)
    assert is_annihilated(x, gl_n_raising(2))


def test_oracle_weight_mult_matches_formula():
    for p, q in [(1, 1), (2, 1), (1, 2)]:
        for size in range(1, 4):
            for F in partitions_of(size):
                n = F.depth()
                for a in range(size + 1):
                    for alpha in compositions(a, p):
                        for beta in compositions(size - a, q):
                            expected = weight_mult(F, Content(alpha), Content(beta))
                            assert oracle_weight_mult(F, Content(alpha), Content(beta), p, q, n) == expected


def test_oracle_branch_N_matches_formula():
    for p, q in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        for size in range(1, 4):
            for F in partitions_of(size):
                if not in_hook(F, p, q):
                    continue
                n = F.depth()
                for r in range(p + 1):
                    for s in range(q + 1):
                        for D in partitions_between(Partition(()), F):
                            if not in_hook_depth(D, n, r, s):
                                continue
                            rest = size - D.size()
                            for a in range(rest + 1):
                                for alpha in compositions(a, p - r):
                                    for beta in compositions(rest - a, q - s):
                                        alpha_c, beta_c = Content(alpha), Content(beta)
                                        expected = branch_N(F, D, alpha_c, beta_c)
                                        found = oracle_branch_N(F, D, alpha_c, beta_c, p, q, r, s, n)
                                        assert found == expected, (F, D, alpha, beta, p, q, r, s)


def test_oracle_lr_matches_formula():
    for p, q in [(1, 1), (2, 1), (1, 2)]:
        for size in range(1, 5):
            for F in partitions_of(size):
                if not in_hook(F, p, q):
                    continue
                n = F.depth()
                for r in range(p + 1):
                    for s in range(q + 1):
                        for D in partitions_between(Partition(()), F):
                            if not in_hook_depth(D, n, r, s):
                                continue
                            for E in partitions_of(size - D.size()):
                                if not in_hook(E, p - r, q - s):
                                    continue
                                expected = lr_coefficient(F, D, E)
                                assert oracle_lr(F, D, E, p, q, r, s, n) == expected, (F, D, E, p, q, r, s)


def reciprocity_window(p, q, max_size=5):
    for size in range(1, max_size + 1):
        for F in partitions_of(size):
            if in_hook(F, p, q):
                for r in range(p + 1):
                    for s in range(q + 1):
                        yield F, r, s


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_oracle_branch_N_over_window(p, q):
    checked = 0
    for F, r, s in reciprocity_window(p, q):
        n = F.depth()
        for (D, alpha, beta), expected in branch_to_m(F, p, q, r, s, n).items():
            found = oracle_branch_N(F, D, alpha, beta, p, q, r, s, n)
            assert found == expected, (str(F), str(D), alpha, beta, p, q, r, s)
            checked += 1
    assert checked > 0


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_oracle_lr_over_window(p, q):
    checked = 0
    for F, r, s in reciprocity_window(p, q):
        n = F.depth()
        for (D, E), expected in branch_to_pair(F, r, s, p - r, q - s, n).items():
            assert oracle_lr(F, D, E, p, q, r, s, n) == expected, (str(F), str(D), str(E), p, q, r, s)
            checked += 1
    assert checked > 0


@pytest.mark.parametrize("F,D,alpha,beta,p,q,r,s", [
    ((2, 2), (1,), (1,), (2,), 2, 1, 1, 0),
    ((3, 1), (2,), (1,), (1,), 2, 1, 1, 0),
    ((2, 1, 1), (1, 1), (1,), (1,), 1, 2, 0, 1),
])
def test_oracle_on_larger_components(F, D, alpha, beta, p, q, r, s):
    F_, D_ = Partition(F), Partition(D)
    expected = branch_N(F_, D_, Content(alpha), Content(beta))
    assert oracle_branch_N(F_, D_, Content(alpha), Content(beta), p, q, r, s, F_.depth()) == expected


def main():
    sys.exit(pytest.main([__file__, "-q"]))


if __name__ == "__main__":
    main()
