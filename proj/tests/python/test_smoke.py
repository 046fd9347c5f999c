# This code is part of piqec.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import piqec


def test_exact_combinatorics():
    assert piqec.binomial(10, 3) == 120
    assert piqec.binomial(70, 35) == 112186277816662845432
    with pytest.raises(ValueError):
        piqec.binomial(-1, 0)


def test_structure_enumeration_order():
    structures = piqec.enumerate_insertion_structures(2, 1)
    assert structures == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert len(piqec.enumerate_insertion_structures(4, 2)) == 15
    assert piqec.enumerate_deletion_sets(3, 2) == [[1, 2], [1, 3], [2, 3]]


def test_vandermonde_weights_sum_to_one():
    total = sum(
        piqec.vandermonde_coeff(6, 3, 2, a) ** 2 for a in range(0, 3)
    )
    assert math.isclose(total, 1.0, abs_tol=1e-12)


def test_four_qubit_code_verdicts():
    code = piqec.gnu_code(2, 2)
    assert code.N == 4

    assert piqec.eval_insertion_conditions(code, 1).passed
    assert piqec.eval_deletion_conditions(code, 1).passed
    assert not piqec.eval_insertion_conditions(code, 2).passed

    assert piqec.oracle_insertion(code, 1).passed
    assert piqec.oracle_deletion(code, 1).passed
    assert not piqec.oracle_deletion(code, 2).passed

    report = piqec.eval_conditions(code, piqec.ConditionFamily.semi_insdel, 1, 1)
    assert not report.passed
    assert len(report.terms) == 26


def test_make_pi_code_validates():
    alpha = np.zeros(3, dtype=complex)
    beta = np.zeros(3, dtype=complex)
    alpha[0] = 1.0
    beta[0] = 1.0
    with pytest.raises(RuntimeError):
        piqec.make_pi_code(2, alpha, beta)


def test_equivalence_agreement():
    report = piqec.equivalence_check(piqec.gnu_code(2, 2), 1)
    assert report.agree
    assert report.max_term_gap == 0.0


def test_channel_preserves_trace():
    rho = piqec.random_pi_density(3, seed=7)
    spec = piqec.uniform_channel(piqec.ChannelKind.full_insdel, t=1, s=1)
    out = piqec.apply_channel(rho, spec)
    assert out.shape == (8, 8)
    assert math.isclose(np.trace(out).real, 1.0, abs_tol=1e-12)


def test_swap_lemma_weights():
    rho = np.eye(4, dtype=complex) / 4.0
    spec = piqec.uniform_channel(piqec.ChannelKind.full_insdel, t=1, s=1)
    cert = piqec.swap_lemma_verify(rho, spec)
    assert cert.passed
    assert cert.ell_weights == pytest.approx([2.0 / 3.0, 1.0 / 3.0])


def test_deletion_kraus_completeness():
    ops = piqec.deletion_kraus_dicke(8, 2)
    total = sum(op.conj().T @ op for op in ops)
    assert np.abs(total - np.eye(9)).max() < 1e-12


def test_dicke_and_dense_expansion():
    vector = piqec.dicke_vector(2, 1)
    assert vector == pytest.approx(
        np.array([0.0, 1.0 / math.sqrt(2.0), 1.0 / math.sqrt(2.0), 0.0])
    )
    dense = piqec.to_dense(piqec.gnu_code(2, 2))
    assert math.isclose(np.linalg.norm(dense), 1.0, abs_tol=1e-12)


def test_search_round_trip():
    problem = piqec.SearchProblem()
    problem.N = 1
    problem.family = piqec.ConditionFamily.insertion
    problem.t = 1
    problem.num_starts = 2
    problem.max_iterations = 60
    result = piqec.find_code(problem)
    assert not result.converged
    assert result.code is None
    assert result.objective > problem.success_threshold

    trivial = piqec.SearchProblem()
    trivial.N = 2
    trivial.family = piqec.ConditionFamily.deletion
    trivial.s = 0
    found = piqec.find_code(trivial)
    assert found.converged
    assert found.code is not None
    assert piqec.oracle_deletion(found.code, 0).passed
