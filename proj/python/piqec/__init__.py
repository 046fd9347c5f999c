# This code is part of piqec.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""Verification and discovery tools for permutation-invariant qubit codes
under insertion and deletion errors."""

from piqec._core import (  # noqa: F401
    ChannelKind,
    ChannelSpec,
    ConditionFamily,
    ConditionReport,
    ConditionTerm,
    EquivalenceReport,
    KLResult,
    PICode,
    SearchProblem,
    SearchResult,
    SwapLemmaCertificate,
    __version__,
    apply_channel,
    binomial,
    condition_residuals,
    deletion_kraus_dicke,
    dicke_vector,
    enumerate_deletion_sets,
    enumerate_insertion_structures,
    equivalence_check,
    eval_conditions,
    eval_deletion_conditions,
    eval_insertion_conditions,
    find_code,
    gnu_code,
    logical_state_vector,
    make_pi_code,
    oracle_check,
    oracle_deletion,
    oracle_insertion,
    random_pi_density,
    swap_lemma_verify,
    to_dense,
    uniform_channel,
    vandermonde_coeff,
)

__all__ = [name for name in dir() if not name.startswith("_")] + [
    "__version__"
]
