"""Verification suites and certificate generation.

Public API
----------
enumerate_closure, verify_conjugation_relations, verify_diagram_relations,
tau_permutation, floor_inequality, floor_inequality_scan, helly_certificate,
check_helly_certificate, CertifyHellyUseCase, normal_subgroups_sym,
theorem_d_check, prop34_check, spe_w2_check, lemma23_surjectivity_search,
iota_injectivity_check, iota_matrix_order
"""

from coxaut.application.use_cases.closure import enumerate_closure
from coxaut.application.use_cases.embedding import (
    iota_injectivity_check,
    iota_matrix_order,
    lemma23_surjectivity_search,
    nielsen_targets,
)
from coxaut.application.use_cases.free_subgroup import (
    free_ball,
    partial_conjugation_word,
    prop34_check,
)
from coxaut.application.use_cases.helly import (
    CertifyHellyUseCase,
    check_helly_certificate,
    floor_inequality,
    floor_inequality_scan,
    helly_certificate,
    tau_permutation,
)
from coxaut.application.use_cases.relations import (
    verify_conjugation_relations,
    verify_diagram_relations,
)
from coxaut.application.use_cases.special import spe_w2_check
from coxaut.application.use_cases.theorem_d import normal_subgroups_sym, theorem_d_check

__all__ = [
    "enumerate_closure",
    "verify_conjugation_relations",
    "verify_diagram_relations",
    "tau_permutation",
    "floor_inequality",
    "floor_inequality_scan",
    "helly_certificate",
    "check_helly_certificate",
    "CertifyHellyUseCase",
    "normal_subgroups_sym",
    "theorem_d_check",
    "prop34_check",
    "partial_conjugation_word",
    "free_ball",
    "spe_w2_check",
    "lemma23_surjectivity_search",
    "nielsen_targets",
    "iota_injectivity_check",
    "iota_matrix_order",
]
