"""Domain layer: words, automorphisms, matrices, diagrams, and exceptions.

Public API
----------
Words:
    CoxWord, FreeWord, ExpVector, cox_reduce, cox_mul, cox_inv, sign,
    cyclic_reduce, involution_class, to_free_basis, from_free_basis,
    free_reduce, free_mul, free_inv, abelianize, project_to_W2

Automorphisms:
    Permutation, CoxEndo, CoxAut, FreeEndo, sigma, alpha, apply, compose,
    aut_equal, order_with_cutoff, support, preserves_kernel, iota, inner,
    free_compose, free_equal, free_apply, is_special, spe_quotient_perm,
    induced_on_W2

Matrices:
    IntMatrix, abelianization_matrix, mat_mul, mat_det, finite_order_exact

Exceptions:
    DomainError, ValidationError, PreconditionError, InvariantViolationError,
    NotInducibleError, HandlerRejected, ParseError
"""

from coxaut.domain.automorphisms import (
    CoxAut,
    CoxEndo,
    FreeEndo,
    alpha,
    apply,
    aut_equal,
    commutes,
    compose,
    conjugation,
    free_apply,
    free_compose,
    free_equal,
    free_identity_endo,
    identity_aut,
    identity_endo,
    induced_on_W2,
    inner,
    iota,
    is_special,
    order_with_cutoff,
    preserves_kernel,
    product,
    sigma,
    spe_quotient_perm,
    support,
)
from coxaut.domain.diagram import (
    INFINITY,
    CoxeterDiagram,
    GeneratorTag,
    figure1_diagram,
    generating_set,
)
from coxaut.domain.entities import (
    CapExceeded,
    ConjugateBlocks,
    DisconnectedParts,
    FailureReport,
    FiniteClosure,
    HandlerFailure,
    HellyCertificate,
    NotFound,
    SubgroupEnumeration,
    SubsetRecord,
    SurjectivityWitness,
    UnhandledSubset,
)
from coxaut.domain.exceptions import (
    DomainError,
    HandlerRejected,
    InvariantViolationError,
    NotInducibleError,
    ParseError,
    PreconditionError,
    ValidationError,
)
from coxaut.domain.intmatrix import (
    IntMatrix,
    abelianization_matrix,
    finite_order_exact,
    mat_det,
    mat_mul,
)
from coxaut.domain.orders import ExceedsCutoff, Finite, Infinite
from coxaut.domain.permutations import Permutation, all_permutations, parse_cycles
from coxaut.domain.words import (
    CoxWord,
    ExpVector,
    FreeWord,
    abelianize,
    cox_inv,
    cox_mul,
    cox_reduce,
    cyclic_reduce,
    free_inv,
    free_mul,
    free_reduce,
    from_free_basis,
    involution_class,
    project_to_W2,
    sign,
    to_free_basis,
)

__all__ = [
    "CoxWord",
    "FreeWord",
    "ExpVector",
    "cox_reduce",
    "cox_mul",
    "cox_inv",
    "sign",
    "cyclic_reduce",
    "involution_class",
    "to_free_basis",
    "from_free_basis",
    "free_reduce",
    "free_mul",
    "free_inv",
    "abelianize",
    "project_to_W2",
    "Permutation",
    "all_permutations",
    "parse_cycles",
    "CoxEndo",
    "CoxAut",
    "FreeEndo",
    "identity_endo",
    "identity_aut",
    "free_identity_endo",
    "sigma",
    "alpha",
    "conjugation",
    "apply",
    "compose",
    "product",
    "aut_equal",
    "commutes",
    "order_with_cutoff",
    "support",
    "preserves_kernel",
    "iota",
    "inner",
    "free_apply",
    "free_compose",
    "free_equal",
    "is_special",
    "spe_quotient_perm",
    "induced_on_W2",
    "IntMatrix",
    "abelianization_matrix",
    "mat_mul",
    "mat_det",
    "finite_order_exact",
    "Finite",
    "Infinite",
    "ExceedsCutoff",
    "INFINITY",
    "GeneratorTag",
    "CoxeterDiagram",
    "figure1_diagram",
    "generating_set",
    "SubgroupEnumeration",
    "CapExceeded",
    "FiniteClosure",
    "DisconnectedParts",
    "ConjugateBlocks",
    "SubsetRecord",
    "HellyCertificate",
    "HandlerFailure",
    "UnhandledSubset",
    "FailureReport",
    "SurjectivityWitness",
    "NotFound",
    "DomainError",
    "ValidationError",
    "PreconditionError",
    "InvariantViolationError",
    "NotInducibleError",
    "HandlerRejected",
    "ParseError",
]
