"""Jumping numbers of plane curve branches, with an independent resolution oracle."""
from .enriques import (
    EdgeKind,
    EnriquesTree,
    branch_divisor,
    build_tpq,
    canonical_coeffs,
    connected_sum,
    from_pairs,
    intersection_matrix,
    proximity,
    relevant_positions,
    weights,
)
from .errors import ContractError, ParseError, ValidationError
from .euclid import EuclidData, euclid_expand
from .invariants import (
    SMOOTH,
    CurveInvariants,
    PuiseuxCharacteristic,
    SemigroupGenerators,
    canonicalize_generators,
    characteristic_from_semigroup,
    characteristic_to_pairs,
    multiplicity_sequence,
    pairs_to_characteristic,
    semigroup_from_characteristic,
)
from .jumping import (
    JumpingNumber,
    JumpingReport,
    extend_by_periodicity,
    jumping_numbers_from_semigroup,
    jumping_numbers_from_tree,
    lct,
    r_m_set,
    r_set,
)
from .oracle import (
    coefficient_lemma_check,
    contribution_test,
    oracle_jumping_numbers,
    r_set_bruteforce,
    term_ideal_initial_check,
    verify_formula,
)

__all__ = [name for name in dir() if not name.startswith("_")]
