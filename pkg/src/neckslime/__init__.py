"""Cyclic integer codes, slime migration, and explicit necklace bijections."""

from .bijection import (
    BijectionTable,
    NeckClass,
    RiwiMap,
    RiwiReport,
    build_sigma,
    load_riwi_map,
    neck_class,
    prime_bijection,
    riwi_from_pairs,
    riwi_rotation,
    riwi_slime,
    sigma_with_constant,
    verify_riwi,
)
from .certify import CHECKS, Certificate, Envelope, run_cell, run_sweep, summarize
from .codes import Code, divisors, enumerate_codes, is_prime
from .necklaces import (
    Necklace,
    binomial,
    canonicalize,
    code_to_word,
    count_necklaces,
    enumerate_necklaces,
    euler_phi,
    word_to_code,
)
from .slime import (
    InvalidCodeError,
    NonCoprimeWeightError,
    Slime,
    SlimeDecomposition,
    decompose,
    is_valid,
    max_adjacent_sum,
    migrate_backward,
    migrate_forward,
    unit_migration,
    unit_migration_inverse,
    weight,
)

__version__ = "0.1.0"

__all__ = [
    "BijectionTable",
    "CHECKS",
    "Certificate",
    "Code",
    "Envelope",
    "InvalidCodeError",
    "Necklace",
    "NeckClass",
    "NonCoprimeWeightError",
    "RiwiMap",
    "RiwiReport",
    "Slime",
    "SlimeDecomposition",
    "binomial",
    "build_sigma",
    "canonicalize",
    "code_to_word",
    "count_necklaces",
    "decompose",
    "divisors",
    "enumerate_codes",
    "enumerate_necklaces",
    "euler_phi",
    "is_prime",
    "is_valid",
    "load_riwi_map",
    "max_adjacent_sum",
    "migrate_backward",
    "migrate_forward",
    "neck_class",
    "prime_bijection",
    "riwi_from_pairs",
    "riwi_rotation",
    "riwi_slime",
    "run_cell",
    "run_sweep",
    "sigma_with_constant",
    "summarize",
    "unit_migration",
    "unit_migration_inverse",
    "verify_riwi",
    "weight",
    "word_to_code",
]
