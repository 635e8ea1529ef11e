"""Finite computational algebra for ringoids, semirings, and semimodules.

Builds finite structures from dense operation tables, enumerates their ideal
lattices and spectra, and mechanically verifies covering and avoidance
statements, exponent bounds for efficient coverings, compact packedness, and
zero-divisor decompositions on concrete instances.
"""

from .errors import CapExceeded, HypothesesUnmet, StructureError, TheoremViolation
from .tables import (
    CayleyStructure,
    FiniteSemimodule,
    LawReport,
    SemimoduleReport,
    StructureConstants,
    check_laws,
    is_semifield,
    semimodule_check,
    self_action,
)
from .constructions import (
    austere_extension,
    direct_product,
    endomorphism_ringoid,
    hemialgebra,
    monoid_semiring,
    newman_check,
    truncated_polynomial_hemiring,
)
from .ideals import (
    IdealSet,
    IdealClassification,
    MultiplicativeSet,
    annihilator,
    classify_ideal,
    enumerate_ideals,
    generate_ideal,
    ideal_arith,
    is_prime,
    is_subtractive,
    krull_separation,
    maximal_annihilator_primes,
    mult_closure,
    multiplicative_set,
    radical,
    residual,
    subtractive_sumtree_property,
    t_semiprime_equivalence,
)
from .covering import (
    Covering,
    WitnessReport,
    annihilator_avoidance,
    avoidance_witness,
    behrens_elements,
    covering,
    davis_witness,
    efficient_reduce,
    mccoy_exponent,
    semiring_avoidance,
    t_semiprime_avoidance,
    union_avoidance_suite,
)
from .spectrum import (
    SpectrumReport,
    compactly_packed_battery,
    principal_open_refinement,
    spec_of,
    vanishing_sets,
    zariski_axioms,
)
from .zerodivisors import (
    QuotientSemiring,
    ZeroDivisorReport,
    content,
    few_zero_divisors,
    kasch_semilocal_report,
    monoid_zd_check,
    property_a_check,
    total_quotient,
    zero_divisor_report,
)
from .corpus import corpus, corpus_entry, corpus_names
from .fileio import ingest

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
