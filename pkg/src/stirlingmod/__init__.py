"""Signless Stirling numbers of the first kind modulo prime powers.

Fast residues c(n,k) mod p^r and mod n from branch congruences on binomial
coefficients, an exact big-integer oracle, coefficient-level verification of
the underlying polynomial and ring identities, and Chern classes of
permutation representations of cyclic groups.
"""

from .binomial import BinomValuation, binom_mod, binom_mod_prime_power, kummer_valuation
from .chern import (
    ChernClassValuation,
    ChernVanishingReport,
    ChernVector,
    CyclicGroup,
    PermutationGSet,
    chern_orbit,
    chern_permutation,
    chern_regular,
    chern_valuation_regular,
    verify_chern_vanishing,
)
from .modring import (
    PrimePower,
    Residue,
    RootFactorization,
    check_cyclotomic_vanishing,
    check_poly_root_factorization,
    check_root_factorization,
    crt_combine,
    cyclotomic,
    divisors,
    element_of_order_p_minus_1,
    euler_phi,
    factorize,
    is_prime,
    mult_order,
    smallest_primitive_root,
    vp,
)
from .polyring import (
    CongruenceReport,
    DensePoly,
    closed_form_even,
    closed_form_even_additive,
    closed_form_odd,
    pochhammer_poly,
    poly_mul,
    poly_prod,
    verify_congruence,
    verify_pt_lemma,
    verify_q_homogenization,
    verify_shift_identity,
    verify_weak_even_lemma,
)
from .stirling import (
    Branch,
    ExactStirlingTable,
    StirlingResult,
    StirlingValuation,
    ValuationKind,
    oracle_max,
    stirling_exact,
    stirling_mod_n,
    stirling_mod_pr,
    stirling_valuation,
)
from .suites import SUITE_ORDER, SUITES, VerificationReport, run_all, run_suite

__version__ = "0.1.0"
