"""Sidel'nikov subsequences over prime fields: construction, exact linear
and k-error linear complexity, cyclotomic numbers, and character-sum
bounds, all verifiable against brute-force oracles at desk scale."""

from .bounds import (BoundReport, CharSumReport, OneErrorPrediction,
                     WeilNotApplicableError, bound_report, character_sum,
                     exceeds_klc_lower_bound, hasse_at_one_via_cyclotomy,
                     klc_floor, klc_lower_bound, one_error_prediction,
                     root_exclusion_applicability, sequence_s_values,
                     verify_root_exclusion, weil_check)
from .complexity import (DEFAULT_BUDGET, ComplexityReport, KErrorEntry, Poly,
                         SearchBudgetError, berlekamp_massey, hasse_derivative,
                         k_error_lc, k_error_lc_bruteforce, k_error_report,
                         lc_via_gcd, lucas_binomial, poly_gcd,
                         root_multiplicity, root_multiplicity_by_division,
                         search_space_size, seq_poly, xn_minus_one)
from .cyclotomy import (ABDecomposition, CycloTable, ab_decomposition,
                        class_index, cyclotomic_numbers_bruteforce,
                        cyclotomic_numbers_order6, is_primitive_root,
                        symmetry_violations)
from .field import (FieldCtx, as_prime_power, build_field,
                    find_primitive_element, is_prime, prime_factors)
from .sequences import (PeriodicSequence, SequenceOrigin,
                        enumerate_error_patterns, pattern_count, perturb,
                        read_sequence_file, sidelnikov_subsequence,
                        write_sequence_file)

__version__ = "0.1.0"
