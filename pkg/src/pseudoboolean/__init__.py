"""Exact analysis of pseudo-Boolean functions: discrete and lattice derivatives,
local monotonicity, permutability of lattice derivatives, reconstruction,
symmetric functions, coalition games and pseudo-polynomial decompositions.

Tables are indexed by n-bit masks with x_1 as the least significant bit.
"""
from .core import (MAX_ARITY, ArityError, FunctionTable, Point, affine_transform,
                   essential_variables, evaluate, is_boolean, negate_variables, section,
                   sections_of_arity, to_rational, with_assignment)
from .polyform import (ExpressionSyntaxError, MultilinearPolynomial, degree, formal_derivative,
                       parse_expression, poly_from_table, pretty_print, table_from_expression,
                       to_table)
from .calculus import (DerivativeOp, Kind, apply_op, apply_sequence, delta, delta2,
                       join_derivative, join_op, meet_derivative, meet_op, parse_ops)
from .monotonicity import (BinarySection, LocalMonotonicityReport, VariableMonotonicity, Witness,
                           binary_sections, forbidden_binary_sections, is_monotone,
                           is_p_locally_monotone, lipschitz_violation, local_monotonicity_degree,
                           local_monotonicity_witness, variable_monotonicity)
from .permutability import (PermutabilityCounterexample, PermutabilityReport,
                            binary_2permutability_condition, brute_force_counterexample,
                            has_p_permutable_derivatives, has_p_permutable_derivatives_brute,
                            max_permutability_degree, permutability_counterexample)
from .reconstruction import (DerivativeProfile, Inconsistent, ParityPair, Unique, profile_of,
                             reconstruct, verify_profile)
from .symmetric import (SymmetricSequence, detect_symmetric, parse_sequence, seq_has_p_permutable,
                        seq_join, seq_local_monotonicity_degree, seq_meet,
                        seq_permutability_degree, seq_to_function, staircase)
from .games import (PlayerRole, all_outcomes, extremal_outcomes, marginal_contribution,
                    order_irrelevant, sequential_outcome, worth)
from .decomposition import (Orientation, PseudoPolynomialDecomposition, decompose,
                            evaluate_decomposition)
from .families import chain_indicator, parity

__version__ = "0.1.0"
