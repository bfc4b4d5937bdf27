"""
Exact computation of centers of generic Hecke algebras.

The package realises a Hecke algebra as a free module over a Laurent
polynomial ring through a finished coset-table matrix model, certifies the
coefficient-of-one trace as symmetrising, and computes the center either as a
commutant or from character data.  Builtin groups: ``a2`` and ``g4``.
"""

from .ring import LaurentPoly, RatFunc, DimensionError, variables, is_unit, exact_div, specialize
from .linalg import Matrix, bareiss_det, frac_nullspace, frac_solve, clear_denominators, mat_mul
from .hecke import (GroupSpec, HeckeElement, ValidationError, parse_word, word_to_element,
                    multiply, mul_matrix, verify_relations, basis_element)
from .groupdata import load_group, load_spec, dump_spec
from .trace import tau, gram, dual_basis, mm_condition_check, trace_property_check, CertificationError
from .center import (CenterBasis, commutant_center, centrality_check, class_coeffs,
                     build_center, span_compare, char_values)

__version__ = "0.1.0"
