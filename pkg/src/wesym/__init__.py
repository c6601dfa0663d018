"""Weight enumerators of linear codes and their symmetry groups.

Exact weight-distribution computation for codes over GF(p^v), the
finite/infinite classification of enumerator symmetry groups, the
root-permutation algorithm recovering the group in PGL2(C) with its
Blichfeldt isomorphism type, and exact invariant-ring decompositions.
"""

from .classify import (ContradictsLemmaError, InfiniteCaseReport,
                       analyze_infinite, gleason_pierce_corollary_check,
                       pair_sum_code, structural_infinite_case,
                       structural_pair_sum, verify_m_semigroup_generators)
from .codes import (EnumeratorCache, FieldMismatchError, LinearCode,
                    NonIntegerResultError, RaggedRowsError, RankDeficientError,
                    TooLargeError, UnknownNameError, WeightEnumerator,
                    canonical_key, code_from_matrix, direct_sum, divisibility,
                    dual, iter_codewords, macwilliams, named_code,
                    projective_reed_muller, read_code_file, reed_muller,
                    weight_enumerator, weight_enumerator_smart,
                    write_code_file)
from .fields import (Field, FieldTooLargeError, NotPrimeError, field,
                     field_from_order)
from .homopoly import (HomPoly, MultiplicityStructure, SingularMatrixError,
                       is_formally_self_dual, multiplicity_structure, product,
                       substitute_exact)
from .invariants import (DegreeMismatchError, InvariantDecomposition,
                         NotMemberError, decompose, dihedral_generators,
                         gleason_generators)
from .roots import (PrecisionExhaustedError, RootSet, find_roots,
                    pairwise_separation, reconstruct_relative_error)
from .symmetry import (ClosureFailureError, CrossRatioCertificate,
                       DegenerateTupleError, IsoType, NotBlichfeldtError,
                       ProjectiveMatrix, SymmetryElement, SymmetryGroup,
                       check_v_antiinvariance, classify_finiteness,
                       cross_ratio, group_from_json, group_to_json,
                       identify_group, lift_scalars, symmetry_group,
                       trivial_certificate)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
