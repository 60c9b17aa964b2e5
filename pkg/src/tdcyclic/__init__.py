"""Two-dimensional cyclic codes over finite fields.

Constructs canonical generating polynomial sets and generator matrices
for ideals of F[x,y]/(x^s - 1, y^ell - 1), with exact finite-field
arithmetic, a telescoping membership decomposition, and an independent
brute-force verification oracle.
"""

from .codegen import (CodeParams, GeneratorMatrix, code_params, dimension,
                      encode, generator_matrix, min_distance)
from .errors import BoundsError, DivisibilityError, NotMember, TooLargeError
from .gf import GF, Field, default_modulus, field_descriptor, field_from_descriptor
from .ideal import (Decomposition, EchelonBasis, GeneratorSet, LayerInfo,
                    canonical_form, decompose, extract_generators,
                    generator_set_from_basis, layer_generator, span_basis)
from .oracle import (ClosureBasis, Report, bruteforce_ideal, check_shift_closure,
                     enumerate_span, reduced_span, verify_generator_set,
                     verify_matrix)
from .polyring import (CyclicPoly, Poly, cofactor, divides_xs_minus_one, gcd,
                       xgcd, xs_minus_one)
from .ring2d import CODEWORD, INTERNAL, BiPoly, RingShape

__version__ = "0.1.0"

__all__ = [
    "GF", "Field", "default_modulus", "field_descriptor", "field_from_descriptor",
    "Poly", "CyclicPoly", "gcd", "xgcd", "xs_minus_one", "divides_xs_minus_one",
    "cofactor",
    "RingShape", "BiPoly", "INTERNAL", "CODEWORD",
    "EchelonBasis", "LayerInfo", "GeneratorSet", "Decomposition",
    "span_basis", "layer_generator", "extract_generators",
    "generator_set_from_basis", "canonical_form", "decompose",
    "GeneratorMatrix", "CodeParams", "generator_matrix", "dimension",
    "encode", "min_distance", "code_params",
    "ClosureBasis", "Report", "bruteforce_ideal", "enumerate_span",
    "reduced_span", "check_shift_closure", "verify_generator_set",
    "verify_matrix",
    "BoundsError", "TooLargeError", "NotMember", "DivisibilityError",
]
