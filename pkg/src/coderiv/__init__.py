"""coderiv: exact-arithmetic homology of enveloping coalgebra complexes.

The package encodes an algebra structure (associative, commutative, Lie or
Gerstenhaber, given by structure constants over Q) as a square-zero
coderivation of the matching free coalgebra and computes the associated
chain complexes, homology and cohomology, Koszul resolutions, and the full
battery of coalgebra-law checks, all in exact rational arithmetic.
"""

from .algebras import (AlgebraPresentation, InvalidInput, MalformedPresentation,
                       ModulePresentation, NoUnit, Violation, semidirect,
                       validate, validate_module)
from .graded import (GradedBasis, Permutation, Word, enumerate_shuffles,
                     koszul_sign, reorder_sign, word_degree)
from .linalg import (CompositeNotZero, DimensionMismatch, SparseMap, Subspace,
                     homology_dim, kernel_basis, quotient_reduce, rank)

__version__ = "0.1.0"
