"""eindep: exact detection of algebraic relations among values of
parametric linear combinations.

Given linear forms phi_1..phi_p in X_1..X_N with polynomial coefficients
in z, and generators of an ideal I of K[z, X], the package computes

* the functional relations satisfied by the composed forms over K(z),
* a non-zero locus polynomial W(z) whose roots cover every point alpha
  where the specialized values can become algebraically dependent, and
* at each candidate alpha, exact generators of the ideal of value
  relations.

All arithmetic is exact over Q or Q(i); the only floating point lives in
the root approximation step, whose output is always verified exactly
before use.
"""

from .scalars import GaussRat, parse_scalar, scalar_str
from .unipoly import (PoleError, RatFunc, UniPoly, Z, num_of, poly_gcd,
                      poly_lcm_monic)
from .ordering import (ELIM_STANDARD, PAPER_LITERAL, OrderSpec, mono_cmp,
                       mono_div, mono_divisible, mono_gcd)
from .mpoly import (MultiPoly, leading, mpoly_str, s_poly, specialize,
                    substitute_linear, weak_remainder)
from .groebner import (GBasis, StepBudgetExceeded, buchberger,
                       canonical_basis, elim_intersection, is_groebner,
                       reduce_to_zero)
from .forms import Frame, LinearForms, PointFrame, build_frame, rewrite_in_t, specialize_forms
from .parametric import ParametricReport, functional_relations, parametric_groebner
from .roots import PrecisionError, RootReport, find_roots
from .values import (ExceptionalReport, FunctionalDependenceError, ValueIdeal,
                     chi_substitute, exceptional_set, ideal_at_alpha,
                     j_alpha_generators)
from .linrel import Series, independent_subset, linear_relations

__version__ = "0.1.0"
