"""Exact computations in triangle groups Delta(p1, p2, p3).

Cyclotomic arithmetic, the Tits reflection representation, Todd-Coxeter
coset enumeration, orbifold covers read off coset tables, Nielsen moves, and
a catalog of generating pairs that are checked to come from special almost
orbifold coverings.
"""

from .catalog import (CASE_IDS, CaseParams, VerificationReport, admissible_cases,
                      build_pair, reduce_case6, validate_params, verify_case,
                      verify_theorem)
from .coset import (CosetTable, EnumLimits, FpPresentation, SubgroupSpec,
                    free_product_presentation, todd_coxeter, triangle_presentation)
from .cyclotomic import CycField, CycNum, field_new, two_cos_pi_over, zeta_power
from .errors import *  # noqa: F401,F403
from .nielsen import (Certificate, GenPair, NielsenMove, apply_move,
                      exhaustive_orbits, search_equivalence)
from .orbifold import (AlmostCoverPlan, Orbifold, assemble_almost_cover,
                       euler_characteristic, parse_orbifold, reconstruct_cover,
                       verify_riemann_hurwitz)
from .tits import (INFINITE, GroupContext, GroupElement, TriangleSignature,
                   enumerate_group, eval_word, geometry_type, group_new, order)
from .words import Word, parse_word

__version__ = "0.1.0"
