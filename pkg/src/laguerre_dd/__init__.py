"""Divisible designs from the projective line over dual numbers.

Exact, deterministic construction of 3-(q, k, lambda) divisible designs
as group orbits of base blocks on P(D(GF(q))), plus an independent
brute-force verifier of every design axiom.
"""

from .backends import BACKEND
from .base_blocks import (
    CaseSpec,
    ConditionError,
    QuadrupleClass,
    base_block_for,
    classify_quadruple,
    cross_ratio_orbit,
    select_variant_x,
)
from .dual_numbers import DualNumber, dual, dual_inverse, epsilon, is_unit, laguerre_algebra_check
from .finite_field import Field, FieldElement, make_field, subfield_elements
from .laguerre_line import (
    LaguerrePoint,
    ParallelClass,
    all_points,
    embedded_projective_subline,
    is_parallel,
    make_point,
    parallel_classes,
)
from .orbit_design import (
    DesignParameters,
    DivisibleDesign,
    build_design,
    derive_lower_t,
    design_parameters,
    orbit_of_block,
    stabilizer_order,
)
from .projectivities import (
    Projectivity,
    ProjectivityGroup,
    apply,
    enumerate_group,
    make_projectivity,
    map_standard_triple,
    map_triple,
    subfield_group_membership,
)
from .verify import (
    VerificationReport,
    count_containing_blocks,
    verify_design,
    verify_group_transitivity,
)

__version__ = "0.1.0"
