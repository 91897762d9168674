"""Derived normal deformations, Rees algebras and blow-ups of presented centers over Q."""

from .blowup import (
    blowup_chart,
    blowup_charts,
    check_excessive,
    cocycle_check,
    exceptional_divisor,
    make_square,
    transition,
    verify_deformation_as_blowup,
)
from .dgalg import (
    GeneratorSpec,
    SemifreeCDGA,
    base_change,
    cancel_cell,
    derived_quotient,
    derived_tensor,
    localize,
    make_cdga,
    pi0,
    polynomial_algebra,
    sym_algebra,
    weight_zero_localization,
)
from .dsl import ProblemSpec, parse_problem, print_problem
from .homology import homology_table
from .infnbhd import inf_neighborhood, pi0_ideal_check, verify_inf_triangles
from .polycore import Polynomial, Ring, buchberger, eliminate, ideal_equal, saturate
from .rees import (
    conormal_model,
    deformation_fiber,
    make_center,
    normal_cone_model,
    rees_extended,
)

__version__ = "0.1.0"
