from .compare import compare_classical_blowup, compare_classical_deformation
from .oracle import (
    ClassicalReesIdeal,
    classical_blowup_chart,
    classical_normal_cone,
    classical_rees,
    power_slice_check,
)

__all__ = [
    "ClassicalReesIdeal",
    "classical_blowup_chart",
    "classical_normal_cone",
    "classical_rees",
    "compare_classical_blowup",
    "compare_classical_deformation",
    "power_slice_check",
]
