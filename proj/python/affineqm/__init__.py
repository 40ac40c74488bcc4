"""Affine quantization on the half-line.

Thin Python layer over the C++ core: closed-form eigenstates of the affine
free particle and half oscillator, a finite-difference eigensolver, and the
verification checks used by the ``affineqm`` command-line tool.
"""

from ._core import (
    Branch,
    PhysicalParams,
    __version__,
    bessel_j1,
    bessel_j1_zero,
    closure_errors,
    commutator_orders,
    count_sign_changes,
    free_eigenfunction,
    free_energy,
    gamma,
    ho_eigenfunction,
    ho_energy,
    kummer_1f1,
    landau_integral,
    normalization_constant,
    orthonormality_matrix,
    pochhammer,
    run_cli,
    spectrum,
    sweep_b,
)

__all__ = [
    "Branch",
    "PhysicalParams",
    "__version__",
    "bessel_j1",
    "bessel_j1_zero",
    "closure_errors",
    "commutator_orders",
    "count_sign_changes",
    "free_eigenfunction",
    "free_energy",
    "gamma",
    "ho_eigenfunction",
    "ho_energy",
    "kummer_1f1",
    "landau_integral",
    "normalization_constant",
    "orthonormality_matrix",
    "pochhammer",
    "run_cli",
    "spectrum",
    "sweep_b",
]
