"""Characteristic-polynomial averages of unitary ensembles and their
universal soft- and hard-edge limits.

Modules:
    specialfn    Airy, Bessel, Hankel and the contour integrals f_nu, g_nu
    orthopoly    recurrence coefficients, Cauchy transforms, RH matrix, kernels
    equilibrium  one-cut equilibrium measures and edge zoom maps
    correlators  finite-n averages and their edge-scaled versions
    parametrix   Airy/Bessel model matrices and limit determinants
    kontsevich   matrix Airy and matrix Bessel determinant formulas
    oracles      brute-force quadratures used as independent references
"""
from .correlators import (PointSet, ScaledPointSet, corr_I, corr_II, corr_III,
                          scaled_hard_lhs, scaled_soft_lhs)
from .equilibrium import (EquilibriumData, ZoomMap, edge_zoom, effective_potential,
                          solve_one_cut, zoom_constant, zoom_map)
from .errors import (BranchCutError, BudgetExceededError, ConvergenceError,
                     EdgeDualityError, IllConditionedError, InstabilityError,
                     MultiCutError, NearSupportError, RecurrenceInstabilityWarning,
                     SectorMismatchError, SingularityError)
from .kontsevich import (YSpec, dlogZ_dx, matrix_bessel_det, thm_hard_rhs, thm_soft_rhs,
                         z_kont, z_kont_generalized)
from .orthopoly import (RecurrenceTable, WeightSpec, cauchy_transform, cd_kernel,
                        cd_kernel_from_Y, eval_p, gaussian_weight, laguerre_weight,
                        quartic_weight, recurrence_coeffs, rh_matrix_Y)
from .parametrix import (ParametrixKind, airy_kernel, airy_parametrix, bessel_kernel,
                         bessel_parametrix, block_det_form, detid_check, limit_rhs)
from .specialfn import (ContourSpec, airy, airy_rotated, bessel_j, f_nu, g_nu, hankel1)

__version__ = "0.1.0"
