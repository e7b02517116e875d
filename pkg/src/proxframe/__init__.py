"""Frame soft shrinkage as a proximity operator.

The frame soft shrinkage ``T^+ S_gamma T`` for a full-column-rank frame
matrix ``T`` is the prox of a convex function in the inner product
``<x, y>_T = <T x, T y>``. This package implements the operator, the
subgradient map it induces, an exact iterative prox of ``gamma ||T.||_1`` for
comparison, forward-backward splitting with either backward step, and a
randomized verification harness.
"""

from .errors import (ConsistencyError, DomainError, FormatError, LengthError,
                     NoConvergenceError, NonFiniteError, ProxFrameError, RankError,
                     RegionError, ShapeError, SizeError, StepSizeError)
from .exact_prox import (ProxResult, ProxSolverConfig, ShrinkProxComparison,
                         analysis_objective, compare_shrink_vs_prox, exact_prox,
                         kkt_certificate)
from .frame import (FrameMatrix, RankTolerance, build_frame, pinv_apply, projector_apply,
                    t_inner, t_norm)
from .shrinkage import ShrinkConfig, frame_soft_shrink, residual_shrink, soft_shrink
from .solver import (BackwardStep, FbsTrace, ForwardModel, fbs_solve, frame_gallery,
                     gallery_from_spec, tv_matrix, tv_matrix_sparse)
from .subgradient import (FixedPointConfig, HElement, PropertyReport, aggregate,
                          cyclic_monotonicity_check, firm_nonexpansive_check, h_1d_value,
                          h_element, h_zero_membership, in_single_valued_region,
                          phi_1d_value, single_value_formula)

__version__ = "0.1.0"
