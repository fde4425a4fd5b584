"""Zeros of oblique-derivative Bessel cross-products on circular annuli.

Evaluates the Dirichlet, Neumann and oblique cross-products of J_nu and Y_nu
for complex argument, produces thin-annulus series for their zeros (McMahon
ladder and the exceptional zero), refines zeros by complex Newton iteration,
and tracks zero branches as the oblique tangent grows.
"""

from .bessel import (AsymptoticAux, BesselEval, asymptotic_aux, asymptotic_eval,
                     eval_bessel, eval_second_derivs)
from .cross import (cross_g, dirichlet_cross, neumann_cross, oblique_cross,
                    oblique_cross_dz, oblique_cross_scaled)
from .errors import (BracketError, ConvergenceError, DomainError,
                     EvaluationOverflowError, ExtremumNotFoundError, PathError)
from .params import ProblemParams, unchecked_params
from .series import (DIRICHLET, NEUMANN, OBLIQUE, CoeffSeq, McMahonPQ,
                     PerturbationResult, bell_hat, buchholz_z0n, coeff_seq,
                     exceptional_zero_series, mcmahon_pq, mcmahon_zero,
                     seq_a, seq_b, seq_c, solve_perturbation,
                     spiral_phase_shift, theta_series)
from .zeros import (BranchPoint, NewtonConfig, ZeroBranch, branch_derivative,
                    continue_branch, find_real_zeros, im_extrema,
                    locate_im_extremum, locate_realness_crossing, refine_zero)

__version__ = "0.1.0"
