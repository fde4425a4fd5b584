"""Problem parameters for the annulus cross-product problem."""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ProblemParams:
    """Order, thickness and oblique tangent (nu >= 0, kappa > 1, beta >= 0).

    kappa is the ratio of outer to inner radius; beta is the tangent of the
    oblique angle in the boundary condition (beta = 0 gives the Neumann
    problem).
    """

    nu: float
    kappa: float
    beta: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.nu) and self.nu >= 0):
            raise ValueError(f"order nu must be finite and >= 0, got {self.nu}")
        if not (math.isfinite(self.kappa) and self.kappa > 1):
            raise ValueError(f"thickness kappa must be > 1, got {self.kappa}")
        if not (math.isfinite(self.beta) and self.beta >= 0):
            raise ValueError(f"oblique tangent beta must be finite and >= 0, got {self.beta}")


def unchecked_params(nu, kappa, beta=0.0):
    """Build ProblemParams bypassing validation.

    Test-only entry point: symmetry and Wronskian checks need kappa <= 1 or
    beta < 0, which the public constructor rejects.
    """
    p = object.__new__(ProblemParams)
    object.__setattr__(p, "nu", nu)
    object.__setattr__(p, "kappa", kappa)
    object.__setattr__(p, "beta", beta)
    return p
