import math

import numpy as np
import pytest

from annulus_zeros import (DIRICHLET, NEUMANN, BranchPoint, ConvergenceError,
                           DomainError, NewtonConfig, PathError, ProblemParams,
                           ZeroBranch, branch_derivative, continue_branch,
                           find_real_zeros, im_extrema, locate_im_extremum,
                           locate_realness_crossing, mcmahon_pq, mcmahon_zero,
                           oblique_cross, refine_zero)
from annulus_zeros.errors import ExtremumNotFoundError


def synthetic_branch(ts, zs):
    b = ZeroBranch(s=0, params=ProblemParams(1.0, 1.1, 0.0))
    for t, z in zip(ts, zs):
        b.path.append(BranchPoint(float(t), complex(z), 0.0))
    return b


# ---------------------------------------------------------------------------
# real zeros
# ---------------------------------------------------------------------------

def test_dirichlet_half_integer_zeros_are_pi_multiples():
    zeros = find_real_zeros(DIRICHLET, ProblemParams(0.5, 2.0), 3)
    for s, z in enumerate(zeros, start=1):
        assert z == pytest.approx(s * math.pi, rel=1e-13)


def test_neumann_exceptional_zero_reference():
    # z_0^N for nu = 2, kappa = 1.1 (30-digit arbitrary-precision root)
    zeros = find_real_zeros(NEUMANN, ProblemParams(2.0, 1.1), 1)
    assert zeros[0] == pytest.approx(1.9054721436541379, rel=1e-12)


def test_neumann_ladder_tracks_mcmahon():
    p = ProblemParams(0.0, 1.1)
    zeros = find_real_zeros(NEUMANN, p, 3)
    pq = mcmahon_pq(NEUMANN, p)
    for s, z in enumerate(zeros, start=1):
        assert z == pytest.approx(mcmahon_zero(s, p, pq).real, abs=1e-3)


def test_find_real_zeros_validation():
    with pytest.raises(ValueError):
        find_real_zeros("oblique", ProblemParams(1.0, 1.5), 2)
    with pytest.raises(ValueError):
        find_real_zeros(DIRICHLET, ProblemParams(1.0, 1.5), 0)


# ---------------------------------------------------------------------------
# Newton refinement
# ---------------------------------------------------------------------------

def test_refine_recovers_perturbed_real_zero():
    p = ProblemParams(2.0, 1.1, 0.5)
    # start from the beta = 0 Neumann zero; the oblique zero is nearby
    seed = find_real_zeros(NEUMANN, p, 2)[1]
    z, res = refine_zero(p, complex(seed, 0.1))
    assert res <= 1e-11
    g = oblique_cross(p, z)
    assert abs(g) <= 1e-9


def test_refine_scaled_matches_unscaled():
    p = ProblemParams(2.0, 1.1, 0.3)
    seed = complex(find_real_zeros(NEUMANN, p, 1)[0], 0.0)
    z_u, _ = refine_zero(p, seed + 0.05j)
    z_s, _ = refine_zero(p, seed + 0.05j, scaled=True)
    assert z_s == pytest.approx(z_u, rel=1e-9)


def test_refine_rejects_bad_guesses():
    p = ProblemParams(2.0, 1.1, 0.5)
    with pytest.raises(DomainError):
        refine_zero(p, 0.0)
    with pytest.raises(DomainError):
        refine_zero(p, -3.0)


def test_refine_reports_failure_state():
    p = ProblemParams(2.0, 1.1, 0.5)
    cfg = NewtonConfig(max_iter=2)
    with pytest.raises(ConvergenceError) as exc:
        refine_zero(p, complex(500.0, 40.0), cfg)
    assert exc.value.last_z is not None


def test_newton_config_validation():
    with pytest.raises(ValueError):
        NewtonConfig(tol_newton=0.0)
    with pytest.raises(ValueError):
        NewtonConfig(step_init=1e-6, step_min=1e-5)


# ---------------------------------------------------------------------------
# continuation
# ---------------------------------------------------------------------------

def test_continue_branch_t_max_zero_single_point():
    b = continue_branch(1, 2.0, 1.1, 0.0)
    assert len(b.path) == 1
    assert b.path[0].t == 0.0
    assert b.path[0].z.imag == 0.0
    assert b.status == "completed"


def test_continue_branch_short_run_zeros_verified():
    b = continue_branch(1, 2.0, 1.1, 1.0)
    assert b.status == "completed"
    assert b.path[-1].t == pytest.approx(1.0)
    # every path point is a certified zero of its own problem
    for pt in b.path:
        p = ProblemParams(2.0, 1.1, pt.t / 2.0)
        assert pt.residual <= 1e-11
        assert abs(oblique_cross(p, pt.z)) <= 1e-8
    # t is strictly increasing
    assert np.all(np.diff(b.ts) > 0)


def test_continue_branch_s0_exceptional():
    b = continue_branch(0, 2.0, 1.1, 1.0)
    assert b.status == "completed"
    # starts at the real exceptional Neumann zero and moves into the plane
    assert b.path[0].z == pytest.approx(1.9054721436541379, rel=1e-10)
    assert b.path[-1].z.imag != 0


def test_continue_branch_rejects_nu_zero():
    with pytest.raises(DomainError):
        continue_branch(1, 0.0, 1.1, 1.0)
    with pytest.raises(DomainError):
        continue_branch(1, 2.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        continue_branch(-1, 2.0, 1.1, 1.0)
    with pytest.raises(ValueError):
        continue_branch(1, 2.0, 1.1, -1.0)


# ---------------------------------------------------------------------------
# path post-processing
# ---------------------------------------------------------------------------

def test_branch_derivative_linear_and_quadratic():
    ts = np.linspace(0, 1, 11)
    const = synthetic_branch(ts, np.full(11, 2 + 1j))
    for _, d in branch_derivative(const):
        assert d == 0
    quad = synthetic_branch(ts, ts**2)
    ds = branch_derivative(quad)
    # central differences of t^2 are exact: d = 2t at interior points
    for t, d in ds[1:-1]:
        assert d == pytest.approx(2 * t, abs=1e-12)


def test_branch_derivative_needs_three_points():
    b = synthetic_branch([0.0, 0.1], [1.0, 1.1])
    with pytest.raises(PathError):
        branch_derivative(b)


def test_im_extrema_synthetic():
    ts = np.linspace(0, 2 * math.pi, 200)
    zs = 5 + 1j * np.sin(ts)
    b = synthetic_branch(ts, zs)
    found = im_extrema(b)
    kinds = [k for k, _, _ in found]
    assert kinds == ["max", "min"]
    t_max, y_max = locate_im_extremum(b, "max")
    assert t_max == pytest.approx(math.pi / 2, abs=1e-3)
    assert y_max == pytest.approx(1.0, abs=1e-4)
    t_min, y_min = locate_im_extremum(b, "min")
    assert t_min == pytest.approx(3 * math.pi / 2, abs=1e-3)
    assert y_min == pytest.approx(-1.0, abs=1e-4)


def test_locate_im_extremum_not_found():
    ts = np.linspace(0, 1, 10)
    b = synthetic_branch(ts, 3 + 1j * ts)  # monotone, no interior extremum
    with pytest.raises(ExtremumNotFoundError):
        locate_im_extremum(b, "min")
    with pytest.raises(ValueError):
        locate_im_extremum(b, "saddle")


def test_realness_crossing_requires_sign_change():
    ts = np.linspace(0, 1, 10)
    b = synthetic_branch(ts, 3 + 1j * (1 + ts))
    with pytest.raises(ExtremumNotFoundError):
        locate_realness_crossing(b)
