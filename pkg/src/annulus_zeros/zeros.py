"""Real reference zeros, complex Newton refinement, and branch continuation.

Branches z_s are tracked in the combined parameter t = nu*beta: a secant
predictor advances t, a Newton corrector re-converges the zero, and an
adaptive step halves on failure / doubles after repeated successes.  A guard
against branch-jumping rejects corrector results that move more than half the
distance to the neighbouring branch estimates.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

from .cross import (dirichlet_cross, neumann_cross, oblique_cross,
                    oblique_cross_with_dz, oblique_cross_scaled_with_dz)
from .errors import (BracketError, ConvergenceError, DomainError,
                     ExtremumNotFoundError, PathError)
from .params import ProblemParams
from .series import (DIRICHLET, NEUMANN, OBLIQUE, buchholz_z0n, mcmahon_pq,
                     mcmahon_zero)


@dataclass(frozen=True)
class NewtonConfig:
    """Tolerances and stepping parameters for refinement and continuation."""

    tol_newton: float = 1e-11
    max_iter: int = 30
    step_init: float = 0.05
    step_min: float = 1e-5

    def __post_init__(self):
        if self.tol_newton <= 0:
            raise ValueError("tol_newton must be positive")
        if self.step_min >= self.step_init:
            raise ValueError("step_min must be smaller than step_init")


@dataclass(frozen=True)
class BranchPoint:
    t: float
    z: complex
    residual: float


@dataclass
class ZeroBranch:
    """Computed path of one zero branch in the parameter t = nu*beta."""

    s: int
    params: ProblemParams  # beta field unused; beta = t / nu along the path
    path: list = field(default_factory=list)
    status: str = "completed"

    @property
    def ts(self):
        return np.array([pt.t for pt in self.path])

    @property
    def zs(self):
        return np.array([pt.z for pt in self.path])


# ---------------------------------------------------------------------------
# Real zeros of the Dirichlet / Neumann problems
# ---------------------------------------------------------------------------

def _real_cross(problem, p: ProblemParams):
    fn = dirichlet_cross if problem == DIRICHLET else neumann_cross
    return lambda x: fn(p, x).real


def _bracket_and_polish(f, seed, half_width, index):
    lo = max(seed - half_width, 1e-3 * seed)
    hi = seed + half_width
    flo, fhi = f(lo), f(hi)
    shrink = 0.5
    while flo * fhi > 0:
        half_width *= shrink
        if half_width < 1e-9 * seed:
            raise BracketError(
                f"no sign change around seed {seed:.6g} (zero index {index})",
                index=index)
        lo = max(seed - half_width, 1e-3 * seed)
        hi = seed + half_width
        flo, fhi = f(lo), f(hi)
    x = optimize.brentq(f, lo, hi, xtol=1e-13, rtol=8.9e-16)
    # Newton polish with a numerically robust secant step
    h = 1e-7 * max(1.0, abs(x))
    for _ in range(4):
        fx = f(x)
        d = (f(x + h) - f(x - h)) / (2 * h)
        if d == 0:
            break
        scale = max(1.0, abs(d * x))
        if abs(fx) <= 1e-12 * scale:
            break
        x -= fx / d
    return x


def find_real_zeros(problem, p: ProblemParams, count):
    """First `count` positive real zeros of the Dirichlet or Neumann problem.

    Dirichlet: the McMahon zeros s = 1..count.  Neumann: the exceptional zero
    first (when nu > 0), then the McMahon zeros.  Zeros are bracketed from
    their series seeds and polished to |f| <= 1e-12 * scale.
    """
    if problem not in (DIRICHLET, NEUMANN):
        raise ValueError(f"problem must be dirichlet or neumann, got {problem!r}")
    if count < 1:
        raise ValueError("count must be >= 1")
    base = ProblemParams(p.nu, p.kappa, 0.0)
    pq = mcmahon_pq(problem, base)
    spacing = math.pi / (p.kappa - 1)
    seeds = []
    if problem == NEUMANN and p.nu > 0:
        seeds.append(buchholz_z0n(p.nu, p.kappa))
    s = 1
    while len(seeds) < count:
        seeds.append(mcmahon_zero(s, base, pq).real)
        s += 1
    f = _real_cross(problem, base)
    zeros = []
    for i, seed in enumerate(seeds):
        half = 0.25 * spacing
        if i == 0 and problem == NEUMANN and p.nu > 0:
            # exceptional zero is far below the McMahon ladder
            half = min(half, 0.45 * seed)
        zeros.append(_bracket_and_polish(f, seed, half, i))
    return zeros


# ---------------------------------------------------------------------------
# Complex Newton refinement
# ---------------------------------------------------------------------------

def refine_zero(p: ProblemParams, z_guess, cfg: NewtonConfig = NewtonConfig(),
                scaled=False):
    """Newton-refine a zero of the oblique cross-product from z_guess.

    Converges when |g| <= tol_newton * scale with scale = max(1, |dg/dz| |z|).
    With scaled=True the pole-free variant kappa z^2 g is iterated instead
    (better conditioned near small |z|); the convergence test is the same.
    Returns (z, residual) with residual = |g| / scale.
    """
    z = complex(z_guess)
    if z == 0:
        raise DomainError("z_guess must be nonzero")
    if z.real < 0:
        raise DomainError("z_guess must satisfy Re z >= 0")
    fn = oblique_cross_scaled_with_dz if scaled else oblique_cross_with_dz
    last_res = math.inf
    for _ in range(cfg.max_iter):
        g, dg = fn(p, z)
        if abs(dg) < 1e-300:
            raise ConvergenceError(
                f"derivative underflow at z={z}", last_z=z)
        scale = max(1.0, abs(dg) * abs(z))
        last_res = abs(g) / scale
        if last_res <= cfg.tol_newton:
            return z, last_res
        z = z - g / dg
        if z == 0:
            raise ConvergenceError("Newton iterate hit z = 0", last_z=z)
    raise ConvergenceError(
        f"no convergence after {cfg.max_iter} iterations (residual {last_res:.3g})",
        last_z=z, residual=last_res)


def _unscaled_residual(p: ProblemParams, z):
    g, dg = oblique_cross_with_dz(p, z)
    return abs(g) / max(1.0, abs(dg) * abs(z))


# ---------------------------------------------------------------------------
# Continuation in t = nu*beta
# ---------------------------------------------------------------------------

def _neighbor_estimates(s, nu, kappa, beta):
    p = ProblemParams(nu, kappa, beta)
    pq = mcmahon_pq(OBLIQUE, p)
    out = []
    for sn in (s - 1, s + 1):
        if sn >= 1:
            out.append(mcmahon_zero(sn, p, pq))
    return out


def continue_branch(s, nu, kappa, t_max, cfg: NewtonConfig = NewtonConfig()):
    """Track branch s of the oblique zeros from t = 0 up to t = t_max.

    Starts at the s-th real Neumann zero, predicts by secant extrapolation
    and corrects with refine_zero.  Steps halve on corrector failure down to
    step_min (status 'step-failed' keeps the partial path) and double back
    after five consecutive successes.  Requires nu > 0: with nu = 0 the
    parameter t = nu*beta cannot vary.
    """
    if nu <= 0:
        raise DomainError("continuation requires nu > 0 (t = nu*beta is constant otherwise)")
    if kappa <= 1:
        raise DomainError("kappa must be > 1")
    if s < 0:
        raise ValueError("branch index s must be >= 0")
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    params = ProblemParams(nu, kappa, 0.0)
    start = find_real_zeros(NEUMANN, params, s + 1)[s]
    branch = ZeroBranch(s=s, params=params)
    res0 = _unscaled_residual(params, complex(start))
    branch.path.append(BranchPoint(0.0, complex(start), res0))
    if t_max == 0:
        return branch

    scaled = s == 0
    step = cfg.step_init
    successes = 0
    t = 0.0
    while t < t_max:
        t_next = min(t + step, t_max)
        pts = branch.path
        if len(pts) >= 2:
            (t0, z0), (t1, z1) = (pts[-2].t, pts[-2].z), (pts[-1].t, pts[-1].z)
            z_pred = z1 + (z1 - z0) / (t1 - t0) * (t_next - t1)
        else:
            z_pred = pts[-1].z
        beta = t_next / nu
        p_next = ProblemParams(nu, kappa, beta)
        ok = False
        try:
            z_corr, res = refine_zero(p_next, z_pred, cfg, scaled=scaled)
            res = _unscaled_residual(p_next, z_corr)
            if res > cfg.tol_newton:
                z_corr, res = refine_zero(p_next, z_corr, cfg, scaled=False)
            # branch-identity guard
            neighbors = _neighbor_estimates(s, nu, kappa, beta)
            jump = abs(z_corr - z_pred)
            near = min((abs(z_pred - nb) for nb in neighbors), default=math.inf)
            ok = jump <= 0.5 * near
        except (ConvergenceError, DomainError, OverflowError):
            ok = False
        if ok and z_corr.real < 0:
            branch.status = "left-domain"
            break
        if ok:
            branch.path.append(BranchPoint(t_next, z_corr, res))
            t = t_next
            successes += 1
            if successes >= 5:
                step = min(2 * step, cfg.step_init)
                successes = 0
        else:
            successes = 0
            step /= 2
            if step < cfg.step_min:
                branch.status = "step-failed"
                break
    return branch


# ---------------------------------------------------------------------------
# Path post-processing
# ---------------------------------------------------------------------------

def branch_derivative(b: ZeroBranch):
    """dz/dt along the path: central differences inside, one-sided at the ends."""
    if len(b.path) < 3:
        raise PathError("need at least 3 path points for derivatives")
    ts, zs = b.ts, b.zs
    out = []
    n = len(ts)
    for i in range(n):
        if i == 0:
            d = (zs[1] - zs[0]) / (ts[1] - ts[0])
        elif i == n - 1:
            d = (zs[-1] - zs[-2]) / (ts[-1] - ts[-2])
        else:
            d = (zs[i + 1] - zs[i - 1]) / (ts[i + 1] - ts[i - 1])
        out.append((float(ts[i]), complex(d)))
    return out


def _parabolic_vertex(t0, t1, t2, y0, y1, y2):
    # vertex of the quadratic through three (t, y) points
    d1 = (y1 - y0) / (t1 - t0)
    d2 = (y2 - y1) / (t2 - t1)
    curv = (d2 - d1) / (t2 - t0)
    if curv == 0:
        return t1, y1
    t_star = 0.5 * (t0 + t1 - d1 / curv)

    def quad(t):
        return (y0 * (t - t1) * (t - t2) / ((t0 - t1) * (t0 - t2))
                + y1 * (t - t0) * (t - t2) / ((t1 - t0) * (t1 - t2))
                + y2 * (t - t0) * (t - t1) / ((t2 - t0) * (t2 - t1)))
    return t_star, quad(t_star)


def im_extrema(b: ZeroBranch):
    """Interior local extrema of Im z along the path.

    Returns a list of ('min'|'max', t_star, im_z) with parabolic refinement.
    """
    if len(b.path) < 3:
        raise PathError("need at least 3 path points")
    ts, im = b.ts, b.zs.imag
    out = []
    for i in range(1, len(ts) - 1):
        if im[i] < im[i - 1] and im[i] < im[i + 1]:
            kind = "min"
        elif im[i] > im[i - 1] and im[i] > im[i + 1]:
            kind = "max"
        else:
            continue
        t_star, y_star = _parabolic_vertex(ts[i - 1], ts[i], ts[i + 1],
                                           im[i - 1], im[i], im[i + 1])
        out.append((kind, float(t_star), float(y_star)))
    return out


def locate_im_extremum(b: ZeroBranch, which):
    """Most pronounced local extremum of Im z of the requested kind.

    which is 'min' or 'max'; raises ExtremumNotFoundError when the path has
    no interior extremum of that kind.
    """
    if which not in ("min", "max"):
        raise ValueError("which must be 'min' or 'max'")
    cands = [(t, y) for kind, t, y in im_extrema(b) if kind == which]
    if not cands:
        raise ExtremumNotFoundError(f"no interior Im-{which} in path range")
    key = min if which == "min" else max
    t_star, y_star = key(cands, key=lambda ty: ty[1])
    return t_star, y_star


def locate_realness_crossing(b: ZeroBranch, cfg: NewtonConfig = NewtonConfig(),
                             im_tol=1e-6):
    """(t, z) on the branch where Im z crosses zero, to |Im z| <= im_tol.

    Bisects t between the first adjacent path points with an Im sign change,
    re-converging the zero at each probe.
    """
    ts, zs = b.ts, b.zs
    nu, kappa = b.params.nu, b.params.kappa
    idx = None
    for i in range(len(ts) - 1):
        if zs.imag[i] != 0 and zs.imag[i + 1] != 0 and zs.imag[i] * zs.imag[i + 1] < 0:
            idx = i
            break
    if idx is None:
        raise ExtremumNotFoundError("no Im z sign change along the path")
    t_lo, t_hi = float(ts[idx]), float(ts[idx + 1])
    z_lo, z_hi = complex(zs[idx]), complex(zs[idx + 1])
    for _ in range(80):
        t_mid = 0.5 * (t_lo + t_hi)
        frac = (t_mid - t_lo) / (t_hi - t_lo)
        seed = z_lo + frac * (z_hi - z_lo)
        z_mid, _ = refine_zero(ProblemParams(nu, kappa, t_mid / nu), seed, cfg)
        if abs(z_mid.imag) <= im_tol:
            return t_mid, z_mid
        if z_mid.imag * z_lo.imag > 0:
            t_lo, z_lo = t_mid, z_mid
        else:
            t_hi, z_hi = t_mid, z_mid
    raise ConvergenceError("realness crossing did not converge", last_z=z_mid)
