"""Closed-form series for zeros of the oblique cross-product.

Coefficient sequences for the large-argument Bessel expansions, McMahon-type
expansions of the large zeros, ordinary partial Bell polynomials, and the
thin-annulus perturbation series for the exceptional zero.

Coefficient helpers keep the arithmetic generic: Fraction inputs stay exact,
which lets the beta = 0 regression tests witness exact equality with the
known Neumann expansions.

Note: the published form of the exceptional-zero series carries a typo in the
real part of its second-order bracket; the series implemented here was
re-derived by solving the perturbation equations (see solve_perturbation) and
cross-checked against high-precision zero tracking.
"""

import math
from dataclasses import dataclass
from math import factorial

from .params import ProblemParams

DIRICHLET = "dirichlet"
NEUMANN = "neumann"
OBLIQUE = "oblique"

_PROBLEMS = (DIRICHLET, NEUMANN, OBLIQUE)


# ---------------------------------------------------------------------------
# Coefficient sequences a_k, b_k, c_k
# ---------------------------------------------------------------------------

def seq_a(nu, k):
    """k-th coefficient of the large-z expansion of J_nu, Y_nu.

    a_0 = 1, a_k = (4nu^2 - 1)(4nu^2 - 9)...(4nu^2 - (2k-1)^2) / (k! 8^k).
    Vanishes for k >= 1 when nu = 1/2.
    """
    if k == 0:
        return nu * 0 + 1
    nu2 = 4 * nu * nu
    num = nu2 - 1
    for j in range(2, k + 1):
        num = num * (nu2 - (2 * j - 1) ** 2)
    return num / (factorial(k) * 8**k)


def seq_b(nu, k):
    """k-th coefficient of the large-z expansion of J'_nu, Y'_nu.

    b_0 = 1, b_1 = (4nu^2 + 3)/8, and for k >= 2 the same product as a_k with
    the last factor replaced by (4nu^2 + 4k^2 - 1).
    """
    if k == 0:
        return nu * 0 + 1
    nu2 = 4 * nu * nu
    num = nu2 + 4 * k * k - 1
    for j in range(1, k):
        num = num * (nu2 - (2 * j - 1) ** 2)
    return num / (factorial(k) * 8**k)


def seq_c(nu, beta, k):
    """c_k = b_k + i*beta*nu*a_{k-1} for k >= 1; c_0 = 1.

    For beta = 0 this returns b_k unchanged (no complex promotion), so the
    Neumann reduction is exact.
    """
    if k == 0:
        return nu * 0 + 1
    b = seq_b(nu, k)
    if beta == 0:
        return b
    return b + 1j * beta * nu * seq_a(nu, k - 1)


@dataclass(frozen=True)
class CoeffSeq:
    """Finite coefficient sequence of one of the three kinds ('a', 'b', 'c')."""

    kind: str
    nu: float
    beta: float
    values: tuple


def coeff_seq(kind, nu, beta=0.0, upto=8):
    """Coefficients of the requested kind for indices 0..upto."""
    if kind not in ("a", "b", "c"):
        raise ValueError(f"kind must be 'a', 'b' or 'c', got {kind!r}")
    if upto < 0:
        raise ValueError("upto must be >= 0")
    fn = {"a": lambda k: seq_a(nu, k),
          "b": lambda k: seq_b(nu, k),
          "c": lambda k: seq_c(nu, beta, k)}[kind]
    return CoeffSeq(kind, nu, beta, tuple(fn(k) for k in range(upto + 1)))


# ---------------------------------------------------------------------------
# Phase expansion and McMahon zeros
# ---------------------------------------------------------------------------

def theta_series(p: ProblemParams, order=3):
    """Odd-power 1/z coefficients of the phase correction theta.

    Returns (theta_1, theta_3) truncated at the given order (<= 3):
    theta_1 = (1 - kappa) c_1 / kappa,
    theta_3 = ((kappa^3 - 1)/kappa^3) (c_1^3/3 + c_3 - c_2 c_1).
    The zeros of the cross-product satisfy (kappa - 1) z + theta = s pi.
    """
    if order > 3:
        raise ValueError("theta_series is implemented through order 3")
    k = p.kappa
    c1 = seq_c(p.nu, p.beta, 1)
    if order < 3:
        return ((1 - k) * c1 / k,)
    c2 = seq_c(p.nu, p.beta, 2)
    c3 = seq_c(p.nu, p.beta, 3)
    th1 = (1 - k) * c1 / k
    th3 = (k**3 - 1) / k**3 * (c1**3 / 3 + c3 - c2 * c1)
    return (th1, th3)


@dataclass(frozen=True)
class McMahonPQ:
    """McMahon correction pair for one of the three boundary problems."""

    problem: str
    p: complex
    q: complex


def mcmahon_pq(problem, p: ProblemParams):
    """Correction coefficients (p, q) of the McMahon expansion.

    Dirichlet and Neumann pairs are the classical real ones; the oblique pair
    is built from the c_k coefficients and reduces exactly to Neumann at
    beta = 0 (Neumann is computed through the same c-path).
    """
    if problem not in _PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}")
    nu, k = p.nu, p.kappa
    if problem == DIRICHLET:
        pp = (4 * nu * nu - 1) / (8 * k)
        qq = (k**3 - 1) * (16 * nu**4 - 104 * nu**2 + 25) / (384 * k**3 * (k - 1))
        return McMahonPQ(problem, pp, qq)
    th1, th3 = theta_series(p if problem == OBLIQUE else ProblemParams(nu, k, 0.0))
    # z = (s pi - theta)/(kappa - 1) gives p = -theta_1/(kappa-1), q = -theta_3/(kappa-1)
    return McMahonPQ(problem, -th1 / (k - 1), -th3 / (k - 1))


def mcmahon_zero(s, p: ProblemParams, pq: McMahonPQ):
    """Three-term McMahon estimate of the s-th large zero (s >= 1).

    z = u + p/u + (q - p^2)/u^3 with u = s pi / (kappa - 1). The exceptional
    s = 0 zero is not on this family; see exceptional_zero_series.
    """
    if s < 1:
        raise ValueError("McMahon branches start at s = 1; the s = 0 zero is exceptional")
    u = s * math.pi / (p.kappa - 1)
    return u + pq.p / u + (pq.q - pq.p * pq.p) / u**3


# ---------------------------------------------------------------------------
# Ordinary partial Bell polynomials
# ---------------------------------------------------------------------------

def bell_hat(k, n, x):
    """Ordinary partial Bell polynomial B-hat_{k,n}(x_1, ..., x_{k-n+1}).

    Sum over compositions of k into n positive parts of the product of the
    x entries indexed by the parts; x is 1-based conceptually (x[0] = x_1).
    """
    if k < 0 or n < 0 or n > k:
        raise IndexError(f"need 0 <= n <= k, got k={k}, n={n}")
    if n == 0:
        return 1 if k == 0 else 0
    if len(x) < k - n + 1:
        raise IndexError(f"need at least {k - n + 1} entries in x, got {len(x)}")
    total = 0
    for j in range(1, k - n + 2):
        total += x[j - 1] * bell_hat(k - j, n - 1, x)
    return total


# ---------------------------------------------------------------------------
# Regular perturbation for the exceptional zero
# ---------------------------------------------------------------------------
#
# The scaled cross-product kappa z^2 g_nu, with z = z0 + z1 e + z2 e^2 and
# kappa = 1 + e, is expanded in powers of e.  Bessel derivatives at z0 of any
# order reduce to the (C, C') basis through the Bessel ODE; same-argument
# cross-products then collapse onto the Wronskian.  The expansion coefficients
# are affine in the highest unknown, so each order is solved directly.

def _lp_mul(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = ka + kb
            out[key] = out.get(key, 0.0) + ca * cb
    return out


def _lp_add(a, b):
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0.0) + c
    return out


def _lp_diff(a):
    # d/dz of sum c z^-k
    return {k + 1: -k * c for k, c in a.items() if k != 0}


def _lp_eval(a, z):
    return sum(c * z ** (-k) for k, c in a.items())


def _deriv_basis(nu, max_order):
    """(alpha_m, gamma_m) with C^(m) = alpha_m C + gamma_m C' for Bessel C."""
    ode = {2: nu * nu, 0: -1.0}  # nu^2/z^2 - 1
    alphas = [{0: 1.0}, {}]
    gammas = [{}, {0: 1.0}]
    for m in range(1, max_order):
        al, ga = alphas[m], gammas[m]
        alphas.append(_lp_add(_lp_diff(al), _lp_mul(ga, ode)))
        gammas.append(_lp_add(_lp_add(al, _lp_diff(ga)), _lp_mul(ga, {1: -1.0})))
    return alphas, gammas


def _poly_mul(p, q, L):
    out = [0.0] * (L + 1)
    for i, ci in enumerate(p[: L + 1]):
        if ci == 0:
            continue
        for j, cj in enumerate(q[: L + 1 - i]):
            out[i + j] += ci * cj
    return out


def scaled_series_coeffs(nu, beta, zcoef, L=3):
    """Coefficients of eps^0..eps^L of (pi z0 / 2) kappa z^2 g_nu.

    zcoef are the coefficients of z(eps) = z0 + z1 eps + ...; kappa = 1 + eps.
    The returned a_k vanish exactly at the perturbation solution.
    """
    z0 = zcoef[0]
    maxd = 2 * L + 2
    alphas, gammas = _deriv_basis(nu, maxd + 2)
    al = [_lp_eval(a, z0) for a in alphas]
    ga = [_lp_eval(g, z0) for g in gammas]

    def mu(a, b):
        # G^{a,b} at equal arguments, in units of the Wronskian 2/(pi z0)
        return al[a] * ga[b] - al[b] * ga[a]

    # eps-polynomials of z - z0 and kappa z - z0
    delta = [0.0] + list(zcoef[1:]) + [0.0] * L
    kz = [0.0] * (len(zcoef) + 1 + L)
    for i, c in enumerate(zcoef):
        kz[i] += c
        kz[i + 1] += c
    deltak = [kz[0] - z0] + kz[1:]

    def power_table(d):
        pows = [[1.0] + [0.0] * L]
        cur = pows[0]
        for _ in range(maxd):
            cur = _poly_mul(cur, d, L)
            pows.append(cur)
        return pows

    pu = power_table(delta)
    pv = power_table(deltak)

    def g_series(a, b):
        out = [0.0] * (L + 1)
        for j in range(maxd + 1):
            uj = [c / factorial(j) for c in pu[j]]
            if all(c == 0 for c in uj):
                continue
            for n in range(maxd + 1):
                vn = pv[n]
                if all(c == 0 for c in vn):
                    continue
                m = mu(a + j, b + n)
                if m == 0:
                    continue
                prod = _poly_mul(uj, vn, L)
                for l in range(L + 1):
                    out[l] += m * prod[l] / factorial(n)
        return out

    zpoly = list(zcoef) + [0.0] * L
    one_eps = [1.0, 1.0]
    kz2 = _poly_mul(one_eps, _poly_mul(zpoly, zpoly, L), L)
    kzp = _poly_mul(one_eps, zpoly, L)

    total = [0.0] * (L + 1)
    for pre, G in (
        (kz2, g_series(1, 1)),
        ([-1j * beta * nu * c for c in kzp], g_series(0, 1)),
        ([-1j * beta * nu * c for c in zpoly], g_series(1, 0)),
        ([-(beta * nu) ** 2] + [0.0] * L, g_series(0, 0)),
    ):
        prod = _poly_mul(pre, G, L)
        total = [t + c for t, c in zip(total, prod)]
    return total


@dataclass(frozen=True)
class PerturbationResult:
    """Coefficients of z = z0 + z1 (kappa-1) + z2 (kappa-1)^2 for the exceptional zero."""

    z0: complex
    z1: complex
    z2: complex

    def evaluate(self, kappa):
        e = kappa - 1
        return self.z0 + self.z1 * e + self.z2 * e * e


def solve_perturbation(p: ProblemParams):
    """Solve the thin-annulus perturbation equations for the exceptional zero.

    Works order by order: z0 is the positive root of the leading equation,
    then the second- and third-order coefficients are solved from their
    (affine) equations via the series machinery above.  Requires nu > 0.
    """
    if p.nu <= 0:
        raise ValueError("the exceptional zero requires nu > 0")
    nu, beta = p.nu, p.beta
    z0 = nu * math.sqrt(beta * beta + 1)

    def order_coeff(zc, l):
        return scaled_series_coeffs(nu, beta, zc, L=l)[l]

    a20 = order_coeff([z0, 0.0, 0.0], 2)
    a21 = order_coeff([z0, 1.0, 0.0], 2)
    z1 = -a20 / (a21 - a20)
    a30 = order_coeff([z0, z1, 0.0], 3)
    a31 = order_coeff([z0, z1, 1.0], 3)
    z2 = -a30 / (a31 - a30)
    return PerturbationResult(complex(z0), complex(z1), complex(z2))


def exceptional_zero_series(p: ProblemParams):
    """Closed-form exceptional zero through second order in kappa - 1.

    z = nu sqrt(beta^2 + 1) [1 - e/2 - (-7 + 4 i beta nu) e^2 / 24] with
    e = kappa - 1.  At beta = 0 this is the classical Neumann expansion
    nu [1 - e/2 + 7 e^2 / 24].
    """
    if p.nu <= 0:
        raise ValueError("the exceptional zero requires nu > 0")
    e = p.kappa - 1
    z0 = p.nu * math.sqrt(p.beta * p.beta + 1)
    bracket = 1 - e / 2 - (-7 + 4j * p.beta * p.nu) * e * e / 24
    return z0 * bracket


def buchholz_z0n(nu, kappa):
    """Exceptional Neumann zero from the inverse (Buchholz) series.

    nu / z0 = sqrt(kappa) [1 + (kappa-1)^2/(12 kappa)
                             + (8 nu^2 - 3)(kappa-1)^4/(480 kappa^2)].
    """
    if nu <= 0:
        raise ValueError("the exceptional zero requires nu > 0")
    e = kappa - 1
    inv = math.sqrt(kappa) * (1 + e * e / (12 * kappa)
                              + (8 * nu * nu - 3) * e**4 / (480 * kappa * kappa))
    return nu / inv


def spiral_phase_shift(p: ProblemParams):
    """Angular shift of the logarithmic spiral crossing the annulus.

    Returns (nu*beta*log(kappa), nu*beta*(kappa-1)): the exact shift and its
    thin-annulus approximation.
    """
    t = p.nu * p.beta
    return (t * math.log(p.kappa), t * (p.kappa - 1))
