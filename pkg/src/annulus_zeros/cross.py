"""Dirichlet, Neumann and oblique Bessel cross-products and their z-derivatives.

All four G-terms of the oblique combination share a single Bessel evaluation
at z and one at kappa*z, so the terms see consistent roundoff and each call
costs exactly two evaluations.
"""

from .bessel import BesselEval, eval_bessel, eval_second_derivs
from .errors import DomainError
from .params import ProblemParams


def _pair(p: ProblemParams, z):
    z = complex(z)
    if z == 0:
        raise DomainError("cross-products are singular at z = 0")
    return eval_bessel(p.nu, z), eval_bessel(p.nu, p.kappa * z)


def _g_term(m, k, e1: BesselEval, e2: BesselEval):
    jz = (e1.j, e1.j_prime)
    yz = (e1.y, e1.y_prime)
    jk = (e2.j, e2.j_prime)
    yk = (e2.y, e2.y_prime)
    return jz[m] * yk[k] - jk[k] * yz[m]


def cross_g(m, k, p: ProblemParams, z):
    """G^{m,k} = J^(m)(z) Y^(k)(kappa z) - J^(k)(kappa z) Y^(m)(z), m,k in {0,1}."""
    if m not in (0, 1) or k not in (0, 1):
        raise ValueError("derivative counts m, k must be 0 or 1")
    e1, e2 = _pair(p, z)
    return _g_term(m, k, e1, e2)


def dirichlet_cross(p: ProblemParams, z):
    """G^{0,0}: the Dirichlet cross-product."""
    return cross_g(0, 0, p, z)


def neumann_cross(p: ProblemParams, z):
    """G^{1,1}: the Neumann cross-product."""
    return cross_g(1, 1, p, z)


def oblique_cross(p: ProblemParams, z):
    """Oblique cross-product combining all four G-terms.

    g = G11 - i(beta nu / z) G01 - i(beta nu / (kappa z)) G10
        - (beta nu)^2 / (kappa z^2) G00.
    For beta = 0 or nu = 0 every extra term vanishes and the function is
    exactly the Neumann cross-product.
    """
    if p.beta == 0 or p.nu == 0:
        return neumann_cross(p, z)
    z = complex(z)
    e1, e2 = _pair(p, z)
    bn = p.beta * p.nu
    return (_g_term(1, 1, e1, e2)
            - 1j * bn / z * _g_term(0, 1, e1, e2)
            - 1j * bn / (p.kappa * z) * _g_term(1, 0, e1, e2)
            - bn * bn / (p.kappa * z * z) * _g_term(0, 0, e1, e2))


def oblique_cross_scaled(p: ProblemParams, z):
    """kappa z^2 * oblique_cross: pole-free near z = 0, same zeros for z != 0."""
    z = complex(z)
    return p.kappa * z * z * oblique_cross(p, z)


def _terms_and_derivs(p: ProblemParams, z):
    """All four G-terms and their z-derivatives from one evaluation pair."""
    z = complex(z)
    if z == 0:
        raise DomainError("cross-products are singular at z = 0")
    k = p.kappa
    e1 = eval_bessel(p.nu, z)
    e2 = eval_bessel(p.nu, k * z)
    jpp1, ypp1 = eval_second_derivs(p.nu, z, e1)
    jpp2, ypp2 = eval_second_derivs(p.nu, k * z, e2)
    G = {(m, kk): _g_term(m, kk, e1, e2) for m in (0, 1) for kk in (0, 1)}
    dG = {
        (0, 0): e1.j_prime * e2.y - k * e2.j_prime * e1.y
                + k * e1.j * e2.y_prime - e2.j * e1.y_prime,
        (0, 1): e1.j_prime * e2.y_prime - k * jpp2 * e1.y
                + k * e1.j * ypp2 - e2.j_prime * e1.y_prime,
        (1, 0): jpp1 * e2.y - k * e2.j_prime * e1.y_prime
                + k * e1.j_prime * e2.y_prime - e2.j * ypp1,
        (1, 1): jpp1 * e2.y_prime - k * jpp2 * e1.y_prime
                + k * e1.j_prime * ypp2 - e2.j_prime * ypp1,
    }
    return G, dG


def oblique_cross_dz(p: ProblemParams, z):
    """Analytic z-derivative of oblique_cross (drives Newton refinement)."""
    z = complex(z)
    G, dG = _terms_and_derivs(p, z)
    bn = p.beta * p.nu
    out = dG[(1, 1)]
    if bn != 0:
        k = p.kappa
        out = (out
               - 1j * bn * (dG[(0, 1)] / z - G[(0, 1)] / (z * z))
               - 1j * bn / k * (dG[(1, 0)] / z - G[(1, 0)] / (z * z))
               - bn * bn / k * (dG[(0, 0)] / (z * z) - 2 * G[(0, 0)] / z**3))
    return out


def oblique_cross_with_dz(p: ProblemParams, z):
    """(g, dg/dz) sharing one evaluation pair."""
    z = complex(z)
    G, dG = _terms_and_derivs(p, z)
    bn = p.beta * p.nu
    g = G[(1, 1)]
    dg = dG[(1, 1)]
    if bn != 0:
        k = p.kappa
        g = (g - 1j * bn / z * G[(0, 1)] - 1j * bn / (k * z) * G[(1, 0)]
             - bn * bn / (k * z * z) * G[(0, 0)])
        dg = (dg
              - 1j * bn * (dG[(0, 1)] / z - G[(0, 1)] / (z * z))
              - 1j * bn / k * (dG[(1, 0)] / z - G[(1, 0)] / (z * z))
              - bn * bn / k * (dG[(0, 0)] / (z * z) - 2 * G[(0, 0)] / z**3))
    return g, dg


def oblique_cross_scaled_with_dz(p: ProblemParams, z):
    """(kappa z^2 g, d/dz of the same) for refinement near small |z|."""
    z = complex(z)
    g, dg = oblique_cross_with_dz(p, z)
    k = p.kappa
    return k * z * z * g, k * (2 * z * g + z * z * dg)
