"""Bessel functions J_nu, Y_nu and derivatives for complex argument.

Evaluation is delegated to scipy.special (AMOS), which holds ~1e-13 relative
accuracy throughout the validated box |z| <= 50, nu <= 20; the test suite
checks it against a 30+ digit ascending-series oracle.  First derivatives use
the recurrence (J_{nu-1} - J_{nu+1})/2, second derivatives the Bessel ODE.

Arguments in the lower half-plane are evaluated at the conjugate and
conjugated back, so conjugation symmetry holds exactly.
"""

import cmath
import math
from dataclasses import dataclass

from scipy import special as sc

from .errors import DomainError, EvaluationOverflowError
from .series import seq_a, seq_b


@dataclass(frozen=True)
class BesselEval:
    """J, Y and their first derivatives at a single point."""

    j: complex
    y: complex
    j_prime: complex
    y_prime: complex

    def conjugate(self):
        return BesselEval(self.j.conjugate(), self.y.conjugate(),
                          self.j_prime.conjugate(), self.y_prime.conjugate())


@dataclass(frozen=True)
class AsymptoticAux:
    """Truncated large-argument auxiliary sums and the phase omega."""

    phi: complex
    psi: complex
    phi_tilde: complex
    psi_tilde: complex
    omega: complex
    truncation_order: int


def _check_argument(nu, z):
    if not (math.isfinite(nu) and nu >= 0):
        raise DomainError(f"order nu must be finite and >= 0, got {nu}")
    z = complex(z)
    if z == 0:
        raise DomainError("Bessel functions are singular at z = 0")
    if z.imag == 0 and z.real < 0:
        raise DomainError(f"argument on the negative real axis: {z}")
    return z


def eval_bessel(nu, z):
    """J_nu, Y_nu, J'_nu, Y'_nu at complex z (off the negative real axis)."""
    z = _check_argument(nu, z)
    if z.imag == 0:
        # real positive axis: real routines keep results exactly real
        x = z.real
        vals = (sc.jv(nu, x), sc.yv(nu, x), sc.jvp(nu, x), sc.yvp(nu, x))
        out = BesselEval(*(complex(v) for v in vals))
    elif z.imag < 0:
        out = eval_bessel(nu, z.conjugate()).conjugate()
    else:
        out = BesselEval(complex(sc.jv(nu, z)), complex(sc.yv(nu, z)),
                         complex(sc.jvp(nu, z)), complex(sc.yvp(nu, z)))
    for v in (out.j, out.y, out.j_prime, out.y_prime):
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise EvaluationOverflowError(
                f"Bessel evaluation overflowed at nu={nu}, z={z}")
    return out


def eval_second_derivs(nu, z, e: BesselEval):
    """(J'', Y'') from the Bessel ODE: C'' = (nu^2/z^2 - 1) C - C'/z."""
    z = complex(z)
    if z == 0:
        raise DomainError("second derivatives undefined at z = 0")
    w = nu * nu / (z * z) - 1
    return (w * e.j - e.j_prime / z, w * e.y - e.y_prime / z)


def asymptotic_aux(nu, z, order):
    """Truncated auxiliary sums phi, psi, phi~, psi~ and omega = z - pi nu/2 - pi/4.

    Keeps the leading a_0 = b_0 = 1 plus coefficients a_1 .. a_{2*order}
    (b-family likewise): even indices alternate into phi, odd ones into psi.
    order = 0 keeps only phi = phi~ = 1.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("asymptotic sums undefined at z = 0")
    if order < 0 or order > 8:
        raise ValueError("order must be in 0..8")
    top = 2 * order
    phi = psi = 0j
    phit = psit = 0j
    for k in range(0, top + 1, 2):
        sign = (-1) ** (k // 2)
        phi += sign * seq_a(nu, k) / z**k
        phit += sign * seq_b(nu, k) / z**k
    for k in range(1, top + 1, 2):
        sign = (-1) ** ((k - 1) // 2)
        psi += sign * seq_a(nu, k) / z**k
        psit += sign * seq_b(nu, k) / z**k
    omega = z - math.pi * nu / 2 - math.pi / 4
    return AsymptoticAux(phi, psi, phit, psit, omega, order)


def asymptotic_eval(nu, z, order):
    """BesselEval from the truncated large-argument expansion (test/diagnostic aid)."""
    aux = asymptotic_aux(nu, z, order)
    z = complex(z)
    amp = cmath.sqrt(2 / (math.pi * z))
    c, s = cmath.cos(aux.omega), cmath.sin(aux.omega)
    return BesselEval(
        j=amp * (aux.phi * c - aux.psi * s),
        y=amp * (aux.phi * s + aux.psi * c),
        j_prime=-amp * (aux.phi_tilde * s + aux.psi_tilde * c),
        y_prime=amp * (aux.phi_tilde * c - aux.psi_tilde * s),
    )
